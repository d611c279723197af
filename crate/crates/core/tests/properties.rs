//! Property tests for the analytic invariants the library is contractually
//! required to satisfy: recurrences, reflection/functional equations,
//! conjugate symmetries, cross-module reductions, and quadrature honesty.

mod common;

use common::c;
use num_complex::Complex64;
use proptest::prelude::*;
use std::f64::consts::PI;
use xicalc::{
    bessel_heat_integral, bessel_i0, bessel_j, complex_gamma, f_plus, h1, heat_u,
    integrate_finite, kummer_1f1, muntz_transform, theta_psi, xi_completed, xi_critical_line,
    xi_zero_scan, zeta, BesselOrder, EvalRequest, GaussKernel, KummerArgs, PhysParams, RScale,
    ThetaConvention,
};

fn req() -> EvalRequest {
    EvalRequest::default()
}

fn rel_c(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1e-300)
}

/// O(h⁴) central first derivative.
fn d1(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    let a = (f(x + h) - f(x - h)) / (2.0 * h);
    let b = (f(x + 0.5 * h) - f(x - 0.5 * h)) / h;
    (4.0 * b - a) / 3.0
}

/// O(h⁴) central second derivative.
fn d2(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    let fx = f(x);
    let a = (f(x + h) - 2.0 * fx + f(x - h)) / (h * h);
    let b = (f(x + 0.5 * h) - 2.0 * fx + f(x - 0.5 * h)) / (0.25 * h * h);
    (4.0 * b - a) / 3.0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// Γ(s+1) = s·Γ(s) away from the pole line.
    #[test]
    fn gamma_recurrence(re in -3.0f64..4.0, im in -40.0f64..40.0) {
        prop_assume!(im.abs() > 0.05 || re > 0.1);
        let s = c(re, im);
        let lhs = complex_gamma(s + 1.0).unwrap();
        let rhs = s * complex_gamma(s).unwrap();
        prop_assert!(rel_c(lhs, rhs) < 1e-11, "s = {s}, rel = {}", rel_c(lhs, rhs));
    }

    /// |Γ(½+iy)|² = π/cosh(πy) on the critical line.
    #[test]
    fn gamma_critical_line_modulus(y in 0.0f64..30.0) {
        let g = complex_gamma(c(0.5, y)).unwrap();
        let want = PI / (PI * y).cosh();
        prop_assert!((g.norm_sqr() - want).abs() <= 1e-10 * want,
            "y = {y}: {} vs {want}", g.norm_sqr());
    }

    /// Γ(s̄) = conj Γ(s).
    #[test]
    fn gamma_conjugate_symmetry(re in -2.0f64..4.0, im in 0.05f64..40.0) {
        let s = c(re, im);
        let a = complex_gamma(s.conj()).unwrap();
        let b = complex_gamma(s).unwrap().conj();
        prop_assert!(rel_c(a, b) < 1e-13);
    }

    /// ζ(s̄) = conj ζ(s).
    #[test]
    fn zeta_conjugate_symmetry(re in -1.0f64..3.0, im in 0.5f64..45.0) {
        let s = c(re, im);
        let a = zeta(s.conj(), &req()).unwrap();
        let b = zeta(s, &req()).unwrap().conj();
        prop_assert!(rel_c(a, b) < 1e-12);
    }

    /// The completed function is symmetric about the critical line:
    /// ξ(s) = ξ(1−s).
    #[test]
    fn xi_functional_equation(re in -1.0f64..2.0, im in 0.0f64..25.0) {
        let s = c(re, im);
        let lhs = xi_completed(s).unwrap();
        let rhs = xi_completed(1.0 - s).unwrap();
        prop_assert!(rel_c(lhs, rhs) < 1e-10, "s = {s}, rel = {}", rel_c(lhs, rhs));
    }

    /// Ξ is even and agrees with the completed function on the line.
    #[test]
    fn xi_line_even_and_consistent(y in 0.0f64..40.0) {
        let a = xi_critical_line(y).unwrap();
        let b = xi_critical_line(-y).unwrap();
        prop_assert!((a - b).abs() <= 1e-12 * a.abs().max(1e-300));
        let full = xi_completed(c(0.5, y)).unwrap();
        prop_assert!((a - full.re).abs() <= 1e-12 * a.abs().max(1e-300));
    }

    /// d/dx J₀(x) = −J₁(x), measured by extrapolated differences. The step
    /// stays above 1e-3 so the ~1e-13 series-cancellation noise near the
    /// regime crossover is not amplified past the bound.
    #[test]
    fn bessel_j0_derivative(x in 0.1f64..25.0) {
        let got = d1(|z| bessel_j(BesselOrder::Zero, z), x, 1e-3);
        let want = -bessel_j(BesselOrder::One, x);
        prop_assert!((got - want).abs() < 5e-9, "x = {x}: {got} vs {want}");
    }

    /// x²·J₀'' + x·J₀' + x²·J₀ = 0 (order-zero Bessel equation).
    #[test]
    fn bessel_ode_residual(x in 0.2f64..20.0) {
        let j0 = |z: f64| bessel_j(BesselOrder::Zero, z);
        let resid = x * x * d2(j0, x, 5e-3) + x * d1(j0, x, 1e-4) + x * x * j0(x);
        prop_assert!(resid.abs() < 1e-6 * (1.0 + x * x), "x = {x}: residual {resid}");
    }

    /// ₁F₁(½; 1; 2z) = e^z·I₀(z) — the confluent function against the
    /// independently implemented modified Bessel route, both signs of the
    /// argument.
    #[test]
    fn kummer_vs_bessel_i0(z in -20.0f64..20.0) {
        let f = kummer_1f1(KummerArgs { a: c(0.5, 0.0), w: c(2.0 * z, 0.0) }, &req())
            .unwrap().value;
        let want = z.exp() * bessel_i0(z.abs()).unwrap();
        prop_assert!((f.re - want).abs() <= 1e-10 * want.abs(),
            "z = {z}: {} vs {want}", f.re);
        prop_assert!(f.im.abs() <= 1e-12 * want.abs());
    }

    /// ₁F₁(−1; 1; w) = 1 − w exactly (terminating series).
    #[test]
    fn kummer_terminating_polynomial(w in -10.0f64..10.0) {
        let f = kummer_1f1(KummerArgs { a: c(-1.0, 0.0), w: c(w, 0.0) }, &req())
            .unwrap().value;
        prop_assert!((f.re - (1.0 - w)).abs() <= 1e-12 * (1.0 + w.abs()));
    }

    /// Theta inversion: ψ(t) = −½ + √(π/t)·(½ + ψ(π²/t)).
    #[test]
    fn theta_modular_relation(t in 0.05f64..6.0) {
        let lhs = theta_psi(t, ThetaConvention::Plain).unwrap();
        let rhs = -0.5
            + (PI / t).sqrt() * (0.5 + theta_psi(PI * PI / t, ThetaConvention::Plain).unwrap());
        prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(1.0));
    }

    /// The two conventions shift the argument by π: ψ_π(x) = ψ(πx).
    #[test]
    fn theta_convention_shift(x in 0.02f64..5.0) {
        let a = theta_psi(x, ThetaConvention::Pi).unwrap();
        let b = theta_psi(PI * x, ThetaConvention::Plain).unwrap();
        prop_assert!((a - b).abs() <= 1e-13 * a.abs().max(1e-300));
    }

    /// At scale zero the heat sum is the theta sum: u(0, t) = ψ(κt).
    #[test]
    fn heat_sum_reduces_to_theta(t in 0.1f64..3.0, kappa in 0.5f64..2.0) {
        let u = heat_u(0.0, t, kappa).unwrap().value;
        let psi = theta_psi(kappa * t, ThetaConvention::Plain).unwrap();
        prop_assert!((u - psi).abs() <= 1e-12 * psi.abs().max(1e-300));
    }

    /// Radial heat residual u_t − κ(u_rr + u_r/r) vanishes to difference
    /// accuracy at generic points.
    #[test]
    fn heat_pde_residual(r in 0.3f64..5.0, t in 0.2f64..2.0, kappa in 0.5f64..2.0) {
        let u = |rr: f64, tt: f64| heat_u(rr, tt, kappa).unwrap().value;
        let resid = d1(|tt| u(r, tt), t, 1e-3)
            - kappa * (d2(|rr| u(rr, t), r, 1e-3) + d1(|rr| u(rr, t), r, 1e-3) / r);
        prop_assert!(resid.abs() < 1e-5, "({r},{t},{kappa}): residual {resid}");
    }

    /// Far tail of the regularized series: y·H₁(y) + c₁ → 0.
    #[test]
    fn h1_tail_approaches_companion(
        m in 0.0f64..1.5,
        imag in proptest::bool::ANY,
        t in 0.5f64..3.0,
        frac in 0.0f64..1.0,
    ) {
        let r = if imag { RScale::Imaginary(m) } else { RScale::Real(m) };
        let y = (8.0 + 22.0 * frac) / t.sqrt();
        let p = PhysParams { x: 0.0, r, t, kappa: 1.0 };
        let c1 = bessel_heat_integral(r, t).unwrap();
        let tail = y * h1(y, &p).unwrap().value + c1;
        prop_assert!(tail.abs() < 1e-10, "y = {y}: y*h1 + c1 = {tail}");
    }

    /// Below the resolvable threshold the regularized series clamps to −½.
    #[test]
    fn h1_clamps_near_zero(
        m in 0.0f64..1.5,
        t in 0.5f64..3.0,
        frac in 0.05f64..0.95,
    ) {
        let y = frac * 0.3 / t.sqrt();
        let p = PhysParams { x: 0.0, r: RScale::Real(m), t, kappa: 1.0 };
        prop_assert_eq!(h1(y, &p).unwrap().value, -0.5);
    }

    /// Gaussian-kernel Müntz transform against its theta closed form:
    /// M(y) = ψ(y²) − √π/(2y).
    #[test]
    fn muntz_gauss_closed_form(y in 0.3f64..3.0) {
        let got = muntz_transform(&GaussKernel, y).unwrap();
        let want = theta_psi(y * y, ThetaConvention::Plain).unwrap() - PI.sqrt() / (2.0 * y);
        prop_assert!((got - want).abs() <= 1e-12, "y = {y}: {got} vs {want}");
    }

    /// Quadrature honesty on a closed-form family: the result is within the
    /// larger of its own error claim and the requested tolerance.
    #[test]
    fn quadrature_error_claim_honest(a in 0.2f64..5.0, b in 1.0f64..20.0) {
        let out = integrate_finite(|y: f64| Ok((-a * y).exp()), 0.0, b, 1e-10).unwrap();
        let closed = (1.0 - (-a * b).exp()) / a;
        let diff = (out.value - closed).abs();
        prop_assert!(out.converged);
        prop_assert!(diff <= (5.0 * out.err_estimate).max(1e-10 * closed.max(1.0)),
            "a={a} b={b}: diff {diff:.3e}, claimed {:.3e}", out.err_estimate);
    }

    /// Two tolerance levels agree within the looser one.
    #[test]
    fn quadrature_tolerance_consistency(a in 0.2f64..4.0, b in 1.0f64..15.0) {
        let loose = integrate_finite(|y: f64| Ok((y * a).cos() * (-y).exp()), 0.0, b, 1e-6)
            .unwrap();
        let tight = integrate_finite(|y: f64| Ok((y * a).cos() * (-y).exp()), 0.0, b, 1e-12)
            .unwrap();
        prop_assert!((loose.value - tight.value).abs() <= 1e-6 * tight.value.abs().max(1.0));
    }

    /// The combined line kernel is real on the critical line and symmetric
    /// under y → −y.
    #[test]
    fn f_plus_critical_line_symmetry(
        x in -1.0f64..1.0,
        y in 0.0f64..15.0,
        m in 0.0f64..1.0,
        imag in proptest::bool::ANY,
        t in 0.5f64..4.0,
    ) {
        let r = if imag { RScale::Imaginary(m) } else { RScale::Real(m) };
        let p = PhysParams { x, r, t, kappa: 1.0 };
        let up = f_plus(c(0.5, y), &p).unwrap();
        let dn = f_plus(c(0.5, -y), &p).unwrap();
        prop_assert!(up.im.abs() <= 1e-10 * (1.0 + up.re.abs()), "im = {}", up.im);
        prop_assert!(rel_c(up, dn) < 1e-12);
    }

    /// At zero scale the line kernel collapses to 2·e^{x/2}·cos(xy).
    #[test]
    fn f_plus_zero_scale_closed_form(x in -1.0f64..1.0, y in 0.0f64..15.0) {
        let p = PhysParams { x, r: RScale::Real(0.0), t: 1.0, kappa: 1.0 };
        let got = f_plus(c(0.5, y), &p).unwrap().re;
        let want = 2.0 * (0.5 * x).exp() * (x * y).cos();
        prop_assert!((got - want).abs() <= 1e-12 * (1.0 + want.abs()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Every bracket the zero scan returns straddles an actual sign change
    /// and is tight.
    #[test]
    fn zero_scan_brackets_sign_changes(y_max in 15.0f64..30.0) {
        let brackets = xi_zero_scan(y_max, 0.25).unwrap();
        prop_assert!(!brackets.is_empty());
        for b in &brackets {
            prop_assert!(b.y_upper - b.y_lower <= 1e-6);
            prop_assert!(b.y_lower < b.y_mid && b.y_mid < b.y_upper);
            let lo = xi_critical_line(b.y_lower).unwrap();
            let hi = xi_critical_line(b.y_upper).unwrap();
            prop_assert!(lo * hi < 0.0, "bracket [{}, {}] has no sign change", b.y_lower, b.y_upper);
        }
    }
}
