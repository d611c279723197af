//! The nineteen registered identity checks.
//!
//! Every check computes its two sides by *independent* routes (series vs
//! quadrature, lattice vs modular form, contour vs direct integral, finite
//! differences vs closed derivative) and reports the worst sample. Fixed
//! default grids and case tables below are the documented check contracts;
//! [`super::CheckParams`] can override the physical parameters and, for the
//! grid-sweeping checks, the sample grid itself.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use num_complex::Complex64;
use serde_json::json;

use super::{calibrate_fit, f_plus, CheckId, CheckMode, Draft, ReportValue};
use crate::besselhyp::{
    bessel_j, kummer_1f1, kummer_1f1_general, BesselOrder, KummerArgs,
};
use crate::complexfn::{complex_gamma, complex_log_gamma, xi_critical_line, zeta, EvalRequest};
use crate::error::{Error, Result};
use crate::quadrature::{
    integrate_finite, integrate_finite_sqrt_endpoint, integrate_oscillatory_cos,
    integrate_semi_infinite, mellin_forward, mellin_inverse_contour, mellin_inverse_slowdecay,
    mellin_of_muntz, ContourSpec, DecayCertificate, OscEnvelope,
};
use crate::series::{
    abel_limit, bessel_heat_integral, bvp_initial_closed_form, bvp_suggested_start, h1, heat_u,
    muntz_transform, theta_psi, G1Kernel, GaussKernel, MuntzFunction, PhysParams, RScale,
    ThetaConvention,
};

/// Resolved invocation context: overrides (where given), requested mode, and
/// the tolerance the caller will judge the report against (used only to gate
/// erratum notes on checks that actually passed).
#[derive(Debug, Clone)]
pub(crate) struct Ctx {
    pub r: Option<RScale>,
    pub t: Option<f64>,
    pub kappa: Option<f64>,
    pub grid: Option<Vec<f64>>,
    pub mode: CheckMode,
    pub tol: f64,
}

impl Ctx {
    fn r_or(&self, d: RScale) -> RScale {
        self.r.unwrap_or(d)
    }

    fn t_or(&self, d: f64) -> f64 {
        self.t.unwrap_or(d)
    }

    fn kappa_or(&self, d: f64) -> f64 {
        self.kappa.unwrap_or(d)
    }

    fn grid_or(&self, d: &[f64]) -> Vec<f64> {
        self.grid.clone().unwrap_or_else(|| d.to_vec())
    }
}

pub(crate) fn dispatch(id: CheckId, ctx: &Ctx) -> Result<Draft> {
    match id {
        CheckId::Eq1_1 => eq_1_1(ctx),
        CheckId::Thm1_1 => thm_1_1(ctx),
        CheckId::Thm1_2 => thm_1_2(ctx),
        CheckId::Thm1_2R0 => thm_1_2_r0(ctx),
        CheckId::Thm1_3 => thm_1_3(ctx),
        CheckId::AsymRemark => asym_remark(ctx),
        CheckId::HeatPde => heat_pde(ctx),
        CheckId::BvpI => bvp_i(ctx),
        CheckId::BvpII => bvp_ii(ctx),
        CheckId::BesselDerivs => bessel_derivs(ctx),
        CheckId::Parseval => parseval(ctx),
        CheckId::Mellin3_3 => mellin_3_3(ctx),
        CheckId::Residue3_5 => residue_3_5(ctx),
        CheckId::Contour3_6 => contour_3_6(ctx),
        CheckId::Reflect3_7 => reflect_3_7(ctx),
        CheckId::Beta3_8 => beta_3_8(ctx),
        CheckId::Kummer3_9 => kummer_3_9(ctx),
        CheckId::Muntz3_11 => muntz_3_11(ctx),
        CheckId::Chain3_12 => chain_3_12(ctx),
    }
}

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

fn req() -> EvalRequest {
    EvalRequest::default()
}

/// Report-level relative difference: |l − r| / max(|l|, |r|, 1).
fn rel(l: f64, r: f64) -> f64 {
    (l - r).abs() / l.abs().max(r.abs()).max(1.0)
}

fn rel_c(l: Complex64, r: Complex64) -> f64 {
    (l - r).norm() / l.norm().max(r.norm()).max(1.0)
}

/// base^e for base > 0.
fn rpow(base: f64, e: Complex64) -> Complex64 {
    (e * base.ln()).exp()
}

fn rscale_label(r: RScale) -> String {
    match r {
        RScale::Real(v) => format!("{v}"),
        RScale::Imaginary(v) => format!("{v}i"),
    }
}

fn gamma_real(v: f64) -> Result<f64> {
    Ok(complex_gamma(Complex64::new(v, 0.0))?.re)
}

/// Assembles a draft from labelled real-valued samples: worst sample by
/// relative difference, plus the calibration fit when the mode asks for one.
fn grid_draft(
    points: Vec<(f64, f64, f64)>,
    mode: CheckMode,
    mut params: serde_json::Value,
) -> Result<Draft> {
    let worst = points
        .iter()
        .copied()
        .max_by(|a, b| rel(a.1, a.2).total_cmp(&rel(b.1, b.2)))
        .ok_or_else(|| Error::Domain("empty sample grid".into()))?;
    let calibration = match mode {
        CheckMode::Calibrate => Some(calibrate_fit(&points)?),
        CheckMode::Exact => None,
    };
    if let serde_json::Value::Object(m) = &mut params {
        let rows: Vec<serde_json::Value> = points
            .iter()
            .map(|&(x, l, r)| json!({"label": x, "lhs": l, "rhs": r, "rel_diff": rel(l, r)}))
            .collect();
        m.insert("points".into(), json!(rows));
        m.insert("worst_label".into(), json!(worst.0));
    }
    Ok(Draft {
        params,
        lhs: ReportValue::Real(worst.1),
        rhs: ReportValue::Real(worst.2),
        rel_diff: rel(worst.1, worst.2),
        calibration,
        erratum: None,
    })
}

/// Notes a calibrated constant that contradicts the claimed value 1.
fn attach_constant_erratum(draft: &mut Draft, ctx: &Ctx, closed_form: &str) {
    if let Some(c) = draft.calibration {
        if (c.constant - 1.0).abs() > ctx.tol * c.constant.abs().max(1.0) {
            draft.erratum = Some(format!(
                "claimed proportionality constant 1; measured LHS/RHS = {:.10} \
                 ≈ {closed_form} (fit spread {:.2e})",
                c.constant, c.spread
            ));
        }
    }
}

/// h/π · (½·Re K(c) + Σ_{k≥1, kh≤t_max} Re K(c + ikh)) — trapezoid form of
/// (1/2π)∫ K(c + iτ) dτ folded by the conjugate symmetry K(s̄) = conj K(s).
fn line_sum<F>(mut kernel: F, c: f64, t_max: f64, h: f64) -> Result<f64>
where
    F: FnMut(Complex64) -> Result<Complex64>,
{
    let n = (t_max / h).floor() as usize;
    let mut acc = 0.5 * kernel(Complex64::new(c, 0.0))?.re;
    for k in 1..=n {
        acc += kernel(Complex64::new(c, k as f64 * h))?.re;
    }
    Ok(acc * h / PI)
}

/// Richardson-extrapolated central first derivative (O(h⁴)).
fn d1_richardson(f: &dyn Fn(f64) -> Result<f64>, x: f64, h: f64) -> Result<f64> {
    let a = (f(x + h)? - f(x - h)?) / (2.0 * h);
    let b = (f(x + 0.5 * h)? - f(x - 0.5 * h)?) / h;
    Ok((4.0 * b - a) / 3.0)
}

/// Richardson-extrapolated central second derivative (O(h⁴)).
fn d2_richardson(f: &dyn Fn(f64) -> Result<f64>, x: f64, h: f64) -> Result<f64> {
    let fx = f(x)?;
    let a = (f(x + h)? - 2.0 * fx + f(x - h)?) / (h * h);
    let b = (f(x + 0.5 * h)? - 2.0 * fx + f(x - 0.5 * h)?) / (0.25 * h * h);
    Ok((4.0 * b - a) / 3.0)
}

/// Σ_{n≥1} e^{−n²x} by direct summation — deliberately *not* the modular
/// route, so lattice-vs-modular checks keep their two sides independent.
fn theta_lattice(x: f64) -> f64 {
    let mut acc = 0.0;
    let mut n = 1.0f64;
    while n * n * x <= 60.0 {
        acc += (-n * n * x).exp();
        n += 1.0;
    }
    acc
}

/// ∫₀^∞ H₁(y e^{−x})·H₁(y) dy: adaptive on [0, Y] plus the analytic tail,
/// with Y large enough that both factors are already in their −c₁/y regime
/// beyond it (so the tail integrates to c₁²·e^x/Y exactly to leading order).
fn int_h1h1(x: f64, r: RScale, t: f64) -> Result<f64> {
    let p = PhysParams { x: 0.0, r, t, kappa: 1.0 };
    let c1 = bessel_heat_integral(r, t)?;
    let y_up = 10.5 / t.sqrt() * x.max(0.0).exp();
    let emx = (-x).exp();
    let main = integrate_finite(
        |y: f64| -> Result<f64> {
            if y == 0.0 {
                return Ok(0.25);
            }
            Ok(h1(y * emx, &p)?.value * h1(y, &p)?.value)
        },
        0.0,
        y_up,
        1e-10,
    )?;
    Ok(main.value + c1 * c1 * x.exp() / y_up)
}

/// The windowed inner integral of the Müntz transform:
/// e^W·[∫_{y₀}^{Y} M_{G₁}(y)/√(t x² y² − π²) dy + analytic tail], where the
/// square root vanishes at the lower endpoint y₀ = π/(x√t).
///
/// The substitution y = y₀ + u² removes the endpoint singularity *exactly*:
/// the u-integrand is 2·M(y)/(x√t·√(2y₀ + u²)), with no cancellation-prone
/// difference left under the root. Beyond Y the transform equals −(∫G₁)/y to
/// machine accuracy and the tail integrates to an arccos in closed form.
fn inner_y_integral(x: f64, r: RScale, t: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("inner integral requires x > 0, got {x}")));
    }
    let st = t.sqrt();
    let a = x * st;
    let y0 = PI / a;
    let y_up = 13.0 / st.min(1.0);
    if y0 >= 0.5 * y_up {
        return Err(Error::Domain(format!(
            "inner integral window collapsed: turning point {y0:.3} is beyond half the \
             cutoff {y_up:.3} (x√t too small)"
        )));
    }
    let kern = G1Kernel::new(r, t)?;
    let ig = kern.exact_integral();
    let main = integrate_finite(
        |u: f64| -> Result<f64> {
            let y = y0 + u * u;
            Ok(2.0 * muntz_transform(&kern, y)? / (a * (2.0 * y0 + u * u).sqrt()))
        },
        0.0,
        (y_up - y0).sqrt(),
        1e-10,
    )?;
    let tail = -ig * (FRAC_PI_2 - (PI / (a * y_up)).acos()) / PI;
    Ok(r.kummer_argument(t).exp() * (main.value + tail))
}

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

/// Cosine transform of Ξ(y)/(y²+¼) against the closed theta form
/// (π/2)·(e^{x/2} − 2e^{−x/2}·ψ(e^{−2x})), evaluated under *both* theta
/// conventions. Exactly one convention may satisfy the identity; the winner
/// is recorded and the loser's failure margin is part of the evidence.
fn eq_1_1(ctx: &Ctx) -> Result<Draft> {
    let grid = ctx.grid_or(&[0.0, 0.5, 1.0, 2.0]);
    let mut pts_pi = Vec::new();
    let mut pts_plain = Vec::new();
    for &x in &grid {
        let lhs = integrate_oscillatory_cos(
            |y| Ok(xi_critical_line(y)? / (y * y + 0.25)),
            x,
            OscEnvelope::ExpDecay { c: 12.0, lambda: FRAC_PI_4 },
            1e-11,
        )?
        .value;
        let arg = (-2.0 * x).exp();
        let shell = |psi: f64| FRAC_PI_2 * ((0.5 * x).exp() - 2.0 * (-0.5 * x).exp() * psi);
        pts_pi.push((x, lhs, shell(theta_psi(arg, ThetaConvention::Pi)?)));
        pts_plain.push((x, lhs, shell(theta_psi(arg, ThetaConvention::Plain)?)));
    }
    let worst_of = |v: &[(f64, f64, f64)]| v.iter().map(|&(_, l, r)| rel(l, r)).fold(0.0, f64::max);
    let (win, win_name, lose_worst, lose_name) = if worst_of(&pts_pi) <= worst_of(&pts_plain) {
        (pts_pi, "pi", worst_of(&pts_plain), "plain")
    } else {
        (pts_plain, "plain", worst_of(&pts_pi), "pi")
    };
    let params = json!({
        "x_grid": grid,
        "convention": win_name,
        "rejected_convention": {"name": lose_name, "worst_rel_diff": lose_worst},
    });
    let mut draft = grid_draft(win, ctx.mode, params)?;
    // Both conventions agreeing would make the disambiguation meaningless;
    // treat it as a failure rather than an ambiguous pass.
    if lose_worst <= ctx.tol {
        draft.rel_diff = f64::MAX;
    }
    Ok(draft)
}

/// Cosine transform of Ξ(y)²/(y²+¼)²·|₁F₁(¼+iy/2; 1; W)|² against
/// e^{−x/2}·√t·∫H₁(ye^{−x})H₁(y)dy over an x-grid. The sides are
/// proportional; the measured constant is √π.
fn thm_1_1(ctx: &Ctx) -> Result<Draft> {
    let r = ctx.r_or(RScale::Real(0.5));
    let t = ctx.t_or(1.0);
    let grid = ctx.grid_or(&[-0.4, -0.2, 0.0, 0.2, 0.4]);
    let w = r.kummer_argument(t);
    let aw = w.abs();
    // |Ξ(y)/(y²+¼)| ≤ 12e^{−πy/4} and |₁F₁(¼+iy/2; 1; W)| ≤ e^{|W|+√(2|W|y)};
    // squaring and absorbing the √y growth at its maximum leaves the
    // envelope C·e^{−1.4y}.
    let lambda = 1.4;
    let c_env = 144.0 * (2.0 * aw + 2.0 * aw / (FRAC_PI_2 - lambda)).exp();
    let wc = Complex64::new(w, 0.0);
    let mut points = Vec::new();
    for &x in &grid {
        let lhs = integrate_oscillatory_cos(
            |y| {
                let xi = xi_critical_line(y)?;
                let f =
                    kummer_1f1(KummerArgs { a: Complex64::new(0.25, 0.5 * y), w: wc }, &req())?
                        .value;
                let b = xi / (y * y + 0.25);
                Ok(b * b * f.norm_sqr())
            },
            x,
            OscEnvelope::ExpDecay { c: c_env, lambda },
            1e-9,
        )?
        .value;
        let rhs = (-0.5 * x).exp() * t.sqrt() * int_h1h1(x, r, t)?;
        points.push((x, lhs, rhs));
    }
    // The right side is even in x by the substitution y → y·e^x; sample the
    // ± pairs present in the grid as direct evidence.
    let mut evenness = Vec::new();
    for &(x, _, rhs_pos) in &points {
        if x > 0.0 {
            if let Some(&(_, _, rhs_neg)) = points.iter().find(|&&(xx, _, _)| xx == -x) {
                evenness.push(json!({
                    "x": x,
                    "rhs_at_x": rhs_pos,
                    "rhs_at_minus_x": rhs_neg,
                    "rel_diff": rel(rhs_pos, rhs_neg),
                }));
            }
        }
    }
    let params = json!({
        "r": rscale_label(r), "t": t, "x_grid": grid, "rhs_evenness": evenness,
    });
    let mut draft = grid_draft(points, ctx.mode, params)?;
    attach_constant_erratum(&mut draft, ctx, "√π");
    Ok(draft)
}

/// H₁(x) against the windowed inner integral of its own Müntz transform.
/// The identity's hypothesis x√t > π is enforced; with the corrected lower
/// endpoint π/(x√t) the sides are proportional with constant 2.
fn thm_1_2(ctx: &Ctx) -> Result<Draft> {
    let r = ctx.r_or(RScale::Imaginary(0.5));
    let t = ctx.t_or(1.0);
    let grid = ctx.grid_or(&[3.5, 4.0, 4.5, 5.0, 5.5]);
    let p = PhysParams { x: 0.0, r, t, kappa: ctx.kappa_or(1.0) };
    let st = t.sqrt();
    let mut points = Vec::new();
    for &x in &grid {
        if x * st <= PI * (1.0 + 1e-6) {
            return Err(Error::Domain(format!(
                "identity hypothesis requires x√t > π, got x√t = {:.6}",
                x * st
            )));
        }
        points.push((x, h1(x, &p)?.value, inner_y_integral(x, r, t)?));
    }
    let params = json!({
        "r": rscale_label(r), "t": t, "x_grid": grid,
        "hypothesis": "x*sqrt(t) > pi",
        "inner_lower_endpoint": "pi/(x*sqrt(t))",
    });
    let mut draft = grid_draft(points, ctx.mode, params)?;
    if let Some(c) = draft.calibration {
        if (c.constant - 1.0).abs() > ctx.tol * c.constant.abs().max(1.0) {
            draft.erratum = Some(format!(
                "claimed equality with the inner integral started at 1; with the corrected \
                 lower endpoint π/(x√t) the measured constant is {:.10} ≈ 2 (fit spread \
                 {:.2e}) — the claimed form both starts the integral above its turning \
                 point and omits the factor 2",
                c.constant, c.spread
            ));
        }
    }
    Ok(draft)
}

/// Zero-scale reduction of the H₁/Müntz identity: at scale 0 the series side
/// collapses to the Gaussian theta sum, whose modular relation is recorded
/// as a per-point witness, and the inner-integral side (times the measured
/// factor 2) must match it exactly.
fn thm_1_2_r0(ctx: &Ctx) -> Result<Draft> {
    let t = ctx.t_or(2.0);
    let grid = ctx.grid_or(&[2.5, 3.0]);
    let r = RScale::Real(0.0);
    let p = PhysParams { x: 0.0, r, t, kappa: ctx.kappa_or(1.0) };
    let st = t.sqrt();
    let c1 = bessel_heat_integral(r, t)?;
    let mut points = Vec::new();
    let mut witness = Vec::new();
    for &x in &grid {
        if x * st <= PI * (1.0 + 1e-6) {
            return Err(Error::Domain(format!(
                "identity hypothesis requires x√t > π, got x√t = {:.6}",
                x * st
            )));
        }
        let lhs = h1(x, &p)?.value;
        let rhs = 2.0 * inner_y_integral(x, r, t)?;
        let theta_form = theta_psi(t * x * x, ThetaConvention::Plain)? - c1 / x;
        witness.push(json!({
            "x": x, "h1": lhs, "theta_form": theta_form,
            "abs_diff": (lhs - theta_form).abs(),
        }));
        points.push((x, lhs, rhs));
    }
    let params = json!({
        "t": t, "x_grid": grid, "r": "0",
        "rhs_includes_measured_factor": 2.0,
        "theta_reduction": witness,
    });
    grid_draft(points, ctx.mode, params)
}

/// Line integral of Ξ(y)/(y²+¼)·F⁺(½+iy) against the argument-reflected
/// series H₁(e^{−x}). The sides are proportional; at t = π the measured
/// constant is −2π.
fn thm_1_3(ctx: &Ctx) -> Result<Draft> {
    let r = ctx.r_or(RScale::Real(0.5));
    let t = ctx.t_or(PI);
    let grid = ctx.grid_or(&[-0.3, -0.15, 0.0, 0.15, 0.3]);
    let kappa = ctx.kappa_or(1.0);
    let aw = r.kummer_argument(t).abs();
    let lambda = 0.7;
    let mut points = Vec::new();
    for &x in &grid {
        let p = PhysParams { x, r, t, kappa };
        // |F⁺(½+iy)| ≤ 2e^{|x|/2}·e^{|W|+√(2|W|y)}: fold the √y growth into
        // the λ = 0.7 envelope at its maximum.
        let c_env =
            24.0 * (0.5 * x.abs() + aw + aw / (2.0 * (FRAC_PI_4 - lambda))).exp();
        let lhs = integrate_semi_infinite(
            |y| {
                Ok(xi_critical_line(y)? / (y * y + 0.25)
                    * f_plus(Complex64::new(0.5, y), &p)?.re)
            },
            0.0,
            DecayCertificate::ExpLinear { c: c_env, lambda },
            1e-9,
        )?
        .value;
        let p0 = PhysParams { x: 0.0, r, t, kappa };
        let rhs = h1((-x).exp(), &p0)?.value;
        points.push((x, lhs, rhs));
    }
    let params = json!({"r": rscale_label(r), "t": t, "x_grid": grid});
    let mut draft = grid_draft(points, ctx.mode, params)?;
    attach_constant_erratum(&mut draft, ctx, "−2π");
    Ok(draft)
}

/// (1/√π)·Σ e^{−n²κt}(cos nr + sin nr)/√n — the stationary-phase pairing of
/// the circular heat sum at large r.
fn fresnel_pair_sum(r: f64, t: f64, kappa: f64) -> f64 {
    let ct = kappa * t;
    let mut acc = 0.0f64;
    let mut comp = 0.0f64;
    let mut n = 1.0f64;
    loop {
        let term = (-n * n * ct).exp() * ((n * r).cos() + (n * r).sin()) / n.sqrt();
        let y = term - comp;
        let s = acc + y;
        comp = (s - acc) - y;
        acc = s;
        if n * n * ct > 46.0 {
            break;
        }
        n += 1.0;
    }
    acc / PI.sqrt()
}

/// Bounded-deviation criterion: d(r) = |√r·u(r,t) − pair(r,t)|·r may not
/// exceed twice its first-sample value anywhere on the (geometrically
/// growing) r-grid. `rel_diff` here is the criterion ratio max d / (2·d₀),
/// not a pointwise difference.
fn asym_remark(ctx: &Ctx) -> Result<Draft> {
    let t = ctx.t_or(0.1);
    let kappa = ctx.kappa_or(1.0);
    let grid = ctx.grid_or(&[20.0, 40.0, 80.0, 160.0]);
    let mut rows = Vec::new();
    let mut d_first: Option<f64> = None;
    let mut d_max = 0.0f64;
    for &rr in &grid {
        let u = heat_u(rr, t, kappa)?.value;
        let pair = fresnel_pair_sum(rr, t, kappa);
        let d = (rr.sqrt() * u - pair).abs() * rr;
        d_first.get_or_insert(d);
        d_max = d_max.max(d);
        rows.push(json!({
            "r": rr, "scaled_sum": rr.sqrt() * u, "pair_sum": pair, "scaled_deviation": d,
        }));
    }
    let allowance =
        2.0 * d_first.ok_or_else(|| Error::Domain("empty sample grid".into()))?;
    let criterion = if allowance > 0.0 { d_max / allowance } else { f64::MAX };
    Ok(Draft {
        params: json!({
            "t": t, "kappa": kappa, "r_grid": grid, "samples": rows,
            "criterion": "max scaled deviation over 2x its first-sample value",
        }),
        lhs: ReportValue::Real(d_max),
        rhs: ReportValue::Real(allowance),
        rel_diff: criterion,
        calibration: None,
        erratum: None,
    })
}

/// Residual of the radial heat equation u_t = κ(u_rr + u_r/r) under
/// Richardson-extrapolated central differences, plus an order-of-accuracy
/// witness (plain central residuals at h and h/2 should drop by ≈ 4).
fn heat_pde(ctx: &Ctx) -> Result<Draft> {
    let kappa = ctx.kappa_or(1.0);
    let pts = [(0.5, 0.5), (1.0, 1.0), (3.0, 0.3)];
    let h = 1e-3;
    let u = |r: f64, t: f64| -> Result<f64> { Ok(heat_u(r, t, kappa)?.value) };
    let mut rows = Vec::new();
    let mut worst = 0.0f64;
    for &(r0, t0) in &pts {
        let d1r = d1_richardson(&|r| u(r, t0), r0, h)?;
        let d2r = d2_richardson(&|r| u(r, t0), r0, h)?;
        let d1t = d1_richardson(&|t| u(r0, t), t0, h)?;
        let resid = (d1t - kappa * (d2r + d1r / r0)).abs();
        let plain_resid = |hh: f64| -> Result<f64> {
            let d1r = (u(r0 + hh, t0)? - u(r0 - hh, t0)?) / (2.0 * hh);
            let d2r = (u(r0 + hh, t0)? - 2.0 * u(r0, t0)? + u(r0 - hh, t0)?) / (hh * hh);
            let d1t = (u(r0, t0 + hh)? - u(r0, t0 - hh)?) / (2.0 * hh);
            Ok((d1t - kappa * (d2r + d1r / r0)).abs())
        };
        let order_ratio = plain_resid(0.04)? / plain_resid(0.02)?;
        worst = worst.max(resid);
        rows.push(json!({"r": r0, "t": t0, "residual": resid, "order_ratio": order_ratio}));
    }
    Ok(Draft {
        params: json!({"kappa": kappa, "step": h, "points": rows}),
        lhs: ReportValue::Real(worst),
        rhs: ReportValue::Real(0.0),
        rel_diff: worst,
        calibration: None,
        erratum: None,
    })
}

/// Direct theta lattice sum against its modular-reflection closed form
/// ψ(t) = −½ + √(π/t)·(½ + ψ(π²/t)).
fn bvp_i(ctx: &Ctx) -> Result<Draft> {
    let grid = ctx.grid_or(&[0.1, 0.5, 1.0, 2.0, 5.0]);
    let mut points = Vec::new();
    for &t in &grid {
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::Domain(format!("theta argument must be > 0, got {t}")));
        }
        let lhs = theta_lattice(t);
        let rhs = -0.5 + (PI / t).sqrt() * (0.5 + theta_lattice(PI * PI / t));
        points.push((t, lhs, rhs));
    }
    grid_draft(
        points,
        ctx.mode,
        json!({
            "t_grid": grid,
            "lhs_route": "direct lattice sum",
            "rhs_route": "modular reflection",
        }),
    )
}

/// Abel t → 0⁺ limit of the circular heat sum against the closed boundary
/// value −½ + 1/r + 2·Σ_{0<2πm<r}(r² − 4π²m²)^{−1/2}.
fn bvp_ii(ctx: &Ctx) -> Result<Draft> {
    let kappa = ctx.kappa_or(1.0);
    let grid = ctx.grid_or(&[1.0, PI, 5.0, 7.0, 9.0]);
    let mut points = Vec::new();
    let mut ladders = Vec::new();
    for &r in &grid {
        let t0 = bvp_suggested_start(r);
        let (abel, est) = abel_limit(|t| Ok(heat_u(r, t, kappa)?.value), t0, 10)?;
        let closed = bvp_initial_closed_form(r)?;
        ladders.push(json!({"r": r, "t0": t0, "ladder_estimate": est}));
        points.push((r, abel, closed));
    }
    grid_draft(points, ctx.mode, json!({"kappa": kappa, "r_grid": grid, "ladders": ladders}))
}

/// Finite-difference derivatives of J₀(nr) against the closed recurrences
/// d/dr J₀(nr) = −n·J₁(nr) and d²/dr² J₀(nr) = (n/r)·J₁(nr) − n²·J₀(nr),
/// plus a direct measurement of the intermediate chain factor.
fn bessel_derivs(ctx: &Ctx) -> Result<Draft> {
    let mut rows = Vec::new();
    let mut worst = (0.0f64, 0.0f64);
    let mut worst_rel = -1.0f64;
    let mut chain_ok = true;
    for n in [1.0f64, 2.0, 3.0] {
        for r in [0.7, 1.3, 2.1] {
            let f = |z: f64| -> Result<f64> { Ok(bessel_j(BesselOrder::Zero, n * z)) };
            let d1 = d1_richardson(&f, r, 1e-5)?;
            let want1 = -n * bessel_j(BesselOrder::One, n * r);
            // h ≈ ε^{1/6} balances the O(h⁴) truncation against the ε/h²
            // rounding floor; 1e-3 leaves the floor just above 1e-8.
            let d2 = d2_richardson(&f, r, 5e-3)?;
            let want2 =
                n / r * bessel_j(BesselOrder::One, n * r) - n * n * bessel_j(BesselOrder::Zero, n * r);
            // The second derivative factors through −k·(d/dr)J₁(nr); measure
            // k directly. The correct k is n (the claimed intermediate
            // carries n², i.e. one chain-rule factor too many).
            let dj1 =
                d1_richardson(&|z| Ok(bessel_j(BesselOrder::One, n * z)), r, 1e-5)?;
            let k_measured = -d2 / dj1;
            chain_ok &= (k_measured - n).abs() <= 1e-6 * n;
            rows.push(json!({
                "n": n, "r": r,
                "d1": d1, "d1_closed": want1,
                "d2": d2, "d2_closed": want2,
                "intermediate_chain_factor": k_measured,
            }));
            for (l, rr) in [(d1, want1), (d2, want2)] {
                let q = rel(l, rr);
                if q > worst_rel {
                    worst_rel = q;
                    worst = (l, rr);
                }
            }
        }
    }
    let erratum = if worst_rel <= ctx.tol && chain_ok {
        Some(
            "the stated intermediate step d²/dr² J₀(nr) = −n²·(d/dr)J₁(nr) carries a \
             spurious factor n — the measured chain factor is n, i.e. −n·(d/dr)J₁(nr); \
             the final closed form (n/r)·J₁(nr) − n²·J₀(nr) is verified"
                .into(),
        )
    } else {
        None
    };
    Ok(Draft {
        params: json!({
            "n_values": [1.0, 2.0, 3.0],
            "r_values": [0.7, 1.3, 2.1],
            "comparisons": rows,
        }),
        lhs: ReportValue::Real(worst.0),
        rhs: ReportValue::Real(worst.1),
        rel_diff: worst_rel,
        calibration: None,
        erratum,
    })
}

/// Two vertical-line gamma-kernel integrals with closed Parseval values:
/// (1/2π)∫|Γ(½+iτ)|²dτ = ½ and
/// (1/2π)∫ Γ(s/2)·Γ((1−s)/2)·2^{s−1}/4 dτ = ½·√(π/5) on s = ½+iτ.
/// Both integrands fold onto τ ≥ 0 by conjugate symmetry; the truncation
/// heights leave tails below 1e−16.
fn parseval(ctx: &Ctx) -> Result<Draft> {
    let lhs1 = integrate_finite(
        |tau: f64| Ok(complex_gamma(Complex64::new(0.5, tau))?.norm_sqr()),
        0.0,
        12.0,
        1e-12,
    )?
    .value
        / PI;
    let rhs1 = 0.5;
    let lhs2 = integrate_finite(
        |tau: f64| {
            let s = Complex64::new(0.5, tau);
            let g1 = complex_gamma(0.5 * s)?;
            let g2 = complex_gamma(0.5 * (1.0 - s))?;
            Ok((g1 * g2 * 0.25 * ((s - 1.0) * std::f64::consts::LN_2).exp()).re)
        },
        0.0,
        24.0,
        1e-12,
    )?
    .value
        / PI;
    let rhs2 = 0.5 * (PI / 5.0).sqrt();
    let points = vec![(1.0, lhs1, rhs1), (2.0, lhs2, rhs2)];
    grid_draft(
        points,
        ctx.mode,
        json!({"pairs": [
            {"label": 1.0, "kernel": "|gamma(1/2+i tau)|^2", "closed": rhs1, "height": 12.0},
            {"label": 2.0, "kernel": "gamma(s/2) gamma((1-s)/2) 2^(s-1) / 4", "closed": rhs2, "height": 24.0},
        ]}),
    )
}

/// Forward Mellin transform of e^{−ty²}·J_v(ry) against its closed form
/// r^v·Γ((v+s)/2)·₁F₁((v+s)/2; v+1; −r²/4t) / (2^{v+1}·t^{(s+v)/2}·Γ(v+1)).
/// The denominator's 2^{v+1} (not a fixed 2) is the load-bearing detail —
/// the v = 1 cases fail by a factor 2 without it.
fn mellin_3_3(ctx: &Ctx) -> Result<Draft> {
    let cases: [(Complex64, u32, f64, f64); 4] = [
        (Complex64::new(1.7, 0.0), 1, 0.5, 0.5),
        (Complex64::new(0.5, 0.3), 0, 1.0, 1.0),
        (Complex64::new(1.2, 0.0), 0, 0.5, 1.0),
        (Complex64::new(1.2, 0.0), 1, 1.0, 1.0),
    ];
    let mut rows = Vec::new();
    let mut fit_points = Vec::new();
    let mut worst = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
    let mut worst_rel = -1.0f64;
    for (i, &(s, v, r, t)) in cases.iter().enumerate() {
        let order = if v == 0 { BesselOrder::Zero } else { BesselOrder::One };
        let lhs = mellin_forward(
            |y| Ok((-t * y * y).exp() * bessel_j(order, r * y)),
            DecayCertificate::ExpGaussian { c: 1.0, lambda: t },
            s,
            1e-11,
        )?
        .value;
        let a = 0.5 * (s + v as f64);
        let b = Complex64::new(v as f64 + 1.0, 0.0);
        let w = Complex64::new(-r * r / (4.0 * t), 0.0);
        let f11 = kummer_1f1_general(a, b, w, &req())?.value;
        let rhs = r.powi(v as i32) * complex_gamma(a)? * f11
            / (2.0f64.powi(v as i32 + 1) * rpow(t, 0.5 * (s + v as f64)) * complex_gamma(b)?);
        let q = rel_c(lhs, rhs);
        if q > worst_rel {
            worst_rel = q;
            worst = (lhs, rhs);
        }
        fit_points.push((i as f64, lhs.norm(), rhs.norm()));
        rows.push(json!({
            "label": i as f64, "s": {"re": s.re, "im": s.im}, "v": v, "r": r, "t": t,
            "lhs": {"re": lhs.re, "im": lhs.im}, "rhs": {"re": rhs.re, "im": rhs.im},
            "rel_diff": q,
        }));
    }
    let calibration = match ctx.mode {
        CheckMode::Calibrate => Some(calibrate_fit(&fit_points)?),
        CheckMode::Exact => None,
    };
    let erratum = if worst_rel <= ctx.tol {
        Some(
            "the closed transform carries denominator 2^{v+1}·t^{(s+v)/2}·Γ(v+1); the \
             claimed fixed denominator 2·t^{(s+v)/2}·Γ(v+1) is short a factor 2^v for \
             v ≥ 1 (verified here at v = 1, where the corrected form is exact and the \
             claimed one is off by 2)"
                .into(),
        )
    } else {
        None
    };
    let wrap = |z: Complex64| {
        if z.im == 0.0 { ReportValue::Real(z.re) } else { ReportValue::Complex(z) }
    };
    Ok(Draft {
        params: json!({"cases": rows}),
        lhs: wrap(worst.0),
        rhs: wrap(worst.1),
        rel_diff: worst_rel,
        calibration,
        erratum,
    })
}

/// The pole term separating the damped Bessel lattice sum from its inverse
/// Mellin contour on the critical line: (series − contour)·y must equal the
/// companion integral c₁ = (√π/2√t)·₁F₁(½; 1; W). The claimed alternative
/// normalization 2√(tπ)·₁F₁ is also evaluated; it differs by the factor 4t.
fn residue_3_5(ctx: &Ctx) -> Result<Draft> {
    let cases = [(0.7, RScale::Real(0.5), 1.0), (1.2, RScale::Imaginary(0.5), 1.0)];
    let mut rows = Vec::new();
    let mut points = Vec::new();
    for &(y, r, t) in &cases {
        let p = PhysParams { x: 0.0, r, t, kappa: 1.0 };
        let c1 = bessel_heat_integral(r, t)?;
        // series side: the bare lattice sum (companion term added back)
        let series = h1(y, &p)?.value + c1 / y;
        let w = Complex64::new(r.kummer_argument(t), 0.0);
        let spec = ContourSpec {
            c: 0.5,
            t_max: 60.0,
            h: ContourSpec::step_for(1e-8, y.ln()),
        };
        let contour = mellin_inverse_contour(
            |s| {
                let g = complex_gamma(0.5 * s)?;
                let f = kummer_1f1(KummerArgs { a: 0.5 * s, w }, &req())?.value;
                let z = zeta(s, &req())?;
                Ok(g * f * z / (2.0 * rpow(t, 0.5 * s)))
            },
            spec,
            y,
        )?
        .value
        .re;
        let measured = (series - contour) * y;
        let alt = 4.0 * t * c1;
        rows.push(json!({
            "y": y, "r": rscale_label(r), "t": t,
            "series_minus_contour_times_y": measured,
            "companion_integral": c1,
            "claimed_alternative": alt,
            "alt_over_measured": alt / measured,
        }));
        points.push((y, measured, c1));
    }
    let params = json!({"cases": rows, "line": {"c": 0.5, "t_max": 60.0}});
    let mut draft = grid_draft(points, ctx.mode, params)?;
    if draft.rel_diff <= ctx.tol {
        draft.erratum = Some(
            "the separated pole term matches (√π/(2√t))·₁F₁(½; 1; W); the claimed \
             normalization 2√(tπ)·₁F₁(½; 1; W) is larger by exactly the factor 4t \
             (= 4 at t = 1)"
                .into(),
        );
    }
    Ok(draft)
}

/// Critical-line integral of the squared kernel
/// Γ(s/2)²·₁F₁(s/2;1;W)·₁F₁((1−s)/2;1;W)·ζ(s)²·π^{½−s}·e^{xs} against
/// √t·∫H₁(ye^{−x})H₁(y)dy. The sides are proportional; the measured
/// constant is 4.
fn contour_3_6(ctx: &Ctx) -> Result<Draft> {
    let r = ctx.r_or(RScale::Real(0.5));
    let t = ctx.t_or(1.0);
    let grid = ctx.grid_or(&[-0.4, -0.2, 0.0, 0.2, 0.4]);
    let w = Complex64::new(r.kummer_argument(t), 0.0);
    let t_max = 40.0;
    let max_shift = grid.iter().fold(0.0f64, |m, &x| m.max(x.abs()));
    let h = ContourSpec::step_for(1e-8, max_shift);
    // The kernel is x-independent except for e^{xs}: precompute it along the
    // line once, then each grid shift is a cheap weighted re-sum.
    let n = (t_max / h).floor() as usize;
    let mut kern = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let s = Complex64::new(0.5, k as f64 * h);
        let g = complex_gamma(0.5 * s)?;
        let f1 = kummer_1f1(KummerArgs { a: 0.5 * s, w }, &req())?.value;
        let f2 = kummer_1f1(KummerArgs { a: 0.5 * (1.0 - s), w }, &req())?.value;
        let z = zeta(s, &req())?;
        kern.push(g * g * f1 * f2 * z * z * rpow(PI, 0.5 - s));
    }
    let mut points = Vec::new();
    for &x in &grid {
        let mut acc = 0.5 * (kern[0] * (Complex64::new(0.5, 0.0) * x).exp()).re;
        for (k, kv) in kern.iter().enumerate().skip(1) {
            let s = Complex64::new(0.5, k as f64 * h);
            acc += (kv * (s * x).exp()).re;
        }
        let lhs = acc * h / PI;
        let rhs = t.sqrt() * int_h1h1(x, r, t)?;
        points.push((x, lhs, rhs));
    }
    let params = json!({
        "r": rscale_label(r), "t": t, "x_grid": grid,
        "line": {"c": 0.5, "t_max": t_max, "h": h},
    });
    let mut draft = grid_draft(points, ctx.mode, params)?;
    attach_constant_erratum(&mut draft, ctx, "4");
    Ok(draft)
}

/// Three vertical-line integrals of the Mellin kernel that must coincide:
/// the kernel on Re s = p against x^{−s}, the same integral after the exact
/// change of variable s → 1−s (line Re s = 1−p), and the form rewritten
/// through the zeta functional equation on Re s = 1−p. The first pair is an
/// exact reindexing under this quadrature; the third line carries the
/// functional-equation content.
fn reflect_3_7(ctx: &Ctx) -> Result<Draft> {
    let r = ctx.r_or(RScale::Real(0.5));
    let t = ctx.t_or(1.0);
    let x_cases = ctx.grid_or(&[0.7, 1.3]);
    let p = 0.4;
    let t_max = 60.0;
    let w = Complex64::new(r.kummer_argument(t), 0.0);
    let kernel_a = |s: Complex64| -> Result<Complex64> {
        let g = complex_gamma(0.5 * s)?;
        let f = kummer_1f1(KummerArgs { a: 0.5 * s, w }, &req())?.value;
        let z = zeta(s, &req())?;
        Ok(g * f * z / (2.0 * rpow(t, 0.5 * s)))
    };
    let mut rows = Vec::new();
    let mut worst_rel = -1.0f64;
    let mut worst = (0.0f64, 0.0f64);
    for &x in &x_cases {
        if !(x > 0.0) {
            return Err(Error::Domain(format!("line integrals require x > 0, got {x}")));
        }
        let h = ContourSpec::step_for(1e-9, x.ln());
        let l2 = line_sum(|s| Ok(kernel_a(s)? * rpow(x, -s)), p, t_max, h)?;
        let l3 = line_sum(
            |s| Ok(kernel_a(1.0 - s)? * rpow(x, s - 1.0)),
            1.0 - p,
            t_max,
            h,
        )?;
        let l4 = line_sum(
            |s| {
                let g = complex_gamma(0.5 * s)?;
                let f = kummer_1f1(KummerArgs { a: 0.5 * (1.0 - s), w }, &req())?.value;
                let z = zeta(s, &req())?;
                Ok(PI.sqrt() * g * f * z / (2.0 * rpow(t, 0.5 * (1.0 - s)))
                    * rpow(PI, -s)
                    * rpow(x, s - 1.0))
            },
            1.0 - p,
            t_max,
            h,
        )?;
        for (a, b) in [(l2, l3), (l3, l4), (l2, l4)] {
            let q = rel(a, b);
            if q > worst_rel {
                worst_rel = q;
                worst = (a, b);
            }
        }
        rows.push(json!({
            "x": x, "shifted_line": l2, "reflected_line": l3,
            "functional_equation_line": l4,
        }));
    }
    Ok(Draft {
        params: json!({
            "r": rscale_label(r), "t": t, "x_values": x_cases,
            "line_offset": p, "t_max": t_max, "lines": rows,
        }),
        lhs: ReportValue::Real(worst.0),
        rhs: ReportValue::Real(worst.1),
        rel_diff: worst_rel,
        calibration: None,
        erratum: None,
    })
}

/// Inverse Mellin transform of Γ(s)/Γ(s+a+1) on Re s = 1 against the
/// truncated power law (1−x)^a/Γ(a+1) for x < 1 and 0 for x > 1 — the
/// slow-decay contour path, including points near the x = 1 discontinuity
/// and in the zero region.
fn beta_3_8(ctx: &Ctx) -> Result<Draft> {
    let cases = [(-0.5, 0.5), (0.0, 0.5), (0.0, 0.95), (0.0, 2.0), (-0.5, 2.0)];
    let mut rows = Vec::new();
    let mut points = Vec::new();
    for (i, &(a, x)) in cases.iter().enumerate() {
        let lhs = mellin_inverse_slowdecay(
            |s| Ok((complex_log_gamma(s)? - complex_log_gamma(s + a + 1.0)?).exp()),
            1.0,
            x,
            1e-9,
        )?
        .value;
        let rhs = if x < 1.0 { (1.0 - x).powf(a) / gamma_real(a + 1.0)? } else { 0.0 };
        rows.push(json!({"label": i as f64, "a": a, "x": x, "lhs": lhs, "rhs": rhs}));
        points.push((i as f64, lhs, rhs));
    }
    grid_draft(points, ctx.mode, json!({"cases": rows, "line": {"c": 1.0}}))
}

/// ∫₀^∞ e^{−y}·y^{(s−1)/2}·J₀(2√(xy)) dy against
/// Γ((s+1)/2)·e^{−x}·₁F₁((1−s)/2; 1; x). The s = ½ cases have an integrable
/// y^{−1/4} endpoint singularity, softened by the square-root substitution.
fn kummer_3_9(ctx: &Ctx) -> Result<Draft> {
    let cases = [(0.5, 0.25), (0.5, 1.0), (1.5, 0.25), (1.5, 1.0)];
    let mut rows = Vec::new();
    let mut points = Vec::new();
    for (i, &(s, x)) in cases.iter().enumerate() {
        let lhs = integrate_finite_sqrt_endpoint(
            |y: f64| {
                Ok((-y).exp()
                    * y.powf(0.5 * (s - 1.0))
                    * bessel_j(BesselOrder::Zero, 2.0 * (x * y).sqrt()))
            },
            0.0,
            60.0,
            1e-11,
        )?
        .value;
        let f11 = kummer_1f1(
            KummerArgs { a: Complex64::new(0.5 * (1.0 - s), 0.0), w: Complex64::new(x, 0.0) },
            &req(),
        )?
        .value
        .re;
        let rhs = gamma_real(0.5 * (s + 1.0))? * (-x).exp() * f11;
        rows.push(json!({"label": i as f64, "s": s, "x": x, "lhs": lhs, "rhs": rhs}));
        points.push((i as f64, lhs, rhs));
    }
    grid_draft(points, ctx.mode, json!({"cases": rows, "upper_cutoff": 60.0}))
}

/// Mellin transform of the Müntz-regularized lattice sum against
/// ζ(s)·(Mellin transform of the kernel), for the Gaussian kernel and the
/// Gaussian-windowed Bessel kernel, at s ∈ {0.3, 0.5, 0.7}.
fn muntz_3_11(ctx: &Ctx) -> Result<Draft> {
    let svals = [0.3, 0.5, 0.7];
    let g1k = G1Kernel::new(ctx.r_or(RScale::Imaginary(1.0)), ctx.t_or(1.0))?;
    let q = -g1k.r.kummer_argument(g1k.t);
    let mut rows = Vec::new();
    let mut points = Vec::new();
    let mut label = 0.0f64;
    for &s in &svals {
        let sc = Complex64::new(s, 0.0);
        let z = zeta(sc, &req())?.re;
        // Gaussian kernel: ∫ e^{−y²} y^{s−1} dy = Γ(s/2)/2.
        let closed_g = 0.5 * gamma_real(0.5 * s)?;
        let rhs_g = mellin_of_muntz(&GaussKernel, sc, 1e-10)?.value.re;
        rows.push(json!({"label": label, "kernel": "gauss", "s": s,
                         "lhs": z * closed_g, "rhs": rhs_g}));
        points.push((label, z * closed_g, rhs_g));
        label += 1.0;
        // Windowed Bessel kernel: ∫ G₁(z)·z^{s−1} dz =
        // ½·Γ((s+1)/2)·₁F₁((s+1)/2; 1; q) with q the sign-adjusted squared
        // scale (negative for an oscillatory kernel).
        let f11 = kummer_1f1(
            KummerArgs { a: Complex64::new(0.5 * (s + 1.0), 0.0), w: Complex64::new(q, 0.0) },
            &req(),
        )?
        .value
        .re;
        let closed_b = 0.5 * gamma_real(0.5 * (s + 1.0))? * f11;
        let rhs_b = mellin_of_muntz(&g1k, sc, 1e-10)?.value.re;
        rows.push(json!({"label": label, "kernel": "windowed_bessel", "s": s,
                         "lhs": z * closed_b, "rhs": rhs_b}));
        points.push((label, z * closed_b, rhs_b));
        label += 1.0;
    }
    grid_draft(
        points,
        ctx.mode,
        json!({"s_values": svals, "r": rscale_label(g1k.r), "t": g1k.t, "cases": rows}),
    )
}

/// Contour form of the Müntz–Mellin kernel,
/// (1/2√π)∫ Γ(s/2)·e^W/(Γ((s+1)/2)·t^{(1−s)/2})·M̂(s)·π^{−s}·x^{s−1} ds on
/// Re s = 0.6, against the direct windowed inner integral. These are two
/// renderings of the same object and must agree with constant 1.
fn chain_3_12(ctx: &Ctx) -> Result<Draft> {
    let r = ctx.r_or(RScale::Imaginary(1.0));
    let t = ctx.t_or(1.0);
    let grid = ctx.grid_or(&[0.8, 0.9, 1.0, 1.15, 1.3]);
    let kern = G1Kernel::new(r, t)?;
    let ew = r.kummer_argument(t).exp();
    let c = 0.6;
    let t_max = 40.0;
    let max_ln = grid.iter().fold(0.0f64, |m, &x| m.max(x.ln().abs()));
    let h = ContourSpec::step_for(1e-8, max_ln);
    // The Mellin transform of the Müntz sum dominates the cost and is
    // x-independent: compute the full line kernel once, re-sum per shift.
    let n = (t_max / h).floor() as usize;
    let mut base = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let s = Complex64::new(c, k as f64 * h);
        let m = mellin_of_muntz(&kern, s, 1e-9)?.value;
        let g1 = complex_gamma(0.5 * s)?;
        let g2 = complex_gamma(0.5 * (s + 1.0))?;
        base.push(g1 * ew / (2.0 * g2 * rpow(t, 0.5 * (1.0 - s))) * m * rpow(PI, -s));
    }
    let mut points = Vec::new();
    for &x in &grid {
        let mut acc = 0.5 * (base[0] * rpow(x, Complex64::new(c - 1.0, 0.0))).re;
        for (k, kv) in base.iter().enumerate().skip(1) {
            let s = Complex64::new(c, k as f64 * h);
            acc += (kv * rpow(x, s - 1.0)).re;
        }
        let lhs = acc * h / PI.sqrt();
        let rhs = inner_y_integral(x, r, t)?;
        points.push((x, lhs, rhs));
    }
    let params = json!({
        "r": rscale_label(r), "t": t, "x_grid": grid,
        "line": {"c": c, "t_max": t_max, "h": h},
    });
    let mut draft = grid_draft(points, ctx.mode, params)?;
    attach_constant_erratum(&mut draft, ctx, "(unexpected: these forms are equal)");
    Ok(draft)
}
