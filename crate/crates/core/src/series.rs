//! Heat-type Bessel series, theta sums, their Müntz-regularized transforms,
//! and the Abel/Richardson limit machinery for boundary values.
//!
//! The central objects are sums of the form Σₙ e^{−t n²y²}·B(σny) with B a
//! Bessel factor (J₀, I₀, or 1) and σ a length scale that may enter either
//! as a real or an "imaginary" (J↔I swapping) parameter. Each sum has a
//! companion integral ∫₀^∞ of its summand; subtracting (1/y)·∫ regularizes
//! the y → 0 blow-up and produces functions with clean Mellin transforms.

use num_complex::Complex64;

use crate::besselhyp::{bessel_j, kummer_1f1, BesselOrder, KummerArgs, SeriesValue};
use crate::complexfn::EvalRequest;
use crate::error::{Error, Result};
use crate::quadrature::DecayCertificate;

/// How the length scale enters the Bessel factor of a heat sum.
///
/// `Real(r)` keeps the oscillatory J₀(r·…) factor; `Imaginary(rho)` is the
/// analytic continuation r → iρ, which swaps J₀ for the growing I₀ and
/// flips the sign of the associated Gaussian exponent. Both degenerate to
/// the plain Gaussian sum at scale 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RScale {
    Real(f64),
    Imaginary(f64),
}

impl RScale {
    /// |scale| regardless of kind.
    pub fn magnitude(self) -> f64 {
        match self {
            RScale::Real(r) => r.abs(),
            RScale::Imaginary(rho) => rho.abs(),
        }
    }

    /// The argument W fed to ₁F₁(½; 1; W) by the companion integrals:
    /// W = −r²/(4t) for a real scale, +ρ²/(4t) for an imaginary one.
    pub fn kummer_argument(self, t: f64) -> f64 {
        match self {
            RScale::Real(r) => -r * r / (4.0 * t),
            RScale::Imaginary(rho) => rho * rho / (4.0 * t),
        }
    }

    fn validate(self) -> Result<()> {
        let m = match self {
            RScale::Real(r) => r,
            RScale::Imaginary(rho) => rho,
        };
        if !m.is_finite() || m < 0.0 {
            return Err(Error::Domain(format!("length scale must be finite and >= 0, got {m}")));
        }
        Ok(())
    }
}

/// Physical parameters shared by the heat sums and their identities.
#[derive(Debug, Clone, Copy)]
pub struct PhysParams {
    /// Spatial argument (radius or series argument), ≥ 0.
    pub x: f64,
    /// Length scale of the Bessel factor.
    pub r: RScale,
    /// Gaussian time parameter, > 0.
    pub t: f64,
    /// Diffusivity, > 0.
    pub kappa: f64,
}

impl PhysParams {
    pub fn validate(&self) -> Result<()> {
        if !self.x.is_finite() || self.x < 0.0 {
            return Err(Error::Domain(format!("x must be finite and >= 0, got {}", self.x)));
        }
        self.r.validate()?;
        if !(self.t > 0.0) || !self.t.is_finite() {
            return Err(Error::Domain(format!("t must be finite and > 0, got {}", self.t)));
        }
        if !(self.kappa > 0.0) || !self.kappa.is_finite() {
            return Err(Error::Domain(format!("kappa must be finite and > 0, got {}", self.kappa)));
        }
        Ok(())
    }
}

/// Convention for the Gaussian theta sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaConvention {
    /// ψ(y) = Σₙ e^{−n²y}
    Plain,
    /// ψ(y) = Σₙ e^{−πn²y}
    Pi,
}

/// Σ_{n≥1} e^{−n²x} for x ≥ 1 by direct summation (≤ 7 terms).
fn psi_series(x: f64) -> f64 {
    let mut acc = 0.0;
    let mut n = 1.0f64;
    while n * n * x <= 46.0 {
        acc += (-n * n * x).exp();
        n += 1.0;
    }
    acc
}

fn psi_plain(x: f64) -> f64 {
    if x < 1.0 {
        // Modular relation: ψ(x) = −½ + ½√(π/x) + √(π/x)·ψ(π²/x). One level
        // always suffices because π²/x > π² > 1.
        let s = (std::f64::consts::PI / x).sqrt();
        -0.5 + 0.5 * s + s * psi_series(std::f64::consts::PI * std::f64::consts::PI / x)
    } else {
        psi_series(x)
    }
}

/// Gaussian theta sum ψ(y) in the requested convention. Relative error
/// ≤ 1e−14 on (0, ∞); small arguments go through the modular relation
/// instead of brute-force summation.
pub fn theta_psi(y: f64, convention: ThetaConvention) -> Result<f64> {
    if !(y > 0.0) || !y.is_finite() {
        return Err(Error::Domain(format!("theta_psi requires y > 0, got {y}")));
    }
    Ok(match convention {
        ThetaConvention::Plain => psi_plain(y),
        ThetaConvention::Pi => psi_plain(std::f64::consts::PI * y),
    })
}

/// ∫₀^∞ e^{−ty²}·B(σy) dy = (√π/(2√t))·₁F₁(½; 1; W) — the companion
/// integral of one heat-sum term, with W as in [`RScale::kummer_argument`].
pub fn bessel_heat_integral(r: RScale, t: f64) -> Result<f64> {
    if !(t > 0.0) {
        return Err(Error::Domain(format!("bessel_heat_integral requires t > 0, got {t}")));
    }
    r.validate()?;
    let w = Complex64::new(r.kummer_argument(t), 0.0);
    let f = kummer_1f1(KummerArgs { a: Complex64::new(0.5, 0.0), w }, &EvalRequest::default())?;
    Ok(std::f64::consts::PI.sqrt() / (2.0 * t.sqrt()) * f.value.re)
}

/// One heat-sum term e^{−t z²}·B(σz/√t·√t…) in exponent-combined form:
/// `damped_bessel_term(z², arg)` = e^{−g}·B(arg) without intermediate
/// overflow of I₀.
fn damped_bessel_term(gauss_exponent: f64, r: RScale, arg: f64) -> f64 {
    match r {
        RScale::Real(rr) => {
            if rr == 0.0 {
                (-gauss_exponent).exp()
            } else {
                (-gauss_exponent).exp() * bessel_j(BesselOrder::Zero, arg)
            }
        }
        RScale::Imaginary(rho) => {
            if rho == 0.0 {
                (-gauss_exponent).exp()
            } else {
                let (m, e) = crate::besselhyp::i0_scaled(arg);
                m * (e - gauss_exponent).exp()
            }
        }
    }
}

/// The regularized heat-Bessel series
/// H₁(y) = Σ_{n≥1} e^{−t n²y²}·B(σny) − c₁/y, with c₁ the companion
/// integral of the summand.
///
/// Below y = 0.3/√t the function has already collapsed onto its boundary
/// value −½ to within 1e−12 (Euler–Maclaurin: all odd-order boundary terms
/// of the summand vanish except the ones the c₁/y subtraction removes), so
/// that constant is returned directly rather than summing ~10⁵ terms.
pub fn h1(y: f64, p: &PhysParams) -> Result<SeriesValue<f64>> {
    p.validate()?;
    if !(y > 0.0) || !y.is_finite() {
        return Err(Error::Domain(format!("h1 requires y > 0, got {y}")));
    }
    let t = p.t;
    if y < 0.3 / t.sqrt() {
        return Ok(SeriesValue { value: -0.5, terms_used: 0, tail_bound: 1e-12 });
    }
    let sigma = p.r.magnitude();
    let st = t.sqrt();
    let mut acc = 0.0f64;
    let mut comp = 0.0f64;
    let mut n = 1u64;
    let (value, terms, tail) = loop {
        let z = n as f64 * y;
        let term = damped_bessel_term(t * z * z, p.r, sigma * z);
        let yk = term - comp;
        let tk = acc + yk;
        comp = (tk - acc) - yk;
        acc = tk;
        if term.abs() < 1e-19 && z * st > 1.0 {
            break (acc, n as usize, term.abs());
        }
        n += 1;
        if n > 200_000 {
            return Err(Error::SeriesNonConvergence { max_terms: 200_000, last_term: term });
        }
    };
    let c1 = bessel_heat_integral(p.r, t)?;
    Ok(SeriesValue { value: value - c1 / y, terms_used: terms, tail_bound: tail })
}

/// The circular heat sum u(r, t) = Σ_{n≥1} J₀(nr)·e^{−n²κt}.
///
/// Terms fall below 1e−20 once n²κt > 46; the Kahan-compensated sum keeps
/// cancellation noise at the 1e−16 level even when ~700 terms contribute.
pub fn heat_u(r: f64, t: f64, kappa: f64) -> Result<SeriesValue<f64>> {
    if !r.is_finite() || r < 0.0 {
        return Err(Error::Domain(format!("heat_u requires r >= 0, got {r}")));
    }
    if !(t > 0.0) || !(kappa > 0.0) {
        return Err(Error::Domain(format!("heat_u requires t, kappa > 0, got t={t} kappa={kappa}")));
    }
    let ct = kappa * t;
    let mut acc = 0.0f64;
    let mut comp = 0.0f64;
    let mut n = 1u64;
    loop {
        let nf = n as f64;
        let term = bessel_j(BesselOrder::Zero, nf * r) * (-nf * nf * ct).exp();
        let yk = term - comp;
        let tk = acc + yk;
        comp = (tk - acc) - yk;
        acc = tk;
        if nf * nf * ct > 46.0 {
            return Ok(SeriesValue { value: acc, terms_used: n as usize, tail_bound: term.abs() });
        }
        n += 1;
        if n > 4_000_000 {
            return Err(Error::SeriesNonConvergence { max_terms: 4_000_000, last_term: term });
        }
    }
}

/// Boundary value lim_{t→0⁺} u(r, t) in closed form:
/// −½ + 1/r + 2·Σ_{0<2πm<r} (r² − 4π²m²)^{−1/2}.
///
/// Defined for r > 0 away from the resonance points r = 2πm, where the
/// closed form (and the limit itself) diverges.
pub fn bvp_initial_closed_form(r: f64) -> Result<f64> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::Domain(format!("bvp_initial_closed_form requires r > 0, got {r}")));
    }
    let tau = 2.0 * std::f64::consts::PI;
    let n = (r / tau).floor() as u64;
    let mut acc = -0.5 + 1.0 / r;
    for m in 1..=n {
        let d = r * r - (m as f64 * tau) * (m as f64 * tau);
        if d <= 0.0 {
            return Err(Error::Pole { location: format!("boundary sum at r = 2π·{m}") });
        }
        acc += 2.0 / d.sqrt();
    }
    Ok(acc)
}

/// Step size at which the Abel ladder for u(r, t → 0⁺) should start:
/// small enough that the t-dependence is already in its asymptotic regime,
/// scaled by the squared distance to the nearest resonance 2πm (including
/// m = 0), where convergence slows quadratically.
pub fn bvp_suggested_start(r: f64) -> f64 {
    let tau = 2.0 * std::f64::consts::PI;
    let mut d = r.abs();
    let mut m = 1.0f64;
    while tau * m < r + 7.0 {
        d = d.min((r - tau * m).abs());
        m += 1.0;
    }
    (d * d / 64.5).min(0.05)
}

/// Abel-type limit f(0⁺) from samples f(t₀·2^{−k}), k = 0..npts−1, via a
/// Richardson ladder in powers of √2 (the sums behave like a₀ + a₁√t +
/// a₂t + …, so half-integer powers must be eliminated too).
///
/// Returns (limit, error estimate from the last ladder rung).
pub fn abel_limit<F>(family: F, t0: f64, npts: usize) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    if !(t0 > 0.0) || !t0.is_finite() {
        return Err(Error::Domain(format!("abel_limit requires t0 > 0, got {t0}")));
    }
    if !(2..=24).contains(&npts) {
        return Err(Error::Domain(format!("abel_limit requires 2 <= npts <= 24, got {npts}")));
    }
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(npts);
    for k in 0..npts {
        rows.push(vec![family(t0 * 0.5f64.powi(k as i32))?]);
    }
    for j in 1..npts {
        let fac = 2.0f64.powf(j as f64 / 2.0) - 1.0;
        for i in 0..npts - j {
            let hi = rows[i + 1][j - 1];
            let lo = rows[i][j - 1];
            rows[i].push(hi + (hi - lo) / fac);
        }
    }
    let value = rows[0][npts - 1];
    let est = (value - rows[0][npts - 2]).abs();
    if !value.is_finite() {
        return Err(Error::ExtrapolationDiverged(format!(
            "Richardson ladder produced {value} from start {t0}"
        )));
    }
    Ok((value, est))
}

// ---------------------------------------------------------------------------
// Müntz-regularized transforms
// ---------------------------------------------------------------------------

/// A kernel F: (0, ∞) → ℝ whose lattice sum can be regularized as
/// M_F(y) = Σ_{n≥1} F(ny) − (1/y)·∫₀^∞ F.
///
/// Implementations supply the analytic data that makes both the transform
/// and its forward Mellin integral cheap: the exact integral, a closed/
/// boundary-expansion form at small y, the Mellin integral of that form over
/// (0, y_L], and a good log-domain integration window.
pub trait MuntzFunction {
    /// Kernel value F(y).
    fn eval(&self, y: f64) -> Result<f64>;

    /// Decay guarantee for y ≥ 1, used to budget tail truncation.
    fn decay(&self) -> DecayCertificate;

    /// ∫₀^∞ F(y) dy, exact.
    fn exact_integral(&self) -> f64;

    /// Closed-form value of M_F(y) where one is available (modular relation
    /// or boundary expansion); `None` means "sum the series".
    fn small_y(&self, y: f64) -> Option<f64>;

    /// ∫₀^{y_l} M_F(y)·y^{s−1} dy, analytic, valid for the y_l returned by
    /// [`Self::suggested_mellin_window`].
    fn mellin_lower_tail(&self, s: Complex64, y_l: f64) -> Complex64;

    /// (u_L, u_U): log-domain window [e^{u_L}, e^{u_U}] on which the forward
    /// Mellin integral of M_F should be done numerically; outside it the
    /// analytic tails take over.
    fn suggested_mellin_window(&self) -> (f64, f64);

    /// True once the series tail beyond lattice point z is below ~1e−20.
    fn series_tail_negligible(&self, z: f64) -> bool {
        z > 1.0
            && match self.decay() {
                DecayCertificate::ExpLinear { c, lambda } => lambda * z - c.abs().ln() > 46.0,
                DecayCertificate::ExpGaussian { c, lambda } => {
                    lambda * z * z - c.abs().ln() > 46.0
                }
                // Algebraic decay never truncates a lattice sum safely.
                DecayCertificate::Algebraic { .. }
                | DecayCertificate::AlgebraicWithLeading { .. } => false,
            }
    }
}

/// M_F(y) = Σ_{n≥1} F(ny) − (1/y)·∫₀^∞ F for a kernel with certified decay.
///
/// Uses the kernel's closed form where it offers one; otherwise sums the
/// lattice series with Kahan compensation until the certified tail bound
/// drops below 1e−20.
pub fn muntz_transform(f: &dyn MuntzFunction, y: f64) -> Result<f64> {
    if !(y > 0.0) || !y.is_finite() {
        return Err(Error::Domain(format!("muntz_transform requires y > 0, got {y}")));
    }
    if let Some(v) = f.small_y(y) {
        return Ok(v);
    }
    let mut acc = 0.0f64;
    let mut comp = 0.0f64;
    let mut n = 1u64;
    loop {
        let z = n as f64 * y;
        let term = f.eval(z)?;
        let yk = term - comp;
        let tk = acc + yk;
        comp = (tk - acc) - yk;
        acc = tk;
        if f.series_tail_negligible(z) {
            break;
        }
        n += 1;
        if n > 400_000 {
            return Err(Error::SeriesNonConvergence { max_terms: 400_000, last_term: term });
        }
    }
    Ok(acc - f.exact_integral() / y)
}

/// Gaussian kernel F(y) = e^{−y²}. Its Müntz transform has the closed
/// modular form M(y) = −½ + (√π/y)·ψ(π²/y²) for y < 1.
#[derive(Debug, Clone, Copy)]
pub struct GaussKernel;

impl MuntzFunction for GaussKernel {
    fn eval(&self, y: f64) -> Result<f64> {
        Ok((-y * y).exp())
    }

    fn decay(&self) -> DecayCertificate {
        DecayCertificate::ExpGaussian { c: 1.0, lambda: 1.0 }
    }

    fn exact_integral(&self) -> f64 {
        0.5 * std::f64::consts::PI.sqrt()
    }

    fn small_y(&self, y: f64) -> Option<f64> {
        if y < 1.0 {
            let pi = std::f64::consts::PI;
            Some(-0.5 + pi.sqrt() / y * psi_plain(pi * pi / (y * y)))
        } else {
            None
        }
    }

    fn mellin_lower_tail(&self, s: Complex64, y_l: f64) -> Complex64 {
        // M(y) = −½ + O(e^{−π²/y²}) below y_l ≤ 0.4: ∫₀^{y_l} −½·y^{s−1} dy.
        -(s * y_l.ln()).exp() / (2.0 * s)
    }

    fn suggested_mellin_window(&self) -> (f64, f64) {
        (0.4f64.ln(), 10.0f64.ln())
    }
}

/// Gaussian kernel in the π-convention, F(y) = e^{−πy²}; M(y) = −½ +
/// ψ_π(1/y²)/y for y < 1 by the same modular relation.
#[derive(Debug, Clone, Copy)]
pub struct GaussPiKernel;

impl MuntzFunction for GaussPiKernel {
    fn eval(&self, y: f64) -> Result<f64> {
        Ok((-std::f64::consts::PI * y * y).exp())
    }

    fn decay(&self) -> DecayCertificate {
        DecayCertificate::ExpGaussian { c: 1.0, lambda: std::f64::consts::PI }
    }

    fn exact_integral(&self) -> f64 {
        0.5
    }

    fn small_y(&self, y: f64) -> Option<f64> {
        if y < 1.0 {
            Some(-0.5 + psi_plain(std::f64::consts::PI / (y * y)) / y)
        } else {
            None
        }
    }

    fn mellin_lower_tail(&self, s: Complex64, y_l: f64) -> Complex64 {
        -(s * y_l.ln()).exp() / (2.0 * s)
    }

    fn suggested_mellin_window(&self) -> (f64, f64) {
        (0.4f64.ln(), 10.0f64.ln())
    }
}

/// Bernoulli numbers B₂..B₂₀ for the boundary expansion of the windowed
/// Bessel kernel.
const BERN_SMALL: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Taylor coefficients c_m of E(v) = e^{−v}·B₀(σ√v) around v = 0, where the
/// Bessel factor contributes q^k/(k!)² with q = σ²/(4t) (real scale) or
/// −ρ²/(4t) (imaginary): c_m = Σ_k q^k/(k!)²·(−1)^{m−k}/(m−k)!.
fn em_taylor_coeff(q: f64, m: usize) -> f64 {
    let mut cm = 0.0;
    for k in 0..=m {
        let sign = if (m - k) % 2 == 0 { 1.0 } else { -1.0 };
        cm += q.powi(k as i32) / (factorial(k) * factorial(k)) * sign / factorial(m - k);
    }
    cm
}

/// Gaussian-windowed Bessel kernel F(z) = e^{−z²}·z·B(σz/√t) — the summand
/// of the regularized series behind the Müntz/Mellin identities.
#[derive(Debug, Clone, Copy)]
pub struct G1Kernel {
    pub r: RScale,
    pub t: f64,
}

impl G1Kernel {
    pub fn new(r: RScale, t: f64) -> Result<Self> {
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::Domain(format!("G1 kernel requires t > 0, got {t}")));
        }
        r.validate()?;
        if let RScale::Real(rr) = r {
            // exact_integral = ½·e^{r²/4t} must stay in double range.
            if rr * rr / (4.0 * t) > 700.0 {
                return Err(Error::Overflow {
                    context: format!("G1 kernel integral e^{{r²/4t}} with r={rr}, t={t}"),
                });
            }
        }
        Ok(Self { r, t })
    }

    /// q = −W: the sign-adjusted squared-scale parameter of the boundary
    /// expansion.
    fn q(&self) -> f64 {
        -self.r.kummer_argument(self.t)
    }
}

impl MuntzFunction for G1Kernel {
    fn eval(&self, y: f64) -> Result<f64> {
        crate::besselhyp::g1(y, self.r, self.t)
    }

    fn decay(&self) -> DecayCertificate {
        // |F(z)| ≤ z·e^{−z²+σz/√t}·K; for z ≥ 1 this is below
        // c·e^{−z²/2} with c covering the linear boost on z < 2σ/√t … be
        // generous and fold the boost's peak into c.
        let boost = self.r.magnitude() / self.t.sqrt();
        DecayCertificate::ExpGaussian { c: (boost * boost / 2.0).exp().max(1.0) * 2.0, lambda: 0.5 }
    }

    fn exact_integral(&self) -> f64 {
        0.5 * self.q().exp()
    }

    fn small_y(&self, y: f64) -> Option<f64> {
        if y >= 0.05 {
            return None;
        }
        // Euler–Maclaurin boundary expansion: the series minus integral
        // collapses to Σ_k −B_{2k}/(2k)·c_{k−1}·y^{2k−1}; ten terms reach
        // 1e−16 for y < 0.05.
        let q = self.q();
        let mut acc = 0.0;
        for k in 1..=10usize {
            acc += -BERN_SMALL[k - 1] / (2.0 * k as f64)
                * em_taylor_coeff(q, k - 1)
                * y.powi(2 * k as i32 - 1);
        }
        Some(acc)
    }

    fn mellin_lower_tail(&self, s: Complex64, y_l: f64) -> Complex64 {
        // Term-by-term Mellin integral of the boundary expansion.
        let q = self.q();
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 1..=10usize {
            let e = (2 * k - 1) as f64;
            let power = ((s + e) * y_l.ln()).exp();
            acc += -BERN_SMALL[k - 1] / (2.0 * k as f64) * em_taylor_coeff(q, k - 1) * power
                / (s + e);
        }
        acc
    }

    fn suggested_mellin_window(&self) -> (f64, f64) {
        (0.05f64.ln(), 8.0f64.ln())
    }

    fn series_tail_negligible(&self, z: f64) -> bool {
        z > 1.0 && z * z - self.r.magnitude() * z / self.t.sqrt() > 46.0
    }
}
