//! Identity-verification harness.
//!
//! A fixed registry of nineteen numerical checks, each comparing two
//! *independently computed* sides of an analytic identity — one side by
//! series or closed form, the other by quadrature, contour sum, or finite
//! differences — and reporting machine-readable evidence. Checks run in one
//! of two modes:
//!
//! * **EXACT** — the sides must agree directly: `passed ⇔ rel_diff ≤ tol`.
//! * **CALIBRATE** — the sides are proportional with an unknown constant; a
//!   least-squares fit over the sample grid recovers it, and
//!   `passed ⇔ calibration.spread ≤ tol`. Used where the claimed identity
//!   demonstrably omits a constant factor; the measured constant and the
//!   discrepancy are surfaced in the suite's errata list.
//!
//! [`run_check`] executes one check; [`run_suite`] runs a configured
//! selection in parallel and merges results in registry order, so suite
//! output is deterministic regardless of scheduling.

pub(crate) mod checks;

use std::str::FromStr;
use std::time::Instant;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::besselhyp::{kummer_1f1, KummerArgs};
use crate::complexfn::{xi_critical_line, ComplexScalar, EvalRequest};
use crate::error::{Error, Result};
use crate::series::{PhysParams, RScale};

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

/// Identifier of one registered check. The string forms (`as_str`/`FromStr`)
/// are a stable interface consumed by the CLI and by report sinks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckId {
    Eq1_1,
    Thm1_1,
    Thm1_2,
    Thm1_2R0,
    Thm1_3,
    AsymRemark,
    HeatPde,
    BvpI,
    BvpII,
    BesselDerivs,
    Parseval,
    Mellin3_3,
    Residue3_5,
    Contour3_6,
    Reflect3_7,
    Beta3_8,
    Kummer3_9,
    Muntz3_11,
    Chain3_12,
}

impl CheckId {
    /// Every registered check, in canonical registry order. Suite reports
    /// always list results in this order.
    pub const ALL: [CheckId; 19] = [
        CheckId::Eq1_1,
        CheckId::Thm1_1,
        CheckId::Thm1_2,
        CheckId::Thm1_2R0,
        CheckId::Thm1_3,
        CheckId::AsymRemark,
        CheckId::HeatPde,
        CheckId::BvpI,
        CheckId::BvpII,
        CheckId::BesselDerivs,
        CheckId::Parseval,
        CheckId::Mellin3_3,
        CheckId::Residue3_5,
        CheckId::Contour3_6,
        CheckId::Reflect3_7,
        CheckId::Beta3_8,
        CheckId::Kummer3_9,
        CheckId::Muntz3_11,
        CheckId::Chain3_12,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::Eq1_1 => "eq_1_1",
            CheckId::Thm1_1 => "thm_1_1",
            CheckId::Thm1_2 => "thm_1_2",
            CheckId::Thm1_2R0 => "thm_1_2_r0",
            CheckId::Thm1_3 => "thm_1_3",
            CheckId::AsymRemark => "asym_remark",
            CheckId::HeatPde => "heat_pde",
            CheckId::BvpI => "bvp_i",
            CheckId::BvpII => "bvp_ii",
            CheckId::BesselDerivs => "bessel_derivs",
            CheckId::Parseval => "parseval",
            CheckId::Mellin3_3 => "mellin_3_3",
            CheckId::Residue3_5 => "residue_3_5",
            CheckId::Contour3_6 => "contour_3_6",
            CheckId::Reflect3_7 => "reflect_3_7",
            CheckId::Beta3_8 => "beta_3_8",
            CheckId::Kummer3_9 => "kummer_3_9",
            CheckId::Muntz3_11 => "muntz_3_11",
            CheckId::Chain3_12 => "chain_3_12",
        }
    }

    /// One-line statement of what the check compares.
    pub fn description(self) -> &'static str {
        match self {
            CheckId::Eq1_1 => "cosine transform of Xi(y)/(y²+¼) against its theta-series closed form",
            CheckId::Thm1_1 => "cosine transform of the squared Xi–Kummer kernel against the H₁ autocorrelation integral",
            CheckId::Thm1_2 => "H₁ series against the inverse-square-root-windowed integral of its Müntz transform",
            CheckId::Thm1_2R0 => "scale-free reduction of the H₁/Müntz identity to the theta modular relation",
            CheckId::Thm1_3 => "Xi-weighted F⁺ line integral against the argument-reflected H₁ series",
            CheckId::AsymRemark => "r-scaled deviation of the circular heat sum from its Fresnel pair sum stays bounded",
            CheckId::HeatPde => "radial heat-equation residual of the circular heat sum",
            CheckId::BvpI => "theta lattice sum against its modular-reflection closed form",
            CheckId::BvpII => "Abel t→0⁺ limit of the circular heat sum against the closed boundary value",
            CheckId::BesselDerivs => "finite-difference derivatives of J₀(nr) against the closed Bessel recurrences",
            CheckId::Parseval => "vertical-line gamma-kernel integrals against their closed Parseval values",
            CheckId::Mellin3_3 => "forward Mellin transform of the damped Bessel kernel against its Γ·₁F₁ closed form",
            CheckId::Residue3_5 => "pole term separating the damped Bessel series from its inverse-Mellin contour",
            CheckId::Contour3_6 => "squared-kernel critical-line integral against the H₁ autocorrelation",
            CheckId::Reflect3_7 => "line-shift and functional-equation invariance of the Mellin kernel integral",
            CheckId::Beta3_8 => "inverse Mellin of the beta-function ratio against the truncated power law",
            CheckId::Kummer3_9 => "Laplace-type Bessel integral against its Γ·₁F₁ closed form",
            CheckId::Muntz3_11 => "Mellin transform of the Müntz-regularized sum against ζ times the kernel transform",
            CheckId::Chain3_12 => "contour form of the Müntz–Mellin kernel against the direct windowed integral",
        }
    }

    /// Mode the check runs in when none is requested. CALIBRATE is the
    /// default exactly for the identities whose claimed constant is wrong;
    /// everything else must hold as stated.
    pub fn default_mode(self) -> CheckMode {
        match self {
            CheckId::Thm1_1
            | CheckId::Thm1_2
            | CheckId::Thm1_3
            | CheckId::Contour3_6
            | CheckId::Chain3_12 => CheckMode::Calibrate,
            _ => CheckMode::Exact,
        }
    }

    /// Tolerance the check runs at when none is requested.
    pub fn default_tol(self) -> f64 {
        match self {
            CheckId::BvpI => 1e-10,
            CheckId::HeatPde => 1e-6,
            CheckId::Thm1_1 | CheckId::Thm1_3 => 1e-5,
            CheckId::Thm1_2 | CheckId::Contour3_6 | CheckId::Chain3_12 | CheckId::BvpII => 1e-4,
            // Bounded-deviation criterion: the scaled deviation may not
            // exceed its first-sample allowance (ratio ≤ 1).
            CheckId::AsymRemark => 1.0,
            _ => 1e-8,
        }
    }

    fn registry_index(self) -> usize {
        Self::ALL.iter().position(|&c| c == self).expect("registered id")
    }
}

impl std::fmt::Display for CheckId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Domain(format!("unknown check id '{s}'")))
    }
}

impl Serialize for CheckId {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(self.as_str())
    }
}

/// Pass criterion a check runs under; see the module docs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    Exact,
    Calibrate,
}

impl CheckMode {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckMode::Exact => "exact",
            CheckMode::Calibrate => "calibrate",
        }
    }
}

impl FromStr for CheckMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "exact" => Ok(CheckMode::Exact),
            "calibrate" => Ok(CheckMode::Calibrate),
            other => Err(Error::Domain(format!("unknown mode '{other}' (exact|calibrate)"))),
        }
    }
}

impl Serialize for CheckMode {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(self.as_str())
    }
}

// ---------------------------------------------------------------------------
// Report types
// ---------------------------------------------------------------------------

/// A real or complex reported value. Real values serialize as plain JSON
/// numbers; complex ones as `{"re": …, "im": …}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ReportValue {
    Real(f64),
    Complex(Complex64),
}

impl ReportValue {
    pub fn abs(self) -> f64 {
        match self {
            ReportValue::Real(v) => v.abs(),
            ReportValue::Complex(z) => z.norm(),
        }
    }

    fn as_complex(self) -> Complex64 {
        match self {
            ReportValue::Real(v) => Complex64::new(v, 0.0),
            ReportValue::Complex(z) => z,
        }
    }

    /// |self − other| as a complex modulus.
    pub fn dist(self, other: ReportValue) -> f64 {
        (self.as_complex() - other.as_complex()).norm()
    }

    /// self / other, staying real when both operands are.
    pub fn divided_by(self, other: ReportValue) -> ReportValue {
        match (self, other) {
            (ReportValue::Real(a), ReportValue::Real(b)) => ReportValue::Real(a / b),
            (a, b) => ReportValue::Complex(a.as_complex() / b.as_complex()),
        }
    }

    /// Clamps non-finite components to ±MAX so every report stays valid JSON.
    fn json_safe(self) -> ReportValue {
        match self {
            ReportValue::Real(v) => ReportValue::Real(json_safe(v)),
            ReportValue::Complex(z) => {
                ReportValue::Complex(Complex64::new(json_safe(z.re), json_safe(z.im)))
            }
        }
    }
}

impl std::fmt::Display for ReportValue {
    /// Shortest round-trip decimal; complex values as `re±imi`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ReportValue::Real(v) => write!(f, "{v}"),
            ReportValue::Complex(z) => {
                if z.im >= 0.0 || z.im.is_nan() {
                    write!(f, "{}+{}i", z.re, z.im)
                } else {
                    write!(f, "{}{}i", z.re, z.im)
                }
            }
        }
    }
}

impl Serialize for ReportValue {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ReportValue::Real(v) => ser.serialize_f64(*v),
            ReportValue::Complex(z) => {
                let mut st = ser.serialize_struct("Complex", 2)?;
                st.serialize_field("re", &z.re)?;
                st.serialize_field("im", &z.im)?;
                st.end()
            }
        }
    }
}

/// Non-finite doubles are not representable in JSON; clamp them to the
/// largest finite double so a pathological result still serializes (and
/// visibly fails every tolerance).
fn json_safe(v: f64) -> f64 {
    if v.is_finite() {
        v
    } else if v.is_nan() {
        f64::MAX
    } else {
        f64::MAX.copysign(v)
    }
}

/// Result of the CALIBRATE fit over a sample grid.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Calibration {
    /// Fitted proportionality constant LHS/RHS (sign from the sample nearest
    /// the grid origin, magnitude from the log-domain least-squares fit).
    pub constant: f64,
    /// (max|c| − min|c|) / geometric-mean|c| over the pointwise ratios —
    /// the fit's figure of merit and the CALIBRATE pass criterion.
    pub spread: f64,
}

/// Outcome of one check run. Field order is the serialization order.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub check_id: CheckId,
    /// Parameters and per-point evidence: sample grids, worst-point data,
    /// mode, and (where the check found one) an erratum note.
    pub params: serde_json::Value,
    /// Worst-point left-hand side (multi-point checks report their worst
    /// sample by relative difference).
    pub lhs: ReportValue,
    pub rhs: ReportValue,
    pub abs_diff: f64,
    /// |lhs − rhs| / max(|lhs|, |rhs|, 1), except where a check defines its
    /// own criterion ratio (documented in the check).
    pub rel_diff: f64,
    /// LHS/RHS, absent when |rhs| < 1e−300.
    pub ratio: Option<ReportValue>,
    pub tol: f64,
    pub passed: bool,
    /// Present exactly in CALIBRATE mode.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub calibration: Option<Calibration>,
    pub wall_ms: f64,
}

/// Aggregate result of [`run_suite`].
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    /// One report per selected check, in registry order.
    pub reports: Vec<CheckReport>,
    pub all_passed: bool,
    /// Collected notes where a measured constant or intermediate step
    /// contradicts the claimed form, in registry order.
    pub errata: Vec<String>,
}

// ---------------------------------------------------------------------------
// Configuration
// ---------------------------------------------------------------------------

/// Per-run parameter overrides. `None` fields fall back to each check's
/// documented defaults.
#[derive(Debug, Clone, Default)]
pub struct CheckParams {
    /// Length scale of the Bessel factor (checks that take one).
    pub r: Option<RScale>,
    /// Gaussian time parameter.
    pub t: Option<f64>,
    /// Diffusivity for the heat-sum checks.
    pub kappa: Option<f64>,
    /// Sample grid override for checks that sweep a grid (the x-shifts of
    /// the grid checks, the t-grid of `bvp_i`, the r-grids of `bvp_ii` and
    /// `asym_remark`). Checks with fixed case tables ignore it.
    pub grid: Option<Vec<f64>>,
}

/// Suite selection and overrides for [`run_suite`].
#[derive(Debug, Clone, Default)]
pub struct SuiteConfig {
    /// Checks to run; `None` means the full registry.
    pub checks: Option<Vec<CheckId>>,
    /// Force one mode for every selected check.
    pub mode: Option<CheckMode>,
    /// Force one tolerance for every selected check.
    pub tol: Option<f64>,
    /// Grid override passed through to every selected check.
    pub grid: Option<Vec<f64>>,
    /// Zero out wall-clock fields so repeated runs are byte-identical.
    pub deterministic: bool,
}

// ---------------------------------------------------------------------------
// Execution
// ---------------------------------------------------------------------------

/// Intermediate result a check hands back to the dispatcher: the worst-point
/// comparison plus everything report assembly needs.
#[derive(Debug, Clone)]
pub(crate) struct Draft {
    pub params: serde_json::Value,
    pub lhs: ReportValue,
    pub rhs: ReportValue,
    pub rel_diff: f64,
    pub calibration: Option<Calibration>,
    pub erratum: Option<String>,
}

/// Runs one check. `params` overrides the check's defaults where set; the
/// pass criterion is `rel_diff ≤ tol` (EXACT) or `calibration.spread ≤ tol`
/// (CALIBRATE).
pub fn run_check(
    id: CheckId,
    params: &CheckParams,
    mode: CheckMode,
    tol: f64,
) -> Result<CheckReport> {
    if !(tol > 0.0) || !tol.is_finite() {
        return Err(Error::Domain(format!("tolerance must be finite and > 0, got {tol}")));
    }
    let start = Instant::now();
    let ctx = checks::Ctx {
        r: params.r,
        t: params.t,
        kappa: params.kappa,
        grid: params.grid.clone(),
        mode,
        tol,
    };
    let draft = checks::dispatch(id, &ctx)?;
    if mode == CheckMode::Calibrate && draft.calibration.is_none() {
        return Err(Error::Domain(format!(
            "{id} defines no calibration constant; run it in EXACT mode"
        )));
    }
    Ok(assemble(id, mode, tol, draft, start.elapsed().as_secs_f64() * 1e3))
}

fn assemble(id: CheckId, mode: CheckMode, tol: f64, draft: Draft, wall_ms: f64) -> CheckReport {
    let lhs = draft.lhs.json_safe();
    let rhs = draft.rhs.json_safe();
    let rel_diff = json_safe(draft.rel_diff);
    let ratio =
        if rhs.abs() < 1e-300 { None } else { Some(lhs.divided_by(rhs).json_safe()) };
    let passed = match mode {
        CheckMode::Exact => rel_diff <= tol,
        CheckMode::Calibrate => {
            draft.calibration.is_some_and(|c| c.spread.is_finite() && c.spread <= tol)
        }
    };
    let mut params = draft.params;
    if let serde_json::Value::Object(map) = &mut params {
        map.insert("mode".into(), serde_json::Value::String(mode.as_str().into()));
        if let Some(e) = &draft.erratum {
            map.insert("erratum".into(), serde_json::Value::String(e.clone()));
        }
    }
    CheckReport {
        check_id: id,
        params,
        lhs,
        rhs,
        abs_diff: json_safe(lhs.dist(rhs)),
        rel_diff,
        ratio,
        tol,
        passed,
        calibration: draft.calibration,
        wall_ms,
    }
}

/// A check that failed to produce a value still yields a (failed) report, so
/// suite output always carries one row per selected check.
fn failed_report(id: CheckId, mode: CheckMode, tol: f64, err: &Error, wall_ms: f64) -> CheckReport {
    CheckReport {
        check_id: id,
        params: serde_json::json!({
            "error": err.to_string(),
            "mode": mode.as_str(),
        }),
        lhs: ReportValue::Real(0.0),
        rhs: ReportValue::Real(0.0),
        abs_diff: 0.0,
        rel_diff: f64::MAX,
        ratio: None,
        tol,
        passed: false,
        calibration: None,
        wall_ms,
    }
}

/// Runs the configured selection in parallel and merges the reports in
/// registry order. Check errors are folded into failed reports rather than
/// aborting the suite; the errata list aggregates every note the individual
/// checks surfaced.
pub fn run_suite(config: &SuiteConfig) -> SuiteReport {
    let ids: Vec<CheckId> =
        config.checks.clone().unwrap_or_else(|| CheckId::ALL.to_vec());
    let mut indexed: Vec<(usize, CheckReport)> = ids
        .par_iter()
        .map(|&id| {
            let mode = config.mode.unwrap_or_else(|| id.default_mode());
            let tol = config.tol.unwrap_or_else(|| id.default_tol());
            let params = CheckParams { grid: config.grid.clone(), ..CheckParams::default() };
            let start = Instant::now();
            let report = run_check(id, &params, mode, tol).unwrap_or_else(|e| {
                failed_report(id, mode, tol, &e, start.elapsed().as_secs_f64() * 1e3)
            });
            (id.registry_index(), report)
        })
        .collect();
    indexed.sort_by_key(|(i, _)| *i);
    let mut reports: Vec<CheckReport> = indexed.into_iter().map(|(_, r)| r).collect();
    if config.deterministic {
        for r in &mut reports {
            r.wall_ms = 0.0;
        }
    }
    let errata: Vec<String> = reports
        .iter()
        .filter_map(|r| {
            r.params
                .get("erratum")
                .and_then(|v| v.as_str())
                .map(|e| format!("{}: {e}", r.check_id))
        })
        .collect();
    let all_passed = reports.iter().all(|r| r.passed);
    SuiteReport { reports, all_passed, errata }
}

// ---------------------------------------------------------------------------
// Calibration fit
// ---------------------------------------------------------------------------

/// Least-squares fit of a single proportionality constant to pointwise
/// ratios c_j = lhs_j/rhs_j over a sample grid: magnitude from the mean of
/// ln|c_j| (the least-squares solution in log space), sign from the sample
/// nearest the grid origin. `spread` measures how far the ratios are from
/// constant; a sign flip across the grid can never calibrate, so it forces
/// the spread above any usable tolerance.
pub(crate) fn calibrate_fit(points: &[(f64, f64, f64)]) -> Result<Calibration> {
    if points.len() < 2 {
        return Err(Error::Domain(format!(
            "calibration requires at least two grid points, got {}",
            points.len()
        )));
    }
    let mut ratios = Vec::with_capacity(points.len());
    for &(x, lhs, rhs) in points {
        if !lhs.is_finite() || !rhs.is_finite() || rhs.abs() < 1e-300 || lhs == 0.0 {
            return Err(Error::Domain(format!(
                "calibration ratio undefined at grid point {x} (lhs={lhs}, rhs={rhs})"
            )));
        }
        ratios.push((x, lhs / rhs));
    }
    let &(_, c0) = ratios
        .iter()
        .min_by(|a, b| a.0.abs().total_cmp(&b.0.abs()))
        .expect("non-empty ratios");
    let mean_ln = ratios.iter().map(|&(_, c)| c.abs().ln()).sum::<f64>() / ratios.len() as f64;
    let geo = mean_ln.exp();
    let max = ratios.iter().map(|&(_, c)| c.abs()).fold(f64::MIN, f64::max);
    let min = ratios.iter().map(|&(_, c)| c.abs()).fold(f64::MAX, f64::min);
    let mut spread = (max - min) / geo;
    if ratios.iter().any(|&(_, c)| c.signum() != c0.signum()) {
        spread = spread.max(2.0);
    }
    Ok(Calibration { constant: c0.signum() * geo, spread })
}

// ---------------------------------------------------------------------------
// Shared analytic pieces
// ---------------------------------------------------------------------------

/// F⁺(s) = e^{xs}·₁F₁(s/2; 1; W) + e^{x(1−s)}·₁F₁((1−s)/2; 1; W), with W the
/// Kummer argument of `p.r` at `p.t` and x = `p.x` (the exponential shift,
/// which — unlike the radial arguments — may take either sign here).
///
/// On the critical line s = ½ + iy this is real and even in y, which the
/// line-integral checks exploit.
pub fn f_plus(s: ComplexScalar, p: &PhysParams) -> Result<ComplexScalar> {
    if !s.is_finite() {
        return Err(Error::Domain("f_plus requires finite s".into()));
    }
    if !p.x.is_finite() {
        return Err(Error::Domain(format!("f_plus requires finite x, got {}", p.x)));
    }
    PhysParams { x: 0.0, ..*p }.validate()?;
    let w = Complex64::new(p.r.kummer_argument(p.t), 0.0);
    let req = EvalRequest::default();
    let one = Complex64::new(1.0, 0.0);
    let f1 = kummer_1f1(KummerArgs { a: 0.5 * s, w }, &req)?.value;
    let f2 = kummer_1f1(KummerArgs { a: 0.5 * (one - s), w }, &req)?.value;
    Ok((s * p.x).exp() * f1 + ((one - s) * p.x).exp() * f2)
}

// ---------------------------------------------------------------------------
// Zero scan
// ---------------------------------------------------------------------------

/// One sign-change bracket of Ξ on the critical line, refined by bisection.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ZeroBracket {
    /// 1-based ordinal of the bracket within the scan.
    pub index: usize,
    pub y_lower: f64,
    pub y_upper: f64,
    pub y_mid: f64,
}

/// Walks Ξ(y) from 0 to `y_max` in steps of `step`, recording every sign
/// change and bisecting each bracket down to width ≤ 1e−6.
pub fn xi_zero_scan(y_max: f64, step: f64) -> Result<Vec<ZeroBracket>> {
    if !(y_max > 0.0) || !y_max.is_finite() {
        return Err(Error::Domain(format!("scan requires y_max > 0, got {y_max}")));
    }
    if !(step > 0.0) || step > y_max {
        return Err(Error::Domain(format!(
            "scan requires 0 < step <= y_max, got step={step}, y_max={y_max}"
        )));
    }
    let mut out = Vec::new();
    let mut y_prev = 0.0;
    let mut f_prev = xi_critical_line(0.0)?;
    let n = (y_max / step).ceil() as usize;
    for k in 1..=n {
        let y = (k as f64 * step).min(y_max);
        let f = xi_critical_line(y)?;
        if f_prev * f < 0.0 {
            let (mut lo, mut hi, mut flo) = (y_prev, y, f_prev);
            while hi - lo > 1e-6 {
                let mid = 0.5 * (lo + hi);
                let fm = xi_critical_line(mid)?;
                if fm * flo > 0.0 {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            out.push(ZeroBracket {
                index: out.len() + 1,
                y_lower: lo,
                y_upper: hi,
                y_mid: 0.5 * (lo + hi),
            });
        }
        y_prev = y;
        f_prev = f;
    }
    Ok(out)
}
