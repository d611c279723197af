//! Special functions around the completed Riemann zeta function, heat-type
//! Bessel series, Müntz-regularized lattice sums, and the quadrature /
//! Mellin machinery needed to verify the exact identities connecting them.
//!
//! The crate is organized as four computational layers plus a verification
//! registry:
//!
//! * [`complexfn`] — complex Γ, log Γ, ζ (Euler–Maclaurin continuation),
//!   the completed ξ, and the real even Ξ on the critical line.
//! * [`besselhyp`] — J₀/J₁/I₀, the confluent ₁F₁ (with the mandatory Kummer
//!   transform on the left half-plane), and the Gaussian-windowed Bessel
//!   kernel built from them.
//! * [`series`] — heat sums, theta functions, regularized Müntz transforms,
//!   closed boundary forms, and Abel/Richardson limits.
//! * [`quadrature`] — adaptive Gauss–Kronrod, certified semi-infinite and
//!   oscillatory integrals, forward Mellin transforms, and inverse-Mellin
//!   contour sums.
//! * [`verify`] — a registry of numerical identity checks with machine-
//!   readable reports, including calibration fits that measure (rather than
//!   assume) proportionality constants.

// Validations spell range checks as `!(x > 0.0)` so NaN is rejected together
// with the out-of-range values; the `partial_cmp` spelling clippy suggests
// hides that intent.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod besselhyp;
pub mod complexfn;
pub mod error;
pub mod quadrature;
pub mod series;
pub mod verify;

pub use besselhyp::{
    bessel_i0, bessel_j, g1, j0_asymptotic_pair, kummer_1f1, BesselOrder, KummerArgs, SeriesValue,
};
pub use complexfn::{
    complex_gamma, complex_log_gamma, xi_completed, xi_critical_line, zeta, ComplexScalar,
    EvalRequest,
};
pub use error::{Error, Result};
pub use quadrature::{
    euler_accelerate, integrate_finite, integrate_finite_sqrt_endpoint,
    integrate_oscillatory_cos, integrate_semi_infinite, mellin_forward, mellin_inverse_contour,
    mellin_inverse_slowdecay, mellin_of_muntz, ContourSpec, DecayCertificate, OscEnvelope,
    QuadResult, QuadScalar,
};
pub use series::{
    abel_limit, bessel_heat_integral, bvp_initial_closed_form, bvp_suggested_start, h1, heat_u,
    muntz_transform, theta_psi, G1Kernel, GaussKernel, GaussPiKernel, MuntzFunction, PhysParams,
    RScale, ThetaConvention,
};
pub use verify::{
    f_plus, run_check, run_suite, xi_zero_scan, Calibration, CheckId, CheckMode, CheckParams,
    CheckReport, ReportValue, SuiteConfig, SuiteReport, ZeroBracket,
};
