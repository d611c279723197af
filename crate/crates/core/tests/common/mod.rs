//! Frozen high-precision reference values shared by the integration suites,
//! plus the comparison helpers that judge results against them.
//!
//! Every constant here was computed independently of this crate at 50-digit
//! working precision and rounded to 20 significant decimal digits, so the
//! nearest f64 is determined exactly. Tests compare against these frozen
//! copies — never against values recomputed by the code under test.
//!
//! The digits are recorded verbatim from the generating run: more decimals
//! than f64 resolves, and occasionally coinciding with a named constant —
//! both deliberate, hence the lint allowances.
#![allow(dead_code)]
#![allow(clippy::excessive_precision, clippy::approx_constant, clippy::type_complexity)]

use num_complex::Complex64;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Relative difference with a unit floor in the denominator disabled:
/// references are all nonzero, so plain |got − want| / |want| is the metric.
pub fn rel(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(1e-300)
}

pub fn rel_c(got: Complex64, want: Complex64) -> f64 {
    (got - want).norm() / want.norm().max(1e-300)
}

pub fn assert_rel(got: f64, want: f64, tol: f64, what: &str) {
    let r = rel(got, want);
    assert!(
        r <= tol,
        "{what}: got {got:.17e}, want {want:.17e}, rel diff {r:.3e} > {tol:.1e}"
    );
}

pub fn assert_rel_c(got: Complex64, want: Complex64, tol: f64, what: &str) {
    let r = rel_c(got, want);
    assert!(
        r <= tol,
        "{what}: got {got}, want {want}, rel diff {r:.3e} > {tol:.1e}"
    );
}

/// (argument, value) rows for the complex gamma function.
pub const GAMMA: &[((f64, f64), (f64, f64))] = &[
    ((5.0, 0.0), (24.0, 0.0)),
    ((0.5, 0.0), (1.7724538509055160273, 0.0)),
    ((1.0, 1.0), (0.49801566811835604271, -0.15494982830181068512)),
    ((0.5, 14.134725), (-1.445553843760688659e-10, -5.5227887687740633534e-10)),
    ((-2.5, 0.0), (-0.94530872048294188123, 0.0)),
    ((0.25, 30.0), (-2.9982178447538134558e-21, 2.1092029539842322324e-21)),
    ((3.7, 0.0), (4.1706517837966031654, 0.0)),
    ((-0.5, 2.0), (-0.039038849162115518792, -0.035167876062686938209)),
];

/// (argument, value) rows for the branch-stable log-gamma.
pub const LGAMMA: &[((f64, f64), (f64, f64))] = &[
    ((20.0, 50.0), (-0.86344056635151902304, 172.52086762916172407)),
    ((0.5, 200.0), (-313.2403268257746511, 859.66368164324449067)),
    ((-1.5, 0.5), (0.00081546715251823463554, -5.9267657915075467186)),
];

/// (argument, value) rows for the zeta function away from s = 1.
pub const ZETA: &[((f64, f64), (f64, f64))] = &[
    ((2.0, 0.0), (1.6449340668482264365, 0.0)),
    ((3.0, 0.0), (1.2020569031595942854, 0.0)),
    ((0.5, 0.0), (-1.4603545088095868129, 0.0)),
    ((-1.0, 0.0), (-0.083333333333333333333, 0.0)),
    ((0.3, 10.0), (1.6217854123392161803, -0.11296184670843107268)),
    ((2.0, 30.0), (0.82587982431582637523, -0.26903382749730631099)),
    ((0.5, 60.0), (0.54120083514634811115, 0.22718392236826872865)),
    ((-0.5, 3.0), (0.35291387981928725272, 0.012124954416036982049)),
    ((1.0005, 0.0), (2000.5772520716129365, 0.0)),
];

/// ζ just off the first critical-line zero. The value is ~1.1e−7 while the
/// alternating sum behind it has O(1) terms, so f64 can resolve it only to
/// the ~1e−15 cancellation floor in *absolute* terms — this row gets an
/// absolute gate (and the magnitude bound the zero location implies), not
/// the 1e−10 relative gate of the rows above.
pub const ZETA_NEAR_ZERO: ((f64, f64), (f64, f64)) =
    ((0.5, 14.134725), (1.7674298356433245355e-8, -1.1102028894857664356e-7));

/// (argument, value) rows for (s−1)·ζ(s) hugging the pole.
pub const ZETA_NEAR_POLE: &[((f64, f64), (f64, f64))] = &[
    ((1.0001, 0.0), (1.0000577222946437629, 0.0)),
    ((1.0, 1.0e-5), (0.99999999999271841545, 5.7721566490201737877e-6)),
];

/// (argument, value) rows for the completed xi function.
pub const XI_COMPLETED: &[((f64, f64), (f64, f64))] = &[
    ((0.5, 0.0), (0.49712077818831410991, 0.0)),
    ((2.0, 0.0), (0.52359877559829887308, 0.0)),
];

/// (height, value) rows for the real even critical-line function Ξ(y).
pub const XI_LINE: &[(f64, f64)] = &[
    (0.0, 0.49712077818831410991),
    (5.0, 0.27554999734420419223),
    (10.0, 0.037967850310935684224),
    (14.0, 0.00020129444423525750949),
    (25.0, 1.3824572165098989757e-8),
    (63.0, 2.129288881344321423e-18),
];

/// (argument, value) rows for J₀.
pub const J0: &[(f64, f64)] = &[
    (0.5, 0.93846980724081290423),
    (1.0, 0.76519768655796655145),
    (5.0, -0.17759677131433830435),
    (11.9, 0.025049441699589563728),
    (12.1, 0.069666773606807388498),
    (20.0, 0.16702466434058315473),
    (100.0, 0.019985850304223122424),
];

/// (argument, value) rows for J₁.
pub const J1: &[(f64, f64)] = &[
    (0.5, 0.24226845767487388638),
    (1.0, 0.44005058574493351596),
    (5.0, -0.32757913759146522204),
    (11.9, -0.22898324966192407078),
    (12.1, -0.21574897337692477718),
    (20.0, 0.066833124175850045579),
    (100.0, -0.077145352014112158033),
];

/// (argument, value) rows for I₀, spanning the series/asymptotic crossover
/// and the deep exponential range.
pub const I0: &[(f64, f64)] = &[
    (0.5, 1.0634833707413235193),
    (1.0, 1.2660658777520083356),
    (5.0, 27.239871823604446895),
    (17.9, 5642579.5600484017075),
    (18.1, 6853118.776963011342),
    (30.0, 781672297823.97748972),
    (100.0, 1.0737517071310738235e+42),
    (700.0, 1.5295933476718737363e+302),
];

/// (a, w, value) rows for ₁F₁(a; 1; w), including left-half-plane arguments
/// that exercise the Kummer transform.
pub const F11_B1: &[((f64, f64), (f64, f64), (f64, f64))] = &[
    ((0.5, 0.0), (-5.0, 0.0), (0.27004644161220273956, 0.0)),
    ((0.5, 0.0), (3.0, 0.0), (7.3801013214773998648, 0.0)),
    ((0.5, 0.0), (-0.0625, 0.0), (0.96946987812707235871, 0.0)),
    ((0.25, 5.0), (-0.0625, 0.0), (0.96090290231689221447, -0.30447445351006469075)),
    ((0.25, 15.0), (0.0625, 0.0), (0.79176865951546835671, 0.93638024011270309167)),
    ((0.25, 0.0), (-30.0, 0.0), (0.3494336284170319536, 0.0)),
    ((-0.25, 0.0), (0.25, 0.0), (0.93442154044968910776, 0.0)),
];

/// (argument, value) rows for the plain theta sum ψ(x) = Σ e^{−n²x}.
pub const PSI_PLAIN: &[(f64, f64)] = &[
    (1.0, 0.38631860241332607652),
    (0.01, 8.3622692545275801365),
    (2.5, 0.082130398722851076531),
];

/// (argument, value) rows for the π-scaled theta sum ψ(x) = Σ e^{−πn²x}.
pub const PSI_PI: &[(f64, f64)] = &[
    (1.0, 0.043217405606654007288),
    (0.01, 4.5),
    (2.0, 0.0018674427438695455238),
];

/// (is_imaginary_scale, magnitude, t, value) rows for the companion
/// integral c₁ = ∫₀^∞ e^{−tu²}·{J₀|I₀}(ru) du.
pub const C1: &[(bool, f64, f64, f64)] = &[
    (true, 0.5, 1.0, 0.91458203363540735316),
    (false, 0.5, 1.0, 0.85917030941161535203),
    (true, 1.0, 2.0, 0.6677245747420573788),
    (false, 1.0, 2.0, 0.58926486898948180267),
    (false, 0.0, std::f64::consts::PI, 0.5),
];

/// (is_imaginary_scale, magnitude, t, y, value) rows for H₁(y).
pub const H1: &[(bool, f64, f64, f64, f64)] = &[
    (true, 0.5, 1.0, 1.0, -0.49995608172025800092),
    (true, 0.5, 1.0, 0.6, -0.50000000000045233851),
    (false, 0.5, 1.0, 1.0, -0.49984828691449237765),
    (false, 0.5, 1.0, 0.6, -0.49999999998736193946),
    (true, 1.0, 2.0, 1.5, -0.42685619994570228016),
    (false, 1.0, 2.0, 1.5, -0.38715735812008294089),
    (false, 0.0, std::f64::consts::PI, 1.0, -0.45678259439334599271),
    (true, 0.5, 1.0, 4.0, -0.22864525187532155244),
    (false, 0.0, 2.0, 2.0, -0.3129930717009598868),
];

/// (is_imaginary_scale, magnitude, t, z, value) rows for the windowed
/// Bessel kernel G₁(z).
pub const G1_PTS: &[(bool, f64, f64, f64, f64)] = &[
    (false, 1.0, 1.0, 2.0, 0.083504122427306674991),
    (true, 1.0, 1.0, 2.0, 0.0082014053225364228883),
    (true, 0.5, 1.0, 0.7, 0.4158055070020592202),
];

/// (is_imaginary_scale, magnitude, t, y, value) rows for the Müntz
/// transform of the windowed Bessel kernel.
pub const MG1: &[(bool, f64, f64, f64, f64)] = &[
    (true, 1.0, 1.0, 1.0, -0.099794946564586242512),
    (true, 1.0, 1.0, 2.0, -0.18649896921860755551),
    (true, 1.0, 1.0, 0.5, -0.043075343465358409176),
    (false, 1.0, 1.0, 1.0, -0.090936876005826854551),
    (true, 0.5, 1.0, 1.2, -0.1270485541898525142),
];

/// (y, value) rows for the Müntz transform of the Gaussian kernel.
pub const MGAUSS: &[(f64, f64)] = &[
    (1.0, -0.49990832303943193713),
    (0.5, -0.49999999999999997463),
    (2.0, -0.42479771130246987532),
];

/// (r, t, kappa, value) rows for the circular heat sum u(r, t).
pub const HEAT_U: &[(f64, f64, f64, f64)] = &[
    (1.0, 1.0, 1.0, 0.28556906232129696092),
    (3.0, 0.3, 1.0, -0.15296431760850594334),
    (20.0, 0.1, 1.0, 0.10860490599080880445),
    (0.5, 0.5, 1.0, 0.67852977149225714588),
    (5.0, 0.8, 2.0, -0.036264814020926856018),
];

/// (r, value) rows for the closed t → 0⁺ boundary form.
pub const BVP: &[(f64, f64)] = &[
    (1.0, 0.5),
    (5.0, -0.3),
    (7.0, 0.2910070015513167197),
    (9.0, -0.078509375747877768225),
    (std::f64::consts::PI, -0.18169011381620932846),
];

/// (s, x, is_imaginary_scale, magnitude, t, value) rows for the combined
/// line kernel F⁺(s).
pub const F_PLUS: &[((f64, f64), f64, bool, f64, f64, (f64, f64))] = &[
    ((0.5, 1.0), 0.3, false, 0.5, 1.0, (2.2063025621931272828, 0.0)),
    ((0.5, 5.0), 0.3, false, 0.5, 1.0, (0.51445302949651907646, 0.0)),
    ((0.5, 2.0), 0.0, false, 0.0, std::f64::consts::PI, (2.0, 0.0)),
];

/// (s, v, r, t, value) rows for the Mellin transform of e^{−ty²}·J_v(ry),
/// frozen from a 50-digit quadrature that agrees with the corrected closed
/// form (denominator 2^{v+1}, not the claimed flat 2) to all digits.
pub const M33: &[((f64, f64), u32, f64, f64, (f64, f64))] = &[
    ((1.7, 0.0), 1, 0.5, 0.5, (0.26113093528968286496, 0.0)),
    ((0.5, 0.3), 0, 1.0, 1.0, (1.1846385661288574187, -0.82815280990947880126)),
    ((1.2, 0.0), 0, 0.5, 1.0, (0.71735939999003447712, 0.0)),
    ((1.2, 0.0), 1, 1.0, 1.0, (0.20782077312211665647, 0.0)),
];

/// (s, x, value) rows for Γ((s+1)/2)·e^{−x}·₁F₁((1−s)/2; 1; x).
pub const K39: &[(f64, f64, f64)] = &[
    (0.5, 0.25, 1.018969332602705735),
    (1.5, 1.0, 0.23080316241770077921),
    (0.5, 1.0, 0.60967422249775159064),
    (1.5, 0.25, 0.65961466795759166434),
];

/// (s, value) rows for ζ(s)·Γ(s/2)/2 — the Gaussian-kernel factorization.
pub const MUNTZ_GAUSS_REF: &[(f64, f64)] = &[
    (0.3, -2.813302705433830801),
    (0.5, -2.647337888328288019),
    (0.7, -3.5370926710840454494),
];

/// (s, value) rows for ζ(s)·(kernel transform) with the oscillatory Bessel
/// kernel at unit imaginary scale, t = 1.
pub const MUNTZ_BESSEL_REF: &[(f64, f64)] = &[
    (0.3, -0.53430364613310942536),
    (0.5, -0.74402822960252841379),
    (0.7, -1.2521851894580906239),
];

/// First three positive zeros of Ξ(y).
pub const XI_ZEROS: &[f64] = &[
    14.13472514173469379,
    21.022039638771554993,
    25.010857580145688763,
];

/// (x, value) rows: both sides of the cosine-transform/theta identity at its
/// acceptance grid (the common value the two routes must share).
pub const EQ11_REF: &[(f64, f64)] = &[
    (0.0, 1.4350248428338220484),
    (0.5, 1.2225486145455278919),
    (1.0, 0.95273613193570821072),
    (2.0, 0.57786367489546120301),
];
