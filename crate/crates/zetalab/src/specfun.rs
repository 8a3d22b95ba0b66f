//! Complex special functions shared by every identity check: the principal
//! branch of log Γ, the functional-equation multiplier χ(s), the completed
//! factor π^{-s/2}Γ(s/2), and the Riemann–Siegel theta function.
//!
//! log Γ uses a Lanczos sum in the central region (|Im s| ≤ 20, |s| < 32)
//! and the Stirling series with Bernoulli corrections elsewhere, with the
//! reflection formula for Re s < 1/2. The branch is the principal one:
//! real on (0, ∞), continuous off the cut (-∞, 0].

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type Cx = Complex64;

pub const PI: f64 = std::f64::consts::PI;
pub const TWO_PI: f64 = 2.0 * PI;
pub const LN_PI: f64 = 1.144_729_885_849_400_2;
pub const LN_2PI: f64 = 1.837_877_066_409_345_5;

/// Lanczos coefficients, g + 1/2 = 5.2421875, 14 terms plus the constant.
const LANCZOS_SHIFT: f64 = 5.242_187_5;
const LANCZOS_C0: f64 = 0.999_999_999_999_997_092;
const LANCZOS_COEFFS: [f64; 14] = [
    57.156_235_665_862_923_5,
    -59.597_960_355_475_491_2,
    14.136_097_974_741_747_1,
    -0.491_913_816_097_620_199,
    3.399_464_998_481_188_87e-5,
    4.652_362_892_704_857_56e-5,
    -9.837_447_530_487_956_46e-5,
    1.580_887_032_249_124_94e-4,
    -2.102_644_417_241_048_83e-4,
    2.174_396_181_152_126_43e-4,
    -1.643_181_065_367_638_90e-4,
    8.441_822_398_385_274_33e-5,
    -2.619_083_840_158_140_87e-5,
    3.689_918_265_953_162_34e-6,
];

/// B_{2k} / ((2k)(2k-1)) for the Stirling series, k = 1..8.
const STIRLING_COEFFS: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1_260.0,
    -1.0 / 1_680.0,
    1.0 / 1_188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3_617.0 / 122_400.0,
];

const POLE_TOL: f64 = 1e-12;

pub(crate) fn ensure_finite(s: Cx, what: &'static str) -> Result<Cx> {
    if s.re.is_finite() && s.im.is_finite() {
        Ok(s)
    } else {
        Err(Error::NonFinite(what))
    }
}

/// Distance-checked detection of s within `POLE_TOL` of {0, -1, -2, ...}.
fn near_nonpositive_integer(s: Cx) -> Option<i64> {
    if s.im.abs() > POLE_TOL || s.re > 0.5 {
        return None;
    }
    let n = s.re.round();
    if n <= 0.0 && (s.re - n).abs() <= POLE_TOL {
        Some(n as i64)
    } else {
        None
    }
}

/// Stirling series for Re z >= 1/2 and |z| >= 32.
fn log_gamma_stirling(z: Cx) -> Cx {
    let mut series = Cx::new(0.0, 0.0);
    let z2 = z * z;
    let mut zpow = z;
    for c in STIRLING_COEFFS {
        series += c / zpow;
        zpow *= z2;
    }
    (z - 0.5) * z.ln() - z + 0.5 * LN_2PI + series
}

/// Stirling with an upward recurrence shift until |z| >= 32.
fn log_gamma_shifted_stirling(z: Cx) -> Cx {
    let mut z = z;
    let mut correction = Cx::new(0.0, 0.0);
    while z.norm() < 32.0 {
        correction += z.ln();
        z += 1.0;
    }
    log_gamma_stirling(z) - correction
}

/// Lanczos sum for Re z >= 1/2 in the central region.
fn log_gamma_lanczos(z: Cx) -> Cx {
    let t = z + LANCZOS_SHIFT;
    let mut series = Cx::new(LANCZOS_C0, 0.0);
    for (k, c) in LANCZOS_COEFFS.iter().enumerate() {
        series += c / (z + (k + 1) as f64);
    }
    (z + 0.5) * t.ln() - t + (Cx::new(0.5 * LN_2PI, 0.0).exp() * series / z).ln()
}

/// log sin(πz) on the branch continuous for Im z > 0, conjugate-symmetric.
fn log_sin_pi(z: Cx) -> Cx {
    if z.im < 0.0 {
        return log_sin_pi(z.conj()).conj();
    }
    // sin(πz) = (i/2) e^{-iπz} (1 - e^{2πiz}); |e^{2πiz}| <= 1 for Im z >= 0.
    let q = (Cx::new(0.0, TWO_PI) * z).exp();
    let one_minus_q = Cx::new(1.0, 0.0) - q;
    Cx::new(0.0, -PI) * z + one_minus_q.ln() + Cx::new(-(2.0_f64.ln()), 0.5 * PI)
}

/// Principal branch of log Γ(s).
///
/// Relative accuracy is at the 1e-13 level for |s| up to a few hundred.
/// Errors at the poles s = 0, -1, -2, ....
pub fn log_gamma(s: Cx) -> Result<Cx> {
    let s = ensure_finite(s, "log_gamma")?;
    if let Some(n) = near_nonpositive_integer(s) {
        return Err(Error::GammaPole(Cx::new(n as f64, 0.0)));
    }
    if s.re < 0.5 {
        // Reflection: log Γ(s) = log π - log sin(πs) - log Γ(1-s).
        let reflected = log_gamma_right(Cx::new(1.0, 0.0) - s);
        return Ok(Cx::new(LN_PI, 0.0) - log_sin_pi(s) - reflected);
    }
    Ok(log_gamma_right(s))
}

fn log_gamma_right(z: Cx) -> Cx {
    debug_assert!(z.re >= 0.5);
    if z.norm() >= 32.0 {
        log_gamma_stirling(z)
    } else if z.im.abs() <= 20.0 {
        log_gamma_lanczos(z)
    } else {
        log_gamma_shifted_stirling(z)
    }
}

/// Γ(s) = exp(log Γ(s)).
pub fn gamma(s: Cx) -> Result<Cx> {
    Ok(log_gamma(s)?.exp())
}

fn near_even_nonpositive(s: Cx) -> bool {
    near_nonpositive_integer(s).is_some_and(|n| n % 2 == 0)
}

fn near_odd_positive(s: Cx) -> bool {
    if s.im.abs() > POLE_TOL || s.re < 0.5 {
        return false;
    }
    let n = s.re.round();
    n >= 1.0 && (n as i64) % 2 == 1 && (s.re - n).abs() <= POLE_TOL
}

/// The multiplier χ(s) = π^{s-1/2} Γ((1-s)/2) / Γ(s/2).
///
/// χ satisfies χ(s)χ(1-s) = 1 and ζ(s) = χ(s)ζ(1-s). Poles at s = 1, 3, 5, ...
/// are reported as errors; the zeros at s = 0, -2, -4, ... are returned as
/// an exact 0.
pub fn chi(s: Cx) -> Result<Cx> {
    let s = ensure_finite(s, "chi")?;
    if near_odd_positive(s) {
        return Err(Error::ChiPole(s));
    }
    if near_even_nonpositive(s) {
        return Ok(Cx::new(0.0, 0.0));
    }
    let num = log_gamma((Cx::new(1.0, 0.0) - s) / 2.0)?;
    let den = log_gamma(s / 2.0)?;
    Ok(((s - 0.5) * LN_PI + num - den).exp())
}

/// The completed factor π^{-s/2} Γ(s/2), the Γ-part of the completed Mellin
/// transform. Poles at s = 0, -2, -4, ....
pub fn completed_factor(s: Cx) -> Result<Cx> {
    let s = ensure_finite(s, "completed_factor")?;
    if near_even_nonpositive(s) {
        return Err(Error::GammaPole(s));
    }
    Ok((log_gamma(s / 2.0)? - s * (0.5 * LN_PI)).exp())
}

/// Riemann–Siegel theta: θ(t) = arg Γ(1/4 + it/2) - (t/2) log π on the
/// continuous branch with θ(0) = 0.
///
/// For t >= 10 the asymptotic series is used (absolute error below 1e-10);
/// smaller t goes through log Γ directly.
pub fn rs_theta(t: f64) -> Result<f64> {
    if !t.is_finite() || t <= 0.0 {
        return Err(Error::Domain(format!("rs_theta requires t > 0, got {t}")));
    }
    if t < 10.0 {
        return rs_theta_direct(t);
    }
    let t2 = t * t;
    let mut theta = 0.5 * t * (t / TWO_PI).ln() - 0.5 * t - PI / 8.0;
    theta += 1.0 / (48.0 * t);
    theta += 7.0 / (5_760.0 * t * t2);
    theta += 31.0 / (80_640.0 * t * t2 * t2);
    theta += 127.0 / (430_080.0 * t * t2 * t2 * t2);
    Ok(theta)
}

/// θ(t) evaluated through the principal branch of log Γ, valid for any t > 0.
pub fn rs_theta_direct(t: f64) -> Result<f64> {
    let lg = log_gamma(Cx::new(0.25, 0.5 * t))?;
    Ok(lg.im - 0.5 * t * LN_PI)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Independent oracle: Stirling with a long real shift and 10 Bernoulli
    /// terms. The implementation never takes this path for the tested inputs
    /// (shift of 40 forces |z| >= 40, different code constants and order).
    fn oracle_log_gamma(z: Cx) -> Cx {
        const B: [f64; 10] = [
            1.0 / 12.0,
            -1.0 / 360.0,
            1.0 / 1_260.0,
            -1.0 / 1_680.0,
            1.0 / 1_188.0,
            -691.0 / 360_360.0,
            1.0 / 156.0,
            -3_617.0 / 122_400.0,
            43_867.0 / 244_188.0,
            -174_611.0 / 125_400.0,
        ];
        assert!(z.re > 0.0, "oracle expects the right half-plane");
        let shift = 64usize;
        let mut w = z;
        let mut corr = Cx::new(0.0, 0.0);
        for _ in 0..shift {
            corr += w.ln();
            w += 1.0;
        }
        let mut series = Cx::new(0.0, 0.0);
        let w2 = w * w;
        let mut wp = w;
        for c in B {
            series += c / wp;
            wp *= w2;
        }
        (w - 0.5) * w.ln() - w + 0.5 * LN_2PI + series - corr
    }

    fn assert_cx_close(a: Cx, b: Cx, tol: f64, what: &str) {
        let scale = 1.0 + a.norm().max(b.norm());
        assert!(
            (a - b).norm() <= tol * scale,
            "{what}: {a} vs {b}, delta {:.3e}",
            (a - b).norm()
        );
    }

    #[test]
    fn log_gamma_at_one_is_zero() {
        let v = log_gamma(Cx::new(1.0, 0.0)).unwrap();
        assert!(v.norm() < 1e-14, "log gamma(1) = {v}");
    }

    #[test]
    fn log_gamma_at_five_is_log_24() {
        let v = log_gamma(Cx::new(5.0, 0.0)).unwrap();
        assert!((v.re - 24.0_f64.ln()).abs() < 1e-13);
        assert!(v.im.abs() < 1e-13);
    }

    #[test]
    fn log_gamma_matches_oracle_on_critical_line() {
        let s = Cx::new(0.5, 10.0);
        let v = log_gamma(s).unwrap();
        assert_cx_close(v, oracle_log_gamma(s), 1e-13, "log_gamma(1/2 + 10i)");
    }

    #[test]
    fn log_gamma_matches_oracle_across_regions() {
        // Points chosen to exercise Lanczos, plain Stirling, and the shifted
        // Stirling branch, plus reflection.
        let pts = [
            Cx::new(0.7, 3.0),
            Cx::new(3.0, 19.5),
            Cx::new(0.5, 25.0),
            Cx::new(40.0, 5.0),
            Cx::new(1.5, 150.0),
            Cx::new(120.0, 120.0),
        ];
        for s in pts {
            assert_cx_close(
                log_gamma(s).unwrap(),
                oracle_log_gamma(s),
                1e-13,
                &format!("log_gamma({s})"),
            );
        }
        // Reflection region: compare against reflection applied to the oracle.
        let s = Cx::new(-2.3, 4.0);
        let refl = Cx::new(LN_PI, 0.0) - log_sin_pi(s) - oracle_log_gamma(Cx::new(1.0, 0.0) - s);
        assert_cx_close(log_gamma(s).unwrap(), refl, 1e-13, "reflected log_gamma");
    }

    #[test]
    fn log_gamma_pole_errors() {
        for n in [0.0, -1.0, -2.0, -7.0] {
            assert!(matches!(
                log_gamma(Cx::new(n, 0.0)),
                Err(Error::GammaPole(_))
            ));
        }
    }

    #[test]
    fn log_gamma_recurrence_mod_2pi() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let s = Cx::new(rng.gen_range(0.6..5.0), rng.gen_range(-30.0..30.0));
            let lhs = log_gamma(s + 1.0).unwrap() - log_gamma(s).unwrap() - s.ln();
            let wrapped = (lhs.im / TWO_PI - (lhs.im / TWO_PI).round()).abs();
            assert!(lhs.re.abs() < 1e-12, "recurrence re residual at {s}");
            assert!(wrapped * TWO_PI < 1e-12, "recurrence im residual at {s}");
        }
    }

    #[test]
    fn chi_fixed_point_at_half() {
        let v = chi(Cx::new(0.5, 0.0)).unwrap();
        assert_cx_close(v, Cx::new(1.0, 0.0), 1e-14, "chi(1/2)");
    }

    #[test]
    fn chi_at_two_is_minus_two_pi_squared() {
        // Cross-route: chi(2) = zeta(2)/zeta(-1) = (pi^2/6)/(-1/12) = -2 pi^2.
        let v = chi(Cx::new(2.0, 0.0)).unwrap();
        let expected = -2.0 * PI * PI;
        assert!((v.re - expected).abs() <= 1e-12 * expected.abs());
        assert!(v.im.abs() <= 1e-12);
    }

    #[test]
    fn chi_unit_modulus_on_critical_line() {
        let v = chi(Cx::new(0.5, 25.0)).unwrap();
        assert!((v.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn chi_pole_and_zero_structure() {
        assert!(matches!(chi(Cx::new(1.0, 0.0)), Err(Error::ChiPole(_))));
        assert!(matches!(chi(Cx::new(3.0, 0.0)), Err(Error::ChiPole(_))));
        assert_eq!(chi(Cx::new(0.0, 0.0)).unwrap(), Cx::new(0.0, 0.0));
        assert_eq!(chi(Cx::new(-2.0, 0.0)).unwrap(), Cx::new(0.0, 0.0));
    }

    #[test]
    fn chi_functional_identity_on_random_strip_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut checked = 0;
        while checked < 200 {
            let s = Cx::new(rng.gen_range(-3.0..4.0), rng.gen_range(-40.0..40.0));
            // Stay away from the poles and zeros of chi on the real axis.
            if s.im.abs() < 0.2 {
                continue;
            }
            let p = chi(s).unwrap() * chi(Cx::new(1.0, 0.0) - s).unwrap();
            assert!(
                (p - Cx::new(1.0, 0.0)).norm() < 1e-12,
                "chi(s)chi(1-s) at {s}: {p}"
            );
            checked += 1;
        }
    }

    #[test]
    fn chi_conjugation_symmetry() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..50 {
            let s = Cx::new(rng.gen_range(-2.0..3.0), rng.gen_range(0.3..30.0));
            let a = chi(s).unwrap();
            let b = chi(s.conj()).unwrap();
            assert_cx_close(a.conj(), b, 1e-13, "chi conjugation");
        }
    }

    #[test]
    fn chi_from_completed_factors() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..50 {
            let s = Cx::new(rng.gen_range(-2.0..3.0), rng.gen_range(0.3..30.0));
            let lhs = chi(s).unwrap();
            let rhs = completed_factor(Cx::new(1.0, 0.0) - s).unwrap()
                / completed_factor(s).unwrap();
            assert_cx_close(lhs, rhs, 1e-12, "chi vs completed factors");
        }
    }

    #[test]
    fn completed_factor_small_integers() {
        let v = completed_factor(Cx::new(2.0, 0.0)).unwrap();
        assert_cx_close(v, Cx::new(1.0 / PI, 0.0), 1e-14, "completed_factor(2)");
        let v = completed_factor(Cx::new(4.0, 0.0)).unwrap();
        assert_cx_close(v, Cx::new(1.0 / (PI * PI), 0.0), 1e-14, "completed_factor(4)");
        assert!(matches!(
            completed_factor(Cx::new(0.0, 0.0)),
            Err(Error::GammaPole(_))
        ));
    }

    #[test]
    fn completed_factor_matches_oracle_at_first_zero_height() {
        let s = Cx::new(0.5, 14.134725);
        let v = completed_factor(s).unwrap();
        let expected = (oracle_log_gamma(s / 2.0) - s * (0.5 * LN_PI)).exp();
        assert_cx_close(v, expected, 1e-12, "completed factor at 1/2 + 14.13i");
    }

    #[test]
    fn rs_theta_domain_error() {
        assert!(rs_theta(0.0).is_err());
        assert!(rs_theta(-5.0).is_err());
    }

    #[test]
    fn rs_theta_sign_change_near_first_root() {
        // theta has a root near t = 17.8456; bracket it with the direct path.
        let a = rs_theta_direct(17.0).unwrap();
        let b = rs_theta_direct(18.5).unwrap();
        assert!(a * b < 0.0, "no sign change: {a} {b}");
        let (mut lo, mut hi) = (17.0, 18.5);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            let v = rs_theta_direct(mid).unwrap();
            if v * rs_theta_direct(lo).unwrap() <= 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let root = 0.5 * (lo + hi);
        assert!((root - 17.8456).abs() < 1e-3, "root at {root}");
        // The asymptotic path must agree with the bracketed root location.
        assert!(rs_theta(root).unwrap().abs() < 1e-9);
    }

    #[test]
    fn rs_theta_asymptotic_matches_direct() {
        let d50 = rs_theta_direct(50.0).unwrap();
        assert!((rs_theta(50.0).unwrap() - d50).abs() < 1e-10);
        let d10 = rs_theta_direct(10.0).unwrap();
        assert!((rs_theta(10.0).unwrap() - d10).abs() < 1e-9);
    }
}
