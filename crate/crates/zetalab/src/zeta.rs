//! Riemann zeta evaluation, zero location, and the zero table.
//!
//! ζ(s) is computed by Euler–Maclaurin with N ≈ max(20, 2|Im s|) direct
//! terms and Bernoulli corrections through B₁₂ for Re s ≥ 0, and through the
//! functional equation ζ(s) = χ(s)ζ(1-s) on the left half-plane. Zeros are
//! located as sign changes of the Hardy Z function on a grid and refined by
//! bisection; every table is cross-validated against the argument-principle
//! count of the completed zeta on the same height window.

use std::fmt::Write as _;
use std::path::Path;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::sonine;
use crate::specfun::{self, chi, completed_factor, ensure_finite, log_gamma, rs_theta, Cx, LN_PI};

/// B_{2k}/(2k)! for the Euler–Maclaurin tail, k = 1..6.
const EM_COEFFS: [f64; 6] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30_240.0,
    -1.0 / 1_209_600.0,
    1.0 / 47_900_160.0,
    -691.0 / 1_307_674_368_000.0,
];

/// Stieltjes constants for the Laurent expansion of ζ at s = 1.
const STIELTJES: [f64; 3] = [
    0.577_215_664_901_532_9,
    -0.072_815_845_483_676_72,
    -0.009_690_363_192_872_318,
];

/// Residual below which a stored ordinate counts as a zero of ζ.
pub const ZERO_RESIDUAL_TOL: f64 = 1e-9;
/// |ζ'| below which a zero is flagged as possibly multiple.
pub const MULTIPLE_ZERO_TOL: f64 = 1e-6;
/// Validation tolerance for ingested ordinates.
pub const INGEST_TOL: f64 = 1e-6;

/// ζ(s) for s ≠ 1.
pub fn zeta(s: Cx) -> Result<Cx> {
    let s = ensure_finite(s, "zeta")?;
    if (s - Cx::new(1.0, 0.0)).norm() < 1e-12 {
        return Err(Error::ZetaPole);
    }
    if s.re < 0.0 {
        // χ(s) has an exact zero at the trivial zeros s = -2, -4, ...
        let c = chi(s)?;
        if c == Cx::new(0.0, 0.0) {
            return Ok(c);
        }
        return Ok(c * euler_maclaurin(Cx::new(1.0, 0.0) - s));
    }
    Ok(euler_maclaurin(s))
}

fn euler_maclaurin(s: Cx) -> Cx {
    let n = (2.0 * s.im.abs()).ceil().max(20.0) as usize;
    let nf = n as f64;
    let mut sum = Cx::new(0.0, 0.0);
    for k in 1..n {
        sum += (-s * (k as f64).ln()).exp();
    }
    let n_pow = (-s * nf.ln()).exp(); // N^{-s}
    sum += n_pow * nf / (s - 1.0); // N^{1-s}/(s-1)
    sum += 0.5 * n_pow;
    let mut poch = s;
    let mut tail_pow = n_pow / nf; // N^{-s-1}
    for (k, c) in EM_COEFFS.iter().enumerate() {
        sum += *c * poch * tail_pow;
        let j = 2.0 * (k as f64 + 1.0);
        poch *= (s + (j - 1.0)) * (s + j);
        tail_pow /= nf * nf;
    }
    sum
}

/// The entire completed zeta ξ(s) = (s-1) π^{-s/2} Γ(s/2 + 1) ζ(s),
/// valid for Re s > -2. Its zeros are exactly the nontrivial zeros.
pub fn xi(s: Cx) -> Result<Cx> {
    let s = ensure_finite(s, "xi")?;
    let gamma_part = (log_gamma(s / 2.0 + 1.0)? - s * (0.5 * LN_PI)).exp();
    let u = s - Cx::new(1.0, 0.0);
    if u.norm() < 1e-6 {
        // (s-1)ζ(s) = 1 + γ₀(s-1) - γ₁(s-1)² + (γ₂/2)(s-1)³ + O((s-1)⁴)
        let pole_part = Cx::new(1.0, 0.0) + STIELTJES[0] * u - STIELTJES[1] * u * u
            + 0.5 * STIELTJES[2] * u * u * u;
        return Ok(gamma_part * pole_part);
    }
    Ok(gamma_part * u * zeta(s)?)
}

/// Hardy Z: Z(t) = e^{iθ(t)} ζ(1/2 + it), real for real t with |Z| = |ζ|.
pub fn hardy_z(t: f64) -> Result<f64> {
    let theta = rs_theta(t)?;
    let z = Cx::new(0.0, theta).exp() * zeta(Cx::new(0.5, t))?;
    if z.im.abs() > 1e-10 * (1.0 + z.re.abs()) {
        return Err(Error::Inconsistency {
            what: format!("hardy_z({t}) imaginary residue"),
            magnitude: z.im.abs(),
        });
    }
    Ok(z.re)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Source {
    Computed,
    Ingested,
}

#[derive(Debug, Clone)]
pub struct ZetaZero {
    /// 1-based rank by height.
    pub index: usize,
    pub gamma: f64,
    pub multiplicity: u32,
    /// ζ'(1/2 + iγ).
    pub zeta_prime: Cx,
}

impl ZetaZero {
    pub fn rho(&self) -> Cx {
        Cx::new(0.5, self.gamma)
    }
}

#[derive(Debug, Clone)]
pub struct ZeroTable {
    pub zeros: Vec<ZetaZero>,
    pub source: Source,
    pub height_limit: f64,
    pub block_bounds: Vec<f64>,
}

impl ZeroTable {
    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    pub fn count_below(&self, t: f64) -> usize {
        self.zeros.iter().filter(|z| z.gamma < t).count()
    }

    pub fn ordinates(&self) -> Vec<f64> {
        self.zeros.iter().map(|z| z.gamma).collect()
    }

    fn from_ordinates(ordinates: Vec<f64>, source: Source, height_limit: f64) -> Result<Self> {
        let zeta_primes: Vec<Cx> = ordinates
            .par_iter()
            .map(|&g| zeta_prime_at_ordinate(g, 1e-3))
            .collect::<Result<Vec<_>>>()?;
        let zeros = ordinates
            .iter()
            .zip(zeta_primes)
            .enumerate()
            .map(|(i, (&gamma, zp))| ZetaZero {
                index: i + 1,
                gamma,
                multiplicity: 1,
                zeta_prime: zp,
            })
            .collect::<Vec<_>>();
        let block_bounds = block_partition(&ordinates);
        Ok(ZeroTable {
            zeros,
            source,
            height_limit,
            block_bounds,
        })
    }

    /// Reads ordinates from a text file: one decimal ordinate per line,
    /// '#' comment lines, strictly ascending. Each ordinate is validated
    /// against |ζ(1/2 + iγ)| ≤ 1e-6 and ζ' is recomputed locally.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let mut ordinates = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let gamma: f64 = line.parse().map_err(|e| Error::Parse {
                line: lineno + 1,
                message: format!("{e}"),
            })?;
            if let Some(&prev) = ordinates.last() {
                if gamma <= prev {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        message: "ordinates must be strictly ascending".into(),
                    });
                }
            }
            ordinates.push(gamma);
        }
        if ordinates.is_empty() {
            return Ok(ZeroTable {
                zeros: vec![],
                source: Source::Ingested,
                height_limit: 0.0,
                block_bounds: vec![],
            });
        }
        let failures: Vec<(f64, f64)> = ordinates
            .par_iter()
            .filter_map(|&g| match zeta(Cx::new(0.5, g)) {
                Ok(v) if v.norm() <= INGEST_TOL => None,
                Ok(v) => Some((g, v.norm())),
                Err(_) => Some((g, f64::INFINITY)),
            })
            .collect();
        if !failures.is_empty() {
            return Err(Error::ZeroValidation { failures });
        }
        let height = ordinates.last().copied().unwrap_or(0.0) + 0.1;
        Self::from_ordinates(ordinates, Source::Ingested, height)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let mut out = String::new();
        for z in &self.zeros {
            writeln!(out, "{}", z.gamma).expect("string write");
        }
        std::fs::write(path, out)?;
        Ok(())
    }

    /// Cache format: the plain table preceded by
    /// `# height_limit=<T> tol=<eps>`.
    pub fn save_cache(&self, path: &Path, tol: f64) -> Result<()> {
        let mut out = String::new();
        writeln!(out, "# height_limit={} tol={}", self.height_limit, tol).expect("string write");
        for z in &self.zeros {
            writeln!(out, "{}", z.gamma).expect("string write");
        }
        std::fs::write(path, out)?;
        Ok(())
    }

    /// Loads a cache file if it exists, covers the requested height, and
    /// was produced at a tolerance at least as tight as requested.
    pub fn load_cache(path: &Path, height_limit: f64) -> Result<Option<Self>> {
        Self::load_cache_with_tol(path, height_limit, ZERO_RESIDUAL_TOL)
    }

    pub fn load_cache_with_tol(
        path: &Path,
        height_limit: f64,
        tol: f64,
    ) -> Result<Option<Self>> {
        if !path.exists() {
            return Ok(None);
        }
        let text = std::fs::read_to_string(path)?;
        let header = text.lines().next().unwrap_or("");
        let header_field = |key: &str| -> Option<f64> {
            header
                .split(key)
                .nth(1)
                .and_then(|rest| rest.split_whitespace().next())
                .and_then(|v| v.parse().ok())
        };
        let cached_height = header_field("height_limit=").unwrap_or(0.0);
        let cached_tol = header_field("tol=").unwrap_or(f64::INFINITY);
        if cached_height + 1e-9 < height_limit || cached_tol > tol * (1.0 + 1e-12) {
            return Ok(None);
        }
        let mut table = Self::load(path)?;
        table.zeros.retain(|z| z.gamma < height_limit);
        let ordinates = table.ordinates();
        table.block_bounds = block_partition(&ordinates);
        table.height_limit = height_limit;
        table.source = Source::Computed;
        for (i, z) in table.zeros.iter_mut().enumerate() {
            z.index = i + 1;
        }
        Ok(Some(table))
    }
}

/// Locates all nontrivial zeros with ordinate below `t_max` (10 ≤ t_max ≤ 500).
///
/// Sign changes of Z on a 0.05 grid, refined by bisection to |Δγ| ≤ 1e-10;
/// the count is cross-validated against the argument-principle count of ξ.
/// On a mismatch the grid is halved and the scan retried.
pub fn find_zeros(t_max: f64) -> Result<ZeroTable> {
    if !(10.0..=500.0).contains(&t_max) {
        return Err(Error::Domain(format!(
            "find_zeros expects 10 <= t_max <= 500, got {t_max}"
        )));
    }
    let expected = argument_principle_count(t_max)?;
    let mut step = 0.05;
    let mut found = 0usize;
    for _ in 0..4 {
        let ordinates = scan_and_refine(t_max, step)?;
        found = ordinates.len();
        if found as i64 == expected {
            return ZeroTable::from_ordinates(ordinates, Source::Computed, t_max);
        }
        step *= 0.5;
    }
    Err(Error::MissedZeros { expected, found })
}

/// Argument-principle count of zeros of ξ in (-1, 2) × (0, t_max).
pub fn argument_principle_count(t_max: f64) -> Result<i64> {
    let report = sonine::count_zeros_rectangle(
        &|s| xi(s),
        Cx::new(-1.0, 0.0),
        Cx::new(2.0, t_max),
        4.0,
    )?;
    Ok(report.winding_count)
}

fn scan_and_refine(t_max: f64, step: f64) -> Result<Vec<f64>> {
    let t_lo = 10.0;
    let n = ((t_max - t_lo) / step).ceil() as usize;
    let grid: Vec<f64> = (0..=n).map(|i| (t_lo + i as f64 * step).min(t_max)).collect();
    let values: Vec<f64> = grid
        .par_iter()
        .map(|&t| hardy_z(t))
        .collect::<Result<Vec<_>>>()?;
    let mut ordinates = Vec::new();
    for i in 0..n {
        if values[i] == 0.0 {
            ordinates.push(grid[i]);
        } else if values[i] * values[i + 1] < 0.0 {
            ordinates.push(refine_zero(grid[i], grid[i + 1], values[i])?);
        }
    }
    Ok(ordinates)
}

fn refine_zero(mut lo: f64, mut hi: f64, z_lo: f64) -> Result<f64> {
    // Bisection down to the ulp scale: the ordinate error is then limited
    // by the representation, not the bracket.
    let sign_lo = z_lo.signum();
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let v = hardy_z(mid)?;
        if v == 0.0 {
            return Ok(mid);
        }
        if v.signum() == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// ζ'(ρ) at a simple zero ρ = 1/2 + iγ by a Cauchy integral over a small
/// circle, cross-checked against five-point central differences.
pub fn zeta_prime_at_zero(zero: &ZetaZero) -> Result<Cx> {
    if zero.multiplicity != 1 {
        return Err(Error::MultipleZero {
            gamma: zero.gamma,
            zeta_prime_mag: 0.0,
        });
    }
    let cauchy = zeta_prime_at_ordinate(zero.gamma, 1e-3)?;
    let central = zeta_prime_central(zero.gamma, 1e-3)?;
    let delta = (cauchy - central).norm();
    if delta > 1e-8 * (1.0 + cauchy.norm()) {
        return Err(Error::Inconsistency {
            what: format!("zeta'(rho) methods disagree at gamma = {}", zero.gamma),
            magnitude: delta,
        });
    }
    Ok(cauchy)
}

/// Cauchy-integral derivative with 32 trapezoid nodes on a circle of the
/// given radius.
pub fn zeta_prime_at_ordinate(gamma: f64, radius: f64) -> Result<Cx> {
    let rho = Cx::new(0.5, gamma);
    let n = 32usize;
    let mut acc = Cx::new(0.0, 0.0);
    for k in 0..n {
        let phi = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
        let dir = Cx::new(0.0, phi).exp();
        acc += zeta(rho + radius * dir)? / dir;
    }
    let value = acc / (n as f64 * radius);
    if value.norm() < MULTIPLE_ZERO_TOL {
        return Err(Error::MultipleZero {
            gamma,
            zeta_prime_mag: value.norm(),
        });
    }
    Ok(value)
}

pub(crate) fn zeta_prime_central(gamma: f64, h: f64) -> Result<Cx> {
    let rho = Cx::new(0.5, gamma);
    let f = |x: f64| zeta(rho + Cx::new(x, 0.0));
    Ok((-f(2.0 * h)? + 8.0 * f(h)? - 8.0 * f(-h)? + f(-2.0 * h)?) / (12.0 * h))
}

/// Block boundaries T_n for zero-sum conventions: midpoints of consecutive
/// ordinate gaps, skipping midpoints closer than 0.3 to a neighbor, thinned
/// so that T_n > n.
pub fn block_partition(ordinates: &[f64]) -> Vec<f64> {
    match ordinates.len() {
        0 => return vec![],
        1 => return vec![ordinates[0] + 1.0],
        _ => {}
    }
    let mut bounds: Vec<f64> = Vec::new();
    for w in ordinates.windows(2) {
        let half_gap = 0.5 * (w[1] - w[0]);
        if half_gap < 0.3 {
            continue;
        }
        let mid = 0.5 * (w[0] + w[1]);
        if mid > (bounds.len() + 1) as f64 {
            bounds.push(mid);
        }
    }
    bounds
}

/// Chi and completed-zeta residuals used by the functional-equation checks.
pub fn functional_equation_residual(s: Cx) -> Result<f64> {
    let lhs = zeta(s)?;
    let rhs = chi(s)? * zeta(Cx::new(1.0, 0.0) - s)?;
    Ok((lhs - rhs).norm() / (1.0 + lhs.norm()))
}

/// Relative residual of π^{-s/2}Γ(s/2)ζ(s) = π^{-(1-s)/2}Γ((1-s)/2)ζ(1-s).
pub fn completed_symmetry_residual(s: Cx) -> Result<f64> {
    let one = Cx::new(1.0, 0.0);
    let lhs = completed_factor(s)? * zeta(s)?;
    let rhs = completed_factor(one - s)? * zeta(one - s)?;
    Ok((lhs - rhs).norm() / (1.0 + lhs.norm().max(rhs.norm())))
}

/// Sampled minimum of |ζ| on the segment Im s = t, -1 ≤ Re s ≤ 2, the
/// working surrogate for the classical lower bound used when grouping
/// zero sums into blocks.
pub fn min_abs_zeta_on_block_line(t: f64, samples: usize) -> Result<f64> {
    let mut min = f64::INFINITY;
    for i in 0..=samples {
        let sigma = -1.0 + 3.0 * i as f64 / samples as f64;
        let v = zeta(Cx::new(sigma, t))?.norm();
        if v < min {
            min = v;
        }
    }
    Ok(min)
}

pub use specfun::PI;

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::io::Write as _;

    /// Independent Euler–Maclaurin oracle: different term count, corrections
    /// stopping at B₆.
    fn oracle_zeta(s: Cx) -> Cx {
        let n = 5_000usize;
        let nf = n as f64;
        let mut sum = Cx::new(0.0, 0.0);
        for k in 1..n {
            sum += (-s * (k as f64).ln()).exp();
        }
        let n_pow = (-s * nf.ln()).exp();
        sum += n_pow * nf / (s - 1.0) + 0.5 * n_pow;
        let coeffs = [1.0 / 12.0, -1.0 / 720.0, 1.0 / 30_240.0];
        let mut poch = s;
        let mut tail = n_pow / nf;
        for (k, c) in coeffs.iter().enumerate() {
            sum += *c * poch * tail;
            let j = 2.0 * (k as f64 + 1.0);
            poch *= (s + (j - 1.0)) * (s + j);
            tail /= nf * nf;
        }
        sum
    }

    #[test]
    fn zeta_at_two() {
        let v = zeta(Cx::new(2.0, 0.0)).unwrap();
        let exact = PI * PI / 6.0;
        assert!((v.re - exact).abs() < 1e-12 * exact);
        assert!(v.im.abs() < 1e-14);
    }

    #[test]
    fn zeta_at_minus_one_through_functional_equation() {
        let v = zeta(Cx::new(-1.0, 0.0)).unwrap();
        assert!((v.re + 1.0 / 12.0).abs() < 1e-12);
        assert!(v.im.abs() < 1e-14);
    }

    #[test]
    fn zeta_at_half_matches_oracle() {
        let v = zeta(Cx::new(0.5, 0.0)).unwrap();
        let o = oracle_zeta(Cx::new(0.5, 0.0));
        assert!((v - o).norm() < 1e-12);
        assert!((v.re - (-1.460_354_508_809_586_8)).abs() < 1e-12);
    }

    #[test]
    fn zeta_matches_oracle_at_height() {
        // Corners of the documented working envelope included.
        for s in [
            Cx::new(0.5, 30.0),
            Cx::new(2.0, 100.0),
            Cx::new(0.1, 55.5),
            Cx::new(6.0, 300.0),
            Cx::new(0.0, 250.0),
        ] {
            let v = zeta(s).unwrap();
            let o = oracle_zeta(s);
            assert!((v - o).norm() < 1e-11 * (1.0 + o.norm()), "at {s}");
        }
        // Left half-plane goes through the functional equation; compare
        // against the reflected oracle.
        let s = Cx::new(-4.0, 120.0);
        let o = chi(s).unwrap() * oracle_zeta(Cx::new(1.0, 0.0) - s);
        let v = zeta(s).unwrap();
        assert!((v - o).norm() < 1e-11 * (1.0 + o.norm()), "reflected at {s}");
    }

    #[test]
    fn zeta_pole_is_an_error() {
        assert!(matches!(zeta(Cx::new(1.0, 0.0)), Err(Error::ZetaPole)));
    }

    #[test]
    fn trivial_zeros_are_exact() {
        assert_eq!(zeta(Cx::new(-2.0, 0.0)).unwrap(), Cx::new(0.0, 0.0));
        assert_eq!(zeta(Cx::new(-4.0, 0.0)).unwrap(), Cx::new(0.0, 0.0));
    }

    #[test]
    fn functional_equation_on_random_strip_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let mut checked = 0;
        while checked < 100 {
            let s = Cx::new(rng.gen_range(-3.0..4.0), rng.gen_range(-40.0..40.0));
            if s.im.abs() < 0.3 || (s - Cx::new(1.0, 0.0)).norm() < 0.3 {
                continue;
            }
            assert!(
                functional_equation_residual(s).unwrap() <= 1e-10,
                "residual at {s}"
            );
            assert!(
                completed_symmetry_residual(s).unwrap() <= 1e-10,
                "completed residual at {s}"
            );
            checked += 1;
        }
    }

    #[test]
    fn hardy_z_is_small_at_first_zero() {
        assert!(hardy_z(14.134725).unwrap().abs() <= 1e-5);
    }

    #[test]
    fn hardy_z_definition_identity() {
        // Same product assembled from the direct theta path.
        let t = 10.0;
        let z = hardy_z(t).unwrap();
        let direct = (Cx::new(0.0, rs_theta_direct_for_test(t)).exp()
            * zeta(Cx::new(0.5, t)).unwrap())
        .re;
        assert!((z - direct).abs() < 1e-10);
    }

    fn rs_theta_direct_for_test(t: f64) -> f64 {
        crate::specfun::rs_theta_direct(t).unwrap()
    }

    #[test]
    fn hardy_z_realness_via_conjugate_path() {
        let t = 20.0;
        let z = zeta(Cx::new(0.5, t)).unwrap();
        let z_conj = zeta(Cx::new(0.5, -t)).unwrap();
        assert!((z.conj() - z_conj).norm() < 1e-12 * (1.0 + z.norm()));
    }

    #[test]
    fn find_zeros_to_thirty() {
        let table = find_zeros(30.0).unwrap();
        assert_eq!(table.len(), 3);
        // Independent pure bisection on the same sign data.
        let expected = [14.134725141734694, 21.022039638771554, 25.010857580145688];
        for (z, e) in table.zeros.iter().zip(expected) {
            assert!((z.gamma - e).abs() < 1e-8, "gamma {} vs {e}", z.gamma);
        }
        for z in &table.zeros {
            assert!(zeta(z.rho()).unwrap().norm() <= ZERO_RESIDUAL_TOL);
        }
    }

    #[test]
    fn find_zeros_empty_below_first_ordinate() {
        let table = find_zeros(14.0).unwrap();
        assert!(table.is_empty());
    }

    #[test]
    fn zeta_prime_dual_method_and_radius_independence() {
        let table = find_zeros(15.0).unwrap();
        let z = &table.zeros[0];
        let zp = zeta_prime_at_zero(z).unwrap();
        let r1 = zeta_prime_at_ordinate(z.gamma, 1e-3).unwrap();
        let r2 = zeta_prime_at_ordinate(z.gamma, 2e-3).unwrap();
        assert!((r1 - r2).norm() < 1e-8 * (1.0 + r1.norm()));
        assert!((zp - r1).norm() < 1e-12);
        // Reflection symmetry: the conjugate zero carries the conjugate slope.
        let central_conj = zeta_prime_central_for_test(-z.gamma);
        assert!((central_conj - zp.conj()).norm() < 1e-7 * (1.0 + zp.norm()));
    }

    fn zeta_prime_central_for_test(gamma: f64) -> Cx {
        let rho = Cx::new(0.5, gamma);
        let h = 1e-3;
        let f = |x: f64| zeta(rho + Cx::new(x, 0.0)).unwrap();
        (-f(2.0 * h) + 8.0 * f(h) - 8.0 * f(-h) + f(-2.0 * h)) / (12.0 * h)
    }

    #[test]
    fn block_partition_examples() {
        let bounds = block_partition(&[14.13, 21.02]);
        assert_eq!(bounds.len(), 1);
        assert!((bounds[0] - 17.575).abs() < 1e-9);
        let single = block_partition(&[14.13]);
        assert_eq!(single, vec![15.13]);
    }

    #[test]
    fn zero_table_io_roundtrip_and_validation() {
        let dir = tempfile::tempdir().unwrap();
        let good = dir.path().join("good.txt");
        std::fs::write(&good, "# one known ordinate\n14.134725141734695\n").unwrap();
        let table = ZeroTable::load(&good).unwrap();
        assert_eq!(table.len(), 1);
        assert_eq!(table.source, Source::Ingested);

        let empty = dir.path().join("empty.txt");
        std::fs::write(&empty, "").unwrap();
        assert!(ZeroTable::load(&empty).unwrap().is_empty());

        let bad = dir.path().join("bad.txt");
        std::fs::write(&bad, "3.0\n").unwrap();
        assert!(matches!(
            ZeroTable::load(&bad),
            Err(Error::ZeroValidation { .. })
        ));

        let garbled = dir.path().join("garbled.txt");
        let mut f = std::fs::File::create(&garbled).unwrap();
        writeln!(f, "14.134725141734695").unwrap();
        writeln!(f, "not-a-number").unwrap();
        drop(f);
        assert!(matches!(
            ZeroTable::load(&garbled),
            Err(Error::Parse { line: 2, .. })
        ));

        let out = dir.path().join("cache.txt");
        table.save_cache(&out, 1e-10).unwrap();
        let reloaded = ZeroTable::load_cache(&out, 14.2).unwrap().unwrap();
        assert_eq!(reloaded.len(), 1);
        assert!(ZeroTable::load_cache(&out, 100.0).unwrap().is_none());
    }
}
