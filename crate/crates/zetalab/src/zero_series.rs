//! Series over the nontrivial zeros: the residue interpolation series
//! Σ_ρ G(ρ)/ζ'(ρ)·ζ(Z)/(Z-ρ), the sum-zero identity Σ_ρ G(ρ)/ζ'(ρ) = 0,
//! Ramanujan's Möbius/zero identity, and the biorthogonality of the dual
//! system ζ(s)/((s-ρ)ζ'(ρ)π^{-ρ/2}Γ(ρ/2)).
//!
//! All zero sums follow the block convention: contributions are grouped by
//! the partition T_n (heights avoiding zeros) and conjugate pairs are summed
//! together inside each block, so real-input traces stay real. The formulas
//! are written for simple zeros; tables carrying a suspected multiple zero
//! are rejected.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::specfun::{completed_factor, log_gamma, Cx};
use crate::zeta::{zeta, zeta_prime_central, ZeroTable, ZetaZero};

/// Möbius values μ(1..=n), materialized.
#[derive(Debug, Clone)]
pub struct MoebiusTable {
    pub n: u64,
    mu: Vec<i8>,
}

const MATERIALIZE_LIMIT: u64 = 1 << 28;
const SEGMENT: u64 = 1 << 20;

impl MoebiusTable {
    pub fn mu(&self, k: u64) -> i8 {
        self.mu[(k - 1) as usize]
    }

    pub fn squarefree_count(&self) -> u64 {
        self.mu.iter().filter(|&&m| m != 0).count() as u64
    }

    /// Σ_{k≤n} μ(k), the Mertens function at the table limit.
    pub fn mertens(&self) -> i64 {
        self.mu.iter().map(|&m| m as i64).sum()
    }
}

/// Segmented Möbius sieve: smallest-prime-factor elimination per block of
/// 2^20, so only primes up to √n are held in addition to the output.
pub fn moebius_sieve(n: u64) -> Result<MoebiusTable> {
    if n == 0 {
        return Err(Error::Domain("moebius_sieve requires n >= 1".into()));
    }
    if n > MATERIALIZE_LIMIT {
        return Err(Error::MemoryBudget {
            requested: n,
            limit: MATERIALIZE_LIMIT,
        });
    }
    let mut mu = Vec::with_capacity(n as usize);
    moebius_stream(n, |_, segment| mu.extend_from_slice(segment))?;
    Ok(MoebiusTable { n, mu })
}

/// Streams μ over [1, n] in segments; `sink(offset, values)` receives the
/// values for integers offset+1 ..= offset+values.len().
pub fn moebius_stream(n: u64, mut sink: impl FnMut(u64, &[i8])) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("moebius_stream requires n >= 1".into()));
    }
    let root = (n as f64).sqrt() as u64 + 1;
    let primes = small_primes(root);
    let mut lo = 1u64;
    let mut mu = vec![1i8; SEGMENT as usize];
    let mut rem = vec![1u64; SEGMENT as usize];
    while lo <= n {
        let hi = (lo + SEGMENT - 1).min(n);
        let len = (hi - lo + 1) as usize;
        for i in 0..len {
            mu[i] = 1;
            rem[i] = lo + i as u64;
        }
        for &p in &primes {
            if p * p > hi {
                break;
            }
            let mut m = lo.div_ceil(p) * p;
            while m <= hi {
                let i = (m - lo) as usize;
                let mut count = 0;
                while rem[i].is_multiple_of(p) {
                    rem[i] /= p;
                    count += 1;
                }
                if count >= 2 {
                    mu[i] = 0;
                } else if count == 1 {
                    mu[i] = -mu[i];
                }
                m += p;
            }
        }
        for i in 0..len {
            if rem[i] > 1 {
                mu[i] = -mu[i];
            }
        }
        sink(lo - 1, &mu[..len]);
        lo = hi + 1;
    }
    Ok(())
}

fn small_primes(limit: u64) -> Vec<u64> {
    let mut is_composite = vec![false; (limit + 1) as usize];
    let mut primes = Vec::new();
    for p in 2..=limit {
        if !is_composite[p as usize] {
            primes.push(p);
            let mut m = p * p;
            while m <= limit {
                is_composite[m as usize] = true;
                m += p;
            }
        }
    }
    primes
}

/// Left side of Ramanujan's identity with b = π/a:
/// √a Σ μ(n)/n e^{-(a/n)²} - √b Σ μ(n)/n e^{-(b/n)²}, truncated at N, with
/// an empirical N^{-1/2} tail-noise estimate fitted from the N/2-vs-N
/// difference. The estimate is a noise model, not a proven bound.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct RamanujanLhs {
    pub value: f64,
    pub value_at_half: f64,
    pub tail_estimate: f64,
}

pub fn ramanujan_lhs(a: f64, n: u64) -> Result<RamanujanLhs> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::Domain("ramanujan_lhs requires a > 0".into()));
    }
    if n < 100_000 {
        return Err(Error::Domain(format!(
            "ramanujan_lhs needs N >= 1e5 for the tail model, got {n}"
        )));
    }
    let b = std::f64::consts::PI / a;
    let (sa, sb) = (a.sqrt(), b.sqrt());
    let half = n / 2;
    let mut value = 0.0f64;
    let mut value_at_half = 0.0f64;
    moebius_stream(n, |offset, seg| {
        for (i, &m) in seg.iter().enumerate() {
            if m == 0 {
                continue;
            }
            let k = (offset + i as u64 + 1) as f64;
            let term = m as f64 / k
                * (sa * (-(a / k) * (a / k)).exp() - sb * (-(b / k) * (b / k)).exp());
            value += term;
            if offset + i as u64 + 1 == half {
                value_at_half = value;
            }
        }
    })?;
    let delta = (value - value_at_half).abs();
    let tail_estimate = delta / (std::f64::consts::SQRT_2 - 1.0);
    Ok(RamanujanLhs {
        value,
        value_at_half,
        tail_estimate,
    })
}

/// Right side: -(1/(2√b)) Σ_ρ b^ρ Γ((1-ρ)/2)/ζ'(ρ), summed in conjugate
/// pairs over the table. Γ((1-ρ)/2) decays like e^{-πγ/4}, so a few dozen
/// zeros pin the tail far below 1e-10.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct RamanujanRhs {
    pub value: f64,
    pub tail_bound: f64,
    pub terms: usize,
}

pub fn ramanujan_rhs(b: f64, zeros: &ZeroTable) -> Result<RamanujanRhs> {
    if !(b > 0.0 && b.is_finite()) {
        return Err(Error::Domain("ramanujan_rhs requires b > 0".into()));
    }
    if zeros.is_empty() {
        return Err(Error::Domain("ramanujan_rhs needs a nonempty zero table".into()));
    }
    let mut acc = 0.0f64;
    let mut last_term = 0.0f64;
    for z in &zeros.zeros {
        last_term = 2.0 * ramanujan_term(b, z)?;
        acc += last_term;
    }
    let scale = -1.0 / (2.0 * b.sqrt());
    Ok(RamanujanRhs {
        value: scale * acc,
        tail_bound: last_term.abs(),
        terms: zeros.len(),
    })
}

/// Re(b^ρ Γ((1-ρ)/2)/ζ'(ρ)) for ρ = 1/2 + iγ; the conjugate zero doubles
/// the real part.
fn ramanujan_term(b: f64, z: &ZetaZero) -> Result<f64> {
    if z.multiplicity != 1 {
        return Err(Error::MultipleZero {
            gamma: z.gamma,
            zeta_prime_mag: z.zeta_prime.norm(),
        });
    }
    let rho = z.rho();
    let one = Cx::new(1.0, 0.0);
    let term = (rho * b.ln() + log_gamma((one - rho) / 2.0)?).exp() / z.zeta_prime;
    Ok(term.re)
}

/// Partial-sum trace of a series over the zeros, grouped by the block
/// partition.
#[derive(Debug, Clone, Serialize)]
pub struct ZeroSeriesTrace {
    /// Cumulative value after each block.
    pub block_partials: Vec<Cx>,
    /// Magnitude of each block's own contribution (absolute-convergence
    /// diagnostic).
    pub block_abs: Vec<f64>,
    pub value: Cx,
    pub tail_estimate: f64,
    pub convention: String,
    pub caveat: Option<String>,
}

impl ZeroSeriesTrace {
    fn from_terms(terms: &[Cx], gammas: &[f64], bounds: &[f64]) -> Self {
        let mut block_partials = Vec::new();
        let mut block_abs = Vec::new();
        let mut acc = Cx::new(0.0, 0.0);
        let mut block_acc = Cx::new(0.0, 0.0);
        let mut bound_iter = bounds.iter().peekable();
        for (term, &gamma) in terms.iter().zip(gammas) {
            while let Some(&&b) = bound_iter.peek() {
                if gamma > b {
                    block_partials.push(acc);
                    block_abs.push(block_acc.norm());
                    block_acc = Cx::new(0.0, 0.0);
                    bound_iter.next();
                } else {
                    break;
                }
            }
            acc += term;
            block_acc += term;
        }
        block_partials.push(acc);
        block_abs.push(block_acc.norm());
        let tail_estimate = block_abs.last().copied().unwrap_or(0.0);
        ZeroSeriesTrace {
            block_partials,
            block_abs,
            value: acc,
            tail_estimate,
            convention: format!("midpoint-blocks({})", bounds.len()),
            caveat: None,
        }
    }
}

fn check_simple(zeros: &ZeroTable) -> Result<()> {
    for z in &zeros.zeros {
        if z.multiplicity != 1 {
            return Err(Error::MultipleZero {
                gamma: z.gamma,
                zeta_prime_mag: z.zeta_prime.norm(),
            });
        }
    }
    Ok(())
}

/// Σ_ρ (G(ρ)/ζ'(ρ))·ζ(Z)/(Z-ρ) with G sampled at the table's zeros.
///
/// `g_at_zeros[k]` is G at the upper zero ρ_k; the conjugate zero enters
/// through the reflection G(ρ̄) = conj G(ρ) valid for transforms of
/// real-valued functions.
pub fn residue_series(g_at_zeros: &[Cx], z: Cx, zeros: &ZeroTable) -> Result<ZeroSeriesTrace> {
    if g_at_zeros.len() != zeros.len() {
        return Err(Error::Domain(format!(
            "sample list has {} entries for {} zeros",
            g_at_zeros.len(),
            zeros.len()
        )));
    }
    check_simple(zeros)?;
    if (z - Cx::new(1.0, 0.0)).norm() < 1e-9 {
        return Err(Error::Domain("residue series is undefined at Z = 1".into()));
    }
    for zz in &zeros.zeros {
        if (z - zz.rho()).norm() < 1e-6 || (z - zz.rho().conj()).norm() < 1e-6 {
            return Err(Error::ZCollision {
                z,
                gamma: zz.gamma,
            });
        }
    }
    let zeta_z = zeta(z)?;
    let mut terms = Vec::with_capacity(zeros.len());
    let mut gammas = Vec::with_capacity(zeros.len());
    for (g, zz) in g_at_zeros.iter().zip(&zeros.zeros) {
        let c = g / zz.zeta_prime;
        let upper = c / (z - zz.rho());
        let lower = (c / (z.conj() - zz.rho())).conj();
        terms.push(zeta_z * (upper + lower));
        gammas.push(zz.gamma);
    }
    Ok(ZeroSeriesTrace::from_terms(&terms, &gammas, &zeros.block_bounds))
}

/// Σ_ρ G(ρ)/ζ'(ρ) in the same block convention.
pub fn sum_over_zeros_check(g_at_zeros: &[Cx], zeros: &ZeroTable) -> Result<ZeroSeriesTrace> {
    if g_at_zeros.len() != zeros.len() {
        return Err(Error::Domain(format!(
            "sample list has {} entries for {} zeros",
            g_at_zeros.len(),
            zeros.len()
        )));
    }
    check_simple(zeros)?;
    let mut terms = Vec::with_capacity(zeros.len());
    let mut gammas = Vec::with_capacity(zeros.len());
    for (g, zz) in g_at_zeros.iter().zip(&zeros.zeros) {
        let c = g / zz.zeta_prime;
        terms.push(c + c.conj());
        gammas.push(zz.gamma);
    }
    Ok(ZeroSeriesTrace::from_terms(&terms, &gammas, &zeros.block_bounds))
}

/// One entry of the biorthogonality matrix: the completed Mellin transform
/// of the dual function of ρ_i, evaluated at ρ_j:
///
///   π^{-s/2}Γ(s/2) ζ(s) / ((s-ρ_i) ζ'(ρ_i) π^{-ρ_i/2}Γ(ρ_i/2))  at s = ρ_j,
///
/// with the removable singularity at i = j evaluated through an independent
/// ζ'(ρ) estimate, so the diagonal measures the agreement of two derivative
/// routes.
pub fn biorthogonality_check(zi: &ZetaZero, zj: &ZetaZero) -> Result<Cx> {
    for z in [zi, zj] {
        if z.multiplicity != 1 {
            return Err(Error::MultipleZero {
                gamma: z.gamma,
                zeta_prime_mag: z.zeta_prime.norm(),
            });
        }
    }
    let denominator = zi.zeta_prime * completed_factor(zi.rho())?;
    if (zi.gamma - zj.gamma).abs() < 1e-12 {
        // Removable singularity: the limit is ζ'(ρ)/ζ'_stored(ρ), taken
        // with an independent derivative route (central differences against
        // the stored Cauchy-integral value).
        let fresh = zeta_prime_central(zi.gamma, 1e-3)?;
        return Ok(fresh * completed_factor(zi.rho())? / denominator);
    }
    let rho_j = zj.rho();
    Ok(completed_factor(rho_j)? * zeta(rho_j)? / ((rho_j - zi.rho()) * denominator))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::block_partition;

    #[test]
    fn moebius_small_values() {
        let table = moebius_sieve(100).unwrap();
        assert_eq!(table.mu(1), 1);
        assert_eq!(table.mu(2), -1);
        assert_eq!(table.mu(4), 0);
        assert_eq!(table.mu(6), 1);
        assert_eq!(table.mu(30), -1);
        assert_eq!(table.mu(36), 0);
    }

    #[test]
    fn squarefree_density_at_one_million() {
        let n = 1_000_000u64;
        let table = moebius_sieve(n).unwrap();
        let count = table.squarefree_count() as f64;
        let expected = 6.0 / (std::f64::consts::PI * std::f64::consts::PI) * n as f64;
        assert!(
            (count - expected).abs() < 2.0 * (n as f64).sqrt(),
            "squarefree count {count} vs {expected}"
        );
    }

    #[test]
    fn moebius_budget_error() {
        assert!(matches!(
            moebius_sieve(MATERIALIZE_LIMIT + 1),
            Err(Error::MemoryBudget { .. })
        ));
    }

    #[test]
    fn ramanujan_lhs_symmetric_point_is_zero() {
        // b = π/a rounds one ulp away from a = √π, so the per-term
        // cancellation is exact only to rounding.
        let a = std::f64::consts::PI.sqrt();
        let lhs = ramanujan_lhs(a, 100_000).unwrap();
        assert!(lhs.value.abs() <= 1e-15, "value {}", lhs.value);
    }

    #[test]
    fn ramanujan_lhs_antisymmetry() {
        let l1 = ramanujan_lhs(1.0, 100_000).unwrap();
        let l2 = ramanujan_lhs(std::f64::consts::PI, 100_000).unwrap();
        assert_eq!(l1.value, -l2.value);
    }

    #[test]
    fn ramanujan_lhs_self_consistency() {
        let small = ramanujan_lhs(1.0, 250_000).unwrap();
        let large = ramanujan_lhs(1.0, 1_000_000).unwrap();
        assert!(
            (small.value - large.value).abs() <= 3.0 * (small.tail_estimate + large.tail_estimate),
            "{} vs {} (tails {:.2e}, {:.2e})",
            small.value,
            large.value,
            small.tail_estimate,
            large.tail_estimate
        );
    }

    #[test]
    fn trace_blocks_group_by_partition() {
        let gammas = [14.13, 21.02, 25.01];
        let bounds = block_partition(&gammas);
        let zeros = fake_table(&gammas, &bounds);
        let samples = vec![Cx::new(1.0, 0.0); 3];
        let trace = sum_over_zeros_check(&samples, &zeros).unwrap();
        assert_eq!(trace.block_partials.len(), bounds.len() + 1);
        // Real inputs give real partial sums.
        for p in &trace.block_partials {
            assert!(p.im.abs() < 1e-12);
        }
    }

    #[test]
    fn residue_series_linearity() {
        let gammas = [14.134725141734694, 21.022039638771554];
        let bounds = block_partition(&gammas);
        let zeros = fake_table(&gammas, &bounds);
        let g1 = vec![Cx::new(0.3, 0.1), Cx::new(-0.2, 0.05)];
        let g2 = vec![Cx::new(-0.1, 0.4), Cx::new(0.6, -0.3)];
        let z = Cx::new(0.5, 0.0);
        let (alpha, beta) = (1.7, -0.4);
        let combo: Vec<Cx> = g1
            .iter()
            .zip(&g2)
            .map(|(x, y)| alpha * x + beta * y)
            .collect();
        let t1 = residue_series(&g1, z, &zeros).unwrap();
        let t2 = residue_series(&g2, z, &zeros).unwrap();
        let tc = residue_series(&combo, z, &zeros).unwrap();
        for ((p1, p2), pc) in t1
            .block_partials
            .iter()
            .zip(&t2.block_partials)
            .zip(&tc.block_partials)
        {
            assert!((alpha * p1 + beta * p2 - pc).norm() < 1e-12);
        }
    }

    #[test]
    fn residue_series_rejects_collisions() {
        let gammas = [14.134725141734694];
        let zeros = fake_table(&gammas, &[15.13]);
        let samples = vec![Cx::new(1.0, 0.0)];
        assert!(matches!(
            residue_series(&samples, Cx::new(0.5, 14.134725141734694), &zeros),
            Err(Error::ZCollision { .. })
        ));
        assert!(residue_series(&samples, Cx::new(1.0, 0.0), &zeros).is_err());
    }

    #[test]
    fn all_zero_samples_give_zero_series() {
        let gammas = [14.134725141734694, 21.022039638771554];
        let zeros = fake_table(&gammas, &block_partition(&gammas));
        let samples = vec![Cx::new(0.0, 0.0); 2];
        let trace = residue_series(&samples, Cx::new(0.5, 0.0), &zeros).unwrap();
        assert_eq!(trace.value, Cx::new(0.0, 0.0));
    }

    #[test]
    fn injected_decay_gives_decreasing_block_magnitudes() {
        // Samples with a built-in decay scale: once the ordinates pass it,
        // the per-block contributions must shrink monotonically.
        let gammas: Vec<f64> = (0..20).map(|k| 14.0 + 3.0 * k as f64).collect();
        let bounds = block_partition(&gammas);
        let zeros = fake_table(&gammas, &bounds);
        let samples: Vec<Cx> = gammas.iter().map(|g| Cx::new((-g / 5.0).exp(), 0.0)).collect();
        let trace = residue_series(&samples, Cx::new(0.75, 0.0), &zeros).unwrap();
        for w in trace.block_abs.windows(2).skip(1) {
            assert!(w[1] < w[0], "block magnitudes not decreasing: {:?}", trace.block_abs);
        }
    }

    fn fake_table(gammas: &[f64], bounds: &[f64]) -> ZeroTable {
        // Synthetic table with plausible slopes; biorthogonality tests use
        // real tables, these only exercise the series bookkeeping.
        ZeroTable {
            zeros: gammas
                .iter()
                .enumerate()
                .map(|(i, &gamma)| ZetaZero {
                    index: i + 1,
                    gamma,
                    multiplicity: 1,
                    zeta_prime: Cx::new(0.8, 1.0 + i as f64 * 0.3),
                })
                .collect(),
            source: crate::zeta::Source::Computed,
            height_limit: gammas.last().copied().unwrap_or(0.0) + 1.0,
            block_bounds: bounds.to_vec(),
        }
    }
}
