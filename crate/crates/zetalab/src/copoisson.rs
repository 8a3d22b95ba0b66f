//! Summation identities: Poisson with a scaling parameter, the Müntz
//! formula, and the co-Poisson intertwining formula with its Mellin
//! factorization ζ(s)·ĝ(s).
//!
//! For an even g supported in [a, A] (rescaled so aA = 1) the co-Poisson sum
//! is F(t) = Σ_{n≥1} g(t/n)/n - ĝ(1); it equals the constant -ĝ(1) on (0, a)
//! and its cosine transform is the dual sum M(t) = Σ_{m≥1} g(m/t)/t - ĝ(0),
//! constant -ĝ(0) on the same interval. The (0, a) plateau is always handled
//! analytically: its Mellin contribution is -ĝ(1)·a^{1-s}/(1-s) and its
//! cosine contribution is -ĝ(1)·sin(2πau)/(πu).

use std::time::Instant;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::mellin::{mellin_right, SampledRule, TestFunction};
use crate::quad;
use crate::report::IdentityReport;
use crate::specfun::{Cx, PI, TWO_PI};
use crate::zeta::zeta;

const TERM_THRESHOLD: f64 = 1e-16;
const TERM_CAP: usize = 100_000;

/// |Σ_{n∈ℤ} F₊(φ)(nu) - (1/u)Σ_{m∈ℤ} φ(m/u)|, both sums truncated when the
/// terms fall below 1e-16.
pub fn poisson_residual(phi: &TestFunction, u: f64) -> Result<f64> {
    if !(u > 0.0 && u.is_finite()) {
        return Err(Error::Domain(format!("poisson_residual requires u > 0, got {u}")));
    }
    // Function side: (1/u)(φ(0) + 2 Σ_{m≥1} φ(m/u)).
    let mut function_side = phi.eval(0.0);
    let mut m = 1usize;
    loop {
        let term = 2.0 * phi.eval(m as f64 / u);
        function_side += term;
        let beyond_support = match phi.support() {
            Some((_, hi)) => m as f64 / u > hi,
            None => term.abs() < TERM_THRESHOLD * (1.0 + function_side.abs()),
        };
        if beyond_support {
            break;
        }
        m += 1;
        if m > TERM_CAP {
            return Err(Error::TruncationBudget {
                terms: m,
                last_term: term,
            });
        }
    }
    function_side /= u;
    // Transform side: F₊(φ)(0) + 2 Σ_{n≥1} F₊(φ)(nu). Closed forms where
    // they exist; otherwise one shared quadrature rule fine enough for the
    // largest multiple reached before the terms drop below threshold.
    let transform_side = match phi.cosine_closed_form(0.0) {
        Some(_) => {
            let mut acc = phi.cosine_closed_form(0.0).unwrap();
            let mut consecutive_small = 0usize;
            let mut n = 1usize;
            loop {
                let term = 2.0 * phi.cosine_closed_form(n as f64 * u).unwrap();
                acc += term;
                if term.abs() < TERM_THRESHOLD * (1.0 + acc.abs()) {
                    consecutive_small += 1;
                    if consecutive_small >= 3 {
                        break;
                    }
                } else {
                    consecutive_small = 0;
                }
                n += 1;
                if n > TERM_CAP {
                    return Err(Error::TruncationBudget {
                        terms: n,
                        last_term: term,
                    });
                }
            }
            acc
        }
        None => {
            use rayon::prelude::*;
            let (lo, hi) = match phi.support() {
                Some(range) => range,
                None => (0.0, phi.decay_cutoff()),
            };
            // Bump transforms decay like exp(-c sqrt(u)); the rule covers
            // multiples up to u_cap, past which terms sit below 1e-16.
            let u_cap = 1500.0;
            let eval = |t: f64| phi.eval(t);
            let rule = SampledRule::new(&eval, lo, hi, 1.0 / (4.0 * u_cap));
            let mut acc = rule.cosine(0.0);
            let scale = 1.0 + acc.abs();
            let chunk = 128usize;
            let mut n0 = 1usize;
            'outer: loop {
                let terms: Vec<f64> = (n0..n0 + chunk)
                    .into_par_iter()
                    .map(|n| 2.0 * rule.cosine(n as f64 * u))
                    .collect();
                for (i, term) in terms.iter().enumerate() {
                    acc += term;
                    if term.abs() < TERM_THRESHOLD * scale
                        && terms[i.saturating_sub(1)].abs() < TERM_THRESHOLD * scale
                        && i >= 2
                    {
                        break 'outer;
                    }
                }
                n0 += chunk;
                if n0 > TERM_CAP {
                    return Err(Error::TruncationBudget {
                        terms: n0,
                        last_term: *terms.last().unwrap(),
                    });
                }
                if n0 as f64 * u > u_cap {
                    break;
                }
            }
            acc
        }
    };
    Ok((transform_side - function_side).abs())
}

/// The Müntz-formula integrand Σ_{n≥1} φ(nt) - (∫₀^∞ φ)/t with the integral
/// computed once at construction.
pub struct ModifiedPoissonSum<'a> {
    phi: &'a TestFunction,
    pub integral: f64,
}

impl<'a> ModifiedPoissonSum<'a> {
    pub fn new(phi: &'a TestFunction) -> Result<Self> {
        let integral = mellin_right(phi, Cx::new(0.0, 0.0))?.re;
        Ok(ModifiedPoissonSum { phi, integral })
    }

    pub fn eval(&self, t: f64) -> Result<f64> {
        if !(t > 0.0) {
            return Err(Error::Domain("modified Poisson sum requires t > 0".into()));
        }
        let mut sum = 0.0;
        match self.phi.support() {
            Some((_, hi)) => {
                let n_max = (hi / t).floor() as usize;
                for n in 1..=n_max {
                    sum += self.phi.eval(n as f64 * t);
                }
            }
            None => {
                let mut n = 1usize;
                loop {
                    let term = self.phi.eval(n as f64 * t);
                    sum += term;
                    if term.abs() < TERM_THRESHOLD * (1.0 + sum.abs()) {
                        break;
                    }
                    n += 1;
                    if n > TERM_CAP {
                        return Err(Error::TruncationBudget {
                            terms: n,
                            last_term: term,
                        });
                    }
                }
            }
        }
        Ok(sum - self.integral / t)
    }
}

pub fn modified_poisson_sum(phi: &TestFunction, t: f64) -> Result<f64> {
    ModifiedPoissonSum::new(phi)?.eval(t)
}

/// Müntz formula at one point of the critical strip:
/// ζ(s)·∫φ(t)t^{s-1}dt against ∫(modified Poisson sum)(t)·t^{s-1}dt.
pub fn muntz_check(phi: &TestFunction, s: Cx) -> Result<IdentityReport> {
    let start = Instant::now();
    if !(s.re > 1e-12 && s.re < 1.0 - 1e-12) {
        return Err(Error::Domain(format!(
            "Müntz formula needs 0 < Re s < 1, got {s}"
        )));
    }
    let (_, big_a) = phi
        .support()
        .ok_or_else(|| Error::Domain("muntz_check expects a compactly supported φ".into()))?;
    let one = Cx::new(1.0, 0.0);
    // Left Mellin ∫φ t^{s-1} dt is the right Mellin at 1-s.
    let lhs = zeta(s)? * mellin_right(phi, one - s)?;
    let msum = ModifiedPoissonSum::new(phi)?;
    // Below t_lo the modified sum is an exponentially small cancellation;
    // probe downward until it is negligible against the quadrature target.
    let mut t_lo = phi.support().map(|(a, _)| a).unwrap_or(0.5);
    let scale = 1.0 + msum.integral.abs();
    let mut probes = 0;
    while msum.eval(t_lo)?.abs() > 1e-13 * scale {
        t_lo *= 0.5;
        probes += 1;
        if probes > 24 {
            return Err(Error::GridResolution(format!(
                "modified sum still {:.2e} at t = {t_lo:.3e}",
                msum.eval(t_lo)?.abs()
            )));
        }
    }
    let im = s.im.abs();
    let width = move |t: f64| {
        if im < 1e-9 {
            f64::INFINITY
        } else {
            PI * t / (2.0 * im)
        }
    };
    let cuts = quad::adaptive_cuts(t_lo, big_a, (big_a - t_lo) / 16.0, width);
    let integrand = |t: f64| -> Complex64 {
        let v = msum.eval(t).unwrap_or(f64::NAN);
        v * ((s - 1.0) * t.ln()).exp()
    };
    let (main, doublings) = quad::refine_to_tolerance(&integrand, cuts, 1e-12, 1e-14, 12)?;
    // Beyond the support the sum is exactly -(∫φ)/t, integrable in closed
    // form: ∫_A^∞ -(I/t) t^{s-1} dt = I·A^{s-1}/(s-1).
    let tail = msum.integral * ((s - one) * big_a.ln()).exp() / (s - one);
    let rhs = main + tail;
    let mut report = IdentityReport::new("muntz").with_params(serde_json::json!({
        "s": [s.re, s.im],
        "support": phi.support().map(|(a, b)| vec![a, b]),
    }));
    report.push(s, lhs, rhs, (lhs - rhs).norm());
    report.budget = format!("t_lo={t_lo:.3e}, doublings={doublings}");
    report.runtime_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// A co-Poisson element: the function F(t) = Σ g(t/n)/n - ĝ(1) built from an
/// even g supported in [a, A], rescaled so that aA = 1.
#[derive(Debug, Clone)]
pub struct CoPoissonElement {
    g: TestFunction,
    support: (f64, f64),
    /// -ĝ(1), the value of F on (0, a).
    pub c_low: f64,
    /// -ĝ(0), the value of F₊(F) on (0, a).
    pub c_dual: f64,
    pub n_max: usize,
}

impl CoPoissonElement {
    /// Rescales g to the normalized support (aA = 1) and computes both
    /// plateau constants.
    pub fn new(g: &TestFunction) -> Result<Self> {
        let (a, big_a) = g
            .support()
            .ok_or_else(|| Error::Domain("co-Poisson elements need compact support".into()))?;
        let c = (a * big_a).sqrt();
        let g = if (c - 1.0).abs() > 1e-12 {
            g.scaled(c)?
        } else {
            g.clone()
        };
        Self::new_unscaled(&g)
    }

    /// Uses the support exactly as given (for dilation experiments); the
    /// plateau constants still refer to (0, a).
    pub fn new_unscaled(g: &TestFunction) -> Result<Self> {
        let support = g
            .support()
            .ok_or_else(|| Error::Domain("co-Poisson elements need compact support".into()))?;
        let c_low = -mellin_right(g, Cx::new(1.0, 0.0))?.re;
        let c_dual = -mellin_right(g, Cx::new(0.0, 0.0))?.re;
        Ok(CoPoissonElement {
            g: g.clone(),
            support,
            c_low,
            c_dual,
            n_max: 1_000_000,
        })
    }

    pub fn function(&self) -> &TestFunction {
        &self.g
    }

    pub fn support(&self) -> (f64, f64) {
        self.support
    }

    /// F(t) = Σ_{n≥1} g(t/n)/n - ĝ(1); only n with t/n ∈ [a, A] contribute.
    pub fn eval(&self, t: f64) -> f64 {
        let (a, big_a) = self.support;
        let mut sum = 0.0;
        if t > 0.0 {
            let n_lo = (t / big_a).ceil().max(1.0) as usize;
            let n_hi = (t / a).floor() as usize;
            for n in n_lo..=n_hi.min(self.n_max) {
                sum += self.g.eval(t / n as f64) / n as f64;
            }
        }
        sum + self.c_low
    }

    /// The dual sum M(t) = Σ_{m≥1} g(m/t)/t - ĝ(0), which is F₊(F).
    pub fn eval_dual(&self, t: f64) -> Result<f64> {
        let (a, big_a) = self.support;
        let mut sum = 0.0;
        if t > 0.0 {
            let m_lo = (a * t).ceil().max(1.0) as usize;
            let m_hi = (big_a * t).floor() as usize;
            if m_hi.saturating_sub(m_lo) + 1 > self.n_max {
                return Err(Error::TruncationBudget {
                    terms: m_hi - m_lo + 1,
                    last_term: f64::NAN,
                });
            }
            for m in m_lo..=m_hi {
                sum += self.g.eval(m as f64 / t) / t;
            }
        }
        Ok(sum + self.c_dual)
    }

    /// ζ(s)·ĝ(s): the factored Mellin transform of F.
    pub fn mellin_factored(&self, s: Cx) -> Result<Cx> {
        Ok(zeta(s)? * mellin_right(&self.g, s)?)
    }

    /// Mellin transform of F by direct quadrature on (0, ∞): the (0, a)
    /// plateau contributes -ĝ(1)·a^{1-s}/(1-s) in closed form, the rest is
    /// integrated until F has decayed below the tail threshold.
    pub fn mellin_direct(&self, s: Cx) -> Result<Cx> {
        Ok(self.mellin_direct_many(&[s], 1e-13)?[0])
    }

    /// Direct Mellin at several strip points from one shared sampling of F.
    pub fn mellin_direct_many(&self, s_list: &[Cx], tail_threshold: f64) -> Result<Vec<Cx>> {
        use rayon::prelude::*;
        if s_list
            .iter()
            .any(|s| !(s.re > 1e-12 && s.re < 1.0 - 1e-12))
        {
            return Err(Error::Domain(
                "direct Mellin of a co-Poisson sum needs 0 < Re s < 1".into(),
            ));
        }
        let (a, _) = self.support;
        let one = Cx::new(1.0, 0.0);
        let t_hi = self.decay_cutoff(tail_threshold)?;
        let im_max = s_list.iter().fold(0.0f64, |m, s| m.max(s.im.abs()));
        let width = move |t: f64| {
            if im_max < 1e-9 {
                f64::INFINITY
            } else {
                PI * t / (2.0 * im_max)
            }
        };
        let cuts = quad::adaptive_cuts(a, t_hi, 0.5, width);
        let eval = |t: f64| self.eval(t);
        let rule = SampledRule::on_cuts(&eval, &cuts);
        Ok(s_list
            .par_iter()
            .map(|&s| {
                let plateau = self.c_low * ((one - s) * a.ln()).exp() / (one - s);
                plateau + rule.mellin(s)
            })
            .collect())
    }

    /// Smallest probed T with |F| below the threshold from there on.
    fn decay_cutoff(&self, threshold: f64) -> Result<f64> {
        let (_, big_a) = self.support;
        let scale = 1.0 + self.c_low.abs();
        let mut t = 8.0 * big_a;
        let mut tries = 0;
        loop {
            let probe = (0..8).all(|i| {
                self.eval(t * (1.0 + i as f64 / 11.0)).abs() < threshold * scale
            });
            if probe {
                return Ok(t);
            }
            t *= 1.6;
            tries += 1;
            if tries > 24 {
                return Err(Error::GridResolution(format!(
                    "co-Poisson sum has not decayed below {threshold:.1e} by t = {t:.3e}"
                )));
            }
        }
    }

    /// Same probe for the dual sum M.
    fn dual_decay_cutoff(&self, threshold: f64) -> Result<f64> {
        let (_, big_a) = self.support;
        let scale = 1.0 + self.c_dual.abs();
        let mut t = 8.0 * big_a;
        let mut tries = 0;
        loop {
            let mut ok = true;
            for i in 0..8 {
                if self.eval_dual(t * (1.0 + i as f64 / 11.0))?.abs() >= threshold * scale {
                    ok = false;
                    break;
                }
            }
            if ok {
                return Ok(t);
            }
            t *= 1.6;
            tries += 1;
            if tries > 24 {
                return Err(Error::GridResolution(format!(
                    "dual co-Poisson sum has not decayed below {threshold:.1e} by t = {t:.3e}"
                )));
            }
        }
    }

    /// F₊(F)(u) by quadrature: plateau part in closed form, the t ≥ a part
    /// integrated with quarter-period panels.
    pub fn cosine_of_f(&self, u: f64) -> Result<f64> {
        Ok(self.cosine_of_f_many(&[u], 3e-12)?[0])
    }

    /// F₊(F) at several points from one shared sampling.
    pub fn cosine_of_f_many(&self, u_list: &[f64], tail_threshold: f64) -> Result<Vec<f64>> {
        let t_hi = self.decay_cutoff(tail_threshold)?;
        let eval = |t: f64| self.eval(t);
        self.cosine_with_plateau_many(u_list, self.c_low, &eval, t_hi)
    }

    /// F₊(M)(t) by quadrature, same decomposition with the dual constant.
    pub fn cosine_of_dual(&self, u: f64) -> Result<f64> {
        Ok(self.cosine_of_dual_many(&[u], 3e-12)?[0])
    }

    pub fn cosine_of_dual_many(&self, u_list: &[f64], tail_threshold: f64) -> Result<Vec<f64>> {
        let t_hi = self.dual_decay_cutoff(tail_threshold)?;
        // The dual sum has already been range-checked by the decay probe.
        let eval = |t: f64| self.eval_dual(t).unwrap_or(f64::NAN);
        self.cosine_with_plateau_many(u_list, self.c_dual, &eval, t_hi)
    }

    fn cosine_with_plateau_many(
        &self,
        u_list: &[f64],
        plateau: f64,
        f: &(dyn Fn(f64) -> f64 + Sync),
        t_hi: f64,
    ) -> Result<Vec<f64>> {
        use rayon::prelude::*;
        let u_max = u_list.iter().fold(0.0f64, |m, &u| m.max(u));
        if u_list.iter().any(|&u| !(u.is_finite() && u >= 0.0)) {
            return Err(Error::Domain("cosine transform requires u >= 0".into()));
        }
        let (a, _) = self.support;
        let quarter = if u_max > 0.0 {
            1.0 / (4.0 * u_max)
        } else {
            f64::INFINITY
        };
        let rule = SampledRule::new(f, a, t_hi, quarter.min(0.5));
        Ok(u_list
            .par_iter()
            .map(|&u| {
                let plateau_part = if u > 0.0 {
                    plateau * (TWO_PI * a * u).sin() / (PI * u)
                } else {
                    plateau * 2.0 * a
                };
                plateau_part + rule.cosine(u)
            })
            .collect())
    }
}

/// Σ_{n=1}^{n_max} g(t/n)/n - ĝ(1). The truncation index must cover the
/// support window (n_max ≥ t/a), otherwise the truncation is reported as an
/// error rather than silently absorbed.
pub fn copoisson_sum(g: &TestFunction, t: f64, n_max: usize) -> Result<f64> {
    let (a, _) = g
        .support()
        .ok_or_else(|| Error::Domain("copoisson_sum expects compact support".into()))?;
    if !(t > 0.0) {
        return Err(Error::Domain("copoisson_sum requires t > 0".into()));
    }
    let needed = (t / a).floor() as usize;
    if n_max < needed {
        return Err(Error::TruncationBudget {
            terms: needed,
            last_term: g.eval(t / needed.max(1) as f64) / needed.max(1) as f64,
        });
    }
    let ghat1 = mellin_right(g, Cx::new(1.0, 0.0))?.re;
    let mut sum = 0.0;
    for n in 1..=needed.max(1) {
        sum += g.eval(t / n as f64) / n as f64;
    }
    Ok(sum - ghat1)
}

/// Default probe grid {a/2, a, 2a, 1, A/2, A, 2A}, deduplicated, ascending.
pub fn default_u_grid(a: f64, big_a: f64) -> Vec<f64> {
    let mut grid = vec![a / 2.0, a, 2.0 * a, 1.0, big_a / 2.0, big_a, 2.0 * big_a];
    grid.sort_by(|x, y| x.partial_cmp(y).unwrap());
    grid.dedup_by(|x, y| (*x - *y).abs() < 1e-12);
    grid
}

/// The co-Poisson intertwining identity on a grid of u values:
/// F₊(Σ g(m/t)/t - ĝ(0))(u) against Σ g(u/n)/n - ĝ(1).
pub fn copoisson_identity_check(g: &TestFunction, u_grid: &[f64]) -> Result<IdentityReport> {
    let start = Instant::now();
    let element = CoPoissonElement::new(g)?;
    let mut report = IdentityReport::new("copoisson").with_params(serde_json::json!({
        "support": [element.support().0, element.support().1],
        "c_low": element.c_low,
        "c_dual": element.c_dual,
    }));
    let lhs_values = element.cosine_of_dual_many(u_grid, 3e-12)?;
    for (&u, &lhs) in u_grid.iter().zip(&lhs_values) {
        let rhs = element.eval(u);
        report.push(u, lhs, rhs, (lhs - rhs).abs());
    }
    report.budget = format!("u_points={}", u_grid.len());
    report.runtime_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Mellin factorization of the co-Poisson sum on a grid of critical-strip
/// points: ζ(s)·ĝ(s) against the direct quadrature of F against t^{-s}.
pub fn copoisson_mellin_check(g: &TestFunction, s_grid: &[Cx]) -> Result<IdentityReport> {
    let start = Instant::now();
    let element = CoPoissonElement::new(g)?;
    let mut report = IdentityReport::new("copoisson-mellin").with_params(serde_json::json!({
        "support": [element.support().0, element.support().1],
    }));
    let rhs_values = element.mellin_direct_many(s_grid, 1e-13)?;
    for (&s, &rhs) in s_grid.iter().zip(&rhs_values) {
        let lhs = element.mellin_factored(s)?;
        report.push(s, lhs, rhs, (lhs - rhs).norm());
    }
    report.budget = format!("s_points={}", s_grid.len());
    report.runtime_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Double application of F₊ through two independent quadrature passes:
/// F₊(F) is compared with the dual sum M, and F₊(M) with F, so the
/// composition F₊F₊ is pinned to the identity on the element.
pub fn involution_check(g: &TestFunction, t_grid: &[f64]) -> Result<IdentityReport> {
    let start = Instant::now();
    let element = CoPoissonElement::new(g)?;
    let mut report = IdentityReport::new("copoisson-involution").with_params(
        serde_json::json!({
            "support": [element.support().0, element.support().1],
        }),
    );
    let forward_values = element.cosine_of_f_many(t_grid, 3e-12)?;
    let back_values = element.cosine_of_dual_many(t_grid, 3e-12)?;
    for ((&t, &forward), &back) in t_grid.iter().zip(&forward_values).zip(&back_values) {
        let dual = element.eval_dual(t)?;
        report.push(t, forward, dual, (forward - dual).abs());
        let original = element.eval(t);
        report.push(t, back, original, (back - original).abs());
    }
    report.budget = format!("t_points={} (two passes)", t_grid.len());
    report.runtime_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}
