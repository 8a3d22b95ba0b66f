//! Test functions and the numerical right-Mellin / Fourier-cosine engine.
//!
//! The right Mellin transform is ĝ(s) = ∫₀^∞ g(t) t^{-s} dt and the cosine
//! transform is F₊(f)(u) = 2∫₀^∞ cos(2πtu) f(t) dt; all functions are even
//! by implicit extension, so every integral lives on (0, ∞). Gaussians carry
//! closed-form transforms and act as oracles for each quadrature path.
//!
//! Quadrature is composite 32-node Gauss–Legendre with oscillation-aware
//! panels (no panel spans more than a quarter period of the oscillatory
//! factor) and panel doubling until two estimates agree.

use std::fmt::Write as _;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quad;
use crate::specfun::{chi, log_gamma, Cx, PI, TWO_PI};

/// A smooth, even test function on (0, ∞): compactly supported bump
/// combinations, Gaussians, or even-Hermite combinations with Gaussian decay.
#[derive(Debug, Clone)]
pub struct TestFunction {
    kind: Kind,
}

#[derive(Debug, Clone)]
enum Kind {
    Bump(BumpShape),
    BumpSum(Vec<(f64, BumpShape)>),
    Gaussian { amplitude: f64, lambda: f64 },
    HermiteEven { coeffs: Vec<f64> },
    /// I(g)(t) = g(1/t)/t, the unitary reciprocal involution.
    Reciprocal(Box<TestFunction>),
    /// g_c(t) = sqrt(c) g(c t), the unitary multiplicative translate.
    Scaled { inner: Box<TestFunction>, c: f64 },
}

/// exp(-1/((t-a)(A-t))) scaled to peak 1, optionally modulated by powers of
/// the affine map of [a, A] onto [-1, 1].
#[derive(Debug, Clone)]
pub struct BumpShape {
    a: f64,
    big_a: f64,
    taper: u32,
}

impl BumpShape {
    fn eval(&self, t: f64) -> f64 {
        if t <= self.a || t >= self.big_a {
            return 0.0;
        }
        let width = self.big_a - self.a;
        let core = (-1.0 / ((t - self.a) * (self.big_a - t)) + 4.0 / (width * width)).exp();
        if self.taper == 0 {
            core
        } else {
            let tau = (2.0 * t - (self.a + self.big_a)) / width;
            core * tau.powi(self.taper as i32)
        }
    }
}

impl TestFunction {
    /// C^∞ bump on [a, A], exactly zero outside, peak value 1.
    pub fn bump(a: f64, big_a: f64) -> Result<Self> {
        if !(a > 0.0 && a < big_a && big_a.is_finite()) {
            return Err(Error::Domain(format!(
                "bump requires 0 < a < A, got a = {a}, A = {big_a}"
            )));
        }
        Ok(TestFunction {
            kind: Kind::Bump(BumpShape { a, big_a, taper: 0 }),
        })
    }

    /// Bump modulated by the k-th power of the affine coordinate; the same
    /// support, used as a correction family for moment normalization.
    pub fn bump_tapered(a: f64, big_a: f64, taper: u32) -> Result<Self> {
        if !(a > 0.0 && a < big_a && big_a.is_finite()) {
            return Err(Error::Domain(format!(
                "bump requires 0 < a < A, got a = {a}, A = {big_a}"
            )));
        }
        Ok(TestFunction {
            kind: Kind::Bump(BumpShape {
                a,
                big_a,
                taper,
            }),
        })
    }

    /// Weighted sum of bump shapes sharing one support interval.
    pub fn bump_sum(terms: Vec<(f64, TestFunction)>) -> Result<Self> {
        let mut shapes = Vec::new();
        for (w, f) in terms {
            match f.kind {
                Kind::Bump(shape) => shapes.push((w, shape)),
                Kind::BumpSum(inner) => {
                    for (wi, shape) in inner {
                        shapes.push((w * wi, shape));
                    }
                }
                _ => {
                    return Err(Error::Domain(
                        "bump_sum accepts only bump-kind components".into(),
                    ))
                }
            }
        }
        if shapes.is_empty() {
            return Err(Error::Domain("bump_sum needs at least one term".into()));
        }
        Ok(TestFunction {
            kind: Kind::BumpSum(shapes),
        })
    }

    /// g(t) = amplitude · e^{-πλt²}.
    pub fn gaussian(amplitude: f64, lambda: f64) -> Result<Self> {
        if !(lambda > 0.0 && amplitude.is_finite()) {
            return Err(Error::Domain("gaussian requires lambda > 0".into()));
        }
        Ok(TestFunction {
            kind: Kind::Gaussian { amplitude, lambda },
        })
    }

    /// f = Σ_m c_m ψ_{2m} over the even Hermite functions normalized so that
    /// F₊ ψ_{2m} = (-1)^m ψ_{2m}.
    pub fn hermite_even(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain("hermite_even needs coefficients".into()));
        }
        Ok(TestFunction {
            kind: Kind::HermiteEven { coeffs },
        })
    }

    /// I(g)(t) = g(1/t)/t. For support [a, A] the image is supported on
    /// [1/A, 1/a]; Mellin transforms swap as Î(g)(s) = ĝ(1-s).
    pub fn reciprocal(&self) -> Result<Self> {
        if self.support().is_none() {
            return Err(Error::Domain(
                "reciprocal is implemented for compactly supported functions".into(),
            ));
        }
        Ok(TestFunction {
            kind: Kind::Reciprocal(Box::new(self.clone())),
        })
    }

    /// g_c(t) = √c · g(ct): unitary dilation with ĝ_c(s) = c^{s-1/2} ĝ(s).
    pub fn scaled(&self, c: f64) -> Result<Self> {
        if !(c > 0.0 && c.is_finite()) {
            return Err(Error::Domain("scale factor must be positive".into()));
        }
        Ok(TestFunction {
            kind: Kind::Scaled {
                inner: Box::new(self.clone()),
                c,
            },
        })
    }

    pub fn eval(&self, t: f64) -> f64 {
        let t = t.abs();
        match &self.kind {
            Kind::Bump(shape) => shape.eval(t),
            Kind::BumpSum(terms) => terms.iter().map(|(w, s)| w * s.eval(t)).sum(),
            Kind::Gaussian { amplitude, lambda } => amplitude * (-PI * lambda * t * t).exp(),
            Kind::HermiteEven { coeffs } => hermite_even_eval(coeffs, t),
            Kind::Reciprocal(inner) => {
                if t == 0.0 {
                    0.0
                } else {
                    inner.eval(1.0 / t) / t
                }
            }
            Kind::Scaled { inner, c } => c.sqrt() * inner.eval(c * t),
        }
    }

    /// Support interval, None for Gaussian-decay kinds.
    pub fn support(&self) -> Option<(f64, f64)> {
        match &self.kind {
            Kind::Bump(shape) => Some((shape.a, shape.big_a)),
            Kind::BumpSum(terms) => {
                let a = terms.iter().map(|(_, s)| s.a).fold(f64::INFINITY, f64::min);
                let b = terms.iter().map(|(_, s)| s.big_a).fold(0.0, f64::max);
                Some((a, b))
            }
            Kind::Gaussian { .. } | Kind::HermiteEven { .. } => None,
            Kind::Reciprocal(inner) => inner.support().map(|(a, b)| (1.0 / b, 1.0 / a)),
            Kind::Scaled { inner, c } => inner.support().map(|(a, b)| (a / c, b / c)),
        }
    }

    /// Cutoff beyond which the function is below ~1e-18 in magnitude.
    pub fn decay_cutoff(&self) -> f64 {
        match &self.kind {
            Kind::Gaussian { amplitude, lambda } => {
                (((amplitude.abs().max(1.0) * 1e20).ln()) / (PI * lambda)).sqrt()
            }
            Kind::HermiteEven { coeffs } => {
                // ψ_{2m} lives inside |t| ≲ sqrt((4m+1)/(2π)); pad generously.
                let m = coeffs.len() as f64;
                ((4.0 * m + 1.0) / TWO_PI).sqrt() + 5.0
            }
            Kind::Scaled { inner, c } => inner.decay_cutoff() / c,
            _ => self.support().map_or(8.0, |(_, b)| b),
        }
    }

    /// Closed-form cosine transform where one exists (Gaussian self-duality,
    /// Hermite eigenrelation). Quadrature paths are checked against these.
    pub fn cosine_closed_form(&self, u: f64) -> Option<f64> {
        match &self.kind {
            Kind::Gaussian { amplitude, lambda } => {
                Some(amplitude / lambda.sqrt() * (-PI * u * u / lambda).exp())
            }
            Kind::HermiteEven { coeffs } => {
                let signed: Vec<f64> = coeffs
                    .iter()
                    .enumerate()
                    .map(|(m, c)| if m % 2 == 0 { *c } else { -*c })
                    .collect();
                Some(hermite_even_eval(&signed, u))
            }
            Kind::Scaled { inner, c } => inner.cosine_closed_form(u / c).map(|v| v / c.sqrt()),
            _ => None,
        }
    }

    /// L²(0, ∞) norm by quadrature.
    pub fn l2_norm(&self) -> f64 {
        let hi = self.decay_cutoff();
        let lo = self.support().map_or(0.0, |(a, _)| a);
        let cuts = quad::uniform_cuts(lo, hi, 64);
        quad::panels_real(&|t| self.eval(t).powi(2), &cuts).sqrt()
    }
}

/// ψ_{2m}(t) = (2π)^{1/4} φ_{2m}(√(2π) t) with the L²(dt)-orthonormal
/// Hermite functions φ_n; evaluated by the stable three-term recurrence.
fn hermite_even_eval(coeffs: &[f64], t: f64) -> f64 {
    let y = TWO_PI.sqrt() * t;
    let scale = TWO_PI.powf(0.25);
    let mut phi_prev = PI.powf(-0.25) * (-0.5 * y * y).exp();
    if coeffs.len() == 1 {
        return scale * coeffs[0] * phi_prev;
    }
    let mut acc = coeffs[0] * phi_prev;
    let mut phi = (2.0f64).sqrt() * y * phi_prev;
    let top = 2 * (coeffs.len() - 1);
    for n in 2..=top {
        let nf = n as f64;
        let next = y * (2.0 / nf).sqrt() * phi - ((nf - 1.0) / nf).sqrt() * phi_prev;
        phi_prev = phi;
        phi = next;
        if n % 2 == 0 {
            acc += coeffs[n / 2] * phi;
        }
    }
    scale * acc
}

/// Right Mellin transform ĝ(s) = ∫₀^∞ g(t) t^{-s} dt.
///
/// Gaussians return the closed form (amplitude/2)(πλ)^{(s-1)/2} Γ((1-s)/2);
/// compactly supported kinds use oscillation-aware Gauss–Legendre panels with
/// adaptive doubling; Gaussian-decay kinds integrate in logarithmic variables
/// and require Re s < 1.
pub fn mellin_right(g: &TestFunction, s: Cx) -> Result<Cx> {
    match &g.kind {
        Kind::Gaussian { amplitude, lambda } => {
            let lg = log_gamma((Cx::new(1.0, 0.0) - s) / 2.0)?;
            let factor = ((s - 1.0) * 0.5 * (PI * lambda).ln() + lg).exp();
            Ok(0.5 * amplitude * factor)
        }
        Kind::Scaled { inner, c } => {
            let base = mellin_right(inner, s)?;
            Ok(((s - 0.5) * c.ln()).exp() * base)
        }
        Kind::Reciprocal(inner) => mellin_right(inner, Cx::new(1.0, 0.0) - s),
        Kind::HermiteEven { .. } => mellin_decay(g, s),
        _ => {
            let (a, b) = g.support().expect("compact kind");
            mellin_compact(g, a, b, s)
        }
    }
}

/// Direct oscillation-aware quadrature of ∫ g(t) t^{-s} dt over the
/// support, bypassing any closed-form or dilation shortcut; the independent
/// route used when those shortcuts are themselves under test.
pub fn mellin_compact_quadrature(g: &TestFunction, s: Cx) -> Result<Cx> {
    let (a, b) = g
        .support()
        .ok_or_else(|| Error::Domain("direct quadrature needs compact support".into()))?;
    mellin_compact(g, a, b, s)
}

fn mellin_compact(g: &TestFunction, a: f64, b: f64, s: Cx) -> Result<Cx> {
    let im = s.im.abs();
    let width = move |t: f64| {
        if im < 1e-9 {
            f64::INFINITY
        } else {
            PI * t / (2.0 * im)
        }
    };
    let cuts = quad::adaptive_cuts(a, b, (b - a) / 8.0, width);
    let f = |t: f64| g.eval(t) * (-s * t.ln()).exp();
    let (value, _) = quad::refine_to_tolerance(&f, cuts, 1e-12, 1e-16, 14)?;
    Ok(value)
}

fn mellin_decay(g: &TestFunction, s: Cx) -> Result<Cx> {
    if s.re >= 1.0 - 1e-9 {
        return Err(Error::Domain(format!(
            "mellin of a Gaussian-decay kind requires Re s < 1, got {s}"
        )));
    }
    let x_hi = g.decay_cutoff().ln();
    let x_lo = (1e-16f64).ln() / (1.0 - s.re);
    let im = s.im.abs();
    let width = if im < 1e-9 { 0.5 } else { (PI / (2.0 * im)).min(0.5) };
    let cuts = quad::adaptive_cuts(x_lo, x_hi, width, |_| width);
    let f = |x: f64| {
        let t = x.exp();
        g.eval(t) * ((Cx::new(1.0, 0.0) - s) * x).exp()
    };
    let (value, _) = quad::refine_to_tolerance(&f, cuts, 1e-12, 1e-16, 10)?;
    Ok(value)
}

/// Options for the cosine-transform quadrature budget.
#[derive(Debug, Clone, Copy)]
pub struct CosineOpts {
    pub u_max: f64,
    pub rel_tol: f64,
    pub abs_floor: f64,
    pub max_doublings: u32,
}

impl Default for CosineOpts {
    fn default() -> Self {
        CosineOpts {
            u_max: 200.0,
            rel_tol: 1e-12,
            abs_floor: 1e-15,
            max_doublings: 10,
        }
    }
}

/// F₊(g)(u) = 2∫₀^∞ cos(2πtu) g(t) dt by oscillation-aware quadrature;
/// panels never span more than a quarter period.
pub fn cosine_transform(g: &TestFunction, u: f64) -> Result<f64> {
    cosine_transform_with(g, u, &CosineOpts::default())
}

pub fn cosine_transform_with(g: &TestFunction, u: f64, opts: &CosineOpts) -> Result<f64> {
    if !(u.is_finite() && u >= 0.0) {
        return Err(Error::Domain(format!("cosine transform requires u >= 0, got {u}")));
    }
    if u > opts.u_max {
        return Err(Error::CosineBudget { u, u_max: opts.u_max });
    }
    let (lo, hi) = match g.support() {
        Some((a, b)) => (a, b),
        None => (0.0, g.decay_cutoff()),
    };
    let quarter = if u > 0.0 { 1.0 / (4.0 * u) } else { f64::INFINITY };
    let base = ((hi - lo) / 8.0).min(quarter);
    let cuts = quad::adaptive_cuts(lo, hi, base, |_| base);
    let f = |t: f64| Complex64::new(2.0 * g.eval(t) * (TWO_PI * t * u).cos(), 0.0);
    let (value, _) =
        quad::refine_to_tolerance(&f, cuts, opts.rel_tol, opts.abs_floor, opts.max_doublings)?;
    Ok(value.re)
}

/// Truncated kernel expansion of F₊(1_{t>a} t^{-s})(u):
///
///   χ(s) u^{s-1} - 2 Σ_{j=0}^{J} ((-1)^j/(2j)!) (2πu)^{2j} a^{2j+1-s}/(2j+1-s)
///
/// valid for Re s < 1. The truncation bound is the magnitude of the first
/// omitted term; the alternating series needs 2πua < J to be usable in
/// double precision.
#[derive(Debug, Clone, Copy)]
pub struct KernelSeries {
    pub value: Cx,
    pub next_term_bound: f64,
}

pub fn kernel_series(a: f64, s: Cx, u: f64, j_max: usize) -> Result<KernelSeries> {
    if !(a > 0.0 && u > 0.0) {
        return Err(Error::Domain("kernel_series requires a > 0 and u > 0".into()));
    }
    if s.re >= 1.0 - 1e-12 {
        return Err(Error::Domain(format!("kernel_series requires Re s < 1, got {s}")));
    }
    let x = TWO_PI * u * a;
    if x >= j_max as f64 {
        return Err(Error::Domain(format!(
            "series heuristic requires 2πua < J: 2πua = {x:.2}, J = {j_max}"
        )));
    }
    let tail = kernel_series_tail(a, s, u, j_max)?;
    let head = chi(s)? * ((s - 1.0) * u.ln()).exp();
    let next_term_bound = {
        let j = j_max as f64 + 1.0;
        // |q_{J+1}| computed in logs to dodge overflow.
        let log_q = 2.0 * j * x.ln() - ln_factorial(2 * (j_max + 1));
        2.0 * (log_q + (2.0 * j + 1.0 - s.re) * a.ln()).exp()
            / (Cx::new(2.0 * j + 1.0, 0.0) - s).norm()
    };
    if next_term_bound > 1e-8 {
        return Err(Error::TruncationBound {
            bound: next_term_bound,
            limit: 1e-8,
        });
    }
    Ok(KernelSeries {
        value: head + tail,
        next_term_bound,
    })
}

/// The series part alone: -2 Σ_{j≤J} ((-1)^j/(2j)!)(2πu)^{2j} a^{2j+1-s}/(2j+1-s).
pub fn kernel_series_tail(a: f64, s: Cx, u: f64, j_max: usize) -> Result<Cx> {
    for j in 0..=j_max {
        let odd = 2.0 * j as f64 + 1.0;
        if (s - Cx::new(odd, 0.0)).norm() < 1e-9 {
            return Err(Error::Domain(format!("kernel series pole: s = {odd}")));
        }
    }
    let xa = TWO_PI * u * a;
    let a_pow = ((Cx::new(1.0, 0.0) - s) * a.ln()).exp(); // a^{1-s}
    let mut q = 1.0f64; // (-1)^j (2πua)^{2j} / (2j)!
    let mut acc = Cx::new(0.0, 0.0);
    for j in 0..=j_max {
        let denom = Cx::new(2.0 * j as f64 + 1.0, 0.0) - s;
        acc += q / denom;
        let jf = j as f64;
        q *= -xa * xa / ((2.0 * jf + 1.0) * (2.0 * jf + 2.0));
    }
    Ok(-2.0 * a_pow * acc)
}

fn ln_factorial(n: usize) -> f64 {
    (1..=n).map(|k| (k as f64).ln()).sum()
}

/// Samples of a Mellin transform along the critical line.
#[derive(Debug, Clone)]
pub struct MellinSamples {
    pub s_values: Vec<Cx>,
    pub values: Vec<Cx>,
    pub budget: String,
}

impl MellinSamples {
    /// Samples G(1/2 + iτ) on the symmetric grid τ = -t_cut..t_cut.
    pub fn on_critical_line<F>(g: &F, t_cut: f64, spacing: f64) -> Result<Self>
    where
        F: Fn(Cx) -> Result<Cx> + Sync,
    {
        use rayon::prelude::*;
        if !(spacing > 0.0 && spacing <= 0.05 + 1e-12) {
            return Err(Error::Domain(format!(
                "sample spacing must be in (0, 0.05], got {spacing}"
            )));
        }
        let n = (t_cut / spacing).ceil() as i64;
        let s_values: Vec<Cx> = (-n..=n)
            .map(|k| Cx::new(0.5, k as f64 * spacing))
            .collect();
        let values: Vec<Cx> = s_values
            .par_iter()
            .map(|&s| g(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(MellinSamples {
            s_values,
            values,
            budget: format!("critical-line grid, spacing {spacing}, t_cut {t_cut}"),
        })
    }

    pub fn spacing(&self) -> f64 {
        if self.s_values.len() < 2 {
            return 0.0;
        }
        self.s_values[1].im - self.s_values[0].im
    }

    pub fn t_cut(&self) -> f64 {
        self.s_values.last().map_or(0.0, |s| s.im)
    }

    /// CSV export: (im_s, re_value, im_value, budget).
    pub fn to_csv(&self) -> String {
        let mut out = String::from("im_s,re_value,im_value,budget\n");
        for (s, v) in self.s_values.iter().zip(&self.values) {
            writeln!(out, "{},{},{},{}", s.im, v.re, v.im, self.budget).expect("string write");
        }
        out
    }
}

/// Inverse Mellin on the critical line by trapezoid summation:
/// g(t) = (1/2π) ∫ G(1/2+iτ) t^{-1/2+iτ} dτ, recovering the function whose
/// right Mellin transform was sampled, with a decay-extrapolated tail
/// estimate. Errors if |G| at the cutoff exceeds 1e-6.
pub fn inverse_mellin(samples: &MellinSamples, t: f64) -> Result<(f64, f64)> {
    let (value, tail) = inverse_mellin_complex(samples, t)?;
    Ok((value.re, tail))
}

pub fn inverse_mellin_complex(samples: &MellinSamples, t: f64) -> Result<(Cx, f64)> {
    if !(t > 0.0) {
        return Err(Error::Domain("inverse_mellin requires t > 0".into()));
    }
    if samples.s_values.len() < 3 {
        return Err(Error::Domain("inverse_mellin needs a dense sample grid".into()));
    }
    let spacing = samples.spacing();
    if spacing > 0.05 + 1e-12 {
        return Err(Error::Domain(format!(
            "sample spacing {spacing} exceeds the 0.05 requirement"
        )));
    }
    let edge = samples.values.first().unwrap().norm().max(samples.values.last().unwrap().norm());
    if edge > 1e-6 {
        return Err(Error::TailBound {
            value: edge,
            limit: 1e-6,
        });
    }
    let ln_t = t.ln();
    let mut acc = Cx::new(0.0, 0.0);
    for (k, (s, v)) in samples.s_values.iter().zip(&samples.values).enumerate() {
        let w = if k == 0 || k == samples.s_values.len() - 1 {
            0.5
        } else {
            1.0
        };
        acc += w * v * Cx::new(0.0, s.im * ln_t).exp();
    }
    let value = acc * spacing / TWO_PI * (-0.5 * ln_t).exp();
    // Geometric tail extrapolation from the last decade of samples.
    let n = samples.values.len();
    let back = (5.0 / spacing) as usize;
    let tail = if n > 2 * back + 1 {
        let g_end = samples.values[n - 1].norm().max(1e-300);
        let g_mid = samples.values[n - 1 - back].norm().max(1e-300);
        let rate = (g_end / g_mid).powf(1.0 / (back as f64 * spacing));
        if rate < 1.0 {
            g_end / (-rate.ln()) / PI * (-0.5 * ln_t).exp()
        } else {
            f64::INFINITY
        }
    } else {
        f64::INFINITY
    };
    Ok((value, tail))
}

/// A Gauss–Legendre sampling of one function, reusable across many
/// transform evaluations: pairs (t_k, w_k·f(t_k)).
#[derive(Debug, Clone)]
pub struct SampledRule {
    pairs: Vec<(f64, f64)>,
}

impl SampledRule {
    /// Samples f over [lo, hi] with panels of the given width.
    pub fn new(f: &dyn Fn(f64) -> f64, lo: f64, hi: f64, width: f64) -> Self {
        let cuts = quad::adaptive_cuts(lo, hi, width, |_| f64::INFINITY);
        Self::on_cuts(f, &cuts)
    }

    pub fn on_cuts(f: &dyn Fn(f64) -> f64, cuts: &[f64]) -> Self {
        let rule = quad::gl32();
        let mut pairs = Vec::with_capacity((cuts.len() - 1) * rule.nodes.len());
        for w in cuts.windows(2) {
            let half = 0.5 * (w[1] - w[0]);
            let mid = 0.5 * (w[0] + w[1]);
            for (x, wt) in rule.nodes.iter().zip(&rule.weights) {
                let t = mid + half * x;
                pairs.push((t, wt * half * f(t)));
            }
        }
        SampledRule { pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// 2 ∫ f(t) cos(2πtu) dt over the sampled range.
    pub fn cosine(&self, u: f64) -> f64 {
        2.0 * self
            .pairs
            .iter()
            .map(|&(t, wf)| wf * (TWO_PI * t * u).cos())
            .sum::<f64>()
    }

    /// ∫ f(t) t^{-s} dt over the sampled range.
    pub fn mellin(&self, s: Cx) -> Cx {
        self.pairs
            .iter()
            .map(|&(t, wf)| wf * (-s * t.ln()).exp())
            .sum()
    }

    /// ∫ t^k f(t) dt, the moments used for small-u Taylor pieces.
    pub fn moment(&self, k: i32) -> f64 {
        self.pairs.iter().map(|&(t, wf)| t.powi(k) * wf).sum()
    }
}

/// |Mellin(F₊ f)(s) - χ(s) Mellin(f)(1-s)| at one critical-line point, the
/// Mellin form of the functional equation for the cosine transform.
pub fn mellin_functional_equation_residual(f: &TestFunction, s: Cx) -> Result<f64> {
    let lhs = mellin_of_cosine_transform_many(f, &[s])?[0];
    let rhs = chi(s)? * mellin_right(f, Cx::new(1.0, 0.0) - s)?;
    Ok((lhs - rhs).norm())
}

/// Mellin transform of F₊(f) at several strip points, entirely by
/// quadrature (no use of the χ multiplier identity this result is checked
/// against).
///
/// Stage one samples f once on a Gauss–Legendre rule fine enough for the
/// fastest cosine needed; stage two evaluates H = F₊(f) on an outer rule
/// shared by every requested s, with the even Taylor expansion
/// H(u) ≈ H(0) + H''(0)u²/2 covering (0, u_lo] in closed form.
pub fn mellin_of_cosine_transform_many(f: &TestFunction, s_list: &[Cx]) -> Result<Vec<Cx>> {
    use rayon::prelude::*;
    if s_list
        .iter()
        .any(|s| s.re >= 1.0 - 1e-9 || s.re <= 1e-9)
    {
        return Err(Error::Domain(
            "mellin_of_cosine_transform works on the open critical strip".into(),
        ));
    }
    let (a, big_a) = f.support().ok_or_else(|| {
        Error::Domain("the quadrature route needs a compactly supported f".into())
    })?;
    // Stage one: inner rule, a panel per quarter period at the largest u.
    let u_cap = 420.0;
    let eval = |t: f64| f.eval(t);
    let inner = SampledRule::new(&eval, a, big_a, 1.0 / (4.0 * u_cap));
    // Decay cutoff for the outer integral; bump transforms fall off like
    // exp(-c sqrt(u)), so the cutoff sits in the hundreds.
    let h0 = inner.cosine(0.0);
    let scale = h0.abs().max(1e-3);
    let mut u_hi = 30.0;
    while u_hi < u_cap
        && (0..6).any(|i| inner.cosine(u_hi + i as f64 * 0.37).abs() > 1e-10 * scale)
    {
        u_hi += 30.0;
    }
    // Outer rule: resolves both the support-edge oscillation of H (quarter
    // period 1/(4A)) and the t^{-s} oscillation at the largest |Im s|.
    let im_max = s_list.iter().fold(0.0f64, |m, s| m.max(s.im.abs()));
    let u_lo = 0.005;
    let base = 1.0 / (4.0 * big_a);
    let width = move |u: f64| {
        if im_max < 1e-9 {
            f64::INFINITY
        } else {
            PI * u / (2.0 * im_max)
        }
    };
    let outer_cuts = quad::adaptive_cuts(u_lo, u_hi, base, width);
    let rule = quad::gl32();
    let mut outer: Vec<(f64, f64)> = Vec::new();
    for w in outer_cuts.windows(2) {
        let half = 0.5 * (w[1] - w[0]);
        let mid = 0.5 * (w[0] + w[1]);
        for (x, wt) in rule.nodes.iter().zip(&rule.weights) {
            outer.push((mid + half * x, wt * half));
        }
    }
    let h_values: Vec<f64> = outer.par_iter().map(|&(u, _)| inner.cosine(u)).collect();
    // H is even: H(u) = H(0) + H''(0)u²/2 + H''''(0)u⁴/24 + O(u⁶), with the
    // derivatives at 0 given by moments of f: H^{(2k)}(0) = 2(-1)^k(2π)^{2k}
    // ∫ t^{2k} f(t) dt.
    let h2 = -2.0 * TWO_PI * TWO_PI * inner.moment(2);
    let h4 = 2.0 * TWO_PI.powi(4) * inner.moment(4);
    let one = Cx::new(1.0, 0.0);
    let three = Cx::new(3.0, 0.0);
    let five = Cx::new(5.0, 0.0);
    Ok(s_list
        .iter()
        .map(|&s| {
            let low = h0 * ((one - s) * u_lo.ln()).exp() / (one - s)
                + 0.5 * h2 * ((three - s) * u_lo.ln()).exp() / (three - s)
                + h4 / 24.0 * ((five - s) * u_lo.ln()).exp() / (five - s);
            let main: Cx = outer
                .iter()
                .zip(&h_values)
                .map(|(&(u, w), &h)| w * h * (-s * u.ln()).exp())
                .sum();
            low + main
        })
        .collect())
}
