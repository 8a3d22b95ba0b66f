//! Gauss–Legendre panel quadrature.
//!
//! One rule (32 nodes) everywhere; the only tunable is the panel layout.
//! Panels are chosen oscillation-aware by the callers: a panel never spans
//! more than a quarter period of the oscillatory factor.

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Nodes and weights of the n-point Gauss–Legendre rule on [-1, 1].
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    /// Newton iteration on the Legendre polynomial; standard cosine initial
    /// guesses converge in a handful of steps at double precision.
    pub fn new(n: usize) -> Self {
        assert!(n >= 2);
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n.div_ceil(2) {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        GaussLegendre { nodes, weights }
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

pub fn gl32() -> &'static GaussLegendre {
    static RULE: OnceLock<GaussLegendre> = OnceLock::new();
    RULE.get_or_init(|| GaussLegendre::new(32))
}

/// ∫_a^b f(x) dx with one 32-node panel.
pub fn panel<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> Complex64 {
    let rule = gl32();
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut acc = Complex64::new(0.0, 0.0);
    for (x, w) in rule.nodes.iter().zip(&rule.weights) {
        acc += *w * f(mid + half * x);
    }
    acc * half
}

pub fn panel_real<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let rule = gl32();
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut acc = 0.0;
    for (x, w) in rule.nodes.iter().zip(&rule.weights) {
        acc += *w * f(mid + half * x);
    }
    acc * half
}

/// Sum of panels over explicit breakpoints.
pub fn panels<F: Fn(f64) -> Complex64>(f: &F, cuts: &[f64]) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for w in cuts.windows(2) {
        acc += panel(f, w[0], w[1]);
    }
    acc
}

pub fn panels_real<F: Fn(f64) -> f64>(f: &F, cuts: &[f64]) -> f64 {
    let mut acc = 0.0;
    for w in cuts.windows(2) {
        acc += panel_real(f, w[0], w[1]);
    }
    acc
}

/// Breakpoints on [lo, hi] with local width at most `width(t)`, never more
/// than `max_width`. `width` must be positive and nondecreasing on the
/// interval for the sweep to terminate; callers pass t-proportional widths.
pub fn adaptive_cuts(lo: f64, hi: f64, max_width: f64, width: impl Fn(f64) -> f64) -> Vec<f64> {
    assert!(lo < hi && max_width > 0.0);
    let mut cuts = vec![lo];
    let mut t = lo;
    while t < hi {
        let w = width(t).min(max_width).max(1e-9 * (hi - lo));
        t = (t + w).min(hi);
        cuts.push(t);
    }
    cuts
}

/// Doubles the panel count until two successive estimates agree to `rel_tol`
/// relative (with an absolute floor), starting from the given breakpoints.
///
/// Cancellation-dominated integrals cannot beat the roundoff of their own
/// panel magnitudes, so the floor also tracks eps times the accumulated
/// absolute panel mass.
pub fn refine_to_tolerance<F: Fn(f64) -> Complex64>(
    f: &F,
    cuts: Vec<f64>,
    rel_tol: f64,
    abs_floor: f64,
    max_doublings: u32,
) -> Result<(Complex64, u32)> {
    let mut cuts = cuts;
    let (mut previous, _) = panels_with_mass(f, &cuts);
    let mut last_delta = f64::INFINITY;
    for doubling in 0..=max_doublings {
        cuts = split_cuts(&cuts);
        let (current, mass) = panels_with_mass(f, &cuts);
        last_delta = (current - previous).norm();
        if last_delta <= rel_tol * current.norm().max(1.0) + abs_floor + 1e-14 * mass {
            return Ok((current, doubling + 1));
        }
        previous = current;
    }
    Err(Error::QuadratureNonConvergence {
        panels: (cuts.len() - 1) as u32,
        last_delta,
    })
}

fn panels_with_mass<F: Fn(f64) -> Complex64>(f: &F, cuts: &[f64]) -> (Complex64, f64) {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut mass: f64 = 0.0;
    for w in cuts.windows(2) {
        let p = panel(f, w[0], w[1]);
        acc += p;
        mass += p.norm();
    }
    (acc, mass)
}

fn split_cuts(cuts: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(cuts.len() * 2 - 1);
    for w in cuts.windows(2) {
        out.push(w[0]);
        out.push(0.5 * (w[0] + w[1]));
    }
    out.push(*cuts.last().unwrap());
    out
}

/// Uniform breakpoints.
pub fn uniform_cuts(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let n = n.max(1);
    (0..=n)
        .map(|i| lo + (hi - lo) * i as f64 / n as f64)
        .collect()
}
