//! Crate-wide error type.
//!
//! Poles, budget exhaustion, and validation failures are reported as typed
//! errors, never as infinities or NaNs: callers decide what a removable
//! singularity means for them.

use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("gamma pole at s = {0}")]
    GammaPole(Complex64),

    #[error("chi pole at s = {0} (odd positive integer)")]
    ChiPole(Complex64),

    #[error("zeta pole at s = 1")]
    ZetaPole,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("quadrature did not converge after {panels} panels (last delta {last_delta:.3e})")]
    QuadratureNonConvergence { panels: u32, last_delta: f64 },

    #[error("series truncation budget exhausted after {terms} terms (last term {last_term:.3e})")]
    TruncationBudget { terms: usize, last_term: f64 },

    #[error("truncation bound {bound:.3e} exceeds {limit:.3e}; increase the term budget")]
    TruncationBound { bound: f64, limit: f64 },

    #[error("cosine transform budget exceeded: u = {u} > u_max = {u_max}")]
    CosineBudget { u: f64, u_max: f64 },

    #[error("sign-change scan found {found} zeros but the argument principle counts {expected}")]
    MissedZeros { expected: i64, found: usize },

    #[error("ordinate validation failed for {} entries, first: gamma = {} with |zeta| = {:.3e}", .failures.len(), .failures[0].0, .failures[0].1)]
    ZeroValidation { failures: Vec<(f64, f64)> },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("zero at gamma = {gamma} looks multiple: |zeta'| = {zeta_prime_mag:.3e}")]
    MultipleZero { gamma: f64, zeta_prime_mag: f64 },

    #[error("evaluation point {z} collides with the zero at gamma = {gamma}")]
    ZCollision { z: Complex64, gamma: f64 },

    #[error("constraint system has only the trivial null space ({basis} basis functions, {constraints} constraints); increase the basis size")]
    TrivialNullSpace { basis: usize, constraints: usize },

    #[error("moment-correction family is degenerate (condition number {condition:.3e})")]
    DegenerateFamily { condition: f64 },

    #[error("all samples below threshold; the function is numerically zero")]
    BelowThreshold,

    #[error("phase continuation failed near {location}; a zero may lie on the contour")]
    PhaseJump { location: Complex64 },

    #[error("winding number {winding:.4} is not within {tolerance} of an integer")]
    NonIntegerWinding { winding: f64, tolerance: f64 },

    #[error("assembled function under-sampled: {0}")]
    GridResolution(String),

    #[error("tail bound violated: |G| = {value:.3e} at the cutoff exceeds {limit:.3e}")]
    TailBound { value: f64, limit: f64 },

    #[error("memory budget: sieving to {requested} exceeds the materialization limit {limit}")]
    MemoryBudget { requested: u64, limit: u64 },

    #[error("internal consistency check failed in {what}: magnitude {magnitude:.3e}")]
    Inconsistency { what: String, magnitude: f64 },

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
