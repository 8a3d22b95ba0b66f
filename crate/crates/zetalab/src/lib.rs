#![allow(clippy::excessive_precision)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

//! zetalab: a numerical workbench for explicit transform identities tied to
//! the Riemann zeta function.
//!
//! The crate machine-checks, at double precision and with reported budgets:
//!
//! - Poisson summation with a scaling parameter, and the Jacobi theta
//!   identity it contains (`copoisson::poisson_residual`);
//! - the Müntz formula ζ(s)·∫φ(t)t^{s-1}dt = ∫(modified Poisson sum)t^{s-1}dt
//!   (`copoisson::muntz_check`);
//! - the co-Poisson intertwining formula of Duffin–Weinberger and the Mellin
//!   factorization ζ(s)·ĝ(s) of co-Poisson sums (`copoisson`);
//! - Sonine-space constructions: functions vanishing, together with their
//!   cosine transforms, on an interval (0, a), their support profiles, and
//!   zero counts of their completed Mellin transforms by the argument
//!   principle (`sonine`);
//! - residue series over the nontrivial zeros: the interpolation series
//!   Σ_ρ G(ρ)/ζ'(ρ)·ζ(Z)/(Z-ρ), the sum-zero identity Σ_ρ G(ρ)/ζ'(ρ) = 0,
//!   Ramanujan's Möbius/zero identity, and the biorthogonality of the dual
//!   system ζ(s)/(s-ρ) (`zero_series`).
//!
//! Every check produces an [`report::IdentityReport`] with inputs, both
//! sides, residuals, and truncation budgets. The `zetalab` binary exposes
//! each check as a subcommand; `examples/` holds one runnable example per
//! capability.

pub mod config;
pub mod copoisson;
pub mod error;
pub mod mellin;
pub mod quad;
pub mod report;
pub mod runner;
pub mod sonine;
pub mod specfun;
pub mod zero_series;
pub mod zeta;

pub use error::{Error, Result};
pub use specfun::Cx;
