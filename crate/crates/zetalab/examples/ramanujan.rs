//! Ramanujan's Möbius/zero identity, for ab = π:
//!
//!   √a Σ μ(n)/n e^{-(a/n)²} - √b Σ μ(n)/n e^{-(b/n)²}
//!     = -(1/(2√b)) Σ_ρ b^ρ Γ((1-ρ)/2)/ζ'(ρ).
//!
//! The left side needs millions of Möbius terms; the right side converges
//! with a few dozen zeros thanks to the e^{-πγ/4} decay of the Γ factor.

use zetalab::specfun::PI;
use zetalab::zero_series::{ramanujan_lhs, ramanujan_rhs};
use zetalab::zeta::find_zeros;

fn main() -> zetalab::Result<()> {
    let zeros = find_zeros(150.0)?;
    println!("zero table: {} ordinates", zeros.len());
    for a in [1.0, 2.0, 5.0] {
        let lhs = ramanujan_lhs(a, 10_000_000)?;
        let rhs = ramanujan_rhs(PI / a, &zeros)?;
        println!(
            "a = {a}: lhs = {:+.9e} (tail est {:.1e}), rhs = {:+.9e}, |diff| = {:.2e}",
            lhs.value, lhs.tail_estimate, rhs.value, (lhs.value - rhs.value).abs()
        );
    }
    let symmetric = ramanujan_rhs(PI.sqrt(), &zeros)?;
    println!(
        "at the symmetric point b = sqrt(pi) the sum collapses: rhs = {:+.2e}",
        symmetric.value
    );
    Ok(())
}
