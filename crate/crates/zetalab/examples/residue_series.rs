//! The residue interpolation series Σ_ρ (G(ρ)/ζ'(ρ))·ζ(Z)/(Z-ρ) and the
//! sum-zero identity Σ_ρ G(ρ)/ζ'(ρ) = 0.
//!
//! Negative control: for G = ζ·ĝ* all samples vanish, so the series is
//! identically zero while G(1/2) is not — the zeros alone cannot see a
//! co-Poisson element of support parameter below 1. Positive control: a
//! Hermite proxy for a quickly decaying transform, whose block partial
//! sums settle toward G(Z).

use zetalab::config::RunConfig;
use zetalab::copoisson::CoPoissonElement;
use zetalab::mellin::TestFunction;
use zetalab::runner::hermite_proxy_samples;
use zetalab::sonine::normalize_moments;
use zetalab::specfun::Cx;
use zetalab::zero_series::{residue_series, sum_over_zeros_check};
use zetalab::zeta::find_zeros;

fn main() -> zetalab::Result<()> {
    let zeros = find_zeros(100.0)?;
    let bump = TestFunction::bump(0.5, 2.0)?;
    let g_star = normalize_moments(&bump)?.function;
    let element = CoPoissonElement::new_unscaled(&g_star)?;
    let z_half = Cx::new(0.5, 0.0);
    let samples: Vec<Cx> = zeros
        .zeros
        .iter()
        .map(|z| element.mellin_factored(z.rho()))
        .collect::<zetalab::Result<Vec<_>>>()?;
    let control = residue_series(&samples, z_half, &zeros)?;
    println!(
        "negative control: |series| = {:.2e} while G(1/2) = {:+.6e}",
        control.value.norm(),
        element.mellin_factored(z_half)?.re
    );

    let config = RunConfig::default();
    let (hermite, g_at_zeros) = hermite_proxy_samples(&config, &zeros)?;
    let z_eval = Cx::new(0.75, 0.0);
    let target = hermite.mellin(z_eval)?;
    let trace = residue_series(&g_at_zeros, z_eval, &zeros)?;
    println!("hermite proxy at Z = 3/4 (target G(Z) = {:+.4e}):", target.re);
    for (k, partial) in trace.block_partials.iter().enumerate().step_by(4) {
        println!("  after block {k:>2}: |partial - G(Z)| = {:.3e}", (partial - target).norm());
    }
    let sum_zero = sum_over_zeros_check(&g_at_zeros, &zeros)?;
    println!(
        "sum-zero identity: first-block |partial| = {:.3e}, final = {:.3e} over {} blocks",
        sum_zero.block_partials[0].norm(),
        sum_zero.value.norm(),
        sum_zero.block_partials.len()
    );
    if let Some(caveat) = &hermite.caveat {
        println!("caveat: {caveat}");
    }
    Ok(())
}
