//! Numerical Sonine-space elements: a co-Poisson sum with both defining
//! moments removed vanishes on (0, a) together with its cosine transform,
//! and an even-Hermite combination constrained on (0, 1) does the same
//! through the eigenrelation F₊ψ_{2m} = (-1)^m ψ_{2m}.

use zetalab::copoisson::CoPoissonElement;
use zetalab::mellin::TestFunction;
use zetalab::sonine::{build_k1_hermite, chebyshev_points, normalize_moments, support_profile, SonineElement};

fn main() -> zetalab::Result<()> {
    let bump = TestFunction::bump(0.5, 2.0)?;
    let normalized = normalize_moments(&bump)?;
    println!(
        "moment correction: alpha = {:+.6}, beta = {:+.6} (condition {:.2})",
        normalized.alpha, normalized.beta, normalized.condition_number
    );
    let element = CoPoissonElement::new_unscaled(&normalized.function)?;
    let norm = normalized.function.l2_norm();
    for t in [0.12, 0.3, 0.49] {
        println!(
            "  |F({t:<4})|/norm = {:.2e}, |F+F({t})|/norm = {:.2e}",
            element.eval(t).abs() / norm,
            element.cosine_of_f(t)?.abs() / norm
        );
    }
    let profile = support_profile(&SonineElement::from_copoisson(element), 1e-3)?;
    println!(
        "support profile: lambda = {:.3}, mu = {:.3}, a_index = {:.3}",
        profile.lambda, profile.mu, profile.a_index
    );

    let hermite = build_k1_hermite(24, &chebyshev_points(8))?;
    println!(
        "hermite element (M = 24, 8 points): vanish_tol = {:.3e}",
        hermite.vanish_tol
    );
    if let Some(p) = hermite.support_profile {
        println!(
            "  profile: lambda = {:.3}, mu = {:.3}, a_index = {:.3}",
            p.lambda, p.mu, p.a_index
        );
    }
    Ok(())
}
