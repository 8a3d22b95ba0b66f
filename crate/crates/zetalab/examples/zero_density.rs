//! Zero counting by the argument principle: the completed transform of a
//! Sonine element factors as π^{-s/2}Γ(s/2)ζ(s)ĝ*(s), so a direct winding
//! count over a window must equal the zeta count plus the count for ĝ*
//! alone, and the total tracks (T/2π)·log T.

use zetalab::mellin::TestFunction;
use zetalab::sonine::{normalize_moments, zero_density_report};
use zetalab::zeta::find_zeros;

fn main() -> zetalab::Result<()> {
    let zeros = find_zeros(100.0)?;
    let bump = TestFunction::bump(0.4, 2.5)?;
    let g_star = normalize_moments(&bump)?.function;
    for t in [50.0, 100.0] {
        let report = zero_density_report(&g_star, t, &zeros)?;
        println!(
            "T = {t}: direct {} = zeta {} + gstar {} (sum {}), predicted {:.1}, ratio {:.3}",
            report.direct.winding_count,
            report.zeta_count,
            report.gstar.winding_count,
            report.component_sum,
            report.predicted,
            report.ratio
        );
    }
    Ok(())
}
