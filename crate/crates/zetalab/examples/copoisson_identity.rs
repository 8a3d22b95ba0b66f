//! The co-Poisson intertwining identity:
//! F₊(Σ g(m/t)/t - ĝ(0)) = Σ g(t/n)/n - ĝ(1).
//!
//! Either side is constant on (0, a): the sum side equals -ĝ(1) there, its
//! cosine transform equals -ĝ(0).

use zetalab::copoisson::{copoisson_identity_check, default_u_grid, CoPoissonElement};
use zetalab::mellin::TestFunction;

fn main() -> zetalab::Result<()> {
    let g = TestFunction::bump(0.5, 2.0)?;
    let element = CoPoissonElement::new(&g)?;
    let (a, big_a) = element.support();
    println!("support [a, A] = [{a}, {big_a}] (aA = 1 after rescaling)");
    println!("plateau constants: -g_hat(1) = {:+.9}, -g_hat(0) = {:+.9}", element.c_low, element.c_dual);
    for t in [0.1, 0.25, 0.45] {
        println!("  F({t:<4}) = {:+.9}  (constant region)", element.eval(t));
    }
    let grid = default_u_grid(a, big_a);
    let report = copoisson_identity_check(&g, &grid)?;
    println!("u-grid identity residuals:");
    for p in &report.points {
        println!(
            "  u = {:<6}: lhs {:+.9e}, rhs {:+.9e}, |diff| = {:.2e}",
            p.x.re(),
            p.lhs.re(),
            p.rhs.re(),
            p.abs_err
        );
    }
    println!("max residual: {:.2e}", report.max_abs_err);
    Ok(())
}
