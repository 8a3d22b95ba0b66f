//! Mellin factorization of the co-Poisson sum: the transform of
//! F(t) = Σ g(t/n)/n - ĝ(1) is exactly ζ(s)·ĝ(s) on the critical strip,
//! so F's transform inherits every nontrivial zero.

use zetalab::copoisson::{copoisson_mellin_check, CoPoissonElement};
use zetalab::mellin::TestFunction;
use zetalab::specfun::Cx;
use zetalab::zeta::find_zeros;

fn main() -> zetalab::Result<()> {
    let g = TestFunction::bump(0.5, 2.0)?;
    let gamma1 = find_zeros(15.0)?.zeros[0].gamma;
    let grid = [
        Cx::new(0.5, 0.0),
        Cx::new(0.5, 5.0),
        Cx::new(0.5, gamma1),
        Cx::new(0.3, 2.0),
    ];
    let report = copoisson_mellin_check(&g, &grid)?;
    for p in &report.points {
        println!(
            "s = {:.4}+{:.4}i: zeta(s) g_hat(s) = {:+.6e}{:+.6e}i, direct quadrature differs by {:.2e}",
            p.x.re(),
            p.x.im(),
            p.lhs.re(),
            p.lhs.im(),
            p.abs_err
        );
    }
    let element = CoPoissonElement::new(&g)?;
    let at_zero = element.mellin_factored(Cx::new(0.5, gamma1))?;
    println!(
        "at the first zero ordinate the factored side collapses: |zeta(rho) g_hat(rho)| = {:.2e}",
        at_zero.norm()
    );
    Ok(())
}
