//! The Müntz formula on the critical strip:
//! ζ(s)·∫φ(t)t^{s-1}dt = ∫(Σ_{n≥1}φ(nt) - (∫φ)/t)·t^{s-1}dt.

use zetalab::copoisson::{modified_poisson_sum, muntz_check};
use zetalab::mellin::TestFunction;
use zetalab::specfun::Cx;

fn main() -> zetalab::Result<()> {
    let phi = TestFunction::bump(0.5, 2.0)?;
    for t in [3.0, 1.0, 0.2, 0.05] {
        println!("modified Poisson sum at t = {t:<5}: {:+.6e}", modified_poisson_sum(&phi, t)?);
    }
    for s in [Cx::new(0.5, 0.0), Cx::new(0.5, 10.0), Cx::new(0.25, 4.0)] {
        let report = muntz_check(&phi, s)?;
        let point = &report.points[0];
        println!(
            "s = {s}: lhs = {:+.9e}{:+.9e}i, residual = {:.2e}",
            point.lhs.re(),
            point.lhs.im(),
            point.abs_err
        );
    }
    Ok(())
}
