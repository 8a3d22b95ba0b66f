//! Poisson summation with a scaling parameter,
//! Σ F₊(φ)(nu) = (1/u) Σ φ(m/u): for the Gaussian this is the Jacobi theta
//! identity; a bump function exercises the quadrature route.

use zetalab::copoisson::poisson_residual;
use zetalab::mellin::TestFunction;

fn main() -> zetalab::Result<()> {
    let gaussian = TestFunction::gaussian(1.0, 1.0)?;
    for u in [1.0, std::f64::consts::SQRT_2, 2.0, 0.7] {
        println!(
            "gaussian, u = {u:<10.6}: residual {:.3e}",
            poisson_residual(&gaussian, u)?
        );
    }
    let bump = TestFunction::bump(0.5, 2.0)?;
    for u in [1.0, 1.5] {
        println!(
            "bump(0.5, 2), u = {u:<6}: residual {:.3e}",
            poisson_residual(&bump, u)?
        );
    }
    Ok(())
}
