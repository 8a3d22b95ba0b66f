//! The functional-equation multiplier χ(s) = π^{s-1/2}Γ((1-s)/2)/Γ(s/2):
//! χ(s)χ(1-s) = 1, ζ(s) = χ(s)ζ(1-s), and the symmetric completed form.

use zetalab::specfun::{chi, Cx, PI};
use zetalab::zeta::{completed_symmetry_residual, functional_equation_residual, zeta};

fn main() -> zetalab::Result<()> {
    println!("chi(1/2)          = {}", chi(Cx::new(0.5, 0.0))?);
    let chi2 = chi(Cx::new(2.0, 0.0))?;
    println!("chi(2)            = {:.12}", chi2.re);
    println!("-2 pi^2           = {:.12}", -2.0 * PI * PI);
    let cross = zeta(Cx::new(2.0, 0.0))? / zeta(Cx::new(-1.0, 0.0))?;
    println!("zeta(2)/zeta(-1)  = {:.12}", cross.re);

    for s in [Cx::new(0.3, 7.0), Cx::new(-1.2, 21.5), Cx::new(2.4, -13.0)] {
        let product = chi(s)? * chi(Cx::new(1.0, 0.0) - s)?;
        println!(
            "s = {s:>12}: |chi(s)chi(1-s) - 1| = {:.2e}, zeta residual = {:.2e}, completed residual = {:.2e}",
            (product - Cx::new(1.0, 0.0)).norm(),
            functional_equation_residual(s)?,
            completed_symmetry_residual(s)?,
        );
    }
    Ok(())
}
