//! Locate the nontrivial zeros below a height, validate the count against
//! the argument principle, and print the block partition used for zero sums.

use zetalab::zeta::{argument_principle_count, find_zeros, zeta};

fn main() -> zetalab::Result<()> {
    let t_max = 60.0;
    let table = find_zeros(t_max)?;
    println!("zeros below {t_max}: {}", table.len());
    println!("argument-principle count: {}", argument_principle_count(t_max)?);
    println!("{:>4} {:>22} {:>14} {:>24}", "n", "gamma", "|zeta(rho)|", "zeta'(rho)");
    for z in &table.zeros {
        println!(
            "{:>4} {:>22.15} {:>14.2e} {:>11.6} + {:.6}i",
            z.index,
            z.gamma,
            zeta(z.rho())?.norm(),
            z.zeta_prime.re,
            z.zeta_prime.im
        );
    }
    println!("block bounds T_n (gap midpoints, T_n > n):");
    println!("  {:?}", table.block_bounds);
    Ok(())
}
