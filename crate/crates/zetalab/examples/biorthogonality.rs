//! Biorthogonality of the dual system: the completed Mellin transform of
//! ζ(s)/((s-ρ_i)ζ'(ρ_i)π^{-ρ_i/2}Γ(ρ_i/2)) evaluates to δ_ij at s = ρ_j.
//!
//! In double precision the entries with γ_i > γ_j are limited by the
//! ordinate representation: the residual of ζ at a stored zero (~1e-15)
//! is amplified by the Γ-factor ratio e^{π(γ_i-γ_j)/4}. The matrix below
//! makes that precision structure visible rather than hiding it.

use zetalab::zero_series::biorthogonality_check;
use zetalab::zeta::find_zeros;

fn main() -> zetalab::Result<()> {
    let zeros = find_zeros(40.0)?;
    let n = zeros.len().min(6);
    println!("|entry| for the first {n} zeros (rows: dual function i, columns: evaluation j):");
    for i in 0..n {
        let mut row = String::new();
        for j in 0..n {
            let value = biorthogonality_check(&zeros.zeros[i], &zeros.zeros[j])?;
            row.push_str(&format!("{:>10.2e}", value.norm()));
        }
        println!("  {row}");
    }
    println!("diagonal deviation from 1:");
    for i in 0..n {
        let value = biorthogonality_check(&zeros.zeros[i], &zeros.zeros[i])?;
        println!("  i = {i}: {:.3e}", (value - zetalab::Cx::new(1.0, 0.0)).norm());
    }
    Ok(())
}
