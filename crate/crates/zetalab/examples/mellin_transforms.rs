//! The numerical Mellin engine: transforms of bumps and Gaussians, the
//! functional equation under the cosine transform, inverse Mellin
//! round-trips, and the truncated kernel expansion of F₊(1_{t>a}t^{-s}).

use zetalab::mellin::{
    cosine_transform, inverse_mellin, kernel_series, mellin_right, MellinSamples, TestFunction,
};
use zetalab::specfun::Cx;

fn main() -> zetalab::Result<()> {
    let g = TestFunction::bump(0.5, 2.0)?;
    for tau in [0.0, 10.0, 50.0] {
        let v = mellin_right(&g, Cx::new(0.5, tau))?;
        println!("g_hat(1/2 + {tau:>4}i) = {:+.6e}{:+.6e}i  (|.| = {:.3e})", v.re, v.im, v.norm());
    }
    let gauss = TestFunction::gaussian(2.0, 1.0)?;
    println!(
        "gaussian self-duality: F+(2e^(-pi t^2))(0.8) = {:.12} vs 2e^(-pi 0.64) = {:.12}",
        cosine_transform(&gauss, 0.8)?,
        2.0 * (-std::f64::consts::PI * 0.64).exp()
    );

    // Round trip through critical-line samples.
    let samples = MellinSamples::on_critical_line(&|s| mellin_right(&g, s), 340.0, 0.05)?;
    for t in [1.0, 1.7, 0.3] {
        let (value, tail) = inverse_mellin(&samples, t)?;
        println!(
            "inverse Mellin at t = {t}: {value:+.8} (g = {:+.8}, tail est {tail:.1e})",
            g.eval(t)
        );
    }

    // Kernel expansion of the truncated power transform.
    let ks = kernel_series(1.0, Cx::new(0.5, 0.0), 0.25, 40)?;
    println!(
        "F+(1_(t>1) t^(-1/2))(1/4) = {:+.10}{:+.10}i (next-term bound {:.1e})",
        ks.value.re, ks.value.im, ks.next_term_bound
    );
    Ok(())
}
