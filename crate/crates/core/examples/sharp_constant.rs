//! The sharp norm of `𝓑_r u = u(r·) − u(0)` on h¹: the closed form
//! `2 − (4/π) arccos r` against a direct quadrature of `‖P_r − 1‖₁`, and its
//! radial average `∫₀¹ … 2r dr = 1`.
//!
//!     cargo run --release --example sharp_constant

use hardy_shift::bounds::{sharp_radial_integral, sharp_szr_constant};
use hardy_shift::spaces::poisson_profile;

fn main() -> hardy_shift::Result<()> {
    let n = 1 << 16;
    println!("{:>5} {:>14} {:>14} {:>10}", "r", "closed form", "quadrature", "diff");
    for i in 1..=9 {
        let r = i as f64 / 10.0;
        let exact = sharp_szr_constant(r)?;
        let quad = poisson_profile(n, r, 0.0)?.sub_constant(1.0).lp_norm(1.0)?;
        println!("{r:>5.1} {exact:>14.10} {quad:>14.10} {:>10.2e}", (exact - quad).abs());
    }
    println!("\n∫₀¹ (2 − (4/π) arccos r) 2r dr = {:.15}", sharp_radial_integral(256)?);
    Ok(())
}
