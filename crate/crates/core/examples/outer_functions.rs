//! Outer functions with prescribed boundary modulus, and the two
//! concentration bounds they obey: a randomly drawn instance of each.
//!
//!     cargo run --release --example outer_functions

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hardy_shift::bounds::concentration::{thm1_instance, thm2_instance};
use hardy_shift::spaces::OuterFn;
use hardy_shift::CircleFn;

fn main() -> hardy_shift::Result<()> {
    let n = 4096;
    let psi = CircleFn::from_fn(n, |t| 1.5 + t.cos())?;
    let outer = OuterFn::new(&psi)?;
    let log_mean = psi.map(|v| v.ln())?.mean();
    println!("ψ = 1.5 + cos θ");
    println!("  F(0) = {:.12}, exp(mean log ψ) = {:.12}", outer.value_at_origin(), log_mean.exp());
    let boundary = outer.boundary_values()?;
    let worst = boundary
        .samples()
        .iter()
        .zip(psi.samples())
        .map(|(a, b)| (a.norm() - b).abs())
        .fold(0.0, f64::max);
    println!("  max | |F(e^{{iθ}})| − ψ(θ) | = {worst:.3e}");
    println!("  F(0.5) = {}", outer.eval_direct(Complex64::new(0.5, 0.0))?);

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    println!("\nrandom instances:");
    for _ in 0..3 {
        if let Some(c) = thm2_instance(&mut rng, n)? {
            println!("  {c}");
        }
        if let Some(c) = thm1_instance(&mut rng, n)? {
            println!("  {c}");
        }
    }
    Ok(())
}
