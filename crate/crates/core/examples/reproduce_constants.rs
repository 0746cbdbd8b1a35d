//! Re-derives the three headline bounds by optimizing the free parameters of
//! each contradiction argument, then checks the published witnesses.
//!
//!     cargo run --release --example reproduce_constants

use hardy_shift::bounds::{
    optimize_a1, optimize_h1_bshift, optimize_h1_szop, verify_a1_witness, verify_h1_bshift_witness,
    verify_h1_szop_witness,
};

fn main() -> hardy_shift::Result<()> {
    for (label, opt) in [
        ("‖𝓑‖ on H¹", optimize_h1_szop()?),
        ("‖B‖ on H¹", optimize_h1_bshift()?),
        ("‖𝓑‖ on A¹(μ), μ increasing", optimize_a1()?),
    ] {
        println!(
            "{label:<30} ≤ {:.6}   α* = {:.6}  β = {:.6}{}",
            opt.bound,
            opt.alpha,
            opt.beta,
            opt.gamma.map(|g| format!("  γ = {g:.6}")).unwrap_or_default()
        );
        println!("    {}", opt.witness);
    }
    println!("\npublished witnesses:");
    println!("    {}", verify_h1_szop_witness(0.047604, 0.127079, 0.104634)?);
    println!("    {}", verify_h1_bshift_witness(0.295302, 0.476286)?);
    println!("    {}", verify_a1_witness(0.165, 0.506)?);
    Ok(())
}
