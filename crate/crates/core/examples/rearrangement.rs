//! The rearrangement toolkit: the half-mass identity, the matrix exchange
//! step, the convolution–rearrangement bound and the P-versus-Q comparison
//! with its root-finding hypothesis.
//!
//!     cargo run --release --example rearrangement

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hardy_shift::rearrange::{
    conv_rearrangement_check, find_c, half_mass_identity, pq_comparison_check, DeficiencyMatrix, HalfProfile,
};
use hardy_shift::spaces::poisson_profile;
use hardy_shift::CircleFn;

fn main() -> hardy_shift::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let f = CircleFn::new((0..1024).map(|_| rng.gen_range(-1.0..3.0)).collect())?;
    let (lhs, rhs) = half_mass_identity(&f);
    println!("half-mass identity: ∫|f − μ| = {lhs:.15}, 2∫_(f>μ)(f − μ) = {rhs:.15}");

    let a = DeficiencyMatrix::new(vec![vec![0.0, 2.0], vec![1.0, 0.0]], 1.0)?;
    let b = a.exchange_step(1, 1, 0)?;
    println!(
        "exchange: {:?} (D = {}) → {:?} (D = {})",
        a.rows(),
        a.deficiency(),
        b.rows(),
        b.deficiency()
    );
    println!("inadmissible swap rejected: {}", a.exchange_step(0, 0, 1).is_err());

    let p = poisson_profile(512, 0.8, 0.0)?;
    let g = CircleFn::new((0..512).map(|_| rng.gen_range(0.0..1.0)).collect())?;
    println!("\n{}", conv_rearrangement_check(&p, &g, true)?);
    let g = CircleFn::new((0..512).map(|_| rng.gen_range(-1.0..1.0)).collect())?;
    println!("{}", conv_rearrangement_check(&p, &g, false)?);

    let profile = HalfProfile::poisson(0.8, 4096)?;
    println!();
    for a in [0.3, 0.7] {
        println!("c(a = {a}) = {:.6}", find_c(&profile, a, 1.0 - a)?);
        println!("  {}", pq_comparison_check(&profile, a, 1.0 - a)?);
    }
    Ok(())
}
