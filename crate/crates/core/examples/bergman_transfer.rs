//! Transferring Hardy-space bounds to weighted Bergman spaces `A^p(w)` for
//! radial weights, checked on a random polynomial.
//!
//!     cargo run --release --example bergman_transfer

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hardy_shift::bounds::transfer::multiply_by_z_check;
use hardy_shift::bounds::{bergman_bshift_transfer_check, bergman_transfer_check, interpolation_bound, H1_SZOP_BOUND};
use hardy_shift::spaces::{bergman_norm, RadialWeight, TaylorFn, DEFAULT_RADIAL_NODES};

fn main() -> hardy_shift::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let f = TaylorFn::new(
        (0..=8)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect(),
    )?;
    let grid = 1024;
    for w in [
        RadialWeight::uniform(DEFAULT_RADIAL_NODES)?,
        RadialWeight::power(2.0, DEFAULT_RADIAL_NODES)?,
        RadialWeight::power(4.0, DEFAULT_RADIAL_NODES)?,
    ] {
        println!("w(r) = {}  (total mass {:.6})", w.label(), w.total_mass());
        println!("  ‖f‖_(A¹) = {:.9}", bergman_norm(&f, 1.0, &w, grid)?);
        for p in [1.0, 2.0, 4.0] {
            println!("  {}", bergman_transfer_check(&f, p, &w, interpolation_bound(p)?, grid)?);
        }
        println!("  {}", multiply_by_z_check(&f, &w, grid)?);
        println!("  {}", bergman_bshift_transfer_check(&f, &w, H1_SZOP_BOUND, grid)?);
    }
    Ok(())
}
