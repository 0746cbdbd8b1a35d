//! The Riesz–Thorin bound `2^{|1 − 2/p|}` for `B` and `𝓑` on H^p, against
//! the best ratio found by searching random real polynomials.
//!
//!     cargo run --release --example interpolation

use hardy_shift::bounds::{interpolation_bound, proven_upper_bound};
use hardy_shift::operators::{search_lower_bound, ExtremalFamily, Operator, SearchSettings, Space};

fn main() -> hardy_shift::Result<()> {
    println!("{:>6} {:>12} {:>12} {:>14}", "p", "bound", "proven", "search (B)");
    for p in [1.0, 4.0 / 3.0, 2.0, 3.0, f64::INFINITY] {
        let space = Space::Hardy(p);
        let report = search_lower_bound(
            Operator::BackwardShift,
            &space,
            &ExtremalFamily::poly(6),
            SearchSettings::new(400, 1).with_grid(1024),
        )?;
        println!(
            "{p:>6.3} {:>12.6} {:>12.6} {:>14.6}",
            interpolation_bound(p)?,
            proven_upper_bound(Operator::BackwardShift, &space).unwrap_or(f64::NAN),
            report.best_ratio
        );
    }
    Ok(())
}
