//! On H^∞ the norm of `𝓑` is 2: Möbius maps `(z − a)/(1 − az)` have
//! `‖𝓑φ_a‖_∞ = 1 + a`, and a coordinate search over `a` climbs towards 2.
//!
//!     cargo run --release --example hinf_mobius

use hardy_shift::operators::{ratio, search_lower_bound, ExtremalFamily, Mobius, Operator, SearchSettings, Space, Subject};

fn main() -> hardy_shift::Result<()> {
    let space = Space::Hardy(f64::INFINITY);
    for a in [0.5, 0.9, 0.99] {
        let phi = Mobius::new(a)?;
        let r = ratio(Operator::Subtract, Subject::Analytic(&phi), &space, 1 << 14)?;
        println!("a = {a:<5} ratio = {r:.8}   1 + a = {:.8}", 1.0 + a);
    }
    let report = search_lower_bound(Operator::Subtract, &space, &ExtremalFamily::mobius(), SearchSettings::new(200, 7))?;
    println!(
        "\nsearch: best ratio {:.6} at a = {:.6} after {} evaluations",
        report.best_ratio, report.best_params[0], report.evaluations
    );
    Ok(())
}
