//! Extremal harmonic families for `𝓑` on h¹: the cutoff `f_n` (mass 1
//! concentrated on an arc of length `1/n`) approaches ratio 2, its
//! sign-alternating variant stays at 1, and a Poisson atom attains the sharp
//! `𝓑_r` constant.
//!
//!     cargo run --release --example cutoff_families

use std::f64::consts::PI;

use hardy_shift::bounds::sharp_szr_constant;
use hardy_shift::operators::{cutoff, ratio, sign_alternating_cutoff, Operator, Space, Subject};
use hardy_shift::spaces::HarmonicFn;

fn main() -> hardy_shift::Result<()> {
    let grid = 1 << 14;
    println!("{:>4} {:>12} {:>12} {:>12}", "n", "f_n ratio", "2 − 2/(πn)", "g_n ratio");
    for n in [1, 2, 4, 16, 64] {
        let f = cutoff(n, grid)?;
        let g = sign_alternating_cutoff(n, grid)?;
        let rf = ratio(Operator::Subtract, Subject::Harmonic(&f), &Space::HarmonicH1, grid)?;
        let rg = ratio(Operator::Subtract, Subject::Harmonic(&g), &Space::HarmonicH1, grid)?;
        println!("{n:>4} {rf:>12.8} {:>12.8} {rg:>12.8}", 2.0 - 2.0 / (PI * n as f64));
    }
    println!();
    let atom = HarmonicFn::atom(grid, 1.0, 0.0)?;
    for r in [0.25, 0.5, 0.75] {
        let got = ratio(Operator::SubtractAtRadius(r), Subject::Harmonic(&atom), &Space::HarmonicH1, grid)?;
        println!("Poisson atom, r = {r}: ‖𝓑_r P‖/‖P‖ = {got:.9}, sharp constant {:.9}", sharp_szr_constant(r)?);
    }
    Ok(())
}
