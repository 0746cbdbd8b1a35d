//! Randomized realizations of the two concentration theorems with outer
//! functions.

use std::f64::consts::TAU;

use rand::Rng;

use super::certificate::{BoundCertificate, Relation};
use super::closed_form::{thm1_measure_lower_bound, thm2_f0_upper_bound};
use crate::circlefn::{BoundarySet, CircleFn};
use crate::error::Result;
use crate::spaces::OuterFn;

/// One instance of the `|f(0)|` bound: a random positive `ψ` with unit
/// mean that puts mass `1 − ε` on an arc `E` of measure `δ ≤ 0.4`, and the
/// outer function with modulus `ψ`. Returns `None` when the draw misses
/// `0 < ε ≤ 0.4`.
pub fn thm2_instance<R: Rng>(rng: &mut R, grid: usize) -> Result<Option<BoundCertificate>> {
    let delta_target = rng.gen_range(0.02..0.4);
    let start = rng.gen_range(0.0..TAU);
    let arc = BoundarySet::arc(grid, start, start + TAU * delta_target);
    let inside = rng.gen_range(1.0..20.0);
    let outside = rng.gen_range(0.01..1.0);
    let noise = rng.gen_range(0.0..0.5);
    let values: Vec<f64> = (0..grid)
        .map(|k| {
            let base = if arc.contains(k) { inside } else { outside };
            base * (1.0 + noise * rng.gen_range(-1.0..1.0))
        })
        .collect();
    let raw = CircleFn::new(values)?;
    let psi = raw.scale(1.0 / raw.lp_norm(1.0)?);
    let delta = arc.measure();
    let eps = 1.0 - psi.integrate_over(&arc)?;
    if !(eps > 0.0 && eps <= 0.4 && delta > 0.0 && delta <= 0.4) {
        return Ok(None);
    }
    let f0 = OuterFn::new(&psi)?.value_at_origin();
    let bound = thm2_f0_upper_bound(eps, delta)?;
    Ok(Some(
        BoundCertificate::new("thm2-outer", f0, bound, Relation::Le, 1e-9)
            .with_param("eps", eps)
            .with_param("delta", delta),
    ))
}

/// One instance of the measure bound: `f` is the outer function with a
/// two-valued modulus (1 on an arc, `γ'` elsewhere) sampled on the circle of
/// radius `max_radius`, normalized to unit `L¹` norm; `A = {Re f > t}` for a
/// random threshold `t`. Returns `None` unless `ε = 1 − ∫_A Re f < 1/4`.
pub fn thm1_instance<R: Rng>(rng: &mut R, grid: usize) -> Result<Option<BoundCertificate>> {
    let start = rng.gen_range(0.0..TAU);
    let len = TAU * rng.gen_range(0.02..0.5);
    let arc = BoundarySet::arc(grid, start, start + len);
    let low = rng.gen_range(1e-4..0.3);
    let psi = CircleFn::new((0..grid).map(|k| if arc.contains(k) { 1.0 } else { low }).collect())?;
    let outer = OuterFn::new(&psi)?;
    let f = outer.circle_values(outer.max_radius())?;
    let f = f.scale(1.0 / f.lp_norm(1.0)?);
    let re = f.map(|v| v.re)?;
    let top = re.samples().iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let threshold = rng.gen_range(0.0..0.9) * top.max(0.0);
    let set = BoundarySet::level_set(&re, |v| v > threshold);
    let eps = 1.0 - re.integrate_over(&set)?;
    if !(eps > 0.0 && eps < 0.25) {
        return Ok(None);
    }
    let bound = thm1_measure_lower_bound(eps)?;
    Ok(Some(
        BoundCertificate::new("thm1-outer", set.measure(), bound, Relation::Ge, 1e-6)
            .with_param("eps", eps)
            .with_param("gamma_psi", low),
    ))
}
