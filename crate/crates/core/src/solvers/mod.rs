//! Solvers and the grid oracle.

mod brute;
mod estimate;
mod greedy;
mod jspg;
mod line_search;
mod select;
mod serial;
mod spg;

pub use brute::{brute_force_opt, grid_size, GridOpt, MAX_GRID_DIM, MAX_GRID_POINTS};
pub use estimate::{kappa, rho, update_gradient_estimate, GradientEstimate};
pub use jspg::jspg_solve;
pub use select::{select_directions, DirectionSet};
pub use serial::serial_baseline_solve;
pub use spg::{spg_solve, warmup_updates};

use crate::config::SolverConfig;
use crate::error::Result;
use crate::objectives::Objective;
use crate::polytopes::Polytope;

/// Largest `δ` passing the ascent test of one deterministic step:
///
/// ```text
/// F(x + δ·dir) − F(x) ≥ μ (1 − ε)² δ λ
/// δ ≤ min{1/(nη), 1/(μ(1 − ε)), 1 − t},   x + δ·dir ∈ P
/// ```
///
/// where `dir` is the average of the selected directions (each scaled to
/// the polytope's max ℓ1 norm, as the solvers do). Returns 0 when even
/// `delta_tol` fails. Counts queries and rounds into `trace`.
#[allow(clippy::too_many_arguments)]
pub fn choose_max_delta<O, P>(
    obj: &O,
    p: &P,
    x: &[f64],
    members: &[usize],
    lambda: f64,
    t: f64,
    cfg: &SolverConfig,
    trace: &mut crate::trace::SolverTrace,
) -> Result<f64>
where
    O: Objective + ?Sized,
    P: Polytope + ?Sized,
{
    cfg.validate()?;
    let geometry = greedy::Geometry::new(p)?;
    let (dir, norm) = geometry.combine(members);
    let n = p.dim() as f64;
    let eps = cfg.epsilon;
    let mu = cfg.mu();
    let local = if cfg.eta > 0.0 {
        1.0 / (n * cfg.eta)
    } else {
        f64::INFINITY
    };
    let cap = local.min(1.0 / (mu * (1.0 - eps))).min(1.0 - t);
    let cap = p.max_step(x, &dir, cap, cfg.value_tol);
    let base = obj.value(x);
    trace.value_queries += 1;
    let search = line_search::StepSearch {
        x,
        dir: &dir,
        base_value: base,
        rate: mu * (1.0 - eps) * (1.0 - eps) * lambda * norm,
        cap,
        delta_tol: cfg.delta_tol,
        slack: cfg.value_tol * (1.0 + base.abs()),
    };
    let (choice, rounds) = search.run(|pts| {
        trace.value_queries += pts.len() as u64;
        pts.iter().map(|q| obj.value(q)).collect()
    });
    trace.adaptive_rounds += rounds + 1;
    Ok(choice.delta)
}
