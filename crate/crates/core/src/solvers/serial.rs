use crate::config::SolverConfig;
use crate::error::{Error, Result};
use crate::objectives::Objective;
use crate::polytopes::Polytope;
use crate::trace::{Snapshot, Solution, SolverTrace};

use super::greedy::{ensure_finite, Geometry, T_EPS};

/// Serial continuous greedy: from the same jump start as
/// [`jspg_solve`](super::jspg_solve), repeatedly move along the single
/// unblocked direction with the largest directional derivative for a fixed
/// time step `ε / n`.
///
/// Every step depends on the previous one, so the run takes about `n / ε`
/// adaptive rounds. It carries no approximation guarantee here; it exists
/// to measure the adaptivity gap.
pub fn serial_baseline_solve<O, P>(obj: &O, p: &P, cfg: &SolverConfig) -> Result<Solution>
where
    O: Objective + ?Sized,
    P: Polytope + ?Sized,
{
    cfg.validate()?;
    let n = p.dim();
    if obj.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: obj.dim(),
        });
    }
    let geometry = Geometry::new(p)?;
    let delta = cfg.epsilon / n as f64;
    // Each step either advances t by delta or hits a face and blocks a
    // direction for good, except on order polytopes where blocks can lift.
    let step_cap = 4 * ((1.0 / delta).ceil() as usize + n);

    let mut trace = SolverTrace::default();
    let mut x: Vec<f64> = p.max_l1_point().iter().map(|v| cfg.alpha * v).collect();
    let mut t = cfg.alpha;
    let mut value = obj.value(&x);
    trace.value_queries += 1;
    if !value.is_finite() {
        return Err(Error::NonFinite {
            what: "objective value",
        });
    }
    trace.history.push(Snapshot {
        t,
        lambda: 0.0,
        delta: 0.0,
        selected: 0,
        value,
    });

    while t < 1.0 - T_EPS {
        if trace.inner_rounds as usize >= step_cap {
            return Err(Error::RoundCapExceeded { cap: step_cap });
        }
        // The gradient here shares a round with the value at the same point.
        let g = obj.gradient(&x);
        trace.gradient_queries += 1;
        trace.adaptive_rounds += 1;
        ensure_finite(&g, "gradient")?;

        let blocked = geometry.blocked(p, &x, cfg);
        let best = geometry
            .directions
            .iter()
            .enumerate()
            .filter(|(i, _)| !blocked[*i])
            .map(|(i, d)| (i, crate::dot(d, &g)))
            .fold(None, |acc: Option<(usize, f64)>, (i, s)| match acc {
                Some((_, b)) if b >= s => acc,
                _ => Some((i, s)),
            });
        let Some((i, _)) = best else { break };

        let dir = &geometry.directions[i];
        let step = p.max_step(&x, dir, delta.min(1.0 - t), cfg.value_tol);
        if step <= 0.0 {
            break;
        }
        for (xj, dj) in x.iter_mut().zip(dir) {
            *xj = (*xj + step * dj).clamp(0.0, 1.0);
        }
        t += step;
        value = obj.value(&x);
        trace.value_queries += 1;
        trace.inner_rounds += 1;
        if !value.is_finite() {
            return Err(Error::NonFinite {
                what: "objective value",
            });
        }
        trace.history.push(Snapshot {
            t,
            lambda: 0.0,
            delta: step,
            selected: 1,
            value,
        });
    }
    // Value at the final point is its own round.
    trace.adaptive_rounds += 1;

    Ok(Solution {
        x,
        value,
        trace,
        lambda_final: 0.0,
        t_final: t,
        kappa_final: None,
    })
}
