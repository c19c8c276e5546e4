use rayon::prelude::*;

use crate::config::SolverConfig;
use crate::error::{Error, Result};
use crate::objectives::Objective;
use crate::polytopes::Polytope;
use crate::trace::{Solution, SolverTrace};

use super::greedy::{self, ensure_finite, Driver, Geometry, Start};

struct Exact<'a, O: ?Sized> {
    obj: &'a O,
    cfg: &'a SolverConfig,
    n: usize,
    cached: Option<Vec<f64>>,
}

impl<O: Objective + ?Sized> Driver for Exact<'_, O> {
    fn gradient(&mut self, x: &[f64], trace: &mut SolverTrace) -> Result<Vec<f64>> {
        if let Some(g) = &self.cached {
            return Ok(g.clone());
        }
        let g = self.obj.gradient(x);
        trace.gradient_queries += 1;
        ensure_finite(&g, "gradient")?;
        self.cached = Some(g.clone());
        Ok(g)
    }

    fn base_value(&mut self, _x: &[f64], known: f64, _trace: &mut SolverTrace) -> f64 {
        known
    }

    fn eval(&mut self, points: &[Vec<f64>], trace: &mut SolverTrace) -> Vec<f64> {
        trace.value_queries += points.len() as u64;
        points.par_iter().map(|p| self.obj.value(p)).collect()
    }

    fn rate(&self, lambda: f64, _t: f64) -> f64 {
        let eps = self.cfg.epsilon;
        self.cfg.mu() * (1.0 - eps) * (1.0 - eps) * lambda
    }

    fn step_cap(&self) -> f64 {
        let local = if self.cfg.eta > 0.0 {
            1.0 / (self.n as f64 * self.cfg.eta)
        } else {
            f64::INFINITY
        };
        local.min(1.0 / (self.cfg.mu() * (1.0 - self.cfg.epsilon)))
    }

    fn after_step(&mut self, _x: &[f64], _t_before: f64, _trace: &mut SolverTrace) -> Result<()> {
        self.cached = None;
        Ok(())
    }

    fn report_value(&self, _x: &[f64], probe_value: f64) -> f64 {
        probe_value
    }
}

/// Jump-start parallel greedy.
///
/// Starts at `α · max_l1_point` with `t = α`, sets the threshold `λ` to the
/// upper OPT bound and decays it by `(1 − ε)` whenever no selected
/// direction admits a step. The loop ends when `t` reaches 1 or `λ` drops
/// below `e^{−μ}` times the lower OPT bound; the lower bound stands in for
/// the unknown OPT, so the loop runs at least as long as it would with OPT.
pub fn jspg_solve<O, P>(obj: &O, p: &P, cfg: &SolverConfig) -> Result<Solution>
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
    let mut trace = SolverTrace::default();

    let top = p.max_l1_point();
    let x0: Vec<f64> = top.iter().map(|v| cfg.alpha * v).collect();
    let probes = [top, vec![1.0; n], x0];
    let values: Vec<f64> = probes.par_iter().map(|q| obj.value(q)).collect();
    trace.value_queries += 3;
    trace.adaptive_rounds += 1;
    ensure_finite(&values, "objective value")?;
    let (lower, upper, start_value) = (values[0], values[1], values[2]);
    let [_, _, x0] = probes;

    let start = Start {
        x: x0,
        t: cfg.alpha,
        value: start_value,
        lambda: upper,
        stop_level: stop_level(lower, upper, cfg),
    };
    let mut driver = Exact {
        obj,
        cfg,
        n,
        cached: None,
    };
    greedy::run(&mut driver, p, cfg, &geometry, start, trace)
}

/// `e^{−μ} · LB`, floored at `value_tol · UB` so a zero lower bound cannot
/// keep the threshold decaying forever. A non-positive `UB` means `F ≡ 0`
/// on the box; the returned level then stops the loop immediately.
pub(crate) fn stop_level(lower: f64, upper: f64, cfg: &SolverConfig) -> f64 {
    if upper <= 0.0 {
        return f64::INFINITY;
    }
    (-cfg.mu()).exp() * lower.max(cfg.value_tol * upper)
}
