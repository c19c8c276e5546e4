//! The threshold loop shared by the deterministic and stochastic solvers.
//!
//! Directions are the polytope's basis scaled by its max ℓ1 norm `R`, so
//! moving for unit time along any average of them travels ℓ1 distance `R`
//! and the horizon `t ≤ 1` spans the whole region. A step of length `δ`
//! moves `x` by `δ/|S| · Σ_{i∈S} R ν_i` and must pass
//! `F(x_new) − F(x) ≥ rate(λ, t) · (‖Σ ν_i‖₁ / |S|) · δ`.

use crate::config::SolverConfig;
use crate::error::{Error, Result};
use crate::polytopes::Polytope;
use crate::trace::{Snapshot, Solution, SolverTrace};

use super::line_search::StepSearch;
use super::select::select_directions;

/// `t` within this distance of 1 counts as finished.
pub(crate) const T_EPS: f64 = 1e-12;

pub(crate) trait Driver {
    /// Vector used for direction selection at `x`.
    fn gradient(&mut self, x: &[f64], trace: &mut SolverTrace) -> Result<Vec<f64>>;

    /// `F(x)` as seen by the ascent test, given the last known value.
    fn base_value(&mut self, x: &[f64], known: f64, trace: &mut SolverTrace) -> f64;

    /// Values at a batch of probe points.
    fn eval(&mut self, points: &[Vec<f64>], trace: &mut SolverTrace) -> Vec<f64>;

    /// Right-hand side of the ascent test per unit step, before the
    /// direction-norm factor.
    fn rate(&self, lambda: f64, t: f64) -> f64;

    /// Step cap from the locality and threshold parameters (without `1 − t`).
    fn step_cap(&self) -> f64;

    /// Hook after an accepted step; `t_before` is `t` prior to the update.
    fn after_step(&mut self, x: &[f64], t_before: f64, trace: &mut SolverTrace) -> Result<()>;

    /// Value recorded in the trace for an accepted point.
    fn report_value(&self, x: &[f64], probe_value: f64) -> f64;

    /// Called when no step along the selected set passed the ascent test.
    fn on_stale(&mut self, _x: &[f64], _t: f64, _trace: &mut SolverTrace) -> Result<()> {
        Ok(())
    }
}

pub(crate) struct Start {
    pub x: Vec<f64>,
    pub t: f64,
    pub value: f64,
    pub lambda: f64,
    /// The outer loop stops once `lambda` falls below this level.
    pub stop_level: f64,
}

pub(crate) struct Geometry {
    pub basis: Vec<Vec<f64>>,
    pub directions: Vec<Vec<f64>>,
}

impl Geometry {
    pub fn new<P: Polytope + ?Sized>(p: &P) -> Result<Self> {
        let basis = p.basis();
        if basis.is_empty() {
            return Err(Error::EmptyBasis);
        }
        let reach = p.max_l1_norm();
        let directions = basis
            .iter()
            .map(|nu| nu.iter().map(|v| v * reach).collect())
            .collect();
        Ok(Self { basis, directions })
    }

    /// Directions along which not even a `delta_tol` step is feasible.
    pub fn blocked<P: Polytope + ?Sized>(&self, p: &P, x: &[f64], cfg: &SolverConfig) -> Vec<bool> {
        self.directions
            .iter()
            .map(|d| p.max_step(x, d, cfg.delta_tol, cfg.value_tol) < cfg.delta_tol)
            .collect()
    }

    /// Average of the selected scaled directions, and `‖Σ ν_i‖₁ / |S|` over
    /// the unscaled ones.
    pub fn combine(&self, members: &[usize]) -> (Vec<f64>, f64) {
        let n = self.directions[0].len();
        let k = members.len() as f64;
        let mut dir = vec![0.0; n];
        let mut sum = vec![0.0; n];
        for &i in members {
            for j in 0..n {
                dir[j] += self.directions[i][j] / k;
                sum[j] += self.basis[i][j];
            }
        }
        (dir, crate::l1(&sum) / k)
    }
}

pub(crate) fn run<D: Driver, P: Polytope + ?Sized>(
    driver: &mut D,
    p: &P,
    cfg: &SolverConfig,
    geometry: &Geometry,
    start: Start,
    mut trace: SolverTrace,
) -> Result<Solution> {
    let Start {
        mut x,
        mut t,
        mut value,
        mut lambda,
        stop_level,
    } = start;
    let round_cap = cfg.outer_round_cap();
    trace.history.push(Snapshot {
        t,
        lambda,
        delta: 0.0,
        selected: 0,
        value,
    });

    while t < 1.0 - T_EPS && lambda >= stop_level {
        if trace.outer_rounds as usize >= round_cap {
            return Err(Error::RoundCapExceeded { cap: round_cap });
        }
        trace.outer_rounds += 1;
        trace.thresholds.push(lambda);

        let blocked = geometry.blocked(p, &x, cfg);
        if blocked.iter().all(|b| *b) {
            break;
        }
        let g = driver.gradient(&x, &mut trace)?;
        let mut set =
            select_directions(&g, &geometry.directions, &blocked, lambda, cfg, &mut trace);

        while !set.is_empty() && t < 1.0 - T_EPS {
            trace.inner_rounds += 1;
            let (dir, norm) = geometry.combine(&set.members);
            let cap = driver.step_cap().min(1.0 - t);
            let cap = p.max_step(&x, &dir, cap, cfg.value_tol);
            let base = driver.base_value(&x, value, &mut trace);
            let search = StepSearch {
                x: &x,
                dir: &dir,
                base_value: base,
                rate: driver.rate(lambda, t) * norm,
                cap,
                delta_tol: cfg.delta_tol,
                slack: cfg.value_tol * (1.0 + base.abs()),
            };
            let (choice, rounds) = search.run(|pts| driver.eval(pts, &mut trace));
            trace.adaptive_rounds += rounds;
            if choice.delta == 0.0 {
                // Stale set: fall through to the threshold decay.
                driver.on_stale(&x, t, &mut trace)?;
                break;
            }
            let t_before = t;
            x = choice.point;
            t += choice.delta;
            value = driver.report_value(&x, choice.value);
            driver.after_step(&x, t_before, &mut trace)?;
            trace.history.push(Snapshot {
                t,
                lambda,
                delta: choice.delta,
                selected: set.len(),
                value,
            });
            if t >= 1.0 - T_EPS {
                break;
            }
            let blocked = geometry.blocked(p, &x, cfg);
            let g = driver.gradient(&x, &mut trace)?;
            set = select_directions(&g, &geometry.directions, &blocked, lambda, cfg, &mut trace);
        }
        lambda *= 1.0 - cfg.epsilon;
    }

    Ok(Solution {
        x,
        value,
        trace,
        lambda_final: lambda,
        t_final: t,
        kappa_final: None,
    })
}

pub(crate) fn ensure_finite(v: &[f64], what: &'static str) -> Result<()> {
    if v.iter().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFinite { what })
    }
}
