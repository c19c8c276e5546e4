use rayon::prelude::*;

use crate::config::SolverConfig;
use crate::error::{Error, Result};
use crate::objectives::StochasticOracle;
use crate::polytopes::Polytope;
use crate::trace::{Solution, SolverTrace};

use super::estimate::{kappa, rho, update_gradient_estimate, GradientEstimate};
use super::greedy::{self, ensure_finite, Driver, Geometry, Start};
use super::jspg::stop_level;

/// Number of estimator updates at the start point before the first selection:
/// the smallest `K` with `(1 − ρ₀)^K ≤ value_tol`.
pub fn warmup_updates(value_tol: f64) -> usize {
    let q = 1.0 - rho(0.0);
    (value_tol.ln() / q.ln()).ceil().max(1.0) as usize
}

struct Sampled<'a, S: ?Sized> {
    oracle: &'a S,
    cfg: &'a SolverConfig,
    n: usize,
    rank: f64,
    next_draw: u64,
    estimate: GradientEstimate,
    initial_error_sq: f64,
}

impl<S: StochasticOracle + ?Sized> Sampled<'_, S> {
    fn draws(&mut self, count: usize) -> std::ops::Range<u64> {
        let start = self.next_draw;
        self.next_draw += count as u64;
        start..self.next_draw
    }

    fn mean_values(&mut self, points: &[Vec<f64>], trace: &mut SolverTrace) -> Vec<f64> {
        let batch = self.cfg.spg_batch;
        let jobs: Vec<(&Vec<f64>, std::ops::Range<u64>)> =
            points.iter().map(|p| (p, self.draws(batch))).collect();
        trace.value_queries += (points.len() * batch) as u64;
        let oracle = self.oracle;
        jobs.into_par_iter()
            .map(|(p, draws)| draws.map(|d| oracle.sample_value(p, d)).sum::<f64>() / batch as f64)
            .collect()
    }

    fn refresh(&mut self, x: &[f64], t: f64, trace: &mut SolverTrace) -> Result<()> {
        let draw = self.draws(1).start;
        let sample = self.oracle.sample_gradient(x, draw);
        trace.gradient_queries += 1;
        ensure_finite(&sample, "stochastic gradient")?;
        self.estimate = update_gradient_estimate(&self.estimate, &sample, t);
        Ok(())
    }

    fn kappa(&self, t: f64) -> f64 {
        kappa(
            self.initial_error_sq,
            self.cfg.noise_theta,
            self.cfg.lipschitz,
            self.cfg.diameter,
            t,
        )
    }
}

impl<S: StochasticOracle + ?Sized> Driver for Sampled<'_, S> {
    fn gradient(&mut self, _x: &[f64], _trace: &mut SolverTrace) -> Result<Vec<f64>> {
        Ok(self.estimate.d.clone())
    }

    fn base_value(&mut self, x: &[f64], _known: f64, trace: &mut SolverTrace) -> f64 {
        self.mean_values(&[x.to_vec()], trace)[0]
    }

    fn eval(&mut self, points: &[Vec<f64>], trace: &mut SolverTrace) -> Vec<f64> {
        self.mean_values(points, trace)
    }

    fn rate(&self, lambda: f64, t: f64) -> f64 {
        let eps = self.cfg.epsilon;
        let mu = self.cfg.mu();
        mu * (1.0 - eps) * (1.0 - eps) * (lambda + self.kappa(t).sqrt() * self.rank / mu)
    }

    fn step_cap(&self) -> f64 {
        let mu = self.cfg.mu();
        let local = if self.cfg.eta > 0.0 {
            1.0 / (self.n as f64 * self.cfg.eta)
        } else {
            f64::INFINITY
        };
        local.min(1.0 / (mu * mu * (1.0 - self.cfg.epsilon)))
    }

    fn after_step(&mut self, x: &[f64], t_before: f64, trace: &mut SolverTrace) -> Result<()> {
        self.refresh(x, t_before, trace)
    }

    /// The set came from `d`, so reselecting with the same `d` would
    /// return it again. One more update at the current point lets the
    /// next selection see the gradient there.
    fn on_stale(&mut self, x: &[f64], t: f64, trace: &mut SolverTrace) -> Result<()> {
        trace.adaptive_rounds += 1;
        self.refresh(x, t, trace)
    }

    fn report_value(&self, x: &[f64], probe_value: f64) -> f64 {
        self.oracle.expected_value(x).unwrap_or(probe_value)
    }
}

/// Stochastic parallel greedy.
///
/// Starts from the same jump-start point as [`jspg_solve`](super::jspg_solve)
/// with a zero gradient estimate `d`. Before the first selection the
/// estimate is warmed up with [`warmup_updates`] samples there so that its
/// bias is below `value_tol`. Afterwards `d` is updated once per accepted
/// step using the `t` from before the step, and once more whenever a
/// selected set admits no step. Values in the ascent test are means of
/// `spg_batch` samples, and the test carries the extra
/// `μ⁻¹ κ(t)^{1/2} r` term, with `r` the number of basis directions.
///
/// `Solution::value` and the trace history use the oracle's exact
/// expectation when it reports one.
pub fn spg_solve<S, P>(oracle: &S, p: &P, cfg: &SolverConfig) -> Result<Solution>
where
    S: StochasticOracle + ?Sized,
    P: Polytope + ?Sized,
{
    cfg.validate()?;
    let n = p.dim();
    if oracle.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: oracle.dim(),
        });
    }
    let geometry = Geometry::new(p)?;
    let mut trace = SolverTrace::default();
    let mut driver = Sampled {
        oracle,
        cfg,
        n,
        rank: geometry.basis.len() as f64,
        next_draw: 0,
        estimate: GradientEstimate::zero(n),
        initial_error_sq: 0.0,
    };

    // Bounds, start value and warm-up samples are independent: one round.
    let top = p.max_l1_point();
    let x0: Vec<f64> = top.iter().map(|v| cfg.alpha * v).collect();
    let probes = driver.mean_values(&[top, vec![1.0; n], x0.clone()], &mut trace);
    ensure_finite(&probes, "objective estimate")?;
    let warmup = warmup_updates(cfg.value_tol);
    let draws = driver.draws(warmup);
    let samples: Vec<Vec<f64>> = draws
        .into_par_iter()
        .map(|d| oracle.sample_gradient(&x0, d))
        .collect();
    trace.gradient_queries += warmup as u64;
    trace.adaptive_rounds += 1;
    for s in &samples {
        ensure_finite(s, "stochastic gradient")?;
        driver.estimate = update_gradient_estimate(&driver.estimate, s, 0.0);
    }
    driver.initial_error_sq = initial_error_estimate(&driver.estimate.d, warmup, cfg.noise_theta);
    let k = driver.kappa(cfg.alpha);
    if !k.is_finite() {
        return Err(Error::NonFinite {
            what: "variance envelope",
        });
    }

    let start = Start {
        value: oracle.expected_value(&x0).unwrap_or(probes[2]),
        x: x0,
        t: cfg.alpha,
        lambda: probes[1],
        stop_level: stop_level(probes[0], probes[1], cfg),
    };
    let mut solution = greedy::run(&mut driver, p, cfg, &geometry, start, trace)?;
    solution.kappa_final = Some(driver.kappa(solution.t_final));
    Ok(solution)
}

/// Estimated `‖∇F(x₀) − d‖²` after `updates` warm-up steps at `t = 0`:
/// the remaining bias `q^K ‖∇F(x₀)‖` with `‖∇F(x₀)‖ ≈ ‖d‖ / (1 − q^K)`, plus
/// the stationary variance `ρ₀ θ² / (2 − ρ₀)` of the averaged noise.
fn initial_error_estimate(d: &[f64], updates: usize, theta: f64) -> f64 {
    let r = rho(0.0);
    let qk = (1.0 - r).powi(updates as i32);
    let d_sq: f64 = d.iter().map(|v| v * v).sum();
    let bias_sq = d_sq * (qk / (1.0 - qk)).powi(2);
    bias_sq + r / (2.0 - r) * theta * theta
}
