//! Solver parameters and the two closed-form constants every solver shares:
//! the contraction factor `mu = (alpha / (alpha + 1))^(2 sigma)` and the
//! guaranteed approximation ratio `(1 - epsilon)(1 - e^-mu)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Lower clamp on epsilon used to size the runaway guard on outer rounds.
const EPSILON_FLOOR: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SolverConfig {
    /// Jump-start scale, in (0, 1].
    pub alpha: f64,
    /// Threshold decay and accuracy parameter, in (0, 1).
    pub epsilon: f64,
    /// Locality parameter; zero disables the `1 / (n eta)` step cap.
    pub eta: f64,
    /// Claimed one-sided smoothness of the objective.
    pub sigma: f64,
    /// Absolute resolution of the step-size search.
    pub delta_tol: f64,
    /// Relative tolerance for value comparisons.
    pub value_tol: f64,
    /// Safety cap on threshold updates; `None` derives it from epsilon.
    pub max_outer_rounds: Option<usize>,
    /// Samples per empirical-mean evaluation in the stochastic solver.
    pub spg_batch: usize,
    /// Lipschitz constant of the gradient.
    pub lipschitz: f64,
    /// Euclidean radius of the feasible region.
    pub diameter: f64,
    /// Standard deviation bound of the stochastic gradient.
    pub noise_theta: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            alpha: 0.05,
            epsilon: 0.1,
            eta: 0.0,
            sigma: 0.0,
            delta_tol: 1e-6,
            value_tol: 1e-9,
            max_outer_rounds: None,
            spg_batch: 64,
            lipschitz: 0.0,
            diameter: 0.0,
            noise_theta: 0.0,
        }
    }
}

fn check(name: &'static str, value: f64, ok: bool, expect: &str) -> Result<()> {
    if value.is_finite() && ok {
        Ok(())
    } else {
        Err(Error::param(name, format!("{value} is not {expect}")))
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        check(
            "alpha",
            self.alpha,
            self.alpha > 0.0 && self.alpha <= 1.0,
            "in (0, 1]",
        )?;
        check(
            "epsilon",
            self.epsilon,
            self.epsilon > 0.0 && self.epsilon < 1.0,
            "in (0, 1)",
        )?;
        check("eta", self.eta, self.eta >= 0.0, "nonnegative")?;
        check("sigma", self.sigma, self.sigma >= 0.0, "nonnegative")?;
        check(
            "delta_tol",
            self.delta_tol,
            self.delta_tol > 0.0,
            "positive",
        )?;
        check(
            "value_tol",
            self.value_tol,
            self.value_tol > 0.0,
            "positive",
        )?;
        check(
            "lipschitz",
            self.lipschitz,
            self.lipschitz >= 0.0,
            "nonnegative",
        )?;
        check(
            "diameter",
            self.diameter,
            self.diameter >= 0.0,
            "nonnegative",
        )?;
        check(
            "noise_theta",
            self.noise_theta,
            self.noise_theta >= 0.0,
            "nonnegative",
        )?;
        if self.spg_batch == 0 {
            return Err(Error::param("spg_batch", "must be at least 1"));
        }
        if self.max_outer_rounds == Some(0) {
            return Err(Error::param("max_outer_rounds", "must be at least 1"));
        }
        Ok(())
    }

    pub fn mu(&self) -> f64 {
        (self.alpha / (self.alpha + 1.0)).powf(2.0 * self.sigma)
    }

    pub fn outer_round_cap(&self) -> usize {
        self.max_outer_rounds
            .unwrap_or_else(|| (10.0 * (1.0 / EPSILON_FLOOR).ln() / self.epsilon).ceil() as usize)
    }
}

/// `(alpha / (alpha + 1))^(2 sigma)`.
pub fn mu(alpha: f64, sigma: f64) -> Result<f64> {
    check("alpha", alpha, alpha > 0.0 && alpha <= 1.0, "in (0, 1]")?;
    check("sigma", sigma, sigma >= 0.0, "nonnegative")?;
    if sigma == 0.0 {
        return Ok(1.0);
    }
    Ok((alpha / (alpha + 1.0)).powf(2.0 * sigma))
}

/// Acceptance threshold `(1 - epsilon)(1 - e^-mu)` for a validated config.
pub fn guaranteed_ratio(config: &SolverConfig) -> Result<f64> {
    config.validate()?;
    Ok(ratio_for(config.epsilon, config.mu()))
}

/// Same formula without validation; `epsilon = 0` gives the limiting ratio.
pub fn ratio_for(epsilon: f64, mu: f64) -> f64 {
    (1.0 - epsilon) * (1.0 - (-mu).exp())
}
