use serde::{Deserialize, Serialize};

/// State recorded after the start point and after every accepted step.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Snapshot {
    pub t: f64,
    pub lambda: f64,
    pub delta: f64,
    pub selected: usize,
    pub value: f64,
}

/// Work accounting for one solver run.
///
/// `adaptive_rounds` counts phases whose oracle queries depend on the
/// result of an earlier phase; queries inside one phase may run
/// concurrently. `value_queries` and `gradient_queries` count every oracle
/// call the solver issued, including the bound evaluations at start-up.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SolverTrace {
    pub outer_rounds: u64,
    pub inner_rounds: u64,
    pub adaptive_rounds: u64,
    pub value_queries: u64,
    pub gradient_queries: u64,
    /// Threshold used by each outer round.
    pub thresholds: Vec<f64>,
    pub history: Vec<Snapshot>,
}

impl SolverTrace {
    /// Outer threshold updates plus inner step iterations.
    pub fn total_rounds(&self) -> u64 {
        self.outer_rounds + self.inner_rounds
    }

    /// Largest drop between consecutive history values (0 when monotone).
    pub fn max_value_drop(&self) -> f64 {
        self.history
            .windows(2)
            .map(|w| w[0].value - w[1].value)
            .fold(0.0, f64::max)
    }

    /// Distinct threshold values in the order they were used.
    pub fn lambdas(&self) -> Vec<f64> {
        let mut out: Vec<f64> = Vec::new();
        for s in &self.history {
            if out.last() != Some(&s.lambda) {
                out.push(s.lambda);
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Solution {
    pub x: Vec<f64>,
    pub value: f64,
    pub trace: SolverTrace,
    pub lambda_final: f64,
    pub t_final: f64,
    /// Variance envelope at `t_final`; set by the stochastic solver only.
    pub kappa_final: Option<f64>,
}
