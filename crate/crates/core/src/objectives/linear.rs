use crate::error::{Error, Result};

use super::Objective;

/// `F(x) = bᵀx` with `b ≥ 0`; OSS for every σ and η-local for every η.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearObjective {
    b: Vec<f64>,
}

impl LinearObjective {
    pub fn new(b: Vec<f64>) -> Result<Self> {
        if b.is_empty() {
            return Err(Error::param("b", "empty coefficient vector"));
        }
        if b.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::param(
                "b",
                "coefficients must be finite and nonnegative",
            ));
        }
        Ok(Self { b })
    }

    /// `F(x) = Σ x_i`.
    pub fn ones(n: usize) -> Self {
        Self { b: vec![1.0; n] }
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.b
    }
}

impl Objective for LinearObjective {
    fn dim(&self) -> usize {
        self.b.len()
    }

    fn value(&self, x: &[f64]) -> f64 {
        crate::dot(&self.b, x)
    }

    fn gradient(&self, _x: &[f64]) -> Vec<f64> {
        self.b.clone()
    }

    fn hessian_form(&self, _x: &[f64], _u: &[f64]) -> Option<f64> {
        Some(0.0)
    }
}
