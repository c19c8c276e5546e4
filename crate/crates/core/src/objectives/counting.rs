use std::sync::atomic::{AtomicU64, Ordering};

use super::Objective;

/// Wraps an objective and tallies every oracle call it receives.
pub struct CountingObjective<O> {
    inner: O,
    values: AtomicU64,
    gradients: AtomicU64,
}

impl<O: Objective> CountingObjective<O> {
    pub fn new(inner: O) -> Self {
        Self {
            inner,
            values: AtomicU64::new(0),
            gradients: AtomicU64::new(0),
        }
    }

    pub fn value_calls(&self) -> u64 {
        self.values.load(Ordering::Relaxed)
    }

    pub fn gradient_calls(&self) -> u64 {
        self.gradients.load(Ordering::Relaxed)
    }

    pub fn into_inner(self) -> O {
        self.inner
    }
}

impl<O: Objective> Objective for CountingObjective<O> {
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn value(&self, x: &[f64]) -> f64 {
        self.values.fetch_add(1, Ordering::Relaxed);
        self.inner.value(x)
    }

    fn gradient(&self, x: &[f64]) -> Vec<f64> {
        self.gradients.fetch_add(1, Ordering::Relaxed);
        self.inner.gradient(x)
    }

    fn hessian_form(&self, x: &[f64], u: &[f64]) -> Option<f64> {
        self.inner.hessian_form(x, u)
    }

    fn sigma_claimed(&self) -> f64 {
        self.inner.sigma_claimed()
    }
}
