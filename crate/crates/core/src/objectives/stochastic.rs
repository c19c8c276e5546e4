use std::sync::atomic::{AtomicU64, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::Objective;

/// Sampled access to `F(x) = E_y[f(x, y)]`.
///
/// Every sample is a pure function of `(x, draw)`, so callers that assign
/// draw indices deterministically get reproducible results regardless of
/// how samples are scheduled across threads.
pub trait StochasticOracle: Send + Sync {
    fn dim(&self) -> usize;

    /// One realization `f(x, y_draw)`.
    fn sample_value(&self, x: &[f64], draw: u64) -> f64;

    /// One realization `∇f(x, y_draw)`.
    fn sample_gradient(&self, x: &[f64], draw: u64) -> Vec<f64>;

    /// `F(x)` when the oracle knows it. Used for reporting only.
    fn expected_value(&self, _x: &[f64]) -> Option<f64> {
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NoiseKind {
    /// Independent `U[−a, a]` per coordinate with `a = θ √(3/n)`.
    #[default]
    Uniform,
    /// Independent `N(0, θ²/n)` per coordinate.
    Gaussian,
}

/// A ground-truth objective observed through additive linear noise:
/// `f(x, y) = F(x) + ξ(y)ᵀx`, so `∇f(x, y) = ∇F(x) + ξ(y)`.
///
/// `ξ` has zero mean and `E‖ξ‖² = θ²`; with the default uniform noise the
/// bound also holds for every realization. Value and gradient samples that
/// share a draw index see the same `ξ`.
pub struct NoisyObjective<O> {
    truth: O,
    theta: f64,
    kind: NoiseKind,
    seed: u64,
    next_draw: AtomicU64,
    value_samples: AtomicU64,
    gradient_samples: AtomicU64,
}

impl<O: Objective> NoisyObjective<O> {
    pub fn new(truth: O, theta: f64, kind: NoiseKind, seed: u64) -> Result<Self> {
        if !(theta.is_finite() && theta >= 0.0) {
            return Err(Error::param(
                "theta",
                format!("{theta} is not a nonnegative number"),
            ));
        }
        Ok(Self {
            truth,
            theta,
            kind,
            seed,
            next_draw: AtomicU64::new(0),
            value_samples: AtomicU64::new(0),
            gradient_samples: AtomicU64::new(0),
        })
    }

    pub fn truth(&self) -> &O {
        &self.truth
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn value_samples(&self) -> u64 {
        self.value_samples.load(Ordering::Relaxed)
    }

    pub fn gradient_samples(&self) -> u64 {
        self.gradient_samples.load(Ordering::Relaxed)
    }

    /// Gradient sample on the oracle's own draw sequence.
    pub fn sample_stoch_gradient(&self, x: &[f64]) -> Vec<f64> {
        let draw = self.next_draw.fetch_add(1, Ordering::Relaxed);
        self.sample_gradient(x, draw)
    }

    fn noise(&self, draw: u64) -> Vec<f64> {
        let n = self.truth.dim();
        if self.theta == 0.0 {
            return vec![0.0; n];
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(draw);
        match self.kind {
            NoiseKind::Uniform => {
                let a = self.theta * (3.0 / n as f64).sqrt();
                (0..n).map(|_| rng.gen_range(-a..=a)).collect()
            }
            NoiseKind::Gaussian => {
                let normal = Normal::new(0.0, self.theta / (n as f64).sqrt())
                    .expect("finite nonnegative standard deviation");
                (0..n).map(|_| normal.sample(&mut rng)).collect()
            }
        }
    }
}

impl<O: Objective> StochasticOracle for NoisyObjective<O> {
    fn dim(&self) -> usize {
        self.truth.dim()
    }

    fn sample_value(&self, x: &[f64], draw: u64) -> f64 {
        self.value_samples.fetch_add(1, Ordering::Relaxed);
        self.truth.value(x) + crate::dot(&self.noise(draw), x)
    }

    fn sample_gradient(&self, x: &[f64], draw: u64) -> Vec<f64> {
        self.gradient_samples.fetch_add(1, Ordering::Relaxed);
        let mut g = self.truth.gradient(x);
        for (gi, xi) in g.iter_mut().zip(self.noise(draw)) {
            *gi += xi;
        }
        g
    }

    fn expected_value(&self, x: &[f64]) -> Option<f64> {
        Some(self.truth.value(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objectives::{make_coverage_instance, CoverageObjective};

    fn instance() -> CoverageObjective {
        make_coverage_instance(4, 8, 0.5, (0.5, 1.5), 5).unwrap()
    }

    #[test]
    fn zero_noise_is_exact() {
        let f = instance();
        let x = [0.1, 0.2, 0.3, 0.4];
        let exact = f.gradient(&x);
        let s = NoisyObjective::new(f, 0.0, NoiseKind::Uniform, 1).unwrap();
        assert_eq!(s.sample_stoch_gradient(&x), exact);
        assert_eq!(s.gradient_samples(), 1);
    }

    #[test]
    fn seeded_reproducibility() {
        let x = [0.5; 4];
        let a = NoisyObjective::new(instance(), 0.5, NoiseKind::Uniform, 9).unwrap();
        let b = NoisyObjective::new(instance(), 0.5, NoiseKind::Uniform, 9).unwrap();
        for _ in 0..5 {
            assert_eq!(a.sample_stoch_gradient(&x), b.sample_stoch_gradient(&x));
        }
        assert_eq!(a.sample_gradient(&x, 17), a.sample_gradient(&x, 17));
        assert_ne!(a.sample_gradient(&x, 17), a.sample_gradient(&x, 18));
    }

    #[test]
    fn value_and_gradient_share_noise() {
        let s = NoisyObjective::new(instance(), 0.5, NoiseKind::Gaussian, 2).unwrap();
        let x = [0.2, 0.4, 0.6, 0.8];
        let g = s.sample_gradient(&x, 3);
        let truth = s.truth().gradient(&x);
        let xi: Vec<f64> = g.iter().zip(&truth).map(|(a, b)| a - b).collect();
        let v = s.sample_value(&x, 3);
        let expected = s.truth().value(&x) + crate::dot(&xi, &x);
        assert!((v - expected).abs() < 1e-12);
        assert_eq!(s.sample_value(&[0.0; 4], 3), 0.0);
    }

    #[test]
    fn uniform_noise_is_bounded_per_draw() {
        let theta = 0.5;
        let s = NoisyObjective::new(instance(), theta, NoiseKind::Uniform, 4).unwrap();
        let x = [0.3; 4];
        let truth = s.truth().gradient(&x);
        for draw in 0..2000 {
            let g = s.sample_gradient(&x, draw);
            let sq: f64 = g.iter().zip(&truth).map(|(a, b)| (a - b) * (a - b)).sum();
            // ‖ξ‖² ≤ n a² = 3θ² for every draw.
            assert!(sq <= 3.0 * theta * theta + 1e-12);
        }
    }
}
