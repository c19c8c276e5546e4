//! Objective oracles.
//!
//! [`Objective`] is the deterministic value/gradient oracle every solver
//! consumes. [`StochasticOracle`] is its sampled counterpart. Both are
//! read-only after construction and safe to call from several threads.

mod counting;
mod coverage;
mod linear;
mod quadratic;
mod stochastic;
mod verify;

pub use counting::CountingObjective;
pub use coverage::{make_coverage_instance, CoverageObjective};
pub use linear::LinearObjective;
pub use quadratic::{
    distance_matrix, make_semimetric_instance, random_semimetric_instance, verify_semimetric,
    QuadraticObjective, SemimetricReport,
};
pub use stochastic::{NoiseKind, NoisyObjective, StochasticOracle};
pub use verify::{verify_eta_local, verify_oss, VerifyReport, Witness};

/// Finite-difference step used when an objective has no exact Hessian form.
pub const FD_STEP: f64 = 1e-4;

pub trait Objective: Send + Sync {
    fn dim(&self) -> usize;

    fn value(&self, x: &[f64]) -> f64;

    fn gradient(&self, x: &[f64]) -> Vec<f64>;

    /// `uᵀ ∇²F(x) u`, when the family can compute it in closed form.
    fn hessian_form(&self, _x: &[f64], _u: &[f64]) -> Option<f64> {
        None
    }

    /// The smoothness parameter the family is known to satisfy.
    fn sigma_claimed(&self) -> f64 {
        0.0
    }
}

impl<T: Objective + ?Sized> Objective for &T {
    fn dim(&self) -> usize {
        (**self).dim()
    }
    fn value(&self, x: &[f64]) -> f64 {
        (**self).value(x)
    }
    fn gradient(&self, x: &[f64]) -> Vec<f64> {
        (**self).gradient(x)
    }
    fn hessian_form(&self, x: &[f64], u: &[f64]) -> Option<f64> {
        (**self).hessian_form(x, u)
    }
    fn sigma_claimed(&self) -> f64 {
        (**self).sigma_claimed()
    }
}

impl<T: Objective + ?Sized> Objective for Box<T> {
    fn dim(&self) -> usize {
        (**self).dim()
    }
    fn value(&self, x: &[f64]) -> f64 {
        (**self).value(x)
    }
    fn gradient(&self, x: &[f64]) -> Vec<f64> {
        (**self).gradient(x)
    }
    fn hessian_form(&self, x: &[f64], u: &[f64]) -> Option<f64> {
        (**self).hessian_form(x, u)
    }
    fn sigma_claimed(&self) -> f64 {
        (**self).sigma_claimed()
    }
}

/// Exact Hessian form if available, otherwise central differences of the
/// gradient along `u` with step [`FD_STEP`].
pub fn hessian_form_or_fd<O: Objective + ?Sized>(obj: &O, x: &[f64], u: &[f64]) -> f64 {
    if let Some(h) = obj.hessian_form(x, u) {
        return h;
    }
    let plus: Vec<f64> = x.iter().zip(u).map(|(a, b)| a + FD_STEP * b).collect();
    let minus: Vec<f64> = x.iter().zip(u).map(|(a, b)| a - FD_STEP * b).collect();
    let gp = obj.gradient(&plus);
    let gm = obj.gradient(&minus);
    u.iter()
        .zip(gp.iter().zip(&gm))
        .map(|(ui, (p, m))| ui * (p - m))
        .sum::<f64>()
        / (2.0 * FD_STEP)
}
