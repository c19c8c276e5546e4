//! Sampling checks for the one-sided smoothness inequality
//!
//! ```text
//! uᵀ∇²F(x)u ≤ σ · (2‖u‖₁ / ‖x‖₁) · uᵀ∇F(x)      for x ≠ 0, u ≥ 0
//! ```
//!
//! and the η-local inequality `uᵀ∇F(x + εu) ≥ (1 − ηε) uᵀ∇F(x)`.
//!
//! Both only refute or support a claimed parameter; they never estimate
//! the tightest one.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

use super::{hessian_form_or_fd, Objective};

/// Smallest ‖x‖₁ accepted by the OSS sampler; smaller draws are redrawn.
const MIN_X_L1: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub x: Vec<f64>,
    pub u: Vec<f64>,
    /// The ε of the η-local check; `None` for the OSS check.
    pub step: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub pass: bool,
    pub trials: usize,
    /// Largest amount by which the inequality's left side exceeded its
    /// right side (negative when every sample held strictly).
    pub worst_violation: f64,
    /// The sample attaining `worst_violation`.
    pub witness: Witness,
}

fn unit_draw(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.gen::<f64>()).collect()
}

fn check_trials(trials: usize) -> Result<()> {
    if trials == 0 {
        return Err(Error::param("trials", "must be at least 1"));
    }
    Ok(())
}

/// Samples `x ∈ (0,1]ⁿ` and `u ∈ [0,1]ⁿ` uniformly and tests the OSS
/// inequality with slack `value_tol · (1 + |RHS|)`.
pub fn verify_oss<O: Objective + ?Sized>(
    obj: &O,
    sigma: f64,
    trials: usize,
    seed: u64,
    value_tol: f64,
) -> Result<VerifyReport> {
    check_trials(trials)?;
    if !(sigma.is_finite() && sigma >= 0.0) {
        return Err(Error::param("sigma", "must be finite and nonnegative"));
    }
    let n = obj.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pass = true;
    let mut worst = f64::NEG_INFINITY;
    let mut witness = None;
    for _ in 0..trials {
        let x = loop {
            let x: Vec<f64> = (0..n).map(|_| 1.0 - rng.gen::<f64>()).collect();
            if crate::l1(&x) >= MIN_X_L1 {
                break x;
            }
        };
        let u = unit_draw(&mut rng, n);
        let lhs = hessian_form_or_fd(obj, &x, &u);
        let grad = obj.gradient(&x);
        let rhs = sigma * 2.0 * crate::l1(&u) / crate::l1(&x) * crate::dot(&u, &grad);
        if !(lhs.is_finite() && rhs.is_finite()) {
            return Err(Error::NonFinite {
                what: "OSS inequality term",
            });
        }
        if lhs > rhs + value_tol * (1.0 + rhs.abs()) {
            pass = false;
        }
        if lhs - rhs > worst {
            worst = lhs - rhs;
            witness = Some(Witness { x, u, step: None });
        }
    }
    Ok(VerifyReport {
        pass,
        trials,
        worst_violation: worst,
        witness: witness.expect("at least one trial"),
    })
}

/// Samples `x, u ∈ [0,1]ⁿ` and `ε` uniform on the largest interval in
/// `[0, 1]` keeping `x + εu` in the unit box.
pub fn verify_eta_local<O: Objective + ?Sized>(
    obj: &O,
    eta: f64,
    trials: usize,
    seed: u64,
    value_tol: f64,
) -> Result<VerifyReport> {
    check_trials(trials)?;
    if !(eta.is_finite() && eta >= 0.0) {
        return Err(Error::param("eta", "must be finite and nonnegative"));
    }
    let n = obj.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pass = true;
    let mut worst = f64::NEG_INFINITY;
    let mut witness = None;
    for _ in 0..trials {
        let x = unit_draw(&mut rng, n);
        let u = unit_draw(&mut rng, n);
        let reach = x
            .iter()
            .zip(&u)
            .filter(|(_, ui)| **ui > 0.0)
            .map(|(xi, ui)| (1.0 - xi) / ui)
            .fold(1.0f64, f64::min);
        let step = reach * rng.gen::<f64>();
        let moved: Vec<f64> = x
            .iter()
            .zip(&u)
            .map(|(a, b)| (a + step * b).min(1.0))
            .collect();
        let lhs = crate::dot(&u, &obj.gradient(&moved));
        let rhs = (1.0 - eta * step) * crate::dot(&u, &obj.gradient(&x));
        if !(lhs.is_finite() && rhs.is_finite()) {
            return Err(Error::NonFinite {
                what: "eta-local inequality term",
            });
        }
        if lhs < rhs - value_tol * (1.0 + rhs.abs()) {
            pass = false;
        }
        if rhs - lhs > worst {
            worst = rhs - lhs;
            witness = Some(Witness {
                x,
                u,
                step: Some(step),
            });
        }
    }
    Ok(VerifyReport {
        pass,
        trials,
        worst_violation: worst,
        witness: witness.expect("at least one trial"),
    })
}
