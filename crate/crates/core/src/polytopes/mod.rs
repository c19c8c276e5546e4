//! Feasible regions `P ∩ [0,1]ⁿ`.
//!
//! Every shipped polytope contains the origin and uses the standard unit
//! vectors as its basis directions. Feasibility of a step is enforced by
//! [`Polytope::max_step`], never by assuming downward closure.

mod shapes;

pub use shapes::{BoxPolytope, CardinalityPolytope, OrderPolytope};

use crate::error::{Error, Result};
use crate::objectives::Objective;

/// Bisection iterations used by the generic [`Polytope::max_step`].
const RAY_BISECTIONS: usize = 60;

pub trait Polytope: Send + Sync {
    fn dim(&self) -> usize;

    /// `x ∈ P ∩ [0,1]ⁿ` with slack `tol` on every defining inequality.
    fn contains(&self, x: &[f64], tol: f64) -> bool;

    /// Nonnegative directions with unit ℓ1 norm, in a fixed order.
    fn basis(&self) -> Vec<Vec<f64>>;

    /// A feasible point of maximum ℓ1 norm.
    fn max_l1_point(&self) -> Vec<f64>;

    /// Largest `s ≥ 0` (capped at `limit`) with `x + s·dir` feasible,
    /// assuming `x` is feasible. The default bisects on [`contains`].
    ///
    /// [`contains`]: Polytope::contains
    fn max_step(&self, x: &[f64], dir: &[f64], limit: f64, tol: f64) -> f64 {
        let at = |s: f64| -> Vec<f64> { x.iter().zip(dir).map(|(a, b)| a + s * b).collect() };
        if self.contains(&at(limit), tol) {
            return limit;
        }
        let (mut lo, mut hi) = (0.0, limit);
        for _ in 0..RAY_BISECTIONS {
            let mid = 0.5 * (lo + hi);
            if self.contains(&at(mid), tol) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    /// Number of basis directions.
    fn rank(&self) -> usize {
        self.basis().len()
    }

    /// ℓ1 norm of [`Polytope::max_l1_point`]: how far, in ℓ1, a path from
    /// the origin can travel inside `P`.
    fn max_l1_norm(&self) -> f64 {
        crate::l1(&self.max_l1_point())
    }
}

impl<T: Polytope + ?Sized> Polytope for &T {
    fn dim(&self) -> usize {
        (**self).dim()
    }
    fn contains(&self, x: &[f64], tol: f64) -> bool {
        (**self).contains(x, tol)
    }
    fn basis(&self) -> Vec<Vec<f64>> {
        (**self).basis()
    }
    fn max_l1_point(&self) -> Vec<f64> {
        (**self).max_l1_point()
    }
    fn max_step(&self, x: &[f64], dir: &[f64], limit: f64, tol: f64) -> f64 {
        (**self).max_step(x, dir, limit, tol)
    }
}

impl<T: Polytope + ?Sized> Polytope for Box<T> {
    fn dim(&self) -> usize {
        (**self).dim()
    }
    fn contains(&self, x: &[f64], tol: f64) -> bool {
        (**self).contains(x, tol)
    }
    fn basis(&self) -> Vec<Vec<f64>> {
        (**self).basis()
    }
    fn max_l1_point(&self) -> Vec<f64> {
        (**self).max_l1_point()
    }
    fn max_step(&self, x: &[f64], dir: &[f64], limit: f64, tol: f64) -> f64 {
        (**self).max_step(x, dir, limit, tol)
    }
}

/// Dimension-checked membership.
pub fn membership<P: Polytope + ?Sized>(p: &P, x: &[f64], tol: f64) -> Result<bool> {
    if x.len() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            got: x.len(),
        });
    }
    Ok(p.contains(x, tol))
}

pub fn basis_directions<P: Polytope + ?Sized>(p: &P) -> Vec<Vec<f64>> {
    p.basis()
}

/// The `n` standard unit vectors.
pub fn unit_vectors(n: usize) -> Vec<Vec<f64>> {
    (0..n)
        .map(|i| {
            let mut e = vec![0.0; n];
            e[i] = 1.0;
            e
        })
        .collect()
}

/// `(lower, upper)` bracket on `max_{x ∈ P} F(x)` for monotone `F`.
///
/// `lower` is `F` at the max-ℓ1 point (a feasible point). `upper` is
/// `F(1)`, valid by monotonicity since `P ⊆ [0,1]ⁿ`.
pub fn opt_bounds<O, P>(obj: &O, p: &P) -> Result<(f64, f64)>
where
    O: Objective + ?Sized,
    P: Polytope + ?Sized,
{
    if obj.dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            got: obj.dim(),
        });
    }
    let lower = obj.value(&p.max_l1_point());
    let upper = obj.value(&vec![1.0; p.dim()]);
    if !(lower.is_finite() && upper.is_finite()) {
        return Err(Error::NonFinite {
            what: "objective value",
        });
    }
    Ok((lower, upper))
}
