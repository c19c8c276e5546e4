use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::objectives::Objective;
use crate::polytopes::Polytope;

pub const MAX_GRID_DIM: usize = 8;
pub const MAX_GRID_POINTS: f64 = 1e7;

#[derive(Debug, Clone, PartialEq)]
pub struct GridOpt {
    pub value: f64,
    pub point: Vec<f64>,
    /// Feasible grid points evaluated.
    pub evaluated: u64,
}

/// Number of points in the full lattice, or an error if over budget.
pub fn grid_size(n: usize, resolution: usize) -> Result<u64> {
    let points = ((resolution + 1) as f64).powi(n as i32);
    if n > MAX_GRID_DIM || points > MAX_GRID_POINTS {
        return Err(Error::GridBudget { points });
    }
    Ok(points as u64)
}

/// Exhaustive maximum of `F` over the lattice `{0, 1/res, …, 1}ⁿ ∩ P`.
///
/// The result is a feasible value, hence a lower bound on OPT.
pub fn brute_force_opt<O, P>(obj: &O, p: &P, resolution: usize, tol: f64) -> Result<GridOpt>
where
    O: Objective + ?Sized,
    P: Polytope + ?Sized,
{
    let n = p.dim();
    if obj.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: obj.dim(),
        });
    }
    if resolution == 0 {
        return Err(Error::param("resolution", "must be at least 1"));
    }
    let total = grid_size(n, resolution)?;
    let base = (resolution + 1) as u64;
    let scale = resolution as f64;

    let best = (0..total)
        .into_par_iter()
        .fold(
            || (f64::NEG_INFINITY, u64::MAX, 0u64, vec![0.0; n]),
            |(bv, bi, count, mut buf), idx| {
                let mut rest = idx;
                for slot in buf.iter_mut() {
                    *slot = (rest % base) as f64 / scale;
                    rest /= base;
                }
                if !p.contains(&buf, tol) {
                    return (bv, bi, count, buf);
                }
                let v = obj.value(&buf);
                if v > bv || (v == bv && idx < bi) {
                    (v, idx, count + 1, buf)
                } else {
                    (bv, bi, count + 1, buf)
                }
            },
        )
        .map(|(v, i, c, _)| (v, i, c))
        .reduce(
            || (f64::NEG_INFINITY, u64::MAX, 0),
            |a, b| {
                let pick = if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
                    b
                } else {
                    a
                };
                (pick.0, pick.1, a.2 + b.2)
            },
        );

    let (value, idx, evaluated) = best;
    if evaluated == 0 {
        return Err(Error::param("polytope", "no grid point is feasible"));
    }
    if !value.is_finite() {
        return Err(Error::NonFinite {
            what: "objective value",
        });
    }
    let mut rest = idx;
    let point = (0..n)
        .map(|_| {
            let v = (rest % base) as f64 / scale;
            rest /= base;
            v
        })
        .collect();
    Ok(GridOpt {
        value,
        point,
        evaluated,
    })
}
