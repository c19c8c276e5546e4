use crate::error::{Error, Result};

use super::{unit_vectors, Polytope};

/// Largest `s` keeping every coordinate `x_i + s d_i` at or below `cap(i)`.
fn box_reach(x: &[f64], dir: &[f64], cap: impl Fn(usize) -> f64) -> f64 {
    x.iter()
        .zip(dir)
        .enumerate()
        .filter(|(_, (_, d))| **d > 0.0)
        .map(|(i, (xi, d))| ((cap(i) - xi) / d).max(0.0))
        .fold(f64::INFINITY, f64::min)
}

fn in_box(x: &[f64], tol: f64, cap: impl Fn(usize) -> f64) -> bool {
    x.iter()
        .enumerate()
        .all(|(i, v)| v.is_finite() && *v >= -tol && *v <= cap(i) + tol)
}

/// `{ x : 0 ≤ x ≤ c }` with `c ∈ (0,1]ⁿ`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoxPolytope {
    upper: Vec<f64>,
}

impl BoxPolytope {
    pub fn new(upper: Vec<f64>) -> Result<Self> {
        if upper.is_empty() {
            return Err(Error::param("upper", "empty"));
        }
        if upper.iter().any(|c| !(*c > 0.0 && *c <= 1.0)) {
            return Err(Error::param("upper", "bounds must lie in (0, 1]"));
        }
        Ok(Self { upper })
    }

    pub fn unit(n: usize) -> Self {
        Self {
            upper: vec![1.0; n],
        }
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }
}

impl Polytope for BoxPolytope {
    fn dim(&self) -> usize {
        self.upper.len()
    }

    fn contains(&self, x: &[f64], tol: f64) -> bool {
        x.len() == self.dim() && in_box(x, tol, |i| self.upper[i])
    }

    fn basis(&self) -> Vec<Vec<f64>> {
        unit_vectors(self.dim())
    }

    fn max_l1_point(&self) -> Vec<f64> {
        self.upper.clone()
    }

    fn max_step(&self, x: &[f64], dir: &[f64], limit: f64, _tol: f64) -> f64 {
        box_reach(x, dir, |i| self.upper[i]).min(limit)
    }
}

/// `{ x ∈ [0,1]ⁿ : Σ x_i ≤ k }`.
#[derive(Debug, Clone, PartialEq)]
pub struct CardinalityPolytope {
    n: usize,
    budget: usize,
}

impl CardinalityPolytope {
    pub fn new(n: usize, budget: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::param("n", "must be at least 1"));
        }
        if budget == 0 || budget > n {
            return Err(Error::param(
                "budget",
                format!("{budget} is not in [1, {n}]"),
            ));
        }
        Ok(Self { n, budget })
    }

    pub fn budget(&self) -> usize {
        self.budget
    }
}

impl Polytope for CardinalityPolytope {
    fn dim(&self) -> usize {
        self.n
    }

    fn contains(&self, x: &[f64], tol: f64) -> bool {
        x.len() == self.n
            && in_box(x, tol, |_| 1.0)
            && x.iter().sum::<f64>() <= self.budget as f64 + tol
    }

    fn basis(&self) -> Vec<Vec<f64>> {
        unit_vectors(self.n)
    }

    /// The first `k` coordinates at 1.
    fn max_l1_point(&self) -> Vec<f64> {
        (0..self.n)
            .map(|i| if i < self.budget { 1.0 } else { 0.0 })
            .collect()
    }

    fn max_step(&self, x: &[f64], dir: &[f64], limit: f64, _tol: f64) -> f64 {
        let slack = (self.budget as f64 - x.iter().sum::<f64>()).max(0.0);
        let rate: f64 = dir.iter().sum();
        let sum_reach = if rate > 0.0 {
            slack / rate
        } else {
            f64::INFINITY
        };
        box_reach(x, dir, |_| 1.0).min(sum_reach).min(limit)
    }
}

/// `{ x ∈ [0,1]ⁿ : x_i ≤ x_j for every listed (i, j) }`.
///
/// Not downward closed whenever at least one order constraint is present.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderPolytope {
    n: usize,
    order: Vec<(usize, usize)>,
}

impl OrderPolytope {
    pub fn new(n: usize, order: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::param("n", "must be at least 1"));
        }
        if let Some(&(i, j)) = order.iter().find(|(i, j)| *i >= n || *j >= n || i == j) {
            return Err(Error::param(
                "order",
                format!("bad pair ({i}, {j}) for dimension {n}"),
            ));
        }
        Ok(Self { n, order })
    }

    pub fn order(&self) -> &[(usize, usize)] {
        &self.order
    }

    /// Coordinates forced up by raising `i`: `i` and everything above it in
    /// the transitive closure of the order.
    fn up_closure(&self, i: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![i];
        seen[i] = true;
        while let Some(k) = stack.pop() {
            for &(a, b) in &self.order {
                if a == k && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        seen
    }
}

impl Polytope for OrderPolytope {
    fn dim(&self) -> usize {
        self.n
    }

    fn contains(&self, x: &[f64], tol: f64) -> bool {
        x.len() == self.n
            && in_box(x, tol, |_| 1.0)
            && self.order.iter().all(|&(i, j)| x[i] <= x[j] + tol)
    }

    /// Normalized indicator of each coordinate's up-closure. Each one is a
    /// vertex direction of `P`, so a step along it never breaks the order;
    /// a bare unit vector is infeasible wherever `x_i = x_j`.
    fn basis(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| {
                let up = self.up_closure(i);
                let k = up.iter().filter(|b| **b).count() as f64;
                up.iter().map(|&b| if b { 1.0 / k } else { 0.0 }).collect()
            })
            .collect()
    }

    fn max_l1_point(&self) -> Vec<f64> {
        vec![1.0; self.n]
    }

    fn max_step(&self, x: &[f64], dir: &[f64], limit: f64, _tol: f64) -> f64 {
        let order_reach = self
            .order
            .iter()
            .filter(|&&(i, j)| dir[i] > dir[j])
            .map(|&(i, j)| ((x[j] - x[i]) / (dir[i] - dir[j])).max(0.0))
            .fold(f64::INFINITY, f64::min);
        box_reach(x, dir, |_| 1.0).min(order_reach).min(limit)
    }
}
