use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

use super::Objective;

/// `F(x) = ½ xᵀMx + bᵀx` with `M` symmetric and entrywise nonnegative.
///
/// When `M` is a σ-semi-metric (`M_ij ≤ σ (M_ik + M_kj)` for all triples)
/// the function is one-sided σ-smooth.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticObjective {
    n: usize,
    m: Vec<f64>,
    b: Vec<f64>,
    sigma: f64,
}

impl QuadraticObjective {
    /// `m` is row-major `n × n`.
    pub fn new(m: Vec<f64>, b: Vec<f64>, sigma: f64) -> Result<Self> {
        let n = b.len();
        if n == 0 {
            return Err(Error::param("b", "empty"));
        }
        if m.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                got: m.len(),
            });
        }
        if m.iter().chain(&b).any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::param(
                "m",
                "entries of M and b must be finite and nonnegative",
            ));
        }
        for i in 0..n {
            for j in 0..i {
                if m[i * n + j] != m[j * n + i] {
                    return Err(Error::param("m", format!("not symmetric at ({i}, {j})")));
                }
            }
        }
        if !(sigma.is_finite() && sigma >= 0.0) {
            return Err(Error::param("sigma", "must be finite and nonnegative"));
        }
        Ok(Self { n, m, b, sigma })
    }

    pub fn matrix(&self) -> &[f64] {
        &self.m
    }

    pub fn linear_term(&self) -> &[f64] {
        &self.b
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.m[i * self.n + j]
    }

    fn mat_vec(&self, x: &[f64]) -> Vec<f64> {
        self.m
            .chunks_exact(self.n)
            .map(|row| crate::dot(row, x))
            .collect()
    }
}

impl Objective for QuadraticObjective {
    fn dim(&self) -> usize {
        self.n
    }

    fn value(&self, x: &[f64]) -> f64 {
        let mx = self.mat_vec(x);
        0.5 * crate::dot(x, &mx) + crate::dot(&self.b, x)
    }

    fn gradient(&self, x: &[f64]) -> Vec<f64> {
        let mut g = self.mat_vec(x);
        for (gi, bi) in g.iter_mut().zip(&self.b) {
            *gi += bi;
        }
        g
    }

    fn hessian_form(&self, _x: &[f64], u: &[f64]) -> Option<f64> {
        Some(crate::dot(u, &self.mat_vec(u)))
    }

    fn sigma_claimed(&self) -> f64 {
        self.sigma
    }
}

/// Pairwise Euclidean distances, row-major.
pub fn distance_matrix(points: &[Vec<f64>]) -> Vec<f64> {
    let n = points.len();
    let mut m = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..i {
            let d = points[i]
                .iter()
                .zip(&points[j])
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt();
            m[i * n + j] = d;
            m[j * n + i] = d;
        }
    }
    m
}

/// Quadratic over the distance matrix of `points`. Distances of a metric
/// space satisfy the triangle inequality, so `M` is a 1-semi-metric.
pub fn make_semimetric_instance(points: &[Vec<f64>], b: Vec<f64>) -> Result<QuadraticObjective> {
    if points.len() < 2 {
        return Err(Error::param("points", "need at least two points"));
    }
    if b.len() != points.len() {
        return Err(Error::DimensionMismatch {
            expected: points.len(),
            got: b.len(),
        });
    }
    let d = points[0].len();
    if let Some(p) = points.iter().find(|p| p.len() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: p.len(),
        });
    }
    QuadraticObjective::new(distance_matrix(points), b, 1.0)
}

/// `n` points drawn uniformly from the unit cube of dimension `point_dim`,
/// linear term uniform in `b_range`.
pub fn random_semimetric_instance(
    n: usize,
    point_dim: usize,
    b_range: (f64, f64),
    seed: u64,
) -> Result<(QuadraticObjective, Vec<Vec<f64>>)> {
    if point_dim == 0 {
        return Err(Error::param("point_dim", "must be at least 1"));
    }
    let (lo, hi) = b_range;
    if !(lo >= 0.0 && hi >= lo && hi.is_finite()) {
        return Err(Error::param(
            "b_range",
            format!("[{lo}, {hi}] is not a nonnegative range"),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<Vec<f64>> = (0..n)
        .map(|_| (0..point_dim).map(|_| rng.gen::<f64>()).collect())
        .collect();
    let b = (0..n).map(|_| lo + (hi - lo) * rng.gen::<f64>()).collect();
    Ok((make_semimetric_instance(&points, b)?, points))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SemimetricReport {
    pub pass: bool,
    /// Largest `M_ij − σ (M_ik + M_kj)` over all triples.
    pub worst_excess: f64,
    /// Zero-based `(i, j, k)` attaining the worst excess.
    pub witness: Option<(usize, usize, usize)>,
}

/// Exhaustive check of `M_ij ≤ σ (M_ik + M_kj)` over all `n³` triples.
pub fn verify_semimetric(m: &[f64], n: usize, sigma: f64) -> Result<SemimetricReport> {
    if m.len() != n * n {
        return Err(Error::DimensionMismatch {
            expected: n * n,
            got: m.len(),
        });
    }
    let mut worst = f64::NEG_INFINITY;
    let mut witness = None;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let excess = m[i * n + j] - sigma * (m[i * n + k] + m[k * n + j]);
                if excess > worst {
                    worst = excess;
                    witness = Some((i, j, k));
                }
            }
        }
    }
    let scale = m.iter().fold(1.0f64, |a, v| a.max(v.abs()));
    Ok(SemimetricReport {
        pass: worst <= 1e-12 * scale,
        worst_excess: worst,
        witness,
    })
}
