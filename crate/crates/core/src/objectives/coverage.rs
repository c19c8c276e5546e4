use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

use super::Objective;

/// Multilinear extension of a weighted coverage function:
///
/// ```text
/// F(x) = Σ_e w_e · (1 − Π_{i : e ∈ S_i} (1 − x_i))
/// ```
///
/// All mixed second partials are nonpositive (continuous DR-submodular),
/// so the function is one-sided 0-smooth.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverageObjective {
    weights: Vec<f64>,
    /// `sets[i]`: elements covered by coordinate `i`, sorted.
    sets: Vec<Vec<usize>>,
    /// `covers[e]`: coordinates covering element `e`, sorted.
    covers: Vec<Vec<usize>>,
}

impl CoverageObjective {
    pub fn new(weights: Vec<f64>, sets: Vec<Vec<usize>>) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::param("sets", "need at least one coordinate"));
        }
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::param("weights", "must be finite and nonnegative"));
        }
        let m = weights.len();
        let mut covers = vec![Vec::new(); m];
        let mut sorted = Vec::with_capacity(sets.len());
        for (i, s) in sets.into_iter().enumerate() {
            let mut s = s;
            s.sort_unstable();
            s.dedup();
            if let Some(&e) = s.iter().find(|&&e| e >= m) {
                return Err(Error::param(
                    "sets",
                    format!("element {e} out of range for {m} weights"),
                ));
            }
            for &e in &s {
                covers[e].push(i);
            }
            sorted.push(s);
        }
        Ok(Self {
            weights,
            sets: sorted,
            covers,
        })
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn ground_size(&self) -> usize {
        self.weights.len()
    }

    /// Weighted coverage of the set of coordinates flagged in `chosen`.
    pub fn set_value(&self, chosen: &[bool]) -> f64 {
        self.covers
            .iter()
            .zip(&self.weights)
            .filter(|(c, _)| c.iter().any(|&i| chosen[i]))
            .map(|(_, w)| w)
            .sum()
    }

    /// `∂²F / ∂x_i ∂x_j` in closed form (zero on the diagonal).
    pub fn mixed_partial(&self, x: &[f64], i: usize, j: usize) -> f64 {
        if i == j {
            return 0.0;
        }
        let mut total = 0.0;
        for (cover, w) in self.covers.iter().zip(&self.weights) {
            if cover.binary_search(&i).is_ok() && cover.binary_search(&j).is_ok() {
                let rest: f64 = cover
                    .iter()
                    .filter(|&&k| k != i && k != j)
                    .map(|&k| 1.0 - x[k])
                    .product();
                total -= w * rest;
            }
        }
        total
    }

    /// Row-sum bound on the spectral norm of the Hessian over the unit box,
    /// a valid Lipschitz constant for the gradient.
    pub fn lipschitz_bound(&self) -> f64 {
        let n = self.sets.len();
        let mut rows = vec![0.0; n];
        for (cover, w) in self.covers.iter().zip(&self.weights) {
            for &i in cover {
                rows[i] += w * (cover.len() as f64 - 1.0);
            }
        }
        rows.into_iter().fold(0.0, f64::max)
    }
}

impl Objective for CoverageObjective {
    fn dim(&self) -> usize {
        self.sets.len()
    }

    fn value(&self, x: &[f64]) -> f64 {
        self.covers
            .iter()
            .zip(&self.weights)
            .map(|(cover, w)| {
                let miss: f64 = cover.iter().map(|&i| 1.0 - x[i]).product();
                w * (1.0 - miss)
            })
            .sum()
    }

    fn gradient(&self, x: &[f64]) -> Vec<f64> {
        let mut g = vec![0.0; self.sets.len()];
        let mut suffix = Vec::new();
        for (cover, w) in self.covers.iter().zip(&self.weights) {
            // Product of (1 − x_k) over the cover with k ≠ i, via prefix and
            // suffix products so that x_i = 1 needs no division.
            suffix.clear();
            suffix.resize(cover.len() + 1, 1.0);
            for p in (0..cover.len()).rev() {
                suffix[p] = suffix[p + 1] * (1.0 - x[cover[p]]);
            }
            let mut prefix = 1.0;
            for (p, &i) in cover.iter().enumerate() {
                g[i] += w * prefix * suffix[p + 1];
                prefix *= 1.0 - x[i];
            }
        }
        g
    }

    fn hessian_form(&self, x: &[f64], u: &[f64]) -> Option<f64> {
        // Second derivative of Π_k (a_k − s u_k) at s = 0 is twice the s²
        // coefficient; accumulate the truncated polynomial in one pass.
        let mut total = 0.0;
        for (cover, w) in self.covers.iter().zip(&self.weights) {
            let (mut c0, mut c1, mut c2) = (1.0, 0.0, 0.0);
            for &k in cover {
                let a = 1.0 - x[k];
                let b = -u[k];
                c2 = c2 * a + c1 * b;
                c1 = c1 * a + c0 * b;
                c0 *= a;
            }
            total -= w * 2.0 * c2;
        }
        Some(total)
    }
}

/// Random weighted coverage instance.
///
/// Each coordinate covers each element independently with probability
/// `density`; an element left uncovered has its column redrawn. Weights are
/// uniform in `weight_range`.
pub fn make_coverage_instance(
    n: usize,
    m: usize,
    density: f64,
    weight_range: (f64, f64),
    seed: u64,
) -> Result<CoverageObjective> {
    if n == 0 || m == 0 {
        return Err(Error::param("n, m", "must both be at least 1"));
    }
    if !(density > 0.0 && density <= 1.0) {
        return Err(Error::param(
            "density",
            format!("{density} is not in (0, 1]"),
        ));
    }
    let (lo, hi) = weight_range;
    if !(lo >= 0.0 && hi >= lo && hi.is_finite()) {
        return Err(Error::param(
            "weight_range",
            format!("[{lo}, {hi}] is not a nonnegative range"),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sets = vec![Vec::new(); n];
    for e in 0..m {
        loop {
            let column: Vec<usize> = (0..n).filter(|_| rng.gen::<f64>() < density).collect();
            if !column.is_empty() {
                for i in column {
                    sets[i].push(e);
                }
                break;
            }
        }
    }
    let weights = (0..m).map(|_| lo + (hi - lo) * rng.gen::<f64>()).collect();
    CoverageObjective::new(weights, sets)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_element_single_coordinate() {
        let f = CoverageObjective::new(vec![1.0], vec![vec![0]]).unwrap();
        assert!((f.value(&[0.3]) - 0.3).abs() < 1e-15);
        assert_eq!(f.gradient(&[0.3]), vec![1.0]);
    }

    #[test]
    fn shared_element() {
        let f = CoverageObjective::new(vec![1.0], vec![vec![0], vec![0]]).unwrap();
        let x = [0.25, 0.5];
        assert!((f.value(&x) - (1.0 - 0.75 * 0.5)).abs() < 1e-15);
        assert_eq!(f.value(&[1.0, 1.0]), 1.0);
        assert_eq!(f.mixed_partial(&x, 0, 1), -1.0);
        assert_eq!(f.gradient(&[1.0, 1.0]), vec![0.0, 0.0]);
        assert_eq!(f.gradient(&x), vec![0.5, 0.75]);
        // uᵀHu = 2 u_0 u_1 (−1)
        assert_eq!(f.hessian_form(&x, &[1.0, 1.0]), Some(-2.0));
    }

    #[test]
    fn hessian_form_matches_mixed_partials() {
        let f = make_coverage_instance(5, 9, 0.5, (0.5, 2.0), 3).unwrap();
        let x = [0.1, 0.9, 0.4, 0.0, 1.0];
        let u = [0.3, 0.2, 0.7, 1.0, 0.5];
        let mut direct = 0.0;
        for i in 0..5 {
            for j in 0..5 {
                direct += u[i] * u[j] * f.mixed_partial(&x, i, j);
            }
        }
        let h = f.hessian_form(&x, &u).unwrap();
        assert!((h - direct).abs() < 1e-12, "{h} vs {direct}");
    }

    #[test]
    fn generator_covers_every_element() {
        for seed in 0..10 {
            let f = make_coverage_instance(4, 12, 0.1, (1.0, 1.0), seed).unwrap();
            let all = f.value(&[1.0; 4]);
            assert!((all - 12.0).abs() < 1e-12);
        }
    }

    #[test]
    fn generator_is_seeded() {
        let a = make_coverage_instance(6, 10, 0.4, (0.1, 1.0), 11).unwrap();
        let b = make_coverage_instance(6, 10, 0.4, (0.1, 1.0), 11).unwrap();
        let c = make_coverage_instance(6, 10, 0.4, (0.1, 1.0), 12).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn parameter_errors() {
        assert!(make_coverage_instance(0, 1, 0.5, (0.0, 1.0), 0).is_err());
        assert!(make_coverage_instance(1, 1, 0.0, (0.0, 1.0), 0).is_err());
        assert!(make_coverage_instance(1, 1, 0.5, (1.0, 0.0), 0).is_err());
        assert!(CoverageObjective::new(vec![1.0], vec![vec![3]]).is_err());
    }
}
