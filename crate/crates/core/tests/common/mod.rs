#![allow(dead_code)]

use ossmax::objectives::{
    make_coverage_instance, random_semimetric_instance, CoverageObjective, QuadraticObjective,
};
use ossmax::polytopes::{BoxPolytope, CardinalityPolytope};
use ossmax::{Objective, Polytope, SolverConfig};

pub enum Family {
    Coverage(CoverageObjective),
    Quadratic(QuadraticObjective),
}

pub struct Case {
    pub id: String,
    pub family: Family,
    pub poly: Box<dyn Polytope>,
    pub cfg: SolverConfig,
}

impl Case {
    pub fn obj(&self) -> &dyn Objective {
        match &self.family {
            Family::Coverage(f) => f,
            Family::Quadratic(f) => f,
        }
    }

    pub fn sigma(&self) -> f64 {
        self.cfg.sigma
    }
}

fn polytope(i: usize, n: usize) -> Box<dyn Polytope> {
    if i.is_multiple_of(2) {
        Box::new(BoxPolytope::unit(n))
    } else {
        Box::new(CardinalityPolytope::new(n, n / 2).unwrap())
    }
}

/// Ten σ = 0 coverage instances, n cycling through 3..=6.
pub fn coverage_suite() -> Vec<Case> {
    (0..10)
        .map(|i| {
            let n = 3 + i % 4;
            let f = make_coverage_instance(n, 2 * n, 0.4, (0.5, 2.0), 100 + i as u64).unwrap();
            Case {
                id: format!("coverage-{i}-n{n}"),
                family: Family::Coverage(f),
                poly: polytope(i, n),
                cfg: SolverConfig {
                    epsilon: 0.1,
                    alpha: 0.05,
                    sigma: 0.0,
                    ..Default::default()
                },
            }
        })
        .collect()
}

/// Ten σ = 1 quadratics over planar point distances, α = 1.
pub fn quadratic_suite() -> Vec<Case> {
    (0..10)
        .map(|i| {
            let n = 3 + i % 4;
            let (f, _) = random_semimetric_instance(n, 2, (0.0, 1.0), 200 + i as u64).unwrap();
            Case {
                id: format!("quadratic-{i}-n{n}"),
                family: Family::Quadratic(f),
                poly: polytope(i, n),
                cfg: SolverConfig {
                    epsilon: 0.1,
                    alpha: 1.0,
                    sigma: 1.0,
                    ..Default::default()
                },
            }
        })
        .collect()
}

pub fn suite() -> Vec<Case> {
    let mut all = coverage_suite();
    all.extend(quadratic_suite());
    all
}

/// Multilinear extension by enumerating all subsets.
pub fn enumerate_multilinear(f: &CoverageObjective, x: &[f64]) -> f64 {
    let n = x.len();
    let mut total = 0.0;
    for mask in 0u32..(1 << n) {
        let mut prob = 1.0;
        let mut chosen = vec![false; n];
        for i in 0..n {
            if mask & (1 << i) != 0 {
                prob *= x[i];
                chosen[i] = true;
            } else {
                prob *= 1.0 - x[i];
            }
        }
        total += prob * f.set_value(&chosen);
    }
    total
}
