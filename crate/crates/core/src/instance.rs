//! JSON instance files.
//!
//! An instance is one objective and one polytope:
//!
//! ```json
//! {
//!   "id": "cov-n4-s7",
//!   "seed": 7,
//!   "objective": { "kind": "coverage", "dimension": 4,
//!                  "weights": [0.5, 1.0], "sets": [[0], [0, 1], [], [1]] },
//!   "polytope":  { "kind": "cardinality", "dimension": 4, "budget": 2 }
//! }
//! ```
//!
//! Objective kinds:
//!
//! * `coverage`: `weights` (one per ground element) and `sets`, the ground
//!   elements covered by each coordinate.
//! * `quadratic-semimetric`: `m` (row-major `dimension × dimension`), `b`,
//!   `sigma`, and optionally the `points` the distances came from.
//!
//! Polytope kinds: `box` (`upper`), `cardinality` (`budget`),
//! `monotone-linear` (`order`, pairs `[i, j]` meaning `x_i ≤ x_j`).
//!
//! Floats are written in shortest round-trip form, so write then read is
//! value-exact. `seed` is informational.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::objectives::{CoverageObjective, Objective, QuadraticObjective};
use crate::polytopes::{BoxPolytope, CardinalityPolytope, OrderPolytope, Polytope};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Instance {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub objective: ObjectiveSpec,
    pub polytope: PolytopeSpec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ObjectiveSpec {
    Coverage {
        dimension: usize,
        weights: Vec<f64>,
        sets: Vec<Vec<usize>>,
    },
    QuadraticSemimetric {
        dimension: usize,
        m: Vec<f64>,
        b: Vec<f64>,
        sigma: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        points: Option<Vec<Vec<f64>>>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum PolytopeSpec {
    Box {
        dimension: usize,
        upper: Vec<f64>,
    },
    Cardinality {
        dimension: usize,
        budget: usize,
    },
    MonotoneLinear {
        dimension: usize,
        order: Vec<(usize, usize)>,
    },
}

impl ObjectiveSpec {
    pub fn dimension(&self) -> usize {
        match self {
            ObjectiveSpec::Coverage { dimension, .. }
            | ObjectiveSpec::QuadraticSemimetric { dimension, .. } => *dimension,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ObjectiveSpec::Coverage { .. } => "coverage",
            ObjectiveSpec::QuadraticSemimetric { .. } => "quadratic-semimetric",
        }
    }

    pub fn from_coverage(f: &CoverageObjective) -> Self {
        ObjectiveSpec::Coverage {
            dimension: f.dim(),
            weights: f.weights().to_vec(),
            sets: f.sets().to_vec(),
        }
    }

    pub fn from_quadratic(f: &QuadraticObjective, points: Option<Vec<Vec<f64>>>) -> Self {
        ObjectiveSpec::QuadraticSemimetric {
            dimension: f.dim(),
            m: f.matrix().to_vec(),
            b: f.linear_term().to_vec(),
            sigma: f.sigma_claimed(),
            points,
        }
    }

    pub fn build(&self) -> Result<Box<dyn Objective>> {
        let dim = self.dimension();
        let obj: Box<dyn Objective> = match self {
            ObjectiveSpec::Coverage { weights, sets, .. } => {
                if sets.len() != dim {
                    return Err(Error::Instance(format!(
                        "{} sets for dimension {dim}",
                        sets.len()
                    )));
                }
                Box::new(CoverageObjective::new(weights.clone(), sets.clone())?)
            }
            ObjectiveSpec::QuadraticSemimetric {
                m,
                b,
                sigma,
                points,
                ..
            } => {
                if m.len() != dim * dim || b.len() != dim {
                    return Err(Error::Instance(format!(
                        "quadratic of dimension {dim} needs {} matrix entries and {dim} linear terms, got {} and {}",
                        dim * dim,
                        m.len(),
                        b.len()
                    )));
                }
                if points.as_ref().is_some_and(|p| p.len() != dim) {
                    return Err(Error::Instance("one point per coordinate required".into()));
                }
                Box::new(QuadraticObjective::new(m.clone(), b.clone(), *sigma)?)
            }
        };
        Ok(obj)
    }
}

impl PolytopeSpec {
    pub fn dimension(&self) -> usize {
        match self {
            PolytopeSpec::Box { dimension, .. }
            | PolytopeSpec::Cardinality { dimension, .. }
            | PolytopeSpec::MonotoneLinear { dimension, .. } => *dimension,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            PolytopeSpec::Box { .. } => "box",
            PolytopeSpec::Cardinality { .. } => "cardinality",
            PolytopeSpec::MonotoneLinear { .. } => "monotone-linear",
        }
    }

    pub fn unit_box(n: usize) -> Self {
        PolytopeSpec::Box {
            dimension: n,
            upper: vec![1.0; n],
        }
    }

    pub fn build(&self) -> Result<Box<dyn Polytope>> {
        let p: Box<dyn Polytope> = match self {
            PolytopeSpec::Box { dimension, upper } => {
                if upper.len() != *dimension {
                    return Err(Error::DimensionMismatch {
                        expected: *dimension,
                        got: upper.len(),
                    });
                }
                Box::new(BoxPolytope::new(upper.clone())?)
            }
            PolytopeSpec::Cardinality { dimension, budget } => {
                Box::new(CardinalityPolytope::new(*dimension, *budget)?)
            }
            PolytopeSpec::MonotoneLinear { dimension, order } => {
                Box::new(OrderPolytope::new(*dimension, order.clone())?)
            }
        };
        Ok(p)
    }
}

impl Instance {
    pub fn dimension(&self) -> usize {
        self.objective.dimension()
    }

    /// Builds both halves after checking they agree on the dimension.
    pub fn build(&self) -> Result<(Box<dyn Objective>, Box<dyn Polytope>)> {
        let (n, pn) = (self.objective.dimension(), self.polytope.dimension());
        if n != pn {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: pn,
            });
        }
        if n == 0 {
            return Err(Error::Instance("dimension must be at least 1".into()));
        }
        Ok((self.objective.build()?, self.polytope.build()?))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("instances always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let inst: Instance =
            serde_json::from_str(text).map_err(|e| Error::Instance(e.to_string()))?;
        inst.build()?;
        Ok(inst)
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Instance(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        std::fs::write(path, self.to_json())
            .map_err(|e| Error::Instance(format!("{}: {e}", path.display())))
    }
}
