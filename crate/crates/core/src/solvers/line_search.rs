//! Largest step passing the sufficient-ascent test
//!
//! ```text
//! F(x + δ·dir) − F(x) ≥ rate · δ
//! ```
//!
//! on `[delta_tol, cap]`. Probes are issued in batches; every batch is one
//! adaptive round. The first batch is the doubling ladder
//! `delta_tol · 2^k` together with `cap` itself, and each later batch
//! splits the surviving bracket into `REFINE_PROBES + 1` equal pieces
//! until it is no wider than `delta_tol`.

/// Interior probes per refinement batch.
pub(crate) const REFINE_PROBES: usize = 8;

/// What the search settled on. `delta == 0` means no step of at least
/// `delta_tol` passed the test.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct StepChoice {
    pub delta: f64,
    pub point: Vec<f64>,
    pub value: f64,
}

pub(crate) struct StepSearch<'a> {
    pub x: &'a [f64],
    pub dir: &'a [f64],
    pub base_value: f64,
    pub rate: f64,
    pub cap: f64,
    pub delta_tol: f64,
    /// Absolute slack granted to the ascent test.
    pub slack: f64,
}

impl StepSearch<'_> {
    pub fn point(&self, delta: f64) -> Vec<f64> {
        self.x
            .iter()
            .zip(self.dir)
            .map(|(a, d)| (a + delta * d).clamp(0.0, 1.0))
            .collect()
    }

    fn passes(&self, delta: f64, value: f64) -> bool {
        value.is_finite() && value - self.base_value >= self.rate * delta - self.slack
    }

    /// `eval` receives a batch of probe points and returns their values.
    /// It is responsible for counting value queries. Returns the choice and
    /// the number of batches issued, each one adaptive round.
    pub fn run<E>(&self, mut eval: E) -> (StepChoice, u64)
    where
        E: FnMut(&[Vec<f64>]) -> Vec<f64>,
    {
        let mut rounds = 0u64;
        let none = StepChoice {
            delta: 0.0,
            point: self.x.to_vec(),
            value: self.base_value,
        };
        if self.cap.is_nan() || self.cap <= 0.0 {
            return (none, rounds);
        }
        let mut ladder = Vec::new();
        let mut d = self.delta_tol;
        while d < self.cap {
            ladder.push(d);
            d *= 2.0;
        }
        ladder.push(self.cap);

        let points: Vec<Vec<f64>> = ladder.iter().map(|&d| self.point(d)).collect();
        let values = eval(&points);
        rounds += 1;

        let last = ladder.len() - 1;
        if self.passes(ladder[last], values[last]) {
            let c = StepChoice {
                delta: ladder[last],
                point: points[last].clone(),
                value: values[last],
            };
            return (c, rounds);
        }
        let Some(best) = (0..last).rev().find(|&i| self.passes(ladder[i], values[i])) else {
            return (none, rounds);
        };
        let mut lo = StepChoice {
            delta: ladder[best],
            point: points[best].clone(),
            value: values[best],
        };
        let mut hi = ladder[best + 1];

        while hi - lo.delta > self.delta_tol {
            let width = hi - lo.delta;
            let deltas: Vec<f64> = (1..=REFINE_PROBES)
                .map(|j| lo.delta + width * j as f64 / (REFINE_PROBES + 1) as f64)
                .collect();
            let points: Vec<Vec<f64>> = deltas.iter().map(|&d| self.point(d)).collect();
            let values = eval(&points);
            rounds += 1;
            match (0..deltas.len())
                .rev()
                .find(|&i| self.passes(deltas[i], values[i]))
            {
                Some(i) => {
                    hi = deltas.get(i + 1).copied().unwrap_or(hi);
                    lo = StepChoice {
                        delta: deltas[i],
                        point: points[i].clone(),
                        value: values[i],
                    };
                }
                None => hi = deltas[0],
            }
        }
        (lo, rounds)
    }
}
