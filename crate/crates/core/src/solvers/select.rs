use crate::config::SolverConfig;
use crate::trace::SolverTrace;

/// Result of one threshold selection.
#[derive(Debug, Clone, PartialEq)]
pub struct DirectionSet {
    /// Indices into the direction list that cleared the threshold.
    pub members: Vec<usize>,
    /// Indices skipped because no feasible step exists along them.
    pub blocked: Vec<usize>,
    pub lambda: f64,
    /// `(1 − ε) μ λ`.
    pub threshold: f64,
    /// Value of `trace.adaptive_rounds` after this selection.
    pub round: u64,
}

impl DirectionSet {
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }
}

/// Every unblocked direction `ν` with `νᵀg ≥ (1 − ε) μ λ`.
///
/// All inner products depend only on `g`, so the whole selection is one
/// adaptive round; `trace.adaptive_rounds` is incremented exactly once.
/// `blocked[i] = true` removes direction `i` from consideration.
pub fn select_directions(
    g: &[f64],
    directions: &[Vec<f64>],
    blocked: &[bool],
    lambda: f64,
    cfg: &SolverConfig,
    trace: &mut SolverTrace,
) -> DirectionSet {
    debug_assert!(lambda > 0.0);
    let threshold = (1.0 - cfg.epsilon) * cfg.mu() * lambda;
    let mut members = Vec::new();
    let mut skipped = Vec::new();
    for (i, nu) in directions.iter().enumerate() {
        if blocked.get(i).copied().unwrap_or(false) {
            skipped.push(i);
        } else if crate::dot(nu, g) >= threshold {
            members.push(i);
        }
    }
    trace.adaptive_rounds += 1;
    DirectionSet {
        members,
        blocked: skipped,
        lambda,
        threshold,
        round: trace.adaptive_rounds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytopes::unit_vectors;

    fn select(g: &[f64], lambda: f64, cfg: &SolverConfig) -> (DirectionSet, SolverTrace) {
        let mut trace = SolverTrace::default();
        let dirs = unit_vectors(g.len());
        let set = select_directions(g, &dirs, &vec![false; g.len()], lambda, cfg, &mut trace);
        (set, trace)
    }

    #[test]
    fn zero_gradient_selects_nothing() {
        let cfg = SolverConfig::default();
        for lambda in [1e-9, 1.0, 1e6] {
            let (set, trace) = select(&[0.0; 4], lambda, &cfg);
            assert!(set.is_empty());
            assert_eq!(trace.adaptive_rounds, 1);
        }
    }

    #[test]
    fn uniform_gradient_selects_all() {
        let cfg = SolverConfig {
            alpha: 1.0,
            sigma: 1.0,
            epsilon: 0.1,
            ..Default::default()
        };
        let mu = cfg.mu();
        let (set, _) = select(&[1.0; 5], 1.0 / mu, &cfg);
        assert_eq!(set.members, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn threshold_splits_two_coordinates() {
        let cfg = SolverConfig {
            sigma: 0.0,
            epsilon: 0.1,
            ..Default::default()
        };
        let (set, _) = select(&[1.0, 0.5], 1.0, &cfg);
        assert_eq!(set.members, vec![0]);
        assert!((set.threshold - 0.9).abs() < 1e-15);
    }

    #[test]
    fn blocked_directions_are_skipped() {
        let cfg = SolverConfig::default();
        let mut trace = SolverTrace::default();
        let dirs = unit_vectors(3);
        let set = select_directions(
            &[2.0, 2.0, 2.0],
            &dirs,
            &[false, true, false],
            1.0,
            &cfg,
            &mut trace,
        );
        assert_eq!(set.members, vec![0, 2]);
        assert_eq!(set.blocked, vec![1]);
        assert_eq!(set.round, 1);
    }
}
