//! Parallel greedy maximization of monotone, normalized, one-sided
//! σ-smooth (OSS) functions over convex polytopes.
//!
//! The crate provides:
//!
//! * [`solvers::jspg_solve`]: the deterministic jump-start parallel greedy
//!   solver, which moves along every basis direction whose gradient clears
//!   a decaying threshold and picks the largest step passing a sufficient
//!   ascent test;
//! * [`solvers::spg_solve`]: its stochastic counterpart driven by a
//!   momentum-averaged gradient estimate;
//! * [`solvers::serial_baseline_solve`]: a one-direction-per-step
//!   continuous greedy used to measure the adaptivity gap;
//! * [`solvers::brute_force_opt`]: a grid oracle for desk-scale OPT;
//! * objective families (weighted-coverage multilinear extensions and
//!   quadratics over σ-semi-metrics), a sampling verifier for the OSS and
//!   η-local inequalities, and a JSON instance file format.

pub mod config;
pub mod error;
pub mod instance;
pub mod objectives;
pub mod polytopes;
pub mod solvers;
pub mod trace;

pub use config::{guaranteed_ratio, mu, SolverConfig};
pub use error::{Error, Result};
pub use objectives::{Objective, StochasticOracle};
pub use polytopes::Polytope;
pub use trace::{Snapshot, Solution, SolverTrace};

pub(crate) fn l1(x: &[f64]) -> f64 {
    x.iter().map(|v| v.abs()).sum()
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
