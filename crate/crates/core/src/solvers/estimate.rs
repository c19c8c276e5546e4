//! Momentum-averaged gradient estimate for the stochastic solver:
//!
//! ```text
//! d_t = (1 − ρ_t) d_prev + ρ_t ∇f(x, y),     ρ_t = (4 / (t + 8))^(2/3)
//! ```
//!
//! with mean squared error bounded by the envelope
//!
//! ```text
//! κ(t) = max{5 ‖∇F(x₀) − d₀‖², 16 θ² + 2 L² D²} / (t + 9)^(2/3).
//! ```

#[derive(Debug, Clone, PartialEq)]
pub struct GradientEstimate {
    pub d: Vec<f64>,
    /// `t` passed to the most recent update.
    pub t_last: f64,
    /// `ρ` used by the most recent update (0 before any update).
    pub rho_last: f64,
    pub updates: u64,
}

impl GradientEstimate {
    /// `d₀ = 0`.
    pub fn zero(n: usize) -> Self {
        Self {
            d: vec![0.0; n],
            t_last: 0.0,
            rho_last: 0.0,
            updates: 0,
        }
    }
}

pub fn rho(t: f64) -> f64 {
    (4.0 / (t + 8.0)).powf(2.0 / 3.0)
}

pub fn update_gradient_estimate(
    est: &GradientEstimate,
    sample: &[f64],
    t: f64,
) -> GradientEstimate {
    debug_assert!(t >= 0.0);
    let r = rho(t);
    let d = est
        .d
        .iter()
        .zip(sample)
        .map(|(old, s)| (1.0 - r) * old + r * s)
        .collect();
    GradientEstimate {
        d,
        t_last: t,
        rho_last: r,
        updates: est.updates + 1,
    }
}

/// The variance envelope `κ(t)`; `initial_error_sq` is `‖∇F(x₀) − d₀‖²`.
pub fn kappa(initial_error_sq: f64, theta: f64, lipschitz: f64, diameter: f64, t: f64) -> f64 {
    let floor = 16.0 * theta * theta + 2.0 * lipschitz * lipschitz * diameter * diameter;
    (5.0 * initial_error_sq).max(floor) / (t + 9.0).powf(2.0 / 3.0)
}
