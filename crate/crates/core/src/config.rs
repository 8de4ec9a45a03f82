//! Solver parameters.

use crate::error::{param, Result};
use crate::potential::Potential;

/// Which prior the smoother and its re-weighted wrappers minimise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Prior {
    /// Weighted least squares, `phi = tau^2`.
    Wls,
    /// Weighted total variation, `phi = |tau|`.
    Wtv,
    /// Non-convex potential via quadratic majorisation.
    Firls(Potential),
    /// Concave potential via weighted-L1 majorisation.
    Firl1(Potential),
}

/// Order of the two 1D passes inside one iteration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PassOrder {
    #[default]
    RowsFirst,
    ColumnsFirst,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SmootherConfig {
    /// Smoothing strength.
    pub lambda: f64,
    /// Guidance weight falloff.
    pub kappa: f64,
    /// Penalty growth factor per iteration.
    pub alpha: f64,
    /// Initial penalty.
    pub beta1: f64,
    /// Inner (splitting) iterations.
    pub iters_t: usize,
    /// Outer (re-weighting) iterations.
    pub iters_k: usize,
    pub prior: Prior,
    pub pass_order: PassOrder,
}

impl Default for SmootherConfig {
    fn default() -> Self {
        Self {
            lambda: 400.0,
            kappa: 7.65,
            alpha: 4.0,
            beta1: 1.0,
            iters_t: 5,
            iters_k: 5,
            prior: Prior::Wls,
            pass_order: PassOrder::RowsFirst,
        }
    }
}

impl SmootherConfig {
    pub fn with_prior(prior: Prior) -> Self {
        Self { prior, ..Self::default() }
    }

    /// Checks ranges. `lambda = 0` is accepted and makes every solve the identity.
    pub fn validate(&self) -> Result<()> {
        if !(self.lambda >= 0.0 && self.lambda.is_finite()) {
            return Err(param(format!("lambda must be non-negative, got {}", self.lambda)));
        }
        if !(self.kappa > 0.0 && self.kappa.is_finite()) {
            return Err(param(format!("kappa must be positive, got {}", self.kappa)));
        }
        if !(self.alpha > 1.0 && self.alpha.is_finite()) {
            return Err(param(format!("alpha must exceed 1, got {}", self.alpha)));
        }
        if !(self.beta1 > 0.0 && self.beta1.is_finite()) {
            return Err(param(format!("beta1 must be positive, got {}", self.beta1)));
        }
        if self.iters_t == 0 || self.iters_k == 0 {
            return Err(param("iteration counts must be at least 1"));
        }
        Ok(())
    }
}
