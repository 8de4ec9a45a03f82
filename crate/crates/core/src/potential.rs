//! Penalty functions applied to image gradients.

use crate::error::{param, Result};

/// Cap on the PowerP re-weighting factor, whose subgradient is unbounded at 0.
pub const POWER_WEIGHT_CAP: f64 = 1.0e4;

/// A potential `psi(tau)` on a gradient value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Potential {
    /// `tau^2`
    Quadratic,
    /// `|tau|`
    Abs,
    /// `sigma * (1 - exp(-tau^2 / sigma))`
    Welsch { sigma: f64 },
    /// `ln(1 + |tau|)`
    LogAbs,
    /// `|tau|^p` with `0 < p < 1`
    PowerP { p: f64 },
}

impl Potential {
    pub fn welsch(sigma: f64) -> Result<Self> {
        if !(sigma > 0.0 && sigma.is_finite()) {
            return Err(param(format!("Welsch sigma must be positive, got {sigma}")));
        }
        Ok(Potential::Welsch { sigma })
    }

    pub fn power(p: f64) -> Result<Self> {
        if !(p > 0.0 && p < 1.0) {
            return Err(param(format!("power potential needs 0 < p < 1, got {p}")));
        }
        Ok(Potential::PowerP { p })
    }

    pub fn value(&self, tau: f64) -> f64 {
        let a = tau.abs();
        match *self {
            Potential::Quadratic => tau * tau,
            Potential::Abs => a,
            Potential::Welsch { sigma } => sigma * -(-tau * tau / sigma).exp_m1(),
            Potential::LogAbs => a.ln_1p(),
            Potential::PowerP { p } => a.powf(p),
        }
    }

    /// `psi'(tau) / (2 tau)`, the quadratic re-weighting factor. Returns
    /// `+inf` at `tau = 0` for potentials with a kink there.
    pub fn irls_ratio(&self, tau: f64) -> f64 {
        let a = tau.abs();
        match *self {
            Potential::Quadratic => 1.0,
            Potential::Welsch { sigma } => (-tau * tau / sigma).exp(),
            Potential::Abs => 0.5 / a,
            Potential::LogAbs => 0.5 / (a * (1.0 + a)),
            Potential::PowerP { p } => 0.5 * p * a.powf(p - 2.0),
        }
    }

    /// Whether `irls_ratio` stays finite at the origin.
    pub fn has_finite_irls_ratio(&self) -> bool {
        matches!(self, Potential::Quadratic | Potential::Welsch { .. })
    }

    /// Magnitude of the subgradient at `|tau|` for potentials concave in
    /// `|tau|`; `None` for the others.
    pub fn irl1_weight(&self, tau: f64) -> Option<f64> {
        let a = tau.abs();
        match *self {
            Potential::Abs => Some(1.0),
            Potential::LogAbs => Some(1.0 / (1.0 + a)),
            Potential::PowerP { p } => {
                let g = if a > 0.0 { p * a.powf(p - 1.0) } else { f64::INFINITY };
                Some(g.min(POWER_WEIGHT_CAP))
            }
            Potential::Quadratic | Potential::Welsch { .. } => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Potential::Quadratic => "quadratic",
            Potential::Abs => "abs",
            Potential::Welsch { .. } => "welsch",
            Potential::LogAbs => "log-abs",
            Potential::PowerP { .. } => "power",
        }
    }
}
