//! Exact linear-time solvers for the 1D sub-problems
//!
//! ```text
//! min_z  sum_x (z_x - f_x)^2 + sum_x w_x * phi(z_{x+1} - z_x)
//! ```
//!
//! with `phi = tau^2` (a tridiagonal solve) or `phi = |tau|` (a taut string).
//! Edges with zero weight decouple the signal, so both solvers split there
//! and handle each coupled run on its own.

mod tridiag;
mod wls;
mod wtv;

pub use tridiag::{thomas_solve, Tridiagonal};
pub use wls::{wls_1d, WlsSolver};
pub use wtv::{dual_flux, kkt_check, wtv_1d, KktReport, TautString};

use crate::error::{mismatch, param, Result};

/// A reusable 1D solver that writes its result into a caller buffer.
pub trait LineSolver: Send {
    /// `w.len() == f.len() - 1`, `out.len() == f.len()`, weights non-negative.
    fn solve_into(&mut self, f: &[f64], w: &[f64], out: &mut [f64]);
}

pub(crate) fn validate(f: &[f64], w: &[f64]) -> Result<()> {
    if f.is_empty() {
        return Err(param("signal must have at least one sample"));
    }
    if w.len() + 1 != f.len() {
        return Err(mismatch(format!(
            "signal of length {} needs {} edge weights, got {}",
            f.len(),
            f.len() - 1,
            w.len()
        )));
    }
    if f.iter().any(|v| !v.is_finite()) {
        return Err(param("signal samples must be finite"));
    }
    if let Some(i) = w.iter().position(|v| !(v.is_finite() && *v >= 0.0)) {
        return Err(param(format!("edge weight {i} is negative or not finite: {}", w[i])));
    }
    Ok(())
}

/// Calls `solve(start, end)` for each maximal run `[start, end)` of samples
/// joined by positive weights.
pub(crate) fn for_each_coupled_run(w: &[f64], mut solve: impl FnMut(usize, usize)) {
    let n = w.len() + 1;
    let mut start = 0;
    for (e, &we) in w.iter().enumerate() {
        if we == 0.0 {
            solve(start, e + 1);
            start = e + 1;
        }
    }
    solve(start, n);
}
