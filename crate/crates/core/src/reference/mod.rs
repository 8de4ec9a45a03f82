//! Slow, independently coded solvers and image-quality metrics.
//!
//! Nothing here calls into the fast solvers; tests compare the two.

mod dense;
mod metrics;
mod wls2d;
mod wtv_dual;

pub use dense::dense_solve;
pub use metrics::{psnr, ssim, SSIM_WINDOW};
pub use wls2d::{reference_wls_2d, wls_2d_residual, MAX_REFERENCE_PIXELS};
pub use wtv_dual::{wtv_1d_oracle, OracleSolution, ORACLE_GAP_TOL};
