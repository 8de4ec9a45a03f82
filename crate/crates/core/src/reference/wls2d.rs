//! Direct solve of the 2D WLS normal equations
//! `(I + lambda * sum_j D_j^T W_j D_j) u = f` by banded Cholesky.

use crate::error::{param, Error, Result};
use crate::image::ImageBuffer;
use crate::weights::EdgeWeights;

pub const MAX_REFERENCE_PIXELS: usize = 16384;

const RESIDUAL_TOL: f64 = 1e-9;

/// Exact global WLS minimiser, one channel at a time. Fails if the residual
/// certificate `max |A u - f| <= 1e-9 (1 + max |f|)` cannot be met.
pub fn reference_wls_2d(f: &ImageBuffer, w: &EdgeWeights, lambda: f64) -> Result<ImageBuffer> {
    w.check_image(f)?;
    if f.pixel_count() > MAX_REFERENCE_PIXELS {
        return Err(param(format!(
            "reference solver is limited to {MAX_REFERENCE_PIXELS} pixels, got {}",
            f.pixel_count()
        )));
    }
    if !(lambda >= 0.0 && lambda.is_finite()) {
        return Err(param("lambda must be non-negative"));
    }
    let system = System::assemble(w, lambda);
    let factor = system.cholesky()?;
    let mut planes = Vec::with_capacity(f.channels());
    for c in 0..f.channels() {
        let rhs = f.channel(c);
        let mut u = factor.solve(rhs);
        let bound = RESIDUAL_TOL * (1.0 + inf_norm(rhs));
        let mut residual = system.residual(&u, rhs);
        let mut refinements = 0;
        while inf_norm(&residual) > bound {
            if refinements == 3 {
                return Err(Error::Oracle(format!(
                    "WLS residual {} above {bound} after refinement",
                    inf_norm(&residual)
                )));
            }
            let delta = factor.solve(&residual);
            u.iter_mut().zip(&delta).for_each(|(a, d)| *a += d);
            residual = system.residual(&u, rhs);
            refinements += 1;
        }
        planes.push(u);
    }
    ImageBuffer::from_planes(f.width(), f.height(), planes)
}

/// `max |A u - f|` for the 2D WLS system, over all channels.
pub fn wls_2d_residual(u: &ImageBuffer, f: &ImageBuffer, w: &EdgeWeights, lambda: f64) -> Result<f64> {
    u.check_same_shape(f, "residual operands")?;
    w.check_image(f)?;
    let system = System::assemble(w, lambda);
    Ok((0..f.channels())
        .map(|c| inf_norm(&system.residual(u.channel(c), f.channel(c))))
        .fold(0.0, f64::max))
}

fn inf_norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

/// Five-point sparse symmetric matrix on a `width x height` grid.
struct System {
    width: usize,
    height: usize,
    diag: Vec<f64>,
    /// coupling of `p` to `p + 1`
    east: Vec<f64>,
    /// coupling of `p` to `p + width`
    south: Vec<f64>,
}

impl System {
    fn assemble(w: &EdgeWeights, lambda: f64) -> Self {
        let (width, height) = (w.width(), w.height());
        let n = width * height;
        let mut diag = vec![1.0; n];
        let mut east = vec![0.0; n];
        let mut south = vec![0.0; n];
        for y in 0..height {
            for x in 0..width {
                let p = y * width + x;
                if x + 1 < width {
                    let c = lambda * w.w1(x, y);
                    diag[p] += c;
                    diag[p + 1] += c;
                    east[p] = -c;
                }
                if y + 1 < height {
                    let c = lambda * w.w2(x, y);
                    diag[p] += c;
                    diag[p + width] += c;
                    south[p] = -c;
                }
            }
        }
        Self { width, height, diag, east, south }
    }

    fn residual(&self, u: &[f64], f: &[f64]) -> Vec<f64> {
        let (width, n) = (self.width, self.diag.len());
        let mut r: Vec<f64> = (0..n).map(|p| self.diag[p] * u[p] - f[p]).collect();
        for p in 0..n {
            if p + 1 < n {
                r[p] += self.east[p] * u[p + 1];
                r[p + 1] += self.east[p] * u[p];
            }
            if p + width < n {
                r[p] += self.south[p] * u[p + width];
                r[p + width] += self.south[p] * u[p];
            }
        }
        r
    }

    fn bandwidth(&self) -> usize {
        if self.height > 1 {
            self.width
        } else {
            1
        }
    }

    fn entry(&self, i: usize, j: usize) -> f64 {
        // j <= i
        if i == j {
            self.diag[i]
        } else if i == j + 1 {
            self.east[j]
        } else if i == j + self.width {
            self.south[j]
        } else {
            0.0
        }
    }

    fn cholesky(&self) -> Result<BandCholesky> {
        let n = self.diag.len();
        let b = self.bandwidth().min(n - 1);
        let stride = b + 1;
        // row i holds L[i][i-b ..= i] at offsets 0..=b
        let mut band = vec![0.0; n * stride];
        for i in 0..n {
            let lo = i.saturating_sub(b);
            for j in lo..=i {
                let klo = lo.max(j.saturating_sub(b));
                let mut sum = self.entry(i, j);
                for k in klo..j {
                    sum -= band[i * stride + (k + b - i)] * band[j * stride + (k + b - j)];
                }
                if i == j {
                    if sum <= 0.0 {
                        return Err(Error::Oracle("matrix is not positive definite".into()));
                    }
                    band[i * stride + b] = sum.sqrt();
                } else {
                    band[i * stride + (j + b - i)] = sum / band[j * stride + b];
                }
            }
        }
        Ok(BandCholesky { n, b, band })
    }
}

struct BandCholesky {
    n: usize,
    b: usize,
    band: Vec<f64>,
}

impl BandCholesky {
    fn at(&self, i: usize, j: usize) -> f64 {
        self.band[i * (self.b + 1) + (j + self.b - i)]
    }

    fn solve(&self, rhs: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut y = rhs.to_vec();
        for i in 0..n {
            let lo = i.saturating_sub(self.b);
            let s: f64 = y[lo..i].iter().enumerate().map(|(j, yk)| self.at(i, lo + j) * yk).sum();
            y[i] = (y[i] - s) / self.at(i, i);
        }
        for i in (0..n).rev() {
            let hi = (i + self.b).min(n - 1);
            let s: f64 = y[i + 1..=hi].iter().enumerate().map(|(j, yk)| self.at(i + 1 + j, i) * yk).sum();
            y[i] = (y[i] - s) / self.at(i, i);
        }
        y
    }
}
