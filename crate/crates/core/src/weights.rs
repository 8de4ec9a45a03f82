//! Per-edge guidance weights on the 4-neighbour grid.
//!
//! Horizontal edges join `(x, y)` and `(x + 1, y)`; there are `(W - 1) * H`
//! of them, stored row-major with row stride `W - 1`. Vertical edges join
//! `(x, y)` and `(x, y + 1)`; there are `W * (H - 1)`, stored with stride `W`.

use crate::error::{mismatch, param, Result};
use crate::image::{transpose_into, ImageBuffer};

#[derive(Debug, Clone, PartialEq)]
pub struct EdgeWeights {
    width: usize,
    height: usize,
    horizontal: Vec<f64>,
    vertical: Vec<f64>,
}

impl EdgeWeights {
    /// Builds weights from raw arrays. Entries must be finite and non-negative;
    /// guidance-derived weights are additionally in `(0, 1]`, but re-weighted
    /// schemes produce values outside that range.
    pub fn from_parts(
        width: usize,
        height: usize,
        horizontal: Vec<f64>,
        vertical: Vec<f64>,
    ) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(param("weight grid must be non-empty"));
        }
        if horizontal.len() != (width - 1) * height || vertical.len() != width * (height - 1) {
            return Err(mismatch(format!(
                "weights for {width}x{height} need {} horizontal and {} vertical entries, got {} and {}",
                (width - 1) * height,
                width * (height - 1),
                horizontal.len(),
                vertical.len()
            )));
        }
        if horizontal.iter().chain(&vertical).any(|w| !w.is_finite() || *w < 0.0) {
            return Err(param("edge weights must be finite and non-negative"));
        }
        Ok(Self { width, height, horizontal, vertical })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Horizontal edge weights, `(W - 1) * H` entries.
    pub fn horizontal(&self) -> &[f64] {
        &self.horizontal
    }

    /// Vertical edge weights, `W * (H - 1)` entries.
    pub fn vertical(&self) -> &[f64] {
        &self.vertical
    }

    /// Weight of the edge between `(x, y)` and `(x + 1, y)`.
    pub fn w1(&self, x: usize, y: usize) -> f64 {
        self.horizontal[y * (self.width - 1) + x]
    }

    /// Weight of the edge between `(x, y)` and `(x, y + 1)`.
    pub fn w2(&self, x: usize, y: usize) -> f64 {
        self.vertical[y * self.width + x]
    }

    pub(crate) fn check_image(&self, img: &ImageBuffer) -> Result<()> {
        if img.width() == self.width && img.height() == self.height {
            Ok(())
        } else {
            Err(mismatch(format!(
                "weights are {}x{} but image is {}x{}",
                self.width,
                self.height,
                img.width(),
                img.height()
            )))
        }
    }

    /// Weights of the transposed grid: vertical edges become horizontal ones.
    pub fn transpose(&self) -> EdgeWeights {
        let (w, h) = (self.width, self.height);
        let mut horizontal = vec![0.0; self.vertical.len()];
        let mut vertical = vec![0.0; self.horizontal.len()];
        // vertical is a W x (H-1) plane; its transpose has rows of length H-1
        transpose_into(&self.vertical, w, h - 1, &mut horizontal);
        transpose_into(&self.horizontal, w - 1, h, &mut vertical);
        EdgeWeights { width: h, height: w, horizontal, vertical }
    }

    /// Multiplies every weight by `g` of the matching forward difference of `plane`.
    pub(crate) fn modulated(&self, plane: &[f64], g: impl Fn(f64) -> f64) -> EdgeWeights {
        let (w, h) = (self.width, self.height);
        debug_assert_eq!(plane.len(), w * h);
        let mut horizontal = Vec::with_capacity(self.horizontal.len());
        for y in 0..h {
            let row = &plane[y * w..(y + 1) * w];
            for x in 0..w - 1 {
                horizontal.push(self.horizontal[y * (w - 1) + x] * g(row[x + 1] - row[x]));
            }
        }
        let mut vertical = Vec::with_capacity(self.vertical.len());
        for y in 0..h.saturating_sub(1) {
            for x in 0..w {
                let d = plane[(y + 1) * w + x] - plane[y * w + x];
                vertical.push(self.vertical[y * w + x] * g(d));
            }
        }
        EdgeWeights { width: w, height: h, horizontal, vertical }
    }
}

/// Guidance weights `exp(-d^2 / kappa)` where `d` is the forward difference of
/// `guide`. For colour guidance `d^2` is the mean of the per-channel squared
/// differences.
pub fn compute_weights(guide: &ImageBuffer, kappa: f64) -> Result<EdgeWeights> {
    if !(kappa > 0.0 && kappa.is_finite()) {
        return Err(param(format!("kappa must be positive, got {kappa}")));
    }
    let (w, h, nc) = (guide.width(), guide.height(), guide.channels());
    let mut horizontal = vec![0.0; (w - 1) * h];
    let mut vertical = vec![0.0; w * (h - 1)];
    for c in 0..nc {
        let plane = guide.channel(c);
        for y in 0..h {
            for x in 0..w - 1 {
                let d = plane[y * w + x + 1] - plane[y * w + x];
                horizontal[y * (w - 1) + x] += d * d;
            }
        }
        for y in 0..h - 1 {
            for x in 0..w {
                let d = plane[(y + 1) * w + x] - plane[y * w + x];
                vertical[y * w + x] += d * d;
            }
        }
    }
    let to_weight = |sq: &mut f64| {
        // exp underflows for extreme gradients; keep weights strictly positive
        *sq = (-(*sq / nc as f64) / kappa).exp().max(f64::MIN_POSITIVE);
    };
    horizontal.iter_mut().for_each(to_weight);
    vertical.iter_mut().for_each(to_weight);
    Ok(EdgeWeights { width: w, height: h, horizontal, vertical })
}

/// All-ones weights, used when no guidance image applies.
pub fn uniform_weights(width: usize, height: usize) -> Result<EdgeWeights> {
    if width == 0 || height == 0 {
        return Err(param("weight grid must be non-empty"));
    }
    Ok(EdgeWeights {
        width,
        height,
        horizontal: vec![1.0; (width - 1) * height],
        vertical: vec![1.0; width * (height - 1)],
    })
}
