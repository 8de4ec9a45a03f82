//! The smoothing objective: squared data fidelity plus a weighted gradient prior.

use crate::error::{mismatch, param, Result};
use crate::image::ImageBuffer;
use crate::potential::Potential;
use crate::weights::EdgeWeights;

/// `sum_p (u - f)^2 + lambda * sum_j sum_p w_j,p * psi((D_j u)_p)` over all channels,
/// with forward differences and no terms past the last column or row.
pub fn energy(
    u: &ImageBuffer,
    f: &ImageBuffer,
    w: &EdgeWeights,
    lambda: f64,
    pot: &Potential,
) -> Result<f64> {
    u.check_same_shape(f, "energy operands")?;
    w.check_image(u)?;
    if !lambda.is_finite() {
        return Err(param("lambda must be finite"));
    }
    let mut total = 0.0;
    for c in 0..u.channels() {
        total += plane_energy(u.channel(c), f.channel(c), w, lambda, pot);
    }
    Ok(total)
}

pub(crate) fn plane_energy(u: &[f64], f: &[f64], w: &EdgeWeights, lambda: f64, pot: &Potential) -> f64 {
    let (width, height) = (w.width(), w.height());
    let data: f64 = u.iter().zip(f).map(|(a, b)| (a - b) * (a - b)).sum();
    let mut prior = 0.0;
    let wh = w.horizontal();
    for y in 0..height {
        let row = &u[y * width..(y + 1) * width];
        let wrow = &wh[y * (width - 1)..(y + 1) * (width - 1)];
        for x in 0..width - 1 {
            prior += wrow[x] * pot.value(row[x + 1] - row[x]);
        }
    }
    let wv = w.vertical();
    for y in 0..height - 1 {
        for x in 0..width {
            prior += wv[y * width + x] * pot.value(u[(y + 1) * width + x] - u[y * width + x]);
        }
    }
    data + lambda * prior
}

/// `max |u - v|` over all samples.
pub fn coupling_gap(u: &ImageBuffer, v: &ImageBuffer) -> Result<f64> {
    if !u.same_shape(v) {
        return Err(mismatch("coupling gap operands differ in shape"));
    }
    Ok(max_abs_diff(u.samples(), v.samples()))
}

pub(crate) fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}
