//! Iteratively re-weighted smoothing for non-convex potentials.
//!
//! Each outer iteration replaces the potential by a convex surrogate that
//! touches it at the current estimate and minimises the surrogate with the
//! splitting smoother:
//!
//! * FIRLS: quadratic surrogate, edge weights `w * psi'(tau) / (2 tau)`,
//!   solved as WLS.
//! * FIRL1: weighted-L1 surrogate for potentials concave in `|tau|`, edge
//!   weights `w * |psi'(|tau|)|`, solved as WTV.
//!
//! `lambda` is left as the global multiplier; only the per-edge weights
//! change. Colour images are handled one channel at a time because the
//! surrogate weights depend on each channel's own gradients.

use std::time::Instant;

use crate::config::{Prior, SmootherConfig};
use crate::energy::plane_energy;
use crate::error::{param, Result};
use crate::image::ImageBuffer;
use crate::potential::Potential;
use crate::smoother::smooth_from;
use crate::trace::{SolverTrace, TraceEntry};
use crate::weights::EdgeWeights;

/// Minimises the smoothing objective with potential `pot` by quadratic
/// majorisation. `pot` must have a finite re-weighting factor at zero
/// (Quadratic or Welsch). Runs `cfg.iters_k` outer and `cfg.iters_t` inner
/// iterations; `cfg.prior` is ignored.
pub fn firls(
    f: &ImageBuffer,
    w: &EdgeWeights,
    cfg: &SmootherConfig,
    pot: &Potential,
) -> Result<(ImageBuffer, SolverTrace)> {
    if !pot.has_finite_irls_ratio() {
        return Err(param(format!(
            "{} potential has no finite quadratic re-weighting at zero",
            pot.name()
        )));
    }
    let p = *pot;
    reweight_loop(f, w, cfg, pot, Prior::Wls, move |tau| p.irls_ratio(tau))
}

/// Minimises the smoothing objective with a potential concave in `|tau|`
/// (Abs, LogAbs or PowerP) by weighted-L1 majorisation.
pub fn firl1(
    f: &ImageBuffer,
    w: &EdgeWeights,
    cfg: &SmootherConfig,
    pot: &Potential,
) -> Result<(ImageBuffer, SolverTrace)> {
    if pot.irl1_weight(0.0).is_none() {
        return Err(param(format!("{} potential is not supported by FIRL1", pot.name())));
    }
    let p = *pot;
    reweight_loop(f, w, cfg, pot, Prior::Wtv, move |tau| {
        p.irl1_weight(tau).expect("checked above")
    })
}

fn reweight_loop(
    f: &ImageBuffer,
    w: &EdgeWeights,
    cfg: &SmootherConfig,
    pot: &Potential,
    prior: Prior,
    factor: impl Fn(f64) -> f64 + Copy,
) -> Result<(ImageBuffer, SolverTrace)> {
    cfg.validate()?;
    w.check_image(f)?;
    let inner = SmootherConfig { prior, ..cfg.clone() };
    let channels: Vec<ImageBuffer> = (0..f.channels()).map(|c| f.channel_image(c)).collect();
    let mut estimates = channels.clone();
    let mut trace = SolverTrace::default();
    let mut elapsed = 0.0;
    for k in 1..=cfg.iters_k {
        let start = Instant::now();
        let mut gap = 0.0_f64;
        for (fc, uc) in channels.iter().zip(estimates.iter_mut()) {
            // restarting beta at beta1 for each surrogate
            let surrogate = w.modulated(uc.samples(), factor);
            let (next, inner_trace) = smooth_from(fc, &surrogate, &inner, uc)?;
            gap = gap.max(inner_trace.last().map_or(0.0, |e| e.gap));
            *uc = next;
        }
        elapsed += start.elapsed().as_secs_f64() * 1e3;
        let energy = channels
            .iter()
            .zip(&estimates)
            .map(|(fc, uc)| plane_energy(uc.samples(), fc.samples(), w, cfg.lambda, pot))
            .sum();
        trace.entries.push(TraceEntry { iter: k, energy, gap, elapsed_ms: elapsed });
    }
    let planes = estimates.into_iter().map(|u| u.into_samples()).collect();
    let u = ImageBuffer::from_planes(f.width(), f.height(), planes)?;
    Ok((u, trace))
}
