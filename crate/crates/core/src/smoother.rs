//! Alternating 2D smoothing with penalty continuation.
//!
//! Two copies of the image, `u` (smoothed along rows) and `v` (smoothed
//! along columns), are coupled by `beta/2 * (u - v)^2`. Each iteration
//! solves every row of `u` exactly with `v` fixed, then every column of `v`
//! with `u` fixed, and multiplies `beta` by `alpha`. For a penalty `beta` the
//! 1D data term is `(f + beta * other) / (1 + beta)` and the 1D edge weights
//! are `2 * lambda * w / (1 + beta)`.

use std::time::Instant;

use rayon::prelude::*;

use crate::config::{PassOrder, Prior, SmootherConfig};
use crate::energy::{max_abs_diff, plane_energy};
use crate::error::{param, Result};
use crate::image::{transpose_into, ImageBuffer};
use crate::potential::Potential;
use crate::solver1d::{LineSolver, TautString, WlsSolver};
use crate::trace::{SolverTrace, TraceEntry};
use crate::weights::EdgeWeights;

/// Runs the splitting scheme from `u = v = f`. `cfg.prior` must be WLS or WTV.
pub fn smooth(
    f: &ImageBuffer,
    w: &EdgeWeights,
    cfg: &SmootherConfig,
) -> Result<(ImageBuffer, SolverTrace)> {
    smooth_from(f, w, cfg, f)
}

/// Like [`smooth`] but starts the split variables at `init` instead of `f`.
pub fn smooth_from(
    f: &ImageBuffer,
    w: &EdgeWeights,
    cfg: &SmootherConfig,
    init: &ImageBuffer,
) -> Result<(ImageBuffer, SolverTrace)> {
    cfg.validate()?;
    w.check_image(f)?;
    f.check_same_shape(init, "initial estimate")?;
    let potential = match cfg.prior {
        Prior::Wls => Potential::Quadratic,
        Prior::Wtv => Potential::Abs,
        other => return Err(param(format!("the splitting smoother takes WLS or WTV, got {other:?}"))),
    };
    if cfg.pass_order == PassOrder::ColumnsFirst {
        let rows_first = SmootherConfig { pass_order: PassOrder::RowsFirst, ..cfg.clone() };
        let (u, trace) =
            smooth_from(&f.transpose(), &w.transpose(), &rows_first, &init.transpose())?;
        return Ok((u.transpose(), trace));
    }
    let out = match cfg.prior {
        Prior::Wls => run::<WlsSolver>(f, w, cfg, init, &potential),
        _ => run::<TautString>(f, w, cfg, init, &potential),
    };
    Ok(out)
}

struct Plane {
    f: Vec<f64>,
    ft: Vec<f64>,
    u: Vec<f64>,
    ut: Vec<f64>,
    v: Vec<f64>,
    vt: Vec<f64>,
}

fn run<S: LineSolver + Default>(
    f: &ImageBuffer,
    w: &EdgeWeights,
    cfg: &SmootherConfig,
    init: &ImageBuffer,
    potential: &Potential,
) -> (ImageBuffer, SolverTrace) {
    let (width, height) = (f.width(), f.height());
    let n = width * height;
    let mut planes: Vec<Plane> = (0..f.channels())
        .map(|c| {
            let fc = f.channel(c).to_vec();
            let mut ft = vec![0.0; n];
            transpose_into(&fc, width, height, &mut ft);
            let start = init.channel(c).to_vec();
            Plane { f: fc, ft, u: start.clone(), ut: vec![0.0; n], v: start, vt: vec![0.0; n] }
        })
        .collect();
    let horizontal = w.horizontal();
    let vertical_t = w.transpose().horizontal().to_vec();

    let mut trace = SolverTrace::default();
    let mut beta = cfg.beta1;
    let mut elapsed = 0.0;
    for t in 1..=cfg.iters_t {
        let start = Instant::now();
        let keep = beta / (1.0 + beta);
        let scale = 2.0 * cfg.lambda / (1.0 + beta);
        for p in planes.iter_mut() {
            line_pass::<S>(width, &p.f, &p.v, horizontal, keep, scale, &mut p.u);
            transpose_into(&p.u, width, height, &mut p.ut);
            line_pass::<S>(height, &p.ft, &p.ut, &vertical_t, keep, scale, &mut p.vt);
            transpose_into(&p.vt, height, width, &mut p.v);
        }
        beta *= cfg.alpha;
        elapsed += start.elapsed().as_secs_f64() * 1e3;

        let energy = planes
            .iter()
            .map(|p| plane_energy(&p.u, &p.f, w, cfg.lambda, potential))
            .sum();
        let gap = planes.iter().fold(0.0_f64, |m, p| m.max(max_abs_diff(&p.u, &p.v)));
        trace.entries.push(TraceEntry { iter: t, energy, gap, elapsed_ms: elapsed });
    }
    let samples = planes.into_iter().flat_map(|p| p.u).collect();
    let u = ImageBuffer::new(width, height, f.channels(), samples)
        .expect("solver output keeps the input shape");
    (u, trace)
}

/// Solves every contiguous line of length `len`: data `f + keep * (other - f)`,
/// edge weights `scale * weights`.
fn line_pass<S: LineSolver + Default>(
    len: usize,
    data: &[f64],
    other: &[f64],
    weights: &[f64],
    keep: f64,
    scale: f64,
    out: &mut [f64],
) {
    let edges = len - 1;
    out.par_chunks_mut(len).enumerate().for_each_init(
        || (S::default(), vec![0.0; len], vec![0.0; edges]),
        |(solver, rhs, wt), (i, line)| {
            let fl = &data[i * len..(i + 1) * len];
            let ol = &other[i * len..(i + 1) * len];
            for ((r, &a), &b) in rhs.iter_mut().zip(fl).zip(ol) {
                *r = a + keep * (b - a);
            }
            for (d, &s) in wt.iter_mut().zip(&weights[i * edges..(i + 1) * edges]) {
                *d = scale * s;
            }
            solver.solve_into(rhs, wt, line);
        },
    );
}
