//! Randomised property checks. Each takes a seed and returns a description of
//! the first violation; used by the proptest suite and the acceptance run.
#![allow(dead_code)]

use rand::Rng;
use splitsmooth::{
    coupling_gap, smooth, wls_1d, wtv_1d, EdgeWeights, ImageBuffer, PassOrder, Prior,
    SmootherConfig,
};

use super::{random_signal, rng, shapes};

pub type Check = Result<(), String>;

fn max_abs(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

fn norm2(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt()
}

fn tv(z: &[f64]) -> f64 {
    z.windows(2).map(|p| (p[1] - p[0]).abs()).sum()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn translation_1d(seed: u64) -> Check {
    let mut r = rng(seed);
    let n = r.gen_range(1..=64);
    let (f, w) = random_signal(&mut r, n, 200.0);
    let c = r.gen_range(-500.0..500.0);
    let shifted: Vec<f64> = f.iter().map(|v| v + c).collect();
    for (name, solve) in [("wls", wls_1d as fn(&[f64], &[f64]) -> _), ("wtv", wtv_1d)] {
        let a = solve(&f, &w).map_err(|e| e.to_string())?;
        let b = solve(&shifted, &w).map_err(|e| e.to_string())?;
        let a: Vec<f64> = a.iter().map(|v| v + c).collect();
        let err = max_abs(&a, &b);
        ensure(err <= 1e-9, || format!("{name} translation error {err:e} (seed {seed})"))?;
    }
    Ok(())
}

pub fn wls_linearity(seed: u64) -> Check {
    let mut r = rng(seed);
    let n = r.gen_range(1..=64);
    let (f, w) = random_signal(&mut r, n, 200.0);
    let (g, _) = random_signal(&mut r, n, 0.0);
    let (a, b) = (r.gen_range(-2.0..2.0), r.gen_range(-2.0..2.0));
    let mix: Vec<f64> = f.iter().zip(&g).map(|(x, y)| a * x + b * y).collect();
    let zf = wls_1d(&f, &w).unwrap();
    let zg = wls_1d(&g, &w).unwrap();
    let zm = wls_1d(&mix, &w).unwrap();
    let want: Vec<f64> = zf.iter().zip(&zg).map(|(x, y)| a * x + b * y).collect();
    let err = max_abs(&zm, &want);
    ensure(err <= 1e-10, || format!("wls linearity error {err:e} (seed {seed})"))
}

pub fn wtv_nonexpansive(seed: u64) -> Check {
    let mut r = rng(seed);
    let n = r.gen_range(2..=64);
    let (f, w) = random_signal(&mut r, n, 200.0);
    let g: Vec<f64> = f.iter().map(|v| v + r.gen_range(-30.0..30.0)).collect();
    let (zf, zg) = (wtv_1d(&f, &w).unwrap(), wtv_1d(&g, &w).unwrap());
    let (dz, df) = (norm2(&zf, &zg), norm2(&f, &g));
    ensure(dz <= df + 1e-9, || format!("wtv expanded {df} to {dz} (seed {seed})"))
}

/// On every maximal constant run `[a, b]` of `z`,
/// `sum (z - f) = (sgn_right * w_b - sgn_left * w_{a-1}) / 2`, where the
/// signs are those of the flanking jumps (zero at the ends). Summed over
/// the whole signal this is plain mean conservation.
pub fn wtv_segment_sums(seed: u64) -> Check {
    let mut r = rng(seed);
    let n = r.gen_range(2..=64);
    let (f, w) = random_signal(&mut r, n, 200.0);
    let z = wtv_1d(&f, &w).unwrap();
    let jump_tol = 1e-9;
    let sign = |x: usize| {
        let d = z[x + 1] - z[x];
        if d > jump_tol {
            1.0
        } else if d < -jump_tol {
            -1.0
        } else {
            0.0
        }
    };
    let total: f64 = z.iter().zip(&f).map(|(a, b)| a - b).sum();
    ensure(total.abs() <= 1e-8, || format!("total mass drifted by {total:e} (seed {seed})"))?;
    let mut start = 0;
    for end in 0..n {
        if end + 1 < n && sign(end) == 0.0 {
            continue;
        }
        let excess: f64 = (start..=end).map(|i| z[i] - f[i]).sum();
        let right = if end + 1 < n { sign(end) * w[end] } else { 0.0 };
        let left = if start > 0 { sign(start - 1) * w[start - 1] } else { 0.0 };
        let want = 0.5 * (right - left);
        ensure((excess - want).abs() <= 1e-8, || {
            format!("run {start}..={end}: sum(z-f)={excess} expected {want} (seed {seed})")
        })?;
        start = end + 1;
    }
    Ok(())
}

pub fn wtv_tv_monotone_in_weight(seed: u64) -> Check {
    let mut r = rng(seed);
    let n = r.gen_range(2..=64);
    let (f, w) = random_signal(&mut r, n, 200.0);
    let mut heavier = w.clone();
    let x = r.gen_range(0..n - 1);
    heavier[x] += r.gen_range(0.0..100.0);
    let (a, b) = (tv(&wtv_1d(&f, &w).unwrap()), tv(&wtv_1d(&f, &heavier).unwrap()));
    ensure(b <= a + 1e-9, || format!("raising w[{x}] raised TV from {a} to {b} (seed {seed})"))
}

fn random_image(seed: u64) -> (ImageBuffer, EdgeWeights) {
    let mut r = rng(seed ^ 0x5eed);
    let (wd, ht) = (r.gen_range(2..=24), r.gen_range(2..=24));
    let f = shapes(wd, ht, seed, r.gen_range(0.0..20.0));
    let w = splitsmooth::compute_weights(&f, r.gen_range(5.0..2000.0)).unwrap();
    (f, w)
}

fn prior_for(seed: u64) -> Prior {
    if seed.is_multiple_of(2) {
        Prior::Wls
    } else {
        Prior::Wtv
    }
}

pub fn smoother_shift(seed: u64) -> Check {
    let (f, w) = random_image(seed);
    let c = rng(seed).gen_range(-100.0..100.0);
    let cfg = SmootherConfig::with_prior(prior_for(seed));
    let (u, _) = smooth(&f, &w, &cfg).unwrap();
    let (us, _) = smooth(&f.map(|v| v + c).unwrap(), &w, &cfg).unwrap();
    let want = u.map(|v| v + c).unwrap();
    let err = max_abs(us.samples(), want.samples());
    ensure(err <= 1e-9, || format!("{:?} shift error {err:e} (seed {seed})", cfg.prior))
}

pub fn smoother_wls_linearity(seed: u64) -> Check {
    let (f, w) = random_image(seed);
    let g = super::noise(f.width(), f.height(), seed + 1);
    let mut r = rng(seed);
    let (a, b) = (r.gen_range(-2.0..2.0), r.gen_range(-2.0..2.0));
    let cfg = SmootherConfig::default();
    let mix = ImageBuffer::new(
        f.width(),
        f.height(),
        1,
        f.samples().iter().zip(g.samples()).map(|(x, y)| a * x + b * y).collect(),
    )
    .unwrap();
    let (uf, _) = smooth(&f, &w, &cfg).unwrap();
    let (ug, _) = smooth(&g, &w, &cfg).unwrap();
    let (um, _) = smooth(&mix, &w, &cfg).unwrap();
    let want: Vec<f64> = uf.samples().iter().zip(ug.samples()).map(|(x, y)| a * x + b * y).collect();
    let scale = want.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(1.0);
    let rel = max_abs(um.samples(), &want) / scale;
    ensure(rel <= 1e-8, || format!("smoother linearity relative error {rel:e} (seed {seed})"))
}

pub fn smoother_gap_nonincreasing(seed: u64) -> Check {
    let (f, w) = random_image(seed);
    let cfg = SmootherConfig { iters_t: 10, ..SmootherConfig::with_prior(prior_for(seed)) };
    let (_, trace) = smooth(&f, &w, &cfg).unwrap();
    let gaps = trace.gaps();
    for t in 1..gaps.len() - 1 {
        ensure(gaps[t + 1] <= gaps[t] + 1e-6 * 255.0, || {
            format!("{:?} gap rose {} -> {} at t={} (seed {seed})", cfg.prior, gaps[t], gaps[t + 1], t + 2)
        })?;
    }
    Ok(())
}

/// Energy of the iterates `u^2, u^3, ...` must not rise by more than 0.1% of
/// the first of them. The input `f` itself is not part of the sequence: the
/// first half-step ignores vertical structure and can raise the energy.
pub fn smoother_energy_nonincreasing(seed: u64) -> Check {
    let (f, w) = random_image(seed);
    let cfg = SmootherConfig { iters_t: 10, ..SmootherConfig::with_prior(prior_for(seed)) };
    let (_, trace) = smooth(&f, &w, &cfg).unwrap();
    let e = trace.energies();
    for t in 1..e.len() {
        ensure(e[t] <= e[t - 1] + 1e-3 * e[0], || {
            format!("{:?} energy rose {} -> {} at t={} (seed {seed})", cfg.prior, e[t - 1], e[t], t + 1)
        })?;
    }
    Ok(())
}

pub fn smoother_transpose_symmetry(seed: u64) -> Check {
    let (f, w) = random_image(seed);
    let cfg = SmootherConfig::with_prior(prior_for(seed));
    let swapped = SmootherConfig { pass_order: PassOrder::ColumnsFirst, ..cfg.clone() };
    let (u, _) = smooth(&f, &w, &cfg).unwrap();
    let (ut, _) = smooth(&f.transpose(), &w.transpose(), &swapped).unwrap();
    let err = max_abs(ut.transpose().samples(), u.samples());
    ensure(err <= 1e-12, || format!("{:?} transpose mismatch {err:e} (seed {seed})", cfg.prior))
}

pub fn smoother_constant_fixed_point(seed: u64) -> Check {
    let mut r = rng(seed);
    let (wd, ht) = (r.gen_range(1..=20), r.gen_range(1..=20));
    let level = r.gen_range(0.0..255.0);
    let f = ImageBuffer::filled(wd, ht, if r.gen_bool(0.5) { 1 } else { 3 }, level).unwrap();
    let w = splitsmooth::uniform_weights(wd, ht).unwrap();
    let cfg = SmootherConfig::with_prior(prior_for(seed));
    let (u, trace) = smooth(&f, &w, &cfg).unwrap();
    ensure(u == f, || format!("constant image moved (seed {seed})"))?;
    ensure(trace.gaps().iter().all(|g| *g == 0.0), || format!("nonzero gap on constant image (seed {seed})"))?;
    ensure(coupling_gap(&u, &f).unwrap() == 0.0, || "gap helper disagrees".into())
}
