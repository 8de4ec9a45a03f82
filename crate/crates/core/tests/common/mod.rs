//! Deterministic synthetic fixtures shared by the integration tests.
#![allow(dead_code)]

pub mod props;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use splitsmooth::ImageBuffer;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn clamp255(v: f64) -> f64 {
    v.clamp(0.0, 255.0)
}

/// Flat regions bounded by rectangles and discs, plus Gaussian-ish noise.
pub fn shapes(width: usize, height: usize, seed: u64, noise: f64) -> ImageBuffer {
    let mut r = rng(seed);
    let background = r.gen_range(20.0..235.0);
    let mut samples = vec![background; width * height];
    for _ in 0..6 {
        let level: f64 = r.gen_range(0.0..255.0);
        let (cx, cy) = (r.gen_range(0..width) as f64, r.gen_range(0..height) as f64);
        let size = r.gen_range(1.0..(width.min(height) as f64 / 2.5).max(2.0));
        let disc = r.gen_bool(0.5);
        for y in 0..height {
            for x in 0..width {
                let (dx, dy) = (x as f64 - cx, y as f64 - cy);
                let inside = if disc { dx * dx + dy * dy < size * size } else { dx.abs() < size && dy.abs() < 0.6 * size };
                if inside {
                    samples[y * width + x] = level;
                }
            }
        }
    }
    add_noise(&mut samples, &mut r, noise);
    ImageBuffer::new(width, height, 1, samples).unwrap()
}

/// Smooth ramps with a few hard steps.
pub fn gradient(width: usize, height: usize, seed: u64, noise: f64) -> ImageBuffer {
    let mut r = rng(seed);
    let (gx, gy) = (r.gen_range(-1.5..1.5), r.gen_range(-1.5..1.5));
    let step_x = r.gen_range(width / 4..3 * width / 4);
    let mut samples: Vec<f64> = (0..width * height)
        .map(|i| {
            let (x, y) = ((i % width) as f64, (i / width) as f64);
            let jump = if i % width >= step_x { 60.0 } else { 0.0 };
            clamp255(100.0 + gx * (x - width as f64 / 2.0) + gy * (y - height as f64 / 2.0) + jump)
        })
        .collect();
    add_noise(&mut samples, &mut r, noise);
    ImageBuffer::new(width, height, 1, samples).unwrap()
}

/// Oriented sinusoidal stripes over a two-tone background.
pub fn stripes(width: usize, height: usize, seed: u64, noise: f64) -> ImageBuffer {
    let mut r = rng(seed);
    let theta: f64 = r.gen_range(0.0..std::f64::consts::PI);
    let period = r.gen_range(6.0..20.0);
    let mut samples: Vec<f64> = (0..width * height)
        .map(|i| {
            let (x, y) = ((i % width) as f64, (i / width) as f64);
            let phase = (x * theta.cos() + y * theta.sin()) * std::f64::consts::TAU / period;
            let base = if y < height as f64 / 2.0 { 70.0 } else { 170.0 };
            clamp255(base + 40.0 * phase.sin())
        })
        .collect();
    add_noise(&mut samples, &mut r, noise);
    ImageBuffer::new(width, height, 1, samples).unwrap()
}

/// Uniform noise in `[0, 255]`.
pub fn noise(width: usize, height: usize, seed: u64) -> ImageBuffer {
    let mut r = rng(seed);
    let samples = (0..width * height).map(|_| r.gen_range(0.0..255.0)).collect();
    ImageBuffer::new(width, height, 1, samples).unwrap()
}

fn add_noise(samples: &mut [f64], r: &mut ChaCha8Rng, sigma: f64) {
    if sigma > 0.0 {
        for s in samples.iter_mut() {
            // sum of uniforms, close enough to a normal for fixtures
            let n: f64 = (0..4).map(|_| r.gen_range(-1.0..1.0)).sum::<f64>() * (0.75f64).sqrt();
            *s = clamp255(*s + sigma * n);
        }
    }
}

/// Ten single-channel images between 64x64 and 128x128.
pub fn desk_images() -> Vec<ImageBuffer> {
    vec![
        shapes(64, 64, 1, 8.0),
        shapes(96, 80, 2, 4.0),
        shapes(128, 128, 3, 12.0),
        gradient(64, 96, 4, 5.0),
        gradient(128, 112, 5, 10.0),
        stripes(80, 64, 6, 3.0),
        stripes(128, 96, 7, 8.0),
        noise(64, 64, 8),
        shapes(112, 128, 9, 0.0),
        gradient(100, 100, 10, 0.0),
    ]
}

/// Random signal with values in `[0, 255]` and weights in `[0, max_w]`.
pub fn random_signal(r: &mut ChaCha8Rng, n: usize, max_w: f64) -> (Vec<f64>, Vec<f64>) {
    let f = (0..n).map(|_| r.gen_range(0.0..255.0)).collect();
    let w = (0..n - 1).map(|_| r.gen_range(0.0..=max_w)).collect();
    (f, w)
}
