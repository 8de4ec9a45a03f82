use crate::error::{param, Result};
use crate::image::ImageBuffer;

/// Separable Gaussian blur with kernel radius `round(3 sigma)` and mirrored
/// borders (`-1 -> 0`, `n -> n - 1`). Applied to every channel.
pub fn gaussian_blur(img: &ImageBuffer, sigma: f64) -> Result<ImageBuffer> {
    if !(sigma > 0.0 && sigma.is_finite()) {
        return Err(param("blur sigma must be positive"));
    }
    let radius = (3.0 * sigma).round() as isize;
    let mut kernel: Vec<f64> = (-radius..=radius)
        .map(|k| (-((k * k) as f64) / (2.0 * sigma * sigma)).exp())
        .collect();
    let norm: f64 = kernel.iter().sum();
    kernel.iter_mut().for_each(|k| *k /= norm);

    let (w, h) = (img.width(), img.height());
    let mut planes = Vec::with_capacity(img.channels());
    for c in 0..img.channels() {
        let src = img.channel(c);
        let mut tmp = vec![0.0; w * h];
        for y in 0..h {
            for x in 0..w {
                tmp[y * w + x] = kernel
                    .iter()
                    .enumerate()
                    .map(|(i, k)| k * src[y * w + reflect(x as isize + i as isize - radius, w)])
                    .sum();
            }
        }
        let mut out = vec![0.0; w * h];
        for y in 0..h {
            for x in 0..w {
                out[y * w + x] = kernel
                    .iter()
                    .enumerate()
                    .map(|(i, k)| k * tmp[reflect(y as isize + i as isize - radius, h) * w + x])
                    .sum();
            }
        }
        planes.push(out);
    }
    ImageBuffer::from_planes(w, h, planes)
}

fn reflect(i: isize, n: usize) -> usize {
    let n = n as isize;
    let m = i.rem_euclid(2 * n);
    (if m < n { m } else { 2 * n - 1 - m }) as usize
}
