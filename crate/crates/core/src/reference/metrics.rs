use crate::error::Result;
use crate::image::ImageBuffer;

/// Side of the square SSIM window; clamped to the image size.
pub const SSIM_WINDOW: usize = 8;

const C1: f64 = (0.01 * 255.0) * (0.01 * 255.0);
const C2: f64 = (0.03 * 255.0) * (0.03 * 255.0);

/// Mean SSIM over all uniform sliding windows. Colour images are compared on luma.
pub fn ssim(a: &ImageBuffer, b: &ImageBuffer) -> Result<f64> {
    a.check_same_shape(b, "ssim operands")?;
    let (la, lb) = (a.to_luma(), b.to_luma());
    let (width, height) = (a.width(), a.height());
    let win = SSIM_WINDOW.min(width).min(height);
    let (x, y) = (la.channel(0), lb.channel(0));

    let sat_a = summed(width, height, |i| x[i]);
    let sat_b = summed(width, height, |i| y[i]);
    let sat_aa = summed(width, height, |i| x[i] * x[i]);
    let sat_bb = summed(width, height, |i| y[i] * y[i]);
    let sat_ab = summed(width, height, |i| x[i] * y[i]);

    let count = (win * win) as f64;
    let mut total = 0.0;
    let mut windows = 0usize;
    for y0 in 0..=height - win {
        for x0 in 0..=width - win {
            let rect = |s: &[f64]| box_sum(s, width, x0, y0, win) / count;
            let (ma, mb) = (rect(&sat_a), rect(&sat_b));
            let va = (rect(&sat_aa) - ma * ma).max(0.0);
            let vb = (rect(&sat_bb) - mb * mb).max(0.0);
            let cov = rect(&sat_ab) - ma * mb;
            total += ssim_window(ma, mb, va, vb, cov);
            windows += 1;
        }
    }
    Ok(total / windows as f64)
}

fn ssim_window(ma: f64, mb: f64, va: f64, vb: f64, cov: f64) -> f64 {
    ((2.0 * ma * mb + C1) * (2.0 * cov + C2)) / ((ma * ma + mb * mb + C1) * (va + vb + C2))
}

/// Summed-area table with a zero first row and column.
fn summed(width: usize, height: usize, v: impl Fn(usize) -> f64) -> Vec<f64> {
    let stride = width + 1;
    let mut s = vec![0.0; stride * (height + 1)];
    for y in 0..height {
        let mut row = 0.0;
        for x in 0..width {
            row += v(y * width + x);
            s[(y + 1) * stride + x + 1] = s[y * stride + x + 1] + row;
        }
    }
    s
}

fn box_sum(s: &[f64], width: usize, x0: usize, y0: usize, win: usize) -> f64 {
    let stride = width + 1;
    let (x1, y1) = (x0 + win, y0 + win);
    s[y1 * stride + x1] - s[y0 * stride + x1] - s[y1 * stride + x0] + s[y0 * stride + x0]
}

/// Peak signal-to-noise ratio for 8-bit range, in dB.
pub fn psnr(a: &ImageBuffer, b: &ImageBuffer) -> Result<f64> {
    a.check_same_shape(b, "psnr operands")?;
    let mse = a.samples().iter().zip(b.samples()).map(|(p, q)| (p - q).powi(2)).sum::<f64>()
        / a.samples().len() as f64;
    if mse == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(10.0 * (255.0 * 255.0 / mse).log10())
}
