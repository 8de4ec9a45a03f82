//! Planar floating-point image storage.

use crate::error::{mismatch, param, Result};

/// A planar image with 1 or 3 channels of `f64` samples.
///
/// Samples are stored channel by channel, each plane row-major, so the sample
/// at `(x, y)` of channel `c` lives at `c * width * height + y * width + x`.
/// Values are nominally in `[0, 255]` but are never clamped here.
#[derive(Debug, Clone, PartialEq)]
pub struct ImageBuffer {
    width: usize,
    height: usize,
    channels: usize,
    samples: Vec<f64>,
}

impl ImageBuffer {
    pub fn new(width: usize, height: usize, channels: usize, samples: Vec<f64>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(param(format!("image size must be positive, got {width}x{height}")));
        }
        if channels != 1 && channels != 3 {
            return Err(param(format!("channels must be 1 or 3, got {channels}")));
        }
        if samples.len() != width * height * channels {
            return Err(mismatch(format!(
                "expected {} samples for {width}x{height}x{channels}, got {}",
                width * height * channels,
                samples.len()
            )));
        }
        if let Some(i) = samples.iter().position(|s| !s.is_finite()) {
            return Err(param(format!("sample {i} is not finite")));
        }
        Ok(Self { width, height, channels, samples })
    }

    /// Image with every sample set to `value`.
    pub fn filled(width: usize, height: usize, channels: usize, value: f64) -> Result<Self> {
        Self::new(width, height, channels, vec![value; width * height * channels])
    }

    /// Single-channel image from a function of `(x, y)`.
    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self> {
        let mut samples = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                samples.push(f(x, y));
            }
        }
        Self::new(width, height, 1, samples)
    }

    /// Stacks single-channel planes into one image.
    pub fn from_planes(width: usize, height: usize, planes: Vec<Vec<f64>>) -> Result<Self> {
        let channels = planes.len();
        let samples = planes.into_iter().flatten().collect();
        Self::new(width, height, channels, samples)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    pub fn pixel_count(&self) -> usize {
        self.width * self.height
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<f64> {
        self.samples
    }

    /// The row-major plane of channel `c`.
    pub fn channel(&self, c: usize) -> &[f64] {
        let n = self.pixel_count();
        &self.samples[c * n..(c + 1) * n]
    }

    pub fn get(&self, x: usize, y: usize, c: usize) -> f64 {
        self.samples[c * self.pixel_count() + y * self.width + x]
    }

    /// Extracts channel `c` as a single-channel image.
    pub fn channel_image(&self, c: usize) -> ImageBuffer {
        ImageBuffer {
            width: self.width,
            height: self.height,
            channels: 1,
            samples: self.channel(c).to_vec(),
        }
    }

    pub fn same_shape(&self, other: &ImageBuffer) -> bool {
        self.width == other.width && self.height == other.height && self.channels == other.channels
    }

    pub(crate) fn check_same_shape(&self, other: &ImageBuffer, what: &str) -> Result<()> {
        if self.same_shape(other) {
            Ok(())
        } else {
            Err(mismatch(format!(
                "{what}: {}x{}x{} vs {}x{}x{}",
                self.width, self.height, self.channels, other.width, other.height, other.channels
            )))
        }
    }

    /// Swaps the x and y axes of every channel.
    pub fn transpose(&self) -> ImageBuffer {
        let n = self.pixel_count();
        let mut samples = vec![0.0; self.samples.len()];
        for c in 0..self.channels {
            transpose_into(
                &self.samples[c * n..(c + 1) * n],
                self.width,
                self.height,
                &mut samples[c * n..(c + 1) * n],
            );
        }
        ImageBuffer { width: self.height, height: self.width, channels: self.channels, samples }
    }

    /// Rec. 601 luma for 3-channel images; a copy for gray images.
    pub fn to_luma(&self) -> ImageBuffer {
        if self.channels == 1 {
            return self.clone();
        }
        let (r, g, b) = (self.channel(0), self.channel(1), self.channel(2));
        let samples = r
            .iter()
            .zip(g)
            .zip(b)
            .map(|((r, g), b)| 0.299 * r + 0.587 * g + 0.114 * b)
            .collect();
        ImageBuffer { width: self.width, height: self.height, channels: 1, samples }
    }

    /// Applies `f` to every sample. The result must stay finite.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> Result<ImageBuffer> {
        ImageBuffer::new(
            self.width,
            self.height,
            self.channels,
            self.samples.iter().map(|&s| f(s)).collect(),
        )
    }
}

const BLOCK: usize = 32;

/// Transposes a `width x height` row-major plane into `out` (`height x width`).
pub(crate) fn transpose_into(src: &[f64], width: usize, height: usize, out: &mut [f64]) {
    debug_assert_eq!(src.len(), width * height);
    debug_assert_eq!(out.len(), width * height);
    for yb in (0..height).step_by(BLOCK) {
        for xb in (0..width).step_by(BLOCK) {
            for y in yb..(yb + BLOCK).min(height) {
                for x in xb..(xb + BLOCK).min(width) {
                    out[x * height + y] = src[y * width + x];
                }
            }
        }
    }
}
