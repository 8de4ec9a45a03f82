//! Binary PGM (P5) and PPM (P6) with maxval 255.

use crate::error::{Error, Result};
use crate::image::ImageBuffer;

fn decode_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Decode { offset, message: message.into() }
}

struct Header<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Header<'_> {
    fn skip_space(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b'#' {
                while self.bytes.get(self.pos).is_some_and(|&c| c != b'\n' && c != b'\r') {
                    self.pos += 1;
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn number(&mut self, what: &str) -> Result<usize> {
        self.skip_space();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(decode_err(start, format!("expected {what}")));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| decode_err(start, format!("{what} out of range")))
    }
}

pub fn read_pnm(bytes: &[u8]) -> Result<ImageBuffer> {
    let channels = match bytes.get(..2) {
        Some(b"P5") => 1,
        Some(b"P6") => 3,
        _ => return Err(decode_err(0, "expected P5 or P6 magic")),
    };
    let mut h = Header { bytes, pos: 2 };
    let width = h.number("width")?;
    let height = h.number("height")?;
    h.skip_space();
    let maxval_at = h.pos;
    let maxval = h.number("maxval")?;
    if maxval != 255 {
        return Err(decode_err(maxval_at, format!("unsupported maxval {maxval}")));
    }
    match bytes.get(h.pos) {
        Some(b) if b.is_ascii_whitespace() => h.pos += 1,
        _ => return Err(decode_err(h.pos, "expected whitespace after maxval")),
    }
    if width == 0 || height == 0 {
        return Err(decode_err(2, "image dimensions must be positive"));
    }
    let n = width
        .checked_mul(height)
        .and_then(|p| p.checked_mul(channels))
        .ok_or_else(|| decode_err(2, "image dimensions overflow"))?;
    let payload = &bytes[h.pos..];
    if payload.len() < n {
        return Err(decode_err(bytes.len(), format!("truncated payload: need {n} bytes, have {}", payload.len())));
    }
    let plane = width * height;
    let mut samples = vec![0.0; n];
    for (i, &b) in payload[..n].iter().enumerate() {
        samples[(i % channels) * plane + i / channels] = f64::from(b);
    }
    ImageBuffer::new(width, height, channels, samples)
}

/// Clamps to `[0, 255]` and rounds half away from zero.
pub fn write_pnm(img: &ImageBuffer) -> Vec<u8> {
    let (w, h, channels) = (img.width(), img.height(), img.channels());
    let magic = if channels == 1 { "P5" } else { "P6" };
    let mut out = format!("{magic}\n{w} {h}\n255\n").into_bytes();
    let plane = w * h;
    out.reserve(plane * channels);
    for p in 0..plane {
        for c in 0..channels {
            out.push(img.samples()[c * plane + p].clamp(0.0, 255.0).round() as u8);
        }
    }
    out
}
