//! 8-bit grayscale images, the classical input to every encoder.

use std::fs;
use std::io::Write as _;
use std::path::Path;

use crate::error::{Error, Result};

/// A width x height grid of 8-bit intensities, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayImage {
    width: usize,
    height: usize,
    pixels: Vec<u8>,
}

impl GrayImage {
    pub fn new(width: usize, height: usize, pixels: Vec<u8>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::validation("image dimensions must be nonzero"));
        }
        if pixels.len() != width * height {
            return Err(Error::Validation(format!(
                "pixel buffer has {} entries, expected {}x{}={}",
                pixels.len(),
                width,
                height,
                width * height
            )));
        }
        Ok(GrayImage { width, height, pixels })
    }

    /// Image filled with a single intensity.
    pub fn constant(width: usize, height: usize, value: u8) -> Self {
        GrayImage { width, height, pixels: vec![value; width * height] }
    }

    /// Build from a closure over (x, y) coordinates.
    pub fn from_fn(width: usize, height: usize, f: impl Fn(usize, usize) -> u8) -> Self {
        let mut pixels = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                pixels.push(f(x, y));
            }
        }
        GrayImage { width, height, pixels }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.pixels[y * self.width + x]
    }

    pub fn set(&mut self, x: usize, y: usize, value: u8) {
        self.pixels[y * self.width + x] = value;
    }

    pub fn mean(&self) -> f64 {
        self.pixels.iter().map(|&p| p as f64).sum::<f64>() / self.pixels.len() as f64
    }

    /// True if the image is square with a power-of-two side >= 2, as the
    /// whole-image encodings require.
    pub fn is_pow2_square(&self) -> bool {
        self.width == self.height && self.width >= 2 && self.width.is_power_of_two()
    }

    /// Write as binary PGM (P5, maxval 255).
    pub fn write_pgm(&self, path: &Path) -> Result<()> {
        let mut buf = Vec::with_capacity(self.pixels.len() + 32);
        write!(buf, "P5\n{} {}\n255\n", self.width, self.height)?;
        buf.extend_from_slice(&self.pixels);
        fs::write(path, buf)?;
        Ok(())
    }

    /// Read an 8-bit PGM file, either binary (P5) or ASCII (P2).
    pub fn read_pgm(path: &Path) -> Result<Self> {
        let bytes = fs::read(path)?;
        parse_pgm(&bytes).map_err(|reason| Error::Image { path: path.to_path_buf(), reason })
    }
}

fn parse_pgm(bytes: &[u8]) -> std::result::Result<GrayImage, String> {
    let mut pos = 0usize;

    // Header tokens may be separated by whitespace and '#' comment lines.
    let next_token = |pos: &mut usize| -> std::result::Result<String, String> {
        loop {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
            if *pos < bytes.len() && bytes[*pos] == b'#' {
                while *pos < bytes.len() && bytes[*pos] != b'\n' {
                    *pos += 1;
                }
                continue;
            }
            break;
        }
        let start = *pos;
        while *pos < bytes.len() && !bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
        if start == *pos {
            return Err("truncated header".into());
        }
        Ok(String::from_utf8_lossy(&bytes[start..*pos]).into_owned())
    };

    let magic = next_token(&mut pos)?;
    if magic != "P5" && magic != "P2" {
        return Err(format!("not an 8-bit PGM (magic {magic:?})"));
    }
    let width: usize = next_token(&mut pos)?.parse().map_err(|_| "bad width")?;
    let height: usize = next_token(&mut pos)?.parse().map_err(|_| "bad height")?;
    let maxval: usize = next_token(&mut pos)?.parse().map_err(|_| "bad maxval")?;
    if maxval == 0 || maxval > 255 {
        return Err(format!("unsupported maxval {maxval}"));
    }
    if width == 0 || height == 0 {
        return Err("zero dimension".into());
    }
    let count = width * height;

    let pixels = if magic == "P5" {
        // Exactly one whitespace byte separates the header from raster data.
        pos += 1;
        if bytes.len() < pos + count {
            return Err("truncated raster".into());
        }
        bytes[pos..pos + count].to_vec()
    } else {
        let mut pixels = Vec::with_capacity(count);
        for _ in 0..count {
            let v: usize = next_token(&mut pos)?.parse().map_err(|_| "bad sample")?;
            if v > maxval {
                return Err(format!("sample {v} exceeds maxval {maxval}"));
            }
            pixels.push(v as u8);
        }
        pixels
    };

    GrayImage::new(width, height, pixels).map_err(|e| e.to_string())
}
