//! Quantum image encodings and classical feature extraction.
//!
//! Three schemes are provided:
//! - [`qcnn`]: patch-wise 4-qubit circuits whose single-qubit expectation
//!   values form a half-resolution feature map;
//! - [`frqi`]: one color qubit entangled with a position register, pixel
//!   intensity as a rotation angle;
//! - [`neqr`]: 8 intensity qubits alongside the position register, exact
//!   integer retrieval.
//!
//! Pixel positions map to the register in row-major order: index
//! `i = y * side + x`, with position qubit 0 the least-significant bit of
//! `i`. FRQI's color qubit and NEQR's intensity qubits sit above the
//! position qubits.

pub mod feature_file;
pub mod frqi;
pub mod neqr;
pub mod qcnn;

mod features;

pub use feature_file::FeatureSet;
pub use features::extract_features;

use std::f64::consts::FRAC_PI_2;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which encoding produced a feature vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EncodeMethod {
    Qcnn,
    Frqi,
    Neqr,
}

impl fmt::Display for EncodeMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            EncodeMethod::Qcnn => "qcnn",
            EncodeMethod::Frqi => "frqi",
            EncodeMethod::Neqr => "neqr",
        };
        f.write_str(s)
    }
}

/// How a whole-image encoding is realized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EncodeMode {
    /// Build the actual circuit (Hadamards plus per-pixel multi-controlled
    /// gates) and run it on the simulator.
    GateLevel,
    /// Write the target amplitudes directly. Identical state, much faster.
    DirectAmplitude,
}

/// A pixel intensity mapped into [0, pi/2].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PixelAngle(f64);

impl PixelAngle {
    pub fn radians(self) -> f64 {
        self.0
    }
}

/// Linear map of intensity 0..=255 onto [0, pi/2]; endpoints exact.
pub fn pixel_to_angle(p: u8) -> PixelAngle {
    PixelAngle(f64::from(p) / 255.0 * FRAC_PI_2)
}

/// Inverse of [`pixel_to_angle`], rounding to the nearest intensity level.
pub fn angle_to_pixel(theta: f64) -> u8 {
    (theta / FRAC_PI_2 * 255.0).round().clamp(0.0, 255.0) as u8
}

/// Real-valued measured features bridging an encoder and the classifier.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureVector {
    values: Vec<f64>,
    method: EncodeMethod,
}

impl FeatureVector {
    pub fn new(values: Vec<f64>, method: EncodeMethod) -> Self {
        FeatureVector { values, method }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn method(&self) -> EncodeMethod {
        self.method
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Number of position qubits (2n) for a side-2^n image, validating shape.
pub(crate) fn position_qubits(img: &crate::GrayImage) -> Result<usize> {
    if !img.is_pow2_square() {
        return Err(Error::Validation(format!(
            "{}x{} image: whole-image encodings need a square power-of-two side >= 2",
            img.width(),
            img.height()
        )));
    }
    Ok(2 * img.width().trailing_zeros() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angle_endpoints_exact() {
        assert_eq!(pixel_to_angle(0).radians(), 0.0);
        assert_eq!(pixel_to_angle(255).radians(), FRAC_PI_2);
    }

    #[test]
    fn angle_midpoint_frozen() {
        // (128/255) * (pi/2), to full f64 precision.
        assert!((pixel_to_angle(128).radians() - 0.788_478_156_195_085_3).abs() < 1e-15);
    }

    #[test]
    fn angle_monotone_over_full_range() {
        for p in 0u8..255 {
            assert!(pixel_to_angle(p).radians() < pixel_to_angle(p + 1).radians());
        }
    }

    #[test]
    fn angle_roundtrip_every_intensity() {
        for p in 0..=255u8 {
            assert_eq!(angle_to_pixel(pixel_to_angle(p).radians()), p);
        }
    }
}
