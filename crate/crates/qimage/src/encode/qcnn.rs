//! Patch-wise quantum convolutional feature extraction.
//!
//! Each non-overlapping 2x2 patch is loaded onto four qubits with RX
//! rotations, entangled by a ring of controlled-RZ gates, then pooled onto
//! qubit 3 via deferred measurement (controlled-RZ from the other three
//! qubits). The patch feature is <Z> on qubit 3, so a w x h image yields a
//! (w/2) x (h/2) feature map.

use std::f64::consts::FRAC_PI_2;

use crate::encode::{pixel_to_angle, EncodeMethod, FeatureVector};
use crate::error::{Error, Result};
use crate::sim::{Gate, QuantumCircuit};
use crate::GrayImage;

/// Entangling and pooling angle for the controlled-RZ gates. Named so
/// experiments can sweep it; the classifier never trains it.
pub const ENTANGLE_ANGLE: f64 = FRAC_PI_2;

/// The 4-qubit circuit for one patch, in row-major patch order
/// (pixel k -> qubit k).
pub fn patch_circuit(patch: [u8; 4]) -> QuantumCircuit {
    let mut circuit = QuantumCircuit::new(4);
    for (q, &p) in patch.iter().enumerate() {
        circuit.push(Gate::rx(q, pixel_to_angle(p).radians())).expect("static circuit");
    }
    // Convolution: ring of controlled-RZ gates.
    for (c, t) in [(0, 1), (1, 2), (2, 3), (3, 0)] {
        circuit.push(Gate::crz(c, t, ENTANGLE_ANGLE)).expect("static circuit");
    }
    // Pooling onto qubit 3 by deferred measurement.
    for c in 0..3 {
        circuit.push(Gate::crz(c, 3, ENTANGLE_ANGLE)).expect("static circuit");
    }
    circuit
}

/// Feature for one 2x2 patch: <Z> on the pooled qubit.
pub fn encode_patch(patch: [u8; 4]) -> f64 {
    let state = patch_circuit(patch).run().expect("4-qubit circuit always runs");
    state.expectation_z(3).expect("qubit 3 exists")
}

/// Split an image into non-overlapping 2x2 patches, row-major.
pub(crate) fn patches(img: &GrayImage) -> Result<Vec<[u8; 4]>> {
    if img.width() % 2 != 0 || img.height() % 2 != 0 {
        return Err(Error::Validation(format!(
            "{}x{} image: QCNN patching needs even width and height",
            img.width(),
            img.height()
        )));
    }
    let mut out = Vec::with_capacity(img.width() / 2 * img.height() / 2);
    for py in 0..img.height() / 2 {
        for px in 0..img.width() / 2 {
            let (x, y) = (2 * px, 2 * py);
            out.push([
                img.get(x, y),
                img.get(x + 1, y),
                img.get(x, y + 1),
                img.get(x + 1, y + 1),
            ]);
        }
    }
    Ok(out)
}

/// One feature per 2x2 patch; output length (w/2) * (h/2).
pub fn encode_image(img: &GrayImage) -> Result<FeatureVector> {
    let values = patches(img)?.into_iter().map(encode_patch).collect();
    Ok(FeatureVector::new(values, EncodeMethod::Qcnn))
}

/// Render features back to intensities for visual inspection:
/// f in [-1, 1] maps to round((f + 1) / 2 * 255).
pub fn render_feature_map(features: &FeatureVector, width: usize, height: usize) -> Result<GrayImage> {
    if features.len() != width * height {
        return Err(Error::Validation(format!(
            "{} features cannot fill a {width}x{height} map",
            features.len()
        )));
    }
    let pixels = features
        .values()
        .iter()
        .map(|f| ((f + 1.0) / 2.0 * 255.0).round().clamp(0.0, 255.0) as u8)
        .collect();
    GrayImage::new(width, height, pixels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_zero_patch_is_exactly_plus_one() {
        assert_eq!(encode_patch([0, 0, 0, 0]), 1.0);
    }

    #[test]
    fn saturated_patch_frozen_from_matrix_oracle() {
        // Full 16-amplitude matrix-product oracle value: 2.08e-16, i.e. the
        // analytic cos(pi/2) of the pooled qubit's rotation.
        assert!(encode_patch([255, 255, 255, 255]).abs() < 1e-10);
    }

    #[test]
    fn single_bright_pixel_frozen_from_matrix_oracle() {
        // Oracle value for [255, 0, 0, 0] is exactly 1.0: the bright pixel
        // sits on qubit 0 and the diagonal entanglers leave <Z_3> alone.
        let f = encode_patch([255, 0, 0, 0]);
        assert!((f - 1.0).abs() < 1e-12);
        assert!((-1.0..=1.0).contains(&f));
    }

    #[test]
    fn image_features_match_per_patch_encoding() {
        let img = GrayImage::from_fn(4, 4, |x, y| (x * 60 + y * 31) as u8);
        let fv = encode_image(&img).unwrap();
        assert_eq!(fv.len(), 4);
        let expected: Vec<f64> =
            patches(&img).unwrap().into_iter().map(encode_patch).collect();
        assert_eq!(fv.values(), expected.as_slice());
    }

    #[test]
    fn all_zero_images() {
        let img = GrayImage::constant(2, 2, 0);
        assert_eq!(encode_image(&img).unwrap().values(), &[1.0]);
        let img4 = GrayImage::constant(4, 4, 0);
        assert_eq!(encode_image(&img4).unwrap().values(), &[1.0, 1.0, 1.0, 1.0]);
    }

    #[test]
    fn odd_dimensions_rejected() {
        let img = GrayImage::constant(3, 4, 0);
        assert!(encode_image(&img).is_err());
    }

    #[test]
    fn feature_map_rendering() {
        let img = GrayImage::constant(4, 4, 0);
        let fv = encode_image(&img).unwrap();
        let map = render_feature_map(&fv, 2, 2).unwrap();
        assert_eq!(map.pixels(), &[255, 255, 255, 255]);
        assert!(render_feature_map(&fv, 3, 2).is_err());
    }
}
