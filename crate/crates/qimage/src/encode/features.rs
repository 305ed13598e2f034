//! Classical feature vectors measured from encoded images.

use std::collections::HashMap;

use rand::Rng;

use crate::encode::{frqi, neqr, qcnn, EncodeMethod, EncodeMode, FeatureVector};
use crate::error::Result;
use crate::sim::derive_rng;
use crate::GrayImage;

/// Measure an encoded image into a classical feature vector.
///
/// - QCNN: one <Z> value per 2x2 patch, in [-1, 1];
/// - FRQI: P(color = 1 | position) per pixel, in [0, 1];
/// - NEQR: exactly decoded intensities rescaled to [0, 1].
///
/// `shots = 0` uses exact probabilities; `shots >= 1` replaces them with
/// seeded sampled estimates. Whole-image encodings run in direct-amplitude
/// mode here; gate-level equivalence is covered by the encoder tests.
pub fn extract_features(
    img: &GrayImage,
    method: EncodeMethod,
    shots: u64,
    seed: u64,
) -> Result<FeatureVector> {
    match method {
        EncodeMethod::Qcnn => {
            if shots == 0 {
                return qcnn::encode_image(img);
            }
            let mut values = Vec::new();
            for (idx, patch) in qcnn::patches(img)?.into_iter().enumerate() {
                let state = qcnn::patch_circuit(patch).run()?;
                let p_one: f64 = state
                    .probabilities()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| i & 0b1000 != 0)
                    .map(|(_, p)| p)
                    .sum();
                let mut rng = derive_rng(seed, idx as u64, 0);
                let ones = (0..shots).filter(|_| rng.gen::<f64>() < p_one).count() as u64;
                let zeros = shots - ones;
                values.push((zeros as f64 - ones as f64) / shots as f64);
            }
            Ok(FeatureVector::new(values, EncodeMethod::Qcnn))
        }
        EncodeMethod::Frqi => {
            let side = img.width();
            let state = frqi::encode(img, EncodeMode::DirectAmplitude)?;
            if shots == 0 {
                return Ok(FeatureVector::new(
                    frqi::color_probabilities(&state, side),
                    EncodeMethod::Frqi,
                ));
            }
            let mut rng = derive_rng(seed, 0, 0);
            let pos_mask = side * side - 1;
            let mut ones = vec![0u64; side * side];
            let mut totals = vec![0u64; side * side];
            for _ in 0..shots {
                let index = state.sample_index(&mut rng);
                let pos = index & pos_mask;
                totals[pos] += 1;
                if index & (side * side) != 0 {
                    ones[pos] += 1;
                }
            }
            let values = ones
                .iter()
                .zip(&totals)
                .map(|(&o, &t)| if t > 0 { o as f64 / t as f64 } else { 0.0 })
                .collect();
            Ok(FeatureVector::new(values, EncodeMethod::Frqi))
        }
        EncodeMethod::Neqr => {
            let side = img.width();
            let state = neqr::encode(img, EncodeMode::DirectAmplitude)?;
            if shots == 0 {
                let decoded = neqr::decode(&state, side)?;
                let values =
                    decoded.pixels().iter().map(|&p| f64::from(p) / 255.0).collect();
                return Ok(FeatureVector::new(values, EncodeMethod::Neqr));
            }
            let mut rng = derive_rng(seed, 0, 0);
            let pos_mask = side * side - 1;
            let pos_bits = 2 * side.trailing_zeros() as usize;
            let mut seen: Vec<HashMap<usize, u64>> = vec![HashMap::new(); side * side];
            for _ in 0..shots {
                let index = state.sample_index(&mut rng);
                *seen[index & pos_mask].entry(index >> pos_bits).or_insert(0) += 1;
            }
            // Modal intensity per position; ties break to the smaller value
            // so the result is independent of hash iteration order.
            let values = seen
                .iter()
                .map(|counts| {
                    counts
                        .iter()
                        .max_by_key(|(&f, &c)| (c, std::cmp::Reverse(f)))
                        .map(|(&f, _)| f as f64 / 255.0)
                        .unwrap_or(0.0)
                })
                .collect();
            Ok(FeatureVector::new(values, EncodeMethod::Neqr))
        }
    }
}
