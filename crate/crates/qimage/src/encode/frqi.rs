//! Flexible representation of quantum images.
//!
//! A side-2^n image becomes a (2n+1)-qubit state
//!
//! ```text
//! (1/2^n) * sum_i (cos(theta_i)|0> + sin(theta_i)|1>) (x) |i>
//! ```
//!
//! with the color qubit on top of the 2n position qubits, pixel index
//! `i = y * side + x`, and theta_i the pixel's angle in [0, pi/2]. The state
//! is normalized by construction: each position contributes
//! (cos^2 + sin^2) / 4^n.

use num_complex::Complex64;

use crate::encode::{angle_to_pixel, pixel_to_angle, position_qubits, EncodeMode};
use crate::error::{Error, Result};
use crate::sim::{Gate, QuantumCircuit, StateVector};
use crate::GrayImage;

/// Total register size for a given side: 2n position qubits plus the color
/// qubit.
pub fn register_qubits(side: usize) -> usize {
    2 * side.trailing_zeros() as usize + 1
}

/// Gate-level encoder: Hadamards spread the position register, then each
/// pixel applies a multi-controlled RY(2 theta) on the color qubit,
/// conditioned on its position pattern (X gates flank the zero bits).
pub fn circuit(img: &GrayImage) -> Result<QuantumCircuit> {
    let pos_qubits = position_qubits(img)?;
    let color = pos_qubits;
    let mut c = QuantumCircuit::new(pos_qubits + 1);
    for q in 0..pos_qubits {
        c.push(Gate::h(q))?;
    }
    let controls: Vec<usize> = (0..pos_qubits).collect();
    for (i, &p) in img.pixels().iter().enumerate() {
        let flips: Vec<usize> =
            (0..pos_qubits).filter(|&q| i & (1 << q) == 0).collect();
        for &q in &flips {
            c.push(Gate::x(q))?;
        }
        c.push(Gate::mcry(controls.clone(), color, 2.0 * pixel_to_angle(p).radians()))?;
        for &q in &flips {
            c.push(Gate::x(q))?;
        }
    }
    Ok(c)
}

fn direct_state(img: &GrayImage) -> Result<StateVector> {
    let pos_qubits = position_qubits(img)?;
    let dim = 1usize << (pos_qubits + 1);
    let scale = 1.0 / ((1usize << pos_qubits) as f64).sqrt();
    let mut amps = vec![Complex64::new(0.0, 0.0); dim];
    for (i, &p) in img.pixels().iter().enumerate() {
        let theta = pixel_to_angle(p).radians();
        amps[i] = Complex64::new(theta.cos() * scale, 0.0);
        amps[(1 << pos_qubits) | i] = Complex64::new(theta.sin() * scale, 0.0);
    }
    StateVector::from_amplitudes(amps)
}

pub fn encode(img: &GrayImage, mode: EncodeMode) -> Result<StateVector> {
    match mode {
        EncodeMode::GateLevel => circuit(img)?.run(),
        EncodeMode::DirectAmplitude => direct_state(img),
    }
}

/// Recover pixels from conditional color probabilities:
/// theta_i = atan2(sqrt P(color=1, i), sqrt P(color=0, i)).
pub fn decode(state: &StateVector, side: usize) -> Result<GrayImage> {
    if side < 2 || !side.is_power_of_two() {
        return Err(Error::Validation(format!("side {side} is not a power of two >= 2")));
    }
    let pos_qubits = 2 * side.trailing_zeros() as usize;
    if state.n_qubits() != pos_qubits + 1 {
        return Err(Error::Validation(format!(
            "state has {} qubits, FRQI at side {side} needs {}",
            state.n_qubits(),
            pos_qubits + 1
        )));
    }
    let probs = state.probabilities();
    let pixels = (0..side * side)
        .map(|i| {
            let p0 = probs[i];
            let p1 = probs[(1 << pos_qubits) | i];
            angle_to_pixel(p1.sqrt().atan2(p0.sqrt()))
        })
        .collect();
    GrayImage::new(side, side, pixels)
}

/// Exact conditional probabilities P(color=1 | position), one per pixel.
pub(crate) fn color_probabilities(state: &StateVector, side: usize) -> Vec<f64> {
    let pos_qubits = 2 * side.trailing_zeros() as usize;
    let probs = state.probabilities();
    (0..side * side)
        .map(|i| {
            let p0 = probs[i];
            let p1 = probs[(1 << pos_qubits) | i];
            let total = p0 + p1;
            if total > 0.0 {
                p1 / total
            } else {
                0.0
            }
        })
        .collect()
}
