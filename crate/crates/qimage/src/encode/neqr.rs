//! Novel enhanced quantum representation.
//!
//! A side-2^n image becomes an equal-weight superposition of basis states
//! `|f(y,x)>|i>` with amplitude 1/2^n: 8 intensity qubits above 2n position
//! qubits, pixel index `i = y * side + x`, intensity bit k on qubit 2n + k.
//! Unlike FRQI the intensity is stored in basis-state bits, so decoding
//! recovers every pixel exactly.

use num_complex::Complex64;

use crate::encode::{position_qubits, EncodeMode};
use crate::error::{Error, Result};
use crate::sim::{Gate, QuantumCircuit, StateVector};
use crate::GrayImage;

pub const INTENSITY_QUBITS: usize = 8;

/// Register size for a given side: 8 intensity qubits + 2n position qubits.
pub fn register_qubits(side: usize) -> usize {
    INTENSITY_QUBITS + 2 * side.trailing_zeros() as usize
}

/// Gate-level encoder: Hadamards on the position register, then one
/// multi-controlled X per set intensity bit of each pixel, conditioned on
/// the pixel's position pattern (X gates flank the zero bits).
pub fn circuit(img: &GrayImage) -> Result<QuantumCircuit> {
    let pos_qubits = position_qubits(img)?;
    let mut c = QuantumCircuit::new(pos_qubits + INTENSITY_QUBITS);
    for q in 0..pos_qubits {
        c.push(Gate::h(q))?;
    }
    let controls: Vec<usize> = (0..pos_qubits).collect();
    for (i, &p) in img.pixels().iter().enumerate() {
        if p == 0 {
            continue;
        }
        let flips: Vec<usize> =
            (0..pos_qubits).filter(|&q| i & (1 << q) == 0).collect();
        for &q in &flips {
            c.push(Gate::x(q))?;
        }
        for bit in 0..INTENSITY_QUBITS {
            if p & (1 << bit) != 0 {
                c.push(Gate::mcx(controls.clone(), pos_qubits + bit))?;
            }
        }
        for &q in &flips {
            c.push(Gate::x(q))?;
        }
    }
    Ok(c)
}

fn direct_state(img: &GrayImage) -> Result<StateVector> {
    let pos_qubits = position_qubits(img)?;
    let dim = 1usize << (pos_qubits + INTENSITY_QUBITS);
    let amp = Complex64::new(1.0 / ((1usize << pos_qubits) as f64).sqrt(), 0.0);
    let mut amps = vec![Complex64::new(0.0, 0.0); dim];
    for (i, &p) in img.pixels().iter().enumerate() {
        amps[((p as usize) << pos_qubits) | i] = amp;
    }
    StateVector::from_amplitudes(amps)
}

pub fn encode(img: &GrayImage, mode: EncodeMode) -> Result<StateVector> {
    match mode {
        EncodeMode::GateLevel => circuit(img)?.run(),
        EncodeMode::DirectAmplitude => direct_state(img),
    }
}

/// Intensity patterns with probability above this are considered present at
/// a position; a well-formed NEQR state has exactly one per position.
const PATTERN_THRESHOLD: f64 = 1e-9;

/// Exact pixel recovery: each position must carry exactly one intensity
/// pattern with nonzero probability.
pub fn decode(state: &StateVector, side: usize) -> Result<GrayImage> {
    if side < 2 || !side.is_power_of_two() {
        return Err(Error::Validation(format!("side {side} is not a power of two >= 2")));
    }
    let pos_qubits = 2 * side.trailing_zeros() as usize;
    if state.n_qubits() != pos_qubits + INTENSITY_QUBITS {
        return Err(Error::Validation(format!(
            "state has {} qubits, NEQR at side {side} needs {}",
            state.n_qubits(),
            pos_qubits + INTENSITY_QUBITS
        )));
    }
    let probs = state.probabilities();
    let mut pixels = Vec::with_capacity(side * side);
    for i in 0..side * side {
        let mut found: Option<usize> = None;
        for f in 0..(1usize << INTENSITY_QUBITS) {
            if probs[(f << pos_qubits) | i] > PATTERN_THRESHOLD {
                if let Some(prev) = found {
                    return Err(Error::MalformedState(format!(
                        "position {i} carries intensity patterns {prev} and {f}"
                    )));
                }
                found = Some(f);
            }
        }
        match found {
            Some(f) => pixels.push(f as u8),
            None => {
                return Err(Error::MalformedState(format!(
                    "position {i} has zero total probability"
                )))
            }
        }
    }
    GrayImage::new(side, side, pixels)
}
