//! Dense complex statevector over the computational basis.
//!
//! Basis convention: qubit `q` is bit `q` of the amplitude index, so qubit 0
//! is the least-significant bit. `|q1 q0> = |01>` therefore lives at index 2.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::sim::Gate;

/// Dense double-precision amplitudes keep 24 qubits under 512 MB; anything
/// larger is rejected rather than silently thrashing.
pub const MAX_QUBITS: usize = 24;

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// The all-zeros basis state |0...0>.
    pub fn zero(n_qubits: usize) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(Error::Capacity(format!(
                "{n_qubits} qubits outside supported range 1..={MAX_QUBITS}"
            )));
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n_qubits];
        amps[0] = Complex64::new(1.0, 0.0);
        Ok(StateVector { n_qubits, amps })
    }

    /// Wrap an explicit amplitude vector. The length must be a power of two
    /// matching a supported register size and the norm must already be 1.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        let len = amps.len();
        if !len.is_power_of_two() || len < 2 {
            return Err(Error::Validation(format!(
                "amplitude count {len} is not a power of two >= 2"
            )));
        }
        let n_qubits = len.trailing_zeros() as usize;
        if n_qubits > MAX_QUBITS {
            return Err(Error::Capacity(format!(
                "{n_qubits} qubits outside supported range 1..={MAX_QUBITS}"
            )));
        }
        let state = StateVector { n_qubits, amps };
        let norm = state.norm();
        if (norm - 1.0).abs() > 1e-8 {
            return Err(Error::Validation(format!("state norm {norm} is not 1")));
        }
        Ok(state)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Apply one gate in place.
    pub fn apply(&mut self, gate: &Gate) -> Result<()> {
        gate.validate(self.n_qubits)?;
        let m = gate.target_matrix()?;
        let tbit = 1usize << gate.target;
        let cmask = gate.control_mask();
        // Visit each target-bit-0 index whose controls are satisfied and mix
        // it with its partner; every (i, i|tbit) pair is touched once.
        for i in 0..self.amps.len() {
            if i & tbit != 0 || i & cmask != cmask {
                continue;
            }
            let j = i | tbit;
            let a = self.amps[i];
            let b = self.amps[j];
            self.amps[i] = m[0] * a + m[1] * b;
            self.amps[j] = m[2] * a + m[3] * b;
        }
        Ok(())
    }

    /// |amplitude|^2 for every basis index.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    /// <Z> on one qubit: +1 weight where its bit is 0, -1 where it is 1.
    pub fn expectation_z(&self, qubit: usize) -> Result<f64> {
        if qubit >= self.n_qubits {
            return Err(Error::Validation(format!(
                "qubit {qubit} out of range for {} qubits",
                self.n_qubits
            )));
        }
        let bit = 1usize << qubit;
        let mut z = 0.0;
        for (i, a) in self.amps.iter().enumerate() {
            let p = a.norm_sqr();
            z += if i & bit == 0 { p } else { -p };
        }
        Ok(z)
    }

    /// Measure the full register `shots` times; returns index -> count.
    /// The same seed always reproduces the same counts.
    pub fn sample_counts(&self, shots: u64, seed: u64) -> Result<BTreeMap<usize, u64>> {
        if shots == 0 {
            return Err(Error::validation("shots must be >= 1"));
        }
        let mut rng = crate::sim::derive_rng(seed, 0, 0);
        let mut counts = BTreeMap::new();
        for _ in 0..shots {
            *counts.entry(self.sample_index(&mut rng)).or_insert(0u64) += 1;
        }
        Ok(counts)
    }

    /// Draw one basis index from the measurement distribution.
    pub fn sample_index(&self, rng: &mut ChaCha8Rng) -> usize {
        let u: f64 = rng.gen();
        let mut acc = 0.0;
        for (i, a) in self.amps.iter().enumerate() {
            acc += a.norm_sqr();
            if u < acc {
                return i;
            }
        }
        self.amps.len() - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

    fn assert_close(a: Complex64, b: Complex64, tol: f64) {
        assert!((a - b).norm() < tol, "{a} != {b}");
    }

    #[test]
    fn zero_state_examples() {
        let s1 = StateVector::zero(1).unwrap();
        assert_eq!(s1.amplitudes(), &[Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]);

        let s2 = StateVector::zero(2).unwrap();
        assert_eq!(s2.amplitudes().len(), 4);
        assert_eq!(s2.amplitudes()[0], Complex64::new(1.0, 0.0));
        assert!(s2.amplitudes()[1..].iter().all(|a| a.norm() == 0.0));

        let s10 = StateVector::zero(10).unwrap();
        assert_eq!(s10.amplitudes().len(), 1024);
        assert_eq!(s10.amplitudes()[0], Complex64::new(1.0, 0.0));
        assert_eq!(s10.norm(), 1.0);
    }

    #[test]
    fn zero_state_capacity_limits() {
        assert!(matches!(StateVector::zero(0), Err(Error::Capacity(_))));
        assert!(matches!(StateVector::zero(25), Err(Error::Capacity(_))));
        assert!(StateVector::zero(MAX_QUBITS).is_ok());
    }

    #[test]
    fn x_flips_qubit0() {
        let mut s = StateVector::zero(1).unwrap();
        s.apply(&Gate::x(0)).unwrap();
        assert_eq!(s.amplitudes(), &[Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)]);
    }

    #[test]
    fn h_makes_equal_superposition() {
        let mut s = StateVector::zero(1).unwrap();
        s.apply(&Gate::h(0)).unwrap();
        let f = std::f64::consts::FRAC_1_SQRT_2;
        assert_close(s.amplitudes()[0], Complex64::new(f, 0.0), 1e-12);
        assert_close(s.amplitudes()[1], Complex64::new(f, 0.0), 1e-12);
    }

    #[test]
    fn rx_pi_over_3_matches_matrix() {
        // RX(t)|0> = [cos(t/2), -i sin(t/2)] under RX(t) = exp(-i t X / 2).
        let mut s = StateVector::zero(1).unwrap();
        s.apply(&Gate::rx(0, FRAC_PI_3)).unwrap();
        let half = FRAC_PI_3 / 2.0;
        assert_close(s.amplitudes()[0], Complex64::new(half.cos(), 0.0), 1e-12);
        assert_close(s.amplitudes()[1], Complex64::new(0.0, -half.sin()), 1e-12);
    }

    #[test]
    fn apply_rejects_out_of_range_target() {
        let mut s = StateVector::zero(2).unwrap();
        assert!(matches!(s.apply(&Gate::x(2)), Err(Error::Validation(_))));
    }

    #[test]
    fn expectation_z_examples() {
        let s = StateVector::zero(1).unwrap();
        assert_eq!(s.expectation_z(0).unwrap(), 1.0);

        let mut flipped = StateVector::zero(1).unwrap();
        flipped.apply(&Gate::rx(0, PI)).unwrap();
        assert!((flipped.expectation_z(0).unwrap() + 1.0).abs() < 1e-12);

        // <Z> after RX(t) is cos t; at t = pi/2 that is 0.
        let mut half = StateVector::zero(1).unwrap();
        half.apply(&Gate::rx(0, FRAC_PI_2)).unwrap();
        assert!(half.expectation_z(0).unwrap().abs() < 1e-10);

        assert!(s.expectation_z(1).is_err());
    }

    #[test]
    fn probabilities_examples() {
        let s = StateVector::zero(1).unwrap();
        assert_eq!(s.probabilities(), vec![1.0, 0.0]);

        let mut plus = StateVector::zero(1).unwrap();
        plus.apply(&Gate::h(0)).unwrap();
        let p = plus.probabilities();
        assert!((p[0] - 0.5).abs() < 1e-12 && (p[1] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn probabilities_of_random_state_match_direct_arithmetic() {
        // Arithmetic oracle: squared magnitudes computed independently here.
        let mut rng = crate::sim::derive_rng(11, 0, 0);
        let raw: Vec<Complex64> =
            (0..8).map(|_| Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5)).collect();
        let norm = raw.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        let amps: Vec<Complex64> = raw.iter().map(|a| a / norm).collect();
        let expected: Vec<f64> =
            amps.iter().map(|a| a.re * a.re + a.im * a.im).collect();

        let s = StateVector::from_amplitudes(amps).unwrap();
        let got = s.probabilities();
        assert_eq!(got.len(), 8);
        assert!((got.iter().sum::<f64>() - 1.0).abs() < 1e-10);
        for (g, e) in got.iter().zip(&expected) {
            assert!((g - e).abs() < 1e-14);
        }
    }

    #[test]
    fn sampling_deterministic_states() {
        let s = StateVector::zero(3).unwrap();
        let counts = s.sample_counts(100, 1).unwrap();
        assert_eq!(counts.len(), 1);
        assert_eq!(counts[&0], 100);

        let mut one = StateVector::zero(1).unwrap();
        one.apply(&Gate::x(0)).unwrap();
        let counts = one.sample_counts(50, 99).unwrap();
        assert_eq!(counts[&1], 50);
    }

    #[test]
    fn sampling_superposition_within_binomial_bound() {
        let mut plus = StateVector::zero(1).unwrap();
        plus.apply(&Gate::h(0)).unwrap();
        // 10000 shots at p = 0.5: sigma = 50, so 3 sigma around 5000.
        let counts = plus.sample_counts(10_000, 7).unwrap();
        for idx in [0usize, 1] {
            let c = counts[&idx] as f64;
            assert!((c - 5000.0).abs() <= 150.0, "count {c} outside 3 sigma");
        }
    }

    #[test]
    fn sampling_same_seed_identical() {
        let mut s = StateVector::zero(3).unwrap();
        for q in 0..3 {
            s.apply(&Gate::h(q)).unwrap();
        }
        let a = s.sample_counts(2000, 1234).unwrap();
        let b = s.sample_counts(2000, 1234).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn zero_shots_rejected() {
        let s = StateVector::zero(1).unwrap();
        assert!(matches!(s.sample_counts(0, 1), Err(Error::Validation(_))));
    }

    #[test]
    fn from_amplitudes_validates() {
        assert!(StateVector::from_amplitudes(vec![Complex64::new(1.0, 0.0); 3]).is_err());
        assert!(StateVector::from_amplitudes(vec![Complex64::new(1.0, 0.0); 2]).is_err());
        let ok = vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
        assert!(StateVector::from_amplitudes(ok).is_ok());
    }
}
