//! Gate descriptions applied by [`super::StateVector`].
//!
//! Rotation convention: `RX(t) = exp(-i t X / 2)` and analogously for RY/RZ,
//! i.e.
//!
//! ```text
//! RX(t) = [[cos(t/2), -i sin(t/2)], [-i sin(t/2), cos(t/2)]]
//! RY(t) = [[cos(t/2), -sin(t/2)],  [sin(t/2),  cos(t/2)]]
//! RZ(t) = [[e^{-it/2}, 0],         [0, e^{+it/2}]]
//! ```
//!
//! A controlled gate applies the same 2x2 matrix on its target for exactly
//! those basis states whose control bits are all 1.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// The gate set used by the encoders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GateKind {
    Rx,
    Ry,
    Rz,
    H,
    X,
    Crz,
    Cry,
    Cx,
    Mcx,
    Mcry,
}

impl GateKind {
    pub fn is_rotation(self) -> bool {
        matches!(self, GateKind::Rx | GateKind::Ry | GateKind::Rz | GateKind::Crz | GateKind::Cry | GateKind::Mcry)
    }
}

/// One gate: a 2x2 unitary on `target`, conditioned on `controls` all being 1.
#[derive(Debug, Clone, PartialEq)]
pub struct Gate {
    pub kind: GateKind,
    pub target: usize,
    pub controls: Vec<usize>,
    pub angle: Option<f64>,
}

impl Gate {
    pub fn rx(target: usize, angle: f64) -> Self {
        Gate { kind: GateKind::Rx, target, controls: vec![], angle: Some(angle) }
    }

    pub fn ry(target: usize, angle: f64) -> Self {
        Gate { kind: GateKind::Ry, target, controls: vec![], angle: Some(angle) }
    }

    pub fn rz(target: usize, angle: f64) -> Self {
        Gate { kind: GateKind::Rz, target, controls: vec![], angle: Some(angle) }
    }

    pub fn h(target: usize) -> Self {
        Gate { kind: GateKind::H, target, controls: vec![], angle: None }
    }

    pub fn x(target: usize) -> Self {
        Gate { kind: GateKind::X, target, controls: vec![], angle: None }
    }

    pub fn crz(control: usize, target: usize, angle: f64) -> Self {
        Gate { kind: GateKind::Crz, target, controls: vec![control], angle: Some(angle) }
    }

    pub fn cry(control: usize, target: usize, angle: f64) -> Self {
        Gate { kind: GateKind::Cry, target, controls: vec![control], angle: Some(angle) }
    }

    pub fn cx(control: usize, target: usize) -> Self {
        Gate { kind: GateKind::Cx, target, controls: vec![control], angle: None }
    }

    pub fn mcx(controls: Vec<usize>, target: usize) -> Self {
        Gate { kind: GateKind::Mcx, target, controls, angle: None }
    }

    pub fn mcry(controls: Vec<usize>, target: usize, angle: f64) -> Self {
        Gate { kind: GateKind::Mcry, target, controls, angle: Some(angle) }
    }

    /// The gate undoing this one. Rotations negate their angle; the
    /// remaining kinds are involutions.
    pub fn inverse(&self) -> Gate {
        let mut inv = self.clone();
        if let Some(a) = inv.angle {
            inv.angle = Some(-a);
        }
        inv
    }

    /// The 2x2 matrix this gate applies on its target, row-major.
    pub fn target_matrix(&self) -> Result<[Complex64; 4]> {
        let angle = match (self.kind.is_rotation(), self.angle) {
            (true, Some(a)) => a,
            (true, None) => {
                return Err(Error::validation(format!("{:?} gate requires an angle", self.kind)))
            }
            (false, Some(_)) => {
                return Err(Error::validation(format!("{:?} gate takes no angle", self.kind)))
            }
            (false, None) => 0.0,
        };
        let zero = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        Ok(match self.kind {
            GateKind::Rx => {
                let (c, s) = ((angle / 2.0).cos(), (angle / 2.0).sin());
                [Complex64::new(c, 0.0), Complex64::new(0.0, -s), Complex64::new(0.0, -s), Complex64::new(c, 0.0)]
            }
            GateKind::Ry | GateKind::Cry | GateKind::Mcry => {
                let (c, s) = ((angle / 2.0).cos(), (angle / 2.0).sin());
                [Complex64::new(c, 0.0), Complex64::new(-s, 0.0), Complex64::new(s, 0.0), Complex64::new(c, 0.0)]
            }
            GateKind::Rz | GateKind::Crz => [
                Complex64::from_polar(1.0, -angle / 2.0),
                zero,
                zero,
                Complex64::from_polar(1.0, angle / 2.0),
            ],
            GateKind::H => {
                let f = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
                [f, f, f, -f]
            }
            GateKind::X | GateKind::Cx | GateKind::Mcx => [zero, one, one, zero],
        })
    }

    /// Check target/control indices against a register of `n_qubits`.
    pub fn validate(&self, n_qubits: usize) -> Result<()> {
        if self.target >= n_qubits {
            return Err(Error::Validation(format!(
                "target qubit {} out of range for {} qubits",
                self.target, n_qubits
            )));
        }
        for &c in &self.controls {
            if c >= n_qubits {
                return Err(Error::Validation(format!(
                    "control qubit {c} out of range for {n_qubits} qubits"
                )));
            }
            if c == self.target {
                return Err(Error::Validation(format!(
                    "control qubit {c} coincides with the target"
                )));
            }
        }
        for (i, &a) in self.controls.iter().enumerate() {
            if self.controls[i + 1..].contains(&a) {
                return Err(Error::Validation(format!("duplicate control qubit {a}")));
            }
        }
        // Shape check: rejects angle-less rotations and angled Paulis.
        self.target_matrix()?;
        Ok(())
    }

    /// Bit mask with a 1 at every control position.
    pub(crate) fn control_mask(&self) -> usize {
        self.controls.iter().fold(0usize, |m, &c| m | (1 << c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_catches_bad_indices() {
        assert!(Gate::x(3).validate(3).is_err());
        assert!(Gate::cx(1, 1).validate(2).is_err());
        assert!(Gate::mcx(vec![0, 0], 1).validate(2).is_err());
        assert!(Gate::mcx(vec![0, 2], 1).validate(2).is_err());
        assert!(Gate::x(0).validate(1).is_ok());
    }

    #[test]
    fn rotation_angle_shape() {
        let mut g = Gate::rx(0, 1.0);
        g.angle = None;
        assert!(g.validate(1).is_err());
        let mut h = Gate::h(0);
        h.angle = Some(0.5);
        assert!(h.validate(1).is_err());
    }

    #[test]
    fn inverse_negates_angle() {
        let g = Gate::crz(0, 1, 0.7);
        assert_eq!(g.inverse().angle, Some(-0.7));
        assert_eq!(Gate::x(0).inverse(), Gate::x(0));
    }
}
