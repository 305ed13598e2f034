//! Ordered gate lists.

use crate::error::Result;
use crate::sim::{Gate, StateVector};

/// A gate sequence over a fixed-size register; application order is list order.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumCircuit {
    n_qubits: usize,
    gates: Vec<Gate>,
}

impl QuantumCircuit {
    pub fn new(n_qubits: usize) -> Self {
        QuantumCircuit { n_qubits, gates: Vec::new() }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn push(&mut self, gate: Gate) -> Result<&mut Self> {
        gate.validate(self.n_qubits)?;
        self.gates.push(gate);
        Ok(self)
    }

    /// Run the whole circuit on a fresh |0...0> register.
    pub fn run(&self) -> Result<StateVector> {
        let mut state = StateVector::zero(self.n_qubits)?;
        self.apply_to(&mut state)?;
        Ok(state)
    }

    pub fn apply_to(&self, state: &mut StateVector) -> Result<()> {
        for gate in &self.gates {
            state.apply(gate)?;
        }
        Ok(())
    }
}
