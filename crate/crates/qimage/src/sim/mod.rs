//! Exact statevector simulation of small qubit registers.
//!
//! Conventions used across the crate:
//! - qubit 0 is the least-significant bit of the amplitude index;
//! - rotations follow `R(t) = exp(-i t P / 2)` (see [`gate`]);
//! - multi-controlled gates act directly on the statevector (amplitudes whose
//!   control bits are all 1), so gate counts report them as single gates.

mod circuit;
mod gate;
mod state;

pub use circuit::QuantumCircuit;
pub use gate::{Gate, GateKind};
pub use state::{StateVector, MAX_QUBITS};

use rand_chacha::ChaCha8Rng;

/// Deterministic RNG stream for (seed, unit, index), independent of
/// scheduling. `unit`/`index` pick out e.g. a patch and a trajectory.
pub fn derive_rng(seed: u64, unit: u64, index: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    let mut bytes = [0u8; 32];
    bytes[..8].copy_from_slice(&seed.to_le_bytes());
    bytes[8..16].copy_from_slice(&unit.to_le_bytes());
    bytes[16..24].copy_from_slice(&index.to_le_bytes());
    bytes[24..32].copy_from_slice(&0x9e37_79b9_7f4a_7c15u64.to_le_bytes());
    ChaCha8Rng::from_seed(bytes)
}
