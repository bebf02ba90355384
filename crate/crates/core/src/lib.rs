//! Reversible quantum circuits for the SIMON block cipher family, Grover
//! key-search oracles built from them, two simulators to check both, and
//! Clifford+T resource estimates for exhaustive key search.

pub mod circuit;
pub mod classical;
pub mod cost;
pub mod error;
pub mod grover;
pub mod params;
pub mod qasm;
pub mod sim;
pub mod synth;
pub mod verify;
pub mod word;

pub use circuit::{Circuit, Gate, GateCensus, Granularity, Qubit, QubitRange};
pub use classical::{decrypt, encrypt, expand_key, CipherState, KeySchedule};
pub use error::{Error, Result};
pub use grover::{GroverPlan, PlainCipherPair};
pub use params::{CipherParams, Variant};
pub use synth::{cipher_circuit, SimonCircuit, SimonLayout};
pub use word::BitWord;
