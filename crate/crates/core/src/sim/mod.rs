//! Circuit execution.
//!
//! Two tiers: [`run_basis`] evaluates purely reversible circuits on one
//! computational basis state at any width; [`run_statevector`] runs any
//! circuit on a dense statevector up to a configurable width cap.
//!
//! Qubit ordering is little-endian by declaration: global qubit `q` is bit
//! `q` of a basis-state index. Measurement outcomes are labelled in register
//! order instead (first qubit of the first register leftmost), and histograms
//! carry the reversed label as well.

mod basis;
mod histogram;
mod statevector;

pub use basis::{run_basis, BasisState};
pub use histogram::{measure_histogram, Histogram, HistogramEntry};
pub use statevector::{run_statevector, SimConfig, StateVector, CAP_ENV_VAR, DEFAULT_CAP};
