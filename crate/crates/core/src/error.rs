use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("register `{name}` redeclared with size {found} (was {expected})")]
    RegisterConflict {
        name: String,
        expected: usize,
        found: usize,
    },

    #[error("unknown register `{0}`")]
    UnknownRegister(String),

    #[error("invalid register name `{0}`")]
    InvalidRegisterName(String),

    #[error("qubit {index} is out of range for register `{register}` of size {size}")]
    QubitOutOfRange {
        register: String,
        index: usize,
        size: usize,
    },

    #[error("invalid gate: {0}")]
    InvalidGate(String),

    #[error("gate `{0}` is not supported by the basis-state simulator")]
    UnsupportedGate(&'static str),

    #[error("circuit width {width} exceeds the statevector cap of {cap} qubits")]
    WidthExceeded { width: usize, cap: usize },

    #[error("statevector norm drifted to {norm} after gate {gate}")]
    NormDrift { gate: usize, norm: f64 },

    #[error("{0} is outside the formula domain")]
    Domain(String),
}

impl Error {
    pub(crate) fn params(msg: impl Into<String>) -> Self {
        Error::InvalidParams(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
