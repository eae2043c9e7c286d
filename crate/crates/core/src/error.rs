use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("qubit index {index} out of range for {n} qubits")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("partition group of {size} qubits exceeds the {cap}-qubit statevector cap")]
    GroupTooLarge { size: usize, cap: usize },

    #[error("exhaustive search over {estimated:.3e} assignments exceeds the cap of {cap:.3e}")]
    SearchTooLarge { estimated: f64, cap: f64 },

    #[error("objective returned non-finite value {value} at x = {x:?}")]
    NonFiniteObjective { value: f64, x: Vec<f64> },

    #[error("wavelength {wavelength_nm} nm outside [{min_nm}, {max_nm}] nm table of material {material}")]
    WavelengthOutOfRange {
        material: String,
        wavelength_nm: f64,
        min_nm: f64,
        max_nm: f64,
    },

    #[error("non-physical transmission {value} at {wavelength_nm} nm")]
    NonPhysicalTransmission { value: f64, wavelength_nm: f64 },

    #[error("black-box cost failed on assignment {assignment:?}: {message}")]
    Blackbox {
        assignment: Vec<u32>,
        message: String,
    },

    #[error("all {replicas} replicas aborted; first error: {first}")]
    AllReplicasFailed { replicas: usize, first: String },

    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
