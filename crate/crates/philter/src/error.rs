use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors surfaced by the simulator, the spectral layer and the protocols.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("qubit index {index} out of range for {total}-qubit register")]
    QubitOutOfRange { index: usize, total: usize },

    #[error("duplicate qubit index {index} in target list")]
    DuplicateQubit { index: usize },

    #[error("control qubit {index} overlaps the target list")]
    ControlOverlapsTarget { index: usize },

    #[error("state of {qubits} qubits exceeds the capacity of {max} qubits")]
    CapacityExceeded { qubits: usize, max: usize },

    #[error("matrix is not Hermitian: max |H - H^dag| = {deviation:.3e}")]
    NonHermitian { deviation: f64 },

    #[error("matrix is not unitary: max |U U^dag - I| = {deviation:.3e}")]
    NonUnitary { deviation: f64 },

    #[error("vector is not normalized: |norm - 1| = {deviation:.3e}")]
    NotNormalized { deviation: f64 },

    #[error(
        "scaled spectrum must lie in (-2*pi, 0]; found [{min:.6}, {max:.6}]. {advice}"
    )]
    SpectrumOutOfRange { min: f64, max: f64, advice: String },

    #[error("matrix dimension {dim} exceeds the diagonalization limit {max}")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("matrix dimension {dim} is not a power of two")]
    DimensionNotPowerOfTwo { dim: usize },

    #[error("energy {energy:.6} maps outside the injective phase range (-2*pi, 0]")]
    EnergyOutOfRange { energy: f64 },

    #[error("window prefix length {f} exceeds the energy register size {m}")]
    PrefixTooLong { f: usize, m: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(
        "forward/inverse state preparations are not inverses: max deviation {deviation:.3e}"
    )]
    InversePairCheck { deviation: f64 },

    #[error(
        "amplitude estimate is zero: no detectable overlap with the target window; \
         increase t or choose an ansatz with more overlap"
    )]
    EstimateZero,

    #[error(
        "energy register too small: m = {m} but the estimated success probability \
         requires m >= {required}"
    )]
    InsufficientPrecision { m: usize, required: usize },

    #[error("malformed input file: {0}")]
    MalformedFile(String),
}
