//! Crate-wide error type.

use crate::expr::Sym;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unbound symbol {0} in numeric evaluation")]
    UnboundSymbol(Sym),
    #[error("division by zero coefficient")]
    CoeffDivByZero,
    #[error("qubit {qubit} out of range for {n} qubits")]
    QubitOutOfRange { qubit: u32, n: u32 },
    #[error("control and target are the same qubit ({0})")]
    ControlEqualsTarget(u32),
    #[error("unknown gate `{0}`")]
    UnknownGate(String),
    #[error("parameter `{0}` is not declared in the circuit parameter table")]
    UnboundParameter(String),
    #[error("rotation angle {0} is not an exact multiple of pi/2; symbolic simulation needs exact coefficients (use the numeric oracle for arbitrary angles)")]
    NonExactAngle(f64),
    #[error("explicit input vector has length {got}, expected {expected}")]
    InputDimension { got: usize, expected: usize },
    #[error("malformed Pauli string `{0}`: expected {1} characters from I/X/Y/Z")]
    MalformedPauli(String, u32),
    #[error("measurement spec requires circuits on equal qubit counts (got {0} and {1})")]
    KernelQubitMismatch(u32, u32),
    #[error("kernel circuits must start from |0^n> input")]
    KernelInputNotZeros,
    #[error("feature vector has dimension {got}, feature map expects {expected}")]
    FeatureDimension { got: usize, expected: usize },
    #[error("Hamiltonian has no terms")]
    EmptyHamiltonian,
    #[error("Hamiltonian term `{0}` has non-finite coefficient")]
    NonFiniteCoefficient(String),
    #[error("operator decomposition is numerically singular (|det| ~ {0:.3e})")]
    SingularOperator(f64),
    #[error("degenerate operator: <psi|A†A|psi> = {0:.3e} below 1e-14")]
    DegenerateOperator(f64),
    #[error("ansatz family `{family}` does not support {n_qubits} qubits / {n_layers} layers")]
    UnsupportedAnsatz {
        family: String,
        n_qubits: u32,
        n_layers: u32,
    },
    #[error("parameter vector has length {got}, problem expects {expected}")]
    ThetaDimension { got: usize, expected: usize },
    #[error("term index {0} out of range for decomposition with {1} terms")]
    TermIndex(usize, usize),
    #[error("expression JSON: {0}")]
    ExprJson(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
