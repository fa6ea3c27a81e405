//! Circuit IR, exact symbolic statevector simulation, measurement
//! extractors, the independent numeric oracle, and the regression corpus.

pub mod catalog;
#[allow(clippy::module_inception)]
pub mod circuit;
pub mod gate;
pub mod measure;
pub mod oracle;
pub mod symstate;

pub use catalog::{case_catalog, CatalogCase, PinnedCheck};
pub use circuit::{AngleArg, Circuit, InputSpec};
pub use gate::{Angle, Gate};
pub use measure::{extract, extract_state, kernel_amplitude, MeasurementSpec, PauliOp, PauliString};
pub use oracle::{oracle_numeric, oracle_statevector, OracleInput};
pub use symstate::{run_symbolic, SymState, MAX_SYMBOLIC_QUBITS};
