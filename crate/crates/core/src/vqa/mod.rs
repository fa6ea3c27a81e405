//! The benchmark circuit families and their measurement pipelines.

pub mod ansatz;
pub mod hamiltonian;
pub mod kernel;

pub use ansatz::{build_ansatz, Ansatz, AnsatzFamily};
pub use hamiltonian::{expectation_numeric, hamiltonian_expectation, Hamiltonian};
pub use kernel::{kernel_entry_expr, AngleRecipe, KernelPipeline, PauliFeatureMap};
