//! Symbolic quantum-circuit measurement expressions and their simplification.
//!
//! The pipeline: build a parametrized [`circuit::Circuit`], run it through the
//! exact symbolic statevector simulator, extract a scalar measurement
//! expression ([`circuit::MeasurementSpec`]), shrink it with the
//! term-rewriting simplifier ([`simplify`]), and compile the result to a
//! straight-line evaluation plan for fast repeated numeric evaluation.
//! [`vqa`] provides the benchmark circuit families (QDRL, entangled VQE
//! ansaetze, Pauli feature map, Hamiltonian expectations, quantum kernels) and
//! [`vqls`] the end-to-end variational linear solver with unsimplified (S0),
//! simplified (S1), and dense-oracle backends.

pub mod circuit;
pub mod vqa;
pub mod error;
pub mod expr;
pub mod simplify;

pub use error::{Error, Result};
