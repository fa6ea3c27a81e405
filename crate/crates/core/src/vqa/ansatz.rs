//! Benchmark circuit families: the QDRL VQC, linear- and full-entangled
//! VQE ansaetze, and the Ry/CZ ansatz the linear solver uses.
//!
//! The published figures give only parameter and qubit counts for these
//! circuits, so the generators follow the standard constructions the text
//! names; counts are pinned by tests (QDRL n=2; 4 qubits / 8 params linear,
//! 4 / 16 chemistry-style, 4 / 8 full-entangled; 3+1 qubits / 9 params for
//! the solver).

use serde::{Deserialize, Serialize};

use crate::circuit::Circuit;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AnsatzFamily {
    Qdrl,
    LinearEntangled,
    FullEntangled,
    VqlsRyCz,
}

impl AnsatzFamily {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "qdrl" => AnsatzFamily::Qdrl,
            "linear-entangled" => AnsatzFamily::LinearEntangled,
            "full-entangled" => AnsatzFamily::FullEntangled,
            "vqls-ry-cz" => AnsatzFamily::VqlsRyCz,
            other => {
                return Err(Error::UnsupportedAnsatz {
                    family: other.to_string(),
                    n_qubits: 0,
                    n_layers: 0,
                })
            }
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            AnsatzFamily::Qdrl => "qdrl",
            AnsatzFamily::LinearEntangled => "linear-entangled",
            AnsatzFamily::FullEntangled => "full-entangled",
            AnsatzFamily::VqlsRyCz => "vqls-ry-cz",
        }
    }
}

/// Ansatz descriptor; `generate` produces the circuit.
#[derive(Clone, Debug)]
pub struct Ansatz {
    pub family: AnsatzFamily,
    pub n_qubits: u32,
    pub n_layers: u32,
}

impl Ansatz {
    pub fn new(family: AnsatzFamily, n_qubits: u32, n_layers: u32) -> Self {
        Ansatz { family, n_qubits, n_layers }
    }

    pub fn parameter_count(&self) -> usize {
        let n = self.n_qubits as usize;
        let l = self.n_layers as usize;
        match self.family {
            // Rx,Rz initializer per qubit, then alpha/beta/gamma per qubit per block.
            AnsatzFamily::Qdrl => 2 * n + 3 * n * l,
            AnsatzFamily::LinearEntangled | AnsatzFamily::FullEntangled | AnsatzFamily::VqlsRyCz => n * l,
        }
    }

    pub fn generate(&self) -> Result<Circuit> {
        build_ansatz(self.family, self.n_qubits, self.n_layers)
    }
}

/// Deterministic circuit for the family. `n_layers` counts rotation layers
/// (entangled families) or dashed-box repetitions (QDRL).
pub fn build_ansatz(family: AnsatzFamily, n_qubits: u32, n_layers: u32) -> Result<Circuit> {
    let unsupported = || Error::UnsupportedAnsatz {
        family: family.name().to_string(),
        n_qubits,
        n_layers,
    };
    match family {
        AnsatzFamily::Qdrl => {
            if n_qubits < 2 || n_layers < 1 {
                return Err(unsupported());
            }
            let mut c = Circuit::new(n_qubits).separable();
            // Initializer layer, independent of parameter learning.
            for q in 1..=n_qubits {
                c = c.rx(q, format!("init_rx_{q}"));
                c = c.rz(q, format!("init_rz_{q}"));
            }
            // Dashed-box block: CNOT chain then alpha/beta/gamma rotations.
            for rep in 0..n_layers {
                for q in 1..n_qubits {
                    c = c.cnot(q, q + 1);
                }
                for q in 1..=n_qubits {
                    c = c.rz(q, format!("alpha_{rep}_{q}"));
                    c = c.ry(q, format!("beta_{rep}_{q}"));
                    c = c.rz(q, format!("gamma_{rep}_{q}"));
                }
            }
            Ok(c)
        }
        AnsatzFamily::LinearEntangled | AnsatzFamily::FullEntangled | AnsatzFamily::VqlsRyCz => {
            if n_qubits < 1 || n_layers < 1 {
                return Err(unsupported());
            }
            let mut c = Circuit::new(n_qubits);
            let mut k = 0;
            for layer in 0..n_layers {
                for q in 1..=n_qubits {
                    c = c.ry(q, format!("theta_{k}"));
                    k += 1;
                }
                if layer + 1 < n_layers {
                    match family {
                        AnsatzFamily::LinearEntangled => {
                            for q in 1..n_qubits {
                                c = c.cnot(q, q + 1);
                            }
                        }
                        AnsatzFamily::FullEntangled => {
                            for a in 1..=n_qubits {
                                for b in (a + 1)..=n_qubits {
                                    c = c.cnot(a, b);
                                }
                            }
                        }
                        AnsatzFamily::VqlsRyCz => {
                            for q in 1..n_qubits {
                                c = c.cz(q, q + 1);
                            }
                        }
                        AnsatzFamily::Qdrl => unreachable!(),
                    }
                }
            }
            Ok(c)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_4q_8params() {
        let c = build_ansatz(AnsatzFamily::LinearEntangled, 4, 2).unwrap();
        assert_eq!(c.n_params(), 8);
        assert_eq!(Ansatz::new(AnsatzFamily::LinearEntangled, 4, 2).parameter_count(), 8);
    }

    #[test]
    fn chemistry_4q_16params() {
        let c = build_ansatz(AnsatzFamily::LinearEntangled, 4, 4).unwrap();
        assert_eq!(c.n_params(), 16);
    }

    #[test]
    fn full_entangled_4q_8params() {
        let c = build_ansatz(AnsatzFamily::FullEntangled, 4, 2).unwrap();
        assert_eq!(c.n_params(), 8);
        // all-pairs entangler: C(4,2) = 6 CNOTs between the two layers
        let cnots = c
            .gates()
            .iter()
            .filter(|g| matches!(g, crate::circuit::Gate::Cnot { .. }))
            .count();
        assert_eq!(cnots, 6);
    }

    #[test]
    fn vqls_3q_3layers_9params() {
        let c = build_ansatz(AnsatzFamily::VqlsRyCz, 3, 3).unwrap();
        assert_eq!(c.n_params(), 9);
    }

    #[test]
    fn qdrl_2q_counts() {
        let c = build_ansatz(AnsatzFamily::Qdrl, 2, 1).unwrap();
        assert_eq!(c.n_params(), 2 * 2 + 3 * 2);
        assert!(c.validate().is_ok());
    }

    #[test]
    fn single_qubit_single_layer_is_one_ry() {
        let c = build_ansatz(AnsatzFamily::LinearEntangled, 1, 1).unwrap();
        assert_eq!(c.gates().len(), 1);
        assert!(matches!(c.gates()[0], crate::circuit::Gate::Ry { .. }));
    }

    #[test]
    fn unsupported_combination() {
        assert!(build_ansatz(AnsatzFamily::Qdrl, 1, 1).is_err());
        assert!(build_ansatz(AnsatzFamily::LinearEntangled, 4, 0).is_err());
    }
}
