//! Pauli-decomposed Hamiltonians and symbolic expectation pipelines.
//!
//! An n-qubit Hamiltonian is a real linear combination of Pauli strings.
//! The quantum side produces one expression <0^n|U^dag P U|0^n> per string;
//! the linear combination of coefficients is assembled classically.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::circuit::{extract_state, run_symbolic, Circuit, MeasurementSpec, PauliString};
use crate::error::{Error, Result};
use crate::expr::{eval_numeric, Bindings, Expr};

#[derive(Clone, Debug)]
pub struct Hamiltonian {
    n_qubits: u32,
    terms: Vec<(f64, PauliString)>,
}

impl Hamiltonian {
    pub fn new(n_qubits: u32, terms: Vec<(f64, PauliString)>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::EmptyHamiltonian);
        }
        for (c, p) in &terms {
            if !c.is_finite() {
                return Err(Error::NonFiniteCoefficient(p.to_string()));
            }
            if p.len() != n_qubits as usize {
                return Err(Error::MalformedPauli(p.to_string(), n_qubits));
            }
        }
        Ok(Hamiltonian { n_qubits, terms })
    }

    /// Text format: one `coeff PAULISTRING` per line, e.g. `0.45 III`.
    /// Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut terms = Vec::new();
        let mut n_qubits = None;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let coeff: f64 = it
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::ExprJson(format!("bad Hamiltonian line `{line}`")))?;
            let pauli = it
                .next()
                .ok_or_else(|| Error::ExprJson(format!("bad Hamiltonian line `{line}`")))?;
            let n = *n_qubits.get_or_insert(pauli.len() as u32);
            terms.push((coeff, PauliString::parse(pauli, n)?));
        }
        Hamiltonian::new(n_qubits.ok_or(Error::EmptyHamiltonian)?, terms)
    }

    pub fn to_text(&self) -> String {
        self.terms
            .iter()
            .map(|(c, p)| format!("{c} {p}"))
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn n_qubits(&self) -> u32 {
        self.n_qubits
    }

    pub fn terms(&self) -> &[(f64, PauliString)] {
        &self.terms
    }
}

/// Per-term symbolic expectation expressions for the ansatz circuit `u`.
/// The state is simulated once; term extraction runs in parallel.
pub fn hamiltonian_expectation(h: &Hamiltonian, u: &Circuit) -> Result<Vec<(PauliString, Expr)>> {
    if h.n_qubits() != u.n_qubits() {
        return Err(Error::MalformedPauli(
            h.terms()[0].1.to_string(),
            u.n_qubits(),
        ));
    }
    let state = run_symbolic(u)?;
    h.terms()
        .par_iter()
        .map(|(_, p)| {
            let spec = MeasurementSpec::PauliTransition { pauli: p.clone() };
            Ok((p.clone(), extract_state(&state, u, &spec)?))
        })
        .collect()
}

/// Classical assembly: sum of coeff * Re(term value) at a binding.
pub fn expectation_numeric(
    h: &Hamiltonian,
    term_exprs: &[(PauliString, Expr)],
    bindings: &Bindings,
) -> Result<f64> {
    let mut acc = 0.0;
    for ((c, _), (_, e)) in h.terms().iter().zip(term_exprs) {
        let v: Complex64 = eval_numeric(e, bindings)?;
        acc += c * v.re;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{oracle_numeric, OracleInput};
    use crate::vqa::ansatz::{build_ansatz, AnsatzFamily};

    #[test]
    fn parse_round_trip() {
        let h = Hamiltonian::parse("0.45 III\n0.55 IIZ\n# comment\n\n-0.2 XYZ").unwrap();
        assert_eq!(h.terms().len(), 3);
        assert_eq!(h.n_qubits(), 3);
        let again = Hamiltonian::parse(&h.to_text()).unwrap();
        assert_eq!(again.terms().len(), 3);
        assert!(Hamiltonian::parse("").is_err());
        assert!(Hamiltonian::parse("0.5 IQZ").is_err());
    }

    #[test]
    fn z_on_zeros_is_one() {
        let h = Hamiltonian::parse("1.0 Z").unwrap();
        let u = Circuit::new(1);
        let terms = hamiltonian_expectation(&h, &u).unwrap();
        assert_eq!(terms[0].1, Expr::one());
    }

    #[test]
    fn x_after_hadamard_is_one() {
        let h = Hamiltonian::parse("1.0 X").unwrap();
        let u = Circuit::new(1).h(1);
        let terms = hamiltonian_expectation(&h, &u).unwrap();
        assert_eq!(terms[0].1, Expr::one());
    }

    #[test]
    fn symbolic_matches_oracle_and_is_linear() {
        let u = build_ansatz(AnsatzFamily::LinearEntangled, 4, 2).unwrap();
        let h = Hamiltonian::parse("0.7 IIZI\n-0.3 ZIIX\n0.1 IYYI").unwrap();
        let term_exprs = hamiltonian_expectation(&h, &u).unwrap();
        for trial in 0..20 {
            let theta: Vec<f64> = (0..u.n_params())
                .map(|k| 0.31 + 0.79 * k as f64 + 0.13 * trial as f64)
                .collect();
            let mut b = Bindings::new();
            for (k, t) in theta.iter().enumerate() {
                b.set_angle(k as u32, *t);
            }
            let sym = expectation_numeric(&h, &term_exprs, &b).unwrap();
            let mut oracle = 0.0;
            for (c, p) in h.terms() {
                let spec = MeasurementSpec::PauliTransition { pauli: p.clone() };
                oracle += c * oracle_numeric(&u, &spec, &theta, &OracleInput::FromCircuit)
                    .unwrap()
                    .re;
            }
            assert!(
                (sym - oracle).abs() < 1e-9,
                "trial {trial}: symbolic {sym} vs oracle {oracle}"
            );
        }
    }
}
