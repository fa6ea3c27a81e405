//! Measurement specifications and symbolic extractors.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::circuit::{Circuit, InputSpec};
use super::symstate::{run_symbolic, SymState};
use crate::error::{Error, Result};
use crate::expr::{Coeff, Expr};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PauliOp {
    I,
    X,
    Y,
    Z,
}

/// Tensor product of I/X/Y/Z over n qubits, qubit 1 first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PauliString(Vec<PauliOp>);

impl PauliString {
    pub fn parse(s: &str, n_qubits: u32) -> Result<Self> {
        if s.len() != n_qubits as usize {
            return Err(Error::MalformedPauli(s.to_string(), n_qubits));
        }
        let mut ops = Vec::with_capacity(s.len());
        for ch in s.chars() {
            ops.push(match ch {
                'I' => PauliOp::I,
                'X' => PauliOp::X,
                'Y' => PauliOp::Y,
                'Z' => PauliOp::Z,
                _ => return Err(Error::MalformedPauli(s.to_string(), n_qubits)),
            });
        }
        Ok(PauliString(ops))
    }

    pub fn identity(n_qubits: u32) -> Self {
        PauliString(vec![PauliOp::I; n_qubits as usize])
    }

    pub fn ops(&self) -> &[PauliOp] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|p| *p == PauliOp::I)
    }

    /// Basis-flip mask: X and Y factors flip their qubit's bit.
    pub fn x_mask(&self, c: &Circuit) -> usize {
        let mut m = 0;
        for (k, p) in self.0.iter().enumerate() {
            if matches!(p, PauliOp::X | PauliOp::Y) {
                m |= c.mask(k as u32 + 1);
            }
        }
        m
    }

    /// Exact phase of P|b>: product of per-qubit factors
    /// (Y|0> = i|1>, Y|1> = -i|0>, Z|1> = -|1>).
    pub fn phase(&self, c: &Circuit, b: usize) -> Coeff {
        let mut acc = Coeff::one();
        for (k, p) in self.0.iter().enumerate() {
            let bit = c.bit(b, k as u32 + 1);
            match p {
                PauliOp::I | PauliOp::X => {}
                PauliOp::Y => {
                    acc = if bit == 0 {
                        &acc * &Coeff::i()
                    } else {
                        &acc * &-&Coeff::i()
                    };
                }
                PauliOp::Z => {
                    if bit == 1 {
                        acc = -&acc;
                    }
                }
            }
        }
        acc
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.0 {
            write!(f, "{}", match p {
                PauliOp::I => 'I',
                PauliOp::X => 'X',
                PauliOp::Y => 'Y',
                PauliOp::Z => 'Z',
            })?;
        }
        Ok(())
    }
}

/// Which scalar to extract from a circuit.
#[derive(Clone, Debug)]
pub enum MeasurementSpec {
    /// Probability that `qubit` measures 0.
    ProbZero { qubit: u32 },
    /// Amplitude of |0^n>.
    Amp0n,
    /// <psi| P |psi> for a Pauli string P (real for Hermitian P).
    PauliTransition { pauli: PauliString },
    /// |<0^n| other^dagger self |0^n>|^2 (quantum kernel entry).
    KernelEntry { other: Circuit },
}

impl MeasurementSpec {
    pub fn prob_zero(qubit: u32) -> Self {
        MeasurementSpec::ProbZero { qubit }
    }

    pub fn pauli(s: &str, n_qubits: u32) -> Result<Self> {
        Ok(MeasurementSpec::PauliTransition {
            pauli: PauliString::parse(s, n_qubits)?,
        })
    }

    /// Whether the extracted scalar is guaranteed real.
    pub fn is_real(&self) -> bool {
        !matches!(self, MeasurementSpec::Amp0n)
    }

    pub fn validate(&self, c: &Circuit) -> Result<()> {
        match self {
            MeasurementSpec::ProbZero { qubit } => {
                if *qubit == 0 || *qubit > c.n_qubits() {
                    return Err(Error::QubitOutOfRange { qubit: *qubit, n: c.n_qubits() });
                }
            }
            MeasurementSpec::Amp0n => {}
            MeasurementSpec::PauliTransition { pauli } => {
                if pauli.len() != c.n_qubits() as usize {
                    return Err(Error::MalformedPauli(pauli.to_string(), c.n_qubits()));
                }
            }
            MeasurementSpec::KernelEntry { other } => {
                if other.n_qubits() != c.n_qubits() {
                    return Err(Error::KernelQubitMismatch(c.n_qubits(), other.n_qubits()));
                }
                if !matches!(c.input(), InputSpec::Zeros) || !matches!(other.input(), InputSpec::Zeros) {
                    return Err(Error::KernelInputNotZeros);
                }
            }
        }
        Ok(())
    }

    /// Short identifier for report rows.
    pub fn label(&self) -> String {
        match self {
            MeasurementSpec::ProbZero { qubit } => format!("prob_zero(q{qubit})"),
            MeasurementSpec::Amp0n => "amp_zero".to_string(),
            MeasurementSpec::PauliTransition { pauli } => format!("pauli({pauli})"),
            MeasurementSpec::KernelEntry { .. } => "kernel".to_string(),
        }
    }
}

/// Extract the measurement expression of `spec` from an already-simulated state.
pub fn extract_state(state: &SymState, c: &Circuit, spec: &MeasurementSpec) -> Result<Expr> {
    spec.validate(c)?;
    match spec {
        MeasurementSpec::ProbZero { qubit } => {
            let mask = c.mask(*qubit);
            let mut acc = Expr::zero();
            for (idx, amp) in state.amps().iter().enumerate() {
                if idx & mask == 0 {
                    acc.absorb(amp * &amp.conj());
                }
            }
            Ok(acc)
        }
        MeasurementSpec::Amp0n => Ok(state.amp(0).clone()),
        MeasurementSpec::PauliTransition { pauli } => {
            let xmask = pauli.x_mask(c);
            let mut acc = Expr::zero();
            for (b, amp) in state.amps().iter().enumerate() {
                if amp.is_zero() {
                    continue;
                }
                // (P psi)_{b ^ xmask} = phase(b) * psi_b
                let bra = state.amp(b ^ xmask).conj();
                acc.absorb((&bra * amp).scale(&pauli.phase(c, b)));
            }
            Ok(acc)
        }
        MeasurementSpec::KernelEntry { other } => {
            let composite = c.compose(&other.dagger())?;
            let amp0 = run_symbolic(&composite)?.amp(0).clone();
            Ok(&amp0 * &amp0.conj())
        }
    }
}

/// Run `c` symbolically and extract `spec`.
pub fn extract(c: &Circuit, spec: &MeasurementSpec) -> Result<Expr> {
    spec.validate(c)?;
    let state = run_symbolic(c)?;
    extract_state(&state, c, spec)
}

/// Amplitude of |0^n> for the composite kernel circuit, without squaring:
/// the kernel value is |amp|^2 taken after numeric evaluation. This is the
/// feasible symbolic route at 4+ qubits, where expanding the squared modulus
/// is prohibitive.
pub fn kernel_amplitude(c: &Circuit, other: &Circuit) -> Result<Expr> {
    MeasurementSpec::KernelEntry { other: other.clone() }.validate(c)?;
    let composite = c.compose(&other.dagger())?;
    Ok(run_symbolic(&composite)?.amp(0).clone())
}

// --- JSON form ---------------------------------------------------------------

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum SpecJson {
    ProbZero { qubit: u32 },
    AmpZero,
    Pauli { string: String },
    Kernel { other: serde_json::Value },
}

impl MeasurementSpec {
    pub fn from_json_str(s: &str, n_qubits: u32) -> Result<Self> {
        let j: SpecJson = serde_json::from_str(s)?;
        Ok(match j {
            SpecJson::ProbZero { qubit } => MeasurementSpec::ProbZero { qubit },
            SpecJson::AmpZero => MeasurementSpec::Amp0n,
            SpecJson::Pauli { string } => MeasurementSpec::PauliTransition {
                pauli: PauliString::parse(&string, n_qubits)?,
            },
            SpecJson::Kernel { other } => MeasurementSpec::KernelEntry {
                other: Circuit::from_json_str(&other.to_string())?,
            },
        })
    }

    pub fn to_json_string(&self) -> String {
        let j = match self {
            MeasurementSpec::ProbZero { qubit } => SpecJson::ProbZero { qubit: *qubit },
            MeasurementSpec::Amp0n => SpecJson::AmpZero,
            MeasurementSpec::PauliTransition { pauli } => SpecJson::Pauli { string: pauli.to_string() },
            MeasurementSpec::KernelEntry { other } => SpecJson::Kernel {
                other: serde_json::from_str(&other.to_json_string()).expect("circuit json"),
            },
        };
        serde_json::to_string(&j).expect("spec json")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::Sym;

    #[test]
    fn prob_zero_of_cnot_target() {
        // CNOT(1->2) on separable input: prob(q2 = 0) = a1^2 a2^2 + b1^2 b2^2
        let c = Circuit::new(2).separable().cnot(1, 2);
        let e = extract(&c, &MeasurementSpec::prob_zero(2)).unwrap();
        let expected = &(&Expr::sym(Sym::a(1)).pow(2) * &Expr::sym(Sym::a(2)).pow(2))
            + &(&Expr::sym(Sym::b(1)).pow(2) * &Expr::sym(Sym::b(2)).pow(2));
        assert_eq!(e, expected);
    }

    #[test]
    fn pauli_expectation_is_real() {
        let c = Circuit::new(2).h(1).rz(1, "t0").ry(2, "t1").cnot(1, 2);
        for p in ["XI", "YZ", "ZZ", "XY"] {
            let e = extract(&c, &MeasurementSpec::pauli(p, 2).unwrap()).unwrap();
            assert!(e.imag_part().is_zero(), "imag part of <{p}> nonzero: {e}");
        }
    }

    #[test]
    fn z_on_zero_state() {
        let c = Circuit::new(1);
        let e = extract(&c, &MeasurementSpec::pauli("Z", 1).unwrap()).unwrap();
        assert_eq!(e, Expr::one());
    }

    #[test]
    fn x_after_hadamard() {
        let c = Circuit::new(1).h(1);
        let e = extract(&c, &MeasurementSpec::pauli("X", 1).unwrap()).unwrap();
        assert_eq!(e, Expr::one());
    }

    #[test]
    fn kernel_of_identical_circuits_is_one() {
        let c = Circuit::new(2).ry(1, std::f64::consts::FRAC_PI_2).cnot(1, 2);
        let e = extract(&c, &MeasurementSpec::KernelEntry { other: c.clone() }).unwrap();
        assert_eq!(e, Expr::one());
    }

    #[test]
    fn malformed_pauli_rejected() {
        assert!(PauliString::parse("IZQ", 3).is_err());
        assert!(PauliString::parse("IZ", 3).is_err());
    }

    #[test]
    fn spec_json_round_trip() {
        let spec = MeasurementSpec::pauli("IZ", 2).unwrap();
        let s = spec.to_json_string();
        let parsed = MeasurementSpec::from_json_str(&s, 2).unwrap();
        assert!(matches!(parsed, MeasurementSpec::PauliTransition { .. }));
        let s2 = r#"{"kind":"prob_zero","qubit":1}"#;
        assert!(matches!(
            MeasurementSpec::from_json_str(s2, 2).unwrap(),
            MeasurementSpec::ProbZero { qubit: 1 }
        ));
    }
}
