//! Independent dense numeric statevector oracle.
//!
//! This is the brute-force reference the symbolic pipeline is checked
//! against: complex-double simulation with its own gate tables (standard
//! trig, no shared code with the exact symbolic path), capped at 24 qubits.

use num_complex::Complex64;

use super::circuit::{Circuit, InputSpec};
use super::gate::{Angle, Gate};
use super::measure::{MeasurementSpec, PauliOp, PauliString};
use crate::error::{Error, Result};

pub const MAX_ORACLE_QUBITS: u32 = 24;

/// Numeric initial state for oracle runs.
#[derive(Clone, Debug)]
pub enum OracleInput {
    /// Take the circuit's own input; `Separable` needs the angles below.
    FromCircuit,
    /// Separable input with a_i = cos(u_i), b_i = sin(u_i) per qubit.
    SeparableAngles(Vec<f64>),
    /// Explicit statevector.
    State(Vec<Complex64>),
}

fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn initial_state(c: &Circuit, input: &OracleInput) -> Result<Vec<Complex64>> {
    let dim = 1usize << c.n_qubits();
    Ok(match input {
        OracleInput::FromCircuit => match c.input() {
            InputSpec::Zeros => {
                let mut v = vec![c64(0.0, 0.0); dim];
                v[0] = c64(1.0, 0.0);
                v
            }
            InputSpec::Explicit(v) => {
                if v.len() != dim {
                    return Err(Error::InputDimension { got: v.len(), expected: dim });
                }
                v.clone()
            }
            InputSpec::Separable => {
                return Err(Error::InputDimension { got: 0, expected: dim });
            }
        },
        OracleInput::SeparableAngles(us) => {
            if us.len() != c.n_qubits() as usize {
                return Err(Error::InputDimension { got: us.len(), expected: c.n_qubits() as usize });
            }
            let mut v = vec![c64(1.0, 0.0); dim];
            for (idx, amp) in v.iter_mut().enumerate() {
                let mut p = 1.0;
                for q in 1..=c.n_qubits() {
                    let u = us[(q - 1) as usize];
                    p *= if c.bit(idx, q) == 0 { u.cos() } else { u.sin() };
                }
                *amp = c64(p, 0.0);
            }
            v
        }
        OracleInput::State(v) => {
            if v.len() != dim {
                return Err(Error::InputDimension { got: v.len(), expected: dim });
            }
            v.clone()
        }
    })
}

fn angle_value(angle: Angle, dag: bool, theta: &[f64]) -> Result<f64> {
    let t = match angle {
        Angle::Param(k) => *theta
            .get(k as usize)
            .ok_or_else(|| Error::UnboundParameter(format!("#{k}")))?,
        Angle::Const(v) => v,
    };
    Ok(if dag { -t } else { t })
}

fn apply_matrix(v: &mut [Complex64], c: &Circuit, target: u32, m: [Complex64; 4], control: Option<u32>) {
    let tmask = c.mask(target);
    for idx in 0..v.len() {
        if idx & tmask != 0 {
            continue;
        }
        if let Some(ctrl) = control {
            if c.bit(idx, ctrl) == 0 {
                continue;
            }
        }
        let j = idx | tmask;
        let a0 = v[idx];
        let a1 = v[j];
        v[idx] = m[0] * a0 + m[1] * a1;
        v[j] = m[2] * a0 + m[3] * a1;
    }
}

/// Dense statevector after running `c` at parameter values `theta`.
pub fn oracle_statevector(c: &Circuit, theta: &[f64], input: &OracleInput) -> Result<Vec<Complex64>> {
    c.validate()?;
    if c.n_qubits() > MAX_ORACLE_QUBITS {
        return Err(Error::QubitOutOfRange { qubit: c.n_qubits(), n: MAX_ORACLE_QUBITS });
    }
    let mut v = initial_state(c, input)?;
    let isq = std::f64::consts::FRAC_1_SQRT_2;
    for g in c.gates() {
        match *g {
            Gate::H(q) => apply_matrix(
                &mut v,
                c,
                q,
                [c64(isq, 0.0), c64(isq, 0.0), c64(isq, 0.0), c64(-isq, 0.0)],
                None,
            ),
            Gate::X(q) => apply_matrix(&mut v, c, q, [c64(0.0, 0.0), c64(1.0, 0.0), c64(1.0, 0.0), c64(0.0, 0.0)], None),
            Gate::Y(q) => apply_matrix(&mut v, c, q, [c64(0.0, 0.0), c64(0.0, -1.0), c64(0.0, 1.0), c64(0.0, 0.0)], None),
            Gate::Z(q) => apply_matrix(&mut v, c, q, [c64(1.0, 0.0), c64(0.0, 0.0), c64(0.0, 0.0), c64(-1.0, 0.0)], None),
            Gate::S(q) => apply_matrix(&mut v, c, q, [c64(1.0, 0.0), c64(0.0, 0.0), c64(0.0, 0.0), c64(0.0, 1.0)], None),
            Gate::Sdg(q) => apply_matrix(&mut v, c, q, [c64(1.0, 0.0), c64(0.0, 0.0), c64(0.0, 0.0), c64(0.0, -1.0)], None),
            Gate::Cnot { control, target } => {
                let cmask = c.mask(control);
                let tmask = c.mask(target);
                for idx in 0..v.len() {
                    if idx & cmask != 0 && idx & tmask == 0 {
                        v.swap(idx, idx | tmask);
                    }
                }
            }
            Gate::Cz { a, b } => {
                let mask = c.mask(a) | c.mask(b);
                for (idx, amp) in v.iter_mut().enumerate() {
                    if idx & mask == mask {
                        *amp = -*amp;
                    }
                }
            }
            Gate::Rx { target, angle, dag } => {
                let h = angle_value(angle, dag, theta)? / 2.0;
                apply_matrix(
                    &mut v,
                    c,
                    target,
                    [c64(h.cos(), 0.0), c64(0.0, -h.sin()), c64(0.0, -h.sin()), c64(h.cos(), 0.0)],
                    None,
                )
            }
            Gate::Ry { target, angle, dag } => {
                let h = angle_value(angle, dag, theta)? / 2.0;
                apply_matrix(
                    &mut v,
                    c,
                    target,
                    [c64(h.cos(), 0.0), c64(-h.sin(), 0.0), c64(h.sin(), 0.0), c64(h.cos(), 0.0)],
                    None,
                )
            }
            Gate::Rz { target, angle, dag } => {
                let h = angle_value(angle, dag, theta)? / 2.0;
                apply_matrix(
                    &mut v,
                    c,
                    target,
                    [c64(h.cos(), -h.sin()), c64(0.0, 0.0), c64(0.0, 0.0), c64(h.cos(), h.sin())],
                    None,
                )
            }
            Gate::CRy { control, target, angle, dag } => {
                let h = angle_value(angle, dag, theta)? / 2.0;
                apply_matrix(
                    &mut v,
                    c,
                    target,
                    [c64(h.cos(), 0.0), c64(-h.sin(), 0.0), c64(h.sin(), 0.0), c64(h.cos(), 0.0)],
                    Some(control),
                )
            }
        }
    }
    Ok(v)
}

/// Apply a Pauli string numerically.
pub fn apply_pauli(v: &[Complex64], c: &Circuit, p: &PauliString) -> Vec<Complex64> {
    let xmask = p.x_mask(c);
    let mut out = vec![c64(0.0, 0.0); v.len()];
    for (b, amp) in v.iter().enumerate() {
        let mut phase = c64(1.0, 0.0);
        for (k, op) in p.ops().iter().enumerate() {
            let bit = c.bit(b, k as u32 + 1);
            match op {
                PauliOp::I | PauliOp::X => {}
                PauliOp::Y => phase *= if bit == 0 { c64(0.0, 1.0) } else { c64(0.0, -1.0) },
                PauliOp::Z => {
                    if bit == 1 {
                        phase = -phase;
                    }
                }
            }
        }
        out[b ^ xmask] += phase * amp;
    }
    out
}

pub fn inner_product(bra: &[Complex64], ket: &[Complex64]) -> Complex64 {
    bra.iter().zip(ket).map(|(b, k)| b.conj() * k).sum()
}

/// Dense numeric counterpart of the symbolic extractors, entirely
/// independent of the expression engine.
pub fn oracle_numeric(
    c: &Circuit,
    spec: &MeasurementSpec,
    theta: &[f64],
    input: &OracleInput,
) -> Result<Complex64> {
    spec.validate(c)?;
    match spec {
        MeasurementSpec::ProbZero { qubit } => {
            let v = oracle_statevector(c, theta, input)?;
            let mask = c.mask(*qubit);
            let p: f64 = v
                .iter()
                .enumerate()
                .filter(|(idx, _)| idx & mask == 0)
                .map(|(_, a)| a.norm_sqr())
                .sum();
            Ok(c64(p, 0.0))
        }
        MeasurementSpec::Amp0n => Ok(oracle_statevector(c, theta, input)?[0]),
        MeasurementSpec::PauliTransition { pauli } => {
            let v = oracle_statevector(c, theta, input)?;
            let pv = apply_pauli(&v, c, pauli);
            Ok(inner_product(&v, &pv))
        }
        MeasurementSpec::KernelEntry { other } => {
            // <0|U_other^dag U_self|0> = <sv_other, sv_self>
            let sv_self = oracle_statevector(c, theta, input)?;
            let sv_other = oracle_statevector(other, theta, &OracleInput::FromCircuit)?;
            let overlap = inner_product(&sv_other, &sv_self);
            Ok(c64(overlap.norm_sqr(), 0.0))
        }
    }
}

pub fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prob_zero_of_empty_circuit() {
        let c = Circuit::new(3);
        let p = oracle_numeric(&c, &MeasurementSpec::prob_zero(1), &[], &OracleInput::FromCircuit).unwrap();
        assert_eq!(p.re, 1.0);
    }

    #[test]
    fn unitarity_preserved() {
        let c = Circuit::new(3)
            .h(1)
            .ry(2, "t0")
            .rz(3, "t1")
            .cnot(1, 3)
            .cz(2, 3)
            .cry(1, 2, "t2")
            .s(1)
            .y(2);
        let v = oracle_statevector(&c, &[0.37, 1.21, -0.64], &OracleInput::FromCircuit).unwrap();
        assert!((norm(&v) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn case6_block_has_order_three() {
        // CNOT(1->2), CNOT(2->1) repeated 3 times is the identity permutation.
        let mut c = Circuit::new(3).with_input(InputSpec::Explicit(random_state(3)));
        for _ in 0..3 {
            c = c.cnot(1, 2).cnot(2, 1);
        }
        let v = oracle_statevector(&c, &[], &OracleInput::FromCircuit).unwrap();
        let init = random_state(3);
        for (a, b) in v.iter().zip(&init) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    fn random_state(n: u32) -> Vec<Complex64> {
        // Deterministic pseudo-random normalized state.
        let dim = 1usize << n;
        let mut v: Vec<Complex64> = (0..dim)
            .map(|k| {
                let x = ((k * 2654435761 + 12345) % 1000) as f64 / 1000.0 - 0.5;
                let y = ((k * 40503 + 977) % 1000) as f64 / 1000.0 - 0.5;
                c64(x, y)
            })
            .collect();
        let n = norm(&v);
        for a in &mut v {
            *a /= n;
        }
        v
    }
}
