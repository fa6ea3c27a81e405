//! Exact symbolic statevector simulation.
//!
//! Gates are applied as sparse column updates on the 2^n vector of amplitude
//! expressions; no 2^n x 2^n matrix is ever materialized. Symbolic runs are
//! capped at 12 qubits (expression growth).

use num_rational::BigRational;

use super::circuit::{Circuit, InputSpec};
use super::gate::{half_angle_exprs, single_qubit_matrix, Gate};
use crate::error::{Error, Result};
use crate::expr::{Coeff, Expr, Monomial, Sym};

pub const MAX_SYMBOLIC_QUBITS: u32 = 12;

/// Symbolic statevector: 2^n amplitude expressions, qubit 1 as MSB.
#[derive(Clone, Debug)]
pub struct SymState {
    n_qubits: u32,
    amps: Vec<Expr>,
}

impl SymState {
    pub fn n_qubits(&self) -> u32 {
        self.n_qubits
    }

    pub fn amps(&self) -> &[Expr] {
        &self.amps
    }

    pub fn amp(&self, idx: usize) -> &Expr {
        &self.amps[idx]
    }

    /// Sum of amp * conj(amp): symbolically reduces to 1 under the
    /// constraints for unitary circuits on normalized inputs.
    pub fn norm_expr(&self) -> Expr {
        let mut acc = Expr::zero();
        for a in &self.amps {
            acc.absorb(a * &a.conj());
        }
        acc
    }
}

fn initial_state(c: &Circuit) -> Result<Vec<Expr>> {
    let dim = 1usize << c.n_qubits();
    let mut amps = vec![Expr::zero(); dim];
    match c.input() {
        InputSpec::Zeros => {
            amps[0] = Expr::one();
        }
        InputSpec::Separable => {
            for (idx, amp) in amps.iter_mut().enumerate() {
                let pairs = (1..=c.n_qubits()).map(|q| {
                    let s = if c.bit(idx, q) == 0 { Sym::a(q) } else { Sym::b(q) };
                    (s, 1u32)
                });
                *amp = Expr::monomial(Monomial::from_pairs(pairs), Coeff::one());
            }
        }
        InputSpec::Explicit(v) => {
            if v.len() != dim {
                return Err(Error::InputDimension { got: v.len(), expected: dim });
            }
            for (amp, z) in amps.iter_mut().zip(v) {
                // Every f64 is an exact rational; the conversion is lossless.
                let re = BigRational::from_float(z.re)
                    .ok_or(Error::NonExactAngle(z.re))?;
                let im = BigRational::from_float(z.im)
                    .ok_or(Error::NonExactAngle(z.im))?;
                *amp = Expr::from_coeff(Coeff::new(
                    re,
                    im,
                    BigRational::new(0.into(), 1.into()),
                    BigRational::new(0.into(), 1.into()),
                ));
            }
        }
    }
    Ok(amps)
}

/// Apply a 2x2 matrix to the target qubit's amplitude pairs. `control`
/// restricts the update to indices where the control bit is 1. Pair updates
/// are independent and run in parallel once the state is large enough for
/// the fork overhead to pay.
fn apply_single(
    amps: &mut [Expr],
    c: &Circuit,
    target: u32,
    m: &[Expr; 4],
    control: Option<u32>,
) {
    use rayon::prelude::*;
    let tmask = c.mask(target);
    let idxs: Vec<usize> = (0..amps.len())
        .filter(|&idx| {
            idx & tmask == 0 && control.map_or(true, |ctrl| c.bit(idx, ctrl) == 1)
        })
        .collect();
    let compute = |idx: usize| {
        let j = idx | tmask;
        let a0 = &amps[idx];
        let a1 = &amps[j];
        let n0 = (&m[0] * a0) + (&m[1] * a1);
        let n1 = (&m[2] * a0) + (&m[3] * a1);
        (idx, n0, n1)
    };
    let work: usize = idxs
        .iter()
        .map(|&i| amps[i].n_terms() + amps[i | tmask].n_terms())
        .sum();
    let updates: Vec<(usize, Expr, Expr)> = if work < 4096 {
        idxs.iter().map(|&i| compute(i)).collect()
    } else {
        idxs.par_iter().map(|&i| compute(i)).collect()
    };
    for (idx, n0, n1) in updates {
        let j = idx | tmask;
        amps[idx] = n0;
        amps[j] = n1;
    }
}

/// Run the circuit symbolically.
pub fn run_symbolic(c: &Circuit) -> Result<SymState> {
    c.validate()?;
    if c.n_qubits() > MAX_SYMBOLIC_QUBITS {
        return Err(Error::QubitOutOfRange {
            qubit: c.n_qubits(),
            n: MAX_SYMBOLIC_QUBITS,
        });
    }
    let mut amps = initial_state(c)?;
    for g in c.gates() {
        match *g {
            Gate::Cnot { control, target } => {
                let cmask = c.mask(control);
                let tmask = c.mask(target);
                for idx in 0..amps.len() {
                    if idx & cmask != 0 && idx & tmask == 0 {
                        amps.swap(idx, idx | tmask);
                    }
                }
            }
            Gate::Cz { a, b } => {
                let mask = c.mask(a) | c.mask(b);
                for (idx, amp) in amps.iter_mut().enumerate() {
                    if idx & mask == mask {
                        *amp = -&*amp;
                    }
                }
            }
            Gate::CRy { control, target, angle, dag } => {
                let (cos, sin) = half_angle_exprs(angle, dag)?;
                let m = [cos.clone(), -&sin, sin, cos];
                apply_single(&mut amps, c, target, &m, Some(control));
            }
            ref g => {
                let m = single_qubit_matrix(g)?.expect("single-qubit gate");
                let target = match *g {
                    Gate::H(q) | Gate::X(q) | Gate::Y(q) | Gate::Z(q) | Gate::S(q) | Gate::Sdg(q) => q,
                    Gate::Rx { target, .. } | Gate::Ry { target, .. } | Gate::Rz { target, .. } => target,
                    _ => unreachable!(),
                };
                apply_single(&mut amps, c, target, &m, None);
            }
        }
    }
    Ok(SymState {
        n_qubits: c.n_qubits(),
        amps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplify::{constraint_normal_form, pythagorean_reduce, ReduceDirection};

    #[test]
    fn empty_circuit_on_zeros() {
        let st = run_symbolic(&Circuit::new(2)).unwrap();
        assert_eq!(st.amp(0), &Expr::one());
        for idx in 1..4 {
            assert!(st.amp(idx).is_zero());
        }
    }

    #[test]
    fn hadamard_on_zero() {
        let st = run_symbolic(&Circuit::new(1).h(1)).unwrap();
        let h = Expr::from_coeff(Coeff::inv_sqrt2());
        assert_eq!(st.amp(0), &h);
        assert_eq!(st.amp(1), &h);
    }

    #[test]
    fn cnot_on_separable() {
        // amplitude of |11> after CNOT(1->2) is b1 * a2
        let st = run_symbolic(&Circuit::new(2).separable().cnot(1, 2)).unwrap();
        let expected = &Expr::sym(Sym::b(1)) * &Expr::sym(Sym::a(2));
        assert_eq!(st.amp(0b11), &expected);
    }

    #[test]
    fn norm_is_one_symbolically() {
        let c = Circuit::new(2)
            .separable()
            .h(1)
            .ry(2, "t0")
            .cnot(1, 2)
            .rz(1, "t1")
            .cz(1, 2);
        let st = run_symbolic(&c).unwrap();
        let norm = pythagorean_reduce(&st.norm_expr(), ReduceDirection::EliminateSin);
        assert_eq!(norm, Expr::one());
    }

    #[test]
    fn explicit_numeric_input_is_exact() {
        use num_complex::Complex64;
        let v = vec![
            Complex64::new(0.5, 0.0),
            Complex64::new(0.0, 0.5),
            Complex64::new(-0.5, 0.0),
            Complex64::new(0.0, -0.5),
        ];
        let c = Circuit::new(2).with_input(InputSpec::Explicit(v)).h(1).cnot(1, 2);
        let st = run_symbolic(&c).unwrap();
        let norm = constraint_normal_form(&st.norm_expr());
        assert_eq!(norm, Expr::one());
    }

    #[test]
    fn qubit_cap() {
        assert!(run_symbolic(&Circuit::new(13)).is_err());
    }
}
