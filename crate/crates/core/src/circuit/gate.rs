//! Gate IR and exact symbolic gate matrices.
//!
//! The gate set is closed over the coefficient field: H, X, Y, Z, S, S†,
//! CNOT, CZ, Rx/Ry/Rz and controlled-Ry with symbolic angles. Rotations also
//! accept numeric angles when the half-angle cosine/sine is exactly
//! representable (multiples of pi/2), which is what the controlled-H
//! decomposition CNOT * CRy(pi/2) needs.

use crate::error::{Error, Result};
use crate::expr::{Coeff, Expr, Sym};

/// Rotation angle: a named circuit parameter (by table index) or a constant.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Angle {
    Param(u32),
    Const(f64),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Gate {
    H(u32),
    X(u32),
    Y(u32),
    Z(u32),
    S(u32),
    Sdg(u32),
    Cnot { control: u32, target: u32 },
    Cz { a: u32, b: u32 },
    Rx { target: u32, angle: Angle, dag: bool },
    Ry { target: u32, angle: Angle, dag: bool },
    Rz { target: u32, angle: Angle, dag: bool },
    CRy { control: u32, target: u32, angle: Angle, dag: bool },
}

impl Gate {
    pub fn validate(&self, n: u32) -> Result<()> {
        let check = |q: u32| {
            if q == 0 || q > n {
                Err(Error::QubitOutOfRange { qubit: q, n })
            } else {
                Ok(())
            }
        };
        match *self {
            Gate::H(q) | Gate::X(q) | Gate::Y(q) | Gate::Z(q) | Gate::S(q) | Gate::Sdg(q) => {
                check(q)
            }
            Gate::Rx { target, .. } | Gate::Ry { target, .. } | Gate::Rz { target, .. } => {
                check(target)
            }
            Gate::Cnot { control, target } | Gate::CRy { control, target, .. } => {
                check(control)?;
                check(target)?;
                if control == target {
                    return Err(Error::ControlEqualsTarget(control));
                }
                Ok(())
            }
            Gate::Cz { a, b } => {
                check(a)?;
                check(b)?;
                if a == b {
                    return Err(Error::ControlEqualsTarget(a));
                }
                Ok(())
            }
        }
    }

    /// Adjoint gate, staying inside the gate set.
    pub fn dagger(&self) -> Gate {
        match *self {
            Gate::S(q) => Gate::Sdg(q),
            Gate::Sdg(q) => Gate::S(q),
            Gate::Rx { target, angle, dag } => Gate::Rx { target, angle, dag: !dag },
            Gate::Ry { target, angle, dag } => Gate::Ry { target, angle, dag: !dag },
            Gate::Rz { target, angle, dag } => Gate::Rz { target, angle, dag: !dag },
            Gate::CRy { control, target, angle, dag } => Gate::CRy { control, target, angle, dag: !dag },
            g => g, // H, X, Y, Z, CNOT, CZ are self-adjoint
        }
    }

    /// Parameter index used by this gate, if any.
    pub fn param_index(&self) -> Option<u32> {
        match *self {
            Gate::Rx { angle, .. }
            | Gate::Ry { angle, .. }
            | Gate::Rz { angle, .. }
            | Gate::CRy { angle, .. } => match angle {
                Angle::Param(k) => Some(k),
                Angle::Const(_) => None,
            },
            _ => None,
        }
    }
}

/// Half-angle (cos, sin) pair of a rotation angle, as exact expressions.
/// Parameters map to the C(k)/S(k) symbol pair; constants must be multiples
/// of pi/2 so the half-angle trig lands in Q(sqrt2).
pub fn half_angle_exprs(angle: Angle, dag: bool) -> Result<(Expr, Expr)> {
    let (c, s) = match angle {
        Angle::Param(k) => (Expr::sym(Sym::c(k)), Expr::sym(Sym::s(k))),
        Angle::Const(theta) => {
            let (c, s) = exact_half_angle(theta)?;
            (Expr::from_coeff(c), Expr::from_coeff(s))
        }
    };
    // Adjoint of a rotation is the rotation by -theta: cos unchanged, sin negated.
    Ok(if dag { (c, -&s) } else { (c, s) })
}

/// cos(theta/2), sin(theta/2) for theta = k*pi/2, exactly.
pub fn exact_half_angle(theta: f64) -> Result<(Coeff, Coeff)> {
    let steps = theta / std::f64::consts::FRAC_PI_2;
    let k = steps.round();
    if (steps - k).abs() > 1e-9 || !k.is_finite() {
        return Err(Error::NonExactAngle(theta));
    }
    let k = ((k as i64) % 8 + 8) % 8;
    let h = Coeff::inv_sqrt2();
    let table = |k: i64| -> Coeff {
        // cos(k*pi/4)
        match k {
            0 => Coeff::one(),
            1 | 7 => h.clone(),
            2 | 6 => Coeff::zero(),
            3 | 5 => -&h,
            4 => Coeff::from_int(-1),
            _ => unreachable!(),
        }
    };
    let cos = table(k);
    let sin = table((k + 6) % 8); // sin(x) = cos(x - pi/2), i.e. two table steps back
    Ok((cos, sin))
}

/// Exact symbolic 2x2 matrix of a single-qubit gate, row-major
/// [[m00, m01], [m10, m11]]. Controlled gates are handled by the simulator.
pub fn single_qubit_matrix(g: &Gate) -> Result<Option<[Expr; 4]>> {
    let one = Expr::one;
    let zero = Expr::zero;
    let i = || Expr::from_coeff(Coeff::i());
    Ok(match *g {
        Gate::H(_) => {
            let h = Expr::from_coeff(Coeff::inv_sqrt2());
            Some([h.clone(), h.clone(), h.clone(), -&h])
        }
        Gate::X(_) => Some([zero(), one(), one(), zero()]),
        Gate::Y(_) => Some([zero(), -&i(), i(), zero()]),
        Gate::Z(_) => Some([one(), zero(), zero(), -&one()]),
        Gate::S(_) => Some([one(), zero(), zero(), i()]),
        Gate::Sdg(_) => Some([one(), zero(), zero(), -&i()]),
        Gate::Rx { angle, dag, .. } => {
            let (c, s) = half_angle_exprs(angle, dag)?;
            let mis = -&(&i() * &s);
            Some([c.clone(), mis.clone(), mis, c])
        }
        Gate::Ry { angle, dag, .. } => {
            let (c, s) = half_angle_exprs(angle, dag)?;
            Some([c.clone(), -&s, s, c])
        }
        Gate::Rz { angle, dag, .. } => {
            let (c, s) = half_angle_exprs(angle, dag)?;
            let is = &i() * &s;
            Some([&c - &is, zero(), zero(), &c + &is])
        }
        Gate::Cnot { .. } | Gate::Cz { .. } | Gate::CRy { .. } => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_angles() {
        let (c, s) = exact_half_angle(std::f64::consts::FRAC_PI_2).unwrap();
        assert_eq!(c, Coeff::inv_sqrt2());
        assert_eq!(s, Coeff::inv_sqrt2());
        let (c, s) = exact_half_angle(std::f64::consts::PI).unwrap();
        assert_eq!(c, Coeff::zero());
        assert_eq!(s, Coeff::one());
        let (c, s) = exact_half_angle(-std::f64::consts::FRAC_PI_2).unwrap();
        assert_eq!(c, Coeff::inv_sqrt2());
        assert_eq!(s, -&Coeff::inv_sqrt2());
        let (c, s) = exact_half_angle(0.0).unwrap();
        assert_eq!(c, Coeff::one());
        assert_eq!(s, Coeff::zero());
        assert!(exact_half_angle(0.7).is_err());
    }

    #[test]
    fn rotation_dagger_negates_sine() {
        let g = Gate::Ry { target: 1, angle: Angle::Param(0), dag: false };
        let m = single_qubit_matrix(&g).unwrap().unwrap();
        let md = single_qubit_matrix(&g.dagger()).unwrap().unwrap();
        assert_eq!(md[1], -&m[1]);
        assert_eq!(md[0], m[0]);
    }

    #[test]
    fn validation() {
        assert!(Gate::H(1).validate(2).is_ok());
        assert!(Gate::H(0).validate(2).is_err());
        assert!(Gate::H(3).validate(2).is_err());
        assert!(Gate::Cnot { control: 1, target: 1 }.validate(2).is_err());
    }
}
