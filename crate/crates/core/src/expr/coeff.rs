//! Exact coefficient field Q(i, sqrt2).
//!
//! Every amplitude coefficient reachable through the supported gate set
//! (H, X, Y, Z, S, CNOT, CZ, Rx, Ry, Rz, CRy with symbolic or k*pi/2 angles)
//! lives in the degree-4 extension Q(i, sqrt2). A `Coeff` stores the four
//! rational coordinates of p0 + p1*i + p2*sqrt2 + p3*i*sqrt2, so symbolic
//! phases never see floating point.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

/// Element of Q(i, sqrt2): `p0 + p1*i + p2*sqrt2 + p3*i*sqrt2`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coeff {
    pub p0: Rat,
    pub p1: Rat,
    pub p2: Rat,
    pub p3: Rat,
}

impl Coeff {
    pub fn new(p0: Rat, p1: Rat, p2: Rat, p3: Rat) -> Self {
        Coeff { p0, p1, p2, p3 }
    }

    pub fn zero() -> Self {
        Coeff::new(Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero())
    }

    pub fn one() -> Self {
        Coeff::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Coeff::new(Rat::from_integer(n.into()), Rat::zero(), Rat::zero(), Rat::zero())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Coeff::new(
            Rat::new(num.into(), den.into()),
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
        )
    }

    pub fn from_rat(r: Rat) -> Self {
        Coeff::new(r, Rat::zero(), Rat::zero(), Rat::zero())
    }

    pub fn i() -> Self {
        Coeff::new(Rat::zero(), Rat::one(), Rat::zero(), Rat::zero())
    }

    /// sqrt2 itself.
    pub fn sqrt2() -> Self {
        Coeff::new(Rat::zero(), Rat::zero(), Rat::one(), Rat::zero())
    }

    /// 1/sqrt2 = sqrt2/2, the Hadamard normalization.
    pub fn inv_sqrt2() -> Self {
        Coeff::new(Rat::zero(), Rat::zero(), Rat::new(1.into(), 2.into()), Rat::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.p0.is_zero() && self.p1.is_zero() && self.p2.is_zero() && self.p3.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.p0.is_one() && self.p1.is_zero() && self.p2.is_zero() && self.p3.is_zero()
    }

    pub fn is_minus_one(&self) -> bool {
        self.p1.is_zero()
            && self.p2.is_zero()
            && self.p3.is_zero()
            && self.p0 == -Rat::one()
    }

    /// True when the value lies in Q (no i, no sqrt2 component).
    pub fn is_rational(&self) -> bool {
        self.p1.is_zero() && self.p2.is_zero() && self.p3.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        if self.is_rational() {
            Some(&self.p0)
        } else {
            None
        }
    }

    /// True when the value is real: p1 = p3 = 0.
    pub fn is_real(&self) -> bool {
        self.p1.is_zero() && self.p3.is_zero()
    }

    /// Complex conjugate (i -> -i).
    pub fn conj(&self) -> Self {
        Coeff::new(self.p0.clone(), -self.p1.clone(), self.p2.clone(), -self.p3.clone())
    }

    /// Real part as an element of Q(sqrt2) embedded back in the field.
    pub fn real_part(&self) -> Self {
        Coeff::new(self.p0.clone(), Rat::zero(), self.p2.clone(), Rat::zero())
    }

    /// Imaginary part (a real field element): Im(c) = p1 + p3*sqrt2.
    pub fn imag_part(&self) -> Self {
        Coeff::new(self.p1.clone(), Rat::zero(), self.p3.clone(), Rat::zero())
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::CoeffDivByZero);
        }
        // View z = x + y*sqrt2 with x, y in Q(i). Then 1/z = (x - y*sqrt2) / (x^2 - 2 y^2),
        // and the denominator lies in Q(i) (nonzero since sqrt2 is irrational over Q(i)).
        let (xr, xi) = (self.p0.clone(), self.p1.clone());
        let (yr, yi) = (self.p2.clone(), self.p3.clone());
        // d = x^2 - 2 y^2 in Q(i)
        let two = Rat::from_integer(2.into());
        let dr = &xr * &xr - &xi * &xi - &two * (&yr * &yr - &yi * &yi);
        let di = &two * (&xr * &xi) - &two * &two * (&yr * &yi);
        // 1/d = conj(d)/|d|^2
        let dn = &dr * &dr + &di * &di;
        if dn.is_zero() {
            return Err(Error::CoeffDivByZero);
        }
        let ir = &dr / &dn;
        let ii = -&di / &dn;
        // (x - y*sqrt2) * (ir + ii*i), componentwise over {1, i, sqrt2, i*sqrt2}
        Ok(Coeff::new(
            &xr * &ir - &xi * &ii,
            &xr * &ii + &xi * &ir,
            -(&yr * &ir - &yi * &ii),
            -(&yr * &ii + &yi * &ir),
        ))
    }

    /// Square root within the field, when it exists for the supported shapes:
    /// nonnegative rationals of the form r^2 or 2 r^2, and their negatives
    /// (via i). Returns `None` when the root falls outside Q(i, sqrt2) or the
    /// shape is unsupported.
    pub fn sqrt(&self) -> Option<Self> {
        if !self.is_rational() {
            return None;
        }
        let q = &self.p0;
        if q.is_zero() {
            return Some(Coeff::zero());
        }
        if q.is_negative() {
            let r = Coeff::from_rat(-q.clone()).sqrt()?;
            return Some(&r * &Coeff::i());
        }
        if let Some(r) = rat_sqrt(q) {
            return Some(Coeff::from_rat(r));
        }
        // q = 2 r^2 => sqrt(q) = r*sqrt2
        let half = q / Rat::from_integer(2.into());
        if let Some(r) = rat_sqrt(&half) {
            return Some(Coeff::new(Rat::zero(), Rat::zero(), r, Rat::zero()));
        }
        None
    }

    /// Convert to a complex double. This is the single sanctioned exact->float step.
    pub fn to_complex(&self) -> Complex64 {
        let s = std::f64::consts::SQRT_2;
        let re = rat_to_f64(&self.p0) + s * rat_to_f64(&self.p2);
        let im = rat_to_f64(&self.p1) + s * rat_to_f64(&self.p3);
        Complex64::new(re, im)
    }

    /// Nonzero components as (rational, unit) pairs, unit in {"", "i", "s", "is"}.
    pub fn components(&self) -> Vec<(&Rat, CoeffUnit)> {
        let mut out = Vec::new();
        if !self.p0.is_zero() {
            out.push((&self.p0, CoeffUnit::One));
        }
        if !self.p1.is_zero() {
            out.push((&self.p1, CoeffUnit::I));
        }
        if !self.p2.is_zero() {
            out.push((&self.p2, CoeffUnit::Sqrt2));
        }
        if !self.p3.is_zero() {
            out.push((&self.p3, CoeffUnit::ISqrt2));
        }
        out
    }
}

/// Basis unit of one `Coeff` component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoeffUnit {
    One,
    I,
    Sqrt2,
    ISqrt2,
}

fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Fall back to separate conversion; only reachable for gigantic
        // numerators that never arise from the supported gate set.
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Exact rational square root, if the numerator and denominator are squares.
fn rat_sqrt(q: &Rat) -> Option<Rat> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer();
    let d = q.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(Rat::new(sn, sd))
    } else {
        None
    }
}

/// Parse a rational from its canonical `p/q` or `p` string form.
pub fn rat_from_str(s: &str) -> Result<Rat> {
    s.parse::<Rat>()
        .map_err(|e| Error::ExprJson(format!("bad rational `{s}`: {e}")))
}

pub fn rat_of(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

// Zero components dominate in practice (most circuit coefficients live in a
// single basis unit), so the arithmetic skips them instead of always doing
// 4-16 BigRational operations.

fn rat_add(a: &Rat, b: &Rat) -> Rat {
    if a.is_zero() {
        b.clone()
    } else if b.is_zero() {
        a.clone()
    } else {
        a + b
    }
}

fn rat_sub(a: &Rat, b: &Rat) -> Rat {
    if b.is_zero() {
        a.clone()
    } else if a.is_zero() {
        -b.clone()
    } else {
        a - b
    }
}

impl Add for &Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        Coeff::new(
            rat_add(&self.p0, &rhs.p0),
            rat_add(&self.p1, &rhs.p1),
            rat_add(&self.p2, &rhs.p2),
            rat_add(&self.p3, &rhs.p3),
        )
    }
}

impl Sub for &Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        Coeff::new(
            rat_sub(&self.p0, &rhs.p0),
            rat_sub(&self.p1, &rhs.p1),
            rat_sub(&self.p2, &rhs.p2),
            rat_sub(&self.p3, &rhs.p3),
        )
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        let neg = |r: &Rat| if r.is_zero() { r.clone() } else { -r.clone() };
        Coeff::new(neg(&self.p0), neg(&self.p1), neg(&self.p2), neg(&self.p3))
    }
}

/// Unit product table over (1, i, sqrt2, i*sqrt2): (result unit, scale).
const UNIT_MUL: [[(usize, i8); 4]; 4] = [
    [(0, 1), (1, 1), (2, 1), (3, 1)],
    [(1, 1), (0, -1), (3, 1), (2, -1)],
    [(2, 1), (3, 1), (0, 2), (1, 2)],
    [(3, 1), (2, -1), (1, 2), (0, -2)],
];

impl Mul for &Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        let a = [&self.p0, &self.p1, &self.p2, &self.p3];
        let b = [&rhs.p0, &rhs.p1, &rhs.p2, &rhs.p3];
        let mut acc: [Option<Rat>; 4] = [None, None, None, None];
        for (ia, pa) in a.iter().enumerate() {
            if pa.is_zero() {
                continue;
            }
            for (ib, pb) in b.iter().enumerate() {
                if pb.is_zero() {
                    continue;
                }
                let (unit, scale) = UNIT_MUL[ia][ib];
                let mut prod = *pa * *pb;
                match scale {
                    1 => {}
                    -1 => prod = -prod,
                    2 => prod = &prod + &prod,
                    -2 => {
                        prod = &prod + &prod;
                        prod = -prod;
                    }
                    _ => unreachable!(),
                }
                acc[unit] = Some(match acc[unit].take() {
                    None => prod,
                    Some(x) => x + prod,
                });
            }
        }
        let take = |o: Option<Rat>| o.unwrap_or_else(Rat::zero);
        let [c0, c1, c2, c3] = acc;
        Coeff::new(take(c0), take(c1), take(c2), take(c3))
    }
}

impl Div for &Coeff {
    type Output = Result<Coeff>;
    fn div(self, rhs: &Coeff) -> Result<Coeff> {
        Ok(self * &rhs.inv()?)
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (r, unit) in self.components() {
            if !first {
                write!(f, "{}", if r.is_negative() { " - " } else { " + " })?;
            } else if r.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = r.abs();
            let unit_str = match unit {
                CoeffUnit::One => "",
                CoeffUnit::I => "i",
                CoeffUnit::Sqrt2 => "sqrt2",
                CoeffUnit::ISqrt2 => "i*sqrt2",
            };
            if unit_str.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{unit_str}")?;
            } else {
                write!(f, "{a}*{unit_str}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt2_squares_to_two() {
        let s = Coeff::sqrt2();
        assert_eq!(&s * &s, Coeff::from_int(2));
    }

    #[test]
    fn i_squares_to_minus_one() {
        let i = Coeff::i();
        assert_eq!(&i * &i, Coeff::from_int(-1));
    }

    #[test]
    fn hadamard_factor() {
        let h = Coeff::inv_sqrt2();
        assert_eq!(&h * &h, Coeff::from_ratio(1, 2));
    }

    #[test]
    fn repeated_sum_is_exact() {
        // (a/b) summed b times equals a, exactly.
        let c = Coeff::from_ratio(7, 13);
        let mut acc = Coeff::zero();
        for _ in 0..13 {
            acc = &acc + &c;
        }
        assert_eq!(acc, Coeff::from_int(7));
    }

    #[test]
    fn inverse_round_trip() {
        let z = Coeff::new(rat_of(3, 2), rat_of(-1, 4), rat_of(5, 3), rat_of(2, 7));
        let zi = z.inv().unwrap();
        assert_eq!(&z * &zi, Coeff::one());
        assert!(Coeff::zero().inv().is_err());
    }

    #[test]
    fn division() {
        let a = Coeff::sqrt2();
        let b = Coeff::from_int(2);
        assert_eq!((&a / &b).unwrap(), Coeff::inv_sqrt2());
    }

    #[test]
    fn sqrt_shapes() {
        assert_eq!(Coeff::from_ratio(9, 4).sqrt().unwrap(), Coeff::from_ratio(3, 2));
        assert_eq!(Coeff::from_int(2).sqrt().unwrap(), Coeff::sqrt2());
        assert_eq!(Coeff::from_ratio(1, 2).sqrt().unwrap(), Coeff::inv_sqrt2());
        let m = Coeff::from_int(-4).sqrt().unwrap();
        assert_eq!(m, &Coeff::from_int(2) * &Coeff::i());
        assert!(Coeff::from_int(3).sqrt().is_none());
        assert!(Coeff::sqrt2().sqrt().is_none());
    }

    #[test]
    fn to_complex() {
        let c = Coeff::new(rat_of(1, 2), rat_of(0, 1), rat_of(1, 2), rat_of(0, 1));
        let z = c.to_complex();
        assert!((z.re - (0.5 + std::f64::consts::SQRT_2 / 2.0)).abs() < 1e-15);
        assert_eq!(z.im, 0.0);
    }
}
