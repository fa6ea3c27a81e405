//! Direct numeric evaluation of canonical expressions.

use std::collections::BTreeMap;

use num_complex::Complex64;

use super::poly::Expr;
use super::sym::Sym;
use crate::error::{Error, Result};

/// Numeric values for symbols. Constraint-respecting helpers bind the C/S and
/// A/B pairs from a single angle so the Pythagorean relations hold exactly
/// (up to float rounding).
#[derive(Clone, Debug, Default)]
pub struct Bindings {
    map: BTreeMap<Sym, Complex64>,
}

impl Bindings {
    pub fn new() -> Self {
        Bindings::default()
    }

    pub fn set(&mut self, s: Sym, v: Complex64) -> &mut Self {
        self.map.insert(s, v);
        self
    }

    pub fn set_real(&mut self, s: Sym, v: f64) -> &mut Self {
        self.set(s, Complex64::new(v, 0.0))
    }

    /// Bind C(k) = cos(theta/2), S(k) = sin(theta/2) for rotation angle theta.
    pub fn set_angle(&mut self, k: u32, theta: f64) -> &mut Self {
        self.set_real(Sym::c(k), (theta / 2.0).cos());
        self.set_real(Sym::s(k), (theta / 2.0).sin())
    }

    /// Bind A(i) = cos(u), B(i) = sin(u) for a separable-input qubit.
    pub fn set_input(&mut self, qubit: u32, u: f64) -> &mut Self {
        self.set_real(Sym::a(qubit), u.cos());
        self.set_real(Sym::b(qubit), u.sin())
    }

    pub fn set_feature(&mut self, d: u32, x: f64) -> &mut Self {
        self.set_real(Sym::x(d), x)
    }

    pub fn get(&self, s: Sym) -> Option<Complex64> {
        self.map.get(&s).copied()
    }

    pub fn syms(&self) -> impl Iterator<Item = Sym> + '_ {
        self.map.keys().copied()
    }
}

/// Evaluate `e` at `bindings`, term by term over the canonical form.
pub fn eval_numeric(e: &Expr, bindings: &Bindings) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    for (m, c) in e.terms() {
        let mut t = c.to_complex();
        for &(s, exp) in m.pairs() {
            let v = bindings.get(s).ok_or(Error::UnboundSymbol(s))?;
            t *= v.powi(exp as i32);
        }
        acc += t;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::coeff::Coeff;

    #[test]
    fn probability_pair_sums_to_one() {
        let e = &Expr::sym(Sym::a(1)).pow(2) + &Expr::sym(Sym::b(1)).pow(2);
        let mut b = Bindings::new();
        b.set_real(Sym::a(1), 0.6).set_real(Sym::b(1), 0.8);
        let v = eval_numeric(&e, &b).unwrap();
        assert!((v.re - 1.0).abs() < 1e-15 && v.im == 0.0);
    }

    #[test]
    fn sqrt2_constant() {
        let e = Expr::from_coeff(Coeff::sqrt2());
        let v = eval_numeric(&e, &Bindings::new()).unwrap();
        assert!((v.re - std::f64::consts::SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn unbound_symbol_is_named() {
        let e = Expr::sym(Sym::c(3));
        match eval_numeric(&e, &Bindings::new()) {
            Err(Error::UnboundSymbol(s)) => assert_eq!(s, Sym::c(3)),
            other => panic!("expected unbound-symbol error, got {other:?}"),
        }
    }
}
