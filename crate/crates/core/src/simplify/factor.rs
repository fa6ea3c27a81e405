//! Product factoring for the rendered overlay.
//!
//! Not a complete multivariate factorizer (non-goal); it extracts rational
//! and monomial content, splits differences of squares, and recursively
//! splits off exact-division factors found by collecting on a pivot symbol.
//! When the factored rendering is not smaller the input is returned
//! unchanged, so the operation never loses ground.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::expr::coeff::Rat;
use crate::expr::render::leafcount;
use crate::expr::{Coeff, Expr, Monomial};

/// Factor `e` into a product overlay when that renders no larger.
pub fn factor_group(e: &Expr) -> Expr {
    if e.n_terms() <= 1 {
        return e.expanded();
    }
    let mut factors: Vec<(Expr, u32)> = Vec::new();

    // Monomial content.
    let mono_gcd = e
        .monomials()
        .fold(None::<Monomial>, |acc, m| match acc {
            None => Some(m.clone()),
            Some(g) => Some(g.gcd(m)),
        })
        .unwrap_or_default();
    // Rational content (only when every coefficient is purely rational),
    // signed so the primitive part has a positive leading coefficient.
    let rat_content = rational_content(e);

    let mut prim = e.expanded();
    if !mono_gcd.is_unit() {
        prim = prim.div_monomial_exact(&mono_gcd).expect("gcd divides");
        factors.push((Expr::monomial(mono_gcd, Coeff::one()), 1));
    }
    if let Some(content) = &rat_content {
        let inv = Coeff::from_rat(content.clone()).inv().expect("nonzero content");
        prim = prim.scale(&inv);
        factors.push((Expr::from_coeff(Coeff::from_rat(content.clone())), 1));
    }

    for f in split(prim) {
        factors.push((f, 1));
    }

    // Merge repeats into multiplicities and order deterministically.
    factors.sort_by(|(a, _), (b, _)| leafcount(a).cmp(&leafcount(b)).then_with(|| a.cmp(b)));
    let mut merged: Vec<(Expr, u32)> = Vec::new();
    for (f, m) in factors {
        match merged.last_mut() {
            Some((g, k)) if *g == f => *k += m,
            _ => merged.push((f, m)),
        }
    }

    if merged.len() == 1 && merged[0].1 == 1 {
        return e.expanded();
    }
    let candidate = e.expanded().with_overlay(merged);
    if leafcount(&candidate) <= leafcount(e) {
        candidate
    } else {
        e.expanded()
    }
}

/// Signed gcd of all coefficients when they are all rational and the gcd is
/// not the unit 1; sign follows the leading coefficient.
fn rational_content(e: &Expr) -> Option<Rat> {
    let mut nums = Vec::with_capacity(e.n_terms());
    for (_, c) in e.terms() {
        nums.push(c.as_rational()?.clone());
    }
    let mut num_gcd = num_bigint::BigInt::zero();
    let mut den_lcm = num_bigint::BigInt::one();
    for r in &nums {
        num_gcd = num_gcd.gcd(&r.numer().abs());
        den_lcm = den_lcm.lcm(r.denom());
    }
    if num_gcd.is_zero() {
        return None;
    }
    let mut content = Rat::new(num_gcd, den_lcm);
    let leading = e.leading_term().expect("nonzero").1.as_rational()?;
    if leading.is_negative() {
        content = -content;
    }
    if content.is_one() {
        None
    } else {
        Some(content)
    }
}

/// Recursive product split of a primitive polynomial with >= 2 terms.
fn split(prim: Expr) -> Vec<Expr> {
    if prim.n_terms() <= 1 || prim.is_one() {
        if prim.is_one() {
            return Vec::new();
        }
        return vec![prim];
    }

    if let Some((u, w)) = difference_of_squares(&prim) {
        let mut out = split(&u - &w);
        out.extend(split(&u + &w));
        return out;
    }

    // Collect on a pivot symbol: the coefficient polynomial of the pivot's
    // top power is a candidate factor; exact division confirms it.
    for pivot in prim.symbols() {
        let d = prim.max_degree_in(pivot);
        if d == 0 {
            continue;
        }
        let mut lead = Expr::zero();
        for (m, c) in prim.terms() {
            if m.exponent_of(pivot) == d {
                lead.absorb(Expr::monomial(m.without(pivot), c.clone()));
            }
        }
        if lead.is_constant() || lead.n_terms() == prim.n_terms() {
            continue;
        }
        if let Some(q) = prim.div_exact(&lead) {
            if !q.is_constant() {
                let mut out = split(lead);
                out.extend(split(q));
                return out;
            }
        }
    }

    vec![prim]
}

/// `prim = u^2 - w^2` decomposition for two-term polynomials whose parts are
/// perfect squares in the coefficient field.
fn difference_of_squares(prim: &Expr) -> Option<(Expr, Expr)> {
    if prim.n_terms() != 2 {
        return None;
    }
    let mut it = prim.terms();
    let (m1, c1) = it.next().unwrap();
    let (m2, c2) = it.next().unwrap();
    // Need opposite signs on the rational view; take the positive one as u^2.
    let (pos, neg) = match (coeff_sign(c1), coeff_sign(c2)) {
        (Some(true), Some(false)) => ((m1, c1), (m2, c2)),
        (Some(false), Some(true)) => ((m2, c2), (m1, c1)),
        _ => return None,
    };
    let u = square_root_term(pos.0, pos.1)?;
    let w = square_root_term(neg.0, &-neg.1)?;
    Some((u, w))
}

fn coeff_sign(c: &Coeff) -> Option<bool> {
    let r = c.as_rational()?;
    Some(r.is_positive())
}

fn square_root_term(m: &Monomial, c: &Coeff) -> Option<Expr> {
    let sm = m.sqrt()?;
    let sc = c.sqrt()?;
    if !sc.is_real() {
        return None;
    }
    Some(Expr::monomial(sm, sc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::Sym;

    fn a(i: u32) -> Expr {
        Expr::sym(Sym::a(i))
    }
    fn b(i: u32) -> Expr {
        Expr::sym(Sym::b(i))
    }
    fn c(k: u32) -> Expr {
        Expr::sym(Sym::c(k))
    }
    fn s(k: u32) -> Expr {
        Expr::sym(Sym::s(k))
    }

    #[test]
    fn common_monomial_factor() {
        // a1^2 a2^2 + a1^2 b2^2 -> a1^2 * (a2^2 + b2^2)
        let e = &(&a(1).pow(2) * &a(2).pow(2)) + &(&a(1).pow(2) * &b(2).pow(2));
        let f = factor_group(&e);
        let ov = f.overlay().expect("factored");
        assert_eq!(ov.len(), 2);
        assert!(leafcount(&f) < leafcount(&e.expanded()));
        assert_eq!(f, e); // canonical form unchanged
    }

    #[test]
    fn difference_of_squares_splits() {
        // c0^2 - s0^2 -> (c0 - s0)(c0 + s0)
        let e = &c(0).pow(2) - &s(0).pow(2);
        let f = factor_group(&e);
        let ov = f.overlay().expect("factored");
        assert_eq!(ov.len(), 2);
        let minus = &c(0) - &s(0);
        let plus = &c(0) + &s(0);
        let got: Vec<&Expr> = ov.iter().map(|(f, _)| f).collect();
        assert!(got.contains(&&minus) && got.contains(&&plus));
    }

    #[test]
    fn grouping_splits_product_of_sums() {
        // (a1^2+b1^2)(a2^2+b2^2) expanded refactors
        let f1 = &a(1).pow(2) + &b(1).pow(2);
        let f2 = &a(2).pow(2) + &b(2).pow(2);
        let e = (&f1 * &f2).expanded();
        let f = factor_group(&e);
        let ov = f.overlay().expect("factored");
        assert_eq!(ov.len(), 2);
    }

    #[test]
    fn unfactorable_returns_unchanged() {
        let e = &(&a(1) * &a(2)) + &Expr::one();
        let f = factor_group(&e);
        assert!(f.overlay().is_none());
        assert_eq!(f, e);
    }

    #[test]
    fn never_larger() {
        // expanded product of three quadratics refactors to <= its leafcount
        let p1 = &(&c(0).pow(2) + &s(0)) + &Expr::one();
        let p2 = &c(1) + &s(1).pow(2);
        let p3 = &a(1) - &b(1);
        let e = (&(&p1 * &p2) * &p3).expanded();
        let f = factor_group(&e);
        assert!(leafcount(&f) <= leafcount(&e));
        assert_eq!(f, e);
    }

    #[test]
    fn rational_content_extracted() {
        // 2 a1 + 2 b1 -> 2 * (a1 + b1); content 2 with positive leading sign
        let e = (&a(1) + &b(1)).scale(&Coeff::from_int(2));
        let f = factor_group(&e);
        let ov = f.overlay().expect("factored");
        assert_eq!(ov.len(), 2);
    }
}
