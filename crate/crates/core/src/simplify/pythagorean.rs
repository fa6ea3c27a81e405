//! Pythagorean-constraint rewriting.
//!
//! The constrained pairs satisfy C(k)^2 + S(k)^2 = 1 and A(i)^2 + B(i)^2 = 1.
//! Eliminating one side's squares (S(k)^2 -> 1 - C(k)^2, and likewise B/A or
//! the reverse) is reduction modulo the Groebner basis {s^2 + c^2 - 1}, so the
//! all-indices elimination in a fixed direction is a unique normal form: two
//! expressions equal under the constraints reduce to the same polynomial.
//! That is what collapses state norms to the constant 1.

use std::time::Instant;

use crate::expr::render::leafcount;
use crate::expr::{Expr, Sym, SymKind};

/// Which side of each constrained pair to eliminate squares of.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReduceDirection {
    /// Eliminate S(k)^2 and B(i)^2 (keep cosines). The spec's
    /// eliminate-S^2 / eliminate-B^2 directions.
    EliminateSin,
    /// Eliminate C(k)^2 and A(i)^2 (keep sines).
    EliminateCos,
    /// Per-index greedy search over both directions plus the two global
    /// normal forms, scored by rendered leafcount.
    BestOfBoth,
}

/// Simultaneously replace the SQUARE of each listed symbol by the paired
/// expression: for a monomial with target^(2q+r), multiply repl^q and keep
/// target^r. Substitutions are simultaneous, so replacements may mention the
/// substituted symbols.
pub fn substitute_squares(e: &Expr, subs: &[(Sym, Expr)]) -> Expr {
    // Per-target replacement powers, built lazily to the needed degree.
    let mut powers: Vec<Vec<Expr>> = subs.iter().map(|_| vec![Expr::one()]).collect();
    let mut raw: Vec<(crate::expr::Monomial, crate::expr::Coeff)> = Vec::with_capacity(e.n_terms());
    for (m, c) in e.terms() {
        let mut mono = m.clone();
        let mut factor: Option<Expr> = None;
        for (k, (target, repl)) in subs.iter().enumerate() {
            let d = mono.exponent_of(*target);
            if d < 2 {
                continue;
            }
            let q = (d / 2) as usize;
            while powers[k].len() <= q {
                let next = &powers[k][powers[k].len() - 1] * repl;
                powers[k].push(next);
            }
            let rest = mono.without(*target);
            mono = if d % 2 == 1 {
                rest.mul(&crate::expr::Monomial::sym(*target))
            } else {
                rest
            };
            factor = Some(match factor {
                None => powers[k][q].clone(),
                Some(f) => &f * &powers[k][q],
            });
        }
        match factor {
            None => raw.push((mono, c.clone())),
            Some(f) => raw.extend(f.mul_monomial(&mono, c).into_terms()),
        }
    }
    Expr::collect_terms(raw)
}

/// Rewrite squares of `target` away: target^2 -> 1 - partner^2.
/// One pass is complete for the given symbol (substitution introduces only
/// partner powers).
pub fn eliminate_squares(e: &Expr, target: Sym) -> Expr {
    let partner = match target.partner() {
        Some(p) => p,
        None => return e.expanded(),
    };
    if e.monomials().all(|m| m.exponent_of(target) < 2) {
        return e.expanded();
    }
    let repl = &Expr::one() - &Expr::sym_pow(partner, 2);
    substitute_squares(e, &[(target, repl)])
}

/// Constrained pair indices present in `e`, as (class, index) in global order.
fn pair_indices(e: &Expr) -> Vec<(u8, u32)> {
    let mut out: Vec<(u8, u32)> = Vec::new();
    for s in e.symbols() {
        let key = match s.kind {
            SymKind::C | SymKind::S => (0u8, s.index),
            SymKind::A | SymKind::B => (1u8, s.index),
            SymKind::X => continue,
        };
        if !out.contains(&key) {
            out.push(key);
        }
    }
    out.sort();
    out
}

fn pair_syms(class: u8, index: u32) -> (Sym, Sym) {
    // (sine-like, cosine-like)
    if class == 0 {
        (Sym::s(index), Sym::c(index))
    } else {
        (Sym::b(index), Sym::a(index))
    }
}

/// All-indices elimination in one direction: the constraint normal form.
pub fn normal_form(e: &Expr, direction: ReduceDirection) -> Expr {
    let mut cur = e.expanded();
    for (class, index) in pair_indices(e) {
        let (sin, cos) = pair_syms(class, index);
        let target = match direction {
            ReduceDirection::EliminateSin => sin,
            ReduceDirection::EliminateCos => cos,
            ReduceDirection::BestOfBoth => unreachable!("normal_form takes a single direction"),
        };
        cur = eliminate_squares(&cur, target);
    }
    cur
}

/// The canonical representative used for equality modulo the constraints.
pub fn constraint_normal_form(e: &Expr) -> Expr {
    normal_form(e, ReduceDirection::EliminateSin)
}

/// Structural equality modulo C^2+S^2=1 and A^2+B^2=1.
pub fn equivalent_mod_constraints(a: &Expr, b: &Expr) -> bool {
    constraint_normal_form(a) == constraint_normal_form(b)
}

/// Greedy per-index both-direction search. At each constrained index the
/// cheaper of {eliminate sine side, eliminate cosine side, keep} is taken,
/// scored by rendered leafcount; ties prefer the sine-side elimination.
fn per_index_greedy(e: &Expr, deadline: Option<Instant>) -> Expr {
    let mut cur = e.expanded();
    let mut cur_lc = leafcount(&cur);
    for (class, index) in pair_indices(e) {
        if deadline.map_or(false, |d| Instant::now() > d) {
            break;
        }
        let (sin, cos) = pair_syms(class, index);
        let cand_sin = eliminate_squares(&cur, sin);
        let cand_cos = eliminate_squares(&cur, cos);
        // Alternative treatments of this index; preference order on ties is
        // sine elimination, then cosine, then keep (strict `<` after the
        // first acceptance encodes it).
        for cand in [cand_sin, cand_cos] {
            let lc = leafcount(&cand);
            if lc < cur_lc {
                cur = cand;
                cur_lc = lc;
            }
        }
    }
    cur
}

/// Reduce `e` according to `direction`. Value is preserved for all bindings
/// satisfying the constraints; the result never renders larger than `e` in
/// the `BestOfBoth` mode.
pub fn pythagorean_reduce(e: &Expr, direction: ReduceDirection) -> Expr {
    pythagorean_reduce_budgeted(e, direction, None)
}

pub(crate) fn pythagorean_reduce_budgeted(
    e: &Expr,
    direction: ReduceDirection,
    deadline: Option<Instant>,
) -> Expr {
    match direction {
        ReduceDirection::EliminateSin | ReduceDirection::EliminateCos => normal_form(e, direction),
        ReduceDirection::BestOfBoth => {
            // Candidates in tie-break preference order (earlier wins ties,
            // via strict `<` on later ones): global sine normal form, global
            // cosine normal form, per-index greedy; the input wins only when
            // every candidate renders strictly larger.
            let mut best = e.expanded();
            let mut best_lc = leafcount(&best);
            let candidates = [
                normal_form(e, ReduceDirection::EliminateSin),
                normal_form(e, ReduceDirection::EliminateCos),
                per_index_greedy(e, deadline),
            ];
            for cand in candidates {
                let lc = leafcount(&cand);
                if lc < best_lc {
                    best = cand;
                    best_lc = lc;
                }
            }
            best
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn s_squared_becomes_one_minus_c_squared() {
        let e = s(0).pow(2);
        let r = pythagorean_reduce(&e, ReduceDirection::EliminateSin);
        assert_eq!(r, &Expr::one() - &c(0).pow(2));
    }

    #[test]
    fn probability_pair_collapses() {
        let e = &a(1).pow(2) + &b(1).pow(2);
        let r = pythagorean_reduce(&e, ReduceDirection::EliminateSin);
        assert_eq!(r, Expr::one());
    }

    #[test]
    fn fourth_power() {
        // S0^4 -> 1 - 2 C0^2 + C0^4
        let e = s(0).pow(4);
        let r = pythagorean_reduce(&e, ReduceDirection::EliminateSin);
        let expected = &(&Expr::one() - &c(0).pow(2).scale(&crate::expr::Coeff::from_int(2)))
            + &c(0).pow(4);
        assert_eq!(r, expected);
    }

    #[test]
    fn no_sine_squares_remain() {
        let e = &(&s(0).pow(3) * &b(2).pow(2)) + &(&c(1).pow(2) * &s(1).pow(5));
        let r = pythagorean_reduce(&e, ReduceDirection::EliminateSin);
        for m in r.terms().keys() {
            for (sym, exp) in m.pairs() {
                if sym.is_sine_like() {
                    assert!(*exp < 2, "residual sine square {sym}^{exp} in {r}");
                }
            }
        }
    }

    #[test]
    fn normal_form_is_unique_for_equivalent_inputs() {
        // Same function two ways: a1^2 and 1 - b1^2.
        let lhs = a(1).pow(2);
        let rhs = &Expr::one() - &b(1).pow(2);
        assert!(equivalent_mod_constraints(&lhs, &rhs));
    }

    #[test]
    fn best_of_both_keeps_minimal_input() {
        // a1^2 a2^2 + b1^2 b2^2 is already minimal under the rule set.
        let e = &(&a(1).pow(2) * &a(2).pow(2)) + &(&b(1).pow(2) * &b(2).pow(2));
        let r = pythagorean_reduce(&e, ReduceDirection::BestOfBoth);
        assert_eq!(r, e);
    }

    #[test]
    fn best_of_both_finds_case6_collapse() {
        // a1^2 a2^2 a3^2 + a1^2 a2^2 b3^2 + b1^2 a2^2 a3^2 + b1^2 a2^2 b3^2 -> a2^2
        let q = |i: u32, zero: bool| if zero { a(i).pow(2) } else { b(i).pow(2) };
        let mut e = Expr::zero();
        for b1 in [true, false] {
            for b3 in [true, false] {
                e = &e + &(&(&q(1, b1) * &q(2, true)) * &q(3, b3));
            }
        }
        let r = pythagorean_reduce(&e, ReduceDirection::BestOfBoth);
        assert_eq!(r, a(2).pow(2));
    }
}
