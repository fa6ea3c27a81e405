//! Expression-tree rendering and the leafcount size metric.
//!
//! `leafcount` counts every node of the rendered tree — heads (sum, product,
//! power, negation) and atoms (symbols, numeric atoms, i, sqrt2) alike,
//! matching the Mathematica-style node count the benchmarks compare ratios
//! of. Rendering is deterministic: terms in descending graded-lex order,
//! negative constants as negation heads, exponent 1 without a power head,
//! and the factored overlay (when present) as the rendered form.

use std::fmt;

use num_traits::{One, Signed};

use super::coeff::{Coeff, CoeffUnit, Rat};
use super::poly::{Expr, Monomial};
use super::sym::Sym;

/// Rendered expression tree.
#[derive(Clone, Debug, PartialEq)]
pub enum Node {
    Sum(Vec<Node>),
    Product(Vec<Node>),
    Power(Box<Node>, Box<Node>),
    Neg(Box<Node>),
    Sym(Sym),
    /// Nonnegative rational atom (integers included).
    Rat(Rat),
    I,
    Sqrt2,
}

impl Node {
    pub fn count(&self) -> u64 {
        match self {
            Node::Sum(ch) | Node::Product(ch) => 1 + ch.iter().map(Node::count).sum::<u64>(),
            Node::Power(b, e) => 1 + b.count() + e.count(),
            Node::Neg(x) => 1 + x.count(),
            Node::Sym(_) | Node::Rat(_) | Node::I | Node::Sqrt2 => 1,
        }
    }

    fn int(n: u32) -> Node {
        Node::Rat(Rat::from_integer(n.into()))
    }

    /// Wrap children into a product, collapsing the trivial cases.
    fn product(mut ch: Vec<Node>) -> Node {
        match ch.len() {
            0 => Node::int(1),
            1 => ch.pop().unwrap(),
            _ => Node::Product(ch),
        }
    }
}

/// Node count of the rendered tree of `e`.
pub fn leafcount(e: &Expr) -> u64 {
    render(e).count()
}

/// Render `e` deterministically. The factored overlay is the rendered form
/// when present.
pub fn render(e: &Expr) -> Node {
    if let Some(factors) = e.overlay() {
        let mut ch = Vec::with_capacity(factors.len());
        for (f, mult) in factors {
            // Nested factors render through their own overlays.
            let base = render(f);
            if *mult == 1 {
                ch.push(base);
            } else {
                ch.push(Node::Power(Box::new(base), Box::new(Node::int(*mult))));
            }
        }
        return Node::product(ch);
    }
    if e.is_zero() {
        return Node::int(0);
    }
    let mut terms: Vec<Node> = Vec::with_capacity(e.n_terms());
    for (m, c) in e.terms().rev() {
        terms.push(render_term(m, c));
    }
    if terms.len() == 1 {
        terms.pop().unwrap()
    } else {
        Node::Sum(terms)
    }
}

fn render_sym_pow(s: Sym, e: u32) -> Node {
    if e == 1 {
        Node::Sym(s)
    } else {
        Node::Power(Box::new(Node::Sym(s)), Box::new(Node::int(e)))
    }
}

fn render_term(m: &Monomial, c: &Coeff) -> Node {
    let sym_nodes: Vec<Node> = m.pairs().iter().map(|&(s, e)| render_sym_pow(s, e)).collect();
    let comps = c.components();
    if comps.len() == 1 {
        let (r, unit) = comps[0];
        let neg = r.is_negative();
        let mag = r.abs();
        let mut ch = Vec::new();
        if !mag.is_one() || (matches!(unit, CoeffUnit::One) && sym_nodes.is_empty()) {
            ch.push(Node::Rat(mag));
        }
        match unit {
            CoeffUnit::One => {}
            CoeffUnit::I => ch.push(Node::I),
            CoeffUnit::Sqrt2 => ch.push(Node::Sqrt2),
            CoeffUnit::ISqrt2 => {
                ch.push(Node::I);
                ch.push(Node::Sqrt2);
            }
        }
        ch.extend(sym_nodes);
        let body = Node::product(ch);
        if neg {
            Node::Neg(Box::new(body))
        } else {
            body
        }
    } else {
        // Multi-component coefficient renders as a parenthesized sum subtree.
        let coeff_tree = render_coeff_sum(&comps);
        let mut ch = vec![coeff_tree];
        ch.extend(sym_nodes);
        Node::product(ch)
    }
}

fn render_coeff_sum(comps: &[(&Rat, CoeffUnit)]) -> Node {
    let mut parts = Vec::with_capacity(comps.len());
    for (r, unit) in comps {
        let neg = r.is_negative();
        let mag = r.abs();
        let mut ch = Vec::new();
        if !mag.is_one() || matches!(unit, CoeffUnit::One) {
            ch.push(Node::Rat(mag));
        }
        match unit {
            CoeffUnit::One => {}
            CoeffUnit::I => ch.push(Node::I),
            CoeffUnit::Sqrt2 => ch.push(Node::Sqrt2),
            CoeffUnit::ISqrt2 => {
                ch.push(Node::I);
                ch.push(Node::Sqrt2);
            }
        }
        let body = Node::product(ch);
        parts.push(if neg { Node::Neg(Box::new(body)) } else { body });
    }
    Node::Sum(parts)
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Sum(ch) => {
                for (k, c) in ch.iter().enumerate() {
                    if let Node::Neg(inner) = c {
                        if k == 0 {
                            write!(f, "-")?;
                        } else {
                            write!(f, " - ")?;
                        }
                        write_factor(f, inner)?;
                    } else {
                        if k > 0 {
                            write!(f, " + ")?;
                        }
                        write!(f, "{c}")?;
                    }
                }
                Ok(())
            }
            Node::Product(ch) => {
                for (k, c) in ch.iter().enumerate() {
                    if k > 0 {
                        write!(f, "*")?;
                    }
                    write_factor(f, c)?;
                }
                Ok(())
            }
            Node::Power(b, e) => {
                match **b {
                    Node::Sym(_) | Node::Rat(_) | Node::I | Node::Sqrt2 => write!(f, "{b}^{e}"),
                    _ => write!(f, "({b})^{e}"),
                }
            }
            Node::Neg(x) => {
                write!(f, "-")?;
                write_factor(f, x)
            }
            Node::Sym(s) => write!(f, "{s}"),
            Node::Rat(r) => write!(f, "{r}"),
            Node::I => write!(f, "i"),
            Node::Sqrt2 => write!(f, "sqrt2"),
        }
    }
}

fn write_factor(f: &mut fmt::Formatter<'_>, n: &Node) -> fmt::Result {
    match n {
        Node::Sum(_) | Node::Neg(_) => write!(f, "({n})"),
        _ => write!(f, "{n}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_atom() {
        assert_eq!(leafcount(&Expr::sym(Sym::a(1))), 1);
    }

    #[test]
    fn sum_of_two_squares_counts_seven() {
        let e = &Expr::sym(Sym::a(1)).pow(2) + &Expr::sym(Sym::b(1)).pow(2);
        // sum head + 2 * (power head + symbol + exponent)
        assert_eq!(leafcount(&e), 7);
    }

    #[test]
    fn sqrt2_constant_is_one_atom() {
        assert_eq!(leafcount(&Expr::from_coeff(Coeff::sqrt2())), 1);
    }

    #[test]
    fn negative_constant_uses_neg_head() {
        assert_eq!(leafcount(&Expr::from_int(-3)), 2);
        assert_eq!(leafcount(&Expr::from_int(3)), 1);
    }

    #[test]
    fn leafcount_invariant_under_construction_order() {
        let a = Expr::sym(Sym::a(1));
        let b = Expr::sym(Sym::b(2));
        let c = Expr::sym(Sym::c(0));
        let e1 = &(&a * &b) + &(&c * &c);
        let e2 = &(&c * &c) + &(&b * &a);
        assert_eq!(leafcount(&e1), leafcount(&e2));
    }

    #[test]
    fn overlay_renders_as_product() {
        let f1 = &Expr::sym(Sym::a(1)) + &Expr::sym(Sym::b(1));
        let expanded = &f1 * &f1;
        let lc_expanded = leafcount(&expanded);
        let overlaid = expanded.clone().with_overlay(vec![(f1.clone(), 2)]);
        // power head + (sum + 2 syms) + exponent = 1 + 3 + 1
        assert_eq!(leafcount(&overlaid), 5);
        assert!(leafcount(&overlaid) < lc_expanded);
        // equality ignores the overlay
        assert_eq!(overlaid, expanded);
    }

    #[test]
    fn display_readable() {
        let e = &(&Expr::from_ratio(1, 2) + &(&Expr::sym(Sym::a(1)) * &Expr::sym(Sym::b(1))))
            - &Expr::sym(Sym::a(2)).pow(2);
        assert_eq!(format!("{e}"), "a1*b1 - a2^2 + 1/2");
    }
}
