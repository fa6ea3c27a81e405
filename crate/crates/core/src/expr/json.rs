//! JSON tree serialization for expressions.
//!
//! Node kinds: `{"op":"add"|"mul"|"pow"|"neg","args":[...]}`,
//! `{"sym":"c","idx":3}`, `{"coeff":[p0,p1,p2,p3]}` with the four rational
//! coordinates as exact strings. Serialization walks the rendered tree, so a
//! factored overlay keeps its product structure on disk (the file-size
//! comparisons depend on it); parsing rebuilds the canonical form and
//! reattaches the overlay when the stored root is a genuine factorization.
//! The text round-trips bit-exactly.

use num_traits::{One, Signed, ToPrimitive};
use serde_json::{json, Value};

use super::coeff::{rat_from_str, Coeff, Rat};
use super::poly::Expr;
use super::render::{render, Node};
use super::sym::{Sym, SymKind};
use crate::error::{Error, Result};

pub fn expr_to_json(e: &Expr) -> Value {
    node_to_json(&render(e))
}

pub fn expr_to_string(e: &Expr) -> String {
    expr_to_json(e).to_string()
}

pub fn expr_from_str(s: &str) -> Result<Expr> {
    let v: Value = serde_json::from_str(s)?;
    expr_from_json(&v)
}

fn coeff_value(c: &Coeff) -> Value {
    json!({ "coeff": [c.p0.to_string(), c.p1.to_string(), c.p2.to_string(), c.p3.to_string()] })
}

fn node_to_json(n: &Node) -> Value {
    match n {
        Node::Sum(ch) => json!({ "op": "add", "args": ch.iter().map(node_to_json).collect::<Vec<_>>() }),
        Node::Product(ch) => json!({ "op": "mul", "args": ch.iter().map(node_to_json).collect::<Vec<_>>() }),
        Node::Power(b, e) => json!({ "op": "pow", "args": [node_to_json(b), node_to_json(e)] }),
        Node::Neg(x) => json!({ "op": "neg", "args": [node_to_json(x)] }),
        Node::Sym(s) => json!({ "sym": s.kind_str(), "idx": s.index }),
        Node::Rat(r) => coeff_value(&Coeff::from_rat(r.clone())),
        Node::I => coeff_value(&Coeff::i()),
        Node::Sqrt2 => coeff_value(&Coeff::sqrt2()),
    }
}

pub fn expr_from_json(v: &Value) -> Result<Expr> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::ExprJson(format!("expected object node, got {v}")))?;
    if let Some(op) = obj.get("op") {
        let op = op
            .as_str()
            .ok_or_else(|| Error::ExprJson("op must be a string".into()))?;
        let args = obj
            .get("args")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::ExprJson(format!("`{op}` node lacks args array")))?;
        return match op {
            "add" => {
                let mut acc = Expr::zero();
                for a in args {
                    acc.absorb(expr_from_json(a)?);
                }
                Ok(acc)
            }
            "mul" => parse_product(args),
            "neg" => {
                if args.len() != 1 {
                    return Err(Error::ExprJson("neg takes one argument".into()));
                }
                Ok(-&expr_from_json(&args[0])?)
            }
            "pow" => {
                if args.len() != 2 {
                    return Err(Error::ExprJson("pow takes two arguments".into()));
                }
                let base = expr_from_json(&args[0])?;
                let e = parse_exponent(&args[1])?;
                Ok(base.pow(e))
            }
            other => Err(Error::ExprJson(format!("unknown op `{other}`"))),
        };
    }
    if let Some(kind) = obj.get("sym") {
        let kind = match kind.as_str() {
            Some("c") => SymKind::C,
            Some("s") => SymKind::S,
            Some("a") => SymKind::A,
            Some("b") => SymKind::B,
            Some("x") => SymKind::X,
            other => return Err(Error::ExprJson(format!("unknown sym kind {other:?}"))),
        };
        let idx = obj
            .get("idx")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::ExprJson("sym node lacks idx".into()))?;
        return Ok(Expr::sym(Sym::new(kind, idx as u32)));
    }
    if let Some(c) = obj.get("coeff") {
        let parts = c
            .as_array()
            .filter(|a| a.len() == 4)
            .ok_or_else(|| Error::ExprJson("coeff must be a 4-array of rational strings".into()))?;
        let mut rats: Vec<Rat> = Vec::with_capacity(4);
        for p in parts {
            let s = p
                .as_str()
                .ok_or_else(|| Error::ExprJson("coeff entries must be strings".into()))?;
            rats.push(rat_from_str(s)?);
        }
        let c = Coeff::new(rats[0].clone(), rats[1].clone(), rats[2].clone(), rats[3].clone());
        return Ok(Expr::from_coeff(c));
    }
    Err(Error::ExprJson(format!("unrecognized node {v}")))
}

fn parse_exponent(v: &Value) -> Result<u32> {
    let e = expr_from_json(v)?;
    let c = e
        .as_constant()
        .ok_or_else(|| Error::ExprJson("exponent must be a numeric atom".into()))?;
    let r = c
        .as_rational()
        .cloned()
        .ok_or_else(|| Error::ExprJson("exponent must be rational".into()))?;
    if r.is_negative() || !r.denom().is_one() {
        return Err(Error::ExprJson(format!("exponent {r} is not a nonnegative integer")));
    }
    r.to_integer()
        .to_u32()
        .ok_or_else(|| Error::ExprJson("exponent too large".into()))
}

/// Products at any level: if some factor carries sum structure the node is a
/// genuine factorization and is kept as an overlay, so serialization of a
/// simplified expression round-trips with its factored rendering intact.
fn parse_product(args: &[Value]) -> Result<Expr> {
    let mut factors: Vec<(Expr, u32)> = Vec::with_capacity(args.len());
    for a in args {
        // Peel pow-with-structured-base into a (factor, multiplicity) pair.
        if let Some(obj) = a.as_object() {
            if obj.get("op").and_then(Value::as_str) == Some("pow") {
                if let Some(pargs) = obj.get("args").and_then(Value::as_array) {
                    if pargs.len() == 2 {
                        let base = expr_from_json(&pargs[0])?;
                        let e = parse_exponent(&pargs[1])?;
                        factors.push((base, e));
                        continue;
                    }
                }
            }
        }
        factors.push((expr_from_json(a)?, 1));
    }
    let mut product = Expr::one();
    for (f, m) in &factors {
        for _ in 0..*m {
            product = &product * f;
        }
    }
    let structured = factors.iter().any(|(f, _)| f.n_terms() > 1);
    if structured && !product.is_zero() {
        Ok(product.expanded().with_overlay(factors))
    } else {
        Ok(product)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_canonical() {
        let e = &(&Expr::sym(Sym::a(1)).pow(2) + &Expr::sym(Sym::b(1)).pow(2))
            - &Expr::from_coeff(Coeff::new(
                super::super::coeff::rat_of(1, 2),
                super::super::coeff::rat_of(-2, 3),
                super::super::coeff::rat_of(0, 1),
                super::super::coeff::rat_of(5, 7),
            ));
        let s1 = expr_to_string(&e);
        let parsed = expr_from_str(&s1).unwrap();
        assert_eq!(parsed, e);
        assert_eq!(expr_to_string(&parsed), s1);
    }

    #[test]
    fn round_trip_overlay() {
        let f1 = &Expr::sym(Sym::a(1)).pow(2) + &Expr::sym(Sym::b(1)).pow(2);
        let f2 = &Expr::sym(Sym::a(2)) - &Expr::sym(Sym::b(2));
        let e = (&(&f1 * &f1) * &f2).with_overlay(vec![(f1.clone(), 2), (f2.clone(), 1)]);
        let s1 = expr_to_string(&e);
        let parsed = expr_from_str(&s1).unwrap();
        assert_eq!(parsed, e);
        assert!(parsed.overlay().is_some());
        assert_eq!(expr_to_string(&parsed), s1);
    }

    #[test]
    fn parse_errors_are_descriptive() {
        assert!(expr_from_str("{\"op\":\"sin\",\"args\":[]}").is_err());
        assert!(expr_from_str("{\"sym\":\"q\",\"idx\":0}").is_err());
        assert!(expr_from_str("{\"coeff\":[\"1\",\"2\"]}").is_err());
    }
}
