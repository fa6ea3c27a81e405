//! Compilation of expressions to straight-line evaluation programs.
//!
//! A plan is a deterministic sequence of register ops built by hash-consing
//! the rendered expression tree into a DAG: every common subexpression
//! (shared power products, repeated overlay factors, equal subtrees) is
//! computed exactly once. Register scratch is caller-provided so one plan
//! can run on many threads concurrently.

use std::collections::HashMap;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::coeff::Coeff;
use super::eval::Bindings;
use super::poly::Expr;
use super::render::{render, Node};
use super::sym::Sym;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum PlanOp {
    /// Load the constant into this op's register.
    Const(Complex64),
    /// Load input slot `.0`.
    Input(usize),
    Add(usize, usize),
    Mul(usize, usize),
    Neg(usize),
}

#[derive(Clone, Debug)]
pub struct EvalPlan {
    ops: Vec<PlanOp>,
    /// Input slot order: slot i carries the value of `inputs[i]`.
    inputs: Vec<Sym>,
    output: usize,
}

impl EvalPlan {
    pub fn op_count(&self) -> usize {
        self.ops.len()
    }

    pub fn inputs(&self) -> &[Sym] {
        &self.inputs
    }

    /// Fresh scratch sized for this plan.
    pub fn scratch(&self) -> Vec<Complex64> {
        vec![Complex64::new(0.0, 0.0); self.ops.len()]
    }

    /// Execute with caller-provided scratch and slot-ordered input values.
    pub fn run(&self, regs: &mut Vec<Complex64>, input_values: &[Complex64]) -> Complex64 {
        debug_assert_eq!(input_values.len(), self.inputs.len());
        regs.resize(self.ops.len(), Complex64::new(0.0, 0.0));
        for (i, op) in self.ops.iter().enumerate() {
            regs[i] = match *op {
                PlanOp::Const(c) => c,
                PlanOp::Input(slot) => input_values[slot],
                PlanOp::Add(a, b) => regs[a] + regs[b],
                PlanOp::Mul(a, b) => regs[a] * regs[b],
                PlanOp::Neg(a) => -regs[a],
            };
        }
        regs[self.output]
    }

    /// Map bindings onto this plan's input slots.
    pub fn slot_values(&self, bindings: &Bindings) -> Result<Vec<Complex64>> {
        self.inputs
            .iter()
            .map(|&s| bindings.get(s).ok_or(Error::UnboundSymbol(s)))
            .collect()
    }

    /// Convenience one-shot execution (allocates scratch).
    pub fn execute(&self, bindings: &Bindings) -> Result<Complex64> {
        let values = self.slot_values(bindings)?;
        let mut regs = self.scratch();
        Ok(self.run(&mut regs, &values))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum NodeKey {
    Const(Coeff),
    Input(Sym),
    Add(usize, usize),
    Mul(usize, usize),
    Neg(usize),
}

struct Builder {
    ops: Vec<PlanOp>,
    memo: HashMap<NodeKey, usize>,
    inputs: Vec<Sym>,
    slot_of: HashMap<Sym, usize>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            ops: Vec::new(),
            memo: HashMap::new(),
            inputs: Vec::new(),
            slot_of: HashMap::new(),
        }
    }

    fn intern(&mut self, key: NodeKey) -> usize {
        if let Some(&id) = self.memo.get(&key) {
            return id;
        }
        let op = match &key {
            NodeKey::Const(c) => PlanOp::Const(c.to_complex()),
            NodeKey::Input(s) => {
                let slot = *self.slot_of.entry(*s).or_insert_with(|| {
                    self.inputs.push(*s);
                    self.inputs.len() - 1
                });
                PlanOp::Input(slot)
            }
            NodeKey::Add(a, b) => PlanOp::Add(*a, *b),
            NodeKey::Mul(a, b) => PlanOp::Mul(*a, *b),
            NodeKey::Neg(a) => PlanOp::Neg(*a),
        };
        let id = self.ops.len();
        self.ops.push(op);
        self.memo.insert(key, id);
        id
    }

    fn constant(&mut self, c: Coeff) -> usize {
        self.intern(NodeKey::Const(c))
    }

    fn add(&mut self, a: usize, b: usize) -> usize {
        self.intern(NodeKey::Add(a.min(b), a.max(b)))
    }

    fn mul(&mut self, a: usize, b: usize) -> usize {
        self.intern(NodeKey::Mul(a.min(b), a.max(b)))
    }

    fn build(&mut self, node: &Node) -> usize {
        match node {
            Node::Sym(s) => self.intern(NodeKey::Input(*s)),
            Node::Rat(r) => self.constant(Coeff::from_rat(r.clone())),
            Node::I => self.constant(Coeff::i()),
            Node::Sqrt2 => self.constant(Coeff::sqrt2()),
            Node::Neg(x) => {
                let a = self.build(x);
                self.intern(NodeKey::Neg(a))
            }
            Node::Sum(ch) => {
                let ids: Vec<usize> = ch.iter().map(|c| self.build(c)).collect();
                ids.into_iter()
                    .reduce(|a, b| self.add(a, b))
                    .unwrap_or_else(|| self.constant(Coeff::zero()))
            }
            Node::Product(ch) => {
                let ids: Vec<usize> = ch.iter().map(|c| self.build(c)).collect();
                ids.into_iter()
                    .reduce(|a, b| self.mul(a, b))
                    .unwrap_or_else(|| self.constant(Coeff::one()))
            }
            Node::Power(base, exp) => {
                let b = self.build(base);
                let e = match &**exp {
                    Node::Rat(r) => r.to_integer().to_u32().unwrap_or(0),
                    _ => unreachable!("rendered exponents are integer atoms"),
                };
                if e == 0 {
                    return self.constant(Coeff::one());
                }
                let mut acc = b;
                for _ in 1..e {
                    acc = self.mul(acc, b);
                }
                acc
            }
        }
    }
}

/// Compile `e` to an evaluation plan over its rendered (overlay-aware) form.
pub fn compile(e: &Expr) -> EvalPlan {
    let tree = render(e);
    let mut b = Builder::new();
    let output = b.build(&tree);
    EvalPlan {
        ops: b.ops,
        inputs: b.inputs,
        output,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::eval::eval_numeric;

    #[test]
    fn constant_plan_is_single_op() {
        let p = compile(&Expr::from_ratio(3, 4));
        assert_eq!(p.op_count(), 1);
        let v = p.execute(&Bindings::new()).unwrap();
        assert!((v.re - 0.75).abs() < 1e-15);
    }

    #[test]
    fn overlay_factor_computed_once() {
        let f = &Expr::sym(Sym::a(1)) + &Expr::sym(Sym::b(1));
        let sq = (&f * &f).with_overlay(vec![(f.clone(), 2)]);
        let p = compile(&sq);
        // inputs a1, b1; add; mul(sum,sum) -> 4 ops total
        assert_eq!(p.op_count(), 4);
        let mut b = Bindings::new();
        b.set_real(Sym::a(1), 0.3).set_real(Sym::b(1), 0.4);
        let v = p.execute(&b).unwrap();
        assert!((v.re - 0.49).abs() < 1e-12);
    }

    #[test]
    fn plan_matches_direct_eval() {
        // (a1 + 2 b1)^3 - c0^2 * s0, expanded canonically
        let a = Expr::sym(Sym::a(1));
        let b = Expr::sym(Sym::b(1));
        let c = Expr::sym(Sym::c(0));
        let s = Expr::sym(Sym::s(0));
        let e = &(&a + &b.scale(&Coeff::from_int(2))).pow(3) - &(&c.pow(2) * &s);
        let p = compile(&e);
        let mut bind = Bindings::new();
        bind.set_real(Sym::a(1), 0.21)
            .set_real(Sym::b(1), -0.57)
            .set_real(Sym::c(0), 0.83)
            .set_real(Sym::s(0), 0.31);
        let direct = eval_numeric(&e, &bind).unwrap();
        let planned = p.execute(&bind).unwrap();
        assert!((direct - planned).norm() < 1e-12 * direct.norm().max(1.0));
    }
}
