//! Canonical symbolic expressions over circuit parameters: the coefficient
//! field, constrained symbols, sparse polynomials, the leafcount metric,
//! numeric evaluation, plan compilation, and JSON serialization.

pub mod coeff;
pub mod eval;
pub mod json;
pub mod plan;
pub mod poly;
pub mod render;
pub mod sym;

pub use coeff::{Coeff, CoeffUnit, Rat};
pub use eval::{eval_numeric, Bindings};
pub use json::{expr_from_json, expr_from_str, expr_to_json, expr_to_string};
pub use plan::{compile, EvalPlan, PlanOp};
pub use poly::{Expr, Monomial};
pub use render::{leafcount, render, Node};
pub use sym::{Sym, SymKind};
