//! Measurement Simplification: a bounded, leafcount-guided rewrite engine.
//!
//! The driver runs greedy best-first passes of
//! `expand -> pythagorean_reduce (best-of-both per symbol) -> collect ->
//! factor_group`, scored by rendered leafcount. `collect` is merging of like
//! terms, which the canonical representation performs on construction.
//! Intensity is the maximum number of full passes; a wall-clock budget guards
//! pathological inputs and exceeded budgets return the best result so far
//! with a flag, never an error.

pub mod factor;
pub mod pythagorean;

use std::time::{Duration, Instant};

use crate::expr::coeff::Rat;
use crate::expr::render::leafcount;
use crate::expr::Expr;

pub use factor::factor_group;
pub use pythagorean::{
    constraint_normal_form, equivalent_mod_constraints, pythagorean_reduce, ReduceDirection,
};

/// Whether a rewrite preserves the value for all bindings or only for
/// bindings satisfying C^2+S^2 = 1 and A^2+B^2 = 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Soundness {
    IdentityPreserving,
    ConstraintUsing,
}

/// A named rewrite. The matcher is implicit: rules return the input when they
/// do not apply.
pub struct RewriteRule {
    pub name: &'static str,
    pub soundness: Soundness,
    apply: fn(&Expr) -> Expr,
}

impl RewriteRule {
    pub fn apply(&self, e: &Expr) -> Expr {
        (self.apply)(e)
    }
}

/// The rule set the driver is built from, exposed for soundness regression.
pub fn rules() -> &'static [RewriteRule] {
    &[
        RewriteRule {
            name: "expand",
            soundness: Soundness::IdentityPreserving,
            apply: |e| e.expanded(),
        },
        RewriteRule {
            name: "pythagorean-sin",
            soundness: Soundness::ConstraintUsing,
            apply: |e| pythagorean_reduce(e, ReduceDirection::EliminateSin),
        },
        RewriteRule {
            name: "pythagorean-cos",
            soundness: Soundness::ConstraintUsing,
            apply: |e| pythagorean_reduce(e, ReduceDirection::EliminateCos),
        },
        RewriteRule {
            name: "pythagorean-best",
            soundness: Soundness::ConstraintUsing,
            apply: |e| pythagorean_reduce(e, ReduceDirection::BestOfBoth),
        },
        RewriteRule {
            name: "factor-group",
            soundness: Soundness::IdentityPreserving,
            apply: |e| factor_group(e),
        },
    ]
}

/// Simplification intensity and budget.
#[derive(Clone, Debug)]
pub struct SimplifyConfig {
    /// Maximum number of full passes; 0 returns the input unchanged.
    pub intensity: u32,
    /// Wall-clock budget per expression.
    pub budget: Duration,
    /// Record the rule-application trace.
    pub trace: bool,
}

impl Default for SimplifyConfig {
    fn default() -> Self {
        SimplifyConfig {
            intensity: 4,
            budget: Duration::from_secs(10),
            trace: false,
        }
    }
}

impl SimplifyConfig {
    pub fn with_intensity(intensity: u32) -> Self {
        SimplifyConfig {
            intensity,
            ..Default::default()
        }
    }

    pub fn budget_secs(mut self, secs: f64) -> Self {
        self.budget = Duration::from_secs_f64(secs);
        self
    }

    pub fn traced(mut self) -> Self {
        self.trace = true;
        self
    }
}

/// One trace entry: leafcount after a rule application.
#[derive(Clone, Debug, serde::Serialize)]
pub struct TraceEvent {
    pub pass: u32,
    pub rule: &'static str,
    pub leafcount: u64,
}

/// Simplification result: the expression plus run metadata.
#[derive(Clone, Debug)]
pub struct Simplified {
    pub expr: Expr,
    pub budget_exceeded: bool,
    pub passes_completed: u32,
    pub trace: Vec<TraceEvent>,
}

/// Simplify `e` under `cfg`. The result evaluates equal to `e` for all
/// constraint-respecting bindings and never renders larger.
pub fn simplify(e: &Expr, cfg: &SimplifyConfig) -> Simplified {
    let start = Instant::now();
    let deadline = start + cfg.budget;
    let mut trace = Vec::new();
    let input_lc = leafcount(e);
    if cfg.trace {
        trace.push(TraceEvent {
            pass: 0,
            rule: "input",
            leafcount: input_lc,
        });
    }
    // Degenerate inputs short-circuit to identity.
    if cfg.intensity == 0 || e.n_terms() <= 1 {
        return Simplified {
            expr: e.clone(),
            budget_exceeded: false,
            passes_completed: 0,
            trace,
        };
    }

    let mut best = e.clone();
    let mut best_lc = input_lc;
    let mut budget_exceeded = false;
    let mut passes_completed = 0;

    for pass in 1..=cfg.intensity {
        if Instant::now() > deadline {
            budget_exceeded = true;
            break;
        }
        let cur = best.expanded();
        let reduced =
            pythagorean::pythagorean_reduce_budgeted(&cur, ReduceDirection::BestOfBoth, Some(deadline));
        if cfg.trace {
            trace.push(TraceEvent {
                pass,
                rule: "pythagorean-best",
                leafcount: leafcount(&reduced),
            });
        }
        if Instant::now() > deadline {
            budget_exceeded = true;
            // Keep the reduced form if it already improves.
            if leafcount(&reduced) < best_lc {
                best = reduced;
            }
            break;
        }
        let factored = factor_group(&reduced);
        let cand_lc = leafcount(&factored);
        if cfg.trace {
            trace.push(TraceEvent {
                pass,
                rule: "factor-group",
                leafcount: cand_lc,
            });
        }
        passes_completed = pass;
        if cand_lc < best_lc {
            best = factored;
            best_lc = cand_lc;
        } else {
            break; // fixpoint
        }
    }

    Simplified {
        expr: best,
        budget_exceeded,
        passes_completed,
        trace,
    }
}

/// leafcount(before) / leafcount(after) as an exact ratio.
pub fn improvement_factor(before: &Expr, after: &Expr) -> Rat {
    Rat::new(leafcount(before).into(), leafcount(after).into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{Bindings, Sym};
    use num_traits::ToPrimitive;

    fn a(i: u32) -> Expr {
        Expr::sym(Sym::a(i))
    }
    fn b(i: u32) -> Expr {
        Expr::sym(Sym::b(i))
    }

    /// (a1^2+b1^2)(a2^2+b2^2) expanded simplifies to 1.
    #[test]
    fn two_pair_product_collapses() {
        let e = (&(&a(1).pow(2) + &b(1).pow(2)) * &(&a(2).pow(2) + &b(2).pow(2))).expanded();
        let r = simplify(&e, &SimplifyConfig::default());
        assert_eq!(r.expr, Expr::one());
        assert!(!r.budget_exceeded);
    }

    #[test]
    fn intensity_zero_is_identity() {
        let e = &(&a(1).pow(2) + &b(1).pow(2)) + &Expr::one();
        let r = simplify(&e, &SimplifyConfig::with_intensity(0));
        assert_eq!(r.expr, e);
        assert_eq!(r.passes_completed, 0);
    }

    #[test]
    fn result_never_renders_larger() {
        let e = &(&a(1).pow(2) * &a(2).pow(2)) + &(&b(1).pow(2) * &b(2).pow(2));
        let r = simplify(&e, &SimplifyConfig::default());
        assert!(leafcount(&r.expr) <= leafcount(&e));
        assert_eq!(r.expr, e); // already minimal
    }

    #[test]
    fn idempotent_at_fixpoint() {
        let e = (&(&a(1).pow(2) + &b(1).pow(2)) * &(&a(2).pow(2) + &(&b(2) * &b(2)))).expanded();
        let cfg = SimplifyConfig::default();
        let once = simplify(&e, &cfg);
        assert!(!once.budget_exceeded);
        let twice = simplify(&once.expr, &cfg);
        assert_eq!(once.expr, twice.expr);
    }

    #[test]
    fn improvement_factor_ratio() {
        // leafcounts 2273 and 757 give the ratio 2273/757 ~ 3.003
        let f = Rat::new(2273.into(), 757.into());
        assert!((f.to_f64().unwrap() - 3.003).abs() < 5e-4);
        let e = a(1);
        assert_eq!(improvement_factor(&e, &e), Rat::new(1.into(), 1.into()));
    }

    #[test]
    fn rule_soundness_under_constraints() {
        // Every rule preserves values at constraint-respecting bindings.
        let e = &(&(&a(1).pow(4) * &b(2).pow(2)) + &(&a(1).pow(2) * &b(1).pow(3)))
            + &(&Expr::sym(Sym::c(0)).pow(2) * &Expr::sym(Sym::s(0)).pow(4));
        for rule in rules() {
            let r = rule.apply(&e);
            for trial in 0..20 {
                let t = 0.17 + trial as f64 * 0.31;
                let u = 0.53 + trial as f64 * 0.19;
                let v = 1.1 + trial as f64 * 0.07;
                let mut bind = Bindings::new();
                bind.set_angle(0, t).set_input(1, u).set_input(2, v);
                let before = crate::expr::eval_numeric(&e, &bind).unwrap();
                let after = crate::expr::eval_numeric(&r, &bind).unwrap();
                assert!(
                    (before - after).norm() <= 1e-10 * before.norm().max(1.0),
                    "rule {} broke value: {} vs {}",
                    rule.name,
                    before,
                    after
                );
            }
        }
    }
}
