//! Regression corpus: the six 3-qubit two-CNOT arrangements and the two
//! Hadamard+CNOT circuits, with the closed measurement forms pinned where
//! the rules fix them. Cases without pinned forms are validated against the
//! numeric oracle and the constraint normal form.

use super::circuit::Circuit;
use super::measure::MeasurementSpec;
use crate::expr::{Expr, Sym};
use crate::simplify::pythagorean::substitute_squares;

/// One pinned closed form: measure `spec` after the first `stage` gates and
/// expect `expected` (up to the constraint normal form) after simplification.
pub struct PinnedCheck {
    pub stage: usize,
    pub spec: MeasurementSpec,
    pub expected: Expr,
    pub note: &'static str,
}

pub struct CatalogCase {
    pub id: &'static str,
    pub circuit: Circuit,
    pub checks: Vec<PinnedCheck>,
    /// The two-gate block is a 3-cycle basis permutation (case 6).
    pub order_three_block: bool,
}

fn a(i: u32) -> Expr {
    Expr::sym(Sym::a(i))
}
fn b(i: u32) -> Expr {
    Expr::sym(Sym::b(i))
}
fn half() -> Expr {
    Expr::from_ratio(1, 2)
}

/// The CNOT measurement rule on the target's zero-probability terms:
/// a_t^2 -> a_c^2 a_t^2 + b_c^2 b_t^2 and b_t^2 -> a_c^2 b_t^2 + b_c^2 a_t^2.
pub fn cnot_rule(e: &Expr, control: u32, target: u32) -> Expr {
    let rule_a = &(&a(control).pow(2) * &a(target).pow(2)) + &(&b(control).pow(2) * &b(target).pow(2));
    let rule_b = &(&a(control).pow(2) * &b(target).pow(2)) + &(&b(control).pow(2) * &a(target).pow(2));
    substitute_squares(e, &[(Sym::a(target), rule_a), (Sym::b(target), rule_b)])
}

/// The Hadamard rule: a_q^2 -> 1/2 + a_q b_q, b_q^2 -> 1/2 - a_q b_q.
pub fn hadamard_rule(e: &Expr, qubit: u32) -> Expr {
    let ab = &a(qubit) * &b(qubit);
    substitute_squares(
        e,
        &[
            (Sym::a(qubit), &half() + &ab),
            (Sym::b(qubit), &half() - &ab),
        ],
    )
}

/// The full corpus.
pub fn case_catalog() -> Vec<CatalogCase> {
    let mut cases = Vec::new();

    // Case 1: CNOT(1->2), CNOT(2->3).
    let case1 = Circuit::new(3).separable().cnot(1, 2).cnot(2, 3);
    cases.push(CatalogCase {
        id: "case1",
        circuit: case1,
        checks: vec![
            PinnedCheck {
                stage: 1,
                spec: MeasurementSpec::prob_zero(2),
                expected: &(&a(1).pow(2) * &a(2).pow(2)) + &(&b(1).pow(2) * &b(2).pow(2)),
                note: "target rule a2^2 -> a1^2 a2^2 + b1^2 b2^2",
            },
            PinnedCheck {
                stage: 2,
                spec: MeasurementSpec::prob_zero(3),
                // Same rule at the second CNOT, composed through the already
                // transformed qubit-2 probabilities.
                expected: cnot_rule(&cnot_rule(&a(3).pow(2), 2, 3), 1, 2),
                note: "rule composition through the middle qubit",
            },
            PinnedCheck {
                stage: 0,
                spec: MeasurementSpec::prob_zero(1),
                expected: a(1).pow(2),
                note: "control marginal untouched (stage P0)",
            },
            PinnedCheck {
                stage: 1,
                spec: MeasurementSpec::prob_zero(1),
                expected: a(1).pow(2),
                note: "control marginal untouched (stage P1)",
            },
            PinnedCheck {
                stage: 2,
                spec: MeasurementSpec::prob_zero(1),
                expected: a(1).pow(2),
                note: "control marginal untouched (stage P2)",
            },
        ],
        order_three_block: false,
    });

    // Case 2: CNOT(1->2), CNOT(3->2) - both CNOTs target qubit 2.
    let case2 = Circuit::new(3).separable().cnot(1, 2).cnot(3, 2);
    cases.push(CatalogCase {
        id: "case2",
        circuit: case2,
        checks: vec![PinnedCheck {
            stage: 2,
            spec: MeasurementSpec::prob_zero(2),
            expected: cnot_rule(&cnot_rule(&a(2).pow(2), 1, 2), 3, 2),
            note: "composition of the rule for controls 1 then 3",
        }],
        order_three_block: false,
    });

    // Case 3: CNOT(2->3), CNOT(1->2).
    cases.push(CatalogCase {
        id: "case3",
        circuit: Circuit::new(3).separable().cnot(2, 3).cnot(1, 2),
        checks: vec![PinnedCheck {
            stage: 2,
            spec: MeasurementSpec::prob_zero(1),
            expected: a(1).pow(2),
            note: "topmost control stays a1^2",
        }],
        order_three_block: false,
    });

    // Case 4: CNOT(2->1), CNOT(2->3) - one control fans out.
    cases.push(CatalogCase {
        id: "case4",
        circuit: Circuit::new(3).separable().cnot(2, 1).cnot(2, 3),
        checks: vec![PinnedCheck {
            stage: 2,
            spec: MeasurementSpec::prob_zero(1),
            expected: cnot_rule(&a(1).pow(2), 2, 1),
            note: "qubit 1 is now a target of control 2",
        }],
        order_three_block: false,
    });

    // Case 5: CNOT(1->3), CNOT(2->3).
    cases.push(CatalogCase {
        id: "case5",
        circuit: Circuit::new(3).separable().cnot(1, 3).cnot(2, 3),
        checks: vec![PinnedCheck {
            stage: 2,
            spec: MeasurementSpec::prob_zero(3),
            expected: cnot_rule(&cnot_rule(&a(3).pow(2), 1, 3), 2, 3),
            note: "rule composition onto qubit 3",
        }],
        order_three_block: false,
    });

    // Case 6: CNOT(1->2), CNOT(2->1) - control and target reversed.
    let case6 = Circuit::new(3).separable().cnot(1, 2).cnot(2, 1);
    cases.push(CatalogCase {
        id: "case6",
        circuit: case6,
        checks: vec![PinnedCheck {
            stage: 2,
            spec: MeasurementSpec::prob_zero(1),
            expected: a(2).pow(2),
            note: "explicit simplification gives Q1 = a2^2",
        }],
        order_three_block: true,
    });

    // Hadamard+CNOT case 1: Bell-state generator.
    let bell = Circuit::new(2).separable().h(1).cnot(1, 2);
    cases.push(CatalogCase {
        id: "bell_gen",
        circuit: bell,
        checks: vec![
            PinnedCheck {
                stage: 1,
                spec: MeasurementSpec::prob_zero(1),
                expected: &half() + &(&a(1) * &b(1)),
                note: "Hadamard rule a1^2 -> 1/2 + a1 b1",
            },
            PinnedCheck {
                stage: 2,
                spec: MeasurementSpec::prob_zero(2),
                expected: &half()
                    + &(&(&a(1) * &b(1)) * &(&a(2).pow(2) - &b(2).pow(2))),
                note: "entangled rule 1/2 + a1 b1 (a2^2 - b2^2)",
            },
        ],
        order_three_block: false,
    });

    // Hadamard+CNOT case 2: the disentangling order.
    let bell_undo = Circuit::new(2).separable().cnot(1, 2).h(1);
    cases.push(CatalogCase {
        id: "bell_undo",
        circuit: bell_undo,
        checks: vec![PinnedCheck {
            stage: 2,
            spec: MeasurementSpec::prob_zero(1),
            expected: &half()
                + &(&(&a(1) * &b(1)) * &(&a(2) * &b(2))).scale(&crate::expr::Coeff::from_int(2)),
            note: "1/2 + 2 a1 b1 a2 b2, derived by hand and oracle-checked",
        }],
        order_three_block: false,
    });

    cases
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::measure::extract;
    use crate::simplify::{equivalent_mod_constraints, simplify, SimplifyConfig};

    #[test]
    fn pinned_forms_hold_after_simplification() {
        for case in case_catalog() {
            for check in &case.checks {
                let prefix = case.circuit.prefix(check.stage);
                let raw = extract(&prefix, &check.spec).unwrap();
                let simplified = simplify(&raw, &SimplifyConfig::default());
                assert!(
                    equivalent_mod_constraints(&simplified.expr, &check.expected),
                    "{} stage {} ({}): got {}, expected {}",
                    case.id,
                    check.stage,
                    check.note,
                    simplified.expr,
                    check.expected
                );
            }
        }
    }

    #[test]
    fn case2_composition_matches_extraction_exactly() {
        let case2 = &case_catalog()[1];
        let raw = extract(&case2.circuit, &MeasurementSpec::prob_zero(2)).unwrap();
        assert_eq!(raw, case2.checks[0].expected);
    }

    #[test]
    fn case6_q1_is_exactly_a2_squared() {
        let case6 = &case_catalog()[5];
        let raw = extract(&case6.circuit, &MeasurementSpec::prob_zero(1)).unwrap();
        let simplified = simplify(&raw, &SimplifyConfig::default());
        assert_eq!(simplified.expr, Expr::sym(Sym::a(2)).pow(2));
    }

    #[test]
    fn case1_stage1_rule_is_exact_structurally() {
        let case1 = &case_catalog()[0];
        let prefix = case1.circuit.prefix(1);
        let raw = extract(&prefix, &MeasurementSpec::prob_zero(2)).unwrap();
        let simplified = simplify(&raw, &SimplifyConfig::default());
        assert_eq!(simplified.expr, case1.checks[0].expected);
    }

    #[test]
    fn hadamard_rule_is_exact_structurally() {
        let bell = &case_catalog()[6];
        let prefix = bell.circuit.prefix(1);
        let raw = extract(&prefix, &MeasurementSpec::prob_zero(1)).unwrap();
        let simplified = simplify(&raw, &SimplifyConfig::default());
        let expected = &half() + &(&a(1) * &b(1));
        assert_eq!(simplified.expr, expected);
    }
}
