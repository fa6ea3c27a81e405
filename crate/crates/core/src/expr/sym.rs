//! Constrained trigonometric symbols.
//!
//! Rotation gates contribute half-angle pairs `C(k) = cos(theta_k/2)`,
//! `S(k) = sin(theta_k/2)`; separable inputs contribute the real amplitude
//! pairs `A(i)`, `B(i)` (probability of qubit i measuring 0 resp. 1 is
//! A(i)^2 resp. B(i)^2); feature maps contribute raw data symbols `X(d)`.
//! The pairs satisfy C^2 + S^2 = 1 and A^2 + B^2 = 1, which is what the
//! simplifier exploits.
//!
//! Symbols are plain value types: structurally equal symbols are identical,
//! and ordering is a pure function, so no shared interner state exists. The
//! global order is C(0) < S(0) < C(1) < S(1) < ... < A(1) < B(1) < ... < X(0) < ...

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymKind {
    /// cos(theta_k / 2) of circuit parameter k.
    C,
    /// sin(theta_k / 2) of circuit parameter k.
    S,
    /// Input-state amplitude a_i of qubit i (1-based, as in the rules' a_i).
    A,
    /// Input-state amplitude b_i of qubit i.
    B,
    /// Data feature x_d.
    X,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Sym {
    pub kind: SymKind,
    pub index: u32,
}

impl Sym {
    pub const fn new(kind: SymKind, index: u32) -> Self {
        Sym { kind, index }
    }

    pub const fn c(k: u32) -> Self {
        Sym::new(SymKind::C, k)
    }
    pub const fn s(k: u32) -> Self {
        Sym::new(SymKind::S, k)
    }
    pub const fn a(i: u32) -> Self {
        Sym::new(SymKind::A, i)
    }
    pub const fn b(i: u32) -> Self {
        Sym::new(SymKind::B, i)
    }
    pub const fn x(d: u32) -> Self {
        Sym::new(SymKind::X, d)
    }

    /// The partner symbol under the Pythagorean constraint, if any:
    /// C(k) <-> S(k), A(i) <-> B(i). X symbols are unconstrained.
    pub fn partner(&self) -> Option<Sym> {
        match self.kind {
            SymKind::C => Some(Sym::s(self.index)),
            SymKind::S => Some(Sym::c(self.index)),
            SymKind::A => Some(Sym::b(self.index)),
            SymKind::B => Some(Sym::a(self.index)),
            SymKind::X => None,
        }
    }

    /// True for the sine-like member of a constrained pair (S or B).
    pub fn is_sine_like(&self) -> bool {
        matches!(self.kind, SymKind::S | SymKind::B)
    }

    /// Total-order key: interleaves C/S per parameter, then A/B per qubit, then X.
    fn order_key(&self) -> (u8, u32, u8) {
        match self.kind {
            SymKind::C => (0, self.index, 0),
            SymKind::S => (0, self.index, 1),
            SymKind::A => (1, self.index, 0),
            SymKind::B => (1, self.index, 1),
            SymKind::X => (2, self.index, 0),
        }
    }

    pub fn kind_str(&self) -> &'static str {
        match self.kind {
            SymKind::C => "c",
            SymKind::S => "s",
            SymKind::A => "a",
            SymKind::B => "b",
            SymKind::X => "x",
        }
    }
}

impl PartialOrd for Sym {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Sym {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind_str(), self.index)
    }
}

impl fmt::Debug for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn global_order_interleaves_pairs() {
        let mut syms = vec![Sym::x(0), Sym::b(1), Sym::s(0), Sym::c(1), Sym::a(1), Sym::c(0), Sym::s(1)];
        syms.sort();
        assert_eq!(
            syms,
            vec![Sym::c(0), Sym::s(0), Sym::c(1), Sym::s(1), Sym::a(1), Sym::b(1), Sym::x(0)]
        );
    }

    #[test]
    fn partners() {
        assert_eq!(Sym::c(3).partner(), Some(Sym::s(3)));
        assert_eq!(Sym::b(2).partner(), Some(Sym::a(2)));
        assert_eq!(Sym::x(0).partner(), None);
    }
}
