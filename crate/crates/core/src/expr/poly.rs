//! Canonical symbolic expressions.
//!
//! An `Expr` is a sparse multivariate polynomial over [`Coeff`] in the
//! constrained symbols of [`Sym`], stored as a vector of (monomial,
//! coefficient) terms sorted ascending in graded-lexicographic order under
//! the global symbol order. Zero coefficients are never stored, so two
//! expressions denoting the same polynomial are structurally identical.
//! Graded-lex order is multiplication-invariant, which keeps monomial
//! scaling order-preserving and makes sums linear merges. Equality and
//! hashing ignore the optional factored overlay, which is a rendering
//! attachment produced by the simplifier: a product of factor expressions
//! (with multiplicities) whose expansion equals the canonical form.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use super::coeff::Coeff;
use super::sym::Sym;

/// Power product over symbols: sorted `(symbol, exponent)` pairs with
/// exponents >= 1 and a cached total degree.
#[derive(Clone, Default)]
pub struct Monomial {
    degree: u64,
    pairs: Vec<(Sym, u32)>,
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.pairs == other.pairs
    }
}
impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.pairs.hash(state);
    }
}

impl Monomial {
    fn from_sorted(pairs: Vec<(Sym, u32)>) -> Self {
        debug_assert!(pairs.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(pairs.iter().all(|(_, e)| *e > 0));
        let degree = pairs.iter().map(|(_, e)| *e as u64).sum();
        Monomial { degree, pairs }
    }

    pub fn unit() -> Self {
        Monomial::default()
    }

    pub fn sym(s: Sym) -> Self {
        Monomial::from_sorted(vec![(s, 1)])
    }

    pub fn sym_pow(s: Sym, e: u32) -> Self {
        if e == 0 {
            Monomial::unit()
        } else {
            Monomial::from_sorted(vec![(s, e)])
        }
    }

    /// Build from unsorted pairs; merges duplicates, drops zero exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Sym, u32)>) -> Self {
        let mut m: std::collections::BTreeMap<Sym, u64> = std::collections::BTreeMap::new();
        for (s, e) in pairs {
            if e > 0 {
                *m.entry(s).or_insert(0) += e as u64;
            }
        }
        Monomial::from_sorted(
            m.into_iter()
                .map(|(s, e)| (s, u32::try_from(e).expect("exponent overflow")))
                .collect(),
        )
    }

    pub fn is_unit(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn exponent_of(&self, s: Sym) -> u32 {
        self.pairs
            .iter()
            .find(|(t, _)| *t == s)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn pairs(&self) -> &[(Sym, u32)] {
        &self.pairs
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.pairs.len() + other.pairs.len());
        let (mut i, mut j) = (0, 0);
        while i < self.pairs.len() && j < other.pairs.len() {
            match self.pairs[i].0.cmp(&other.pairs[j].0) {
                Ordering::Less => {
                    out.push(self.pairs[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.pairs[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((
                        self.pairs[i].0,
                        self.pairs[i].1.checked_add(other.pairs[j].1).expect("exponent overflow"),
                    ));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.pairs[i..]);
        out.extend_from_slice(&other.pairs[j..]);
        Monomial {
            degree: self.degree + other.degree,
            pairs: out,
        }
    }

    /// Exact quotient self / other, or None when some exponent would go negative.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.degree > self.degree {
            return None;
        }
        let mut out = Vec::with_capacity(self.pairs.len());
        let mut j = 0;
        for &(s, e) in &self.pairs {
            let mut rem = e;
            if j < other.pairs.len() && other.pairs[j].0 < s {
                return None; // divisor has a symbol self lacks
            }
            if j < other.pairs.len() && other.pairs[j].0 == s {
                if other.pairs[j].1 > e {
                    return None;
                }
                rem = e - other.pairs[j].1;
                j += 1;
            }
            if rem > 0 {
                out.push((s, rem));
            }
        }
        if j < other.pairs.len() {
            return None;
        }
        Some(Monomial {
            degree: self.degree - other.degree,
            pairs: out,
        })
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.pairs.len() && j < other.pairs.len() {
            match self.pairs[i].0.cmp(&other.pairs[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    out.push((self.pairs[i].0, self.pairs[i].1.min(other.pairs[j].1)));
                    i += 1;
                    j += 1;
                }
            }
        }
        Monomial::from_sorted(out)
    }

    /// Remove symbol `s` entirely.
    pub fn without(&self, s: Sym) -> Monomial {
        match self.pairs.iter().position(|(t, _)| *t == s) {
            None => self.clone(),
            Some(k) => {
                let mut pairs = self.pairs.clone();
                let (_, e) = pairs.remove(k);
                Monomial {
                    degree: self.degree - e as u64,
                    pairs,
                }
            }
        }
    }

    /// All exponents even (a perfect square as a power product)?
    pub fn is_square(&self) -> bool {
        self.pairs.iter().all(|(_, e)| e % 2 == 0)
    }

    pub fn sqrt(&self) -> Option<Monomial> {
        if self.is_square() {
            Some(Monomial {
                degree: self.degree / 2,
                pairs: self.pairs.iter().map(|&(s, e)| (s, e / 2)).collect(),
            })
        } else {
            None
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded lexicographic order: total degree first, then lex on exponent
/// vectors under the global symbol order (higher exponent on an earlier
/// symbol is larger).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.pairs.get(i), other.pairs.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(sa, ea)), Some(&(sb, eb))) => match sa.cmp(&sb) {
                    // Earlier symbol present only on one side: that side has a
                    // positive exponent where the other has zero -> larger.
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(&eb) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        ord => return ord,
                    },
                },
            }
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        for (k, (s, e)) in self.pairs.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Canonical symbolic expression. See module docs.
#[derive(Clone, Default)]
pub struct Expr {
    /// Sorted ascending by monomial (graded lex); no zero coefficients.
    terms: Vec<(Monomial, Coeff)>,
    overlay: Option<Vec<(Expr, u32)>>,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}
impl Eq for Expr {}

impl Hash for Expr {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl PartialOrd for Expr {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Expr {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms.cmp(&other.terms)
    }
}

impl Expr {
    pub fn zero() -> Self {
        Expr::default()
    }

    pub fn one() -> Self {
        Expr::from_coeff(Coeff::one())
    }

    pub fn from_coeff(c: Coeff) -> Self {
        let mut terms = Vec::new();
        if !c.is_zero() {
            terms.push((Monomial::unit(), c));
        }
        Expr { terms, overlay: None }
    }

    pub fn from_int(n: i64) -> Self {
        Expr::from_coeff(Coeff::from_int(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Expr::from_coeff(Coeff::from_ratio(n, d))
    }

    pub fn sym(s: Sym) -> Self {
        Expr {
            terms: vec![(Monomial::sym(s), Coeff::one())],
            overlay: None,
        }
    }

    pub fn sym_pow(s: Sym, e: u32) -> Self {
        Expr {
            terms: vec![(Monomial::sym_pow(s, e), Coeff::one())],
            overlay: None,
        }
    }

    pub fn monomial(m: Monomial, c: Coeff) -> Self {
        let mut terms = Vec::new();
        if !c.is_zero() {
            terms.push((m, c));
        }
        Expr { terms, overlay: None }
    }

    fn from_sorted(terms: Vec<(Monomial, Coeff)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Expr { terms, overlay: None }
    }

    /// Sort an arbitrary term list, combine like monomials, drop zeros.
    pub fn collect_terms(mut raw: Vec<(Monomial, Coeff)>) -> Self {
        raw.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            if c.is_zero() {
                continue;
            }
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => {
                    *lc = &*lc + &c;
                }
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Expr { terms: out, overlay: None }
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coeff)> + ExactSizeIterator {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    pub fn monomials(&self) -> impl DoubleEndedIterator<Item = &Monomial> + ExactSizeIterator {
        self.terms.iter().map(|(m, _)| m)
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coeff)> {
        self.terms
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_unit() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_unit())
    }

    /// Constant value when the expression is a constant.
    pub fn as_constant(&self) -> Option<Coeff> {
        if self.terms.is_empty() {
            return Some(Coeff::zero());
        }
        if self.terms.len() == 1 && self.terms[0].0.is_unit() {
            return Some(self.terms[0].1.clone());
        }
        None
    }

    /// Single `coeff * monomial` term, if that is all there is.
    pub fn as_single_term(&self) -> Option<(&Monomial, &Coeff)> {
        if self.terms.len() == 1 {
            Some((&self.terms[0].0, &self.terms[0].1))
        } else {
            None
        }
    }

    pub fn overlay(&self) -> Option<&[(Expr, u32)]> {
        self.overlay.as_deref()
    }

    /// Attach a factored overlay. Callers guarantee the expanded product of
    /// the factors equals the canonical form; debug builds verify it.
    pub fn with_overlay(mut self, factors: Vec<(Expr, u32)>) -> Self {
        debug_assert_eq!(
            {
                let mut p = Expr::one();
                for (f, m) in &factors {
                    for _ in 0..*m {
                        p = &p * f;
                    }
                }
                p.terms
            },
            self.terms,
            "overlay does not expand to the canonical form"
        );
        self.overlay = Some(factors);
        self
    }

    /// Drop the factored overlay (the simplifier's `expand` step).
    pub fn expanded(&self) -> Expr {
        Expr {
            terms: self.terms.clone(),
            overlay: None,
        }
    }

    /// Total degree.
    pub fn degree(&self) -> u64 {
        self.terms.last().map(|(m, _)| m.degree()).unwrap_or(0)
    }

    pub fn max_degree_in(&self, s: Sym) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponent_of(s)).max().unwrap_or(0)
    }

    /// Distinct symbols, in global order.
    pub fn symbols(&self) -> Vec<Sym> {
        let mut set = std::collections::BTreeSet::new();
        for (m, _) in &self.terms {
            for (s, _) in m.pairs() {
                set.insert(*s);
            }
        }
        set.into_iter().collect()
    }

    pub fn pow(&self, e: u32) -> Expr {
        let mut acc = Expr::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficient-wise complex conjugate. All symbols are real by
    /// construction, so this is full conjugation.
    pub fn conj(&self) -> Expr {
        Expr::from_sorted(self.terms.iter().map(|(m, c)| (m.clone(), c.conj())).collect())
    }

    /// Real part: coefficients Re(c), zero terms dropped.
    pub fn real_part(&self) -> Expr {
        Expr::from_sorted(
            self.terms
                .iter()
                .filter_map(|(m, c)| {
                    let r = c.real_part();
                    (!r.is_zero()).then(|| (m.clone(), r))
                })
                .collect(),
        )
    }

    /// Imaginary part as a real expression: coefficients Im(c).
    pub fn imag_part(&self) -> Expr {
        Expr::from_sorted(
            self.terms
                .iter()
                .filter_map(|(m, c)| {
                    let r = c.imag_part();
                    (!r.is_zero()).then(|| (m.clone(), r))
                })
                .collect(),
        )
    }

    pub fn scale(&self, c: &Coeff) -> Expr {
        if c.is_zero() {
            return Expr::zero();
        }
        Expr::from_sorted(self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect())
    }

    /// Multiply by a single term. Graded-lex order is multiplication
    /// invariant, so the result stays sorted.
    pub fn mul_monomial(&self, m: &Monomial, c: &Coeff) -> Expr {
        if c.is_zero() {
            return Expr::zero();
        }
        Expr::from_sorted(self.terms.iter().map(|(t, k)| (t.mul(m), k * c)).collect())
    }

    /// Exact quotient self / m, when every monomial is divisible.
    pub fn div_monomial_exact(&self, m: &Monomial) -> Option<Expr> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (t, c) in &self.terms {
            out.push((t.div(m)?, c.clone()));
        }
        Some(Expr::from_sorted(out))
    }

    /// Leading term under the graded lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.last().map(|(m, c)| (m, c))
    }

    /// Exact polynomial division: `self = q * divisor` with no remainder, or None.
    pub fn div_exact(&self, divisor: &Expr) -> Option<Expr> {
        if divisor.is_zero() {
            return None;
        }
        if let Some(c) = divisor.as_constant() {
            let inv = c.inv().ok()?;
            return Some(self.scale(&inv));
        }
        let (dm, dc) = divisor.leading_term().expect("nonzero divisor");
        let dc_inv = dc.inv().ok()?;
        let mut rem = self.expanded();
        let mut q_desc: Vec<(Monomial, Coeff)> = Vec::new();
        while !rem.is_zero() {
            let (lm, lc) = rem.leading_term().expect("nonzero remainder");
            let qm = lm.div(dm)?;
            let qc = lc * &dc_inv;
            rem.absorb(-&divisor.mul_monomial(&qm, &qc));
            // Leading monomials strictly decrease, so the quotient arrives
            // in descending order.
            q_desc.push((qm, qc));
        }
        q_desc.reverse();
        Some(Expr::from_sorted(q_desc))
    }

    /// In-place sum, moving `rhs`'s terms: a linear sorted merge.
    pub fn absorb(&mut self, rhs: Expr) {
        self.overlay = None;
        if rhs.terms.is_empty() {
            return;
        }
        if self.terms.is_empty() {
            self.terms = rhs.terms;
            return;
        }
        self.terms = merge_terms(std::mem::take(&mut self.terms), rhs.terms);
    }
}

fn merge_terms(a: Vec<(Monomial, Coeff)>, b: Vec<(Monomial, Coeff)>) -> Vec<(Monomial, Coeff)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ia = a.into_iter().peekable();
    let mut ib = b.into_iter().peekable();
    loop {
        let ord = match (ia.peek(), ib.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (Some((ma, _)), Some((mb, _))) => ma.cmp(mb),
        };
        match ord {
            Ordering::Less => out.push(ia.next().unwrap()),
            Ordering::Greater => out.push(ib.next().unwrap()),
            Ordering::Equal => {
                let (m, ca) = ia.next().unwrap();
                let (_, cb) = ib.next().unwrap();
                let sum = &ca + &cb;
                if !sum.is_zero() {
                    out.push((m, sum));
                }
            }
        }
    }
    out
}

impl std::ops::AddAssign<&Expr> for Expr {
    fn add_assign(&mut self, rhs: &Expr) {
        self.absorb(rhs.expanded());
    }
}

impl std::ops::AddAssign<Expr> for Expr {
    fn add_assign(&mut self, rhs: Expr) {
        self.absorb(rhs);
    }
}

impl Add for &Expr {
    type Output = Expr;
    fn add(self, rhs: &Expr) -> Expr {
        Expr::from_sorted(merge_terms(self.terms.clone(), rhs.terms.clone()))
    }
}

impl Sub for &Expr {
    type Output = Expr;
    fn sub(self, rhs: &Expr) -> Expr {
        Expr::from_sorted(merge_terms(self.terms.clone(), (-rhs).terms))
    }
}

impl Neg for &Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::from_sorted(self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect())
    }
}

impl Mul for &Expr {
    type Output = Expr;
    fn mul(self, rhs: &Expr) -> Expr {
        if self.is_zero() || rhs.is_zero() {
            return Expr::zero();
        }
        // Prefer the order-preserving single-term path.
        if let Some((m, c)) = self.as_single_term() {
            return rhs.mul_monomial(m, c);
        }
        if let Some((m, c)) = rhs.as_single_term() {
            return self.mul_monomial(m, c);
        }
        let (small, big) = if self.n_terms() <= rhs.n_terms() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        if small.n_terms() == 2 {
            // Binomial: two order-preserving scalings and one merge.
            let (m0, c0) = (&small.terms[0].0, &small.terms[0].1);
            let (m1, c1) = (&small.terms[1].0, &small.terms[1].1);
            let mut out = big.mul_monomial(m0, c0);
            out.absorb(big.mul_monomial(m1, c1));
            return out;
        }
        let mut raw = Vec::with_capacity(small.n_terms() * big.n_terms());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &big.terms {
                raw.push((ma.mul(mb), ca * cb));
            }
        }
        Expr::collect_terms(raw)
    }
}

impl Add<Expr> for Expr {
    type Output = Expr;
    fn add(mut self, rhs: Expr) -> Expr {
        self.absorb(rhs);
        self
    }
}
impl Add<&Expr> for Expr {
    type Output = Expr;
    fn add(mut self, rhs: &Expr) -> Expr {
        self += rhs;
        self
    }
}
impl Sub<Expr> for Expr {
    type Output = Expr;
    fn sub(mut self, rhs: Expr) -> Expr {
        self.absorb(-&rhs);
        self
    }
}
impl Sub<&Expr> for Expr {
    type Output = Expr;
    fn sub(mut self, rhs: &Expr) -> Expr {
        self.absorb(-rhs);
        self
    }
}
impl Mul<Expr> for Expr {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        (&self).mul(&rhs)
    }
}
impl Mul<&Expr> for Expr {
    type Output = Expr;
    fn mul(self, rhs: &Expr) -> Expr {
        (&self).mul(rhs)
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        -&self
    }
}

impl fmt::Debug for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::expr::render::render(self))
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::expr::render::render(self))
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
    fn construction_is_canonical() {
        // a1^2 + b1^2 built in either order is the same structure.
        let e1 = &a(1).pow(2) + &b(1).pow(2);
        let e2 = &b(1).pow(2) + &a(1).pow(2);
        assert_eq!(e1, e2);
    }

    #[test]
    fn product_of_conjugates() {
        // (c0 + s0)(c0 - s0) = c0^2 - s0^2
        let p = &(&c(0) + &s(0)) * &(&c(0) - &s(0));
        let expected = &c(0).pow(2) - &s(0).pow(2);
        assert_eq!(p, expected);
    }

    #[test]
    fn zero_coefficients_vanish() {
        let e = &(&a(1) - &a(1)) + &b(1);
        assert_eq!(e.n_terms(), 1);
        let z = &a(1) - &a(1);
        assert!(z.is_zero());
    }

    #[test]
    fn grlex_ordering() {
        // degree dominates; ties broken lexicographically with c0 earliest.
        let m_c0sq = Monomial::sym_pow(Sym::c(0), 2);
        let m_c0s0 = Monomial::from_pairs([(Sym::c(0), 1), (Sym::s(0), 1)]);
        let m_s0 = Monomial::sym(Sym::s(0));
        assert!(m_c0sq > m_c0s0); // same degree, higher power of earlier symbol
        assert!(m_c0s0 > m_s0); // higher degree
    }

    #[test]
    fn terms_stay_sorted_through_arithmetic() {
        let e = &(&(&a(1) + &b(2)).pow(3) * &(&c(0) - &s(1)).pow(2)) - &a(1).pow(5);
        let ms: Vec<&Monomial> = e.monomials().collect();
        assert!(ms.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn exact_division() {
        let p = &(&a(1).pow(2) + &b(1).pow(2)) * &(&a(2).pow(2) + &b(2).pow(2));
        let q = p.div_exact(&(&a(1).pow(2) + &b(1).pow(2))).unwrap();
        assert_eq!(q, &a(2).pow(2) + &b(2).pow(2));
        assert!(p.div_exact(&(&a(1) + &b(2))).is_none());
    }

    #[test]
    fn monomial_div_gcd() {
        let m1 = Monomial::from_pairs([(Sym::a(1), 3), (Sym::b(2), 1)]);
        let m2 = Monomial::from_pairs([(Sym::a(1), 2)]);
        assert_eq!(m1.div(&m2).unwrap(), Monomial::from_pairs([(Sym::a(1), 1), (Sym::b(2), 1)]));
        assert!(m2.div(&m1).is_none());
        assert_eq!(m1.gcd(&m2), m2);
    }

    #[test]
    fn conjugate_flips_i() {
        let e = Expr::from_coeff(Coeff::i()).mul_monomial(&Monomial::sym(Sym::c(0)), &Coeff::one());
        let g = e.conj();
        assert_eq!(&e + &g, Expr::zero());
    }
}
