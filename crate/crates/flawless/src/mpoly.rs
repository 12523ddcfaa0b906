//! Multivariate polynomials over Q with degree-compatible monomial orders.
//!
//! Polynomials store their terms sorted strictly descending in the ambient
//! ring's order, so the leading term is always `terms[0]`. Every operation
//! preserves that invariant.

use crate::Rational;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

/// Errors about ring construction and variable lookup.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("duplicate variable name {0:?}")]
    DuplicateVariable(String),
    #[error("variable name {0:?} is already in the ring")]
    NameCollision(String),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("operands live in different rings")]
    RingMismatch,
}

/// Term orders on monomials. All comparisons refine total degree except
/// `ElimFirst`, which eliminates the first variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Degree, ties broken by the *smallest* exponent difference scanned
    /// from the last variable (graded reverse lexicographic).
    DegRevLex,
    /// Degree, ties broken lexicographically from the first variable.
    DegLex,
    /// Exponent of the first variable compared first, then `DegRevLex` on
    /// the remaining variables; a product order that makes the first
    /// variable eliminable. Not degree-compatible.
    ElimFirst,
}

impl MonomialOrder {
    /// True for orders that refine total degree.
    pub fn is_degree_compatible(self) -> bool {
        !matches!(self, MonomialOrder::ElimFirst)
    }
}

/// A named polynomial ring presentation: ordered variables plus term order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingDescriptor {
    vars: Vec<String>,
    order: MonomialOrder,
}

impl RingDescriptor {
    /// Builds a descriptor, rejecting duplicate variable names.
    pub fn new(vars: Vec<String>, order: MonomialOrder) -> Result<Self, RingError> {
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(RingError::DuplicateVariable(String::new()));
            }
            if vars[..i].contains(v) {
                return Err(RingError::DuplicateVariable(v.clone()));
            }
        }
        Ok(RingDescriptor { vars, order })
    }

    /// Convenience constructor from string slices; panics on duplicates.
    pub fn from_names(names: &[&str], order: MonomialOrder) -> Self {
        Self::new(names.iter().map(|s| s.to_string()).collect(), order)
            .expect("variable names must be distinct")
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        RingDescriptor {
            vars: self.vars.clone(),
            order,
        }
    }

    /// Appends a fresh variable as the *least* one (last position).
    pub fn extended(&self, name: &str) -> Result<Self, RingError> {
        if self.vars.iter().any(|v| v == name) {
            return Err(RingError::NameCollision(name.to_string()));
        }
        let mut vars = self.vars.clone();
        vars.push(name.to_string());
        Ok(RingDescriptor {
            vars,
            order: self.order,
        })
    }

    /// Prepends a fresh variable as the *greatest* one (first position).
    pub fn prepended(&self, name: &str, order: MonomialOrder) -> Result<Self, RingError> {
        if self.vars.iter().any(|v| v == name) {
            return Err(RingError::NameCollision(name.to_string()));
        }
        let mut vars = vec![name.to_string()];
        vars.extend(self.vars.iter().cloned());
        Ok(RingDescriptor { vars, order })
    }

    /// Removes the variable at `idx`.
    pub fn without(&self, idx: usize) -> Self {
        let mut vars = self.vars.clone();
        vars.remove(idx);
        RingDescriptor {
            vars,
            order: self.order,
        }
    }
}

/// An exponent vector with cached total degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    deg: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }

    /// The constant monomial 1 in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial {
            exps: vec![0; n],
            deg: 0,
        }
    }

    /// The `i`-th variable in `n` variables.
    pub fn var(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps, deg: 1 }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len());
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// True iff `self` divides `other` componentwise.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() == other.exps.len()
            && self.deg <= other.deg
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len());
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len());
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    /// Appends `k` zero exponents (new least variables).
    pub fn extended(&self, k: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.extend(std::iter::repeat(0).take(k));
        Monomial {
            exps,
            deg: self.deg,
        }
    }

    /// Prepends one zero exponent (a new greatest variable).
    pub fn prepended(&self) -> Monomial {
        let mut exps = vec![0];
        exps.extend_from_slice(&self.exps);
        Monomial {
            exps,
            deg: self.deg,
        }
    }

    /// Drops coordinate `i`, which must carry exponent 0.
    pub fn without_index(&self, i: usize) -> Monomial {
        assert_eq!(self.exps[i], 0, "cannot drop a variable that occurs");
        let mut exps = self.exps.clone();
        exps.remove(i);
        Monomial {
            exps,
            deg: self.deg,
        }
    }
}

/// Graded-reverse-lexicographic comparison restricted to `range`.
fn degrevlex_on(a: &Monomial, b: &Monomial, range: std::ops::Range<usize>) -> Ordering {
    let da: u32 = a.exps[range.clone()].iter().sum();
    let db: u32 = b.exps[range.clone()].iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for i in range.rev() {
        match a.exps[i].cmp(&b.exps[i]) {
            Ordering::Equal => {}
            // Smaller exponent in the *last* differing position wins.
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

fn deglex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.deg.cmp(&b.deg) {
        Ordering::Equal => a.exps.cmp(&b.exps),
        ord => ord,
    }
}

/// Compares two monomials in the ring's term order.
pub fn order_compare(a: &Monomial, b: &Monomial, ring: &RingDescriptor) -> Ordering {
    let n = ring.nvars();
    assert_eq!(a.nvars(), n);
    assert_eq!(b.nvars(), n);
    match ring.order() {
        MonomialOrder::DegRevLex => degrevlex_on(a, b, 0..n),
        MonomialOrder::DegLex => deglex(a, b),
        MonomialOrder::ElimFirst => match a.exps[0].cmp(&b.exps[0]) {
            Ordering::Equal => degrevlex_on(a, b, 1..n),
            ord => ord,
        },
    }
}

/// A polynomial in Q[x₁,…,xₙ]; terms sorted strictly descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPolyQ {
    terms: Vec<(Monomial, Rational)>,
}

impl MPolyQ {
    pub fn zero() -> Self {
        MPolyQ { terms: Vec::new() }
    }

    /// Normalizes arbitrary terms: sorts descending, merges equal
    /// monomials, drops zero coefficients.
    pub fn from_terms(ring: &RingDescriptor, terms: Vec<(Monomial, Rational)>) -> Self {
        let mut terms = terms;
        terms.sort_by(|(m1, _), (m2, _)| order_compare(m2, m1, ring));
        let mut merged: Vec<(Monomial, Rational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => {
                    if let Some((_, lc)) = merged.last() {
                        if lc.is_zero() {
                            merged.pop();
                        }
                    }
                    merged.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = merged.last() {
            if lc.is_zero() {
                merged.pop();
            }
        }
        MPolyQ { terms: merged }
    }

    pub fn constant(ring: &RingDescriptor, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPolyQ {
            terms: vec![(Monomial::one(ring.nvars()), c)],
        }
    }

    pub fn one(ring: &RingDescriptor) -> Self {
        Self::constant(ring, Rational::one())
    }

    /// The `i`-th variable as a polynomial.
    pub fn var(ring: &RingDescriptor, i: usize) -> Self {
        MPolyQ {
            terms: vec![(Monomial::var(ring.nvars(), i), Rational::one())],
        }
    }

    /// A variable looked up by name.
    pub fn var_named(ring: &RingDescriptor, name: &str) -> Result<Self, RingError> {
        ring.var_index(name)
            .map(|i| Self::var(ring, i))
            .ok_or_else(|| RingError::UnknownVariable(name.to_string()))
    }

    /// A single term c·m.
    pub fn term(m: Monomial, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPolyQ { terms: vec![(m, c)] }
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading monomial.
    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    /// Leading coefficient.
    pub fn lc(&self) -> Option<&Rational> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Leading term.
    pub fn lt(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    /// Maximum total degree over the terms; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    /// True iff every term has the same total degree (vacuously for 0).
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.total_degree();
                self.terms.iter().all(|(m, _)| m.total_degree() == d)
            }
        }
    }

    /// Merge-adds two sorted term lists.
    pub fn add(&self, other: &MPolyQ, ring: &RingDescriptor) -> MPolyQ {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match order_compare(ma, mb, ring) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().cloned());
        MPolyQ { terms: out }
    }

    pub fn neg(&self) -> MPolyQ {
        MPolyQ {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &MPolyQ, ring: &RingDescriptor) -> MPolyQ {
        self.add(&other.neg(), ring)
    }

    /// Multiplies by a single term. Term order is preserved because every
    /// monomial order is translation-invariant.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> MPolyQ {
        if c.is_zero() {
            return MPolyQ::zero();
        }
        MPolyQ {
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), tc * c))
                .collect(),
        }
    }

    pub fn mul_scalar(&self, c: &Rational) -> MPolyQ {
        if c.is_zero() {
            return MPolyQ::zero();
        }
        MPolyQ {
            terms: self.terms.iter().map(|(m, tc)| (m.clone(), tc * c)).collect(),
        }
    }

    pub fn mul(&self, other: &MPolyQ, ring: &RingDescriptor) -> MPolyQ {
        let mut acc = MPolyQ::zero();
        for (m, c) in &other.terms {
            acc = acc.add(&self.mul_term(m, c), ring);
        }
        acc
    }

    pub fn pow(&self, k: u32, ring: &RingDescriptor) -> MPolyQ {
        let mut acc = MPolyQ::one(ring);
        for _ in 0..k {
            acc = acc.mul(self, ring);
        }
        acc
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> MPolyQ {
        match self.lc() {
            None => MPolyQ::zero(),
            Some(lc) => {
                let inv = Rational::one() / lc;
                self.mul_scalar(&inv)
            }
        }
    }

    /// Appends `k` zero exponents to every term (ring extended at the tail).
    /// Sortedness is preserved for `DegRevLex` and `DegLex`.
    pub fn extended(&self, k: usize) -> MPolyQ {
        MPolyQ {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.extended(k), c.clone()))
                .collect(),
        }
    }

    /// Homogenizes with the *last* variable of `ring_ext` (one more
    /// variable than the terms currently carry).
    pub fn homogenize(&self, ring_ext: &RingDescriptor) -> MPolyQ {
        let d = match self.total_degree() {
            None => return MPolyQ::zero(),
            Some(d) => d,
        };
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = m.exps().to_vec();
                exps.push(d - m.total_degree());
                (Monomial::new(exps), c.clone())
            })
            .collect();
        MPolyQ::from_terms(ring_ext, terms)
    }

    /// Substitutes 0 for variable `i`: keeps the terms not involving it.
    pub fn subst_zero(&self, i: usize) -> MPolyQ {
        MPolyQ {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(i) == 0)
                .cloned()
                .collect(),
        }
    }

    /// Substitutes 1 for variable `i` (exponent zeroed, terms re-merged).
    pub fn subst_one(&self, i: usize, ring: &RingDescriptor) -> MPolyQ {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = m.exps().to_vec();
                exps[i] = 0;
                (Monomial::new(exps), c.clone())
            })
            .collect();
        MPolyQ::from_terms(ring, terms)
    }

    /// Drops coordinate `i` from every term; the variable must not occur.
    pub fn without_var(&self, i: usize) -> MPolyQ {
        MPolyQ {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.without_index(i), c.clone()))
                .collect(),
        }
    }

    /// Prepends a zero exponent to every term (ring gains a new greatest
    /// variable at index 0). Callers must re-sort via `from_terms` if the
    /// target order differs from the source order on old variables.
    pub fn prepended(&self) -> MPolyQ {
        MPolyQ {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.prepended(), c.clone()))
                .collect(),
        }
    }

    /// Renders with explicit `^` powers and `*`-free juxtaposition, terms
    /// in the stored (descending) order.
    pub fn render(&self, ring: &RingDescriptor) -> String {
        crate::render::render_mpoly(self, ring)
    }
}

/// Displays a monomial like `X^2YW` given variable names.
pub fn monomial_string(m: &Monomial, ring: &RingDescriptor) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let mut s = String::new();
    for (i, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        s.push_str(&ring.vars()[i]);
        if e > 1 {
            s.push('^');
            s.push_str(&e.to_string());
        }
    }
    s
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
