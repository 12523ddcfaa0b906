//! Complete univariate factorization over F_p and a sound modular
//! irreducibility certificate over Q.
//!
//! Factorization runs the classical pipeline: radical (squarefree part,
//! handling p-th powers), distinct-degree splitting by Frobenius gcds, and
//! seeded Cantor–Zassenhaus equal-degree splitting. Output is canonical —
//! factors sorted by (degree, coefficient sequence from the leading
//! coefficient down) — so results are reproducible bit for bit and
//! independent of the seed.
//!
//! Irreducibility over Q is certified by intersecting feasible factor
//! degrees (subset sums of modular degree patterns) over several witness
//! primes: sound, deliberately incomplete.

use crate::arith::{is_prime, PrimeFieldElement};
use crate::unipoly::{ReduceModError, UniPolyP, UniPolyQ};
use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;
use std::collections::BTreeSet;
use thiserror::Error;

pub use crate::unipoly::upoly_gcd_mod_p;

/// Errors from degree-pattern extraction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("polynomial is not squarefree modulo {0}")]
    NotSquarefree(u64),
    #[error("leading coefficient vanishes modulo {0} (degree dropped)")]
    DegreeDropped(u64),
    #[error("the zero polynomial has no degree pattern")]
    ZeroPolynomial,
    #[error(transparent)]
    Reduce(#[from] ReduceModError),
}

/// Errors from building an irreducibility certificate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("polynomial must have integer coefficients")]
    NonIntegerCoefficients,
    #[error("polynomial must have degree at least 1")]
    DegreeTooSmall,
    #[error("supplied witness {0} is not prime")]
    NonPrimeWitness(u64),
    #[error("no admissible witness prime ({0} supplied, all rejected)")]
    NoAdmissiblePrime(usize),
}

/// True iff gcd(f, f′) = 1 over F_p.
pub fn squarefree_mod_p(f: &UniPolyP) -> bool {
    assert!(!f.is_zero(), "squarefreeness is undefined for zero");
    f.gcd(&f.derivative()).is_one()
}

/// For f = g(X^p) over F_p (zero derivative), recovers g.
/// Coefficients are fixed by Frobenius, so this is a reindexing.
fn pth_root(f: &UniPolyP) -> UniPolyP {
    let p = f.modulus() as usize;
    let coeffs: Vec<i64> = (0..=f.degree() / p)
        .map(|i| f.coeff(i * p) as i64)
        .collect();
    UniPolyP::new(f.modulus(), &coeffs).expect("modulus already validated")
}

/// Product of the distinct irreducible factors of a monic `f` (its radical).
fn radical(f: &UniPolyP) -> UniPolyP {
    debug_assert_eq!(f.lc(), 1);
    if f.degree() == 0 {
        return UniPolyP::one(f.modulus());
    }
    let deriv = f.derivative();
    if deriv.is_zero() {
        return radical(&pth_root(f));
    }
    let mut c = f.gcd(&deriv);
    if c.degree() == 0 {
        return f.clone();
    }
    let w = f.div_rem(&c).0;
    // Strip every factor of w out of c; what survives is a p-th power.
    loop {
        let g = c.gcd(&w);
        if g.degree() == 0 {
            break;
        }
        c = c.div_rem(&g).0;
    }
    if c.degree() == 0 {
        w
    } else {
        w.mul(&radical(&pth_root(&c)))
    }
}

/// Distinct-degree splitting of a monic squarefree `f`: returns pairs
/// (product of all irreducible factors of degree i, i), i ascending.
fn distinct_degree_split(f: &UniPolyP) -> Vec<(UniPolyP, usize)> {
    let p = f.modulus();
    let mut out = Vec::new();
    let mut work = f.clone();
    // x_frob = X^(p^i) mod work, maintained by repeated Frobenius powering.
    let mut x_frob = UniPolyP::monomial(p, 1, 1).rem(&work);
    let mut i = 1usize;
    while 2 * i <= work.degree() {
        x_frob = x_frob.pow_mod(&BigUint::from(p), &work);
        let g = x_frob.sub(&UniPolyP::monomial(p, 1, 1)).gcd(&work);
        if g.degree() > 0 {
            out.push((g.clone(), i));
            work = work.div_rem(&g).0;
            x_frob = x_frob.rem(&work);
        }
        i += 1;
    }
    if work.degree() > 0 {
        let d = work.degree();
        out.push((work, d));
    }
    out
}

fn random_poly_below(p: u64, degree_bound: usize, rng: &mut ChaCha8Rng) -> UniPolyP {
    let coeffs: Vec<i64> = (0..degree_bound)
        .map(|_| rng.gen_range(0..p) as i64)
        .collect();
    UniPolyP::new(p, &coeffs).expect("modulus already validated")
}

/// Cantor–Zassenhaus equal-degree splitting: `g` is monic squarefree with
/// all irreducible factors of degree `d`.
fn equal_degree_split(g: UniPolyP, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<UniPolyP>) {
    if g.degree() == d {
        out.push(g);
        return;
    }
    let p = g.modulus();
    let one = UniPolyP::one(p);
    let exp = if p != 2 {
        (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32)
    } else {
        BigUint::one() // unused for p = 2
    };
    for _ in 0..10_000 {
        let r = random_poly_below(p, g.degree(), rng);
        if r.is_zero() {
            continue;
        }
        let shared = r.gcd(&g);
        let candidate = if shared.degree() > 0 && shared.degree() < g.degree() {
            shared
        } else if p == 2 {
            // Trace map over F_{2^d}: r + r^2 + r^4 + … + r^(2^(d-1)).
            let mut s = r.rem(&g);
            let mut t = s.clone();
            for _ in 1..d {
                s = s.mul(&s).rem(&g);
                t = t.add(&s);
            }
            t.gcd(&g)
        } else {
            r.pow_mod(&exp, &g).sub(&one).gcd(&g)
        };
        if candidate.degree() > 0 && candidate.degree() < g.degree() {
            let quotient = g.div_rem(&candidate).0;
            equal_degree_split(candidate, d, rng, out);
            equal_degree_split(quotient, d, rng, out);
            return;
        }
    }
    unreachable!("equal-degree splitting failed to converge");
}

/// Canonical factor order: by degree, then by coefficient sequence compared
/// from the leading coefficient down to the constant term.
fn canonical_factor_cmp(a: &UniPolyP, b: &UniPolyP) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        for i in (0..=a.degree()).rev() {
            match a.coeff(i).cmp(&b.coeff(i)) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    })
}

/// A complete canonical factorization over F_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorListP {
    /// Leading unit: the product below times this constant equals the input.
    pub unit: PrimeFieldElement,
    /// Monic irreducible factors with multiplicities, canonically sorted.
    pub factors: Vec<(UniPolyP, usize)>,
}

impl FactorListP {
    pub fn modulus(&self) -> u64 {
        self.unit.modulus()
    }

    /// Multiplies the factorization back out (tests the reassembly law).
    pub fn product(&self) -> UniPolyP {
        let p = self.modulus();
        let mut acc = UniPolyP::one(p).mul_scalar(self.unit.value());
        for (g, e) in &self.factors {
            for _ in 0..*e {
                acc = acc.mul(g);
            }
        }
        acc
    }

    /// Factor degrees with multiplicity, sorted ascending.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|(g, e)| std::iter::repeat(g.degree()).take(*e))
            .collect();
        degs.sort_unstable();
        degs
    }
}

/// Complete factorization of a nonzero polynomial over F_p.
///
/// Deterministic for a fixed seed; the canonical sort makes the output
/// identical across seeds as well.
pub fn factor_mod_p(f: &UniPolyP, seed: u64) -> FactorListP {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let p = f.modulus();
    let unit = PrimeFieldElement::new(f.lc() as i64, p).expect("modulus already validated");
    let monic = f.make_monic();
    let mut irreducibles = Vec::new();
    if monic.degree() > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (component, d) in distinct_degree_split(&radical(&monic)) {
            equal_degree_split(component, d, &mut rng, &mut irreducibles);
        }
    }
    irreducibles.sort_by(canonical_factor_cmp);
    let mut factors = Vec::with_capacity(irreducibles.len());
    for g in irreducibles {
        let mut e = 0usize;
        let mut rest = monic.clone();
        loop {
            let (q, r) = rest.div_rem(&g);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        factors.push((g, e));
    }
    FactorListP { unit, factors }
}

/// Multiset of irreducible-factor degrees, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreePattern(Vec<usize>);

impl DegreePattern {
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable();
        DegreePattern(degrees)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}

/// Degree pattern of a squarefree polynomial over F_p.
///
/// Needs only distinct-degree splitting: a degree-(k·i) component whose
/// factors all have degree i contributes i repeated k times.
pub fn degree_pattern(f: &UniPolyP) -> Result<DegreePattern, PatternError> {
    if f.is_zero() {
        return Err(PatternError::ZeroPolynomial);
    }
    if !squarefree_mod_p(f) {
        return Err(PatternError::NotSquarefree(f.modulus()));
    }
    let mut degrees = Vec::new();
    for (component, i) in distinct_degree_split(&f.make_monic()) {
        debug_assert_eq!(component.degree() % i, 0);
        degrees.extend(std::iter::repeat(i).take(component.degree() / i));
    }
    Ok(DegreePattern::new(degrees))
}

/// Degree pattern of the reduction of a rational polynomial modulo p,
/// rejecting reductions that drop the degree.
pub fn degree_pattern_mod(f: &UniPolyQ, p: u64) -> Result<DegreePattern, PatternError> {
    if f.is_zero() {
        return Err(PatternError::ZeroPolynomial);
    }
    let fp = f.reduce_mod_p(p)?;
    if fp.is_zero() || fp.degree() < f.degree() {
        return Err(PatternError::DegreeDropped(p));
    }
    degree_pattern(&fp)
}

/// All subset sums of the degree multiset: every degree a monic integer
/// factor could have, given the factorization shape modulo one prime.
pub fn feasible_factor_degrees(pattern: &DegreePattern) -> BTreeSet<usize> {
    let total = pattern.sum();
    let mut reachable = vec![false; total + 1];
    reachable[0] = true;
    for &d in pattern.entries() {
        for s in (0..=total.saturating_sub(d)).rev() {
            if reachable[s] {
                reachable[s + d] = true;
            }
        }
    }
    reachable
        .iter()
        .enumerate()
        .filter_map(|(s, &ok)| ok.then_some(s))
        .collect()
}

/// One admitted witness prime with its pattern and feasible degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub prime: u64,
    pub pattern: DegreePattern,
    pub feasible: BTreeSet<usize>,
}

/// Outcome of the degree-pattern intersection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IrreducibilityVerdict {
    Certified,
    /// Proper degrees (excluding 0 and d) still feasible at every witness.
    Inconclusive { remaining: BTreeSet<usize> },
}

/// Evidence bundle for irreducibility over Q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibilityCertificate {
    pub polynomial: UniPolyQ,
    pub witnesses: Vec<Witness>,
    /// Primes rejected because the reduction was not squarefree.
    pub skipped: Vec<u64>,
    pub verdict: IrreducibilityVerdict,
}

impl IrreducibilityCertificate {
    pub fn is_certified(&self) -> bool {
        matches!(self.verdict, IrreducibilityVerdict::Certified)
    }
}

/// Certifies irreducibility of a monic integer polynomial by intersecting
/// proper feasible factor degrees over the supplied primes.
///
/// Certified means no proper degree survives at every admitted witness —
/// sound, but incomplete: Inconclusive polynomials may still be irreducible.
pub fn irreducibility_certificate(
    f: &UniPolyQ,
    primes: &[u64],
) -> Result<IrreducibilityCertificate, CertificateError> {
    if f.is_zero() || f.degree() < 1 {
        return Err(CertificateError::DegreeTooSmall);
    }
    if !f.is_monic() {
        return Err(CertificateError::NotMonic);
    }
    if !f.has_integer_coeffs() {
        return Err(CertificateError::NonIntegerCoefficients);
    }
    let d = f.degree();
    let mut remaining: BTreeSet<usize> = (1..d).collect();
    let mut witnesses = Vec::new();
    let mut skipped = Vec::new();
    for &p in primes {
        if !is_prime(p) {
            return Err(CertificateError::NonPrimeWitness(p));
        }
        match degree_pattern_mod(f, p) {
            Ok(pattern) => {
                let feasible = feasible_factor_degrees(&pattern);
                remaining.retain(|s| feasible.contains(s));
                witnesses.push(Witness {
                    prime: p,
                    pattern,
                    feasible,
                });
            }
            Err(PatternError::NotSquarefree(_)) => skipped.push(p),
            // Monic integer input can neither drop degree nor fail to reduce.
            Err(other) => unreachable!("inadmissible reduction of monic integer input: {other}"),
        }
    }
    if witnesses.is_empty() {
        return Err(CertificateError::NoAdmissiblePrime(primes.len()));
    }
    let verdict = if remaining.is_empty() {
        IrreducibilityVerdict::Certified
    } else {
        IrreducibilityVerdict::Inconclusive { remaining }
    };
    Ok(IrreducibilityCertificate {
        polynomial: f.clone(),
        witnesses,
        skipped,
        verdict,
    })
}
