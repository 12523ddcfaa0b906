//! Certification that the Galois group of a monic integer polynomial is the
//! full symmetric group Σ_d.
//!
//! The criterion: f irreducible over Q, one squarefree reduction whose
//! factor degrees are {1, d−1} (shape B1, forcing a (d−1)-cycle), and one
//! squarefree reduction with exactly one quadratic factor and all other
//! factors of odd degree (shape B2, forcing a transposition after an odd
//! power). A transitive group with both elements is Σ_d.

use crate::arith::is_prime;
use crate::factor::{
    degree_pattern, degree_pattern_mod, feasible_factor_degrees, irreducibility_certificate,
    squarefree_mod_p, CertificateError, DegreePattern, IrreducibilityCertificate,
};
use crate::unipoly::UniPolyQ;
use thiserror::Error;

/// Errors from certification and witness search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaloisError {
    #[error("irreducibility could not be certified with primes up to {bound}")]
    IrreducibilityNotCertified { bound: u64 },
    #[error("factor-degree pattern at prime {0} does not match shape B1 ({{1, d-1}})")]
    PatternB1Failed(u64),
    #[error(
        "factor-degree pattern at prime {0} does not match shape B2 (one quadratic, rest odd)"
    )]
    PatternB2Failed(u64),
    #[error("reduction modulo {0} is not squarefree")]
    NotSquarefreeAt(u64),
    #[error("searched primes up to {bound} without completing the certificate (B1 prime: {b1:?}, B2 prime: {b2:?}, irreducibility certified: {irreducible})")]
    SearchExhausted {
        bound: u64,
        b1: Option<u64>,
        b2: Option<u64>,
        irreducible: bool,
    },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl From<CertificateError> for GaloisError {
    fn from(e: CertificateError) -> Self {
        GaloisError::InvalidInput(e.to_string())
    }
}

/// Which of the two witness shapes a prime is asked to match.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternKind {
    B1,
    B2,
}

/// One validated witness reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternTest {
    pub kind: PatternKind,
    pub prime: u64,
    pub pattern: DegreePattern,
    pub passed: bool,
}

/// True iff the pattern is exactly {1, d−1}.
pub fn matches_b1(pattern: &DegreePattern, d: usize) -> bool {
    debug_assert_eq!(pattern.sum(), d);
    pattern.entries() == [1, d - 1] || (d == 2 && pattern.entries() == [1, 1])
}

/// True iff exactly one entry equals 2 and every other entry is odd.
/// An empty odd part ({2} at d = 2) is admitted.
pub fn matches_b2(pattern: &DegreePattern, d: usize) -> bool {
    debug_assert_eq!(pattern.sum(), d);
    let twos = pattern.entries().iter().filter(|&&e| e == 2).count();
    twos == 1 && pattern.entries().iter().all(|&e| e == 2 || e % 2 == 1)
}

/// Result of scanning successive primes for the certificate ingredients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessPrimes {
    /// First prime whose pattern matches B1.
    pub b1: u64,
    /// First prime whose pattern matches B2.
    pub b2: u64,
    /// Admissible primes accumulated until irreducibility was certified.
    pub irreducibility: Vec<u64>,
}

/// The full machine-checkable certificate that Gal_Q(f) = Σ_d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricGaloisCertificate {
    pub polynomial: UniPolyQ,
    pub degree: usize,
    pub irreducibility: IrreducibilityCertificate,
    pub b1: PatternTest,
    pub b2: PatternTest,
}

impl SymmetricGaloisCertificate {
    /// Display name of the certified group.
    pub fn group_symbol(&self) -> String {
        format!("Σ_{}", self.degree)
    }

    /// Re-derives every stored pattern from scratch and checks it still
    /// passes; a certificate is evidence precisely because this holds.
    pub fn revalidate(&self) -> bool {
        let d = self.degree;
        let check = |test: &PatternTest| match degree_pattern_mod(&self.polynomial, test.prime) {
            Ok(p) => {
                p == test.pattern
                    && match test.kind {
                        PatternKind::B1 => matches_b1(&p, d),
                        PatternKind::B2 => matches_b2(&p, d),
                    }
            }
            Err(_) => false,
        };
        if !(check(&self.b1) && check(&self.b2)) {
            return false;
        }
        self.irreducibility.is_certified()
            && self.irreducibility.witnesses.iter().all(|w| {
                degree_pattern_mod(&self.polynomial, w.prime)
                    .map(|p| p == w.pattern)
                    .unwrap_or(false)
            })
    }
}

fn validate_input(f: &UniPolyQ) -> Result<usize, GaloisError> {
    if f.is_zero() || f.degree() < 2 {
        return Err(GaloisError::InvalidInput(
            "polynomial must have degree at least 2".into(),
        ));
    }
    if !f.is_monic() {
        return Err(GaloisError::InvalidInput("polynomial must be monic".into()));
    }
    if !f.has_integer_coeffs() {
        return Err(GaloisError::InvalidInput(
            "polynomial must have integer coefficients".into(),
        ));
    }
    Ok(f.degree())
}

fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start..).filter(|&n| is_prime(n))
}

/// Scans primes 2, 3, 5, … ≤ bound for the first B1 match, the first B2
/// match, and enough admissible patterns to certify irreducibility.
pub fn find_witness_primes(f: &UniPolyQ, bound: u64) -> Result<WitnessPrimes, GaloisError> {
    let d = validate_input(f)?;
    let mut b1 = None;
    let mut b2 = None;
    let mut remaining: std::collections::BTreeSet<usize> = (1..d).collect();
    let mut irreducibility = Vec::new();
    let mut certified = false;
    for p in primes_from(2).take_while(|&p| p <= bound) {
        let pattern = match degree_pattern_mod(f, p) {
            Ok(pat) => pat,
            Err(_) => continue, // inadmissible prime: skip
        };
        if b1.is_none() && matches_b1(&pattern, d) {
            b1 = Some(p);
        }
        if b2.is_none() && matches_b2(&pattern, d) {
            b2 = Some(p);
        }
        if !certified {
            let feasible = feasible_factor_degrees(&pattern);
            remaining.retain(|s| feasible.contains(s));
            irreducibility.push(p);
            certified = remaining.is_empty();
        }
        if b1.is_some() && b2.is_some() && certified {
            break;
        }
    }
    match (b1, b2, certified) {
        (Some(b1), Some(b2), true) => Ok(WitnessPrimes {
            b1,
            b2,
            irreducibility,
        }),
        _ => Err(GaloisError::SearchExhausted {
            bound,
            b1,
            b2,
            irreducible: certified,
        }),
    }
}

/// Validates one explicit prime: must be prime, keep the degree, and give a
/// squarefree reduction; returns its degree pattern.
fn pattern_at(f: &UniPolyQ, p: u64) -> Result<DegreePattern, GaloisError> {
    if !is_prime(p) {
        return Err(GaloisError::InvalidInput(format!("{p} is not prime")));
    }
    let fp = f
        .reduce_mod_p(p)
        .map_err(|e| GaloisError::InvalidInput(e.to_string()))?;
    if fp.is_zero() || fp.degree() < f.degree() {
        return Err(GaloisError::InvalidInput(format!(
            "degree drops modulo {p}"
        )));
    }
    if !squarefree_mod_p(&fp) {
        return Err(GaloisError::NotSquarefreeAt(p));
    }
    Ok(degree_pattern(&fp).expect("squarefree reduction has a pattern"))
}

/// Extends the irreducibility evidence with successive primes until the
/// certificate closes or the bound is exhausted.
fn certify_irreducibility(
    f: &UniPolyQ,
    mut primes: Vec<u64>,
    bound: u64,
) -> Result<IrreducibilityCertificate, GaloisError> {
    let mut cert = irreducibility_certificate(f, &primes)?;
    if cert.is_certified() {
        return Ok(cert);
    }
    for p in primes_from(2).take_while(|&p| p <= bound) {
        if primes.contains(&p) {
            continue;
        }
        if degree_pattern_mod(f, p).is_err() {
            continue;
        }
        primes.push(p);
        cert = irreducibility_certificate(f, &primes)?;
        if cert.is_certified() {
            return Ok(cert);
        }
    }
    Err(GaloisError::IrreducibilityNotCertified { bound })
}

/// Assembles and validates the full Σ_d certificate.
///
/// With an explicit pair the two primes are validated exactly (either may
/// play B1, the other must then play B2); without one, witnesses come from
/// [`find_witness_primes`].
pub fn certify_symmetric_galois(
    f: &UniPolyQ,
    primes: Option<(u64, u64)>,
    bound: u64,
) -> Result<SymmetricGaloisCertificate, GaloisError> {
    let d = validate_input(f)?;
    // Validation order: witness admissibility, then irreducibility, then
    // the two pattern shapes.
    let (irreducibility, p_b1, p_b2) = match primes {
        Some((p1, p2)) => {
            let pat1 = pattern_at(f, p1)?;
            let pat2 = pattern_at(f, p2)?;
            let cert = certify_irreducibility(f, vec![p1, p2], bound)?;
            let (p_b1, p_b2) = if matches_b1(&pat1, d) && matches_b2(&pat2, d) {
                (p1, p2)
            } else if matches_b1(&pat2, d) && matches_b2(&pat1, d) {
                (p2, p1)
            } else if matches_b1(&pat1, d) {
                return Err(GaloisError::PatternB2Failed(p2));
            } else if matches_b1(&pat2, d) {
                return Err(GaloisError::PatternB2Failed(p1));
            } else {
                return Err(GaloisError::PatternB1Failed(p1));
            };
            (cert, p_b1, p_b2)
        }
        None => {
            let w = find_witness_primes(f, bound)?;
            let cert = certify_irreducibility(f, w.irreducibility, bound)?;
            (cert, w.b1, w.b2)
        }
    };
    let b1_pattern = pattern_at(f, p_b1)?;
    let b2_pattern = pattern_at(f, p_b2)?;
    Ok(SymmetricGaloisCertificate {
        polynomial: f.clone(),
        degree: d,
        irreducibility,
        b1: PatternTest {
            kind: PatternKind::B1,
            prime: p_b1,
            pattern: b1_pattern,
            passed: true,
        },
        b2: PatternTest {
            kind: PatternKind::B2,
            prime: p_b2,
            pattern: b2_pattern,
            passed: true,
        },
    })
}
