//! h-vector inequality checks and the end-to-end construction pipeline:
//! from X^d − X − 1 to a certified-Galois curve ideal, its homogenization,
//! Poincaré series, h-vector, flawlessness verdict, partial-sum
//! inequalities, regular-sequence verification, and order ideal.

use crate::galois::{certify_symmetric_galois, SymmetricGaloisCertificate};
use crate::groebner::{
    buchberger_reduced, homogenize_ideal, is_nzd, set_variable_zero, GroebnerBasisQ,
    GroebnerError, IdealQ,
};
use crate::hilbert::{
    h_vector, hilbert_numerator, lt_ideal, order_ideal, reduce_poincare, HVector, HilbertError,
    OrderIdeal, PoincareSeries,
};
use crate::mpoly::{MPolyQ, MonomialOrder, RingDescriptor};
use crate::unipoly::UniPolyQ;
use thiserror::Error;

/// Errors raised while assembling an analysis report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
    #[error("variable '{0}' is not in the ring")]
    UnknownVariable(String),
}

/// The two inequality families a flawless h-vector must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlawlessCondition {
    /// h_0 ≤ h_1 ≤ … ≤ h_{⌊δ/2⌋}.
    I,
    /// h_i ≤ h_{δ−i} for 0 ≤ i ≤ ⌊δ/2⌋.
    II,
}

impl std::fmt::Display for FlawlessCondition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FlawlessCondition::I => write!(f, "i"),
            FlawlessCondition::II => write!(f, "ii"),
        }
    }
}

/// A single failed inequality, with both sides evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlawlessViolation {
    pub condition: FlawlessCondition,
    pub index: usize,
    pub left: i128,
    pub right: i128,
}

/// Verdict of the flawlessness check with every violated inequality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlawlessReport {
    pub h: HVector,
    pub flawless: bool,
    pub violations: Vec<FlawlessViolation>,
}

/// Checks both flawlessness conditions, recording all violations.
pub fn is_flawless(h: &HVector) -> FlawlessReport {
    let e = h.entries();
    let delta = h.delta();
    let half = delta / 2;
    let mut violations = Vec::new();
    for i in 1..=half {
        if e[i - 1] > e[i] {
            violations.push(FlawlessViolation {
                condition: FlawlessCondition::I,
                index: i,
                left: e[i - 1],
                right: e[i],
            });
        }
    }
    for i in 0..=half {
        if e[i] > e[delta - i] {
            violations.push(FlawlessViolation {
                condition: FlawlessCondition::II,
                index: i,
                left: e[i],
                right: e[delta - i],
            });
        }
    }
    FlawlessReport {
        h: h.clone(),
        flawless: violations.is_empty(),
        violations,
    }
}

/// One partial-sum inequality h_0+…+h_i ≤ h_{δ−i}+…+h_{δ−1}+1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UPPEntry {
    pub i: usize,
    pub left: i128,
    pub right: i128,
    pub holds: bool,
}

/// All partial-sum (uniform position) inequalities for an h-vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UPPReport {
    pub h: HVector,
    pub entries: Vec<UPPEntry>,
    pub satisfied: bool,
}

/// Evaluates h_0+…+h_i ≤ h_{δ−i}+…+h_{δ−1}+1 for i = 1..⌊δ/2⌋.
pub fn galligo_inequalities(h: &HVector) -> UPPReport {
    let e = h.entries();
    let delta = h.delta();
    let half = delta / 2;
    let mut entries = Vec::new();
    for i in 1..=half {
        let left: i128 = e[..=i].iter().sum();
        let right: i128 = e[delta - i..delta].iter().sum::<i128>() + 1;
        entries.push(UPPEntry {
            i,
            left,
            right,
            holds: left <= right,
        });
    }
    let satisfied = entries.iter().all(|en| en.holds);
    UPPReport {
        h: h.clone(),
        entries,
        satisfied,
    }
}

/// One step of a regular-sequence verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CMStep {
    pub var: String,
    pub is_nzd: bool,
}

/// Outcome of checking a candidate regular sequence of variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CMReport {
    pub ideal: IdealQ,
    pub steps: Vec<CMStep>,
    pub final_ideal: IdealQ,
    pub final_artinian: bool,
    pub verified: bool,
}

/// Verifies that the named variables form a regular sequence on the
/// quotient and that killing them leaves an Artinian ring. Stops at the
/// first zerodivisor.
pub fn verify_regular_sequence(
    ideal: &IdealQ,
    sequence: &[&str],
) -> Result<CMReport, AnalysisError> {
    let mut current = ideal.clone();
    let mut steps = Vec::new();
    let mut all_nzd = true;
    for &name in sequence {
        let idx = current
            .ring
            .var_index(name)
            .ok_or_else(|| AnalysisError::UnknownVariable(name.to_string()))?;
        let v = MPolyQ::var(&current.ring, idx);
        let nzd = is_nzd(&current, &v)?;
        steps.push(CMStep {
            var: name.to_string(),
            is_nzd: nzd,
        });
        if !nzd {
            all_nzd = false;
            break;
        }
        current = set_variable_zero(&current, name)?;
    }
    let final_artinian = if all_nzd {
        let gb = buchberger_reduced(&current);
        let series = reduce_poincare(&hilbert_numerator(&lt_ideal(&gb)), current.ring.nvars())?;
        series.dimension() == 0
    } else {
        false
    };
    Ok(CMReport {
        ideal: ideal.clone(),
        steps,
        final_ideal: current,
        final_artinian,
        verified: all_nzd && final_artinian,
    })
}

/// Whether the Galois certificate was established, or why not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GaloisStatus {
    Certified(SymmetricGaloisCertificate),
    NotCertified { reason: String },
}

impl GaloisStatus {
    pub fn is_certified(&self) -> bool {
        matches!(self, GaloisStatus::Certified(_))
    }
}

/// Default bound for witness-prime searches.
pub const DEFAULT_PRIME_BOUND: u64 = 10_000;

/// Everything the pipeline establishes about one degree-d construction.
#[derive(Debug, Clone)]
pub struct CounterexampleReport {
    pub degree: usize,
    pub lifted: bool,
    pub polynomial: UniPolyQ,
    pub galois: GaloisStatus,
    pub affine: IdealQ,
    pub homogeneous: GroebnerBasisQ,
    pub series: PoincareSeries,
    pub h: HVector,
    pub dimension: usize,
    pub multiplicity: i128,
    pub flawless: FlawlessReport,
    pub upp: UPPReport,
    pub cm: CMReport,
    pub order_ideal: Option<OrderIdeal>,
}

/// Runs the full pipeline for X^d − X − 1 with default witness search.
pub fn build_counterexample(degree: usize, lift: bool) -> Result<CounterexampleReport, AnalysisError> {
    build_counterexample_opts(degree, lift, None, DEFAULT_PRIME_BOUND)
}

/// Full pipeline with explicit witness primes and search bound.
///
/// The monomial curve (t, t³, t⁴) is cut out over the roots of
/// X^d − X − 1; with `lift` the constant term becomes a new coordinate T,
/// turning the point set into a curve. The ideal is homogenized by a
/// least variable W, and the quotient's series, h-vector, inequality
/// verdicts, regular sequence ([W] or [W, T]), and order ideal follow.
pub fn build_counterexample_opts(
    degree: usize,
    lift: bool,
    primes: Option<(u64, u64)>,
    bound: u64,
) -> Result<CounterexampleReport, AnalysisError> {
    let f = UniPolyQ::x_pow_minus_x_minus_one(degree);
    let galois = match certify_symmetric_galois(&f, primes, bound) {
        Ok(c) => GaloisStatus::Certified(c),
        Err(e) => GaloisStatus::NotCertified {
            reason: e.to_string(),
        },
    };

    let mut names = vec!["X".to_string(), "Y".to_string(), "Z".to_string()];
    if lift {
        names.push("T".to_string());
    }
    let ring = RingDescriptor::new(names, MonomialOrder::DegRevLex).expect("valid ring");
    let x = MPolyQ::var(&ring, 0);
    let y = MPolyQ::var(&ring, 1);
    let z = MPolyQ::var(&ring, 2);
    let one = MPolyQ::one(&ring);
    let mut g1 = x.pow(degree as u32, &ring).sub(&x, &ring).sub(&one, &ring);
    if lift {
        g1 = g1.sub(&MPolyQ::var(&ring, 3), &ring);
    }
    let g2 = y.sub(&x.pow(3, &ring), &ring);
    let g3 = z.sub(&x.mul(&y, &ring), &ring);
    let affine = IdealQ::new(ring, vec![g1, g2, g3]);

    let homogeneous = homogenize_ideal(&affine, "W")?;
    let series = reduce_poincare(
        &hilbert_numerator(&lt_ideal(&homogeneous)),
        homogeneous.ring.nvars(),
    )?;
    let h = h_vector(&series);
    let flawless = is_flawless(&h);
    let upp = galligo_inequalities(&h);

    let dimension = series.dimension();
    let multiplicity = series.multiplicity();

    let sequence: Vec<&str> = if lift { vec!["W", "T"] } else { vec!["W"] };
    let cm = verify_regular_sequence(&homogeneous.ideal(), &sequence)?;
    let order_ideal = if cm.verified {
        let gb = buchberger_reduced(&cm.final_ideal);
        order_ideal(&lt_ideal(&gb)).ok()
    } else {
        None
    };

    Ok(CounterexampleReport {
        degree,
        lifted: lift,
        polynomial: f,
        galois,
        affine,
        homogeneous,
        series,
        h,
        dimension,
        multiplicity,
        flawless,
        upp,
        cm,
        order_ideal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::SeriesNumerator;
    use crate::parse::parse_document;

    fn hv(entries: &[i128]) -> HVector {
        HVector::new(entries.to_vec())
    }

    #[test]
    fn flawless_verdicts() {
        let r = is_flawless(&hv(&[1, 3, 5, 5, 3, 1]));
        assert!(r.flawless);
        assert!(r.violations.is_empty());

        let r = is_flawless(&hv(&[1, 3, 5, 4, 4, 1]));
        assert!(!r.flawless);
        assert_eq!(
            r.violations,
            vec![FlawlessViolation {
                condition: FlawlessCondition::II,
                index: 2,
                left: 5,
                right: 4,
            }]
        );

        let r = is_flawless(&hv(&[2, 1, 3, 3]));
        assert_eq!(
            r.violations,
            vec![FlawlessViolation {
                condition: FlawlessCondition::I,
                index: 1,
                left: 2,
                right: 1,
            }]
        );

        // Length-one h-vectors are vacuously flawless.
        assert!(is_flawless(&hv(&[7])).flawless);
    }

    #[test]
    fn partial_sum_inequalities() {
        let r = galligo_inequalities(&hv(&[1, 3, 5, 4, 4, 1]));
        assert!(r.satisfied);
        assert_eq!(r.entries.len(), 2);
        assert_eq!((r.entries[0].left, r.entries[0].right), (4, 5));
        assert_eq!((r.entries[1].left, r.entries[1].right), (9, 9));

        let r = galligo_inequalities(&hv(&[1, 3, 5, 4, 1, 1]));
        assert!(!r.satisfied);
        assert_eq!((r.entries[0].left, r.entries[0].right), (4, 2));
        assert!(!r.entries[0].holds);
        assert_eq!((r.entries[1].left, r.entries[1].right), (9, 6));
        assert!(!r.entries[1].holds);

        let r = galligo_inequalities(&hv(&[1, 1]));
        assert!(r.satisfied);
        assert!(r.entries.is_empty());
    }

    #[test]
    fn regular_sequence_failure_is_reported() {
        let doc = parse_document("ring Q[X,Y] order degrevlex; ideal I = XY;").unwrap();
        let r = verify_regular_sequence(doc.first_ideal().1, &["X"]).unwrap();
        assert!(!r.verified);
        assert!(!r.final_artinian);
        assert_eq!(r.steps.len(), 1);
        assert!(!r.steps[0].is_nzd);
    }

    #[test]
    fn regular_sequence_on_zero_ideal() {
        // Q[X]/(0) has the regular sequence [X]; the residue ring is Q.
        let ring = RingDescriptor::new(vec!["X".into()], MonomialOrder::DegRevLex).unwrap();
        let ideal = IdealQ::new(ring, vec![]);
        let r = verify_regular_sequence(&ideal, &["X"]).unwrap();
        assert!(r.verified);
        assert!(r.final_artinian);
        assert_eq!(r.final_ideal.ring.nvars(), 0);
    }

    #[test]
    fn regular_sequence_needs_artinian_residue() {
        let doc = parse_document("ring Q[X,Y,Z] order degrevlex; ideal I = XY;").unwrap();
        let r = verify_regular_sequence(doc.first_ideal().1, &["Z"]).unwrap();
        assert!(r.steps[0].is_nzd);
        assert!(!r.final_artinian);
        assert!(!r.verified);
    }

    #[test]
    fn unknown_sequence_variable_errors() {
        let doc = parse_document("ring Q[X,Y] order degrevlex; ideal I = XY;").unwrap();
        assert_eq!(
            verify_regular_sequence(doc.first_ideal().1, &["W"]),
            Err(AnalysisError::UnknownVariable("W".to_string()))
        );
    }

    #[test]
    fn pipeline_point_configuration_degree_18() {
        // Without the lift: 18 points, dimension 1, multiplicity 18.
        let r = build_counterexample_opts(18, false, Some((3, 5)), 100).unwrap();
        assert!(r.galois.is_certified());
        assert_eq!(r.h.entries(), &[1, 3, 5, 4, 4, 1]);
        assert_eq!(r.dimension, 1);
        assert_eq!(r.multiplicity, 18);
        assert!(!r.flawless.flawless);
        assert!(r.upp.satisfied);
        assert!(r.cm.verified);
        let oi = r.order_ideal.as_ref().unwrap();
        assert_eq!(oi.len(), 18);
        assert!(!oi.pure);
    }

    #[test]
    fn pipeline_lifted_curve_degree_18() {
        let r = build_counterexample_opts(18, true, Some((3, 5)), 100).unwrap();
        assert!(r.galois.is_certified());
        assert_eq!(r.h.entries(), &[1, 3, 5, 4, 4, 1]);
        assert_eq!(r.dimension, 2);
        assert_eq!(r.multiplicity, 18);
        assert_eq!(r.h.sum(), 18);
        assert!(!r.flawless.flawless);
        assert!(r.upp.satisfied);
        assert!(r.cm.verified);
        assert_eq!(r.cm.steps.len(), 2);
        assert!(r.cm.final_artinian);
        assert_eq!(r.cm.final_ideal.ring.nvars(), 3);
        assert_eq!(
            r.series.numerator,
            SeriesNumerator::from_coeffs(vec![1, 3, 5, 4, 4, 1])
        );
        let oi = r.order_ideal.as_ref().unwrap();
        assert_eq!(oi.len(), 18);
        assert_eq!(oi.counts_by_degree(), vec![1, 3, 5, 4, 4, 1]);
        assert!(!oi.pure);
    }

    #[test]
    fn pipeline_records_failed_certification() {
        // Degree 4: X⁴ − X − 1 is irreducible but not Σ-certifiable with
        // useless supplied primes (pattern shapes fail).
        let r = build_counterexample_opts(4, true, Some((2, 2)), 10).unwrap();
        match &r.galois {
            GaloisStatus::Certified(_) => panic!("expected failure"),
            GaloisStatus::NotCertified { reason } => assert!(!reason.is_empty()),
        }
        // The algebra still runs.
        assert_eq!(r.multiplicity, 4);
    }
}
