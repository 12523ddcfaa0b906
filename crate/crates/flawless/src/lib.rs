//! Exact commutative algebra over Q and over word-sized prime fields.
//!
//! The crate provides, bottom to top:
//!
//! - complete univariate factorization over F_p (squarefree part,
//!   distinct-degree splitting, seeded equal-degree splitting) together with
//!   factor-degree patterns and a sound modular irreducibility certificate
//!   over Q ([`factor`]);
//! - a certifier for "the Galois group of f is the full symmetric group"
//!   based on two witness primes with prescribed factor-degree shapes
//!   ([`galois`]);
//! - multivariate polynomials over Q with degree-compatible monomial orders,
//!   Buchberger's algorithm with reduced bases, homogenization, ideal
//!   quotients and non-zerodivisor tests ([`mpoly`], [`groebner`]);
//! - Hilbert–Poincaré series of monomial quotients via a pivot recursion,
//!   h-vectors, and order ideals of monomials ([`hilbert`]);
//! - h-vector diagnostics (flawlessness, partial-sum inequalities),
//!   regular-sequence verification, and a pipeline that assembles the
//!   classical counterexamples to Hibi's flawlessness conjecture from the
//!   polynomials X^d − X − 1 ([`analysis`]);
//! - a small text format for rings and ideals, deterministic report
//!   rendering, reproduction presets, and the `flawless` CLI ([`parse`],
//!   [`render`], [`presets`], [`cli`]).
//!
//! All arithmetic is exact; every operation is deterministic (randomized
//! splitting is driven by a caller-supplied seed and canonicalized on
//! output).

pub mod analysis;
pub mod arith;
#[cfg(feature = "cli")]
pub mod cli;
pub mod factor;
pub mod galois;
pub mod groebner;
pub mod hilbert;
pub mod mpoly;
pub mod parse;
pub mod presets;
pub mod render;
pub mod unipoly;

/// Arbitrary-precision signed integer used for all exact integer data.
pub type Integer = num_bigint::BigInt;
/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub use analysis::{
    build_counterexample, build_counterexample_opts, galligo_inequalities, is_flawless,
    verify_regular_sequence, CMReport, CounterexampleReport, FlawlessReport, UPPReport,
};
pub use arith::{is_prime, PrimeFieldElement};
pub use factor::{
    degree_pattern, degree_pattern_mod, factor_mod_p, feasible_factor_degrees,
    irreducibility_certificate, squarefree_mod_p, upoly_gcd_mod_p, DegreePattern, FactorListP,
    IrreducibilityCertificate, IrreducibilityVerdict,
};
pub use galois::{
    certify_symmetric_galois, find_witness_primes, matches_b1, matches_b2, PatternTest,
    SymmetricGaloisCertificate, WitnessPrimes,
};
pub use groebner::{
    buchberger_reduced, dehomogenize_ideal, homogenize_ideal, ideal_equal, ideal_quotient, is_nzd,
    normal_form, s_polynomial, set_variable_zero, GroebnerBasisQ, IdealQ,
};
pub use hilbert::{
    h_vector, hilbert_numerator, lt_ideal, order_ideal, reduce_poincare, series_coefficients,
    standard_monomials, HVector, MonomialIdeal, OrderIdeal, PoincareSeries, SeriesNumerator,
};
pub use mpoly::{order_compare, MPolyQ, Monomial, MonomialOrder, RingDescriptor};
pub use parse::{parse_document, parse_polynomial, parse_unipoly, SourceDocument};
pub use presets::{preset_by_name, reproduce, ReproOutcome, ReproPreset, PRESETS};
pub use render::render_report;
pub use unipoly::{UniPolyP, UniPolyQ};
