//! Acceptance gate: one test per pinned criterion. Every comparison is
//! exact; each test prints a single PASS line (visible with --nocapture)
//! and fails loudly otherwise.

use flawless::analysis::{FlawlessCondition, GaloisStatus};
use flawless::hilbert::PivotStrategy;
use flawless::render::{render_monomial_list, render_series};
use flawless::{
    buchberger_reduced, build_counterexample_opts, certify_symmetric_galois, factor_mod_p,
    h_vector, hilbert_numerator, ideal_equal, irreducibility_certificate, lt_ideal,
    normal_form, parse_document, parse_polynomial, reduce_poincare, reproduce, s_polynomial,
    series_coefficients, set_variable_zero, standard_monomials, IdealQ, MPolyQ, Monomial,
    MonomialIdeal, MonomialOrder, PoincareSeries, RingDescriptor, UniPolyP, UniPolyQ, PRESETS,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::process::Command;

fn run_cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_flawless"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf8"),
    )
}

#[test]
fn criterion_1_factorization_fixtures() {
    let (code, text) = run_cli(&["factor", "--modulus", "3", "--poly", "X^18 - X - 1"]);
    assert_eq!(code, 0);
    assert_eq!(
        text,
        "polynomial: X^18 + 2X + 2\n\
         modulus: 3\n\
         factors:\n\
         \x20 (X^2 + 2X + 2)^1\n\
         \x20 (X^3 + 2X^2 + 1)^1\n\
         \x20 (X^13 + 2X^12 + X^11 + X^8 + 2X^7 + 2X^6 + 2X^5 + X^4 + X^3 + 2X^2 + 1)^1\n"
    );
    let (code, text) = run_cli(&["factor", "--modulus", "5", "--poly", "X^18 - X - 1"]);
    assert_eq!(code, 0);
    assert_eq!(
        text,
        "polynomial: X^18 + 4X + 4\n\
         modulus: 5\n\
         factors:\n\
         \x20 (X + 2)^1\n\
         \x20 (X^17 + 3X^16 + 4X^15 + 2X^14 + X^13 + 3X^12 + 4X^11 + 2X^10 + X^9 + 3X^8 + 4X^7 + 2X^6 + X^5 + 3X^4 + 4X^3 + 2X^2 + X + 2)^1\n"
    );
    println!("PASS criterion 1: factorization of X^18 - X - 1 (three factors mod 3, two mod 5, exact)");
}

#[test]
fn criterion_2_irreducibility_intersection() {
    let f = UniPolyQ::x_pow_minus_x_minus_one(18);
    let cert = irreducibility_certificate(&f, &[3, 5]).expect("admissible witnesses");
    assert!(cert.is_certified());
    assert_eq!(cert.witnesses.len(), 2);
    let proper = |i: usize| -> Vec<usize> {
        cert.witnesses[i]
            .feasible
            .iter()
            .copied()
            .filter(|&s| s != 0 && s != 18)
            .collect()
    };
    assert_eq!(cert.witnesses[0].prime, 3);
    assert_eq!(proper(0), vec![2, 3, 5, 13, 15, 16]);
    assert_eq!(cert.witnesses[1].prime, 5);
    assert_eq!(proper(1), vec![1, 17]);
    let intersection: Vec<usize> = proper(0)
        .into_iter()
        .filter(|s| proper(1).contains(s))
        .collect();
    assert!(intersection.is_empty());
    println!("PASS criterion 2: irreducibility certified, {{2,3,5,13,15,16}} ∩ {{1,17}} = ∅");
}

#[test]
fn criterion_3_symmetric_galois_certificates() {
    for (d, pair) in [(18, (3, 5)), (22, (29, 107)), (26, (19, 67)), (30, (5, 53))] {
        let f = UniPolyQ::x_pow_minus_x_minus_one(d);
        let cert = certify_symmetric_galois(&f, Some(pair), 10_000)
            .unwrap_or_else(|e| panic!("degree {} with primes {:?} failed: {}", d, pair, e));
        assert_eq!(cert.group_symbol(), format!("Σ_{}", d));
        assert!(cert.revalidate());
        let mut used = vec![cert.b1.prime, cert.b2.prime];
        used.sort_unstable();
        assert_eq!(used, vec![pair.0.min(pair.1), pair.0.max(pair.1)]);
    }
    println!("PASS criterion 3: symmetric Galois certificates for d = 18, 22, 26, 30 with the pinned prime pairs");
}

const PINNED_POINT_IDEAL: &str = "ring Q[X,Y,Z,W] order degrevlex;
ideal M =
  XY - ZW,
  X^3 - YW^2,
  X^2Z - Y^2W,
  Y^3 - XZ^2,
  Y^2Z^3 - XW^4 - W^5,
  YZ^4 - X^2W^3 - XW^4,
  Z^5 - X^2W^3 - YW^4;";

#[test]
fn criterion_4_point_configuration_pipeline() {
    let r = build_counterexample_opts(18, false, Some((3, 5)), 100).unwrap();
    assert!(r.galois.is_certified());
    let pinned = parse_document(PINNED_POINT_IDEAL).unwrap();
    assert!(ideal_equal(&r.homogeneous.ideal(), pinned.first_ideal().1).unwrap());
    // Stronger than ideal equality: the reduced basis elements coincide
    // with the pinned generators as sets of canonical strings.
    let mut mine: Vec<String> = r
        .homogeneous
        .elements
        .iter()
        .map(|g| g.render(&r.homogeneous.ring))
        .collect();
    let mut pinned_strs: Vec<String> = pinned
        .first_ideal()
        .1
        .gens
        .iter()
        .map(|g| g.render(&r.homogeneous.ring))
        .collect();
    mine.sort();
    pinned_strs.sort();
    assert_eq!(mine, pinned_strs);
    assert_eq!(
        render_series(&r.series),
        "(1 + 3λ + 5λ^2 + 4λ^3 + 4λ^4 + λ^5) / (1 - λ)"
    );
    assert_eq!(r.h.entries(), &[1, 3, 5, 4, 4, 1]);
    assert_eq!(r.dimension, 1);
    assert_eq!(r.multiplicity, 18);
    println!("PASS criterion 4: homogenized point ideal equals the pinned basis; series, h-vector, dimension, multiplicity exact");
}

/// The pinned lifted basis text as printed at the source, whose last three
/// tails carry flipped signs relative to the ideal the pipeline derives.
const PINNED_LIFTED_AS_PRINTED: &str = "ring Q[X,Y,Z,T,W] order degrevlex;
ideal P =
  XY - ZW,
  X^3 - YW^2,
  X^2Z - Y^2W,
  Y^3 - XZ^2,
  Y^2Z^3 + XW^4 + TW^4 + W^5,
  YZ^4 + X^2W^3 + XTW^3 + XW^4,
  Z^5 + X^2TW^2 + X^2W^3 + YW^4;";

const PINNED_QUOTIENT_MOD_W: &str = "ring Q[X,Y,Z,T] order degrevlex;
ideal J =
  XY,
  X^3,
  X^2Z,
  Y^3 - XZ^2,
  Y^2Z^3,
  YZ^4,
  Z^5;";

/// Applies the substitution T ↦ −T − 2X − 2W to every basis element.
fn substitute_t(basis: &flawless::GroebnerBasisQ) -> IdealQ {
    let ring = basis.ring.clone();
    let t = ring.var_index("T").unwrap();
    let image = parse_polynomial("-T - 2X - 2W", &ring).unwrap();
    let gens = basis
        .elements
        .iter()
        .map(|g| {
            let mut acc = MPolyQ::zero();
            for (m, c) in g.terms() {
                let k = m.exp(t);
                let mut exps = m.exps().to_vec();
                exps[t] = 0;
                let rest = MPolyQ::term(Monomial::new(exps), c.clone());
                acc = acc.add(&rest.mul(&image.pow(k, &ring), &ring), &ring);
            }
            acc
        })
        .collect();
    IdealQ::new(ring, gens)
}

#[test]
fn criterion_5_lifted_curve_pipeline() {
    let r = build_counterexample_opts(18, true, Some((3, 5)), 100).unwrap();
    assert!(r.galois.is_certified());

    // The derived basis (sign-corrected pinned text) is the ideal itself…
    let corrected = parse_document(include_str!("data/homog18.ideal")).unwrap();
    assert!(ideal_equal(&r.homogeneous.ideal(), corrected.first_ideal().1).unwrap());
    // …the literal printed text is a different ideal…
    let printed = parse_document(PINNED_LIFTED_AS_PRINTED).unwrap();
    assert!(!ideal_equal(&r.homogeneous.ideal(), printed.first_ideal().1).unwrap());
    // …namely its image under the involution T ↦ −T − 2X − 2W.
    assert!(ideal_equal(&substitute_t(&r.homogeneous), printed.first_ideal().1).unwrap());

    assert_eq!(
        render_series(&r.series),
        "(1 + 3λ + 5λ^2 + 4λ^3 + 4λ^4 + λ^5) / (1 - λ)^2"
    );

    let quotient = set_variable_zero(&r.homogeneous.ideal(), "W").unwrap();
    let pinned_quotient = parse_document(PINNED_QUOTIENT_MOD_W).unwrap();
    assert!(ideal_equal(&quotient, pinned_quotient.first_ideal().1).unwrap());

    assert!(r.cm.verified);
    assert_eq!(r.cm.steps.len(), 2);
    assert!(r.cm.steps.iter().all(|s| s.is_nzd));
    assert!(r.cm.final_artinian);

    assert!(!r.flawless.flawless);
    assert_eq!(r.flawless.violations.len(), 1);
    let v = &r.flawless.violations[0];
    assert_eq!(v.condition, FlawlessCondition::II);
    assert_eq!((v.index, v.left, v.right), (2, 5, 4));
    assert!(r.upp.satisfied);

    println!("PASS criterion 5: lifted curve ideal matches the pinned basis (printed tails differ by the recorded sign involution), series over (1 - λ)^2, quotient mod W, regular sequence [W, T], flawless violation (ii, i=2), upp inequalities satisfied");
}

#[test]
fn criterion_6_order_ideal_listing() {
    let r = build_counterexample_opts(18, true, Some((3, 5)), 100).unwrap();
    let oi = r.order_ideal.as_ref().expect("artinian reduction exists");
    let ring = &r.cm.final_ideal.ring;
    assert_eq!(oi.len(), 18);
    assert_eq!(
        render_monomial_list(&oi.monomials, ring),
        "1, X, Y, Z, X^2, XZ, Y^2, YZ, Z^2, XZ^2, Y^2Z, YZ^2, Z^3, XZ^3, Y^2Z^2, YZ^3, Z^4, XZ^4"
    );
    assert_eq!(
        render_monomial_list(&oi.maximal, ring),
        "X^2, Y^2Z^2, YZ^3, XZ^4"
    );
    let mut degrees: Vec<u32> = oi.maximal.iter().map(|m| m.total_degree()).collect();
    degrees.sort_unstable();
    assert_eq!(degrees, vec![2, 4, 4, 5]);
    assert!(!oi.pure);
    println!("PASS criterion 6: order ideal is the pinned 18-monomial listing; maximal degrees {{2,4,4,5}}; purity false");
}

#[test]
fn criterion_7_degree_variants() {
    let expected: [(&str, &[i128]); 3] = [
        ("hibi22", &[1, 3, 5, 4, 4, 4, 1]),
        ("hibi26", &[1, 3, 5, 4, 4, 4, 4, 1]),
        ("hibi30", &[1, 3, 5, 4, 4, 4, 4, 4, 1]),
    ];
    for (name, h) in expected {
        let preset = flawless::preset_by_name(name).unwrap();
        let outcome = reproduce(preset).unwrap();
        assert!(outcome.ok, "{}: {:?}", name, outcome.checks);
        assert_eq!(outcome.report.h.entries(), h, "{}", name);
        assert!(!outcome.report.flawless.flawless, "{}", name);
    }
    println!("PASS criterion 7: hibi22/hibi26/hibi30 reproduce their pinned h-vectors, none flawless");
}

fn random_monomial(rng: &mut ChaCha8Rng, nvars: usize, maxdeg: u32) -> Monomial {
    loop {
        let exps: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=maxdeg)).collect();
        let total: u32 = exps.iter().sum();
        if total >= 1 && total <= maxdeg {
            return Monomial::new(exps);
        }
    }
}

fn random_poly(rng: &mut ChaCha8Rng, ring: &RingDescriptor) -> MPolyQ {
    let nterms = rng.gen_range(1..=4);
    let terms: Vec<(Monomial, flawless::Rational)> = (0..nterms)
        .map(|_| {
            let m = random_monomial(rng, ring.nvars(), 4);
            let c = loop {
                let c: i64 = rng.gen_range(-3..=3);
                if c != 0 {
                    break c;
                }
            };
            (m, flawless::Rational::from(flawless::Integer::from(c)))
        })
        .collect();
    MPolyQ::from_terms(ring, terms)
}

#[test]
fn criterion_8_property_corpora() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xF1A71E55);

    // (a) Every computed basis passes the S-polynomial criterion.
    let names = ["X", "Y", "Z"];
    let mut gb_checked = 0;
    while gb_checked < 200 {
        let nvars = rng.gen_range(1..=3);
        let ring = RingDescriptor::from_names(&names[..nvars], MonomialOrder::DegRevLex);
        let ngens = rng.gen_range(1..=3);
        let gens: Vec<MPolyQ> = (0..ngens).map(|_| random_poly(&mut rng, &ring)).collect();
        let ideal = IdealQ::new(ring.clone(), gens.clone());
        if ideal.gens.is_empty() {
            continue;
        }
        let gb = buchberger_reduced(&ideal);
        for i in 0..gb.elements.len() {
            for j in i + 1..gb.elements.len() {
                let s = s_polynomial(&gb.elements[i], &gb.elements[j], &ring);
                assert!(
                    normal_form(&s, &gb.elements, &ring).is_zero(),
                    "S-polynomial failed to reduce for {:?}",
                    gens.iter().map(|g| g.render(&ring)).collect::<Vec<_>>()
                );
            }
        }
        for g in &ideal.gens {
            assert!(normal_form(g, &gb.elements, &ring).is_zero());
        }
        gb_checked += 1;
    }

    // (b) Series expansion equals standard-monomial counting.
    for _ in 0..200 {
        let nvars = rng.gen_range(1..=5);
        let ngens = rng.gen_range(1..=5);
        let gens: Vec<Monomial> = (0..ngens)
            .map(|_| random_monomial(&mut rng, nvars, 6))
            .collect();
        let m = MonomialIdeal::new(nvars, gens);
        let n = hilbert_numerator(&m);
        assert_eq!(
            n,
            flawless::hilbert::hilbert_numerator_with(&m, PivotStrategy::FirstSharedLinear)
        );
        let series = reduce_poincare(&n, nvars).unwrap();
        let expansion = series_coefficients(&series, 8);
        let counts: Vec<i128> = standard_monomials(&m, 8)
            .counts()
            .iter()
            .map(|&c| c as i128)
            .collect();
        assert_eq!(expansion, counts, "ideal {:?}", m.gens());
    }

    // (c) Factorization reassembles and is seed-independent.
    let primes = [2u64, 3, 5, 7, 101];
    for i in 0..500 {
        let p = primes[i % primes.len()];
        let deg = rng.gen_range(1..=12);
        let mut coeffs: Vec<u64> = (0..=deg).map(|_| rng.gen_range(0..p)).collect();
        let lead = rng.gen_range(1..p.max(2));
        coeffs[deg] = lead.min(p - 1).max(1);
        let f = UniPolyP::from_residues(p, coeffs).unwrap();
        let fa = factor_mod_p(&f, 7);
        let fb = factor_mod_p(&f, 8_675_309);
        assert_eq!(fa, fb, "seed dependence for {:?} mod {}", f.coeffs(), p);
        assert_eq!(fa.product(), f, "reassembly failed mod {}", p);
    }

    // (d) The h-vector is invariant under the Artinian reduction.
    let r = build_counterexample_opts(18, true, Some((3, 5)), 100).unwrap();
    let artinian_gb = buchberger_reduced(&r.cm.final_ideal);
    let artinian_series = reduce_poincare(
        &hilbert_numerator(&lt_ideal(&artinian_gb)),
        r.cm.final_ideal.ring.nvars(),
    )
    .unwrap();
    assert_eq!(artinian_series.pole_order, 0);
    assert_eq!(h_vector(&artinian_series).entries(), r.h.entries());
    let _: &PoincareSeries = &artinian_series;

    // (e) Multiplicity equals the degree for every preset.
    for preset in &PRESETS {
        let report =
            build_counterexample_opts(preset.degree, true, Some(preset.primes), 10_000).unwrap();
        assert!(matches!(report.galois, GaloisStatus::Certified(_)));
        assert_eq!(report.multiplicity, preset.degree as i128);
    }

    println!("PASS criterion 8: 200 Gröbner S-polynomial checks, 200 series-vs-counting checks, 500 factorization reassembly/seed checks, h-vector invariance, multiplicity = d for all presets");
}
