//! Named reproduction targets: degrees with published witness primes and
//! h-vectors, re-derived from scratch and compared check by check.

use crate::analysis::{build_counterexample_opts, AnalysisError, CounterexampleReport, GaloisStatus};
use crate::render::{render_hvector, render_mpoly, render_monomial_list};
use crate::hilbert::HVector;

/// Pinned expected values for one degree.
#[derive(Debug, Clone, Copy)]
pub struct ReproPreset {
    pub name: &'static str,
    pub degree: usize,
    /// Witness-prime pair (either order; roles are assigned by shape).
    pub primes: (u64, u64),
    pub h: &'static [i128],
    /// Expected reduced-basis generators of the homogenized ideal, in
    /// basis order, when the source pins them.
    pub generators: Option<&'static [&'static str]>,
    /// Expected order-ideal monomial listing, when pinned.
    pub order_ideal_monomials: Option<&'static str>,
    /// Expected maximal elements of the order ideal, when pinned.
    pub maximal_elements: Option<&'static str>,
}

/// The degree-18 basis, ascending by leading monomial.
const GENERATORS_18: &[&str] = &[
    "XY - ZW",
    "X^2Z - Y^2W",
    "Y^3 - XZ^2",
    "X^3 - YW^2",
    "Z^5 - X^2TW^2 - X^2W^3 - YW^4",
    "YZ^4 - X^2W^3 - XTW^3 - XW^4",
    "Y^2Z^3 - XW^4 - TW^4 - W^5",
];

const ORDER_IDEAL_18: &str = "1, X, Y, Z, X^2, XZ, Y^2, YZ, Z^2, XZ^2, Y^2Z, YZ^2, Z^3, XZ^3, Y^2Z^2, YZ^3, Z^4, XZ^4";

const MAXIMAL_18: &str = "X^2, Y^2Z^2, YZ^3, XZ^4";

/// All named reproduction targets.
pub const PRESETS: [ReproPreset; 4] = [
    ReproPreset {
        name: "hibi18",
        degree: 18,
        primes: (3, 5),
        h: &[1, 3, 5, 4, 4, 1],
        generators: Some(GENERATORS_18),
        order_ideal_monomials: Some(ORDER_IDEAL_18),
        maximal_elements: Some(MAXIMAL_18),
    },
    ReproPreset {
        name: "hibi22",
        degree: 22,
        primes: (29, 107),
        h: &[1, 3, 5, 4, 4, 4, 1],
        generators: None,
        order_ideal_monomials: None,
        maximal_elements: None,
    },
    ReproPreset {
        name: "hibi26",
        degree: 26,
        primes: (19, 67),
        h: &[1, 3, 5, 4, 4, 4, 4, 1],
        generators: None,
        order_ideal_monomials: None,
        maximal_elements: None,
    },
    ReproPreset {
        name: "hibi30",
        degree: 30,
        primes: (5, 53),
        h: &[1, 3, 5, 4, 4, 4, 4, 4, 1],
        generators: None,
        order_ideal_monomials: None,
        maximal_elements: None,
    },
];

/// Looks a preset up by its name.
pub fn preset_by_name(name: &str) -> Option<&'static ReproPreset> {
    PRESETS.iter().find(|p| p.name == name)
}

/// One expected-vs-actual comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReproCheck {
    pub key: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

/// All checks for one preset, plus the underlying report.
#[derive(Debug, Clone)]
pub struct ReproOutcome {
    pub name: &'static str,
    pub checks: Vec<ReproCheck>,
    pub ok: bool,
    pub report: CounterexampleReport,
}

fn check(checks: &mut Vec<ReproCheck>, key: &str, expected: String, actual: String) {
    let ok = expected == actual;
    checks.push(ReproCheck {
        key: key.to_string(),
        expected,
        actual,
        ok,
    });
}

/// Rebuilds the preset's construction and compares every pinned value.
pub fn reproduce(preset: &ReproPreset) -> Result<ReproOutcome, AnalysisError> {
    let report = build_counterexample_opts(
        preset.degree,
        true,
        Some(preset.primes),
        crate::analysis::DEFAULT_PRIME_BOUND,
    )?;
    let mut checks = Vec::new();

    check(
        &mut checks,
        "galois certified",
        "true".to_string(),
        report.galois.is_certified().to_string(),
    );
    let mut expected_primes = vec![preset.primes.0, preset.primes.1];
    expected_primes.sort_unstable();
    let actual_primes = match &report.galois {
        GaloisStatus::Certified(c) => {
            let mut ps = vec![c.b1.prime, c.b2.prime];
            ps.sort_unstable();
            format!("{:?}", ps)
        }
        GaloisStatus::NotCertified { reason } => reason.clone(),
    };
    check(
        &mut checks,
        "witness primes",
        format!("{:?}", expected_primes),
        actual_primes,
    );
    check(
        &mut checks,
        "h-vector",
        render_hvector(&HVector::new(preset.h.to_vec())),
        render_hvector(&report.h),
    );
    check(
        &mut checks,
        "dimension",
        "2".to_string(),
        report.dimension.to_string(),
    );
    check(
        &mut checks,
        "multiplicity",
        preset.degree.to_string(),
        report.multiplicity.to_string(),
    );
    check(
        &mut checks,
        "flawless",
        "false".to_string(),
        report.flawless.flawless.to_string(),
    );
    check(
        &mut checks,
        "upp inequalities",
        "satisfied".to_string(),
        if report.upp.satisfied {
            "satisfied"
        } else {
            "violated"
        }
        .to_string(),
    );
    check(
        &mut checks,
        "regular sequence verified",
        "true".to_string(),
        report.cm.verified.to_string(),
    );
    if let Some(gens) = preset.generators {
        let actual: Vec<String> = report
            .homogeneous
            .elements
            .iter()
            .map(|g| render_mpoly(g, &report.homogeneous.ring))
            .collect();
        check(
            &mut checks,
            "generators",
            gens.join("\n"),
            actual.join("\n"),
        );
    }
    if let Some(expected) = preset.order_ideal_monomials {
        let actual = match &report.order_ideal {
            Some(oi) => render_monomial_list(&oi.monomials, &report.cm.final_ideal.ring),
            None => "unavailable".to_string(),
        };
        check(&mut checks, "order ideal", expected.to_string(), actual);
    }
    if let Some(expected) = preset.maximal_elements {
        let actual = match &report.order_ideal {
            Some(oi) => render_monomial_list(&oi.maximal, &report.cm.final_ideal.ring),
            None => "unavailable".to_string(),
        };
        check(&mut checks, "maximal elements", expected.to_string(), actual);
        let pure = match &report.order_ideal {
            Some(oi) => oi.pure.to_string(),
            None => "unavailable".to_string(),
        };
        check(&mut checks, "pure", "false".to_string(), pure);
    }

    let ok = checks.iter().all(|c| c.ok);
    Ok(ReproOutcome {
        name: preset.name,
        checks,
        ok,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_lookup() {
        assert_eq!(preset_by_name("hibi18").unwrap().degree, 18);
        assert_eq!(preset_by_name("hibi30").unwrap().degree, 30);
        assert!(preset_by_name("hibi19").is_none());
        for p in &PRESETS {
            assert_eq!(p.h.iter().sum::<i128>(), p.degree as i128);
            assert_eq!(p.h.len(), (p.degree - 18) / 4 + 6);
        }
    }

    #[test]
    fn reproduce_degree_18() {
        let out = reproduce(preset_by_name("hibi18").unwrap()).unwrap();
        for c in &out.checks {
            assert!(c.ok, "check '{}' mismatched: expected {:?}, got {:?}", c.key, c.expected, c.actual);
        }
        assert!(out.ok);
        assert_eq!(out.report.degree, 18);
    }
}
