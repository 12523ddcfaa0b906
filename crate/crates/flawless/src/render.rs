//! Deterministic text rendering for every artifact the library produces.
//!
//! Polynomial and ideal renderings parse back to equal values; series,
//! h-vectors, and reports use a fixed line layout so outputs can be
//! compared byte-for-byte.

use crate::analysis::{CMReport, CounterexampleReport, FlawlessReport, GaloisStatus, UPPReport};
use crate::factor::{DegreePattern, FactorListP};
use crate::galois::SymmetricGaloisCertificate;
use crate::groebner::IdealQ;
use crate::hilbert::{HVector, OrderIdeal, PoincareSeries, SeriesNumerator};
use crate::mpoly::{monomial_string, MPolyQ, Monomial, MonomialOrder, RingDescriptor};
use crate::unipoly::{UniPolyP, UniPolyQ};
use crate::Rational;
use num_traits::{One, Signed, Zero};

/// `a` for integers, `a/b` otherwise (denominators are kept positive).
pub fn render_rational(c: &Rational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Renders in stored (descending) term order; output re-parses to `f`.
pub fn render_mpoly(f: &MPolyQ, ring: &RingDescriptor) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in f.terms().iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m.is_one() {
            out.push_str(&render_rational(&mag));
        } else {
            if !mag.is_one() {
                out.push_str(&render_rational(&mag));
            }
            out.push_str(&monomial_string(m, ring));
        }
    }
    out
}

/// One-variable rendering, degree descending (`X^18 - X - 1`).
pub fn render_unipoly(f: &UniPolyQ, var: &str) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for k in (0..=f.degree()).rev() {
        let c = f.coeff(k);
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                out.push('-');
            }
            first = false;
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if k == 0 {
            out.push_str(&render_rational(&mag));
        } else {
            if !mag.is_one() {
                out.push_str(&render_rational(&mag));
            }
            out.push_str(var);
            if k > 1 {
                out.push('^');
                out.push_str(&k.to_string());
            }
        }
    }
    out
}

/// Rendering over F_p with canonical residues (`X^18 + 2X + 2`).
pub fn render_unipoly_p(f: &UniPolyP, var: &str) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for k in (0..=f.degree()).rev() {
        let c = f.coeff(k);
        if c == 0 {
            continue;
        }
        if !first {
            out.push_str(" + ");
        }
        first = false;
        if k == 0 {
            out.push_str(&c.to_string());
        } else {
            if c != 1 {
                out.push_str(&c.to_string());
            }
            out.push_str(var);
            if k > 1 {
                out.push('^');
                out.push_str(&k.to_string());
            }
        }
    }
    out
}

/// Factorization listing, one `(factor)^multiplicity` per line.
pub fn render_factor_list(fl: &FactorListP, var: &str) -> String {
    let mut out = format!("modulus: {}\n", fl.modulus());
    if !fl.unit.is_one() {
        out.push_str(&format!("unit: {}\n", fl.unit.value()));
    }
    out.push_str("factors:\n");
    for (g, e) in &fl.factors {
        out.push_str(&format!("  ({})^{}\n", render_unipoly_p(g, var), e));
    }
    out
}

/// Numerator polynomial in λ, degree ascending (`1 + 3λ + 5λ^2`).
pub fn render_numerator(n: &SeriesNumerator) -> String {
    if n.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (k, &c) in n.coeffs().iter().enumerate() {
        if c == 0 {
            continue;
        }
        let neg = c < 0;
        let mag = c.abs();
        if first {
            if neg {
                out.push('-');
            }
            first = false;
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if k == 0 {
            out.push_str(&mag.to_string());
        } else {
            if mag != 1 {
                out.push_str(&mag.to_string());
            }
            out.push('λ');
            if k > 1 {
                out.push('^');
                out.push_str(&k.to_string());
            }
        }
    }
    out
}

/// Full series, e.g. `(1 + 3λ + 5λ^2 + 4λ^3 + 4λ^4 + λ^5) / (1 - λ)^2`.
pub fn render_series(s: &PoincareSeries) -> String {
    let num = render_numerator(&s.numerator);
    match s.pole_order {
        0 => num,
        1 => format!("({}) / (1 - λ)", num),
        d => format!("({}) / (1 - λ)^{}", num, d),
    }
}

/// Compact tuple form without spaces: `(1,3,5,4,4,1)`.
pub fn render_hvector(h: &HVector) -> String {
    let parts: Vec<String> = h.entries().iter().map(|e| e.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Degree pattern as a multiset: `{1, 17}`.
pub fn render_pattern(p: &DegreePattern) -> String {
    let parts: Vec<String> = p.entries().iter().map(|e| e.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

/// The ring declaration line of the document grammar.
pub fn render_ring(ring: &RingDescriptor) -> String {
    let order = match ring.order() {
        MonomialOrder::DegRevLex => "degrevlex",
        MonomialOrder::DegLex => "deglex",
        MonomialOrder::ElimFirst => "elimfirst",
    };
    format!("ring Q[{}] order {};", ring.vars().join(","), order)
}

/// An ideal declaration block, one generator per line.
pub fn render_ideal_block(name: &str, ideal: &IdealQ) -> String {
    if ideal.gens.is_empty() {
        return format!("ideal {} = 0;\n", name);
    }
    let mut out = format!("ideal {} =\n", name);
    for (i, g) in ideal.gens.iter().enumerate() {
        out.push_str("  ");
        out.push_str(&render_mpoly(g, &ideal.ring));
        out.push_str(if i + 1 < ideal.gens.len() { ",\n" } else { ";\n" });
    }
    out
}

/// Comma-separated monomial list in the given ring's names.
pub fn render_monomial_list(ms: &[Monomial], ring: &RingDescriptor) -> String {
    let parts: Vec<String> = ms.iter().map(|m| monomial_string(m, ring)).collect();
    parts.join(", ")
}

/// Certificate summary: group, witnesses, and irreducibility evidence.
pub fn render_certificate(cert: &SymmetricGaloisCertificate) -> String {
    let mut out = String::new();
    out.push_str(&format!("group: {}\n", cert.group_symbol()));
    out.push_str(&format!(
        "polynomial: {}\n",
        render_unipoly(&cert.polynomial, "X")
    ));
    out.push_str(&format!(
        "b1 witness: prime {}, pattern {}\n",
        cert.b1.prime,
        render_pattern(&cert.b1.pattern)
    ));
    out.push_str(&format!(
        "b2 witness: prime {}, pattern {}\n",
        cert.b2.prime,
        render_pattern(&cert.b2.pattern)
    ));
    out.push_str("irreducibility witnesses:\n");
    for w in &cert.irreducibility.witnesses {
        out.push_str(&format!(
            "  prime {}: pattern {}\n",
            w.prime,
            render_pattern(&w.pattern)
        ));
    }
    out
}

/// Flawlessness verdict with every violated inequality spelled out.
pub fn render_flawless(r: &FlawlessReport) -> String {
    let mut out = format!("flawless: {}\n", r.flawless);
    for v in &r.violations {
        out.push_str(&format!(
            "  violated condition {} at i={}: h = {} > {}\n",
            v.condition, v.index, v.left, v.right
        ));
    }
    out
}

/// Partial-sum inequality table.
pub fn render_upp(r: &UPPReport) -> String {
    let mut out = format!(
        "upp inequalities: {}\n",
        if r.satisfied { "satisfied" } else { "violated" }
    );
    for e in &r.entries {
        out.push_str(&format!(
            "  i={}: {} {} {}\n",
            e.i,
            e.left,
            if e.holds { "<=" } else { ">" },
            e.right
        ));
    }
    out
}

/// Regular-sequence verification steps and verdict.
pub fn render_cm(cm: &CMReport) -> String {
    let seq: Vec<&str> = cm.steps.iter().map(|s| s.var.as_str()).collect();
    let mut out = format!("sequence: [{}]\n", seq.join(", "));
    for (i, st) in cm.steps.iter().enumerate() {
        out.push_str(&format!(
            "  step {}: {} non-zerodivisor: {}\n",
            i + 1,
            st.var,
            st.is_nzd
        ));
    }
    out.push_str(&format!("artinian residue: {}\n", cm.final_artinian));
    out.push_str(&format!("verified: {}\n", cm.verified));
    out
}

/// Order-ideal listing with maximal elements and purity verdict.
pub fn render_order_ideal(oi: &OrderIdeal, ring: &RingDescriptor) -> String {
    let mut out = format!("size: {}\n", oi.len());
    out.push_str(&format!(
        "monomials: {}\n",
        render_monomial_list(&oi.monomials, ring)
    ));
    out.push_str(&format!(
        "maximal elements: {}\n",
        render_monomial_list(&oi.maximal, ring)
    ));
    let degs: Vec<String> = oi
        .maximal
        .iter()
        .map(|m| m.total_degree().to_string())
        .collect();
    out.push_str(&format!("maximal degrees: ({})\n", degs.join(",")));
    out.push_str(&format!("pure: {}\n", oi.pure));
    out
}

/// The full pipeline report in a fixed key order.
pub fn render_report(r: &CounterexampleReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("degree: {}\n", r.degree));
    out.push_str(&format!(
        "polynomial: {}\n",
        render_unipoly(&r.polynomial, "X")
    ));
    out.push_str(&format!("lifted: {}\n", r.lifted));
    match &r.galois {
        GaloisStatus::Certified(c) => {
            out.push_str("galois: certified\n");
            out.push_str(&render_certificate(c));
        }
        GaloisStatus::NotCertified { reason } => {
            out.push_str("galois: not certified\n");
            out.push_str(&format!("reason: {}\n", reason));
        }
    }
    out.push_str(&format!("affine ring: {}\n", render_ring(&r.affine.ring)));
    out.push_str("affine ideal:\n");
    out.push_str(&render_ideal_block("I", &r.affine));
    out.push_str(&format!(
        "homogeneous ring: {}\n",
        render_ring(&r.homogeneous.ring)
    ));
    out.push_str("homogeneous basis:\n");
    out.push_str(&render_ideal_block("P", &r.homogeneous.ideal()));
    out.push_str(&format!("poincare series: {}\n", render_series(&r.series)));
    out.push_str(&format!("h-vector: {}\n", render_hvector(&r.h)));
    out.push_str(&format!("dimension: {}\n", r.dimension));
    out.push_str(&format!("multiplicity: {}\n", r.multiplicity));
    out.push_str(&render_flawless(&r.flawless));
    out.push_str(&render_upp(&r.upp));
    out.push_str("regular sequence:\n");
    out.push_str(&render_cm(&r.cm));
    out.push_str("artinian reduction:\n");
    out.push_str(&render_ideal_block("A", &r.cm.final_ideal));
    match &r.order_ideal {
        Some(oi) => {
            out.push_str("order ideal:\n");
            out.push_str(&render_order_ideal(oi, &r.cm.final_ideal.ring));
        }
        None => out.push_str("order ideal: unavailable\n"),
    }
    out
}
