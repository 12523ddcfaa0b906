//! Browser bindings for the flawless library.
//!
//! Three text-in/text-out entry points back the demo page in `www/`:
//! factorization over a prime field, symmetric-Galois certification, and the
//! full counterexample pipeline for a chosen degree. Errors come back as
//! `error: …` text so the page can render them without special cases.

use flawless::analysis::DEFAULT_PRIME_BOUND;
use flawless::galois::certify_symmetric_galois;
use flawless::render::{render_certificate, render_factor_list, render_report, render_unipoly_p};
use flawless::{build_counterexample, factor_mod_p, is_prime, parse_unipoly};
use wasm_bindgen::prelude::*;

/// Factors a rational polynomial modulo a prime and renders the result.
#[wasm_bindgen]
pub fn factor_text(poly: &str, modulus: u64) -> String {
    if !is_prime(modulus) {
        return "error: modulus must be prime".to_string();
    }
    let f = match parse_unipoly(poly) {
        Ok(f) => f,
        Err(e) => return format!("error: {}", e),
    };
    let fp = match f.reduce_mod_p(modulus) {
        Ok(fp) => fp,
        Err(e) => return format!("error: {}", e),
    };
    if fp.is_zero() {
        return "error: the polynomial is zero modulo p".to_string();
    }
    let factors = factor_mod_p(&fp, 0);
    format!(
        "polynomial: {}\n{}",
        render_unipoly_p(&fp, "X"),
        render_factor_list(&factors, "X")
    )
}

/// Certifies that a polynomial has the full symmetric group as Galois group.
#[wasm_bindgen]
pub fn galois_certificate_text(poly: &str) -> String {
    let f = match parse_unipoly(poly) {
        Ok(f) => f,
        Err(e) => return format!("error: {}", e),
    };
    match certify_symmetric_galois(&f, None, DEFAULT_PRIME_BOUND) {
        Ok(cert) => format!("verdict: certified\n{}", render_certificate(&cert)),
        Err(e) => format!("verdict: not certified\nreason: {}", e),
    }
}

/// Runs the whole pipeline for X^d - X - 1 and renders the report.
#[wasm_bindgen]
pub fn counterexample_text(degree: u32, lifted: bool) -> String {
    if !(2..=30).contains(&degree) {
        return "error: degree must lie in 2..=30".to_string();
    }
    match build_counterexample(degree as usize, lifted) {
        Ok(report) => render_report(&report),
        Err(e) => format!("error: {}", e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_text_matches_cli_shape() {
        let out = factor_text("X^18 - X - 1", 3);
        assert!(out.starts_with("polynomial: X^18 + 2X + 2\n"));
        assert!(out.contains("factors:\n"));
        assert!(factor_text("X^2", 4).starts_with("error: modulus must be prime"));
        assert!(factor_text("garbage$", 3).starts_with("error:"));
    }

    #[test]
    fn galois_text_has_a_verdict() {
        let out = galois_certificate_text("X^18 - X - 1");
        assert!(out.starts_with("verdict: certified\n"));
        assert!(out.contains("group: Σ_18"));
        let bad = galois_certificate_text("X^4 - 1");
        assert!(bad.starts_with("verdict: not certified\n"));
    }

    #[test]
    fn counterexample_text_reports_the_h_vector() {
        let out = counterexample_text(18, true);
        assert!(out.contains("h-vector: (1,3,5,4,4,1)"));
        assert!(out.contains("flawless: false"));
        assert!(counterexample_text(1, true).starts_with("error: degree"));
    }
}
