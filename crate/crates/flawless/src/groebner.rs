//! Reduced Gröbner bases over Q and the ideal operations built on them:
//! equality, quotients, zero-divisor tests, homogenization, and variable
//! substitution.
//!
//! Buchberger's algorithm runs with the normal selection strategy (pairs
//! ordered by lcm degree, then term order, then index) and discards pairs
//! by the coprime-leading-term criterion and the chain criterion. The
//! output is minimalized, fully inter-reduced, made monic, and sorted
//! ascending by leading monomial — the unique reduced basis.

use crate::mpoly::{order_compare, MPolyQ, Monomial, MonomialOrder, RingDescriptor, RingError};
use crate::Rational;
use num_traits::One;
use std::cmp::Ordering;
use thiserror::Error;

/// Errors from ideal-level operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("homogenization requires a degree-compatible monomial order")]
    OrderNotDegreeCompatible,
    #[error("cannot form an ideal quotient by the zero polynomial")]
    QuotientByZero,
}

/// A finitely generated ideal, presented by generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealQ {
    pub ring: RingDescriptor,
    pub gens: Vec<MPolyQ>,
}

impl IdealQ {
    /// Keeps the nonzero generators.
    pub fn new(ring: RingDescriptor, gens: Vec<MPolyQ>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        IdealQ { ring, gens }
    }
}

/// A reduced Gröbner basis; `elements` are monic, inter-reduced, and
/// sorted ascending by leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasisQ {
    pub ring: RingDescriptor,
    pub elements: Vec<MPolyQ>,
}

impl GroebnerBasisQ {
    /// Reads the basis back as an ideal presentation.
    pub fn ideal(&self) -> IdealQ {
        IdealQ::new(self.ring.clone(), self.elements.clone())
    }

    /// Leading monomials, in basis order.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.lm().expect("basis elements are nonzero").clone())
            .collect()
    }
}

/// Divides `f` by the list `basis` (in the given order, first divisor
/// wins); returns the remainder, no term of which is divisible by any
/// basis leading monomial.
pub fn normal_form(f: &MPolyQ, basis: &[MPolyQ], ring: &RingDescriptor) -> MPolyQ {
    let mut work = f.clone();
    let mut remainder: Vec<(Monomial, Rational)> = Vec::new();
    'outer: while let Some((wm, wc)) = work.lt() {
        for g in basis {
            let (gm, gc) = match g.lt() {
                Some(t) => t,
                None => continue,
            };
            if let Some(q) = wm.checked_div(gm) {
                let coeff = wc / gc;
                let sub = g.mul_term(&q, &coeff);
                work = work.sub(&sub, ring);
                continue 'outer;
            }
        }
        // Irreducible leading term: move it to the remainder. Successive
        // moved terms strictly decrease, so the list stays sorted.
        remainder.push((wm.clone(), wc.clone()));
        work = MPolyQ::from_terms(ring, work.terms()[1..].to_vec());
    }
    MPolyQ::from_terms(ring, remainder)
}

/// The S-polynomial (lcm/lt(f))·f − (lcm/lt(g))·g.
pub fn s_polynomial(f: &MPolyQ, g: &MPolyQ, ring: &RingDescriptor) -> MPolyQ {
    let (fm, fc) = f.lt().expect("s_polynomial of zero polynomial");
    let (gm, gc) = g.lt().expect("s_polynomial of zero polynomial");
    let l = fm.lcm(gm);
    let uf = l.checked_div(fm).unwrap();
    let ug = l.checked_div(gm).unwrap();
    let left = f.mul_term(&uf, &(Rational::one() / fc));
    let right = g.mul_term(&ug, &(Rational::one() / gc));
    left.sub(&right, ring)
}

fn pair_key(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

fn pending_contains(pending: &[(usize, usize)], i: usize, j: usize) -> bool {
    pending.contains(&pair_key(i, j))
}

/// Normal selection: the pending pair whose lcm has smallest degree, then
/// smallest lcm in the term order, then smallest indices.
fn select_pair(
    pending: &[(usize, usize)],
    basis: &[MPolyQ],
    ring: &RingDescriptor,
) -> Option<usize> {
    let mut best: Option<(usize, Monomial)> = None;
    for (pos, &(i, j)) in pending.iter().enumerate() {
        let l = basis[i].lm().unwrap().lcm(basis[j].lm().unwrap());
        let better = match &best {
            None => true,
            Some((bpos, bl)) => {
                match l
                    .total_degree()
                    .cmp(&bl.total_degree())
                    .then_with(|| order_compare(&l, bl, ring))
                {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => pending[pos] < pending[*bpos],
                }
            }
        };
        if better {
            best = Some((pos, l));
        }
    }
    best.map(|(pos, _)| pos)
}

/// Chain criterion: the popped pair (i, j) is redundant if some third
/// element's leading monomial divides the pair's lcm and both side pairs
/// have already been handled.
fn chain_redundant(
    i: usize,
    j: usize,
    l: &Monomial,
    basis: &[MPolyQ],
    pending: &[(usize, usize)],
) -> bool {
    (0..basis.len()).any(|k| {
        k != i
            && k != j
            && basis[k].lm().unwrap().divides(l)
            && !pending_contains(pending, i, k)
            && !pending_contains(pending, j, k)
    })
}

/// Buchberger's algorithm returning the unique reduced Gröbner basis.
pub fn buchberger_reduced(ideal: &IdealQ) -> GroebnerBasisQ {
    let ring = &ideal.ring;
    let mut basis: Vec<MPolyQ> = ideal
        .gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic())
        .collect();
    let mut pending: Vec<(usize, usize)> = Vec::new();
    for j in 1..basis.len() {
        for i in 0..j {
            pending.push((i, j));
        }
    }
    while let Some(pos) = select_pair(&pending, &basis, ring) {
        let (i, j) = pending.swap_remove(pos);
        let lmi = basis[i].lm().unwrap();
        let lmj = basis[j].lm().unwrap();
        let l = lmi.lcm(lmj);
        // Coprime criterion: disjoint leading monomials reduce to zero.
        if l.total_degree() == lmi.total_degree() + lmj.total_degree() {
            continue;
        }
        if chain_redundant(i, j, &l, &basis, &pending) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], ring);
        let nf = normal_form(&s, &basis, ring);
        if !nf.is_zero() {
            basis.push(nf.monic());
            let t = basis.len() - 1;
            for k in 0..t {
                pending.push((k, t));
            }
        }
    }

    // Minimalize: drop elements whose leading monomial is divisible by
    // another kept one. Ascending scan suffices since a divisor is never
    // larger in any monomial order.
    basis.sort_by(|a, b| order_compare(a.lm().unwrap(), b.lm().unwrap(), ring));
    let mut minimal: Vec<MPolyQ> = Vec::new();
    for g in basis {
        let lm = g.lm().unwrap();
        if !minimal.iter().any(|h| h.lm().unwrap().divides(lm)) {
            minimal.push(g);
        }
    }

    // Inter-reduce: replace each element by its normal form against the
    // others. Leading terms survive (they are minimal), and the result is
    // the canonical reduced basis.
    for idx in 0..minimal.len() {
        let others: Vec<MPolyQ> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != idx)
            .map(|(_, g)| g.clone())
            .collect();
        let reduced = normal_form(&minimal[idx], &others, ring).monic();
        debug_assert!(!reduced.is_zero());
        minimal[idx] = reduced;
    }
    minimal.sort_by(|a, b| order_compare(a.lm().unwrap(), b.lm().unwrap(), ring));
    GroebnerBasisQ {
        ring: ring.clone(),
        elements: minimal,
    }
}

/// Homogenizes an ideal with a fresh last variable and returns the reduced
/// Gröbner basis of the homogenized ideal.
///
/// For `DegRevLex` (with the new variable least), homogenizing each
/// element of the reduced basis of the input *is* the reduced basis of the
/// homogenization, with leading monomials unchanged. For `DegLex` that
/// fails in general, so the basis is recomputed in the extended ring.
pub fn homogenize_ideal(ideal: &IdealQ, newvar: &str) -> Result<GroebnerBasisQ, GroebnerError> {
    if !ideal.ring.order().is_degree_compatible() {
        return Err(GroebnerError::OrderNotDegreeCompatible);
    }
    let ring_ext = ideal.ring.extended(newvar)?;
    let gb = buchberger_reduced(ideal);
    let homog: Vec<MPolyQ> = gb
        .elements
        .iter()
        .map(|g| g.homogenize(&ring_ext))
        .collect();
    match ideal.ring.order() {
        MonomialOrder::DegRevLex => Ok(GroebnerBasisQ {
            ring: ring_ext,
            elements: homog,
        }),
        _ => Ok(buchberger_reduced(&IdealQ::new(ring_ext, homog))),
    }
}

/// Sets the named variable to 1 in every generator and removes it from the
/// ring.
pub fn dehomogenize_ideal(ideal: &IdealQ, var: &str) -> Result<IdealQ, GroebnerError> {
    let idx = ideal
        .ring
        .var_index(var)
        .ok_or_else(|| RingError::UnknownVariable(var.to_string()))?;
    let ring = ideal.ring.without(idx);
    let gens = ideal
        .gens
        .iter()
        .map(|g| {
            let h = g.subst_one(idx, &ideal.ring).without_var(idx);
            MPolyQ::from_terms(&ring, h.terms().to_vec())
        })
        .collect();
    Ok(IdealQ::new(ring, gens))
}

/// Decides I = J by reducing each side's generators against the other's
/// basis.
pub fn ideal_equal(lhs: &IdealQ, rhs: &IdealQ) -> Result<bool, GroebnerError> {
    if lhs.ring != rhs.ring {
        return Err(RingError::RingMismatch.into());
    }
    let gl = buchberger_reduced(lhs);
    let gr = buchberger_reduced(rhs);
    Ok(lhs
        .gens
        .iter()
        .all(|g| normal_form(g, &gr.elements, &lhs.ring).is_zero())
        && rhs
            .gens
            .iter()
            .all(|g| normal_form(g, &gl.elements, &lhs.ring).is_zero()))
}

/// Exact division of `g` by `f`; `None` when `f` does not divide `g`.
fn divide_exact(g: &MPolyQ, f: &MPolyQ, ring: &RingDescriptor) -> Option<MPolyQ> {
    let (fm, fc) = f.lt()?;
    let mut rem = g.clone();
    let mut quot: Vec<(Monomial, Rational)> = Vec::new();
    while let Some((rm, rc)) = rem.lt() {
        let q = rm.checked_div(fm)?;
        let c = rc / fc;
        rem = rem.sub(&f.mul_term(&q, &c), ring);
        quot.push((q, c));
    }
    Some(MPolyQ::from_terms(ring, quot))
}

/// The ideal quotient (J : f) = { g : g·f ∈ J }, computed by eliminating
/// an auxiliary variable t from (t·J, (1−t)·f) to get J ∩ (f), then
/// dividing by f.
pub fn ideal_quotient(ideal: &IdealQ, f: &MPolyQ) -> Result<IdealQ, GroebnerError> {
    if f.is_zero() {
        return Err(GroebnerError::QuotientByZero);
    }
    let ring = &ideal.ring;
    let aux = ring.prepended("#t", MonomialOrder::ElimFirst)?;
    let t = MPolyQ::var(&aux, 0);
    let lift =
        |g: &MPolyQ| -> MPolyQ { MPolyQ::from_terms(&aux, g.prepended().terms().to_vec()) };
    let mut gens: Vec<MPolyQ> = ideal.gens.iter().map(|g| t.mul(&lift(g), &aux)).collect();
    let one_minus_t = MPolyQ::one(&aux).sub(&t, &aux);
    gens.push(one_minus_t.mul(&lift(f), &aux));
    let gb = buchberger_reduced(&IdealQ::new(aux.clone(), gens));
    // Elements with t-free leading monomial are t-free throughout and
    // generate the intersection J ∩ (f).
    let mut quotient_gens = Vec::new();
    for g in &gb.elements {
        if g.lm().unwrap().exp(0) != 0 {
            continue;
        }
        debug_assert!(g.terms().iter().all(|(m, _)| m.exp(0) == 0));
        let inter = MPolyQ::from_terms(ring, g.without_var(0).terms().to_vec());
        let q = divide_exact(&inter, f, ring)
            .expect("intersection with a principal ideal is divisible by its generator");
        quotient_gens.push(q);
    }
    Ok(IdealQ::new(ring.clone(), quotient_gens))
}

/// True iff `f` is a non-zero-divisor on R/I, i.e. (I : f) = I.
pub fn is_nzd(ideal: &IdealQ, f: &MPolyQ) -> Result<bool, GroebnerError> {
    let quot = ideal_quotient(ideal, f)?;
    ideal_equal(&quot, ideal)
}

/// The image of the ideal under the named variable ↦ 0, in the smaller
/// ring. Computed from the reduced basis so the presentation is canonical.
pub fn set_variable_zero(ideal: &IdealQ, var: &str) -> Result<IdealQ, GroebnerError> {
    let idx = ideal
        .ring
        .var_index(var)
        .ok_or_else(|| RingError::UnknownVariable(var.to_string()))?;
    let ring = ideal.ring.without(idx);
    let gb = buchberger_reduced(ideal);
    let gens = gb
        .elements
        .iter()
        .map(|g| {
            let h = g.subst_zero(idx).without_var(idx);
            MPolyQ::from_terms(&ring, h.terms().to_vec())
        })
        .collect();
    Ok(IdealQ::new(ring, gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn ring_xyzw() -> RingDescriptor {
        RingDescriptor::from_names(&["X", "Y", "Z", "W"], MonomialOrder::DegRevLex)
    }

    fn ring_xyz() -> RingDescriptor {
        RingDescriptor::from_names(&["X", "Y", "Z"], MonomialOrder::DegRevLex)
    }

    fn p(ring: &RingDescriptor, s: &str) -> MPolyQ {
        parse_polynomial(s, ring).unwrap()
    }

    #[test]
    fn normal_form_divides_out() {
        let r = ring_xyzw();
        let basis = vec![p(&r, "XY - ZW")];
        assert_eq!(normal_form(&p(&r, "XY"), &basis, &r), p(&r, "ZW"));
        assert_eq!(normal_form(&p(&r, "X^2Y"), &basis, &r), p(&r, "XZW"));
        let f = p(&r, "X + 1");
        assert_eq!(normal_form(&f, &[], &r), f);
        assert!(normal_form(&p(&r, "XY - ZW"), &basis, &r).is_zero());
    }

    #[test]
    fn s_polynomial_examples() {
        let r = ring_xyzw();
        let f = p(&r, "XY - ZW");
        let g = p(&r, "X^3 - YW^2");
        let s = s_polynomial(&f, &g, &r);
        assert_eq!(s, p(&r, "Y^2W^2 - X^2ZW"));
        // Coprime leading terms: the S-polynomial self-reduces to zero.
        let a = p(&r, "X");
        let b = p(&r, "Y");
        assert!(s_polynomial(&a, &b, &r).is_zero() || {
            let nf = normal_form(&s_polynomial(&a, &b, &r), &[a.clone(), b.clone()], &r);
            nf.is_zero()
        });
        assert!(s_polynomial(&f, &f, &r).is_zero());
    }

    #[test]
    fn buchberger_small_fixture() {
        let r = ring_xyz();
        let ideal = IdealQ::new(r.clone(), vec![p(&r, "X^2 + Y^2"), p(&r, "XY")]);
        let gb = buchberger_reduced(&ideal);
        let rendered: Vec<String> = gb.elements.iter().map(|g| g.render(&r)).collect();
        assert_eq!(rendered, vec!["XY", "X^2 + Y^2", "Y^3"]);
        // Every S-polynomial reduces to zero.
        for i in 0..gb.elements.len() {
            for j in (i + 1)..gb.elements.len() {
                let s = s_polynomial(&gb.elements[i], &gb.elements[j], &r);
                assert!(normal_form(&s, &gb.elements, &r).is_zero());
            }
        }
    }

    #[test]
    fn buchberger_is_idempotent_and_order_insensitive() {
        let r = ring_xyz();
        let a = p(&r, "X^2 + Y^2");
        let b = p(&r, "XY");
        let g1 = buchberger_reduced(&IdealQ::new(r.clone(), vec![a.clone(), b.clone()]));
        let g2 = buchberger_reduced(&IdealQ::new(r.clone(), vec![b, a]));
        assert_eq!(g1, g2);
        let g3 = buchberger_reduced(&g1.ideal());
        assert_eq!(g1, g3);
    }

    #[test]
    fn curve_ideal_basis_has_expected_leading_monomials() {
        // The degree-18 curve presentation: its reduced degrevlex basis
        // has seven elements with these leading monomials.
        let r = ring_xyz();
        let ideal = IdealQ::new(
            r.clone(),
            vec![
                p(&r, "X^18 - X - 1"),
                p(&r, "Y - X^3"),
                p(&r, "Z - XY"),
            ],
        );
        let gb = buchberger_reduced(&ideal);
        let lms: Vec<String> = gb
            .leading_monomials()
            .iter()
            .map(|m| crate::mpoly::monomial_string(m, &r))
            .collect();
        assert_eq!(
            lms,
            vec!["XY", "X^2Z", "Y^3", "X^3", "Z^5", "YZ^4", "Y^2Z^3"]
        );
    }

    #[test]
    fn homogenize_preserves_leading_monomials_degrevlex() {
        let r = ring_xyz();
        let ideal = IdealQ::new(
            r.clone(),
            vec![p(&r, "X^2 - Y"), p(&r, "XY - Z")],
        );
        let gb_aff = buchberger_reduced(&ideal);
        let gb_hom = homogenize_ideal(&ideal, "W").unwrap();
        assert!(gb_hom.elements.iter().all(|g| g.is_homogeneous()));
        let strip = |m: &Monomial| m.exps()[..3].to_vec();
        let aff: Vec<Vec<u32>> = gb_aff
            .leading_monomials()
            .iter()
            .map(|m| m.exps().to_vec())
            .collect();
        let hom: Vec<Vec<u32>> = gb_hom.leading_monomials().iter().map(strip).collect();
        assert_eq!(aff, hom);
        // And it is a Gröbner basis: S-polynomials reduce to zero.
        let re = buchberger_reduced(&gb_hom.ideal());
        assert_eq!(re, gb_hom);
    }

    #[test]
    fn dehomogenize_inverts_homogenize() {
        let r = ring_xyz();
        let ideal = IdealQ::new(
            r.clone(),
            vec![p(&r, "X^2 - Y"), p(&r, "XY - Z"), p(&r, "X^5 - Z + 1")],
        );
        let hom = homogenize_ideal(&ideal, "W").unwrap();
        let back = dehomogenize_ideal(&hom.ideal(), "W").unwrap();
        assert!(ideal_equal(&back, &ideal).unwrap());
    }

    #[test]
    fn ideal_equality_detects_difference() {
        let r = ring_xyz();
        let i1 = IdealQ::new(r.clone(), vec![p(&r, "X^2 + Y^2"), p(&r, "XY")]);
        // Same ideal, messier presentation.
        let i2 = IdealQ::new(
            r.clone(),
            vec![
                p(&r, "X^2 + Y^2 + 3XY"),
                p(&r, "XY"),
                p(&r, "X^3 + XY^2"),
            ],
        );
        assert!(ideal_equal(&i1, &i2).unwrap());
        let i3 = IdealQ::new(r.clone(), vec![p(&r, "X^2 + Y^2")]);
        assert!(!ideal_equal(&i1, &i3).unwrap());
        let other = RingDescriptor::from_names(&["X", "Y"], MonomialOrder::DegRevLex);
        let j = IdealQ::new(other.clone(), vec![]);
        assert!(matches!(
            ideal_equal(&i1, &j),
            Err(GroebnerError::Ring(RingError::RingMismatch))
        ));
    }

    #[test]
    fn quotient_and_nzd() {
        let r = ring_xyz();
        let x = p(&r, "X");
        let ideal = IdealQ::new(r.clone(), vec![p(&r, "XY")]);
        // (XY) : X = (Y), so X is a zero divisor mod (XY).
        let quot = ideal_quotient(&ideal, &x).unwrap();
        let expected = IdealQ::new(r.clone(), vec![p(&r, "Y")]);
        assert!(ideal_equal(&quot, &expected).unwrap());
        assert!(!is_nzd(&ideal, &x).unwrap());
        // Z is a non-zero-divisor mod (XY).
        assert!(is_nzd(&ideal, &p(&r, "Z")).unwrap());
        // Quotient by a unit returns the ideal itself.
        let by_one = ideal_quotient(&ideal, &p(&r, "1")).unwrap();
        assert!(ideal_equal(&by_one, &ideal).unwrap());
        assert!(matches!(
            ideal_quotient(&ideal, &MPolyQ::zero()),
            Err(GroebnerError::QuotientByZero)
        ));
    }

    #[test]
    fn quotient_definition_holds() {
        // g ∈ (J : f) iff g·f ∈ J, spot-checked on a non-principal J.
        let r = ring_xyz();
        let ideal = IdealQ::new(r.clone(), vec![p(&r, "X^2"), p(&r, "XY")]);
        let f = p(&r, "X");
        let quot = ideal_quotient(&ideal, &f).unwrap();
        let gb = buchberger_reduced(&ideal);
        for g in &quot.gens {
            assert!(normal_form(&g.mul(&f, &r), &gb.elements, &r).is_zero());
        }
        // (X^2, XY) : X = (X, Y).
        let expected = IdealQ::new(r.clone(), vec![p(&r, "X"), p(&r, "Y")]);
        assert!(ideal_equal(&quot, &expected).unwrap());
    }

    #[test]
    fn set_variable_zero_restricts() {
        let r = ring_xyz();
        let ideal = IdealQ::new(r.clone(), vec![p(&r, "X + Z"), p(&r, "Y^2 - Z^2")]);
        let restricted = set_variable_zero(&ideal, "Z").unwrap();
        let rxy = RingDescriptor::from_names(&["X", "Y"], MonomialOrder::DegRevLex);
        let expected = IdealQ::new(
            rxy.clone(),
            vec![parse_polynomial("X", &rxy).unwrap(), parse_polynomial("Y^2", &rxy).unwrap()],
        );
        assert!(ideal_equal(&restricted, &expected).unwrap());
        assert!(set_variable_zero(&ideal, "Q").is_err());
    }
}
