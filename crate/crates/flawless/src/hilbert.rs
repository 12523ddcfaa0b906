//! Hilbert–Poincaré series of quotients by monomial ideals, h-vectors,
//! and order ideals of monomials.
//!
//! The numerator N(λ) with P(λ) = N(λ)/(1−λ)^n is computed by the pivot
//! recursion N(I) = N(I + (q)) + λ^deg(q)·N(I : q) on minimal monomial
//! generators, with closed forms for the empty and pairwise-coprime cases.
//! Reduction cancels (1−λ) factors until the numerator stops vanishing at
//! λ = 1; the reduced numerator's coefficients are the h-vector, the pole
//! order the dimension, and the numerator's value at 1 the multiplicity.

use crate::groebner::GroebnerBasisQ;
use crate::mpoly::Monomial;
use thiserror::Error;

/// Errors from series reduction and order-ideal extraction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HilbertError {
    #[error("numerator vanishes at 1 more often than the pole order allows")]
    NegativePoleOrder,
    #[error("the quotient is not Artinian: variable index {0} has no pure power in the ideal")]
    NotArtinian(usize),
}

/// A monomial ideal held by its minimal generators, sorted by degree then
/// reverse-lexicographically (the order monomial lists are printed in).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

/// Canonical listing order for monomials: total degree ascending, then
/// lexicographically descending (X before Y before Z).
pub fn listing_cmp(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    a.total_degree()
        .cmp(&b.total_degree())
        .then_with(|| b.exps().cmp(a.exps()))
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(listing_cmp);
    gens.dedup();
    let mut minimal: Vec<Monomial> = Vec::new();
    for g in gens {
        if !minimal.iter().any(|m| m.divides(&g)) {
            minimal.push(g);
        }
    }
    minimal
}

impl MonomialIdeal {
    /// Builds the ideal, discarding redundant generators.
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        for g in &gens {
            assert_eq!(g.nvars(), nvars, "generator arity mismatch");
        }
        MonomialIdeal {
            nvars,
            gens: minimalize(gens),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Minimal generators in listing order.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains_one(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    /// Membership test (some generator divides m).
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }
}

/// The leading-term ideal of a reduced Gröbner basis.
pub fn lt_ideal(gb: &GroebnerBasisQ) -> MonomialIdeal {
    MonomialIdeal::new(
        gb.ring.nvars(),
        gb.elements
            .iter()
            .map(|g| g.lm().expect("basis elements are nonzero").clone())
            .collect(),
    )
}

/// An integer polynomial in the series variable λ, by coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesNumerator {
    coeffs: Vec<i128>,
}

impl SeriesNumerator {
    pub fn from_coeffs(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        SeriesNumerator { coeffs }
    }

    pub fn zero() -> Self {
        SeriesNumerator { coeffs: vec![] }
    }

    pub fn one() -> Self {
        SeriesNumerator { coeffs: vec![1] }
    }

    /// The factor (1 − λ).
    pub fn one_minus_lambda() -> Self {
        SeriesNumerator { coeffs: vec![1, -1] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i128 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> i128 {
        self.coeffs.iter().sum()
    }

    pub fn add(&self, other: &SeriesNumerator) -> SeriesNumerator {
        let n = self.coeffs.len().max(other.coeffs.len());
        SeriesNumerator::from_coeffs((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &SeriesNumerator) -> SeriesNumerator {
        let n = self.coeffs.len().max(other.coeffs.len());
        SeriesNumerator::from_coeffs((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &SeriesNumerator) -> SeriesNumerator {
        if self.is_zero() || other.is_zero() {
            return SeriesNumerator::zero();
        }
        let mut out = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        SeriesNumerator::from_coeffs(out)
    }

    /// Multiplication by λ^k.
    pub fn shift(&self, k: usize) -> SeriesNumerator {
        if self.is_zero() {
            return SeriesNumerator::zero();
        }
        let mut coeffs = vec![0i128; k];
        coeffs.extend_from_slice(&self.coeffs);
        SeriesNumerator { coeffs }
    }

    /// Exact division by (1 − λ); the caller guarantees eval_at_one() == 0.
    fn divide_one_minus_lambda(&self) -> SeriesNumerator {
        debug_assert_eq!(self.eval_at_one(), 0);
        if self.is_zero() {
            return SeriesNumerator::zero();
        }
        // N = (1 − λ)·Q gives Q_k = N_k + Q_{k−1}.
        let mut q = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        let mut acc = 0i128;
        for k in 0..self.coeffs.len() - 1 {
            acc += self.coeffs[k];
            q.push(acc);
        }
        SeriesNumerator::from_coeffs(q)
    }
}

/// How the recursion picks its pivot monomial. Results are identical; two
/// strategies exist to test that independence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PivotStrategy {
    /// Pure power of the variable occurring in the most generators, at the
    /// lower median of its occurring exponents.
    MostFrequentMedian,
    /// First power of the lowest-index variable shared by two generators.
    FirstSharedLinear,
}

/// True iff no variable occurs in two distinct generators.
fn pairwise_coprime(gens: &[Monomial], nvars: usize) -> bool {
    let mut seen = vec![false; nvars];
    for g in gens {
        for (i, &e) in g.exps().iter().enumerate() {
            if e > 0 {
                if seen[i] {
                    return false;
                }
                seen[i] = true;
            }
        }
    }
    true
}

fn choose_pivot(gens: &[Monomial], nvars: usize, strategy: PivotStrategy) -> Monomial {
    match strategy {
        PivotStrategy::MostFrequentMedian => {
            let mut counts = vec![0usize; nvars];
            for g in gens {
                for (i, &e) in g.exps().iter().enumerate() {
                    if e > 0 {
                        counts[i] += 1;
                    }
                }
            }
            let (var, _) = counts
                .iter()
                .enumerate()
                .max_by_key(|&(i, &c)| (c, std::cmp::Reverse(i)))
                .expect("nonempty generator set");
            let mut exps: Vec<u32> = gens
                .iter()
                .map(|g| g.exp(var))
                .filter(|&e| e > 0)
                .collect();
            exps.sort_unstable();
            // The lower median is strictly below the exponent of any pure
            // power of this variable among minimal generators, so the
            // pivot never lies in the ideal.
            let e = exps[(exps.len() - 1) / 2];
            let mut pe = vec![0u32; nvars];
            pe[var] = e;
            Monomial::new(pe)
        }
        PivotStrategy::FirstSharedLinear => {
            for i in 0..nvars {
                if gens.iter().filter(|g| g.exp(i) > 0).count() >= 2 {
                    return Monomial::var(nvars, i);
                }
            }
            unreachable!("pairwise-coprime sets are handled before pivoting")
        }
    }
}

fn numerator_rec(gens: &[Monomial], nvars: usize, strategy: PivotStrategy) -> SeriesNumerator {
    if gens.iter().any(|g| g.is_one()) {
        return SeriesNumerator::zero();
    }
    if pairwise_coprime(gens, nvars) {
        let mut n = SeriesNumerator::one();
        for g in gens {
            let mut factor = vec![0i128; g.total_degree() as usize + 1];
            factor[0] = 1;
            factor[g.total_degree() as usize] -= 1;
            n = n.mul(&SeriesNumerator::from_coeffs(factor));
        }
        return n;
    }
    let q = choose_pivot(gens, nvars, strategy);
    debug_assert!(!gens.iter().any(|g| g.divides(&q)), "pivot lies in the ideal");
    // I + (q): drop generators divisible by q.
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| !q.divides(g)).cloned().collect();
    plus.push(q.clone());
    let plus = minimalize(plus);
    // I : q, generated by g / gcd(g, q).
    let colon = minimalize(
        gens.iter()
            .map(|g| g.checked_div(&g.gcd(&q)).expect("gcd divides"))
            .collect(),
    );
    let n_plus = numerator_rec(&plus, nvars, strategy);
    let n_colon = numerator_rec(&colon, nvars, strategy);
    n_plus.add(&n_colon.shift(q.total_degree() as usize))
}

/// Numerator N(λ) of P_{S/M}(λ) = N(λ)/(1−λ)^n, default pivot strategy.
pub fn hilbert_numerator(m: &MonomialIdeal) -> SeriesNumerator {
    hilbert_numerator_with(m, PivotStrategy::MostFrequentMedian)
}

/// Numerator with an explicit pivot strategy (for independence testing).
pub fn hilbert_numerator_with(m: &MonomialIdeal, strategy: PivotStrategy) -> SeriesNumerator {
    numerator_rec(m.gens(), m.nvars(), strategy)
}

/// A series in lowest terms: numerator Q(λ) with Q(1) ≠ 0 over (1−λ)^d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincareSeries {
    pub numerator: SeriesNumerator,
    pub pole_order: usize,
}

impl PoincareSeries {
    /// Krull dimension of the graded quotient.
    pub fn dimension(&self) -> usize {
        self.pole_order
    }

    /// Multiplicity Q(1).
    pub fn multiplicity(&self) -> i128 {
        self.numerator.eval_at_one()
    }
}

/// Cancels (1−λ) factors against the pole until Q(1) ≠ 0.
pub fn reduce_poincare(n: &SeriesNumerator, pole: usize) -> Result<PoincareSeries, HilbertError> {
    if n.is_zero() {
        return Ok(PoincareSeries {
            numerator: SeriesNumerator::zero(),
            pole_order: 0,
        });
    }
    let mut q = n.clone();
    let mut d = pole;
    while q.eval_at_one() == 0 {
        if d == 0 {
            return Err(HilbertError::NegativePoleOrder);
        }
        q = q.divide_one_minus_lambda();
        d -= 1;
    }
    Ok(PoincareSeries {
        numerator: q,
        pole_order: d,
    })
}

/// The h-vector: coefficient tuple of the reduced numerator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HVector {
    entries: Vec<i128>,
}

impl HVector {
    pub fn new(entries: Vec<i128>) -> Self {
        assert!(!entries.is_empty(), "h-vectors are nonempty");
        HVector { entries }
    }

    pub fn entries(&self) -> &[i128] {
        &self.entries
    }

    /// δ = the largest index.
    pub fn delta(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn sum(&self) -> i128 {
        self.entries.iter().sum()
    }
}

/// h-vector of a reduced series (the zero series yields (0)).
pub fn h_vector(s: &PoincareSeries) -> HVector {
    if s.numerator.is_zero() {
        return HVector::new(vec![0]);
    }
    HVector::new(s.numerator.coeffs().to_vec())
}

/// Hilbert function values H(0..=dmax) by Taylor expansion of the series.
pub fn series_coefficients(s: &PoincareSeries, dmax: usize) -> Vec<i128> {
    let mut vals: Vec<i128> = (0..=dmax).map(|k| s.numerator.coeff(k)).collect();
    for _ in 0..s.pole_order {
        let mut acc = 0i128;
        for v in vals.iter_mut() {
            acc += *v;
            *v = acc;
        }
    }
    vals
}

/// Monomials of degree ≤ dmax outside the ideal, listed per degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardMonomials {
    pub by_degree: Vec<Vec<Monomial>>,
}

impl StandardMonomials {
    pub fn counts(&self) -> Vec<usize> {
        self.by_degree.iter().map(|v| v.len()).collect()
    }
}

/// Enumerates degree-k monomials in n variables, lexicographically
/// descending (first exponent largest first).
fn monomials_of_degree(n: usize, k: u32) -> Vec<Monomial> {
    fn rec(n: usize, k: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if n == 1 {
            prefix.push(k);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=k).rev() {
            prefix.push(e);
            rec(n - 1, k - e, prefix, out);
            prefix.pop();
        }
    }
    if n == 0 {
        return if k == 0 {
            vec![Monomial::new(vec![])]
        } else {
            vec![]
        };
    }
    let mut out = Vec::new();
    rec(n, k, &mut Vec::new(), &mut out);
    out
}

/// Brute-force standard-monomial enumeration up to degree dmax.
pub fn standard_monomials(m: &MonomialIdeal, dmax: usize) -> StandardMonomials {
    let by_degree = (0..=dmax as u32)
        .map(|k| {
            monomials_of_degree(m.nvars(), k)
                .into_iter()
                .filter(|mono| !m.contains(mono))
                .collect()
        })
        .collect();
    StandardMonomials { by_degree }
}

/// A finite divisor-closed monomial set with its maximal elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderIdeal {
    /// All standard monomials, degree ascending then lex descending.
    pub monomials: Vec<Monomial>,
    /// Elements all of whose variable multiples leave the set.
    pub maximal: Vec<Monomial>,
    /// True iff all maximal elements share one total degree.
    pub pure: bool,
}

impl OrderIdeal {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn counts_by_degree(&self) -> Vec<usize> {
        let top = self
            .monomials
            .iter()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0);
        let mut counts = vec![0usize; top as usize + 1];
        for m in &self.monomials {
            counts[m.total_degree() as usize] += 1;
        }
        counts
    }
}

/// The full standard-monomial set of an Artinian monomial quotient.
///
/// Artinian is checked structurally: every variable must have a pure
/// power among the generators.
pub fn order_ideal(m: &MonomialIdeal) -> Result<OrderIdeal, HilbertError> {
    for i in 0..m.nvars() {
        let has_pure_power = m
            .gens()
            .iter()
            .any(|g| g.exp(i) > 0 && g.total_degree() == g.exp(i));
        if !has_pure_power {
            return Err(HilbertError::NotArtinian(i));
        }
    }
    let mut monomials = Vec::new();
    let mut k = 0u32;
    loop {
        let layer: Vec<Monomial> = monomials_of_degree(m.nvars(), k)
            .into_iter()
            .filter(|mono| !m.contains(mono))
            .collect();
        if layer.is_empty() {
            break;
        }
        monomials.extend(layer);
        k += 1;
    }
    let maximal: Vec<Monomial> = monomials
        .iter()
        .filter(|mono| {
            (0..m.nvars()).all(|i| m.contains(&mono.mul(&Monomial::var(m.nvars(), i))))
        })
        .cloned()
        .collect();
    let pure = maximal
        .windows(2)
        .all(|w| w[0].total_degree() == w[1].total_degree());
    Ok(OrderIdeal {
        monomials,
        maximal,
        pure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    /// The leading-term ideal of the degree-18 curve's homogeneous basis,
    /// as a monomial ideal in n ≥ 3 variables (extra variables unused).
    fn curve_lt_ideal(nvars: usize) -> MonomialIdeal {
        let pad = |exps: &[u32]| {
            let mut v = exps.to_vec();
            v.resize(nvars, 0);
            Monomial::new(v)
        };
        MonomialIdeal::new(
            nvars,
            vec![
                pad(&[1, 1, 0]),
                pad(&[3, 0, 0]),
                pad(&[2, 0, 1]),
                pad(&[0, 3, 0]),
                pad(&[0, 2, 3]),
                pad(&[0, 1, 4]),
                pad(&[0, 0, 5]),
            ],
        )
    }

    fn expected_numerator_factor() -> SeriesNumerator {
        SeriesNumerator::from_coeffs(vec![1, 3, 5, 4, 4, 1])
    }

    #[test]
    fn minimal_generators() {
        let m = MonomialIdeal::new(
            2,
            vec![mono(&[1, 0]), mono(&[1, 1]), mono(&[1, 0]), mono(&[0, 2])],
        );
        assert_eq!(m.gens(), &[mono(&[1, 0]), mono(&[0, 2])]);
        assert!(m.contains(&mono(&[1, 5])));
        assert!(!m.contains(&mono(&[0, 1])));
    }

    #[test]
    fn numerator_base_cases() {
        let zero_ideal = MonomialIdeal::new(3, vec![]);
        assert_eq!(hilbert_numerator(&zero_ideal), SeriesNumerator::one());
        let unit = MonomialIdeal::new(2, vec![mono(&[0, 0])]);
        assert_eq!(hilbert_numerator(&unit), SeriesNumerator::zero());
        let x = MonomialIdeal::new(1, vec![mono(&[1])]);
        assert_eq!(
            hilbert_numerator(&x),
            SeriesNumerator::from_coeffs(vec![1, -1])
        );
        let xy = MonomialIdeal::new(2, vec![mono(&[1, 0]), mono(&[0, 1])]);
        assert_eq!(
            hilbert_numerator(&xy),
            SeriesNumerator::from_coeffs(vec![1, -2, 1])
        );
    }

    #[test]
    fn numerator_with_shared_variable() {
        // (X², XY) in two variables: N = 1 − 2λ² + λ³.
        let m = MonomialIdeal::new(2, vec![mono(&[2, 0]), mono(&[1, 1])]);
        let n = hilbert_numerator(&m);
        assert_eq!(n, SeriesNumerator::from_coeffs(vec![1, 0, -2, 1]));
        // Expansion over (1−λ)² gives H = 1, 2, 1, 1, 1, …
        let s = reduce_poincare(&n, 2).unwrap();
        assert_eq!(s.pole_order, 1);
        assert_eq!(series_coefficients(&s, 5), vec![1, 2, 1, 1, 1, 1]);
    }

    #[test]
    fn curve_numerator_fixture() {
        // N(λ) = (1 + 3λ + 5λ² + 4λ³ + 4λ⁴ + λ⁵)(1−λ)³ in 4 variables.
        let m = curve_lt_ideal(4);
        let n = hilbert_numerator(&m);
        let omp = SeriesNumerator::one_minus_lambda();
        let expected = expected_numerator_factor().mul(&omp).mul(&omp).mul(&omp);
        assert_eq!(n, expected);
        let s = reduce_poincare(&n, 4).unwrap();
        assert_eq!(s.numerator, expected_numerator_factor());
        assert_eq!(s.pole_order, 1);
        assert_eq!(s.multiplicity(), 18);
        assert_eq!(h_vector(&s).entries(), &[1, 3, 5, 4, 4, 1]);
    }

    #[test]
    fn pivot_strategies_agree() {
        let cases = vec![
            curve_lt_ideal(4),
            curve_lt_ideal(3),
            MonomialIdeal::new(2, vec![mono(&[2, 0]), mono(&[1, 1])]),
            MonomialIdeal::new(
                3,
                vec![mono(&[2, 1, 0]), mono(&[0, 2, 2]), mono(&[1, 0, 3])],
            ),
        ];
        for m in cases {
            assert_eq!(
                hilbert_numerator_with(&m, PivotStrategy::MostFrequentMedian),
                hilbert_numerator_with(&m, PivotStrategy::FirstSharedLinear),
            );
        }
    }

    #[test]
    fn reduction_edge_cases() {
        // (1−λ)⁴ over pole 4 reduces to 1 over pole 0.
        let omp = SeriesNumerator::one_minus_lambda();
        let n = omp.mul(&omp).mul(&omp).mul(&omp);
        let s = reduce_poincare(&n, 4).unwrap();
        assert_eq!(s.numerator, SeriesNumerator::one());
        assert_eq!(s.pole_order, 0);
        // Zero numerator.
        let z = reduce_poincare(&SeriesNumerator::zero(), 3).unwrap();
        assert!(z.numerator.is_zero());
        assert_eq!(z.pole_order, 0);
        // More vanishing than the pole allows.
        assert_eq!(
            reduce_poincare(&SeriesNumerator::one_minus_lambda(), 0),
            Err(HilbertError::NegativePoleOrder)
        );
    }

    #[test]
    fn expansion_examples() {
        // 1/(1−λ)²: 1, 2, 3, 4.
        let s = PoincareSeries {
            numerator: SeriesNumerator::one(),
            pole_order: 2,
        };
        assert_eq!(series_coefficients(&s, 3), vec![1, 2, 3, 4]);
        // The curve series stabilizes at multiplicity 18.
        let s = PoincareSeries {
            numerator: expected_numerator_factor(),
            pole_order: 1,
        };
        assert_eq!(
            series_coefficients(&s, 6),
            vec![1, 4, 9, 13, 17, 18, 18]
        );
        // Q = 1 + λ, no pole.
        let s = PoincareSeries {
            numerator: SeriesNumerator::from_coeffs(vec![1, 1]),
            pole_order: 0,
        };
        assert_eq!(series_coefficients(&s, 3), vec![1, 1, 0, 0]);
    }

    #[test]
    fn standard_monomial_counting() {
        // (X, Y): only the constant survives.
        let m = MonomialIdeal::new(2, vec![mono(&[1, 0]), mono(&[0, 1])]);
        let sm = standard_monomials(&m, 4);
        assert_eq!(sm.counts(), vec![1, 0, 0, 0, 0]);
        // Zero ideal in 2 variables.
        let z = MonomialIdeal::new(2, vec![]);
        assert_eq!(standard_monomials(&z, 2).counts(), vec![1, 2, 3]);
        // The curve's Artinian reduction counts the h-vector entries.
        let m = curve_lt_ideal(3);
        assert_eq!(
            standard_monomials(&m, 8).counts(),
            vec![1, 3, 5, 4, 4, 1, 0, 0, 0]
        );
    }

    #[test]
    fn numerator_matches_standard_monomial_counts() {
        let m = MonomialIdeal::new(
            3,
            vec![mono(&[2, 1, 0]), mono(&[0, 2, 2]), mono(&[1, 0, 3])],
        );
        let s = reduce_poincare(&hilbert_numerator(&m), 3).unwrap();
        let expansion = series_coefficients(&s, 10);
        assert_eq!(
            expansion,
            standard_monomials(&m, 10)
                .counts()
                .iter()
                .map(|&c| c as i128)
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn order_ideal_fixture() {
        let m = curve_lt_ideal(3);
        let oi = order_ideal(&m).unwrap();
        assert_eq!(oi.len(), 18);
        assert_eq!(oi.counts_by_degree(), vec![1, 3, 5, 4, 4, 1]);
        let expected: Vec<Monomial> = [
            [0, 0, 0],
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [2, 0, 0],
            [1, 0, 1],
            [0, 2, 0],
            [0, 1, 1],
            [0, 0, 2],
            [1, 0, 2],
            [0, 2, 1],
            [0, 1, 2],
            [0, 0, 3],
            [1, 0, 3],
            [0, 2, 2],
            [0, 1, 3],
            [0, 0, 4],
            [1, 0, 4],
        ]
        .iter()
        .map(|e| mono(e))
        .collect();
        assert_eq!(oi.monomials, expected);
        let maximal: Vec<Monomial> = [[2, 0, 0], [0, 2, 2], [0, 1, 3], [1, 0, 4]]
            .iter()
            .map(|e| mono(e))
            .collect();
        assert_eq!(oi.maximal, maximal);
        let degs: Vec<u32> = oi.maximal.iter().map(|m| m.total_degree()).collect();
        assert_eq!(degs, vec![2, 4, 4, 5]);
        assert!(!oi.pure);
        // Cardinality equals the multiplicity of the series.
        let s = reduce_poincare(&hilbert_numerator(&m), 3).unwrap();
        assert_eq!(oi.len() as i128, s.multiplicity());
    }

    #[test]
    fn order_ideal_edges() {
        let m = MonomialIdeal::new(3, vec![mono(&[1, 0, 0]), mono(&[0, 1, 0]), mono(&[0, 0, 1])]);
        let oi = order_ideal(&m).unwrap();
        assert_eq!(oi.monomials, vec![mono(&[0, 0, 0])]);
        assert_eq!(oi.maximal, vec![mono(&[0, 0, 0])]);
        assert!(oi.pure);
        // The zero ideal is not Artinian in ≥ 1 variables.
        assert_eq!(
            order_ideal(&MonomialIdeal::new(1, vec![])),
            Err(HilbertError::NotArtinian(0))
        );
        // Zero variables: the quotient is the base field.
        let trivial = order_ideal(&MonomialIdeal::new(0, vec![])).unwrap();
        assert_eq!(trivial.len(), 1);
        assert!(trivial.pure);
    }
}
