//! Dense univariate polynomials over F_p and over Q.
//!
//! Coefficient vectors are indexed by degree, kept trimmed (no leading
//! zeros), and — over F_p — stored as canonical residues in `[0, p)`.

use crate::arith::{self, is_prime, ArithError};
use crate::Rational;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Errors from reducing a rational polynomial modulo a prime.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceModError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("a coefficient denominator vanishes modulo {0}")]
    DenominatorVanishes(u64),
}

/// Dense univariate polynomial over F_p for a word-sized prime p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPolyP {
    p: u64,
    coeffs: Vec<u64>,
}

impl UniPolyP {
    /// Builds a polynomial from signed integer coefficients (index = degree).
    pub fn new(p: u64, coeffs: &[i64]) -> Result<Self, ArithError> {
        if !is_prime(p) {
            return Err(ArithError::NonPrimeModulus(p));
        }
        let coeffs = coeffs
            .iter()
            .map(|&c| arith::canonical_residue(c, p))
            .collect();
        Ok(Self::trimmed(p, coeffs))
    }

    /// Builds a polynomial from residues, reducing each into `[0, p)`.
    pub fn from_residues(p: u64, coeffs: Vec<u64>) -> Result<Self, ArithError> {
        if !is_prime(p) {
            return Err(ArithError::NonPrimeModulus(p));
        }
        let coeffs = coeffs.into_iter().map(|c| c % p).collect();
        Ok(Self::trimmed(p, coeffs))
    }

    fn trimmed(p: u64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        UniPolyP { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        UniPolyP { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        Self::trimmed(p, vec![1 % p])
    }

    /// The monomial `c·X^d`.
    pub fn monomial(p: u64, c: u64, d: usize) -> Self {
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = c % p;
        Self::trimmed(p, coeffs)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Leading coefficient (0 for the zero polynomial).
    pub fn lc(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    fn assert_same_modulus(&self, other: &Self) {
        assert_eq!(
            self.p, other.p,
            "mixed moduli in F_p polynomial arithmetic"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_modulus(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| arith::addm(self.coeff(i), other.coeff(i), self.p))
            .collect();
        Self::trimmed(self.p, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_modulus(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| arith::subm(self.coeff(i), other.coeff(i), self.p))
            .collect();
        Self::trimmed(self.p, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_modulus(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = arith::addm(coeffs[i + j], arith::mulm(a, b, self.p), self.p);
            }
        }
        Self::trimmed(self.p, coeffs)
    }

    pub fn mul_scalar(&self, s: u64) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| arith::mulm(c, s, self.p))
            .collect();
        Self::trimmed(self.p, coeffs)
    }

    /// Scales to leading coefficient 1 (zero polynomial is returned as is).
    pub fn make_monic(&self) -> Self {
        if self.is_zero() || self.lc() == 1 {
            return self.clone();
        }
        self.mul_scalar(arith::invm(self.lc(), self.p))
    }

    /// Euclidean division; panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        self.assert_same_modulus(divisor);
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() || self.degree() < divisor.degree() {
            return (Self::zero(self.p), self.clone());
        }
        let p = self.p;
        let dlc_inv = arith::invm(divisor.lc(), p);
        let mut rem = self.coeffs.clone();
        let mut quo = vec![0u64; self.degree() - divisor.degree() + 1];
        for k in (divisor.degree()..rem.len()).rev() {
            let c = rem[k];
            if c == 0 {
                continue;
            }
            let q = arith::mulm(c, dlc_inv, p);
            quo[k - divisor.degree()] = q;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                let idx = k - divisor.degree() + j;
                rem[idx] = arith::subm(rem[idx], arith::mulm(q, d, p), p);
            }
        }
        rem.truncate(divisor.degree());
        (Self::trimmed(p, quo), Self::trimmed(p, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Exact-divisibility test.
    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.div_rem(self).1.is_zero()
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero(self.p);
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, &c)| arith::mulm(c, (i as u64 + 1) % self.p, self.p))
            .collect();
        Self::trimmed(self.p, coeffs)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = arith::addm(arith::mulm(acc, x, self.p), c, self.p);
        }
        acc
    }

    /// `self^exp mod m` by square-and-multiply.
    pub fn pow_mod(&self, exp: &BigUint, m: &Self) -> Self {
        self.assert_same_modulus(m);
        let mut acc = Self::one(self.p).rem(m);
        let base = self.rem(m);
        for i in (0..exp.bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if exp.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    /// Monic greatest common divisor (assumes matching moduli).
    pub fn gcd(&self, other: &Self) -> Self {
        self.assert_same_modulus(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }
}

/// Monic gcd over F_p with an explicit modulus-mismatch error.
pub fn upoly_gcd_mod_p(f: &UniPolyP, g: &UniPolyP) -> Result<UniPolyP, ArithError> {
    if f.modulus() != g.modulus() {
        return Err(ArithError::ModulusMismatch(f.modulus(), g.modulus()));
    }
    Ok(f.gcd(g))
}

/// Dense univariate polynomial over Q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPolyQ {
    coeffs: Vec<Rational>,
}

impl UniPolyQ {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UniPolyQ { coeffs }
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        UniPolyQ { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::from_int_coeffs(&[1])
    }

    /// The polynomial X^d − X − 1 that drives the counterexample family.
    pub fn x_pow_minus_x_minus_one(d: usize) -> Self {
        assert!(d >= 2);
        let mut coeffs = vec![0i64; d + 1];
        coeffs[0] = -1;
        coeffs[1] = -1;
        coeffs[d] = 1;
        Self::from_int_coeffs(&coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn lc(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    /// Reduces modulo p, inverting denominators; fails when one vanishes.
    pub fn reduce_mod_p(&self, p: u64) -> Result<UniPolyP, ReduceModError> {
        if !is_prime(p) {
            return Err(ArithError::NonPrimeModulus(p).into());
        }
        let pb = BigInt::from(p);
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let den = c.denom().mod_floor(&pb);
            if den.is_zero() {
                return Err(ReduceModError::DenominatorVanishes(p));
            }
            let num = c.numer().mod_floor(&pb);
            let num: u64 = num.magnitude().try_into().expect("residue fits u64");
            let den: u64 = den.magnitude().try_into().expect("residue fits u64");
            coeffs.push(arith::mulm(num, arith::invm(den, p), p));
        }
        Ok(UniPolyP::trimmed(p, coeffs))
    }

    /// Integer coefficient vector, if all denominators are 1.
    pub fn to_integer_coeffs(&self) -> Option<Vec<BigInt>> {
        if !self.has_integer_coeffs() {
            return None;
        }
        Some(self.coeffs.iter().map(|c| c.numer().clone()).collect())
    }

    /// Largest absolute value among integer coefficients (0 for zero).
    pub fn max_abs_int_coeff(&self) -> Option<BigInt> {
        let ints = self.to_integer_coeffs()?;
        Some(
            ints.into_iter()
                .map(|c| c.abs())
                .max()
                .unwrap_or_else(BigInt::zero),
        )
    }
}
