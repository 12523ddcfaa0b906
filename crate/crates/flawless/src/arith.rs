//! Word-sized prime-field arithmetic and deterministic primality testing.
//!
//! Moduli are `u64` primes; products go through `u128`, so no intermediate
//! ever overflows. Moduli outside the word range are rejected at
//! construction instead of promoted — every modulus used by the library's
//! own pipelines is tiny.

use thiserror::Error;

/// Errors from prime-field construction and mixed-modulus operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
}

/// Deterministic Miller–Rabin, valid for every `u64` input.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    // This witness set decides primality for all n < 3.3·10^24, hence all u64.
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powm(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mulm(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub(crate) fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

pub(crate) fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + (p - b)
    }
}

pub(crate) fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn powm(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulm(acc, base, p);
        }
        base = mulm(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo the prime `p`; panics on `a ≡ 0`.
pub(crate) fn invm(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "division by zero in F_{p}");
    powm(a, p - 2, p)
}

/// Reduce a signed integer into the canonical residue range `[0, p)`.
pub(crate) fn canonical_residue(a: i64, p: u64) -> u64 {
    let m = p as i128;
    let r = (a as i128).rem_euclid(m);
    r as u64
}

/// An element of the prime field F_p with canonical residue in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeFieldElement {
    value: u64,
    modulus: u64,
}

impl PrimeFieldElement {
    /// Builds an element, checking that the modulus is prime.
    pub fn new(value: i64, modulus: u64) -> Result<Self, ArithError> {
        if !is_prime(modulus) {
            return Err(ArithError::NonPrimeModulus(modulus));
        }
        Ok(PrimeFieldElement {
            value: canonical_residue(value, modulus),
            modulus,
        })
    }

    /// Canonical residue in `[0, p)`.
    pub fn value(&self) -> u64 {
        self.value
    }

    /// The field characteristic.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_one(&self) -> bool {
        self.value == 1 % self.modulus
    }
}

impl std::fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes_recognized() {
        let primes = [2u64, 3, 5, 7, 11, 13, 101, 107, 10007];
        for p in primes {
            assert!(is_prime(p), "{p} should be prime");
        }
        for n in [0u64, 1, 4, 9, 15, 91, 1001, 10000] {
            assert!(!is_prime(n), "{n} should be composite");
        }
    }

    #[test]
    fn large_prime_and_carmichael() {
        assert!(is_prime(18_446_744_073_709_551_557)); // largest u64 prime
        assert!(!is_prime(561 * 1_000_003 * 1_000_033 % u64::MAX)); // arbitrary composite
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2,3,5,7
    }

    #[test]
    fn modular_helpers() {
        assert_eq!(addm(4, 4, 5), 3);
        assert_eq!(subm(1, 4, 5), 2);
        assert_eq!(mulm(3, 4, 5), 2);
        assert_eq!(powm(2, 10, 1000), 24);
        assert_eq!(mulm(invm(7, 101), 7, 101), 1);
        assert_eq!(canonical_residue(-1, 5), 4);
        assert_eq!(canonical_residue(-10, 5), 0);
    }

    #[test]
    fn element_construction() {
        let e = PrimeFieldElement::new(-2, 5).unwrap();
        assert_eq!(e.value(), 3);
        assert_eq!(e.modulus(), 5);
        assert!(PrimeFieldElement::new(1, 6).is_err());
        assert!(PrimeFieldElement::new(1, 3).unwrap().is_one());
    }
}
