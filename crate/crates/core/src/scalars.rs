//! Exact scalars: prime fields F_p and unbounded integers/rationals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact integer of unbounded magnitude (BPS counts, binomials).
pub type ExactInt = BigInt;
/// Exact rational, kept in lowest terms with positive denominator.
pub type ExactRat = BigRational;

/// A primality-checked prime, p >= 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    /// Deterministic trial division; the primes in play are small.
    pub fn new(p: u64) -> Result<Prime> {
        if p < 2 {
            return Err(Error::NotPrime(p));
        }
        let mut d = 2u64;
        while d * d <= p {
            if p % d == 0 {
                return Err(Error::NotPrime(p));
            }
            d += 1;
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// Canonical residue of a signed integer.
    pub fn elem(self, value: i64) -> FpElem {
        let p = self.0 as i64;
        FpElem {
            residue: value.rem_euclid(p) as u64,
            modulus: self,
        }
    }

    pub fn elem_u64(self, value: u64) -> FpElem {
        FpElem {
            residue: value % self.0,
            modulus: self,
        }
    }

    pub fn zero(self) -> FpElem {
        FpElem {
            residue: 0,
            modulus: self,
        }
    }

    pub fn one(self) -> FpElem {
        self.elem_u64(1)
    }

    /// Reduce an exact integer mod p.
    pub fn reduce(self, value: &ExactInt) -> FpElem {
        let p = BigInt::from(self.0);
        let mut r = value % &p;
        if r.sign() == num_bigint::Sign::Minus {
            r += &p;
        }
        let digits = r.to_u64_digits().1;
        self.elem_u64(*digits.first().unwrap_or(&0))
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Element of F_p, residue stored canonically in [0, p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpElem {
    residue: u64,
    modulus: Prime,
}

impl FpElem {
    pub fn residue(self) -> u64 {
        self.residue
    }

    pub fn modulus(self) -> Prime {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.residue == 0
    }

    /// Representative in (-p/2, p/2], for sign-bearing displays.
    pub fn signed_residue(self) -> i64 {
        let p = self.modulus.0;
        if self.residue * 2 > p {
            self.residue as i64 - p as i64
        } else {
            self.residue as i64
        }
    }

    fn check(self, other: FpElem) {
        assert_eq!(
            self.modulus, other.modulus,
            "F_p elements with different moduli"
        );
    }

    pub fn add(self, other: FpElem) -> FpElem {
        self.check(other);
        self.modulus.elem_u64(self.residue + other.residue)
    }

    pub fn sub(self, other: FpElem) -> FpElem {
        self.check(other);
        self.modulus
            .elem_u64(self.residue + self.modulus.0 - other.residue)
    }

    pub fn mul(self, other: FpElem) -> FpElem {
        self.check(other);
        let p = self.modulus.0 as u128;
        let prod = (self.residue as u128 * other.residue as u128) % p;
        FpElem {
            residue: prod as u64,
            modulus: self.modulus,
        }
    }

    pub fn neg(self) -> FpElem {
        self.modulus.elem_u64(self.modulus.0 - self.residue)
    }

    /// Multiplicative inverse; None for zero.
    pub fn inverse(self) -> Option<FpElem> {
        if self.residue == 0 {
            None
        } else {
            // x^(p-2) by Fermat; p = 2 gives x^0 = 1.
            Some(fp_pow(self, self.modulus.0 - 2))
        }
    }
}

impl fmt::Display for FpElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

/// x^n in F_p by square-and-multiply; x^0 = 1 including 0^0.
pub fn fp_pow(x: FpElem, n: u64) -> FpElem {
    let mut result = x.modulus().one();
    let mut base = x;
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            result = result.mul(base);
        }
        base = base.mul(base);
        e >>= 1;
    }
    result
}

/// Exact binomial coefficient; 0 for k > n.
pub fn binomial(n: u64, k: u64) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = ExactInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites_and_units() {
        assert_eq!(Prime::new(4), Err(Error::NotPrime(4)));
        assert_eq!(Prime::new(1), Err(Error::NotPrime(1)));
        assert_eq!(Prime::new(0), Err(Error::NotPrime(0)));
        for p in [2u64, 3, 5, 7, 11, 13, 31] {
            assert!(Prime::new(p).is_ok());
        }
    }

    #[test]
    fn pow_examples() {
        let p5 = Prime::new(5).unwrap();
        assert_eq!(fp_pow(p5.elem_u64(2), 4).residue(), 1);
        let p7 = Prime::new(7).unwrap();
        assert_eq!(fp_pow(p7.elem_u64(0), 0).residue(), 1);
        let p3 = Prime::new(3).unwrap();
        // direct multiplication oracle: 2*2 = 4 = 1 mod 3
        let direct = p3.elem_u64(2).mul(p3.elem_u64(2));
        assert_eq!(fp_pow(p3.elem_u64(2), 2), direct);
    }

    #[test]
    fn fermat_little_theorem() {
        for p in [2u64, 3, 5, 7, 31] {
            let prime = Prime::new(p).unwrap();
            for d in 1..p {
                assert_eq!(fp_pow(prime.elem_u64(d), p - 1).residue(), 1);
            }
        }
    }

    #[test]
    fn inverses() {
        for p in [2u64, 3, 5, 7, 13] {
            let prime = Prime::new(p).unwrap();
            assert_eq!(prime.zero().inverse(), None);
            for x in 1..p {
                let x = prime.elem_u64(x);
                assert_eq!(x.mul(x.inverse().unwrap()).residue(), 1);
            }
        }
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), ExactInt::from(6));
        assert_eq!(binomial(5, 3), ExactInt::from(10));
        assert_eq!(binomial(3, 5), ExactInt::zero());
        // sum_{k=1..3} C(5-k, 2) = C(5,3)
        let sum: ExactInt = (1..=3).map(|k| binomial(5 - k, 2)).sum();
        assert_eq!(sum, binomial(5, 3));
    }

    #[test]
    fn pascal_identity_small_primes() {
        // sum_{k=1}^{p-i} C(p-k, i) = C(p, i+1), exact, all primes <= 31
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            for i in 0..p {
                let lhs: ExactInt = (1..=(p - i)).map(|k| binomial(p - k, i)).sum();
                assert_eq!(lhs, binomial(p, i + 1), "p={p} i={i}");
            }
        }
    }

    #[test]
    fn signed_residues() {
        let p5 = Prime::new(5).unwrap();
        assert_eq!(p5.elem_u64(3).signed_residue(), -2);
        assert_eq!(p5.elem_u64(2).signed_residue(), 2);
        let p2 = Prime::new(2).unwrap();
        assert_eq!(p2.elem_u64(1).signed_residue(), 1);
    }

    #[test]
    fn reduce_bigints() {
        let p7 = Prime::new(7).unwrap();
        assert_eq!(p7.reduce(&ExactInt::from(-1)).residue(), 6);
        assert_eq!(p7.reduce(&ExactInt::from(700000000000i64)).residue(), 0);
        assert_eq!(p7.reduce(&ExactInt::from(9)).residue(), 2);
    }
}
