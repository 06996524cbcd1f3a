// Copyright 2026 the compass authors
// SPDX-License-Identifier: Apache-2.0

//! Which regular polygons admit a straightedge-and-compass construction.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; these bases suffice below 2^64.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest prime divisor of `m`, by trial division over a 2-3-5 wheel.
pub fn smallest_prime_factor(m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::NoPrimeFactor(m));
    }
    for p in [2, 3, 5] {
        if m.is_multiple_of(p) {
            return Ok(p);
        }
    }
    if is_prime(m) {
        return Ok(m);
    }
    const GAPS: [u64; 8] = [4, 2, 4, 2, 4, 6, 2, 6];
    let mut d: u64 = 7;
    let mut i = 0;
    while d.checked_mul(d).is_some_and(|sq| sq <= m) {
        if m.is_multiple_of(d) {
            return Ok(d);
        }
        d += GAPS[i];
        i = (i + 1) % GAPS.len();
    }
    Ok(m)
}

/// Prime factors with multiplicity, ascending.
pub fn factorize(mut m: u64) -> Result<Vec<(u64, u32)>> {
    let mut out = Vec::new();
    while m > 1 {
        let p = smallest_prime_factor(m)?;
        let mut e = 0;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        out.push((p, e));
    }
    Ok(out)
}

/// `Some(s)` when `p = 2^(2^s) + 1` is prime.
pub fn is_fermat_prime(p: u64) -> Option<u32> {
    (0..6u32)
        .find(|&s| (1u64 << (1u32 << s)) + 1 == p)
        .filter(|_| is_prime(p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", content = "prime", rename_all = "kebab-case")]
pub enum Refusal {
    RepeatedOddPrime(u64),
    NonFermatPrime(u64),
}

impl Refusal {
    pub fn witness(&self) -> u64 {
        match *self {
            Refusal::RepeatedOddPrime(p) | Refusal::NonFermatPrime(p) => p,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructibilityVerdict {
    pub n: u64,
    pub constructible: bool,
    pub r: u32,
    pub fermat_primes: Vec<u64>,
    pub refusal: Option<Refusal>,
}

impl ConstructibilityVerdict {
    /// `2^r` times the listed primes, or `None` on overflow.
    pub fn certificate_product(&self) -> Option<u64> {
        self.fermat_primes
            .iter()
            .try_fold(1u64.checked_shl(self.r)?, |acc, &p| acc.checked_mul(p))
    }
}

impl fmt::Display for ConstructibilityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.refusal {
            Some(Refusal::NonFermatPrime(p)) => write!(f, "not constructible ({p} is not a Fermat prime)"),
            Some(Refusal::RepeatedOddPrime(p)) => {
                write!(f, "not constructible ({p} divides {} more than once)", self.n)
            }
            None => {
                write!(f, "constructible: {} = 2^{}", self.n, self.r)?;
                for p in &self.fermat_primes {
                    write!(f, " * {p}")?;
                }
                Ok(())
            }
        }
    }
}

/// The Gauss-Wantzel criterion with a certificate or a witness prime.
pub fn gauss_constructible(n: u64) -> Result<ConstructibilityVerdict> {
    if n < 3 {
        return Err(Error::TooFewSides(n));
    }
    let mut r = 0;
    let mut fermat_primes = Vec::new();
    let mut refusal = None;
    for (p, e) in factorize(n)? {
        if p == 2 {
            r = e;
        } else if is_fermat_prime(p).is_none() {
            refusal = Some(Refusal::NonFermatPrime(p));
            break;
        } else if e > 1 {
            refusal = Some(Refusal::RepeatedOddPrime(p));
            break;
        } else {
            fermat_primes.push(p);
        }
    }
    if refusal.is_some() {
        fermat_primes.clear();
        r = 0;
    }
    Ok(ConstructibilityVerdict {
        n,
        constructible: refusal.is_none(),
        r,
        fermat_primes,
        refusal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fermat_numbers() {
        assert_eq!(is_fermat_prime(3), Some(0));
        assert_eq!(is_fermat_prime(5), Some(1));
        assert_eq!(is_fermat_prime(65537), Some(4));
        assert_eq!(is_fermat_prime(4294967297), None);
        assert_eq!(is_fermat_prime(7), None);
        assert_eq!(is_fermat_prime(2), None);
    }

    #[test]
    fn euler_counterexample() {
        assert_eq!(smallest_prime_factor(4294967297).unwrap(), 641);
        assert_eq!(smallest_prime_factor(257).unwrap(), 257);
        assert_eq!(smallest_prime_factor(15).unwrap(), 3);
        assert_eq!(smallest_prime_factor(49).unwrap(), 7);
        assert_eq!(smallest_prime_factor(u64::MAX).unwrap(), 3);
        assert_eq!(smallest_prime_factor(18446744073709551557).unwrap(), 18446744073709551557);
        assert!(smallest_prime_factor(1).is_err());
    }

    #[test]
    fn verdicts() {
        let v = gauss_constructible(5).unwrap();
        assert!(v.constructible);
        assert_eq!((v.r, v.fermat_primes.as_slice()), (0, &[5][..]));
        assert_eq!(gauss_constructible(7).unwrap().refusal, Some(Refusal::NonFermatPrime(7)));
        assert_eq!(gauss_constructible(9).unwrap().refusal, Some(Refusal::RepeatedOddPrime(3)));
        assert_eq!(
            gauss_constructible(7).unwrap().to_string(),
            "not constructible (7 is not a Fermat prime)"
        );
        let big = 32 * 3 * 5 * 17 * 257 * 65537;
        let v = gauss_constructible(big).unwrap();
        assert!(v.constructible);
        assert_eq!(v.certificate_product(), Some(big));
        assert_eq!(v.fermat_primes, [3, 5, 17, 257, 65537]);
        assert!(gauss_constructible(2).is_err());
    }
}
