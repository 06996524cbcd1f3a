// Copyright 2026 the compass authors
// SPDX-License-Identifier: Apache-2.0

//! Decimal approximation by interval refinement over fixed-point integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Constructible, Form};

/// Closed interval `[lo, hi] / 2^bits`.
#[derive(Debug, Clone)]
struct Enclosure {
    lo: BigInt,
    hi: BigInt,
}

fn floor_div(n: &BigInt, d: &BigInt) -> BigInt {
    n.div_floor(d)
}

fn ceil_div(n: &BigInt, d: &BigInt) -> BigInt {
    -((-n).div_floor(d))
}

fn enclose_rational(q: &BigRational, bits: u64) -> Enclosure {
    let scaled = q.numer() << bits;
    Enclosure {
        lo: floor_div(&scaled, q.denom()),
        hi: ceil_div(&scaled, q.denom()),
    }
}

fn mul_enclosures(x: &Enclosure, y: &Enclosure, bits: u64) -> Enclosure {
    let products = [&x.lo * &y.lo, &x.lo * &y.hi, &x.hi * &y.lo, &x.hi * &y.hi];
    let lo = products.iter().min().unwrap();
    let hi = products.iter().max().unwrap();
    let unit = BigInt::one() << bits;
    Enclosure {
        lo: floor_div(lo, &unit),
        hi: ceil_div(hi, &unit),
    }
}

fn enclose(x: &Constructible, bits: u64) -> Enclosure {
    match x.form() {
        Form::Rational(q) => enclose_rational(q, bits),
        Form::Quad { a, b, r } => {
            let ea = enclose(a, bits);
            let eb = enclose(b, bits);
            let er = enclose(r, 2 * bits);
            let lo_r = er.lo.max(BigInt::zero());
            let root_lo = lo_r.sqrt();
            let mut root_hi = er.hi.sqrt();
            if &root_hi * &root_hi < er.hi {
                root_hi += 1;
            }
            let root = Enclosure {
                lo: root_lo,
                hi: root_hi,
            };
            let prod = mul_enclosures(&eb, &root, bits);
            Enclosure {
                lo: ea.lo + prod.lo,
                hi: ea.hi + prod.hi,
            }
        }
    }
}

/// `round(x * 10^digits)` to nearest, ties away from zero.
fn round_scaled_rational(q: &BigRational, digits: u32) -> BigInt {
    let scaled = q * BigRational::from_integer(BigInt::from(10).pow(digits));
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    if scaled.is_negative() {
        -((-scaled) + half).floor().to_integer()
    } else {
        (scaled + half).floor().to_integer()
    }
}

impl Constructible {
    /// Interval of width at most `2^-bits` (up to rounding slack) around
    /// the value.
    pub fn enclosure(&self, bits: u64) -> (BigRational, BigRational) {
        let e = enclose(self, bits);
        let unit = BigInt::one() << bits;
        (
            BigRational::new(e.lo, unit.clone()),
            BigRational::new(e.hi, unit),
        )
    }

    /// Correctly rounded decimal string with `digits` places after the point.
    pub fn approx(&self, digits: u32) -> String {
        let n = self.rounded_scaled(digits);
        format_scaled(&n, digits)
    }

    /// Floating-point value, for rendering only.
    pub fn to_f64(&self) -> f64 {
        self.approx(20).parse().unwrap_or(f64::NAN)
    }

    fn rounded_scaled(&self, digits: u32) -> BigInt {
        if let Some(q) = self.as_rational() {
            return round_scaled_rational(q, digits);
        }
        let pow10 = BigRational::from_integer(BigInt::from(10).pow(digits));
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let round = |v: &BigRational| (v * &pow10 + &half).floor().to_integer();
        let mut bits = 4 * u64::from(digits) + 64;
        loop {
            let (lo, hi) = self.enclosure(bits);
            let (nlo, nhi) = (round(&lo), round(&hi));
            if nlo == nhi {
                return nlo;
            }
            if bits > 1 << 14 {
                // Settle against the rounding boundary exactly.
                let boundary = (BigRational::from_integer(nlo.clone()) + &half) / &pow10;
                let b = Constructible::from_rational(boundary);
                return if self >= &b { nlo + 1 } else { nlo };
            }
            bits *= 2;
        }
    }
}

fn format_scaled(n: &BigInt, digits: u32) -> String {
    let negative = n.is_negative();
    let mut s = n.abs().to_string();
    let digits = digits as usize;
    if s.len() <= digits {
        s = format!("{}{}", "0".repeat(digits + 1 - s.len()), s);
    }
    let (int_part, frac) = s.split_at(s.len() - digits);
    let sign = if negative { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac}")
    }
}
