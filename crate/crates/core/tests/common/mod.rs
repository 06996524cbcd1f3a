// Copyright 2026 the compass authors
// SPDX-License-Identifier: Apache-2.0

//! Independent decimal oracles shared by the integration tests. Nothing
//! here calls into the library's own approximation code.

#![allow(dead_code)]

use std::cmp::Ordering;

use compass_core::Constructible;
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

/// Fixed-point decimal `v / 10^DIGITS`, truncating toward negative infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dec(pub BigInt);

pub const DIGITS: u32 = 260;

fn unit() -> BigInt {
    BigInt::from(10).pow(DIGITS)
}

impl Dec {
    pub fn ratio(p: i64, q: i64) -> Dec {
        Dec((BigInt::from(p) * unit()).div_floor(&BigInt::from(q)))
    }

    pub fn add(&self, o: &Dec) -> Dec {
        Dec(&self.0 + &o.0)
    }

    pub fn sub(&self, o: &Dec) -> Dec {
        Dec(&self.0 - &o.0)
    }

    pub fn neg(&self) -> Dec {
        Dec(-&self.0)
    }

    pub fn mul(&self, o: &Dec) -> Dec {
        Dec((&self.0 * &o.0).div_floor(&unit()))
    }

    pub fn div(&self, o: &Dec) -> Dec {
        Dec((&self.0 * unit()).div_floor(&o.0))
    }

    pub fn sqrt(&self) -> Dec {
        assert!(!self.0.is_negative());
        Dec((&self.0 * unit()).sqrt())
    }

    pub fn abs(&self) -> Dec {
        Dec(self.0.abs())
    }

    /// Sign, treating magnitudes below `10^-threshold` as zero.
    pub fn sign_above(&self, threshold: u32) -> i32 {
        let eps = BigInt::from(10).pow(DIGITS - threshold);
        if self.0.abs() < eps {
            0
        } else if self.0.sign() == Sign::Minus {
            -1
        } else {
            1
        }
    }

    /// `|self - other| < 10^-digits`.
    pub fn close(&self, other: &Dec, digits: u32) -> bool {
        (&self.0 - &other.0).abs() < BigInt::from(10).pow(DIGITS - digits)
    }

    /// Truncated decimal text with `places` digits.
    pub fn to_text(&self, places: u32) -> String {
        let scaled = self.0.div_floor(&BigInt::from(10).pow(DIGITS - places));
        let neg = scaled.is_negative();
        let mut s = scaled.abs().to_string();
        while s.len() <= places as usize {
            s.insert(0, '0');
        }
        let (i, f) = s.split_at(s.len() - places as usize);
        format!("{}{i}.{f}", if neg { "-" } else { "" })
    }

    pub fn parse(text: &str) -> Dec {
        let (neg, body) = match text.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, text),
        };
        let (i, f) = body.split_once('.').unwrap_or((body, ""));
        let mut digits = format!("{i}{f}");
        digits.push_str(&"0".repeat(DIGITS as usize - f.len()));
        let v: BigInt = digits.parse().unwrap();
        Dec(if neg { -v } else { v })
    }
}

/// Random arithmetic expression over small rationals.
#[derive(Debug, Clone)]
pub enum Expr {
    Leaf(i64, i64),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    /// Root of the absolute value.
    Sqrt(Box<Expr>),
}

pub fn expr(depth: u32) -> impl Strategy<Value = Expr> {
    let leaf = (-9i64..=9, 1i64..=5).prop_map(|(p, q)| Expr::Leaf(p, q));
    leaf.prop_recursive(depth, 24, 2, |inner| {
        prop_oneof![
            1 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            1 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            1 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            1 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Div(Box::new(a), Box::new(b))),
            2 => inner.prop_map(|a| Expr::Sqrt(Box::new(a))),
        ]
    })
}

/// Evaluates exactly and in the decimal oracle side by side. A zero divisor
/// (decided exactly) makes the quotient fall back to its dividend.
pub fn eval(e: &Expr) -> (Constructible, Dec) {
    match e {
        Expr::Leaf(p, q) => (Constructible::from_ratio(*p, *q).unwrap(), Dec::ratio(*p, *q)),
        Expr::Add(a, b) => {
            let ((x, dx), (y, dy)) = (eval(a), eval(b));
            (&x + &y, dx.add(&dy))
        }
        Expr::Sub(a, b) => {
            let ((x, dx), (y, dy)) = (eval(a), eval(b));
            (&x - &y, dx.sub(&dy))
        }
        Expr::Mul(a, b) => {
            let ((x, dx), (y, dy)) = (eval(a), eval(b));
            (&x * &y, dx.mul(&dy))
        }
        Expr::Div(a, b) => {
            let ((x, dx), (y, dy)) = (eval(a), eval(b));
            if y.signum() == 0 {
                (x, dx)
            } else {
                (x.checked_div(&y).unwrap(), dx.div(&dy))
            }
        }
        Expr::Sqrt(a) => {
            let (x, dx) = eval(a);
            (x.abs().sqrt().unwrap(), dx.abs().sqrt())
        }
    }
}

pub fn sign_of(o: Ordering) -> i32 {
    o as i32
}

/// Pi by Machin's formula.
pub fn pi() -> Dec {
    fn arctan_inv(n: i64) -> Dec {
        let u = unit();
        let n2 = BigInt::from(n * n);
        let mut term = &u / BigInt::from(n);
        let mut sum = BigInt::zero();
        let mut k = 0u64;
        while !term.is_zero() {
            let t = &term / BigInt::from(2 * k + 1);
            if k.is_multiple_of(2) {
                sum += t;
            } else {
                sum -= t;
            }
            term /= &n2;
            k += 1;
        }
        Dec(sum)
    }
    let a = arctan_inv(5);
    let b = arctan_inv(239);
    Dec(BigInt::from(16) * a.0 - BigInt::from(4) * b.0)
}

/// `sin(numer/denom degrees)` by the Taylor series.
pub fn sin_degrees(numer: i64, denom: i64) -> Dec {
    let x = pi().mul(&Dec::ratio(numer, 180 * denom));
    let x2 = x.mul(&x);
    let mut term = x.clone();
    let mut sum = x;
    let mut k: i64 = 1;
    while !term.0.is_zero() {
        term = term.mul(&x2).neg();
        term = Dec(&term.0 / BigInt::from((2 * k) * (2 * k + 1)));
        sum = sum.add(&term);
        k += 1;
    }
    sum
}

/// Oracle decimal of an exact value from its canonical text, evaluated
/// independently of the library's approximation routine.
pub fn dec_of(x: &Constructible) -> Dec {
    use compass_core::Form;
    match x.form() {
        Form::Rational(q) => Dec((q.numer() * unit()).div_floor(q.denom())),
        Form::Quad { a, b, r } => dec_of(a).add(&dec_of(b).mul(&dec_of(r).sqrt())),
    }
}

/// Regular n-gon constructible iff n = 2^r times distinct Fermat primes,
/// enumerated directly from the five known Fermat primes.
pub fn brute_force_constructible(limit: u64) -> Vec<u64> {
    let fermat = [3u64, 5, 17, 257, 65537];
    let mut out = Vec::new();
    for mask in 0..(1u32 << fermat.len()) {
        let odd: u64 = (0..fermat.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| fermat[i])
            .try_fold(1u64, |acc, p| acc.checked_mul(p))
            .unwrap_or(u64::MAX);
        let mut v = odd;
        while v <= limit {
            if v >= 3 {
                out.push(v);
            }
            v *= 2;
        }
    }
    out.sort_unstable();
    out
}
