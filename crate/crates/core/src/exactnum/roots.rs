// Copyright 2026 the compass authors
// SPDX-License-Identifier: Apache-2.0

//! Square roots: membership tests inside a tower, one-level denesting and
//! adjoining a fresh radicand when nothing else works.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{make_unchecked, Constructible, Form, Radicand};
use crate::error::{Error, Result};

impl Constructible {
    /// Non-negative square root.
    ///
    /// Tries, in order: a root inside the value's own tower (which covers
    /// perfect squares), the denesting `sqrt(a + b sqrt r) = sqrt u +- sqrt v`
    /// when `a^2 - b^2 r` is a square in the base, and finally a new tower
    /// level with a normalized radicand.
    pub fn sqrt(&self) -> Result<Constructible> {
        match self.signum() {
            -1 => return Err(Error::NegativeSqrt),
            0 => return Ok(Constructible::zero()),
            _ => {}
        }
        if let Some(q) = self.as_rational() {
            return Ok(rational_sqrt(q));
        }
        let field: Vec<Radicand> = self.rads().into_iter().collect();
        if let Some(root) = nonneg_sqrt_in(self, &field) {
            return Ok(root);
        }
        if let Some(root) = denest(self)? {
            return Ok(root);
        }
        let (k, radicand) = normalize_radicand(self);
        // sqrt(x) = sqrt(k^2 x) / k
        Ok(make_unchecked(
            Constructible::zero(),
            Constructible::from_rational(k.recip()),
            radicand,
        ))
    }
}

/// `sqrt(a + b sqrt r) = sqrt u + sign(b) sqrt v` with `u, v = (a +- m)/2`
/// whenever `m = sqrt(a^2 - b^2 r)` lies in the base field.
fn denest(x: &Constructible) -> Result<Option<Constructible>> {
    let Form::Quad { a, b, r } = x.form() else {
        return Ok(None);
    };
    let mut base = a.rads();
    base.extend(b.rads());
    base.extend(r.rads());
    let base: Vec<Radicand> = base.into_iter().collect();
    let disc = &(a * a) - &(&(b * b) * r);
    let Some(m) = nonneg_sqrt_in(&disc, &base) else {
        return Ok(None);
    };
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let u = (a + &m).scale(&half);
    let v = (a - &m).scale(&half);
    let su = u.sqrt()?;
    let sv = v.sqrt()?;
    Ok(Some(if b.signum() < 0 { su - sv } else { su + sv }))
}

/// A root of `x` inside the field generated by `field`, made non-negative.
pub(crate) fn nonneg_sqrt_in(x: &Constructible, field: &[Radicand]) -> Option<Constructible> {
    sqrt_in(x, field).map(|s| s.abs())
}

/// Some `s` in the field spanned by `field` with `s*s == x`, if one exists.
///
/// `field` is sorted innermost first and must contain every radicand of
/// `x` together with the radicands nested inside them.
fn sqrt_in(x: &Constructible, field: &[Radicand]) -> Option<Constructible> {
    if x.is_zero() {
        return Some(Constructible::zero());
    }
    let Some((t, below)) = field.split_last() else {
        return x.as_rational().and_then(rational_exact_sqrt);
    };
    let (c, d) = x.split(t);
    let t_val = &t.0;
    if d.is_zero() {
        if let Some(s) = sqrt_in(&c, below) {
            return Some(s);
        }
        // c = (s/t)^2 * t  when  c*t = s^2
        let ct = &c * t_val;
        let s = sqrt_in(&ct, below)?;
        let coeff = s.checked_div(t_val).ok()?;
        return Some(make_unchecked(Constructible::zero(), coeff, t_val.clone()));
    }
    // (u + v sqrt t)^2 = c + d sqrt t  <=>  u^2 + t v^2 = c, 2uv = d
    let disc = &(&c * &c) - &(&(&d * &d) * t_val);
    let m = sqrt_in(&disc, below)?;
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    for u_sq in [(&c + &m).scale(&half), (&c - &m).scale(&half)] {
        if u_sq.is_zero() {
            continue;
        }
        if let Some(u) = sqrt_in(&u_sq, below) {
            let v = d.checked_div(&u.scale(&BigRational::from_integer(2.into()))).ok()?;
            return Some(make_unchecked(u, v, t_val.clone()));
        }
    }
    None
}

fn rational_exact_sqrt(q: &BigRational) -> Option<Constructible> {
    if q.is_negative() {
        return None;
    }
    let n = exact_isqrt(q.numer())?;
    let d = exact_isqrt(q.denom())?;
    Some(Constructible::from_rational(BigRational::new(n, d)))
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

/// sqrt(p/q) = (s/q) sqrt(f) where p*q = s^2 f.
fn rational_sqrt(q: &BigRational) -> Constructible {
    if let Some(root) = rational_exact_sqrt(q) {
        return root;
    }
    let pq = q.numer() * q.denom();
    let (s, f) = square_part(&pq);
    make_unchecked(
        Constructible::zero(),
        Constructible::from_rational(BigRational::new(s, q.denom().clone())),
        Constructible::from_bigint(f),
    )
}

const TRIAL_LIMIT: u32 = 10_000;

/// Splits a positive integer as `s^2 * f`. `f` is square-free as far as
/// trial division by primes below `TRIAL_LIMIT` plus a final perfect-square
/// test can tell.
pub(crate) fn square_part(n: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(n.sign() == Sign::Plus);
    let mut rest = n.clone();
    let mut s = BigInt::one();
    let mut f = BigInt::one();
    let mut p: u32 = 2;
    while p < TRIAL_LIMIT {
        let pb = BigInt::from(p);
        if &pb * &pb > rest {
            break;
        }
        let mut e = 0u32;
        while (&rest % &pb).is_zero() {
            rest /= &pb;
            e += 1;
        }
        if e > 0 {
            s *= pb.pow(e / 2);
            if e % 2 == 1 {
                f *= &pb;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if let Some(root) = exact_isqrt(&rest) {
        s *= root;
    } else {
        f *= rest;
    }
    (s, f)
}

/// Rational leaves of the coefficient tree: recurse through `a` and `b` of
/// every level but never into radicands.
fn coefficient_leaves<'a>(x: &'a Constructible, out: &mut Vec<&'a BigRational>) {
    match x.form() {
        Form::Rational(q) => out.push(q),
        Form::Quad { a, b, .. } => {
            coefficient_leaves(a, out);
            coefficient_leaves(b, out);
        }
    }
}

/// Writes `x = radicand / k^2` with `radicand` carrying integer
/// coefficients whose common content has no square factor left.
fn normalize_radicand(x: &Constructible) -> (BigRational, Constructible) {
    let mut leaves = Vec::new();
    coefficient_leaves(x, &mut leaves);
    let lcm = leaves
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    // smallest s with lcm | s^2
    let (s_part, f_part) = square_part(&lcm);
    let s = s_part * f_part;
    let scale_up = BigRational::from_integer(&s * &s);
    let content = leaves
        .iter()
        .map(|q| (*q * &scale_up).to_integer().abs())
        .fold(BigInt::zero(), |acc, n| acc.gcd(&n));
    let (h, _) = if content.is_zero() {
        (BigInt::one(), BigInt::one())
    } else {
        square_part(&content)
    };
    let k = BigRational::new(s, h);
    let radicand = x.scale(&(&k * &k));
    (k, radicand)
}
