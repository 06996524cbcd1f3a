// Copyright 2026 the compass authors
// SPDX-License-Identifier: Apache-2.0

//! Exact real numbers living in towers of square-root extensions over Q.
//!
//! A [`Constructible`] is either a rational in lowest terms or `a + b*sqrt(r)`
//! where `a`, `b` and `r` only involve radicands strictly smaller than `r`
//! (ordered by nesting depth, then structurally). The top radicand `r` is
//! kept a non-square in the field generated by everything below it, so a
//! vanishing `sqrt(r)` coefficient always collapses back to the base field.
//!
//! Every operation is pure; values are reference counted and `Send + Sync`.

mod approx;
mod roots;
mod text;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact real number in a square-root tower.
#[derive(Clone)]
pub struct Constructible(Repr);

#[derive(Clone)]
enum Repr {
    Rational(BigRational),
    Quad(Arc<QuadNode>),
}

struct QuadNode {
    a: Constructible,
    b: Constructible,
    r: Constructible,
    depth: u32,
    /// Every radicand appearing in `a`, `b` or `r` (so all below `r`).
    base: Arc<RadicandSet>,
}

/// Borrowed view of a value's top-level shape.
#[derive(Debug, Clone, Copy)]
pub enum Form<'a> {
    Rational(&'a BigRational),
    /// `a + b * sqrt(r)`
    Quad {
        a: &'a Constructible,
        b: &'a Constructible,
        r: &'a Constructible,
    },
}

/// Binary operators accepted by [`arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// A radicand ordered by `(depth, structure)`. Sub-radicands always sort
/// below the radicands containing them.
#[derive(Clone)]
pub(crate) struct Radicand(pub(crate) Constructible);

pub(crate) type RadicandSet = BTreeSet<Radicand>;

impl PartialEq for Radicand {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Radicand {}

impl PartialOrd for Radicand {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Radicand {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .depth()
            .cmp(&other.0.depth())
            .then_with(|| self.0.structural_cmp(&other.0))
    }
}

impl Constructible {
    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(n))
    }

    /// `numer / denom`; fails on a zero denominator.
    pub fn from_ratio(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_rational(BigRational::new(
            BigInt::from(numer),
            BigInt::from(denom),
        )))
    }

    pub fn from_rational(q: BigRational) -> Self {
        // BigRational keeps itself reduced with a positive denominator.
        Constructible(Repr::Rational(q))
    }

    pub fn form(&self) -> Form<'_> {
        match &self.0 {
            Repr::Rational(q) => Form::Rational(q),
            Repr::Quad(n) => Form::Quad {
                a: &n.a,
                b: &n.b,
                r: &n.r,
            },
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rational(q) => Some(q),
            Repr::Quad(_) => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    /// Structural zero test. Canonical values only represent zero as the
    /// rational 0; use [`Constructible::signum`] for the semantic answer.
    pub fn is_zero(&self) -> bool {
        matches!(&self.0, Repr::Rational(q) if q.is_zero())
    }

    /// Nesting depth of the tower: 0 for rationals.
    pub fn depth(&self) -> u32 {
        match &self.0 {
            Repr::Rational(_) => 0,
            Repr::Quad(n) => n.depth,
        }
    }

    /// All radicands of the tower, innermost first.
    pub fn radicands(&self) -> Vec<Constructible> {
        self.rads().into_iter().map(|r| r.0).collect()
    }

    pub(crate) fn rads(&self) -> RadicandSet {
        match &self.0 {
            Repr::Rational(_) => RadicandSet::new(),
            Repr::Quad(n) => {
                let mut set = (*n.base).clone();
                set.insert(Radicand(n.r.clone()));
                set
            }
        }
    }

    /// Splits `self` as `c + d*sqrt(t)` for a radicand `t` at or above the
    /// top of `self`.
    pub(crate) fn split(&self, t: &Radicand) -> (Constructible, Constructible) {
        match &self.0 {
            Repr::Quad(n) if Radicand(n.r.clone()) == *t => (n.a.clone(), n.b.clone()),
            _ => (self.clone(), Constructible::zero()),
        }
    }

    /// Total order on representations, used to sort radicands.
    pub fn structural_cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Rational(p), Repr::Rational(q)) => p.cmp(q),
            (Repr::Rational(_), Repr::Quad(_)) => Ordering::Less,
            (Repr::Quad(_), Repr::Rational(_)) => Ordering::Greater,
            (Repr::Quad(m), Repr::Quad(n)) => {
                if Arc::ptr_eq(m, n) {
                    return Ordering::Equal;
                }
                m.depth
                    .cmp(&n.depth)
                    .then_with(|| m.r.structural_cmp(&n.r))
                    .then_with(|| m.a.structural_cmp(&n.a))
                    .then_with(|| m.b.structural_cmp(&n.b))
            }
        }
    }

    pub fn structurally_eq(&self, other: &Self) -> bool {
        self.structural_cmp(other) == Ordering::Equal
    }

    /// Exact sign: -1, 0 or +1.
    ///
    /// For `a + b*sqrt(r)` with `a` and `b` of opposite signs the answer is
    /// `sign(a) * sign(a^2 - b^2 r)`, recursing into the base field.
    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Rational(q) => sign_of_rational(q),
            Repr::Quad(n) => {
                let sa = n.a.signum();
                let sb = n.b.signum();
                if sb == 0 || sa == sb {
                    return sa;
                }
                if sa == 0 {
                    return sb;
                }
                let diff = &(&n.a * &n.a) - &(&(&n.b * &n.b) * &n.r);
                sa * diff.signum()
            }
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse.
    pub fn recip(&self) -> Result<Self> {
        match &self.0 {
            Repr::Rational(q) => {
                if q.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Self::from_rational(q.recip()))
                }
            }
            Repr::Quad(n) => {
                if self.signum() == 0 {
                    return Err(Error::DivisionByZero);
                }
                // 1/(a + b sqrt r) = (a - b sqrt r) / (a^2 - b^2 r)
                let norm = &(&n.a * &n.a) - &(&(&n.b * &n.b) * &n.r);
                let inv = norm.recip()?;
                Ok(make(
                    &n.a * &inv,
                    -(&n.b * &inv),
                    n.r.clone(),
                    &[&n.base],
                ))
            }
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if let Some(q) = rhs.as_rational() {
            if q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            return Ok(self.scale(&q.recip()));
        }
        Ok(self * &rhs.recip()?)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Multiplies by a rational without touching the tower shape.
    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        match &self.0 {
            Repr::Rational(p) => Self::from_rational(p * q),
            Repr::Quad(n) => Constructible(Repr::Quad(Arc::new(QuadNode {
                a: n.a.scale(q),
                b: n.b.scale(q),
                r: n.r.clone(),
                depth: n.depth,
                base: n.base.clone(),
            }))),
        }
    }

    /// Maximum of two values under the exact order.
    pub fn max_of(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }
}

fn sign_of_rational(q: &BigRational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

/// `x op y` with division by zero reported as an error.
pub fn arith(x: &Constructible, op: ArithOp, y: &Constructible) -> Result<Constructible> {
    Ok(match op {
        ArithOp::Add => x + y,
        ArithOp::Sub => x - y,
        ArithOp::Mul => x * y,
        ArithOp::Div => x.checked_div(y)?,
    })
}

fn depth_of(a: &Constructible, b: &Constructible, r: &Constructible) -> u32 {
    1 + a.depth().max(b.depth()).max(r.depth())
}

fn base_of(a: &Constructible, b: &Constructible, r: &Constructible) -> RadicandSet {
    let mut base = a.rads();
    base.extend(b.rads());
    base.extend(r.rads());
    base
}

/// Builds `a + b*sqrt(r)` without checking whether `r` is a square below it.
pub(crate) fn make_unchecked(a: Constructible, b: Constructible, r: Constructible) -> Constructible {
    if b.is_zero() {
        return a;
    }
    let depth = depth_of(&a, &b, &r);
    let base = Arc::new(base_of(&a, &b, &r));
    Constructible(Repr::Quad(Arc::new(QuadNode {
        a,
        b,
        r,
        depth,
        base,
    })))
}

/// Builds `a + b*sqrt(r)`, collapsing when `r` turns out to be a square in
/// the field generated by `a`, `b` and `r`. `known` lists radicand sets in
/// which `r` is already known to be a non-square.
fn make(
    a: Constructible,
    b: Constructible,
    r: Constructible,
    known: &[&Arc<RadicandSet>],
) -> Constructible {
    if b.is_zero() {
        return a;
    }
    let base = base_of(&a, &b, &r);
    if !known.iter().any(|k| base.is_subset(k)) {
        let field: Vec<Radicand> = base.iter().cloned().collect();
        if let Some(root) = roots::nonneg_sqrt_in(&r, &field) {
            return &a + &(&b * &root);
        }
    }
    let depth = depth_of(&a, &b, &r);
    Constructible(Repr::Quad(Arc::new(QuadNode {
        a,
        b,
        r,
        depth,
        base: Arc::new(base),
    })))
}

fn top_order(x: &QuadNode, y: &QuadNode) -> Ordering {
    Radicand(x.r.clone()).cmp(&Radicand(y.r.clone()))
}

fn add_impl(x: &Constructible, y: &Constructible) -> Constructible {
    match (&x.0, &y.0) {
        (Repr::Rational(p), Repr::Rational(q)) => Constructible::from_rational(p + q),
        (Repr::Quad(n), Repr::Rational(_)) => make_same_base(&n.a + y, n.b.clone(), n),
        (Repr::Rational(_), Repr::Quad(n)) => make_same_base(x + &n.a, n.b.clone(), n),
        (Repr::Quad(m), Repr::Quad(n)) => match top_order(m, n) {
            Ordering::Equal => make(
                &m.a + &n.a,
                &m.b + &n.b,
                m.r.clone(),
                &[&m.base, &n.base],
            ),
            Ordering::Greater => make(&m.a + y, m.b.clone(), m.r.clone(), &[&m.base]),
            Ordering::Less => make(x + &n.a, n.b.clone(), n.r.clone(), &[&n.base]),
        },
    }
}

fn mul_impl(x: &Constructible, y: &Constructible) -> Constructible {
    match (&x.0, &y.0) {
        (Repr::Rational(p), Repr::Rational(q)) => Constructible::from_rational(p * q),
        (Repr::Quad(_), Repr::Rational(q)) => x.scale(q),
        (Repr::Rational(p), Repr::Quad(_)) => y.scale(p),
        (Repr::Quad(m), Repr::Quad(n)) => match top_order(m, n) {
            Ordering::Equal => {
                let a = &(&m.a * &n.a) + &(&(&m.b * &n.b) * &m.r);
                let b = &(&m.a * &n.b) + &(&m.b * &n.a);
                make(a, b, m.r.clone(), &[&m.base, &n.base])
            }
            Ordering::Greater => make(&m.a * y, &m.b * y, m.r.clone(), &[&m.base]),
            Ordering::Less => make(x * &n.a, x * &n.b, n.r.clone(), &[&n.base]),
        },
    }
}

/// Rebuilds a node after adding a rational to its `a` part.
fn make_same_base(a: Constructible, b: Constructible, n: &QuadNode) -> Constructible {
    let depth = depth_of(&a, &b, &n.r);
    Constructible(Repr::Quad(Arc::new(QuadNode {
        a,
        b,
        r: n.r.clone(),
        depth,
        base: n.base.clone(),
    })))
}

fn sub_impl(x: &Constructible, y: &Constructible) -> Constructible {
    add_impl(x, &neg_impl(y))
}

fn neg_impl(x: &Constructible) -> Constructible {
    match &x.0 {
        Repr::Rational(q) => Constructible::from_rational(-q),
        Repr::Quad(_) => x.scale(&-BigRational::one()),
    }
}

impl Neg for &Constructible {
    type Output = Constructible;
    fn neg(self) -> Constructible {
        neg_impl(self)
    }
}

impl Neg for Constructible {
    type Output = Constructible;
    fn neg(self) -> Constructible {
        neg_impl(&self)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Constructible> for &Constructible {
            type Output = Constructible;
            fn $method(self, rhs: &Constructible) -> Constructible {
                $body(self, rhs)
            }
        }
        impl $trait<Constructible> for Constructible {
            type Output = Constructible;
            fn $method(self, rhs: Constructible) -> Constructible {
                $body(&self, &rhs)
            }
        }
        impl $trait<&Constructible> for Constructible {
            type Output = Constructible;
            fn $method(self, rhs: &Constructible) -> Constructible {
                $body(&self, rhs)
            }
        }
        impl $trait<Constructible> for &Constructible {
            type Output = Constructible;
            fn $method(self, rhs: Constructible) -> Constructible {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_impl);
forward_binop!(Mul, mul, mul_impl);
forward_binop!(Sub, sub, sub_impl);

impl PartialEq for Constructible {
    fn eq(&self, other: &Self) -> bool {
        self.structurally_eq(other) || (self - other).signum() == 0
    }
}

impl Eq for Constructible {}

impl PartialOrd for Constructible {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Constructible {
    fn cmp(&self, other: &Self) -> Ordering {
        if let (Some(p), Some(q)) = (self.as_rational(), other.as_rational()) {
            return p.cmp(q);
        }
        (self - other).signum().cmp(&0)
    }
}

impl From<i64> for Constructible {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigRational> for Constructible {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

impl fmt::Debug for Constructible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
