// Copyright 2026 the compass authors
// SPDX-License-Identifier: Apache-2.0

//! Exact sines and cosines on the grid of angles `3°·m / 2^k` in (0°, 90°].
//!
//! Values are generated from three seeds (18°, 30°, 45°) with the addition
//! formulas, complements and half angles along a fixed route per angle, so
//! the same angle always yields the same representation.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactnum::Constructible;

/// An angle in degrees, `numer / 2^log2_denom`, reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactAngle {
    numer: u64,
    log2_denom: u32,
}

impl ExactAngle {
    /// Whole degrees.
    pub fn degrees(deg: u64) -> Result<Self> {
        Self::from_ratio(deg, 1)
    }

    /// `numer / denom` degrees. The reduced denominator must be a power of
    /// two and the numerator a multiple of 3.
    pub fn from_ratio(numer: u64, denom: u64) -> Result<Self> {
        let off_grid = || Error::OffGrid(format!("{numer}/{denom}"));
        if denom == 0 || numer == 0 {
            return Err(off_grid());
        }
        let g = numer.gcd(&denom);
        let (n, d) = (numer / g, denom / g);
        if !d.is_power_of_two() {
            return Err(off_grid());
        }
        let angle = ExactAngle {
            numer: n,
            log2_denom: d.trailing_zeros(),
        };
        if n % 3 != 0 || angle.value() > BigRational::from_integer(90.into()) {
            return Err(Error::OffGrid(angle.to_string()));
        }
        Ok(angle)
    }

    pub fn value(&self) -> BigRational {
        BigRational::new(
            BigInt::from(self.numer),
            BigInt::from(1u64) << self.log2_denom,
        )
    }

    pub fn is_right(&self) -> bool {
        self.log2_denom == 0 && self.numer == 90
    }

    pub fn whole_degrees(&self) -> Option<u64> {
        (self.log2_denom == 0).then_some(self.numer)
    }

    fn with(numer: u64, log2_denom: u32) -> Self {
        Self::from_ratio(numer, 1 << log2_denom).expect("route stays on the grid")
    }

    /// All integer multiples of 3° in (0°, 90°].
    pub fn multiples_of_three() -> impl Iterator<Item = ExactAngle> {
        (1..=30).map(|m| ExactAngle::with(3 * m, 0))
    }
}

impl fmt::Display for ExactAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.log2_denom == 0 {
            return write!(f, "{}", self.numer);
        }
        // p / 2^k has exactly k decimal places
        let k = self.log2_denom;
        let scaled = BigInt::from(self.numer) * BigInt::from(5u32).pow(k);
        let digits = format!("{:0>width$}", scaled, width = k as usize + 1);
        let (int_part, frac) = digits.split_at(digits.len() - k as usize);
        write!(f, "{int_part}.{frac}")
    }
}

impl FromStr for ExactAngle {
    type Err = Error;

    /// Accepts `36`, `15/2` or `7.5`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::OffGrid(s.to_owned());
        if let Some((n, d)) = s.split_once('/') {
            let n: u64 = n.trim().parse().map_err(|_| bad())?;
            let d: u64 = d.trim().parse().map_err(|_| bad())?;
            return Self::from_ratio(n, d);
        }
        if let Some((int_part, frac)) = s.split_once('.') {
            if frac.is_empty() || !frac.bytes().all(|c| c.is_ascii_digit()) || frac.len() > 18 {
                return Err(bad());
            }
            let whole: u64 = if int_part.is_empty() {
                0
            } else {
                int_part.parse().map_err(|_| bad())?
            };
            let denom = 10u64.pow(frac.len() as u32);
            let f: u64 = frac.parse().map_err(|_| bad())?;
            let numer = whole.checked_mul(denom).and_then(|w| w.checked_add(f)).ok_or_else(bad)?;
            return Self::from_ratio(numer, denom);
        }
        Self::degrees(s.parse().map_err(|_| bad())?)
    }
}

/// How a grid angle is obtained from already-known ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Right,
    Seed,
    Complement(ExactAngle),
    Sum(ExactAngle, ExactAngle),
    Difference(ExactAngle, ExactAngle),
    Half(ExactAngle),
}

/// The fixed derivation route of an angle.
pub fn route(a: ExactAngle) -> Route {
    use Route::*;
    let k = a.log2_denom;
    if a.numer > 45 << k && !a.is_right() {
        return Complement(ExactAngle::with((90 << k) - a.numer, k));
    }
    if k > 0 {
        return Half(ExactAngle::with(a.numer, k - 1));
    }
    let d = |deg| ExactAngle::with(deg, 0);
    match a.numer {
        90 => Right,
        18 | 30 | 45 => Seed,
        n if n > 45 => Complement(d(90 - n)),
        3 => Difference(d(18), d(15)),
        6 => Sum(d(3), d(3)),
        9 => Half(d(18)),
        12 => Difference(d(30), d(18)),
        15 => Difference(d(45), d(30)),
        21 => Sum(d(18), d(3)),
        24 => Difference(d(30), d(6)),
        27 => Difference(d(45), d(18)),
        33 => Difference(d(45), d(12)),
        36 => Sum(d(18), d(18)),
        39 => Difference(d(45), d(6)),
        42 => Difference(d(45), d(3)),
        n => unreachable!("{n} is not a multiple of 3 below 45"),
    }
}

fn rational(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

fn seed_sin(deg: u64) -> Constructible {
    let int = Constructible::from_integer;
    match deg {
        18 => (int(5).sqrt().expect("5 > 0") - int(1)).scale(&rational(1, 4)),
        30 => Constructible::from_rational(rational(1, 2)),
        45 => int(2).sqrt().expect("2 > 0").scale(&rational(1, 2)),
        _ => unreachable!("not a seed angle"),
    }
}

fn cos_from_sin(s: &Constructible) -> Constructible {
    (&Constructible::one() - &s.square())
        .sqrt()
        .expect("|sin| <= 1 on the grid")
}

/// Memoized sine/cosine table. The memo only ever grows.
#[derive(Default)]
pub struct TrigTable {
    memo: Mutex<HashMap<ExactAngle, (Constructible, Constructible)>>,
}

impl TrigTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn sin_cos(&self, a: ExactAngle) -> (Constructible, Constructible) {
        if let Some(hit) = self.memo.lock().expect("memo lock").get(&a) {
            return hit.clone();
        }
        let value = self.derive(a);
        self.memo
            .lock()
            .expect("memo lock")
            .entry(a)
            .or_insert(value)
            .clone()
    }

    fn derive(&self, a: ExactAngle) -> (Constructible, Constructible) {
        let half = rational(1, 2);
        match route(a) {
            Route::Right => (Constructible::one(), Constructible::zero()),
            Route::Seed => {
                let s = seed_sin(a.numer);
                let c = cos_from_sin(&s);
                (s, c)
            }
            Route::Complement(b) => {
                let (s, c) = self.sin_cos(b);
                (c, s)
            }
            Route::Sum(b, c) | Route::Difference(b, c) => {
                let (sb, cb) = self.sin_cos(b);
                let (sc, cc) = self.sin_cos(c);
                let ss = &sb * &cc;
                let cs = &cb * &sc;
                let cc2 = &cb * &cc;
                let ss2 = &sb * &sc;
                if matches!(route(a), Route::Sum(..)) {
                    (&ss + &cs, &cc2 - &ss2)
                } else {
                    (&ss - &cs, &cc2 + &ss2)
                }
            }
            Route::Half(b) => {
                // both roots positive: a lies in (0°, 45°]
                let (_, cb) = self.sin_cos(b);
                let one = Constructible::one();
                let s = (&one - &cb).scale(&half).sqrt().expect("1 - cos >= 0");
                let c = (&one + &cb).scale(&half).sqrt().expect("1 + cos >= 0");
                (s, c)
            }
        }
    }
}

fn shared_table() -> &'static TrigTable {
    static TABLE: OnceLock<TrigTable> = OnceLock::new();
    TABLE.get_or_init(TrigTable::new)
}

/// `(sin a, cos a)` exactly.
pub fn exact_sin_cos(a: ExactAngle) -> (Constructible, Constructible) {
    shared_table().sin_cos(a)
}

pub fn exact_sin(a: ExactAngle) -> Constructible {
    exact_sin_cos(a).0
}

pub fn exact_cos(a: ExactAngle) -> Constructible {
    exact_sin_cos(a).1
}

pub fn exact_tan(a: ExactAngle) -> Result<Constructible> {
    if a.is_right() {
        return Err(Error::TangentUndefined);
    }
    let (s, c) = exact_sin_cos(a);
    s.checked_div(&c)
}

/// Side of the regular n-gon inscribed in the unit circle: `2 sin(180°/n)`.
pub fn side_length(n: u64) -> Result<Constructible> {
    if n < 3 {
        return Err(Error::TooFewSides(n));
    }
    let a = ExactAngle::from_ratio(180, n).map_err(|_| Error::OffGrid(format!("180/{n}")))?;
    Ok(exact_sin(a).scale(&rational(2, 1)))
}

/// Height subtending angle `a` at horizontal `distance`: `distance * tan a`.
pub fn max_building_height(distance: &Constructible, a: ExactAngle) -> Result<Constructible> {
    if distance.signum() <= 0 {
        return Err(Error::InvalidArgument("distance must be positive".into()));
    }
    Ok(distance * &exact_tan(a)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn deg(d: u64) -> ExactAngle {
        ExactAngle::degrees(d).unwrap()
    }

    fn parse(s: &str) -> Constructible {
        s.parse().unwrap()
    }

    #[test]
    fn grid_membership() {
        assert!(ExactAngle::degrees(36).is_ok());
        assert!(ExactAngle::from_ratio(15, 2).is_ok());
        assert!(ExactAngle::from_ratio(9, 2).is_ok());
        assert!(ExactAngle::degrees(1).is_err());
        assert!(ExactAngle::degrees(0).is_err());
        assert!(ExactAngle::degrees(93).is_err());
        assert!(ExactAngle::from_ratio(3, 5).is_err());
        assert_eq!("7.5".parse::<ExactAngle>().unwrap(), ExactAngle::from_ratio(15, 2).unwrap());
        assert_eq!("45/4".parse::<ExactAngle>().unwrap().to_string(), "11.25");
        assert!("4".parse::<ExactAngle>().is_err());
        assert!("abc".parse::<ExactAngle>().is_err());
    }

    #[test]
    fn notable_values() {
        let (s, c) = exact_sin_cos(deg(30));
        assert_eq!(s, Constructible::from_ratio(1, 2).unwrap());
        assert_eq!(c, parse("(0 + 1/2*sqrt(3))"));
        let (s, c) = exact_sin_cos(deg(72));
        assert_eq!(s, parse("(0 + 1/4*sqrt((10 + 2*sqrt(5))))"));
        assert_eq!(c, parse("(-1/4 + 1/4*sqrt(5))"));
        let (s54, _) = exact_sin_cos(deg(54));
        assert_eq!((&s54 - &exact_cos(deg(36))).signum(), 0);
    }

    #[test]
    fn three_degrees_decimal() {
        assert_eq!(exact_sin(deg(3)).approx(10), "0.0523359562");
    }

    #[test]
    fn tangents() {
        assert_eq!(exact_tan(deg(45)).unwrap(), Constructible::one());
        assert_eq!(exact_tan(deg(60)).unwrap(), parse("(0 + 1*sqrt(3))"));
        let expect = parse("(0 + 1*sqrt((10 + -2*sqrt(5))))")
            .checked_div(&parse("(1 + 1*sqrt(5))"))
            .unwrap();
        assert_eq!(exact_tan(deg(36)).unwrap(), expect);
        assert_eq!(exact_tan(deg(90)), Err(Error::TangentUndefined));
    }

    #[test]
    fn side_lengths() {
        assert_eq!(side_length(3).unwrap(), parse("(0 + 1*sqrt(3))"));
        assert_eq!(side_length(10).unwrap(), parse("(-1/2 + 1/2*sqrt(5))"));
        // 2 sin 15° = (sqrt 6 - sqrt 2)/2
        let expect = &parse("(0 + 1/2*sqrt(6))") - &parse("(0 + 1/2*sqrt(2))");
        assert_eq!(side_length(12).unwrap(), expect);
        assert!(matches!(side_length(7), Err(Error::OffGrid(_))));
        assert_eq!(side_length(2), Err(Error::TooFewSides(2)));
    }

    #[test]
    fn building_heights() {
        let h = max_building_height(&21.into(), deg(36)).unwrap();
        assert_eq!(h.approx(4), "15.2574");
        assert_eq!(max_building_height(&1.into(), deg(45)).unwrap(), Constructible::one());
        assert_eq!(
            max_building_height(&10.into(), deg(60)).unwrap(),
            parse("(0 + 10*sqrt(3))")
        );
        assert!(max_building_height(&0.into(), deg(45)).is_err());
        assert_eq!(max_building_height(&1.into(), deg(90)), Err(Error::TangentUndefined));
    }

    #[test]
    fn routes_terminate_on_grid() {
        for a in ExactAngle::multiples_of_three() {
            let _ = route(a);
        }
        assert_eq!(route(deg(9)), Route::Half(deg(18)));
        assert_eq!(route(deg(3)), Route::Difference(deg(18), deg(15)));
    }
}
