// Copyright 2026 the compass authors
// SPDX-License-Identifier: Apache-2.0

//! Text forms of [`Constructible`].
//!
//! The canonical grammar, used in JSON traces and test fixtures:
//!
//! ```text
//! value    := rational | "(" value " + " value "*sqrt(" value "))"
//! rational := ["-"] digits ["/" digits]
//! ```
//!
//! [`Constructible::pretty`] gives a human-oriented radical form instead.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Constructible, Form};
use crate::error::Error;

impl fmt::Display for Constructible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.form() {
            Form::Rational(q) => write_rational(f, q),
            Form::Quad { a, b, r } => write!(f, "({a} + {b}*sqrt({r}))"),
        }
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, q: &BigRational) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl FromStr for Constructible {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser {
            src: s,
            bytes: s.as_bytes(),
            pos: 0,
        };
        let v = p.value()?;
        p.skip_ws();
        if p.pos != p.bytes.len() {
            return Err(p.error("trailing input"));
        }
        Ok(v)
    }
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, reason: &str) -> Error {
        Error::Parse {
            input: self.src.to_owned(),
            reason: format!("{reason} at byte {}", self.pos),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, token: &str) -> Result<(), Error> {
        self.skip_ws();
        if self.bytes[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            Ok(())
        } else {
            Err(self.error(&format!("expected {token:?}")))
        }
    }

    fn value(&mut self) -> Result<Constructible, Error> {
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&b'(') {
            self.pos += 1;
            let a = self.value()?;
            self.eat("+")?;
            let b = self.value()?;
            self.eat("*")?;
            self.eat("sqrt")?;
            self.eat("(")?;
            let r = self.value()?;
            self.eat(")")?;
            self.eat(")")?;
            let root = r.sqrt().map_err(|_| self.error("negative radicand"))?;
            Ok(&a + &(&b * &root))
        } else {
            self.rational()
        }
    }

    fn integer(&mut self) -> Result<BigInt, Error> {
        self.skip_ws();
        let start = self.pos;
        if self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.error("expected an integer"))
    }

    fn rational(&mut self) -> Result<Constructible, Error> {
        let numer = self.integer()?;
        if self.bytes.get(self.pos) == Some(&b'/') {
            self.pos += 1;
            let denom = self.integer()?;
            if denom.is_zero() {
                return Err(self.error("zero denominator"));
            }
            Ok(Constructible::from_rational(BigRational::new(numer, denom)))
        } else {
            Ok(Constructible::from_bigint(numer))
        }
    }
}

impl Constructible {
    /// Radical notation such as `√(10 - 2√5)/4` or `(√5 - 1)/4`.
    pub fn pretty(&self) -> String {
        match self.form() {
            Form::Rational(q) => {
                if q.is_integer() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
            Form::Quad { a, b, r } => {
                if let Some(single) = single_radical(self) {
                    return single;
                }
                let radical = pretty_radical(r);
                if let (Some(qa), Some(qb)) = (a.as_rational(), b.as_rational()) {
                    return pretty_rational_pair(qa, qb, &radical);
                }
                let last = match b.as_rational() {
                    Some(qb) => pretty_rational_pair(&BigRational::zero(), qb, &radical),
                    None => format!("{}·{radical}", wrap_compound(b)),
                };
                if a.is_zero() {
                    last
                } else if let Some(rest) = last.strip_prefix('-') {
                    format!("{} - {rest}", a.pretty())
                } else {
                    format!("{} + {last}", a.pretty())
                }
            }
        }
    }
}

/// `b·sqrt(r)` whose square lives in a smaller tower prints as one radical,
/// e.g. `((√5 - 1)/8)·√(10 + 2√5)` becomes `√(10 - 2√5)/4`.
fn single_radical(x: &Constructible) -> Option<String> {
    let Form::Quad { a, b, .. } = x.form() else {
        return None;
    };
    if !a.is_zero() || b.is_rational() {
        return None;
    }
    let sq = x.square();
    if sq.rads().len() >= x.rads().len() {
        return None;
    }
    let root = sq.sqrt().ok()?;
    let body = root.pretty();
    Some(match (x.signum() < 0, body.contains(' ')) {
        (false, _) => body,
        (true, false) => format!("-{body}"),
        (true, true) => format!("-({body})"),
    })
}

fn wrap_compound(x: &Constructible) -> String {
    if x.is_rational() {
        x.pretty()
    } else {
        format!("({})", x.pretty())
    }
}

fn pretty_radical(r: &Constructible) -> String {
    match r.as_rational() {
        Some(q) if q.is_integer() => format!("√{}", q.numer()),
        _ => format!("√({})", r.pretty()),
    }
}

fn coefficient(k: &BigInt, radical: &str) -> String {
    if k.is_one() {
        radical.to_owned()
    } else if *k == -BigInt::one() {
        format!("-{radical}")
    } else {
        format!("{k}{radical}")
    }
}

/// `a + b·radical` over a common denominator.
fn pretty_rational_pair(a: &BigRational, b: &BigRational, radical: &str) -> String {
    let denom = a.denom().lcm(b.denom());
    let big_a = (a * BigRational::from_integer(denom.clone())).to_integer();
    let big_b = (b * BigRational::from_integer(denom.clone())).to_integer();
    let numer = if big_a.is_zero() {
        coefficient(&big_b, radical)
    } else if big_a.is_negative() && big_b.is_positive() {
        format!("{} - {}", coefficient(&big_b, radical), big_a.abs())
    } else if big_b.is_negative() {
        format!("{big_a} - {}", coefficient(&big_b.abs(), radical))
    } else {
        format!("{big_a} + {}", coefficient(&big_b, radical))
    };
    if denom.is_one() {
        numer
    } else if big_a.is_zero() {
        format!("{numer}/{denom}")
    } else {
        format!("({numer})/{denom}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> Constructible {
        Constructible::from_integer(n)
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(Constructible::from_ratio(-3, 6).unwrap().to_string(), "-1/2");
        assert_eq!(int(7).to_string(), "7");
        let s5 = int(5).sqrt().unwrap();
        assert_eq!((&s5 - &int(1)).to_string(), "(-1 + 1*sqrt(5))");
    }

    #[test]
    fn parse_round_trip() {
        let s5 = int(5).sqrt().unwrap();
        let x = (&int(10) - &(&int(2) * &s5)).sqrt().unwrap();
        let text = x.to_string();
        let back: Constructible = text.parse().unwrap();
        assert!(back.structurally_eq(&x), "{text} vs {back}");
    }

    #[test]
    fn parse_errors() {
        assert!("".parse::<Constructible>().is_err());
        assert!("1/0".parse::<Constructible>().is_err());
        assert!("(1 + 1*sqrt(-2))".parse::<Constructible>().is_err());
        assert!("(1 + 2".parse::<Constructible>().is_err());
        assert!("3 4".parse::<Constructible>().is_err());
        assert!(" ( 0 + 1 * sqrt( 2 ) ) ".parse::<Constructible>().is_ok());
    }

    #[test]
    fn pretty_forms() {
        let s5 = int(5).sqrt().unwrap();
        let quarter = BigRational::new(1.into(), 4.into());
        assert_eq!((&s5 - &int(1)).scale(&quarter).pretty(), "(√5 - 1)/4");
        assert_eq!((&s5 + &int(1)).scale(&quarter).pretty(), "(1 + √5)/4");
        let sin36 = (&int(10) - &(&int(2) * &s5)).sqrt().unwrap().scale(&quarter);
        assert_eq!(sin36.pretty(), "√(10 - 2√5)/4");
        assert_eq!(int(3).sqrt().unwrap().scale(&BigRational::new(1.into(), 2.into())).pretty(), "√3/2");
        assert_eq!((-&sin36).pretty(), "-√(10 - 2√5)/4");
    }

    #[test]
    fn pretty_never_doubles_signs() {
        let a = crate::trig::ExactAngle::from_ratio(9, 2).unwrap();
        let t = crate::trig::exact_tan(a).unwrap();
        for x in [t.clone(), -&t, crate::trig::exact_cos(a), -&crate::trig::exact_sin(a)] {
            let text = x.pretty();
            assert!(!text.contains("--") && !text.contains("+ -"), "{text}");
        }
    }
}
