// Copyright 2026 the compass authors
// SPDX-License-Identifier: Apache-2.0

//! Replayable construction traces.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exactnum::Constructible;
use crate::geom::{self, Circle, Line, Point};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepKind {
    PlacePoint,
    Line,
    Circle,
    Intersect,
    Select,
}

/// Rule picking one point out of an intersection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selector {
    LexMin,
    LexMax,
    PositiveY,
    NegativeY,
    PositiveX,
    NegativeX,
    /// On the closed segment between two labeled points.
    OnSegment(String, String),
    /// Any candidate other than the labeled point.
    DistinctFrom(String),
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::LexMin => f.write_str("lex-min"),
            Selector::LexMax => f.write_str("lex-max"),
            Selector::PositiveY => f.write_str("positive-y"),
            Selector::NegativeY => f.write_str("negative-y"),
            Selector::PositiveX => f.write_str("positive-x"),
            Selector::NegativeX => f.write_str("negative-x"),
            Selector::OnSegment(a, b) => write!(f, "on-segment({a},{b})"),
            Selector::DistinctFrom(p) => write!(f, "distinct-from({p})"),
        }
    }
}

impl FromStr for Selector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            input: s.to_owned(),
            reason: "unknown selector".into(),
        };
        Ok(match s {
            "lex-min" => Selector::LexMin,
            "lex-max" => Selector::LexMax,
            "positive-y" => Selector::PositiveY,
            "negative-y" => Selector::NegativeY,
            "positive-x" => Selector::PositiveX,
            "negative-x" => Selector::NegativeX,
            _ => {
                let (name, args) = s.strip_suffix(')').and_then(|t| t.split_once('(')).ok_or_else(bad)?;
                match name {
                    "on-segment" => {
                        let (a, b) = args.split_once(',').ok_or_else(bad)?;
                        Selector::OnSegment(a.trim().to_owned(), b.trim().to_owned())
                    }
                    "distinct-from" => Selector::DistinctFrom(args.trim().to_owned()),
                    _ => return Err(bad()),
                }
            }
        })
    }
}

impl Serialize for Selector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Selector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstructionStep {
    pub kind: StepKind,
    pub inputs: Vec<String>,
    pub output: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub selector: Option<Selector>,
    /// Literal coordinates of a placed point, in canonical text form.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub at: Option<[String; 2]>,
}

/// A geometric object bound to a label.
#[derive(Debug, Clone)]
pub enum Object {
    Point(Point),
    Line(Line),
    Circle(Circle),
    Points(Vec<Point>),
}

impl Object {
    fn kind_name(&self) -> &'static str {
        match self {
            Object::Point(_) => "point",
            Object::Line(_) => "line",
            Object::Circle(_) => "circle",
            Object::Points(_) => "point set",
        }
    }

    fn render(&self) -> Value {
        let pt = |p: &Point| json!([p.x.to_string(), p.y.to_string()]);
        match self {
            Object::Point(p) => json!({"type": "point", "x": p.x.to_string(), "y": p.y.to_string()}),
            Object::Line(l) => {
                let (a, b, c) = l.coefficients();
                json!({"type": "line", "a": a.to_string(), "b": b.to_string(), "c": c.to_string()})
            }
            Object::Circle(c) => json!({
                "type": "circle",
                "center": pt(c.center()),
                "radius_sq": c.radius_sq().to_string(),
            }),
            Object::Points(ps) => json!({
                "type": "points",
                "points": ps.iter().map(pt).collect::<Vec<_>>(),
            }),
        }
    }

    /// Exact equality of the bound objects.
    fn same_as(&self, other: &Object) -> bool {
        match (self, other) {
            (Object::Point(p), Object::Point(q)) => p == q,
            (Object::Line(l), Object::Line(m)) => l.same_set(m),
            (Object::Circle(c), Object::Circle(d)) => {
                c.center() == d.center() && c.radius_sq() == d.radius_sq()
            }
            (Object::Points(ps), Object::Points(qs)) => ps == qs,
            _ => false,
        }
    }
}

/// An ordered list of primitive steps with every produced object bound to
/// its label. Steps only reference earlier labels.
#[derive(Debug, Clone, Default)]
pub struct ConstructionTrace {
    steps: Vec<ConstructionStep>,
    bindings: Vec<(String, Object)>,
    index: HashMap<String, usize>,
}

impl ConstructionTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn steps(&self) -> &[ConstructionStep] {
        &self.steps
    }

    pub fn bindings(&self) -> impl Iterator<Item = (&str, &Object)> {
        self.bindings.iter().map(|(l, o)| (l.as_str(), o))
    }

    pub fn get(&self, label: &str) -> Result<&Object> {
        self.index
            .get(label)
            .map(|&i| &self.bindings[i].1)
            .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    pub fn point(&self, label: &str) -> Result<&Point> {
        match self.get(label)? {
            Object::Point(p) => Ok(p),
            other => Err(wrong(label, "point", other)),
        }
    }

    pub fn line(&self, label: &str) -> Result<&Line> {
        match self.get(label)? {
            Object::Line(l) => Ok(l),
            other => Err(wrong(label, "line", other)),
        }
    }

    pub fn circle(&self, label: &str) -> Result<&Circle> {
        match self.get(label)? {
            Object::Circle(c) => Ok(c),
            other => Err(wrong(label, "circle", other)),
        }
    }

    /// Labels introduced by `place-point` steps.
    pub fn literal_points(&self) -> Vec<&str> {
        self.steps
            .iter()
            .filter(|s| s.kind == StepKind::PlacePoint)
            .map(|s| s.output.as_str())
            .collect()
    }

    pub fn place_point(&mut self, label: &str, x: Constructible, y: Constructible) -> Result<Point> {
        self.apply(ConstructionStep {
            kind: StepKind::PlacePoint,
            inputs: vec![],
            output: label.to_owned(),
            selector: None,
            at: Some([x.to_string(), y.to_string()]),
        })?;
        self.point(label).cloned()
    }

    pub fn line_through(&mut self, label: &str, p: &str, q: &str) -> Result<Line> {
        self.push(StepKind::Line, &[p, q], label, None)?;
        self.line(label).cloned()
    }

    pub fn circle_through(&mut self, label: &str, center: &str, through: &str) -> Result<Circle> {
        self.push(StepKind::Circle, &[center, through], label, None)?;
        self.circle(label).cloned()
    }

    pub fn intersect(&mut self, label: &str, first: &str, second: &str) -> Result<Vec<Point>> {
        self.push(StepKind::Intersect, &[first, second], label, None)?;
        match self.get(label)? {
            Object::Points(ps) => Ok(ps.clone()),
            other => Err(wrong(label, "point set", other)),
        }
    }

    pub fn select(&mut self, label: &str, set: &str, selector: Selector) -> Result<Point> {
        self.push(StepKind::Select, &[set], label, Some(selector))?;
        self.point(label).cloned()
    }

    fn push(&mut self, kind: StepKind, inputs: &[&str], output: &str, selector: Option<Selector>) -> Result<()> {
        self.apply(ConstructionStep {
            kind,
            inputs: inputs.iter().map(|s| (*s).to_owned()).collect(),
            output: output.to_owned(),
            selector,
            at: None,
        })
    }

    /// Executes one step against the current bindings.
    pub fn apply(&mut self, step: ConstructionStep) -> Result<()> {
        if self.index.contains_key(&step.output) {
            return Err(Error::DuplicateLabel(step.output));
        }
        let object = self.evaluate(&step)?;
        self.index.insert(step.output.clone(), self.bindings.len());
        self.bindings.push((step.output.clone(), object));
        self.steps.push(step);
        Ok(())
    }

    fn input<'s>(&self, step: &'s ConstructionStep, i: usize) -> Result<&'s str> {
        step.inputs
            .get(i)
            .map(String::as_str)
            .ok_or_else(|| Error::InvalidArgument(format!("step {:?} is missing input {i}", step.output)))
    }

    fn evaluate(&self, step: &ConstructionStep) -> Result<Object> {
        Ok(match step.kind {
            StepKind::PlacePoint => {
                let [x, y] = step
                    .at
                    .as_ref()
                    .ok_or_else(|| Error::InvalidArgument(format!("{:?} has no coordinates", step.output)))?;
                Object::Point(Point::new(x.parse()?, y.parse()?))
            }
            StepKind::Line => {
                let p = self.point(self.input(step, 0)?)?.clone();
                let q = self.point(self.input(step, 1)?)?.clone();
                Object::Line(Line::through(p, q)?)
            }
            StepKind::Circle => {
                let c = self.point(self.input(step, 0)?)?.clone();
                let t = self.point(self.input(step, 1)?)?.clone();
                Object::Circle(Circle::new(c, t)?)
            }
            StepKind::Intersect => {
                let first = self.get(self.input(step, 0)?)?;
                let second = self.get(self.input(step, 1)?)?;
                Object::Points(intersect_objects(first, second)?)
            }
            StepKind::Select => {
                let set_label = self.input(step, 0)?;
                let candidates = match self.get(set_label)? {
                    Object::Points(ps) => ps,
                    other => return Err(wrong(set_label, "point set", other)),
                };
                let selector = step
                    .selector
                    .as_ref()
                    .ok_or_else(|| Error::InvalidArgument(format!("{:?} has no selector", step.output)))?;
                Object::Point(self.choose(set_label, candidates, selector)?)
            }
        })
    }

    fn choose(&self, set_label: &str, candidates: &[Point], selector: &Selector) -> Result<Point> {
        let mismatch = |matched| Error::Selection {
            label: set_label.to_owned(),
            selector: selector.to_string(),
            matched,
        };
        // intersection sets are already sorted lexicographically
        match selector {
            Selector::LexMin => return candidates.first().cloned().ok_or_else(|| mismatch(0)),
            Selector::LexMax => return candidates.last().cloned().ok_or_else(|| mismatch(0)),
            _ => {}
        }
        let keep: Vec<&Point> = match selector {
            Selector::PositiveY => candidates.iter().filter(|p| p.y.signum() > 0).collect(),
            Selector::NegativeY => candidates.iter().filter(|p| p.y.signum() < 0).collect(),
            Selector::PositiveX => candidates.iter().filter(|p| p.x.signum() > 0).collect(),
            Selector::NegativeX => candidates.iter().filter(|p| p.x.signum() < 0).collect(),
            Selector::OnSegment(a, b) => {
                let a = self.point(a)?;
                let b = self.point(b)?;
                candidates.iter().filter(|p| on_segment(p, a, b)).collect()
            }
            Selector::DistinctFrom(q) => {
                let q = self.point(q)?;
                candidates.iter().filter(|p| *p != q).collect()
            }
            Selector::LexMin | Selector::LexMax => unreachable!(),
        };
        match keep.as_slice() {
            [only] => Ok((*only).clone()),
            other => Err(mismatch(other.len())),
        }
    }

    /// Rebuilds a trace from its steps alone.
    pub fn replay(steps: &[ConstructionStep]) -> Result<ConstructionTrace> {
        let mut trace = ConstructionTrace::new();
        for step in steps {
            trace.apply(step.clone())?;
        }
        Ok(trace)
    }

    /// Whether replaying the steps reproduces every binding exactly.
    pub fn replays_identically(&self) -> Result<bool> {
        let again = Self::replay(&self.steps)?;
        Ok(self
            .bindings
            .iter()
            .zip(&again.bindings)
            .all(|((l1, o1), (l2, o2))| l1 == l2 && o1.same_as(o2))
            && self.bindings.len() == again.bindings.len())
    }

    pub fn to_json(&self) -> Value {
        let mut bindings = Map::new();
        for (label, obj) in &self.bindings {
            bindings.insert(label.clone(), obj.render());
        }
        json!({
            "steps": self.steps,
            "bindings": Value::Object(bindings),
        })
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("trace serializes");
        s.push('\n');
        s
    }

    /// Parses a JSON trace, replays its steps and checks any bindings it
    /// carries against the replay.
    pub fn from_json_str(text: &str) -> Result<ConstructionTrace> {
        let parse_err = |e: serde_json::Error| Error::Parse {
            input: "trace json".into(),
            reason: e.to_string(),
        };
        let value: Value = serde_json::from_str(text).map_err(parse_err)?;
        let steps: Vec<ConstructionStep> = serde_json::from_value(
            value.get("steps").cloned().unwrap_or(Value::Array(vec![])),
        )
        .map_err(parse_err)?;
        let trace = Self::replay(&steps)?;
        if let Some(Value::Object(recorded)) = value.get("bindings") {
            for (label, rendered) in recorded {
                if trace.get(label)?.render() != *rendered {
                    return Err(Error::ReplayMismatch(label.clone()));
                }
            }
        }
        Ok(trace)
    }
}

fn wrong(label: &str, expected: &'static str, found: &Object) -> Error {
    Error::WrongObject {
        label: label.to_owned(),
        expected,
        found: found.kind_name(),
    }
}

fn on_segment(p: &Point, a: &Point, b: &Point) -> bool {
    let (ax, ay) = (&p.x - &a.x, &p.y - &a.y);
    let (bx, by) = (&p.x - &b.x, &p.y - &b.y);
    let cross = &(&ax * &by) - &(&ay * &bx);
    let dot = &(&ax * &bx) + &(&ay * &by);
    cross.signum() == 0 && dot.signum() <= 0
}

fn intersect_objects(first: &Object, second: &Object) -> Result<Vec<Point>> {
    Ok(match (first, second) {
        (Object::Line(l), Object::Line(m)) => geom::intersect_lines(l, m)?.into_iter().collect(),
        (Object::Line(l), Object::Circle(c)) | (Object::Circle(c), Object::Line(l)) => {
            geom::intersect_line_circle(l, c)
        }
        (Object::Circle(c), Object::Circle(d)) => geom::intersect_circles(c, d)?,
        (a, b) => {
            let bad = if matches!(a, Object::Line(_) | Object::Circle(_)) { b } else { a };
            return Err(Error::WrongObject {
                label: String::new(),
                expected: "line or circle",
                found: bad.kind_name(),
            });
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> Constructible {
        Constructible::from_integer(n)
    }

    fn seeded() -> ConstructionTrace {
        let mut t = ConstructionTrace::new();
        t.place_point("A", int(1), int(0)).unwrap();
        t.place_point("A'", int(-1), int(0)).unwrap();
        t
    }

    #[test]
    fn selectors_round_trip_as_text() {
        for s in [
            Selector::LexMin,
            Selector::NegativeX,
            Selector::OnSegment("O".into(), "A".into()),
            Selector::DistinctFrom("A'".into()),
        ] {
            assert_eq!(s.to_string().parse::<Selector>().unwrap(), s);
        }
        assert!("sideways".parse::<Selector>().is_err());
    }

    #[test]
    fn labels_must_be_fresh_and_known() {
        let mut t = seeded();
        assert_eq!(
            t.place_point("A", int(0), int(0)).unwrap_err(),
            Error::DuplicateLabel("A".into())
        );
        assert_eq!(
            t.line_through("l", "A", "Z").unwrap_err(),
            Error::UnknownLabel("Z".into())
        );
        t.line_through("l", "A", "A'").unwrap();
        assert!(matches!(t.circle_through("c", "l", "A"), Err(Error::WrongObject { .. })));
    }

    #[test]
    fn ambiguous_selection_is_an_error() {
        let mut t = seeded();
        t.circle_through("cA", "A", "A'").unwrap();
        t.circle_through("cA'", "A'", "A").unwrap();
        t.intersect("X", "cA", "cA'").unwrap();
        let err = t.select("P", "X", Selector::PositiveX).unwrap_err();
        assert!(matches!(err, Error::Selection { matched: 0, .. }));
        t.select("P", "X", Selector::PositiveY).unwrap();
    }

    #[test]
    fn json_round_trip_replays() {
        let mut t = seeded();
        t.circle_through("cA", "A", "A'").unwrap();
        t.circle_through("cA'", "A'", "A").unwrap();
        t.intersect("X", "cA", "cA'").unwrap();
        t.select("P", "X", Selector::LexMax).unwrap();
        let text = t.to_json_string();
        let back = ConstructionTrace::from_json_str(&text).unwrap();
        assert_eq!(back.steps(), t.steps());
        assert_eq!(back.to_json_string(), text);
        assert!(t.replays_identically().unwrap());

        let tampered = text.replace("\"y\": \"(0 + 1*sqrt(3))\"", "\"y\": \"2\"");
        assert_ne!(tampered, text);
        assert_eq!(
            ConstructionTrace::from_json_str(&tampered).unwrap_err(),
            Error::ReplayMismatch("P".into())
        );
    }
}
