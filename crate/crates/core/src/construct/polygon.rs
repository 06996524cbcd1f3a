// Copyright 2026 the compass authors
// SPDX-License-Identifier: Apache-2.0

//! Regular polygons inscribed in the unit circle.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::exactnum::Constructible;
use crate::geom::{self, Circle, Point};
use crate::report::Report;
use crate::trig;

use super::trace::{ConstructionTrace, Object, Selector};

pub const SUPPORTED: [u64; 6] = [3, 4, 5, 6, 10, 20];

#[derive(Debug, Clone)]
pub struct Polygon {
    n: usize,
    vertices: Vec<Point>,
    center: Point,
}

impl Polygon {
    /// Orders `vertices` counterclockwise around `center`, starting from the
    /// first one at or after the positive x direction.
    pub fn new(center: Point, mut vertices: Vec<Point>) -> Result<Polygon> {
        if vertices.len() < 3 {
            return Err(Error::TooFewSides(vertices.len() as u64));
        }
        vertices.sort_by(|p, q| angle_cmp(&center, p, q));
        Ok(Polygon {
            n: vertices.len(),
            vertices,
            center,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn center(&self) -> &Point {
        &self.center
    }

    /// Length of the side `V0 V1`.
    pub fn side(&self) -> Result<Constructible> {
        self.vertices[0].dist_sq(&self.vertices[1]).sqrt()
    }

    /// Same vertices regardless of order.
    pub fn same_vertex_set(&self, other: &Polygon) -> bool {
        self.n == other.n
            && self.vertices.iter().all(|v| other.vertices.contains(v))
            && other.vertices.iter().all(|v| self.vertices.contains(v))
    }
}

fn half_plane(center: &Point, p: &Point) -> u8 {
    let dy = (&p.y - &center.y).signum();
    let dx = (&p.x - &center.x).signum();
    if dy > 0 || (dy == 0 && dx > 0) {
        0
    } else {
        1
    }
}

/// Counterclockwise angular order from the positive x direction.
fn angle_cmp(center: &Point, p: &Point, q: &Point) -> Ordering {
    half_plane(center, p).cmp(&half_plane(center, q)).then_with(|| {
        let (px, py) = (&p.x - &center.x, &p.y - &center.y);
        let (qx, qy) = (&q.x - &center.x, &q.y - &center.y);
        let cross = &(&px * &qy) - &(&py * &qx);
        0.cmp(&cross.signum())
    })
}

/// Trace builder with the compound moves used by every program.
struct Builder {
    t: ConstructionTrace,
}

impl Builder {
    /// Circle centered at `center` through `through`, reusing a drawn circle
    /// when one with the same center and radius already exists.
    fn circle(&mut self, center: &str, through: &str) -> Result<String> {
        let c = self.t.point(center)?.clone();
        let r2 = c.dist_sq(self.t.point(through)?);
        let existing = self.t.bindings().find_map(|(label, obj)| match obj {
            Object::Circle(k) if *k.center() == c && *k.radius_sq() == r2 => Some(label.to_owned()),
            _ => None,
        });
        if let Some(label) = existing {
            return Ok(label);
        }
        let label = format!("c({center},{through})");
        self.t.circle_through(&label, center, through)?;
        Ok(label)
    }

    fn meet(&mut self, first: &str, second: &str) -> Result<String> {
        let label = format!("{first}∩{second}");
        self.t.intersect(&label, first, second)?;
        Ok(label)
    }

    /// Mediatrix of `pq` drawn as the line through the crossings of the two
    /// circles. Returns the line label.
    fn mediatrix(&mut self, p: &str, q: &str, line: &str, ends: (&str, &str)) -> Result<()> {
        let cp = self.circle(p, q)?;
        let cq = self.circle(q, p)?;
        let set = self.meet(&cp, &cq)?;
        self.t.select(ends.0, &set, Selector::LexMin)?;
        self.t.select(ends.1, &set, Selector::LexMax)?;
        self.t.line_through(line, ends.0, ends.1)?;
        Ok(())
    }

    fn default_mediatrix(&mut self, p: &str, q: &str) -> Result<String> {
        let line = format!("m({p},{q})");
        let lo = format!("{line}-");
        let hi = format!("{line}+");
        self.mediatrix(p, q, &line, (&lo, &hi))?;
        Ok(line)
    }

    /// Common start: the diameter AA', its mediatrix through the center O
    /// and the unit circle.
    fn prelude() -> Result<Builder> {
        let mut b = Builder {
            t: ConstructionTrace::new(),
        };
        b.t.place_point("A", 1.into(), 0.into())?;
        b.t.place_point("A'", (-1).into(), 0.into())?;
        b.t.line_through("AA'", "A", "A'")?;
        b.mediatrix("A", "A'", "m", ("m-", "m+"))?;
        let set = b.meet("m", "AA'")?;
        b.t.select("O", &set, Selector::LexMin)?;
        b.t.circle_through("Γ", "O", "A")?;
        Ok(b)
    }

    /// The chord perpendicular to `O apex` at half the distance of `d`,
    /// then the second crossing of the unit circle from each of its ends.
    /// Produces the four pentagon vertices next to `apex`.
    fn pentagon_arm(&mut self, apex: &str, d: &str, names: [&str; 4], near: Selector, far: Selector) -> Result<()> {
        let [f, f2, g, g2] = names;
        let med = self.default_mediatrix("O", d)?;
        let set = self.meet(&med, "Γ")?;
        self.t.select(f, &set, near)?;
        self.t.select(f2, &set, far)?;
        for (from, to) in [(f, g), (f2, g2)] {
            let c = self.circle(from, apex)?;
            let set = self.meet("Γ", &c)?;
            self.t.select(to, &set, Selector::DistinctFrom(apex.to_owned()))?;
        }
        Ok(())
    }

    /// B'' on the mediatrix, B halfway to it, C on the far side with
    /// OC = AB - 1/2, and the circle of radius OC about O.
    fn pentagon_core(&mut self) -> Result<()> {
        let set = self.meet("m", "Γ")?;
        self.t.select("B''", &set, Selector::PositiveY)?;
        let half = self.default_mediatrix("O", "B''")?;
        let set = self.meet(&half, "m")?;
        self.t.select("B", &set, Selector::LexMin)?;
        let cb = self.circle("B", "A")?;
        let set = self.meet("m", &cb)?;
        self.t.select("C", &set, Selector::NegativeY)?;
        self.t.select("C'", &set, Selector::PositiveY)?;
        let coc = self.circle("O", "C")?;
        let set = self.meet("AA'", &coc)?;
        self.t.select("D", &set, Selector::OnSegment("O".into(), "A".into()))?;
        Ok(())
    }

    fn points(&self, labels: &[&str]) -> Result<Vec<Point>> {
        labels.iter().map(|l| self.t.point(l).cloned()).collect()
    }
}

/// Builds the regular n-gon with its full construction trace.
pub fn construct_polygon(n: u64) -> Result<(Polygon, ConstructionTrace)> {
    let mut b = Builder::prelude()?;
    let labels: Vec<&str> = match n {
        3 | 6 => {
            b.mediatrix("O", "A'", "BB'", ("B'", "B"))?;
            let set = b.meet("BB'", "AA'")?;
            b.t.select("C", &set, Selector::LexMin)?;
            if n == 3 {
                vec!["A", "B", "B'"]
            } else {
                b.mediatrix("O", "A", "EE'", ("E'", "E"))?;
                vec!["A", "E", "B", "A'", "B'", "E'"]
            }
        }
        4 => {
            let set = b.meet("m", "Γ")?;
            b.t.select("B", &set, Selector::PositiveY)?;
            b.t.select("B'", &set, Selector::NegativeY)?;
            vec!["A", "B", "A'", "B'"]
        }
        5 | 10 | 20 => {
            b.pentagon_core()?;
            let (up, down) = (Selector::PositiveY, Selector::NegativeY);
            b.pentagon_arm("A", "D", ["F", "F'", "G", "G'"], up.clone(), down.clone())?;
            let mut v = vec!["A", "F", "G", "G'", "F'"];
            if n >= 10 {
                b.t.select("D'", "AA'∩c(O,C)", Selector::OnSegment("O".into(), "A'".into()))?;
                b.pentagon_arm("A'", "D'", ["H", "H'", "K", "K'"], up, down)?;
                v.extend(["A'", "H", "K", "K'", "H'"]);
            }
            if n == 20 {
                b.t.select("B'''", "m∩Γ", Selector::NegativeY)?;
                let set = b.meet("m", "c(O,C)")?;
                b.t.select("D''", &set, Selector::PositiveY)?;
                let (right, left) = (Selector::PositiveX, Selector::NegativeX);
                b.pentagon_arm("B''", "D''", ["U", "U'", "W", "W'"], right.clone(), left.clone())?;
                b.pentagon_arm("B'''", "C", ["R", "R'", "T", "T'"], right, left)?;
                v.extend(["B''", "U", "U'", "W", "W'", "B'''", "R", "R'", "T", "T'"]);
            }
            v
        }
        _ => return Err(Error::UnsupportedPolygon(n)),
    };
    let vertices = b.points(&labels)?;
    let center = b.t.point("O")?.clone();
    Ok((Polygon::new(center, vertices)?, b.t))
}

/// Adds the midpoint of every arc, found where each side's mediatrix
/// crosses the circumcircle.
pub fn double_polygon(p: &Polygon) -> Result<Polygon> {
    let c = p.center();
    let circle = Circle::new(c.clone(), p.vertices()[0].clone())?;
    let mut vertices = p.vertices().to_vec();
    for (i, v) in p.vertices().iter().enumerate() {
        let w = &p.vertices()[(i + 1) % p.n()];
        let bisector = geom::perpendicular_bisector(v, w)?;
        let (sx, sy) = (&(&v.x + &w.x) - &c.x.scale2(), &(&v.y + &w.y) - &c.y.scale2());
        let on_arc = geom::intersect_line_circle(&bisector, &circle)
            .into_iter()
            .find(|q| {
                let dot = &(&(&q.x - &c.x) * &sx) + &(&(&q.y - &c.y) * &sy);
                dot.signum() > 0
            })
            .ok_or_else(|| Error::InvalidArgument("side is a diameter".into()))?;
        vertices.push(on_arc);
    }
    Polygon::new(c.clone(), vertices)
}

trait Twice {
    fn scale2(&self) -> Constructible;
}

impl Twice for Constructible {
    fn scale2(&self) -> Constructible {
        self + self
    }
}

/// Exact regularity checks on a polygon inscribed in the unit circle.
pub fn verify_regular(p: &Polygon) -> Report {
    let mut report = Report::new(format!("regular {}-gon", p.n()));
    let one = Constructible::one();
    let vs = p.vertices();

    let off: Vec<usize> = (0..vs.len()).filter(|&i| vs[i].dist_sq(p.center()) != one).collect();
    report.record(
        "radius",
        off.is_empty(),
        if off.is_empty() {
            "every vertex at distance 1 from the center".to_owned()
        } else {
            format!("vertices off the unit circle: {off:?}")
        },
    );

    let mut distinct = true;
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            distinct &= vs[i] != vs[j];
        }
    }
    report.record("distinct vertices", distinct, "");

    let chords: Vec<Constructible> = (0..vs.len()).map(|i| vs[i].dist_sq(&vs[(i + 1) % vs.len()])).collect();
    let uneven: Vec<usize> = (1..chords.len()).filter(|&i| chords[i] != chords[0]).collect();
    report.record(
        "equal chords",
        uneven.is_empty(),
        if uneven.is_empty() {
            format!("chord^2 = {}", chords[0].pretty())
        } else {
            format!("chords differing from the first: {uneven:?}")
        },
    );

    let name = "chord = 2 sin(180°/n)";
    match trig::side_length(p.n() as u64) {
        Ok(side) => {
            let ok = chords[0] == side.square();
            report.record(name, ok, format!("2 sin(180°/{}) = {}", p.n(), side.pretty()));
        }
        Err(_) => report.skip(name, format!("180°/{} is off the angle grid", p.n())),
    }
    report
}
