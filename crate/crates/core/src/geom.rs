// Copyright 2026 the compass authors
// SPDX-License-Identifier: Apache-2.0

//! Points, lines and circles over exact coordinates, and the three
//! intersections that make up straightedge-and-compass power.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactnum::Constructible;

#[derive(Clone, PartialEq, Eq)]
pub struct Point {
    pub x: Constructible,
    pub y: Constructible,
}

impl Point {
    pub fn new(x: Constructible, y: Constructible) -> Self {
        Point { x, y }
    }

    pub fn from_integers(x: i64, y: i64) -> Self {
        Point::new(x.into(), y.into())
    }

    pub fn origin() -> Self {
        Point::from_integers(0, 0)
    }

    pub fn dist_sq(&self, other: &Point) -> Constructible {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        &(&dx * &dx) + &(&dy * &dy)
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        Point::new(
            (&self.x + &other.x).scale(&half),
            (&self.y + &other.y).scale(&half),
        )
    }

    /// Lexicographic order on `(x, y)` by exact comparison.
    pub fn lex_cmp(&self, other: &Point) -> Ordering {
        self.x.cmp(&other.x).then_with(|| self.y.cmp(&other.y))
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Line through two distinct points, with coefficients of `a*x + b*y = c`
/// normalized so the first nonzero of `a`, `b` is 1.
#[derive(Clone, Debug)]
pub struct Line {
    p: Point,
    q: Point,
    a: Constructible,
    b: Constructible,
    c: Constructible,
}

impl Line {
    pub fn through(p: Point, q: Point) -> Result<Line> {
        if p == q {
            return Err(Error::DegenerateLine);
        }
        let a = &q.y - &p.y;
        let b = &p.x - &q.x;
        let c = &(&a * &p.x) + &(&b * &p.y);
        let (a, b, c) = normalize(a, b, c)?;
        Ok(Line { p, q, a, b, c })
    }

    /// The line `a*x + b*y = c`.
    pub fn from_coefficients(a: Constructible, b: Constructible, c: Constructible) -> Result<Line> {
        let (a, b, c) = normalize(a, b, c)?;
        let (p, q) = if b.signum() != 0 {
            let y0 = c.checked_div(&b)?;
            let y1 = (&c - &a).checked_div(&b)?;
            (
                Point::new(Constructible::zero(), y0),
                Point::new(Constructible::one(), y1),
            )
        } else {
            let x0 = c.checked_div(&a)?;
            (
                Point::new(x0.clone(), Constructible::zero()),
                Point::new(x0, Constructible::one()),
            )
        };
        Ok(Line { p, q, a, b, c })
    }

    pub fn points(&self) -> (&Point, &Point) {
        (&self.p, &self.q)
    }

    pub fn coefficients(&self) -> (&Constructible, &Constructible, &Constructible) {
        (&self.a, &self.b, &self.c)
    }

    /// `a*x + b*y - c`; zero exactly on the line.
    pub fn eval(&self, pt: &Point) -> Constructible {
        &(&(&self.a * &pt.x) + &(&self.b * &pt.y)) - &self.c
    }

    pub fn contains(&self, pt: &Point) -> bool {
        self.eval(pt).signum() == 0
    }

    /// Direction vector `(-b, a)`.
    pub fn direction(&self) -> (Constructible, Constructible) {
        (-&self.b, self.a.clone())
    }

    pub fn same_set(&self, other: &Line) -> bool {
        self.a == other.a && self.b == other.b && self.c == other.c
    }
}

fn normalize(
    a: Constructible,
    b: Constructible,
    c: Constructible,
) -> Result<(Constructible, Constructible, Constructible)> {
    let lead = if a.signum() != 0 {
        a.clone()
    } else if b.signum() != 0 {
        b.clone()
    } else {
        return Err(Error::DegenerateLine);
    };
    Ok((
        a.checked_div(&lead)?,
        b.checked_div(&lead)?,
        c.checked_div(&lead)?,
    ))
}

/// A compass setting: centered at `center`, passing through `through`.
#[derive(Clone, Debug)]
pub struct Circle {
    center: Point,
    through: Point,
    radius_sq: Constructible,
}

impl Circle {
    pub fn new(center: Point, through: Point) -> Result<Circle> {
        let radius_sq = center.dist_sq(&through);
        if radius_sq.signum() == 0 {
            return Err(Error::DegenerateCircle);
        }
        Ok(Circle {
            center,
            through,
            radius_sq,
        })
    }

    pub fn center(&self) -> &Point {
        &self.center
    }

    pub fn through(&self) -> &Point {
        &self.through
    }

    pub fn radius_sq(&self) -> &Constructible {
        &self.radius_sq
    }

    pub fn radius(&self) -> Constructible {
        self.radius_sq.sqrt().expect("radius_sq is positive")
    }

    pub fn contains(&self, pt: &Point) -> bool {
        (&self.center.dist_sq(pt) - &self.radius_sq).signum() == 0
    }
}

fn sorted(mut pts: Vec<Point>) -> Vec<Point> {
    pts.sort_by(Point::lex_cmp);
    pts
}

/// Unique crossing of two lines, `None` when parallel.
pub fn intersect_lines(l1: &Line, l2: &Line) -> Result<Option<Point>> {
    let det = &(&l1.a * &l2.b) - &(&l2.a * &l1.b);
    if det.signum() == 0 {
        if l1.same_set(l2) {
            return Err(Error::CoincidentLines);
        }
        return Ok(None);
    }
    let x = (&(&l1.c * &l2.b) - &(&l2.c * &l1.b)).checked_div(&det)?;
    let y = (&(&l1.a * &l2.c) - &(&l2.a * &l1.c)).checked_div(&det)?;
    Ok(Some(Point::new(x, y)))
}

/// Zero, one (tangent) or two points, sorted lexicographically.
pub fn intersect_line_circle(l: &Line, c: &Circle) -> Vec<Point> {
    let norm_sq = &(&l.a * &l.a) + &(&l.b * &l.b);
    // foot of the perpendicular from the center
    let offset = (-l.eval(&c.center))
        .checked_div(&norm_sq)
        .expect("line normal is nonzero");
    let foot = Point::new(
        &c.center.x + &(&offset * &l.a),
        &c.center.y + &(&offset * &l.b),
    );
    let h_sq = &c.radius_sq - &c.center.dist_sq(&foot);
    match h_sq.signum() {
        -1 => Vec::new(),
        0 => vec![foot],
        _ => {
            let t = h_sq
                .checked_div(&norm_sq)
                .and_then(|v| v.sqrt())
                .expect("positive quotient");
            let (dx, dy) = l.direction();
            let step_x = &t * &dx;
            let step_y = &t * &dy;
            sorted(vec![
                Point::new(&foot.x + &step_x, &foot.y + &step_y),
                Point::new(&foot.x - &step_x, &foot.y - &step_y),
            ])
        }
    }
}

/// The radical line of two non-concentric circles.
pub fn radical_line(c1: &Circle, c2: &Circle) -> Result<Line> {
    if c1.center == c2.center {
        return Err(Error::ConcentricCircles);
    }
    let two = BigRational::from_integer(BigInt::from(2));
    let a = (&c2.center.x - &c1.center.x).scale(&two);
    let b = (&c2.center.y - &c1.center.y).scale(&two);
    let origin = Point::origin();
    let c = &(&(&c2.center.dist_sq(&origin) - &c1.center.dist_sq(&origin)) - &c2.radius_sq)
        + &c1.radius_sq;
    Line::from_coefficients(a, b, c)
}

/// Circle-circle crossing via the radical line.
pub fn intersect_circles(c1: &Circle, c2: &Circle) -> Result<Vec<Point>> {
    let radical = radical_line(c1, c2)?;
    Ok(intersect_line_circle(&radical, c1))
}

/// The mediatrix of `pq`, drawn through the crossings of the circles
/// centered at each endpoint through the other.
pub fn perpendicular_bisector(p: &Point, q: &Point) -> Result<Line> {
    if p == q {
        return Err(Error::IdenticalPoints);
    }
    let cp = Circle::new(p.clone(), q.clone())?;
    let cq = Circle::new(q.clone(), p.clone())?;
    let mut pts = intersect_circles(&cp, &cq)?.into_iter();
    match (pts.next(), pts.next()) {
        (Some(u), Some(v)) => Line::through(u, v),
        _ => unreachable!("equal circles through each other's centers cross twice"),
    }
}
