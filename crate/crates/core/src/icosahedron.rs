// Copyright 2026 the compass authors
// SPDX-License-Identifier: Apache-2.0

//! The regular icosahedron as the corners of three perpendicular golden
//! rectangles.

use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::exactnum::Constructible;
use crate::report::Report;

#[derive(Clone, PartialEq, Eq)]
pub struct Point3 {
    pub x: Constructible,
    pub y: Constructible,
    pub z: Constructible,
}

impl Point3 {
    pub fn new(x: Constructible, y: Constructible, z: Constructible) -> Self {
        Point3 { x, y, z }
    }

    pub fn origin() -> Self {
        let z = Constructible::zero();
        Point3::new(z.clone(), z.clone(), z)
    }

    pub fn sub(&self, o: &Point3) -> Point3 {
        Point3::new(&self.x - &o.x, &self.y - &o.y, &self.z - &o.z)
    }

    pub fn dot(&self, o: &Point3) -> Constructible {
        &(&(&self.x * &o.x) + &(&self.y * &o.y)) + &(&self.z * &o.z)
    }

    pub fn cross(&self, o: &Point3) -> Point3 {
        Point3::new(
            &(&self.y * &o.z) - &(&self.z * &o.y),
            &(&self.z * &o.x) - &(&self.x * &o.z),
            &(&self.x * &o.y) - &(&self.y * &o.x),
        )
    }

    pub fn norm_sq(&self) -> Constructible {
        self.dot(self)
    }

    pub fn dist_sq(&self, o: &Point3) -> Constructible {
        self.sub(o).norm_sq()
    }
}

impl fmt::Debug for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// `(1 + sqrt 5) / 2`
pub fn phi() -> Constructible {
    let s5 = Constructible::from_integer(5).sqrt().expect("5 > 0");
    (&Constructible::one() + &s5).scale(&BigRational::new(BigInt::from(1), BigInt::from(2)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Plane {
    Yz,
    Zx,
    Xy,
}

impl Plane {
    pub fn normal(self) -> Point3 {
        let (o, i) = (Constructible::zero, Constructible::one);
        match self {
            Plane::Yz => Point3::new(i(), o(), o()),
            Plane::Zx => Point3::new(o(), i(), o()),
            Plane::Xy => Point3::new(o(), o(), i()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct GoldenRectangle3 {
    pub plane: Plane,
    /// Counterclockwise around the plane normal.
    pub corners: [Point3; 4],
}

impl GoldenRectangle3 {
    /// Short and long side lengths.
    pub fn sides(&self) -> (Constructible, Constructible) {
        let a = self.corners[0].dist_sq(&self.corners[1]).sqrt().expect("nonnegative");
        let b = self.corners[1].dist_sq(&self.corners[2]).sqrt().expect("nonnegative");
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }
}

/// Corners `(u, v)` run over `(1, phi)` with both signs, placed cyclically:
/// `(0, u, v)`, `(v, 0, u)`, `(u, v, 0)`.
pub fn golden_rectangles() -> [GoldenRectangle3; 3] {
    let phi = phi();
    let one = Constructible::one();
    let zero = Constructible::zero;
    let signs = [(1, 1), (-1, 1), (-1, -1), (1, -1)];
    let rect = |plane: Plane| {
        let corners = signs.map(|(su, sv)| {
            let u = if su > 0 { one.clone() } else { -&one };
            let v = if sv > 0 { phi.clone() } else { -&phi };
            match plane {
                Plane::Yz => Point3::new(zero(), u, v),
                Plane::Zx => Point3::new(v, zero(), u),
                Plane::Xy => Point3::new(u, v, zero()),
            }
        });
        GoldenRectangle3 { plane, corners }
    };
    [rect(Plane::Yz), rect(Plane::Zx), rect(Plane::Xy)]
}

#[derive(Debug, Clone)]
pub struct IcosaMesh {
    pub vertices: Vec<Point3>,
    pub edges: Vec<(usize, usize)>,
    /// Outward oriented.
    pub faces: Vec<[usize; 3]>,
}

impl IcosaMesh {
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| match (a == v, b == v) {
                (true, _) => Some(b),
                (_, true) => Some(a),
                _ => None,
            })
            .collect()
    }
}

/// Vertices from the rectangles in plane order, edges at the minimal
/// distance, faces as mutually adjacent triples.
pub fn build_icosahedron() -> IcosaMesh {
    let vertices: Vec<Point3> = golden_rectangles()
        .into_iter()
        .flat_map(|r| r.corners)
        .collect();
    let n = vertices.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let d: Vec<Constructible> = pairs.iter().map(|&(i, j)| vertices[i].dist_sq(&vertices[j])).collect();
    let min = d.iter().min().expect("at least one pair").clone();
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .zip(&d)
        .filter(|(_, dd)| **dd == min)
        .map(|(p, _)| *p)
        .collect();
    let adjacent = |a: usize, b: usize| edges.contains(&(a.min(b), a.max(b)));
    let mut faces = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if adjacent(i, j) && adjacent(j, k) && adjacent(i, k) {
                    let normal = vertices[j].sub(&vertices[i]).cross(&vertices[k].sub(&vertices[i]));
                    faces.push(if normal.dot(&vertices[i]).signum() > 0 {
                        [i, j, k]
                    } else {
                        [i, k, j]
                    });
                }
            }
        }
    }
    IcosaMesh {
        vertices,
        edges,
        faces,
    }
}

fn det3(m: [[&Constructible; 3]; 3]) -> Constructible {
    let minor = |a: &Constructible, b: &Constructible, c: &Constructible, d: &Constructible| &(a * d) - &(b * c);
    let t0 = m[0][0] * &minor(m[1][1], m[1][2], m[2][1], m[2][2]);
    let t1 = m[0][1] * &minor(m[1][0], m[1][2], m[2][0], m[2][2]);
    let t2 = m[0][2] * &minor(m[1][0], m[1][1], m[2][0], m[2][1]);
    &(&t0 - &t1) + &t2
}

/// The 4x4 determinant with rows `(x, y, z, 1)`, reduced by subtracting
/// the first row.
fn coplanarity(p: [&Point3; 4]) -> Constructible {
    let r: Vec<Point3> = p[1..].iter().map(|q| q.sub(p[0])).collect();
    det3([[&r[0].x, &r[0].y, &r[0].z], [&r[1].x, &r[1].y, &r[1].z], [&r[2].x, &r[2].y, &r[2].z]])
}

fn all_equal(values: &[Constructible]) -> bool {
    values.windows(2).all(|w| w[0] == w[1])
}

/// Exact checks on edges, faces and the pentagon of neighbors around
/// every vertex.
pub fn verify_icosahedron(m: &IcosaMesh) -> Report {
    let mut report = Report::new("icosahedron");
    let (v, e, f) = (m.vertices.len(), m.edges.len(), m.faces.len());
    report.record(
        "counts",
        (v, e, f) == (12, 30, 20),
        format!("V = {v}, E = {e}, F = {f}"),
    );
    report.record("euler characteristic", v + f == e + 2, format!("{v} - {e} + {f}"));
    let degrees: Vec<usize> = (0..v).map(|i| m.neighbors(i).len()).collect();
    report.record("degree 5", degrees.iter().all(|&d| d == 5), format!("{degrees:?}"));

    let lengths: Vec<Constructible> = m.edges.iter().map(|&(a, b)| m.vertices[a].dist_sq(&m.vertices[b])).collect();
    report.record("equal edges", all_equal(&lengths), "");
    let four = Constructible::from_integer(4);
    report.record("edge length 2", lengths.iter().all(|l| *l == four), "");

    let equilateral = m.faces.iter().all(|&[a, b, c]| {
        let p = &m.vertices;
        all_equal(&[p[a].dist_sq(&p[b]), p[b].dist_sq(&p[c]), p[c].dist_sq(&p[a])])
    });
    report.record("equilateral faces", equilateral, "");

    let outward = m.faces.iter().all(|&[a, b, c]| {
        let p = &m.vertices;
        p[b].sub(&p[a]).cross(&p[c].sub(&p[a])).dot(&p[a]).signum() > 0
    });
    report.record("outward faces", outward, "");

    let (mut coplanar, mut axial, mut pentagon, mut centroid) = (true, true, true, true);
    let golden_sq = phi().square();
    for i in 0..v {
        let apex = &m.vertices[i];
        let ring: Vec<&Point3> = m.neighbors(i).into_iter().map(|j| &m.vertices[j]).collect();
        if ring.len() != 5 {
            coplanar = false;
            axial = false;
            pentagon = false;
            centroid = false;
            continue;
        }
        coplanar &= ring[3..]
            .iter()
            .all(|q| vanishes(&coplanarity([ring[0], ring[1], ring[2], q])));

        // squared distance from the line through the origin and the apex
        let apex_sq = apex.norm_sq();
        let axis: Vec<Constructible> = ring
            .iter()
            .map(|q| {
                let t = q.dot(apex);
                &q.norm_sq() - &(&t * &t).checked_div(&apex_sq).unwrap_or_else(|_| Constructible::zero())
            })
            .collect();
        axial &= all_equal(&axis);

        let mut d: Vec<Constructible> = Vec::new();
        for a in 0..5 {
            for b in a + 1..5 {
                d.push(ring[a].dist_sq(ring[b]));
            }
        }
        let side = d.iter().min().expect("ten pairs").clone();
        let diag = d.iter().max().expect("ten pairs").clone();
        let sides = d.iter().filter(|x| **x == side).count();
        let diags = d.iter().filter(|x| **x == diag).count();
        pentagon &= sides == 5 && diags == 5 && diag == &golden_sq * &side;

        let fifth = BigRational::new(BigInt::from(1), BigInt::from(5));
        let sum = ring.iter().fold(Point3::origin(), |acc, q| {
            Point3::new(&acc.x + &q.x, &acc.y + &q.y, &acc.z + &q.z)
        });
        let c = Point3::new(sum.x.scale(&fifth), sum.y.scale(&fifth), sum.z.scale(&fifth));
        let radii: Vec<Constructible> = ring.iter().map(|q| q.dist_sq(&c)).collect();
        centroid &= all_equal(&radii);
    }
    report.record("neighbors coplanar", coplanar, "4x4 determinants vanish");
    report.record("neighbors equidistant from axis", axial, "");
    report.record("neighbors form a regular pentagon", pentagon, "diagonal / side = (1 + √5)/2");
    report.record("neighbors equidistant from centroid", centroid, "");
    report
}

/// Vertex lines then 1-based face lines, coordinates to `digits` places.
pub fn export_mesh(m: &IcosaMesh, digits: u32) -> String {
    let mut out = String::new();
    for p in &m.vertices {
        let _ = writeln!(out, "v {} {} {}", p.x.approx(digits), p.y.approx(digits), p.z.approx(digits));
    }
    for [a, b, c] in &m.faces {
        let _ = writeln!(out, "f {} {} {}", a + 1, b + 1, c + 1);
    }
    out
}

fn vanishes(x: &Constructible) -> bool {
    x.signum() == 0
}
