// Copyright 2026 the compass authors
// SPDX-License-Identifier: Apache-2.0

//! The `compass` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::constructibility::{gauss_constructible, smallest_prime_factor};
use crate::construct::{construct_polygon, double_polygon, verify_regular, SUPPORTED};
use crate::error::Error;
use crate::exactnum::Constructible;
use crate::icosahedron::{build_icosahedron, export_mesh, verify_icosahedron};
use crate::render::{render_svg, RenderConfig};
use crate::report::Report;
use crate::trig::{exact_cos, exact_sin, exact_sin_cos, exact_tan, side_length, ExactAngle};

#[derive(Debug, Parser)]
#[command(name = "compass", version, about = "Exact straightedge-and-compass constructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Construct a regular polygon and report its exact vertices.
    Construct {
        /// Number of sides: 3, 4, 5, 6, 10 or 20.
        n: u64,
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Print the sine and cosine tables of 30/45/60 and 18/36/72 degrees.
    Table,
    /// Exact sine, cosine and tangent of an angle on the 3*m/2^k grid.
    Trig {
        /// Degrees, e.g. 36, 7.5 or 15/2.
        angle: String,
    },
    /// Gauss-Wantzel verdict for the regular n-gon.
    Constructible { n: u64 },
    /// Build and verify the icosahedron from three golden rectangles.
    Icosahedron {
        #[arg(long, value_name = "PATH")]
        obj: Option<PathBuf>,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        digits: u32,
    },
    /// Run every exact check and summarize.
    Verify,
}

enum Failure {
    Domain(String),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure::Domain(format!("cannot write {}: {e}", path.display()))
}

/// Runs the CLI and returns the exit status: 0 on success, 1 on domain
/// errors or failed checks, 2 on usage errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                return 2;
            }
            let _ = write!(out, "{text}");
            return 0;
        }
    };
    let result = match cli.command {
        Command::Construct { n, svg, json } => construct(n, svg.as_deref(), json.as_deref(), out),
        Command::Table => table(out),
        Command::Trig { angle } => trig(&angle, out),
        Command::Constructible { n } => constructible(n, out),
        Command::Icosahedron { obj, digits } => icosahedron(obj.as_deref(), digits, out),
        Command::Verify => verify(out),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Checks) => 1,
    }
}

fn point_text(x: &Constructible, y: &Constructible) -> String {
    format!("({}, {}) ≈ ({}, {})", x.pretty(), y.pretty(), x.approx(6), y.approx(6))
}

fn construct(n: u64, svg: Option<&Path>, json: Option<&Path>, out: &mut dyn Write) -> Result<(), Failure> {
    let (polygon, trace) = construct_polygon(n)?;
    let side = polygon.side()?;
    let _ = writeln!(out, "regular {n}-gon, {} construction steps", trace.steps().len());
    let _ = writeln!(out, "side = {} ≈ {}", side.pretty(), side.approx(6));
    for (i, v) in polygon.vertices().iter().enumerate() {
        let _ = writeln!(out, "V{i} = {}", point_text(&v.x, &v.y));
    }
    let _ = write!(out, "{}", verify_regular(&polygon));
    if let Some(path) = svg {
        let text = render_svg(&trace, &RenderConfig::default())?;
        std::fs::write(path, text).map_err(|e| io_failure(path, e))?;
    }
    if let Some(path) = json {
        std::fs::write(path, trace.to_json_string()).map_err(|e| io_failure(path, e))?;
    }
    Ok(())
}

fn print_grid(rows: &[Vec<String>], out: &mut dyn Write) {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s}{}", " ".repeat(w - s.chars().count())))
            .collect();
        let _ = writeln!(out, "{}", cells.join(" | ").trim_end());
    }
}

fn table(out: &mut dyn Write) -> Result<(), Failure> {
    for (i, group) in [[30, 45, 60], [18, 36, 72]].iter().enumerate() {
        if i > 0 {
            let _ = writeln!(out);
        }
        let angles: Vec<ExactAngle> = group.iter().map(|&d| ExactAngle::degrees(d)).collect::<Result<_, _>>()?;
        let mut rows = vec![std::iter::once("θ".to_owned()).chain(group.iter().map(|d| format!("{d}°"))).collect()];
        for (name, f) in [("sin θ", exact_sin as fn(ExactAngle) -> Constructible), ("cos θ", exact_cos)] {
            let values: Vec<Constructible> = angles.iter().map(|&a| f(a)).collect();
            rows.push(std::iter::once(name.to_owned()).chain(values.iter().map(|v| v.pretty())).collect());
            rows.push(std::iter::once(String::new()).chain(values.iter().map(|v| v.approx(6))).collect());
        }
        print_grid(&rows, out);
    }
    Ok(())
}

fn trig(angle: &str, out: &mut dyn Write) -> Result<(), Failure> {
    let a: ExactAngle = angle.parse()?;
    let (s, c) = exact_sin_cos(a);
    let _ = writeln!(out, "θ = {a}°");
    let _ = writeln!(out, "sin = {} ≈ {}", s.pretty(), s.approx(10));
    let _ = writeln!(out, "cos = {} ≈ {}", c.pretty(), c.approx(10));
    match exact_tan(a) {
        Ok(t) => {
            let _ = writeln!(out, "tan = {} ≈ {}", t.pretty(), t.approx(10));
        }
        Err(_) => {
            let _ = writeln!(out, "tan undefined");
        }
    }
    Ok(())
}

fn constructible(n: u64, out: &mut dyn Write) -> Result<(), Failure> {
    let verdict = gauss_constructible(n)?;
    let _ = writeln!(out, "{verdict}");
    Ok(())
}

fn icosahedron(obj: Option<&Path>, digits: u32, out: &mut dyn Write) -> Result<(), Failure> {
    let mesh = build_icosahedron();
    let report = verify_icosahedron(&mesh);
    let _ = write!(out, "{report}");
    if let Some(path) = obj {
        std::fs::write(path, export_mesh(&mesh, digits)).map_err(|e| io_failure(path, e))?;
    }
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn verify(out: &mut dyn Write) -> Result<(), Failure> {
    let report = verify_all();
    let _ = write!(out, "{report}");
    let failed = report.failures().count();
    let _ = writeln!(out, "{} checks, {failed} failed", report.checks.len());
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn sqrt_of(n: i64) -> Constructible {
    Constructible::from_integer(n).sqrt().expect("positive")
}

fn over(x: Constructible, d: i64) -> Constructible {
    x.checked_div(&Constructible::from_integer(d)).expect("nonzero")
}

/// The twelve table entries as printed closed forms.
pub fn paper_table() -> Vec<(u64, Constructible, Constructible)> {
    let s5 = sqrt_of(5);
    let two_s5 = &s5 + &s5;
    let inner_minus = (&Constructible::from_integer(10) - &two_s5).sqrt().expect("positive");
    let inner_plus = (&Constructible::from_integer(10) + &two_s5).sqrt().expect("positive");
    let one = Constructible::one();
    vec![
        (30, over(one.clone(), 2), over(sqrt_of(3), 2)),
        (45, over(sqrt_of(2), 2), over(sqrt_of(2), 2)),
        (60, over(sqrt_of(3), 2), over(one.clone(), 2)),
        (18, over(&s5 - &one, 4), over(inner_plus.clone(), 4)),
        (36, over(inner_minus, 4), over(&s5 + &one, 4)),
        (72, over(inner_plus, 4), over(&s5 - &one, 4)),
    ]
}

/// Every exact invariant of the library in one report.
pub fn verify_all() -> Report {
    let mut r = Report::new("exact invariant suite");

    let table_ok = paper_table().into_iter().all(|(d, s, c)| {
        let (es, ec) = exact_sin_cos(ExactAngle::degrees(d).expect("grid"));
        es == s && ec == c
    });
    r.record("trig tables", table_ok, "12 entries");

    let one = Constructible::one();
    let identity = ExactAngle::multiples_of_three().all(|a| {
        let (s, c) = exact_sin_cos(a);
        &s.square() + &c.square() == one && s.signum() > 0
    });
    r.record("sin² + cos² = 1 on multiples of 3°", identity, "");

    let mut polygons = Vec::new();
    for n in SUPPORTED {
        match construct_polygon(n) {
            Ok((p, t)) => {
                let rep = verify_regular(&p);
                let side_ok = side_length(n).map(|s| p.side().map(|x| x == s).unwrap_or(false)).unwrap_or(false);
                r.record(format!("℘{n} regular"), rep.all_passed() && side_ok, format!("side {}", side_length(n).map(|s| s.pretty()).unwrap_or_default()));
                let pure = t.literal_points() == ["A", "A'"];
                let replay = t.replays_identically().unwrap_or(false);
                r.record(format!("℘{n} trace"), pure && replay, "replays exactly from the seeds A, A'");
                polygons.push((n, p));
            }
            Err(e) => r.record(format!("℘{n} regular"), false, e.to_string()),
        }
    }
    let find = |n| polygons.iter().find(|(m, _)| *m == n).map(|(_, p)| p);
    let doubled = find(5)
        .and_then(|p5| double_polygon(p5).ok())
        .and_then(|p10| double_polygon(&p10).ok());
    r.record(
        "double(double(℘5)) = ℘20",
        matches!((doubled, find(20)), (Some(d), Some(p20)) if d.same_vertex_set(p20)),
        "",
    );

    let gauss_ok = SUPPORTED
        .iter()
        .all(|&n| gauss_constructible(n).map(|v| v.constructible).unwrap_or(false));
    r.record("supported polygons pass the Gauss criterion", gauss_ok, "");
    let refusals = gauss_constructible(7).map(|v| !v.constructible).unwrap_or(false)
        && gauss_constructible(9).map(|v| !v.constructible).unwrap_or(false);
    r.record("℘7 and ℘9 refused", refusals, "");
    r.record(
        "2^32 + 1 has the factor 641",
        smallest_prime_factor((1 << 32) + 1).ok() == Some(641),
        "",
    );

    let ico = verify_icosahedron(&build_icosahedron());
    r.record("icosahedron", ico.all_passed(), format!("{} checks", ico.checks.len()));
    r
}
