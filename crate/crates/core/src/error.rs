// Copyright 2026 the compass authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of a negative number")]
    NegativeSqrt,
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("line through two identical points")]
    DegenerateLine,
    #[error("circle through its own center")]
    DegenerateCircle,
    #[error("coincident lines intersect in infinitely many points")]
    CoincidentLines,
    #[error("concentric circles have no radical line")]
    ConcentricCircles,
    #[error("the two points coincide")]
    IdenticalPoints,

    #[error("no construction for n = {0}; supported: 3, 4, 5, 6, 10, 20 (see `constructible` for the general criterion)")]
    UnsupportedPolygon(u64),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("label {0:?} is already bound")]
    DuplicateLabel(String),
    #[error("label {label:?} is a {found}, expected a {expected}")]
    WrongObject {
        label: String,
        expected: &'static str,
        found: &'static str,
    },
    #[error("selector {selector} matched {matched} of the candidates for {label:?}, expected exactly one")]
    Selection {
        label: String,
        selector: String,
        matched: usize,
    },
    #[error("trace replay diverged at {0:?}")]
    ReplayMismatch(String),

    #[error("angle {0} is not on the grid 3*m/2^k degrees within (0, 90]")]
    OffGrid(String),
    #[error("tangent is undefined at 90 degrees")]
    TangentUndefined,
    #[error("n = {0} is too small, a polygon needs at least 3 sides")]
    TooFewSides(u64),
    #[error("{0} has no prime factor")]
    NoPrimeFactor(u64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
