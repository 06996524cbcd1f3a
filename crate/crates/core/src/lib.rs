// Copyright 2026 the compass authors
// SPDX-License-Identifier: Apache-2.0

//! Exact straightedge-and-compass constructions.

pub mod cli;
pub mod construct;
pub mod constructibility;
pub mod error;
pub mod exactnum;
pub mod geom;
pub mod icosahedron;
pub mod render;
pub mod report;
pub mod trig;

pub use error::{Error, Result};
pub use exactnum::{arith, ArithOp, Constructible, Form};
