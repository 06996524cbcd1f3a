// Copyright 2026 the compass authors
// SPDX-License-Identifier: Apache-2.0

//! Straightedge-and-compass programs for regular polygons.

mod polygon;
mod trace;

pub use polygon::{construct_polygon, double_polygon, verify_regular, Polygon, SUPPORTED};
pub use trace::{ConstructionStep, ConstructionTrace, Object, Selector, StepKind};
