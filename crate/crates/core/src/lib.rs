//! Guard placement and exact verification for galleries where guards block
//! each other's view.
//!
//! A point is seen by a guard when the open segment between them contains no
//! other guard. The depth of a placement is the least number of guards that
//! see any point of the region. [`darkness`] certifies depth exactly for
//! convex polygons and wedges, [`convex`] builds placements with optimal
//! guard counts, [`simple`] builds covers for simple polygons, and
//! [`sampling`] checks those by sampling.

// Errors carry rational witness points; boxing them would only move the cost.
#![allow(clippy::result_large_err, clippy::large_enum_variant)]

pub mod error;
pub mod geom;

pub use error::{Error, Result};
pub mod convex;
pub mod darkness;
pub mod fixtures;
pub mod io;
pub mod sampling;
pub mod simple;
pub mod svg;
