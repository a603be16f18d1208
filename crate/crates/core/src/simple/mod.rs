//! Covers for simple polygons, where walls block sight too.
//!
//! The comb shows that `k` guards per spike are needed; [`comb_cover`] places
//! exactly that many. [`fisk_cover`] triangulates, 3-colors, and puts `k + 2`
//! guards on a small convex arc at every vertex of the smallest color class.
//! Both are checked by [`crate::sampling`], not certified.

mod comb;
mod fisk;
mod triangulate;

pub use comb::{comb_cover, comb_cover_unstaggered, make_comb, rays_stay_low, Comb};
pub use fisk::{
    arc_is_convex, cone_at, fisk_cover, fisk_cover_with, fisk_plan, FiskOptions, FiskPlan,
};
pub use triangulate::{smallest_class, three_color, triangulate, Triangulation};
