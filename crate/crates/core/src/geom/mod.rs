//! Exact rational plane geometry.
//!
//! Every predicate here is decided with exact arithmetic; nothing rounds.

mod affine;
mod halfplane;
pub mod hom;
mod hull;
mod line;
mod point;
mod region;
mod simple;

/// Exact rational scalar.
pub type Rat = num_rational::BigRational;

pub use affine::Affine;
pub use halfplane::{
    clip_convex, clip_polygon, floor_int, halfplane_intersection, simple_interior_point,
    simplest_dyadic_between, HalfplaneIntersection,
};
pub use hull::{convex_hull, ConvexHull, HullClass};
pub(crate) use line::between_collinear;
pub use line::{
    cross3, intersect_lines, line_intersection, on_segment, orientation, Line, LineIntersection,
    Orientation,
};
pub use point::{int, rat, Point2, Vector2};
pub use region::{
    clip_ray_halfplanes, clip_ray_lines, halfplane_lines, signed_area2, triangle_area2,
    vertex_average, ContainMode, ConvexPolygon, ConvexRegion, Halfplane, RayClip, Wedge,
};
pub use simple::{crosses_properly, segments_touch, SimplePolygon};
