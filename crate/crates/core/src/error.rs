use crate::geom::Point2;

/// Errors reported by region constructors, placers and verifiers.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("repeated vertex {0}")]
    RepeatedVertex(Point2),
    #[error("polygon is not strictly convex and counterclockwise at vertex {0}")]
    NotConvex(usize),
    #[error("polygon boundary self-intersects (edges {0} and {1})")]
    SelfIntersecting(usize, usize),
    #[error("polygon is not counterclockwise")]
    Clockwise,
    #[error("wedge directions must be nonzero and not parallel")]
    DegenerateWedge,
    #[error("line needs two distinct points")]
    DegenerateLine,
    #[error("all points are collinear; hull is the segment {from} - {to}")]
    DegenerateHull { from: Point2, to: Point2 },
    #[error("guard {0} appears twice")]
    CoLocatedGuards(Point2),
    #[error("guard {0} lies outside the region")]
    GuardOutsideRegion(Point2),
    #[error("point {0} lies outside the region")]
    PointOutsideRegion(Point2),
    #[error("guard set is empty")]
    NoGuards,
    #[error("region has {available} vertices, cannot place {requested} vertex guards")]
    NotEnoughVertices { requested: usize, available: usize },
    #[error("depth must be at least 1")]
    ZeroDepth,
    #[error("halfplane intersection is unbounded")]
    Unbounded,
    #[error("halfplane intersection has empty interior")]
    EmptyIntersection,
    #[error("triangulation failed: {0}")]
    Triangulation(String),
    #[error("construction failed: {reason}")]
    ConstructionFailed {
        reason: String,
        witness: Option<Point2>,
    },
    #[error("unsupported verification mode: {0}")]
    UnsupportedMode(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable snake_case name for machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::TooFewVertices(_) => "too_few_vertices",
            Error::RepeatedVertex(_) => "repeated_vertex",
            Error::NotConvex(_) => "not_convex",
            Error::SelfIntersecting(..) => "self_intersecting",
            Error::Clockwise => "clockwise",
            Error::DegenerateWedge => "degenerate_wedge",
            Error::DegenerateLine => "degenerate_line",
            Error::DegenerateHull { .. } => "degenerate_hull",
            Error::CoLocatedGuards(_) => "co_located_guards",
            Error::GuardOutsideRegion(_) => "guard_outside_region",
            Error::PointOutsideRegion(_) => "point_outside_region",
            Error::NoGuards => "no_guards",
            Error::NotEnoughVertices { .. } => "not_enough_vertices",
            Error::ZeroDepth => "zero_depth",
            Error::Unbounded => "unbounded",
            Error::EmptyIntersection => "empty_intersection",
            Error::Triangulation(_) => "triangulation",
            Error::ConstructionFailed { .. } => "construction_failed",
            Error::UnsupportedMode(_) => "unsupported_mode",
            Error::InvalidInput(_) => "invalid_input",
        }
    }
}
