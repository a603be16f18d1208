use num_traits::{Signed, Zero};

use super::{Point2, Rat, Vector2};
use crate::error::{Error, Result};

/// Sign of the turn a -> b -> c.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }

    pub(crate) fn of(value: &Rat) -> Self {
        if value.is_zero() {
            Orientation::Collinear
        } else if value.is_positive() {
            Orientation::CounterClockwise
        } else {
            Orientation::Clockwise
        }
    }
}

/// Twice the signed area of triangle abc.
pub fn cross3(a: &Point2, b: &Point2, c: &Point2) -> Rat {
    (b - a).cross(&(c - a))
}

pub fn orientation(a: &Point2, b: &Point2, c: &Point2) -> Orientation {
    Orientation::of(&cross3(a, b, c))
}

/// True if `p` lies on the closed segment ab.
pub fn on_segment(a: &Point2, b: &Point2, p: &Point2) -> bool {
    orientation(a, b, p) == Orientation::Collinear && between_collinear(a, b, p, true)
}

/// For collinear a, b, p: is p between a and b. `closed` includes the endpoints.
pub(crate) fn between_collinear(a: &Point2, b: &Point2, p: &Point2, closed: bool) -> bool {
    let d = (p - a).dot(&(p - b));
    if closed {
        !d.is_positive()
    } else {
        d.is_negative()
    }
}

/// An infinite line `origin + t * direction`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    origin: Point2,
    direction: Vector2,
}

impl Line {
    pub fn through(p: &Point2, q: &Point2) -> Result<Line> {
        Line::new(p.clone(), q - p)
    }

    pub fn new(origin: Point2, direction: Vector2) -> Result<Line> {
        if direction.is_zero() {
            return Err(Error::DegenerateLine);
        }
        Ok(Line { origin, direction })
    }

    pub fn origin(&self) -> &Point2 {
        &self.origin
    }

    pub fn direction(&self) -> &Vector2 {
        &self.direction
    }

    pub fn point_at(&self, t: &Rat) -> Point2 {
        &self.origin + &self.direction.scale(t)
    }

    /// Signed offset of `p`: positive to the left of the direction.
    pub fn side_value(&self, p: &Point2) -> Rat {
        self.direction.cross(&(p - &self.origin))
    }

    pub fn contains(&self, p: &Point2) -> bool {
        self.side_value(p).is_zero()
    }

    /// Parameter of a point known to lie on the line.
    pub fn param_of(&self, p: &Point2) -> Rat {
        if !self.direction.x.is_zero() {
            (&p.x - &self.origin.x) / &self.direction.x
        } else {
            (&p.y - &self.origin.y) / &self.direction.y
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineIntersection {
    Point(Point2),
    Parallel,
    Coincident,
}

pub fn line_intersection(l1: &Line, l2: &Line) -> LineIntersection {
    let denom = l1.direction.cross(&l2.direction);
    if denom.is_zero() {
        return if l2.contains(&l1.origin) {
            LineIntersection::Coincident
        } else {
            LineIntersection::Parallel
        };
    }
    let t = (&l2.origin - &l1.origin).cross(&l2.direction) / denom;
    LineIntersection::Point(l1.point_at(&t))
}

/// Intersection point of lines ab and cd, if they cross in a single point.
pub fn intersect_lines(a: &Point2, b: &Point2, c: &Point2, d: &Point2) -> Option<Point2> {
    let l1 = Line::through(a, b).ok()?;
    let l2 = Line::through(c, d).ok()?;
    match line_intersection(&l1, &l2) {
        LineIntersection::Point(p) => Some(p),
        _ => None,
    }
}
