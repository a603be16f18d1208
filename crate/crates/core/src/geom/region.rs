use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::hom::Hom3;
use super::{cross3, int, on_segment, orientation, rat, Orientation, Point2, Rat, Vector2};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContainMode {
    /// Boundary counts as inside.
    Closed,
    /// Strict interior only.
    Open,
}

/// Closed halfplane to the left of the directed line through `point` along `direction`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Halfplane {
    pub point: Point2,
    pub direction: Vector2,
}

impl Halfplane {
    pub fn new(point: Point2, direction: Vector2) -> Self {
        Halfplane { point, direction }
    }

    /// Left of the directed line a -> b.
    pub fn left_of(a: &Point2, b: &Point2) -> Self {
        Halfplane::new(a.clone(), b - a)
    }

    /// The side of line ab that strictly contains `reference`; `None` if it is on the line.
    pub fn containing(a: &Point2, b: &Point2, reference: &Point2) -> Option<Self> {
        match orientation(a, b, reference) {
            Orientation::CounterClockwise => Some(Halfplane::left_of(a, b)),
            Orientation::Clockwise => Some(Halfplane::left_of(b, a)),
            Orientation::Collinear => None,
        }
    }

    pub fn value(&self, p: &Point2) -> Rat {
        self.direction.cross(&(p - &self.point))
    }

    pub fn contains(&self, p: &Point2, mode: ContainMode) -> bool {
        let v = self.value(p);
        match mode {
            ContainMode::Closed => !v.is_negative(),
            ContainMode::Open => v.is_positive(),
        }
    }

    pub fn flipped(&self) -> Halfplane {
        Halfplane::new(self.point.clone(), -&self.direction)
    }
}

/// Parameter range of a ray `origin + t * dir`, `t >= 0`, inside a region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RayClip {
    Empty,
    Segment { lo: Rat, hi: Rat },
    Ray { lo: Rat },
}

/// Clip a ray against closed halfplanes.
pub fn clip_ray_halfplanes(halfplanes: &[Halfplane], origin: &Point2, dir: &Vector2) -> RayClip {
    let mut lo = int(0);
    let mut hi: Option<Rat> = None;
    for h in halfplanes {
        let f0 = h.value(origin);
        let f1 = h.direction.cross(dir);
        if f1.is_zero() {
            if f0.is_negative() {
                return RayClip::Empty;
            }
            continue;
        }
        let t = -f0 / &f1;
        if f1.is_positive() {
            if t > lo {
                lo = t;
            }
        } else if hi.as_ref().is_none_or(|h| &t < h) {
            hi = Some(t);
        }
    }
    match hi {
        None => RayClip::Ray { lo },
        Some(hi) if hi >= lo => RayClip::Segment { lo, hi },
        Some(_) => RayClip::Empty,
    }
}

/// Halfplanes as homogeneous lines, positive on finite points strictly inside.
pub fn halfplane_lines(halfplanes: &[Halfplane]) -> Vec<Hom3> {
    halfplanes
        .iter()
        .map(|h| Hom3::point(&h.point).cross(&Hom3::point(&(&h.point + &h.direction))))
        .collect()
}

/// [`clip_ray_halfplanes`] with the halfplanes given by [`halfplane_lines`];
/// compares parameters in integers and builds only the winning rationals.
pub fn clip_ray_lines(lines: &[Hom3], origin: &Point2, dir: &Vector2) -> RayClip {
    let p = Hom3::point(origin);
    let d = Hom3::direction(dir);
    // Along the ray, a line's value is f0 / w + u * f1 with u >= 0 scaling `d`;
    // it vanishes at u = -f0 / (w f1). Fractions carry positive denominators.
    let mut lo: Option<(BigInt, BigInt)> = None;
    let mut hi: Option<(BigInt, BigInt)> = None;
    let less = |a: &(BigInt, BigInt), b: &(BigInt, BigInt)| &a.0 * &b.1 < &b.0 * &a.1;
    for l in lines {
        let f0 = l.dot(&p);
        let f1 = l.dot(&d);
        if f1.is_zero() {
            if f0.is_negative() {
                return RayClip::Empty;
            }
            continue;
        }
        let q = if f1.is_positive() {
            (-f0, f1.clone())
        } else {
            (f0, -f1.clone())
        };
        if f1.is_positive() {
            if lo.as_ref().is_none_or(|c| less(c, &q)) {
                lo = Some(q);
            }
        } else if hi.as_ref().is_none_or(|c| less(&q, c)) {
            hi = Some(q);
        }
    }
    let [dx, dy, _] = d.components();
    let w = &p.components()[2];
    // dir = d / c, so t = u * c with u = key / w.
    let c = if dir.x.is_zero() {
        Rat::from_integer(dy.clone()) / &dir.y
    } else {
        Rat::from_integer(dx.clone()) / &dir.x
    };
    let to_t = |(n, m): (BigInt, BigInt)| Rat::new(n, m * w) * &c;
    let lo = match lo {
        Some(q) if q.0.is_positive() => to_t(q),
        _ => int(0),
    };
    match hi {
        None => RayClip::Ray { lo },
        Some(q) => {
            let hi = to_t(q);
            if hi >= lo {
                RayClip::Segment { lo, hi }
            } else {
                RayClip::Empty
            }
        }
    }
}

/// Strictly convex polygon, vertices counterclockwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexPolygon {
    vertices: Vec<Point2>,
}

impl ConvexPolygon {
    pub fn new(vertices: Vec<Point2>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        for i in 0..n {
            for j in i + 1..n {
                if vertices[i] == vertices[j] {
                    return Err(Error::RepeatedVertex(vertices[i].clone()));
                }
            }
        }
        // Every vertex strictly left of every edge it is not on: strict convexity,
        // counterclockwise, and winding number one.
        for i in 0..n {
            let a = &vertices[i];
            let b = &vertices[(i + 1) % n];
            for (j, v) in vertices.iter().enumerate() {
                if j == i || j == (i + 1) % n {
                    continue;
                }
                if orientation(a, b, v) != Orientation::CounterClockwise {
                    return Err(Error::NotConvex((i + 1) % n));
                }
            }
        }
        Ok(ConvexPolygon { vertices })
    }

    /// Accepts either orientation.
    pub fn normalized(mut vertices: Vec<Point2>) -> Result<Self> {
        if vertices.len() >= 3 && signed_area2(&vertices).is_negative() {
            vertices.reverse();
        }
        ConvexPolygon::new(vertices)
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, i: usize) -> &Point2 {
        &self.vertices[i % self.vertices.len()]
    }

    /// Edge i runs from vertex i to vertex i + 1.
    pub fn edge(&self, i: usize) -> (&Point2, &Point2) {
        (self.vertex(i), self.vertex(i + 1))
    }

    pub fn halfplanes(&self) -> Vec<Halfplane> {
        (0..self.len())
            .map(|i| {
                let (a, b) = self.edge(i);
                Halfplane::left_of(a, b)
            })
            .collect()
    }

    pub fn contains(&self, p: &Point2, mode: ContainMode) -> bool {
        (0..self.len()).all(|i| {
            let (a, b) = self.edge(i);
            let o = orientation(a, b, p);
            match mode {
                ContainMode::Closed => o != Orientation::Clockwise,
                ContainMode::Open => o == Orientation::CounterClockwise,
            }
        })
    }

    pub fn on_boundary(&self, p: &Point2) -> bool {
        self.contains(p, ContainMode::Closed) && !self.contains(p, ContainMode::Open)
    }

    /// Index of the edge whose relative interior contains `p`.
    pub fn edge_interior_containing(&self, p: &Point2) -> Option<usize> {
        (0..self.len()).find(|&i| {
            let (a, b) = self.edge(i);
            p != a && p != b && on_segment(a, b, p)
        })
    }

    pub fn vertex_index(&self, p: &Point2) -> Option<usize> {
        self.vertices.iter().position(|v| v == p)
    }

    /// True if the closed polygons share no point.
    pub fn disjoint(&self, other: &ConvexPolygon) -> bool {
        let separates = |a: &ConvexPolygon, b: &ConvexPolygon| {
            (0..a.len()).any(|i| {
                let (p, q) = a.edge(i);
                b.vertices
                    .iter()
                    .all(|v| orientation(p, q, v) == Orientation::Clockwise)
            })
        };
        separates(self, other) || separates(other, self)
    }

    pub fn centroid(&self) -> Point2 {
        vertex_average(&self.vertices)
    }

    pub fn area2(&self) -> Rat {
        signed_area2(&self.vertices)
    }

    pub fn clip_ray(&self, origin: &Point2, dir: &Vector2) -> RayClip {
        clip_ray_halfplanes(&self.halfplanes(), origin, dir)
    }
}

/// Twice the signed area of a closed polygonal chain.
pub fn signed_area2(vertices: &[Point2]) -> Rat {
    let n = vertices.len();
    let mut s = int(0);
    for i in 0..n {
        let a = &vertices[i];
        let b = &vertices[(i + 1) % n];
        s += &a.x * &b.y - &a.y * &b.x;
    }
    s
}

pub fn vertex_average(points: &[Point2]) -> Point2 {
    let mut x = int(0);
    let mut y = int(0);
    for p in points {
        x += &p.x;
        y += &p.y;
    }
    let k = rat(1, points.len() as i64);
    Point2::new(x * &k, y * k)
}

/// Region between two rays from `apex`, counterclockwise from `dir1` to `dir2`,
/// with an opening angle below pi.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wedge {
    apex: Point2,
    dir1: Vector2,
    dir2: Vector2,
}

impl Wedge {
    /// Swaps the directions if needed so that `dir1` precedes `dir2` counterclockwise.
    pub fn new(apex: Point2, dir1: Vector2, dir2: Vector2) -> Result<Self> {
        if dir1.is_zero() || dir2.is_zero() {
            return Err(Error::DegenerateWedge);
        }
        let c = dir1.cross(&dir2);
        if c.is_zero() {
            return Err(Error::DegenerateWedge);
        }
        let (dir1, dir2) = if c.is_positive() {
            (dir1, dir2)
        } else {
            (dir2, dir1)
        };
        Ok(Wedge { apex, dir1, dir2 })
    }

    pub fn apex(&self) -> &Point2 {
        &self.apex
    }

    pub fn dir1(&self) -> &Vector2 {
        &self.dir1
    }

    pub fn dir2(&self) -> &Vector2 {
        &self.dir2
    }

    pub fn halfplanes(&self) -> Vec<Halfplane> {
        vec![
            Halfplane::new(self.apex.clone(), self.dir1.clone()),
            Halfplane::new(self.apex.clone(), -&self.dir2),
        ]
    }

    pub fn contains(&self, p: &Point2, mode: ContainMode) -> bool {
        self.halfplanes().iter().all(|h| h.contains(p, mode))
    }

    pub fn clip_ray(&self, origin: &Point2, dir: &Vector2) -> RayClip {
        clip_ray_halfplanes(&self.halfplanes(), origin, dir)
    }
}

/// The convex regions handled by the exact verifier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConvexRegion {
    Polygon(ConvexPolygon),
    Wedge(Wedge),
}

impl From<ConvexPolygon> for ConvexRegion {
    fn from(p: ConvexPolygon) -> Self {
        ConvexRegion::Polygon(p)
    }
}

impl From<Wedge> for ConvexRegion {
    fn from(w: Wedge) -> Self {
        ConvexRegion::Wedge(w)
    }
}

impl ConvexRegion {
    pub fn halfplanes(&self) -> Vec<Halfplane> {
        match self {
            ConvexRegion::Polygon(p) => p.halfplanes(),
            ConvexRegion::Wedge(w) => w.halfplanes(),
        }
    }

    pub fn contains(&self, p: &Point2, mode: ContainMode) -> bool {
        match self {
            ConvexRegion::Polygon(poly) => poly.contains(p, mode),
            ConvexRegion::Wedge(w) => w.contains(p, mode),
        }
    }

    pub fn clip_ray(&self, origin: &Point2, dir: &Vector2) -> RayClip {
        clip_ray_halfplanes(&self.halfplanes(), origin, dir)
    }

    pub fn is_bounded(&self) -> bool {
        matches!(self, ConvexRegion::Polygon(_))
    }

    /// A point strictly inside.
    pub fn interior_point(&self) -> Point2 {
        match self {
            ConvexRegion::Polygon(p) => p.centroid(),
            ConvexRegion::Wedge(w) => &(w.apex() + w.dir1()) + w.dir2(),
        }
    }
}

/// Twice the area of triangle abc, unsigned.
pub fn triangle_area2(a: &Point2, b: &Point2, c: &Point2) -> Rat {
    cross3(a, b, c).abs()
}
