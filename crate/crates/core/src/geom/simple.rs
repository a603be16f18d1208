use num_traits::Signed;

use super::{
    between_collinear, on_segment, orientation, signed_area2, ContainMode, ConvexPolygon,
    Orientation, Point2, Rat,
};
use crate::error::{Error, Result};

/// Simple polygon, vertices counterclockwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplePolygon {
    vertices: Vec<Point2>,
}

/// Do closed segments ab and cd share a point.
pub fn segments_touch(a: &Point2, b: &Point2, c: &Point2, d: &Point2) -> bool {
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);
    if o1 != o2
        && o3 != o4
        && o1 != Orientation::Collinear
        && o2 != Orientation::Collinear
        && o3 != Orientation::Collinear
        && o4 != Orientation::Collinear
    {
        return true;
    }
    on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b)
}

/// Do segments ab and cd cross at a single point interior to both.
pub fn crosses_properly(a: &Point2, b: &Point2, c: &Point2, d: &Point2) -> bool {
    let o1 = orientation(a, b, c).sign();
    let o2 = orientation(a, b, d).sign();
    let o3 = orientation(c, d, a).sign();
    let o4 = orientation(c, d, b).sign();
    o1 * o2 < 0 && o3 * o4 < 0
}

impl SimplePolygon {
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
        for i in 0..n {
            let (a, b) = (&vertices[i], &vertices[(i + 1) % n]);
            for j in i + 1..n {
                let (c, d) = (&vertices[j], &vertices[(j + 1) % n]);
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                if adjacent {
                    // Adjacent edges may only share their common vertex.
                    let (shared, other_first, other_second) =
                        if j == i + 1 { (b, a, d) } else { (a, b, c) };
                    if orientation(other_first, shared, other_second) == Orientation::Collinear
                        && !between_collinear(other_first, other_second, shared, false)
                    {
                        return Err(Error::SelfIntersecting(i, j));
                    }
                } else if segments_touch(a, b, c, d) {
                    return Err(Error::SelfIntersecting(i, j));
                }
            }
        }
        if !signed_area2(&vertices).is_positive() {
            return Err(Error::Clockwise);
        }
        Ok(SimplePolygon { vertices })
    }

    pub fn normalized(mut vertices: Vec<Point2>) -> Result<Self> {
        if vertices.len() >= 3 && signed_area2(&vertices).is_negative() {
            vertices.reverse();
        }
        SimplePolygon::new(vertices)
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

    pub fn edge(&self, i: usize) -> (&Point2, &Point2) {
        (self.vertex(i), self.vertex(i + 1))
    }

    pub fn area2(&self) -> Rat {
        signed_area2(&self.vertices)
    }

    pub fn on_boundary(&self, p: &Point2) -> bool {
        (0..self.len()).any(|i| {
            let (a, b) = self.edge(i);
            on_segment(a, b, p)
        })
    }

    /// Closed point-in-polygon by crossing parity.
    pub fn contains_closed(&self, p: &Point2) -> bool {
        self.on_boundary(p) || self.contains_open(p)
    }

    pub fn contains_open(&self, p: &Point2) -> bool {
        if self.on_boundary(p) {
            return false;
        }
        let mut inside = false;
        let n = self.len();
        for i in 0..n {
            let a = &self.vertices[i];
            let b = &self.vertices[(i + 1) % n];
            // Half-open rule on y to count each crossing once.
            if (a.y > p.y) != (b.y > p.y) {
                let o = orientation(a, b, p);
                let upward = b.y > a.y;
                if (upward && o == Orientation::CounterClockwise)
                    || (!upward && o == Orientation::Clockwise)
                {
                    inside = !inside;
                }
            }
        }
        inside
    }

    /// Is the vertex at i reflex (interior angle above pi).
    pub fn is_reflex(&self, i: usize) -> bool {
        let n = self.len();
        orientation(self.vertex(i + n - 1), self.vertex(i), self.vertex(i + 1))
            == Orientation::Clockwise
    }

    /// Does the closed convex polygon `c` lie in the closed polygon.
    pub fn contains_convex(&self, c: &ConvexPolygon) -> bool {
        if !c.vertices().iter().all(|p| self.contains_closed(p)) {
            return false;
        }
        if !self.contains_closed(&c.centroid()) {
            return false;
        }
        let m = c.len();
        for i in 0..self.len() {
            let (a, b) = self.edge(i);
            if c.contains(a, ContainMode::Open) || c.contains(&a.midpoint(b), ContainMode::Open) {
                return false;
            }
            for j in 0..m {
                let (p, q) = c.edge(j);
                if crosses_properly(a, b, p, q) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rat;

    fn ell() -> SimplePolygon {
        SimplePolygon::new(vec![
            Point2::from_ints(0, 0),
            Point2::from_ints(4, 0),
            Point2::from_ints(4, 1),
            Point2::from_ints(1, 1),
            Point2::from_ints(1, 4),
            Point2::from_ints(0, 4),
        ])
        .unwrap()
    }

    #[test]
    fn point_location() {
        let p = ell();
        assert!(p.contains_open(&Point2::new(rat(1, 2), rat(1, 2))));
        assert!(p.contains_open(&Point2::new(rat(1, 2), rat(3, 1))));
        assert!(!p.contains_closed(&Point2::from_ints(3, 3)));
        assert!(p.contains_closed(&Point2::from_ints(1, 1)));
        assert!(!p.contains_open(&Point2::from_ints(1, 1)));
        assert!(p.is_reflex(3));
        assert!(!p.is_reflex(0));
    }

    #[test]
    fn convex_containment() {
        let p = ell();
        let sq = |x0: i64, y0: i64, s: i64| {
            ConvexPolygon::new(vec![
                Point2::from_ints(x0, y0),
                Point2::from_ints(x0 + s, y0),
                Point2::from_ints(x0 + s, y0 + s),
                Point2::from_ints(x0, y0 + s),
            ])
            .unwrap()
        };
        assert!(p.contains_convex(&sq(0, 0, 1)));
        assert!(!p.contains_convex(&sq(0, 0, 2)));
        assert!(!p.contains_convex(&sq(2, 2, 1)));
        // All corners on the boundary, interior outside.
        let across = ConvexPolygon::new(vec![
            Point2::from_ints(1, 1),
            Point2::from_ints(4, 1),
            Point2::from_ints(1, 4),
        ])
        .unwrap();
        assert!(!p.contains_convex(&across));
    }

    #[test]
    fn bowtie_rejected() {
        let bow = vec![
            Point2::from_ints(0, 0),
            Point2::from_ints(2, 2),
            Point2::from_ints(2, 0),
            Point2::from_ints(0, 2),
        ];
        assert!(matches!(
            SimplePolygon::normalized(bow),
            Err(Error::SelfIntersecting(..))
        ));
    }

    #[test]
    fn spike_back_rejected() {
        let v = vec![
            Point2::from_ints(0, 0),
            Point2::from_ints(4, 0),
            Point2::from_ints(2, 0),
            Point2::from_ints(2, 3),
        ];
        assert!(SimplePolygon::new(v).is_err());
    }
}
