use crate::geom::ConvexPolygon;

/// Triangle of a serpentine triangulation: an apex plus a base that is a polygon edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ApexTriangle {
    pub apex: usize,
    /// Base edge `(j, j + 1)` in counterclockwise order.
    pub base: (usize, usize),
}

/// Zigzag path v0, v(n-1), v1, v(n-2), ... and the triangles it cuts off.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZigzagTriangulation {
    pub path: Vec<usize>,
    pub triangles: Vec<ApexTriangle>,
    /// Per vertex, the index of the triangle it is the apex of.
    pub elbow_owner: Vec<Option<usize>>,
}

impl ZigzagTriangulation {
    pub fn new(n: usize) -> Self {
        assert!(n >= 3, "zigzag needs three vertices");
        let mut path = Vec::with_capacity(n);
        let (mut lo, mut hi) = (0usize, n - 1);
        while lo <= hi {
            path.push(lo);
            if lo != hi {
                path.push(hi);
            }
            lo += 1;
            if hi == 0 {
                break;
            }
            hi -= 1;
        }
        let mut triangles = Vec::with_capacity(n - 2);
        let mut elbow_owner = vec![None; n];
        for w in path.windows(3) {
            let (a, b, c) = (w[0], w[1], w[2]);
            let base = if (a + 1) % n == c { (a, c) } else { (c, a) };
            debug_assert_eq!((base.0 + 1) % n, base.1);
            elbow_owner[b] = Some(triangles.len());
            triangles.push(ApexTriangle { apex: b, base });
        }
        ZigzagTriangulation {
            path,
            triangles,
            elbow_owner,
        }
    }

    pub fn triangle_of(&self, vertex: usize) -> Option<&ApexTriangle> {
        self.elbow_owner[vertex].map(|t| &self.triangles[t])
    }
}

pub fn zigzag(polygon: &ConvexPolygon) -> ZigzagTriangulation {
    ZigzagTriangulation::new(polygon.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_paths() {
        assert_eq!(ZigzagTriangulation::new(3).path, vec![0, 2, 1]);
        let sq = ZigzagTriangulation::new(4);
        assert_eq!(sq.path, vec![0, 3, 1, 2]);
        assert_eq!(sq.triangles.len(), 2);
        assert_eq!(sq.elbow_owner, vec![None, Some(1), None, Some(0)]);
        assert_eq!(ZigzagTriangulation::new(7).path, vec![0, 6, 1, 5, 2, 4, 3]);
    }

    #[test]
    fn bases_are_edges_and_cover_area() {
        for n in 3..12 {
            let z = ZigzagTriangulation::new(n);
            assert_eq!(z.triangles.len(), n - 2);
            let mut seen = vec![false; n];
            for v in &z.path {
                assert!(!seen[*v]);
                seen[*v] = true;
            }
            for t in &z.triangles {
                assert_eq!((t.base.0 + 1) % n, t.base.1);
                assert!(t.apex != t.base.0 && t.apex != t.base.1);
            }
            let ends = [z.path[0], z.path[n - 1]];
            for e in ends {
                assert!(z.triangle_of(e).is_none());
            }
        }
    }
}
