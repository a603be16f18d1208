use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::darkness::GuardSet;
use crate::error::{Error, Result};
use crate::geom::hom::Hom3;
use crate::geom::{ContainMode, ConvexRegion, Point2, Rat, Vector2};

/// Radical inverse of `i` in `base`, exact.
pub fn radical_inverse(mut i: u64, base: u64) -> Rat {
    let b = Rat::from_integer(BigInt::from(base));
    let mut scale = Rat::one();
    let mut out = Rat::zero();
    while i > 0 {
        scale /= &b;
        out += &scale * Rat::from_integer(BigInt::from(i % base));
        i /= base;
    }
    out
}

/// Halton points in a triangle `o + u d1 + v d2`, `u, v > 0`, `u + v < 1`.
struct TriangleHalton {
    origin: Point2,
    d1: Vector2,
    d2: Vector2,
    index: u64,
}

impl Iterator for TriangleHalton {
    type Item = Point2;

    fn next(&mut self) -> Option<Point2> {
        loop {
            self.index += 1;
            let mut u = radical_inverse(self.index, 2);
            let mut v = radical_inverse(self.index, 3);
            if &u + &v > Rat::one() {
                u = Rat::one() - u;
                v = Rat::one() - v;
            }
            if u.is_zero() || v.is_zero() || &u + &v == Rat::one() {
                continue;
            }
            return Some(&(&self.origin + &self.d1.scale(&u)) + &self.d2.scale(&v));
        }
    }
}

/// Triangles covering the region's interior near where guards should go.
fn sample_triangles(region: &ConvexRegion) -> Vec<(Point2, Vector2, Vector2)> {
    match region {
        ConvexRegion::Polygon(p) => {
            let c = p.centroid();
            (0..p.len())
                .map(|i| {
                    let (a, b) = p.edge(i);
                    (c.clone(), a - &c, b - &c)
                })
                .collect()
        }
        ConvexRegion::Wedge(w) => vec![(w.apex().clone(), w.dir1().clone(), w.dir2().clone())],
    }
}

#[derive(Clone, Debug)]
struct Ray {
    start: Hom3,
    end: Hom3,
    line: Hom3,
}

impl Ray {
    fn new(at: &Point2, away_from: &Point2) -> Self {
        let start = Hom3::point(at);
        Ray {
            line: Hom3::point(away_from).cross(&start),
            end: Hom3::direction(&(at - away_from)),
            start,
        }
    }

    fn crosses(&self, other: &Ray) -> bool {
        let s = other.line.dot_sign(&self.start);
        let e = other.line.dot_sign(&self.end);
        s * e < 0
    }
}

/// A ray crossing with a float copy for prefiltering incidence tests.
#[derive(Clone)]
struct Crossing {
    hom: Hom3,
    approx: [f64; 3],
}

/// Builds guard sets with no three guards collinear and no point on three dark rays.
#[derive(Clone)]
pub(crate) struct Placer {
    pub(crate) guards: Vec<Point2>,
    homs: Vec<Hom3>,
    rays: Vec<Ray>,
    crossings: Vec<Crossing>,
}

#[allow(clippy::neg_cmp_op_on_partial_ord)]
fn maybe_zero(line: &[f64; 3], p: &[f64; 3]) -> bool {
    let terms = [line[0] * p[0], line[1] * p[1], line[2] * p[2]];
    let sum: f64 = terms.iter().sum();
    let mag: f64 = terms.iter().map(|t| t.abs()).sum();
    !(sum.abs() > 1e-9 * mag) // NaN or overflow falls through to the exact test
}

impl Placer {
    pub(crate) fn new() -> Self {
        Placer {
            guards: Vec::new(),
            homs: Vec::new(),
            rays: Vec::new(),
            crossings: Vec::new(),
        }
    }

    pub(crate) fn admissible(&self, cand: &Point2) -> bool {
        let h = Hom3::point(cand);
        for (i, g) in self.homs.iter().enumerate() {
            if self.guards[i] == *cand {
                return false;
            }
            let line = h.cross(g);
            if self
                .homs
                .iter()
                .enumerate()
                .any(|(j, o)| j != i && line.dot_sign(o) == 0)
            {
                return false;
            }
            let la = line.approx();
            if self
                .crossings
                .iter()
                .any(|x| maybe_zero(&la, &x.approx) && line.dot_sign(&x.hom) == 0)
            {
                return false;
            }
        }
        true
    }

    pub(crate) fn push(&mut self, cand: Point2) {
        let mut fresh = Vec::with_capacity(2 * self.guards.len());
        for g in &self.guards {
            fresh.push(Ray::new(&cand, g));
            fresh.push(Ray::new(g, &cand));
        }
        for r in &fresh {
            for o in &self.rays {
                if r.crosses(o) && o.crosses(r) {
                    let hom = r.line.cross(&o.line);
                    let approx = hom.approx();
                    self.crossings.push(Crossing { hom, approx });
                }
            }
        }
        self.rays.extend(fresh);
        self.homs.push(Hom3::point(&cand));
        self.guards.push(cand);
    }
}

/// Place `g` guards strictly inside the region with no three collinear and no
/// three dark rays through a common point, so no point is more than 2 dark.
///
/// Candidates come from a Halton sequence over a fan of triangles; each is
/// accepted unless it lies on a line through a guard and another guard or an
/// existing ray crossing.
pub fn place_general_position(region: &ConvexRegion, g: usize) -> Result<GuardSet> {
    if g == 0 {
        return Err(Error::NoGuards);
    }
    let mut streams: Vec<TriangleHalton> = sample_triangles(region)
        .into_iter()
        .map(|(origin, d1, d2)| TriangleHalton {
            origin,
            d1,
            d2,
            index: 0,
        })
        .collect();
    let mut placer = Placer::new();
    let mut turn = 0usize;
    while placer.guards.len() < g {
        let k = streams.len();
        let cand = streams[turn % k].next().expect("endless");
        turn += 1;
        if region.contains(&cand, ContainMode::Open) && placer.admissible(&cand) {
            placer.push(cand);
        }
    }
    GuardSet::new(placer.guards)
}

/// True if some three guards are collinear.
pub fn has_collinear_triple(guards: &GuardSet) -> bool {
    let h: Vec<Hom3> = guards.iter().map(Hom3::point).collect();
    for i in 0..h.len() {
        for j in i + 1..h.len() {
            let l = h[i].cross(&h[j]);
            if h[j + 1..].iter().any(|o| l.dot_sign(o) == 0) {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::darkness::{max_darkness, max_ray_concurrency};
    use crate::geom::rat;

    #[test]
    fn radical_inverse_values() {
        assert_eq!(radical_inverse(1, 2), rat(1, 2));
        assert_eq!(radical_inverse(6, 2), rat(3, 8));
        assert_eq!(radical_inverse(5, 3), rat(7, 9));
    }

    #[test]
    fn square_placements() {
        let sq: ConvexRegion = crate::fixtures::reference_square_region().into();
        let g = place_general_position(&sq, 3).unwrap();
        assert!(!has_collinear_triple(&g));
        let g = place_general_position(&sq, 12).unwrap();
        assert!(!has_collinear_triple(&g));
        assert!(max_ray_concurrency(&g) <= 2);
        assert!(max_darkness(&sq, &g).unwrap().darkness <= 2);
    }
}
