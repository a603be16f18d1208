//! Sampled depth in simple polygons, where walls block sight as well as guards.
//!
//! A guard `q` sees `p` when the open segment `qp` stays in the closed polygon
//! and no other guard lies strictly between them. Grazing a reflex vertex or
//! running along an edge does not block. Every predicate is exact.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::darkness::GuardSet;
use crate::geom::{Point2, Rat, SimplePolygon};

/// Which points to test, beyond the ones always included.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Sampler {
    /// `(r + 1)^2` lattice points over the bounding box, clipped to the polygon.
    Grid {
        resolution: usize,
    },
    /// `count` uniform points of the polygon from a seeded generator.
    Random {
        seed: u64,
        count: usize,
    },
    Points {
        points: Vec<Point2>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleReport {
    pub samples: Vec<(Point2, usize)>,
    pub min_sampled_depth: usize,
    /// Samples with depth below the target, in sample order.
    pub failing_samples: Vec<Point2>,
}

/// A point with its homogeneous integer coordinates (positive weight), and
/// an `i128` copy when they are small.
#[derive(Clone, Debug)]
struct Pt {
    exact: Point2,
    big: [BigInt; 3],
    small: Option<[i128; 3]>,
}

const SMALL: i128 = 1 << 40;

impl Pt {
    fn new(p: &Point2) -> Self {
        let w = num_integer::Integer::lcm(p.x.denom(), p.y.denom());
        let big = [
            p.x.numer() * (&w / p.x.denom()),
            p.y.numer() * (&w / p.y.denom()),
            w,
        ];
        let small = (|| {
            let c = [big[0].to_i128()?, big[1].to_i128()?, big[2].to_i128()?];
            c.iter().all(|c| c.abs() < SMALL).then_some(c)
        })();
        Pt {
            exact: p.clone(),
            big,
            small,
        }
    }
}

fn cross_small(a: &[i128; 3], b: &[i128; 3]) -> [i128; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn orient(a: &Pt, b: &Pt, c: &Pt) -> i8 {
    // det(a, b, c) = (a x b) . c, invariant under cyclic shifts. Weights are
    // positive, so its sign is the orientation.
    let pair = match (a.small, b.small, c.small) {
        (Some(a), Some(b), Some(c)) => {
            // Entries below 2^40: crosses below 2^82, products below 2^123.
            let x = cross_small(&a, &b);
            return (x[0] * c[0] + x[1] * c[1] + x[2] * c[2]).signum() as i8;
        }
        (Some(a), Some(b), None) => Some((a, b, c)),
        (None, Some(b), Some(c)) => Some((b, c, a)),
        (Some(a), None, Some(c)) => Some((c, a, b)),
        _ => None,
    };
    let det = match pair {
        Some((u, v, w)) => {
            let x = cross_small(&u, &v);
            BigInt::from(x[0]) * &w.big[0]
                + BigInt::from(x[1]) * &w.big[1]
                + BigInt::from(x[2]) * &w.big[2]
        }
        None => {
            let (a, b, c) = (&a.big, &b.big, &c.big);
            &a[0] * (&b[1] * &c[2] - &b[2] * &c[1]) - &a[1] * (&b[0] * &c[2] - &b[2] * &c[0])
                + &a[2] * (&b[0] * &c[1] - &b[1] * &c[0])
        }
    };
    match det.sign() {
        num_bigint::Sign::Plus => 1,
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
    }
}

/// For collinear points: is `m` strictly between `a` and `b`.
fn strictly_between(a: &Pt, b: &Pt, m: &Pt) -> bool {
    let (a, b, m) = (&a.exact, &b.exact, &m.exact);
    ((m - a).dot(&(m - b))).is_negative()
}

/// Polygon prepared for repeated visibility queries.
#[derive(Clone, Debug)]
pub struct Walls {
    polygon: SimplePolygon,
    v: Vec<Pt>,
}

impl Walls {
    pub fn new(polygon: &SimplePolygon) -> Self {
        Walls {
            v: polygon.vertices().iter().map(Pt::new).collect(),
            polygon: polygon.clone(),
        }
    }

    pub fn polygon(&self) -> &SimplePolygon {
        &self.polygon
    }

    fn vertex(&self, i: usize) -> &Pt {
        &self.v[i % self.v.len()]
    }

    /// Is direction `to - at` inside the closed interior cone at vertex `i`.
    fn cone_at_vertex(&self, i: usize, to: &Pt) -> bool {
        let n = self.v.len();
        let (u, w, v) = (self.vertex(i + n - 1), self.vertex(i), self.vertex(i + 1));
        let after = orient(w, v, to) >= 0;
        let before = orient(w, to, u) >= 0;
        match orient(u, w, v) {
            1 => after && before,
            -1 => after || before,
            _ => after,
        }
    }

    /// Is direction `to - at` inside the closed polygon locally at `at`.
    fn enters(&self, at: &Pt, to: &Pt) -> bool {
        let n = self.v.len();
        for i in 0..n {
            if self.v[i].exact == at.exact {
                return self.cone_at_vertex(i, to);
            }
        }
        for i in 0..n {
            let (a, b) = (self.vertex(i), self.vertex(i + 1));
            if orient(a, b, at) == 0 && strictly_between(a, b, at) {
                return orient(a, b, to) >= 0;
            }
        }
        true
    }

    /// Does the open segment qp lie in the closed polygon. Both ends must be
    /// in the closed polygon.
    fn segment_inside(&self, q: &Pt, p: &Pt) -> bool {
        if q.exact == p.exact {
            return true;
        }
        if !self.enters(q, p) || !self.enters(p, q) {
            return false;
        }
        let n = self.v.len();
        for i in 0..n {
            let (a, b) = (self.vertex(i), self.vertex(i + 1));
            let o1 = orient(q, p, a);
            let o2 = orient(q, p, b);
            if o1 * o2 < 0 {
                let o3 = orient(a, b, q);
                let o4 = orient(a, b, p);
                if o3 * o4 < 0 {
                    return false;
                }
            }
            if o1 == 0 && strictly_between(q, p, a) {
                let back = self.cone_at_vertex(i, q);
                let ahead = self.cone_at_vertex(i, p);
                if !(back && ahead) {
                    return false;
                }
            }
        }
        true
    }
}

/// Guards prepared for repeated depth queries.
#[derive(Clone, Debug)]
pub struct Viewers {
    walls: Walls,
    guards: Vec<Pt>,
}

impl Viewers {
    pub fn new(polygon: &SimplePolygon, guards: &GuardSet) -> Self {
        Viewers {
            walls: Walls::new(polygon),
            guards: guards.iter().map(Pt::new).collect(),
        }
    }

    fn sees(&self, qi: usize, p: &Pt) -> bool {
        let q = &self.guards[qi];
        if q.exact == p.exact {
            return true;
        }
        if self
            .guards
            .iter()
            .enumerate()
            .any(|(j, g)| j != qi && orient(q, p, g) == 0 && strictly_between(q, p, g))
        {
            return false;
        }
        self.walls.segment_inside(q, p)
    }

    /// Guards seeing `p`, by index.
    pub fn seen_by(&self, p: &Point2) -> Vec<usize> {
        let p = Pt::new(p);
        (0..self.guards.len())
            .filter(|&i| self.sees(i, &p))
            .collect()
    }

    pub fn depth(&self, p: &Point2) -> usize {
        let p = Pt::new(p);
        (0..self.guards.len()).filter(|&i| self.sees(i, &p)).count()
    }
}

/// Does guard `q` see `p` in polygon `polygon`, with the other guards blocking.
/// A `q` outside `guards` is treated as an extra viewer. Both points must lie
/// in the closed polygon.
pub fn visible(polygon: &SimplePolygon, guards: &GuardSet, q: &Point2, p: &Point2) -> bool {
    let viewers = Viewers::new(polygon, guards);
    match guards.iter().position(|g| g == q) {
        Some(i) => viewers.sees(i, &Pt::new(p)),
        None => {
            let q = Pt::new(q);
            let p = Pt::new(p);
            !viewers
                .guards
                .iter()
                .any(|g| orient(&q, &p, g) == 0 && strictly_between(&q, &p, g))
                && viewers.walls.segment_inside(&q, &p)
        }
    }
}

fn bounding_box(polygon: &SimplePolygon) -> (Point2, Point2) {
    let v = polygon.vertices();
    let mut lo = v[0].clone();
    let mut hi = v[0].clone();
    for p in v {
        if p.x < lo.x {
            lo.x = p.x.clone();
        }
        if p.y < lo.y {
            lo.y = p.y.clone();
        }
        if p.x > hi.x {
            hi.x = p.x.clone();
        }
        if p.y > hi.y {
            hi.y = p.y.clone();
        }
    }
    (lo, hi)
}

fn grid_points(polygon: &SimplePolygon, r: usize) -> Vec<Point2> {
    let r = r.max(1);
    let (lo, hi) = bounding_box(polygon);
    let step_x = (&hi.x - &lo.x) / Rat::from_integer(BigInt::from(r));
    let step_y = (&hi.y - &lo.y) / Rat::from_integer(BigInt::from(r));
    let mut out = Vec::new();
    for i in 0..=r {
        let x = &lo.x + &step_x * Rat::from_integer(BigInt::from(i));
        for j in 0..=r {
            let y = &lo.y + &step_y * Rat::from_integer(BigInt::from(j));
            let p = Point2::new(x.clone(), y);
            if polygon.contains_closed(&p) {
                out.push(p);
            }
        }
    }
    out
}

fn random_points(polygon: &SimplePolygon, seed: u64, count: usize) -> Vec<Point2> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = bounding_box(polygon);
    let denom = BigInt::from(1u64 << 32);
    let unit = |rng: &mut ChaCha8Rng| Rat::new(BigInt::from(rng.gen::<u32>()), denom.clone());
    let mut out = Vec::with_capacity(count);
    let mut tries = 0usize;
    while out.len() < count && tries < 1000 * count.max(1) {
        tries += 1;
        let x = &lo.x + (&hi.x - &lo.x) * unit(&mut rng);
        let y = &lo.y + (&hi.y - &lo.y) * unit(&mut rng);
        let p = Point2::new(x, y);
        if polygon.contains_closed(&p) {
            out.push(p);
        }
    }
    out
}

/// A dark ray cut at its first wall hit.
struct DarkSegment {
    from: Pt,
    to: Pt,
}

/// First boundary point hit by the ray from `at` away from `from`, strictly past `at`.
fn first_hit(polygon: &SimplePolygon, at: &Point2, away: &Point2) -> Option<Point2> {
    let d = at - away;
    let mut best: Option<Rat> = None;
    let n = polygon.len();
    for i in 0..n {
        let (a, b) = polygon.edge(i);
        let e = b - a;
        let den = d.cross(&e);
        let w = a - at;
        let t = if den.is_zero() {
            // Parallel: only a collinear edge can be hit, at its nearer end.
            if !w.cross(&d).is_zero() {
                continue;
            }
            let ta = w.dot(&d) / d.dot(&d);
            let tb = (b - at).dot(&d) / d.dot(&d);
            match (ta.is_positive(), tb.is_positive()) {
                (true, true) => ta.min(tb),
                (true, false) | (false, true) => continue, // starts on that edge
                _ => continue,
            }
        } else {
            let t = w.cross(&e) / &den;
            let s = w.cross(&d) / &den;
            if !t.is_positive() || s.is_negative() || s > Rat::one() {
                continue;
            }
            t
        };
        if best.as_ref().is_none_or(|b| t < *b) {
            best = Some(t);
        }
    }
    best.map(|t| at + &d.scale(&t))
}

fn dark_segments(polygon: &SimplePolygon, guards: &GuardSet) -> Vec<DarkSegment> {
    let pts = guards.points();
    let mut out = Vec::new();
    for (i, a) in pts.iter().enumerate() {
        for (j, b) in pts.iter().enumerate() {
            if i == j {
                continue;
            }
            if let Some(end) = first_hit(polygon, a, b) {
                out.push(DarkSegment {
                    from: Pt::new(a),
                    to: Pt::new(&end),
                });
            }
        }
    }
    out
}

fn meet(s: &DarkSegment, t: &DarkSegment) -> Option<Point2> {
    let o1 = orient(&s.from, &s.to, &t.from);
    let o2 = orient(&s.from, &s.to, &t.to);
    let o3 = orient(&t.from, &t.to, &s.from);
    let o4 = orient(&t.from, &t.to, &s.to);
    if o1 * o2 > 0 || o3 * o4 > 0 || (o1 == 0 && o2 == 0) {
        return None;
    }
    crate::geom::intersect_lines(&s.from.exact, &s.to.exact, &t.from.exact, &t.to.exact)
}

/// Points where dark rays meet inside the polygon, plus one interior point
/// per ray. Rays are cut at the first wall they hit.
pub fn dark_ray_samples(polygon: &SimplePolygon, guards: &GuardSet) -> Vec<Point2> {
    let segs = dark_segments(polygon, guards);
    let mut out: Vec<Point2> = segs
        .iter()
        .map(|s| s.from.exact.midpoint(&s.to.exact))
        .collect();
    let found: Vec<Vec<Point2>> = (0..segs.len())
        .into_par_iter()
        .map(|i| {
            segs[i + 1..]
                .iter()
                .filter_map(|t| meet(&segs[i], t))
                .collect()
        })
        .collect();
    out.extend(found.into_iter().flatten());
    out.retain(|p| polygon.contains_closed(p));
    out.sort();
    out.dedup();
    out
}

/// Every point the sampler asks for plus the vertices, guards and dark-ray
/// samples, deduplicated in lexicographic order.
pub fn sample_points(polygon: &SimplePolygon, guards: &GuardSet, sampler: &Sampler) -> Vec<Point2> {
    let mut pts = match sampler {
        Sampler::Grid { resolution } => grid_points(polygon, *resolution),
        Sampler::Random { seed, count } => random_points(polygon, *seed, *count),
        Sampler::Points { points } => points
            .iter()
            .filter(|q| polygon.contains_closed(q))
            .cloned()
            .collect(),
    };
    pts.extend(polygon.vertices().iter().cloned());
    pts.extend(guards.iter().cloned());
    pts.extend(dark_ray_samples(polygon, guards));
    pts.sort();
    pts.dedup();
    pts
}

/// Depth at every sample; `target` decides which samples are reported as failing.
pub fn sample_depth(
    polygon: &SimplePolygon,
    guards: &GuardSet,
    sampler: &Sampler,
    target: usize,
) -> SampleReport {
    let pts = sample_points(polygon, guards, sampler);
    depth_report(polygon, guards, pts, target)
}

/// Depth at the given points, which must lie in the closed polygon.
pub fn depth_report(
    polygon: &SimplePolygon,
    guards: &GuardSet,
    points: Vec<Point2>,
    target: usize,
) -> SampleReport {
    let viewers = Viewers::new(polygon, guards);
    let samples: Vec<(Point2, usize)> = points
        .into_par_iter()
        .map(|p| {
            let d = viewers.depth(&p);
            (p, d)
        })
        .collect();
    let min_sampled_depth = samples.iter().map(|s| s.1).min().unwrap_or(0);
    let failing_samples = samples
        .iter()
        .filter(|s| s.1 < target)
        .map(|s| s.0.clone())
        .collect();
    SampleReport {
        samples,
        min_sampled_depth,
        failing_samples,
    }
}
