use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::{
    int, line_intersection, orientation, rat, ConvexPolygon, Halfplane, Line, LineIntersection,
    Orientation, Point2, Rat,
};

/// Result of intersecting closed halfplanes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HalfplaneIntersection {
    Bounded(ConvexPolygon),
    /// Nonempty interior but no bound.
    Unbounded,
    /// Empty or without interior.
    Empty,
}

/// Clip a convex counterclockwise polygon by one closed halfplane.
pub fn clip_convex(poly: &[Point2], h: &Halfplane) -> Vec<Point2> {
    let n = poly.len();
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..n {
        let a = &poly[i];
        let b = &poly[(i + 1) % n];
        let va = h.value(a);
        let vb = h.value(b);
        if !va.is_negative() {
            out.push(a.clone());
        }
        if (va.is_positive() && vb.is_negative()) || (va.is_negative() && vb.is_positive()) {
            let t = &va / (&va - &vb);
            out.push(a.lerp(b, &t));
        }
    }
    tidy(out)
}

/// Drop repeated and collinear vertices.
fn tidy(mut pts: Vec<Point2>) -> Vec<Point2> {
    pts.dedup();
    while pts.len() > 1 && pts.first() == pts.last() {
        pts.pop();
    }
    let mut changed = true;
    while changed && pts.len() >= 3 {
        changed = false;
        let n = pts.len();
        for i in 0..n {
            let prev = &pts[(i + n - 1) % n];
            let next = &pts[(i + 1) % n];
            if orientation(prev, &pts[i], next) == Orientation::Collinear {
                pts.remove(i);
                changed = true;
                break;
            }
        }
    }
    pts
}

/// Intersect closed halfplanes exactly.
///
/// Works inside a box larger than every pairwise crossing of the boundary
/// lines; a result touching the box is reported unbounded.
pub fn halfplane_intersection(halfplanes: &[Halfplane]) -> HalfplaneIntersection {
    let mut bound = int(1);
    let mut grow = |p: &Point2| {
        for c in [&p.x, &p.y] {
            let a = c.abs();
            if a > bound {
                bound = a;
            }
        }
    };
    for h in halfplanes {
        grow(&h.point);
    }
    for (i, hi) in halfplanes.iter().enumerate() {
        for hj in &halfplanes[i + 1..] {
            let (Ok(li), Ok(lj)) = (
                Line::new(hi.point.clone(), hi.direction.clone()),
                Line::new(hj.point.clone(), hj.direction.clone()),
            ) else {
                continue;
            };
            if let LineIntersection::Point(p) = line_intersection(&li, &lj) {
                grow(&p);
            }
        }
    }
    let b = bound * int(2) + int(1);
    let nb = -b.clone();
    let mut poly = vec![
        Point2::new(nb.clone(), nb.clone()),
        Point2::new(b.clone(), nb.clone()),
        Point2::new(b.clone(), b.clone()),
        Point2::new(nb.clone(), b.clone()),
    ];
    for h in halfplanes {
        if h.direction.is_zero() {
            continue;
        }
        poly = clip_convex(&poly, h);
        if poly.len() < 3 {
            return HalfplaneIntersection::Empty;
        }
    }
    let touches_box = poly
        .iter()
        .any(|p| p.x == b || p.x == nb || p.y == b || p.y == nb);
    if touches_box {
        return HalfplaneIntersection::Unbounded;
    }
    match ConvexPolygon::new(poly) {
        Ok(p) => HalfplaneIntersection::Bounded(p),
        Err(_) => HalfplaneIntersection::Empty,
    }
}

/// Intersect a bounded convex polygon with halfplanes; `None` if the interior is empty.
pub fn clip_polygon(poly: &ConvexPolygon, halfplanes: &[Halfplane]) -> Option<ConvexPolygon> {
    let mut pts = poly.vertices().to_vec();
    for h in halfplanes {
        pts = clip_convex(&pts, h);
        if pts.len() < 3 {
            return None;
        }
    }
    ConvexPolygon::new(pts).ok()
}

fn pow2(k: u32) -> BigInt {
    BigInt::one() << k
}

/// The dyadic rational with the smallest denominator strictly between `lo` and `hi`.
pub fn simplest_dyadic_between(lo: &Rat, hi: &Rat) -> Rat {
    assert!(lo < hi, "empty interval");
    let mut k = 0u32;
    loop {
        let scale = Rat::from_integer(pow2(k));
        let m = (lo * &scale).floor() + Rat::one();
        let cand = m / &scale;
        if &cand < hi {
            return cand;
        }
        k += 1;
    }
}

fn round_to(x: &Rat, scale: &Rat) -> Rat {
    (x * scale + rat(1, 2)).floor() / scale
}

/// A point with small dyadic coordinates strictly inside `poly`, found by
/// rounding the vertex average to successively finer dyadic grids.
pub fn simple_interior_point(poly: &ConvexPolygon) -> Point2 {
    let c = poly.centroid();
    let diam = poly
        .vertices()
        .iter()
        .map(|v| (&v.x - &c.x).abs() + (&v.y - &c.y).abs())
        .max()
        .unwrap_or_else(|| int(1));
    // Start at a grid somewhat coarser than the polygon itself.
    let mut k: i64 = -bit_length(&diam) - 1;
    loop {
        let scale = if k >= 0 {
            Rat::from_integer(pow2(k as u32))
        } else {
            Rat::new(BigInt::one(), pow2((-k) as u32))
        };
        let p = Point2::new(round_to(&c.x, &scale), round_to(&c.y, &scale));
        if poly.contains(&p, super::ContainMode::Open) {
            return p;
        }
        k += 1;
    }
}

/// Approximate base-2 magnitude of a positive rational.
fn bit_length(r: &Rat) -> i64 {
    r.numer().bits() as i64 - r.denom().bits() as i64
}

/// Integer floor of a rational.
pub fn floor_int(r: &Rat) -> BigInt {
    r.numer().div_floor(r.denom())
}
