use num_traits::{One, Signed, Zero};

use super::zigzag::{zigzag, ZigzagTriangulation};
use crate::darkness::{max_darkness, GuardSet};
use crate::error::{Error, Result};
use crate::geom::{
    clip_polygon, convex_hull, intersect_lines, rat, simple_interior_point,
    simplest_dyadic_between, Affine, ContainMode, ConvexPolygon, Halfplane, HullClass, Line,
    Point2, Rat,
};

/// Everything built around one polygon vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexScaffold {
    /// Dividing point on the edge before the vertex.
    pub m: Point2,
    /// Dividing point on the edge after the vertex.
    pub p: Point2,
    pub elbow: Option<Point2>,
    /// Exit points before and after the vertex; `m` and `p` without an elbow.
    pub b: Point2,
    pub a: Point2,
    pub safe_region: ConvexPolygon,
    /// Edge parameter of the apex triangle cutting the safe region.
    pub delta: Rat,
    pub x: Point2,
    pub y: Point2,
    pub z: Point2,
    /// Where line x(i+1) y(i) meets the edge before the vertex.
    pub c: Point2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionScaffold {
    pub epsilon: Rat,
    pub zigzag: ZigzagTriangulation,
    pub vertices: Vec<VertexScaffold>,
}

impl ConstructionScaffold {
    /// Guards in placement order: x, y, z per vertex, then the elbows by vertex.
    pub fn guards(&self) -> Vec<Point2> {
        let mut out: Vec<Point2> = self
            .vertices
            .iter()
            .flat_map(|v| [v.x.clone(), v.y.clone(), v.z.clone()])
            .collect();
        out.extend(self.vertices.iter().filter_map(|v| v.elbow.clone()));
        out
    }
}

const RETRIES: u32 = 16;

/// Place 4n - 2 guards in a convex n-gon with no 2-dark point, certified exactly.
///
/// Dividing points start at edge parameter 1/4 and are halved until the
/// verifier accepts the result.
pub fn place_4n_minus_2(polygon: &ConvexPolygon) -> Result<(GuardSet, ConstructionScaffold)> {
    let mut eps = rat(1, 4);
    let mut last = None;
    for _ in 0..=RETRIES {
        match build(polygon, &eps) {
            Ok(scaffold) => {
                let guards = GuardSet::new(scaffold.guards())?;
                let w = max_darkness(&polygon.clone().into(), &guards)?;
                if w.darkness <= 1 {
                    return Ok((guards, scaffold));
                }
                last = Some((format!("2-dark point at epsilon {eps}"), Some(w.point)));
            }
            Err(reason) => last = Some((format!("{reason} at epsilon {eps}"), None)),
        }
        eps *= rat(1, 2);
    }
    let (reason, witness) = last.expect("at least one attempt");
    Err(Error::ConstructionFailed { reason, witness })
}

fn along(from: &Point2, to: &Point2, t: &Rat) -> Point2 {
    from.lerp(to, t)
}

fn meet(
    a: &Point2,
    b: &Point2,
    c: &Point2,
    d: &Point2,
    what: &str,
) -> std::result::Result<Point2, String> {
    intersect_lines(a, b, c, d).ok_or_else(|| format!("{what}: parallel lines"))
}

/// Parameter of `q` on segment from `v` to `w`, if strictly inside it.
fn inner_param(v: &Point2, w: &Point2, q: &Point2) -> Option<Rat> {
    let line = Line::through(v, w).ok()?;
    if !line.contains(q) {
        return None;
    }
    let t = line.param_of(q);
    (t.is_positive() && t < Rat::one()).then_some(t)
}

/// A small-dyadic interior point of `cell`, chosen in the frame with origin
/// `v` and axes towards its neighbours so that the choice is affine invariant.
fn snap_in_frame(cell: &ConvexPolygon, v: &Point2, prev: &Point2, next: &Point2) -> Point2 {
    let frame = Affine::frame(v, &(next - v), &(prev - v)).expect("frame");
    let back = frame.inverse().expect("polygon vertices are not collinear");
    let local = ConvexPolygon::new(cell.vertices().iter().map(|p| back.apply(p)).collect())
        .expect("affine image of a convex polygon");
    frame.apply(&simple_interior_point(&local))
}

type Step<T> = std::result::Result<T, String>;

fn build(poly: &ConvexPolygon, eps: &Rat) -> Step<ConstructionScaffold> {
    let n = poly.len();
    let v = |i: usize| poly.vertex(i % n);
    let zz = zigzag(poly);
    let m: Vec<Point2> = (0..n).map(|i| along(v(i), v(i + n - 1), eps)).collect();
    let p: Vec<Point2> = (0..n).map(|i| along(v(i), v(i + 1), eps)).collect();

    struct Partial {
        elbow: Option<Point2>,
        b: Point2,
        a: Point2,
        region: ConvexPolygon,
        delta: Rat,
        x: Point2,
        y: Point2,
    }

    let mut parts = Vec::with_capacity(n);
    for i in 0..n {
        let prev = v(i + n - 1);
        let next = v(i + 1);
        let (elbow, b, a, region) = match zz.triangle_of(i) {
            Some(t) => {
                let (j, j1) = t.base;
                let mid = p[j].midpoint(&m[j1]);
                let l = meet(&m[i], &p[i], v(i), &mid, "elbow")?;
                let b = meet(&p[j], &l, v(i), prev, "exit before")?;
                let a = meet(&m[j1], &l, v(i), next, "exit after")?;
                if inner_param(v(i), &m[i], &b).is_none() || inner_param(v(i), &p[i], &a).is_none()
                {
                    return Err(format!("exit points of vertex {i} off their edges"));
                }
                let region =
                    ConvexPolygon::new(vec![b.clone(), v(i).clone(), a.clone(), l.clone()])
                        .map_err(|e| format!("safe region of vertex {i}: {e}"))?;
                (Some(l), b, a, region)
            }
            None => {
                let region = ConvexPolygon::new(vec![m[i].clone(), v(i).clone(), p[i].clone()])
                    .map_err(|e| format!("safe region of vertex {i}: {e}"))?;
                (None, m[i].clone(), p[i].clone(), region)
            }
        };
        let tb = inner_param(v(i), prev, &b).expect("b on edge");
        let ta = inner_param(v(i), next, &a).expect("a on edge");
        let mut delta = eps * rat(1, 4);
        while delta >= tb || delta >= ta {
            delta *= rat(1, 2);
        }
        let x = along(v(i), prev, &delta);
        let w = along(v(i), next, &delta);
        let s = match &elbow {
            Some(l) => {
                let cut = meet(v(i), l, &x, &w, "apex split")?;
                let s0 = inner_param(&x, &w, &cut).ok_or("elbow line misses the apex triangle")?;
                simplest_dyadic_between(&s0, &Rat::one())
            }
            None => rat(1, 2),
        };
        let y = along(&x, &w, &s);
        parts.push(Partial {
            elbow,
            b,
            a,
            region,
            delta,
            x,
            y,
        });
    }

    let hull_pts: Vec<Point2> = parts
        .iter()
        .flat_map(|q| [q.x.clone(), q.y.clone()])
        .collect();
    let hull = convex_hull(&hull_pts).map_err(|e| format!("guard hull: {e}"))?;
    if hull.classes.iter().any(|c| *c != HullClass::Corner) {
        return Err("x and y guards not in convex position".into());
    }
    let inside_hull = hull.polygon.halfplanes();
    if parts
        .iter()
        .filter_map(|q| q.elbow.as_ref())
        .any(|l| !hull.polygon.contains(l, ContainMode::Open))
    {
        return Err("elbow guard outside the x/y hull".into());
    }

    let mut vertices = Vec::with_capacity(n);
    for i in 0..n {
        let q = &parts[i];
        let before = &parts[(i + n - 1) % n];
        let after = &parts[(i + 1) % n];
        let c = meet(&after.x, &q.y, v(i), v(i + n - 1), "point c")?;
        let side = |a: &Point2, b: &Point2, r: &Point2| {
            Halfplane::containing(a, b, r)
                .ok_or_else(|| format!("vertex {i}: reference on constraint line"))
        };
        let mut hs = inside_hull.clone();
        hs.push(side(&q.y, &q.b, &q.x)?);
        hs.push(side(&before.y, &c, &q.x)?);
        hs.push(side(&q.x, &q.a, &q.y)?);
        let cell =
            clip_polygon(&q.region, &hs).ok_or_else(|| format!("no room for z at vertex {i}"))?;
        let z = snap_in_frame(&cell, v(i), v(i + n - 1), v(i + 1));
        vertices.push(VertexScaffold {
            m: m[i].clone(),
            p: p[i].clone(),
            elbow: q.elbow.clone(),
            b: q.b.clone(),
            a: q.a.clone(),
            safe_region: q.region.clone(),
            delta: q.delta.clone(),
            x: q.x.clone(),
            y: q.y.clone(),
            z,
            c,
        });
    }
    debug_assert!(vertices.iter().all(|s| !s.delta.is_zero()));
    Ok(ConstructionScaffold {
        epsilon: eps.clone(),
        zigzag: zz,
        vertices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::stock_polygon;

    #[test]
    fn triangle_and_square_reach_the_bound() {
        for n in [3, 4] {
            let poly = stock_polygon(n).unwrap();
            let (g, s) = place_4n_minus_2(&poly).unwrap();
            assert_eq!(g.len(), 4 * n - 2);
            assert_eq!(s.vertices.len(), n);
            assert_eq!(
                s.vertices.iter().filter(|v| v.elbow.is_some()).count(),
                n - 2
            );
        }
    }

    #[test]
    fn safe_regions_are_disjoint() {
        let poly = stock_polygon(7).unwrap();
        let (_, s) = place_4n_minus_2(&poly).unwrap();
        for (i, a) in s.vertices.iter().enumerate() {
            for b in &s.vertices[i + 1..] {
                assert!(a.safe_region.disjoint(&b.safe_region));
            }
            assert!(a.safe_region.contains(&a.z, ContainMode::Open));
            assert!(a.safe_region.contains(&a.y, ContainMode::Open));
        }
    }
}
