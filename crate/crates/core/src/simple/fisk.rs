use num_traits::{One, Zero};

use super::triangulate::{smallest_class, three_color, triangulate, Triangulation};
use crate::convex::general::Placer;
use crate::convex::radical_inverse;
use crate::darkness::GuardSet;
use crate::error::{Error, Result};
use crate::geom::{
    convex_hull, orientation, rat, HullClass, Orientation, Point2, Rat, SimplePolygon, Vector2,
    Wedge,
};

/// Triangulation, coloring and the cones at the chosen vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiskPlan {
    pub triangulation: Triangulation,
    /// Color 1, 2 or 3 per vertex.
    pub coloring: Vec<u8>,
    pub chosen_class: u8,
    /// Vertices of the chosen class, in index order.
    pub chosen: Vec<usize>,
    /// Per chosen vertex: at a convex vertex the cone between its edges, at a
    /// reflex vertex the anticone between the extensions of its edges, at a
    /// straight vertex a cone inside the open halfplane.
    pub cones: Vec<Wedge>,
}

pub fn fisk_plan(polygon: &SimplePolygon) -> Result<FiskPlan> {
    let triangulation = triangulate(polygon)?;
    let coloring = three_color(polygon, &triangulation)?;
    let (chosen_class, chosen) = smallest_class(&coloring);
    let cones = chosen
        .iter()
        .map(|&i| cone_at(polygon, i))
        .collect::<Result<_>>()?;
    Ok(FiskPlan {
        triangulation,
        coloring,
        chosen_class,
        chosen,
        cones,
    })
}

/// The cone or anticone at vertex `i`; directions are the edge vectors or
/// their reversals, so the bounding rays are the edges or their extensions.
pub fn cone_at(polygon: &SimplePolygon, i: usize) -> Result<Wedge> {
    let n = polygon.len();
    let (u, v, w) = (
        polygon.vertex(i + n - 1),
        polygon.vertex(i),
        polygon.vertex(i + 1),
    );
    match orientation(u, v, w) {
        Orientation::CounterClockwise => Wedge::new(v.clone(), w - v, u - v),
        Orientation::Clockwise => Wedge::new(v.clone(), v - u, v - w),
        Orientation::Collinear => {
            let e = w - v;
            let inward = Vector2::new(-e.y.clone(), e.x.clone());
            Wedge::new(v.clone(), &e + &inward, &(u - v) + &inward)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiskOptions {
    /// Arc size as a fraction of the largest cone triangle `v, v + r d1,
    /// v + r d2` (r a power of two) that lies inside the polygon.
    pub arc_scale: Rat,
}

impl Default for FiskOptions {
    fn default() -> Self {
        FiskOptions {
            arc_scale: rat(1, 2),
        }
    }
}

/// `(k + 2) |chosen|` guards, `k + 2` on a convex arc in each chosen cone.
pub fn fisk_cover(polygon: &SimplePolygon, k: usize) -> Result<GuardSet> {
    fisk_cover_with(polygon, k, &FiskOptions::default())
}

const HALVINGS: u32 = 40;
const NUDGES: u64 = 64;

pub fn fisk_cover_with(polygon: &SimplePolygon, k: usize, opts: &FiskOptions) -> Result<GuardSet> {
    if k == 0 {
        return Err(Error::ZeroDepth);
    }
    if !(opts.arc_scale > Rat::zero() && opts.arc_scale <= Rat::one()) {
        return Err(Error::InvalidInput(format!(
            "arc scale must lie in (0, 1], got {}",
            opts.arc_scale
        )));
    }
    let plan = fisk_plan(polygon)?;
    let mut placer = Placer::new();
    for (&v, cone) in plan.chosen.iter().zip(&plan.cones) {
        let fan: Vec<[usize; 3]> = plan
            .triangulation
            .triangles
            .iter()
            .filter(|t| t.contains(&v))
            .copied()
            .collect();
        let mut r = largest_inside(polygon, cone)? * &opts.arc_scale;
        let mut placed = None;
        for _ in 0..HALVINGS {
            if let Some(next) = place_arc(polygon, &fan, cone, &r, k + 2, &placer) {
                placed = Some(next);
                break;
            }
            r *= rat(1, 2);
        }
        placer = placed.ok_or_else(|| Error::ConstructionFailed {
            reason: format!("no arc at vertex {v} sees its triangles"),
            witness: Some(polygon.vertex(v).clone()),
        })?;
    }
    GuardSet::new(placer.guards)
}

fn cone_triangle(cone: &Wedge, r: &Rat) -> Vec<Point2> {
    let v = cone.apex();
    vec![
        v.clone(),
        v + &cone.dir1().scale(r),
        v + &cone.dir2().scale(r),
    ]
}

fn largest_inside(polygon: &SimplePolygon, cone: &Wedge) -> Result<Rat> {
    let mut r = Rat::one();
    for _ in 0..HALVINGS {
        let tri = convex_hull(&cone_triangle(cone, &r))?.polygon;
        if polygon.contains_convex(&tri) {
            return Ok(r);
        }
        r *= rat(1, 2);
    }
    Err(Error::ConstructionFailed {
        reason: "cone has no room inside the polygon".into(),
        witness: Some(cone.apex().clone()),
    })
}

/// Point at parameter `t` of the quadratic arc from `v + r d1 / 2` to
/// `v + r d2 / 2` bulging towards `v + r (d1 + d2) / 2`.
fn arc_point(cone: &Wedge, r: &Rat, t: &Rat) -> Point2 {
    let half = r * rat(1, 2);
    let one = Rat::one();
    let a = &half * (&one - t * t);
    let b = &half * (rat(2, 1) * t - t * t);
    &(cone.apex() + &cone.dir1().scale(&a)) + &cone.dir2().scale(&b)
}

/// Does `g` see every triangle of the fan: the hull of `g` and each triangle
/// lies in the polygon.
fn sees_fan(polygon: &SimplePolygon, fan: &[[usize; 3]], g: &Point2) -> bool {
    fan.iter().all(|t| {
        let pts = [
            g.clone(),
            polygon.vertex(t[0]).clone(),
            polygon.vertex(t[1]).clone(),
            polygon.vertex(t[2]).clone(),
        ];
        match convex_hull(&pts) {
            Ok(h) => polygon.contains_convex(&h.polygon),
            // A zero-area triangle with g on its line.
            Err(_) => true,
        }
    })
}

/// Place `count` guards on the arc of size `r`, each in its own parameter
/// slot, nudged within the slot until admissible. `None` if some slot only
/// offers points that miss part of the fan.
fn place_arc(
    polygon: &SimplePolygon,
    fan: &[[usize; 3]],
    cone: &Wedge,
    r: &Rat,
    count: usize,
    placer: &Placer,
) -> Option<Placer> {
    let mut placer = placer.clone();
    let slot = rat(1, count as i64 + 1);
    for m in 0..count {
        let centre = &slot * rat(m as i64 + 1, 1);
        let mut done = false;
        for j in 0..NUDGES {
            let offset = if j == 0 {
                Rat::zero()
            } else {
                (radical_inverse(j, 2) - rat(1, 2)) * &slot * rat(1, 2)
            };
            let g = arc_point(cone, r, &(&centre + offset));
            if !sees_fan(polygon, fan, &g) {
                return None;
            }
            if placer.admissible(&g) {
                placer.push(g);
                done = true;
                break;
            }
        }
        if !done {
            return None;
        }
    }
    Some(placer)
}

/// True if the points are in strictly convex position.
pub fn arc_is_convex(points: &[Point2]) -> bool {
    points.len() < 3
        || convex_hull(points).is_ok_and(|h| h.classes.iter().all(|c| *c == HullClass::Corner))
}
