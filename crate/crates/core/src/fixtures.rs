//! Reference guard placements and stock shapes.
//!
//! The triangle uses rational corners `(0, 200)`, `(±173.2, -100)` in place of
//! `±100√3`; the 3-fold symmetry is the rational affine map cycling the
//! corners, which fixes the centroid at the origin. Its base guard nearest the
//! bottom edge sits at `y = -97` rather than the tabulated `-96`: completed by
//! the 3-fold symmetry, the tabulated value leaves six 2-dark points.
//!
//! The wedge keeps the tabulated edge guards `(±38.1, 134)` but moves the
//! others: the tabulated table has thirteen 2-dark points, among them
//! `(128, -300)`, where the dark rays at `(8, 150)` and `(41, 120)` meet.

use rand::Rng;

use crate::darkness::GuardSet;
use crate::geom::{int, rat, Affine, ConvexPolygon, Point2, Rat, SimplePolygon, Vector2, Wedge};

fn p(x: Rat, y: Rat) -> Point2 {
    Point2::new(x, y)
}

/// Rational stand-in for 100√3.
pub fn triangle_half_width() -> Rat {
    rat(866, 5)
}

/// Equilateral-looking triangle with corners (0,200), (-173.2,-100), (173.2,-100).
pub fn reference_triangle_region() -> ConvexPolygon {
    let s = triangle_half_width();
    ConvexPolygon::new(vec![
        p(-s.clone(), int(-100)),
        p(s, int(-100)),
        p(int(0), int(200)),
    ])
    .expect("triangle")
}

/// The affine map sending top -> left -> right -> top.
pub fn triangle_turn() -> Affine {
    let t = reference_triangle_region();
    let v = t.vertices();
    // vertices: left, right, top
    Affine::from_triangles([&v[2], &v[0], &v[1]], [&v[0], &v[1], &v[2]]).expect("triangle")
}

/// Ten guards with no 2-dark point: three near each corner plus the centre.
pub fn reference_triangle() -> (ConvexPolygon, GuardSet) {
    let base = [
        p(rat(-10257, 100), int(-97)),
        p(rat(-1026, 10), int(-100)),
        p(int(-118), int(-49)),
    ];
    let turn = triangle_turn();
    let mut guards = Vec::with_capacity(10);
    for b in &base {
        let once = turn.apply(b);
        let twice = turn.apply(&once);
        guards.extend([b.clone(), once, twice]);
    }
    guards.push(Point2::origin());
    (
        reference_triangle_region(),
        GuardSet::new(guards).expect("distinct"),
    )
}

/// Square with corners (±200, ±200).
pub fn reference_square_region() -> ConvexPolygon {
    ConvexPolygon::new(vec![
        Point2::from_ints(-200, -200),
        Point2::from_ints(200, -200),
        Point2::from_ints(200, 200),
        Point2::from_ints(-200, 200),
    ])
    .expect("square")
}

/// Fourteen guards with no 2-dark point: two elbows and a triple per corner.
pub fn reference_square() -> (ConvexPolygon, GuardSet) {
    let triple = [
        Point2::from_ints(-180, -180),
        p(int(-198), rat(-1377, 10)),
        p(int(-200), int(-135)),
    ];
    let mut guards = vec![Point2::from_ints(-65, -120), Point2::from_ints(65, 120)];
    let turn = Affine::quarter_turn();
    let mut corner: Vec<Point2> = triple.to_vec();
    for _ in 0..4 {
        guards.extend(corner.iter().cloned());
        corner = corner.iter().map(|q| turn.apply(q)).collect();
    }
    (
        reference_square_region(),
        GuardSet::new(guards).expect("distinct"),
    )
}

/// Wedge with apex (0,200) opening downward; the edges pass through (±38.1, 134).
pub fn reference_wedge_region() -> Wedge {
    Wedge::new(
        Point2::from_ints(0, 200),
        Vector2::from_ints(-381, -660),
        Vector2::from_ints(381, -660),
    )
    .expect("wedge")
}

/// Ten guards in the wedge with no 2-dark point, numbered bottom to top.
pub fn reference_wedge() -> (Wedge, GuardSet) {
    let guards = vec![
        Point2::from_ints(0, -1700),
        Point2::from_ints(-20, -275),
        Point2::from_ints(-74, 40),
        Point2::from_ints(74, 40),
        Point2::from_ints(-43, 121),
        Point2::from_ints(43, 121),
        p(rat(-381, 10), int(134)),
        p(rat(381, 10), int(134)),
        Point2::from_ints(10, 151),
        Point2::from_ints(0, 178),
    ];
    (
        reference_wedge_region(),
        GuardSet::new(guards).expect("distinct"),
    )
}

/// The tabulated triangle table completed by symmetry, on the same rational
/// corners. Its base guard sits at `y = -96`, which leaves 2-dark points.
pub fn tabulated_triangle() -> (ConvexPolygon, GuardSet) {
    let base = [
        p(rat(-10257, 100), int(-96)),
        p(rat(-1026, 10), int(-100)),
        p(int(-118), int(-49)),
    ];
    let turn = triangle_turn();
    let mut guards = Vec::with_capacity(10);
    for b in &base {
        let once = turn.apply(b);
        let twice = turn.apply(&once);
        guards.extend([b.clone(), once, twice]);
    }
    guards.push(Point2::origin());
    (
        reference_triangle_region(),
        GuardSet::new(guards).expect("distinct"),
    )
}

/// The tabulated wedge table, verbatim. It has 2-dark points.
pub fn tabulated_wedge() -> (Wedge, GuardSet) {
    let guards = vec![
        Point2::from_ints(0, -600),
        Point2::from_ints(-9, -270),
        Point2::from_ints(-70, 50),
        Point2::from_ints(70, 50),
        Point2::from_ints(-41, 120),
        Point2::from_ints(41, 120),
        p(rat(-381, 10), int(134)),
        p(rat(381, 10), int(134)),
        Point2::from_ints(8, 150),
        Point2::from_ints(0, 180),
    ];
    (
        reference_wedge_region(),
        GuardSet::new(guards).expect("distinct"),
    )
}

/// Integer convex polygon with `n` vertices (3 to 8) used by the stock shapes.
pub fn stock_polygon(n: usize) -> Option<ConvexPolygon> {
    let pts: &[(i64, i64)] = match n {
        3 => return Some(reference_triangle_region()),
        4 => return Some(reference_square_region()),
        5 => &[(0, 200), (-190, 62), (-118, -162), (118, -162), (190, 62)],
        6 => &[
            (200, 0),
            (100, 173),
            (-100, 173),
            (-200, 0),
            (-100, -173),
            (100, -173),
        ],
        7 => &[
            (200, 0),
            (125, 156),
            (-45, 195),
            (-180, 87),
            (-180, -87),
            (-45, -195),
            (125, -156),
        ],
        8 => &[
            (200, 0),
            (141, 141),
            (0, 200),
            (-141, 141),
            (-200, 0),
            (-141, -141),
            (0, -200),
            (141, -141),
        ],
        _ => return None,
    };
    ConvexPolygon::normalized(pts.iter().map(|&(x, y)| Point2::from_ints(x, y)).collect()).ok()
}

/// Random strictly convex polygon with `n` integer vertices near a circle of
/// radius `r` (at least 3 vertices; `r` large enough for `n` distinct angles).
pub fn random_convex_polygon<R: Rng + ?Sized>(rng: &mut R, n: usize, r: f64) -> ConvexPolygon {
    assert!(n >= 3);
    loop {
        let mut angles: Vec<f64> = (0..n)
            .map(|_| rng.gen_range(0.0..std::f64::consts::TAU))
            .collect();
        angles.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
        let pts: Vec<Point2> = angles
            .iter()
            .map(|a| Point2::from_ints((r * a.cos()).round() as i64, (r * a.sin()).round() as i64))
            .collect();
        if let Ok(p) = ConvexPolygon::new(pts) {
            return p;
        }
    }
}

/// Random star-shaped simple polygon with `n` integer vertices, radii between
/// `r / 3` and `r` around the origin.
pub fn random_simple_polygon<R: Rng + ?Sized>(rng: &mut R, n: usize, r: f64) -> SimplePolygon {
    assert!(n >= 3);
    loop {
        let mut angles: Vec<f64> = (0..n)
            .map(|_| rng.gen_range(0.0..std::f64::consts::TAU))
            .collect();
        angles.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
        let pts: Vec<Point2> = angles
            .iter()
            .map(|a| {
                let rho = rng.gen_range(r / 3.0..r);
                Point2::from_ints(
                    (rho * a.cos()).round() as i64,
                    (rho * a.sin()).round() as i64,
                )
            })
            .collect();
        if let Ok(p) = SimplePolygon::new(pts) {
            return p;
        }
    }
}
