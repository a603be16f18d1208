use darkgallery_core::convex::place_4n_minus_2;
use darkgallery_core::darkness::{min_depth, DarkArrangement, GuardSet};
use darkgallery_core::fixtures::{random_convex_polygon, random_simple_polygon};
use darkgallery_core::geom::{
    int, rat, Affine, ContainMode, ConvexPolygon, Point2, RayClip, SimplePolygon, Vector2, Wedge,
};
use darkgallery_core::sampling::{sample_depth, visible, Sampler};
use darkgallery_core::simple::{
    arc_is_convex, fisk_cover, fisk_plan, make_comb, smallest_class, three_color, triangulate,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn as_simple(p: &ConvexPolygon) -> SimplePolygon {
    SimplePolygon::new(p.vertices().to_vec()).unwrap()
}

/// Distinct integer points strictly inside `inside`, drawn from a box.
/// `None` when a sliver keeps rejecting draws.
fn interior_points(
    rng: &mut ChaCha8Rng,
    count: usize,
    r: i64,
    inside: impl Fn(&Point2) -> bool,
) -> Option<Vec<Point2>> {
    let mut pts: Vec<Point2> = Vec::new();
    for _ in 0..count * 2000 {
        if pts.len() == count {
            break;
        }
        let q = Point2::from_ints(rng.gen_range(-r..=r), rng.gen_range(-r..=r));
        if inside(&q) && !pts.contains(&q) {
            pts.push(q);
        }
    }
    (pts.len() == count).then_some(pts)
}

fn sliver() -> TestCaseError {
    TestCaseError::reject("sliver polygon")
}

fn convex_instance(seed: u64, guards: usize) -> Result<(ConvexPolygon, GuardSet), TestCaseError> {
    let mut rng = rng(seed);
    let n = rng.gen_range(3..=7);
    let p = random_convex_polygon(&mut rng, n, 200.0);
    let mut pts = interior_points(&mut rng, guards, 200, |q| p.contains(q, ContainMode::Open))
        .ok_or_else(sliver)?;
    // Put a third guard between the first two now and then.
    if guards >= 3 && seed.is_multiple_of(3) {
        let m = pts[0].midpoint(&pts[1]);
        if !pts.contains(&m) {
            pts[2] = m;
        }
    }
    Ok((p, GuardSet::new(pts).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn depth_is_affine_invariant(
        seed in any::<u64>(),
        g in 2usize..8,
        m in prop::array::uniform4(-5i64..=5),
        t in prop::array::uniform2(-100i64..=100),
    ) {
        prop_assume!(m[0] * m[3] - m[1] * m[2] != 0);
        let (p, guards) = convex_instance(seed, g)?;
        let a = Affine::new(
            [[int(m[0]), int(m[1])], [int(m[2]), int(m[3])]],
            [int(t[0]), int(t[1])],
        );
        let q = ConvexPolygon::normalized(p.vertices().iter().map(|v| a.apply(v)).collect()).unwrap();
        let mapped = GuardSet::new(guards.iter().map(|v| a.apply(v)).collect()).unwrap();
        let before = min_depth(&p.into(), &guards).unwrap();
        let after = min_depth(&q.into(), &mapped).unwrap();
        prop_assert_eq!(before.min_depth, after.min_depth);
        let image = DarkArrangement::new(&mapped).darkness_at(&a.apply(&before.witness.point));
        prop_assert_eq!(image.darkness, before.max_darkness);
    }

    #[test]
    fn sampled_depth_matches_dark_rays_in_convex_polygons(seed in any::<u64>(), g in 2usize..7) {
        let (p, guards) = convex_instance(seed, g)?;
        let report = sample_depth(&as_simple(&p), &guards, &Sampler::Grid { resolution: 6 }, 0);
        let arr = DarkArrangement::new(&guards);
        for (q, d) in &report.samples {
            prop_assert_eq!(*d, guards.len() - arr.darkness_at(q).darkness, "at {}", q);
        }
        let exact = min_depth(&p.into(), &guards).unwrap();
        prop_assert!(report.min_sampled_depth >= exact.min_depth);
    }

    #[test]
    fn adding_a_guard_moves_depth_by_at_most_one(seed in any::<u64>(), g in 2usize..7) {
        let (p, guards) = convex_instance(seed, g + 1)?;
        let mut pts = guards.into_points();
        let extra = pts.pop().unwrap();
        let old = GuardSet::new(pts.clone()).unwrap();
        pts.push(extra);
        let new = GuardSet::new(pts).unwrap();
        let (a, b) = (DarkArrangement::new(&old), DarkArrangement::new(&new));
        let mut r = rng(seed ^ 0x5eed);
        let probes = interior_points(&mut r, 20, 200, |q| p.contains(q, ContainMode::Closed))
            .ok_or_else(sliver)?;
        for q in probes.iter().chain(p.vertices()).chain(new.iter()) {
            let (d0, d1) = (a.darkness_at(q).darkness, b.darkness_at(q).darkness);
            prop_assert!(d1 >= d0 && d1 <= d0 + 2, "darkness {} then {} at {}", d0, d1, q);
            let (s0, s1) = (old.len() - d0, new.len() - d1);
            prop_assert!(s1 + 1 >= s0 && s1 <= s0 + 1);
        }
    }

    #[test]
    fn clipped_rays_end_on_the_boundary(
        seed in any::<u64>(),
        o in prop::array::uniform2(-300i64..=300),
        d in prop::array::uniform2(-20i64..=20),
    ) {
        prop_assume!(d != [0, 0]);
        let mut r = rng(seed);
        let n = r.gen_range(3..=8);
        let p = random_convex_polygon(&mut r, n, 200.0);
        let origin = Point2::from_ints(o[0], o[1]);
        let dir = Vector2::from_ints(d[0], d[1]);
        let hs = p.halfplanes();
        let on_boundary = |t: &darkgallery_core::geom::Rat| {
            let q = &origin + &dir.scale(t);
            hs.iter().all(|h| h.contains(&q, ContainMode::Closed))
                && hs.iter().any(|h| h.value(&q) == int(0))
        };
        match p.clip_ray(&origin, &dir) {
            RayClip::Segment { lo, hi } => {
                prop_assert!(lo <= hi);
                prop_assert!(on_boundary(&hi));
                if lo > int(0) {
                    prop_assert!(on_boundary(&lo));
                } else {
                    prop_assert!(p.contains(&origin, ContainMode::Closed));
                }
            }
            RayClip::Ray { .. } => prop_assert!(false, "bounded polygon gave a ray"),
            RayClip::Empty => {
                // No sample along the ray is inside.
                for k in 0..64 {
                    let q = &origin + &dir.scale(&rat(k, 1));
                    prop_assert!(!p.contains(&q, ContainMode::Open));
                }
            }
        }
        let w = Wedge::new(Point2::origin(), Vector2::from_ints(1, 0), Vector2::from_ints(0, 1)).unwrap();
        if let RayClip::Ray { lo } = w.clip_ray(&origin, &dir) {
            let q = &origin + &dir.scale(&lo);
            prop_assert!(w.contains(&q, ContainMode::Closed));
            prop_assert!(lo == int(0) || q.x == int(0) || q.y == int(0));
        }
    }

    #[test]
    fn visibility_is_symmetric(seed in any::<u64>(), g in 1usize..6) {
        let mut r = rng(seed);
        let n = r.gen_range(5..=12);
        let p = random_simple_polygon(&mut r, n, 100.0);
        let mut pts = interior_points(&mut r, g + 4, 100, |q| p.contains_open(q)).ok_or_else(sliver)?;
        pts.extend(p.vertices().iter().take(2).cloned());
        let guards = GuardSet::new(pts[..g].to_vec()).unwrap();
        for a in &pts {
            for b in &pts {
                prop_assert_eq!(
                    visible(&p, &guards, a, b),
                    visible(&p, &guards, b, a),
                    "{} {}", a, b
                );
            }
        }
    }

    #[test]
    fn three_coloring_is_proper(seed in any::<u64>(), n in 3usize..30) {
        let p = random_simple_polygon(&mut rng(seed), n, 1000.0);
        let t = triangulate(&p).unwrap();
        prop_assert_eq!(t.triangles.len(), n - 2);
        let c = three_color(&p, &t).unwrap();
        for tri in &t.triangles {
            prop_assert!(c[tri[0]] != c[tri[1]] && c[tri[1]] != c[tri[2]] && c[tri[0]] != c[tri[2]]);
        }
        prop_assert!(smallest_class(&c).1.len() <= n / 3);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn safe_regions_are_disjoint(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(3..=7);
        let p = random_convex_polygon(&mut r, n, 1000.0);
        let (guards, scaffold) = place_4n_minus_2(&p).unwrap();
        prop_assert_eq!(guards.len(), 4 * n - 2);
        let v = &scaffold.vertices;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                prop_assert!(v[i].safe_region.disjoint(&v[j].safe_region), "{} {}", i, j);
            }
            for g in [&v[i].x, &v[i].y, &v[i].z] {
                prop_assert!(v[i].safe_region.contains(g, ContainMode::Closed));
            }
        }
    }

    #[test]
    fn fisk_guard_count(seed in any::<u64>(), n in 5usize..15, k in 1usize..=3) {
        let p = random_simple_polygon(&mut rng(seed), n, 1000.0);
        let plan = fisk_plan(&p).unwrap();
        let g = fisk_cover(&p, k).unwrap();
        prop_assert_eq!(g.len(), (k + 2) * plan.chosen.len());
        prop_assert!(g.iter().all(|q| p.contains_closed(q)));
        for arc in g.points().chunks(k + 2) {
            prop_assert!(arc_is_convex(arc));
        }
    }

    #[test]
    fn comb_spikes_hide_each_other(
        s in 2usize..7,
        pick in any::<(usize, usize)>(),
        a in (1i64..40, -7i64..=7),
        b in (1i64..40, -7i64..=7),
    ) {
        let comb = make_comb(s).unwrap();
        let (i, j) = (pick.0 % s, pick.1 % s);
        prop_assume!(i != j);
        // Height 1 + h/10, offset within the spike's half width (5 - y) / 8.
        let deep = |spike: usize, (h, t): (i64, i64)| {
            let y = rat(10 + h, 10);
            let half = (int(5) - &y) / int(8);
            Point2::new(int(2 * spike as i64 + 1) + half * rat(t, 8), y)
        };
        let (p, q) = (deep(i, a), deep(j, b));
        prop_assert_eq!(comb.spike_of(&p), Some(i));
        prop_assert_eq!(comb.spike_of(&q), Some(j));
        let lone = GuardSet::new(vec![Point2::new(rat(1, 2), rat(1, 2))]).unwrap();
        prop_assert!(!visible(&comb.polygon, &lone, &p, &q));
    }
}

#[test]
fn sliver_instances_are_rejected_not_retried_forever() {
    // This seed draws a convex polygon with almost no interior lattice points.
    assert!(convex_instance(1521464179561945278, 6).is_err());
}
