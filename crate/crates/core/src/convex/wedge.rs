use super::general::place_general_position;
use crate::darkness::GuardSet;
use crate::error::{Error, Result};
use crate::fixtures::reference_wedge;
use crate::geom::{Affine, Wedge};

/// Guards needed to cover a wedge to depth `k`.
pub fn guards_for_wedge(k: usize) -> usize {
    match k {
        0..=2 => k,
        3..=9 => k + 1,
        _ => k + 2,
    }
}

/// The rational affine map taking the reference wedge onto `w`, apex to apex
/// and each boundary direction to the matching one.
pub fn wedge_map(w: &Wedge) -> Affine {
    let (src, _) = reference_wedge();
    let s0 = src.apex();
    let (s1, s2) = (s0 + src.dir1(), s0 + src.dir2());
    let d0 = w.apex();
    let (d1, d2) = (d0 + w.dir1(), d0 + w.dir2());
    Affine::from_triangles([s0, &s1, &s2], [d0, &d1, &d2]).expect("wedges are nondegenerate")
}

/// Guards covering the wedge to depth `k`.
///
/// Depth 1 uses the apex, depth 2 one point on each boundary ray, depths 3 to
/// 9 a prefix of the ten-guard configuration mapped onto `w`, and larger
/// depths a general-position placement.
pub fn place_wedge(w: &Wedge, k: usize) -> Result<GuardSet> {
    let g = guards_for_wedge(k);
    match k {
        0 => Err(Error::ZeroDepth),
        1 => GuardSet::new(vec![w.apex().clone()]),
        2 => GuardSet::new(vec![w.apex() + w.dir1(), w.apex() + w.dir2()]),
        3..=9 => {
            let map = wedge_map(w);
            let (_, reference) = reference_wedge();
            GuardSet::new(reference.iter().take(g).map(|p| map.apply(p)).collect())
        }
        _ => place_general_position(&w.clone().into(), g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::darkness::min_depth;
    use crate::geom::{Point2, Vector2};

    #[test]
    fn counts() {
        let got: Vec<usize> = (1..=11).map(guards_for_wedge).collect();
        assert_eq!(got, vec![1, 2, 4, 5, 6, 7, 8, 9, 10, 12, 13]);
    }

    #[test]
    fn small_depths_on_a_skewed_wedge() {
        let w = Wedge::new(
            Point2::from_ints(3, -1),
            Vector2::from_ints(5, 1),
            Vector2::from_ints(-1, 4),
        )
        .unwrap();
        for k in [1, 2, 3, 5, 9] {
            let g = place_wedge(&w, k).unwrap();
            assert_eq!(g.len(), guards_for_wedge(k));
            assert!(
                min_depth(&w.clone().into(), &g).unwrap().min_depth >= k,
                "k = {k}"
            );
        }
    }
}
