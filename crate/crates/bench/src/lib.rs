//! Shared inputs for the benchmarks.

use darkgallery_core::darkness::GuardSet;
use darkgallery_core::fixtures;
use darkgallery_core::geom::{ConvexRegion, SimplePolygon};
use darkgallery_core::simple::{comb_cover, make_comb};

/// Fixture regions with their guards, by name.
pub fn fixture_instances() -> Vec<(&'static str, ConvexRegion, GuardSet)> {
    let (t, tg) = fixtures::reference_triangle();
    let (s, sg) = fixtures::reference_square();
    let (w, wg) = fixtures::reference_wedge();
    vec![
        ("triangle", t.into(), tg),
        ("square", s.into(), sg),
        ("wedge", w.into(), wg),
    ]
}

/// The comb with three spikes and its depth-4 cover.
pub fn comb_instance() -> (SimplePolygon, GuardSet) {
    let comb = make_comb(3).expect("three spikes");
    let guards = comb_cover(&comb, 4).expect("cover");
    (comb.polygon, guards)
}
