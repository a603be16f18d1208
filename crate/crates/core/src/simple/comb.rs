use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::convex::radical_inverse;
use crate::darkness::{max_darkness, GuardSet};
use crate::error::{Error, Result};
use crate::geom::{floor_int, int, rat, ConvexPolygon, Point2, Rat, SimplePolygon};

/// Height of the corridor the spikes rise from.
const CORRIDOR: i64 = 1;
/// Spike tips sit at this height; spikes are four times as tall as the corridor.
const TIP: i64 = 5;

/// A comb: a corridor `0 <= y <= 1` with `s` spikes of width 1 and height 4
/// above it, centred at `x = 1, 3, ..., 2s - 1`. The outer walls of the first
/// and last spike run straight down to the floor, which keeps `n = 3s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comb {
    pub spike_count: usize,
    pub polygon: SimplePolygon,
    /// Per spike, the x interval where it meets the corridor ceiling.
    pub spike_apertures: Vec<(Rat, Rat)>,
    /// The polygon below the ceiling.
    pub corridor: ConvexPolygon,
}

fn centre(i: usize) -> Rat {
    int(2 * i as i64 + 1)
}

impl Comb {
    pub fn tip(&self, i: usize) -> Point2 {
        Point2::new(centre(i), int(TIP))
    }

    pub fn ceiling(&self) -> Rat {
        int(CORRIDOR)
    }

    /// The spike containing `p`, if `p` is above the ceiling. Above it the
    /// spikes are disjoint and spike `i` lies within `2i < x < 2i + 2`.
    pub fn spike_of(&self, p: &Point2) -> Option<usize> {
        if p.y <= self.ceiling() || !self.polygon.contains_closed(p) {
            return None;
        }
        floor_int(&(&p.x / int(2))).to_usize()
    }
}

/// The comb with `s >= 2` spikes.
pub fn make_comb(s: usize) -> Result<Comb> {
    if s < 2 {
        return Err(Error::InvalidInput(format!(
            "a comb needs at least 2 spikes, got {s}"
        )));
    }
    let width = int(2 * s as i64);
    let half = rat(1, 2);
    let ceiling = int(CORRIDOR);
    let tip = |i: usize| Point2::new(centre(i), int(TIP));
    let mut v = vec![
        Point2::origin(),
        Point2::new(width.clone(), int(0)),
        tip(s - 1),
    ];
    for i in (1..s).rev() {
        v.push(Point2::new(centre(i) - &half, ceiling.clone()));
        v.push(Point2::new(centre(i - 1) + &half, ceiling.clone()));
        v.push(tip(i - 1));
    }
    let polygon = SimplePolygon::new(v)?;
    // Outer walls meet the ceiling 1/5 in from the floor corners.
    let inset = rat(CORRIDOR, TIP);
    let spike_apertures = (0..s)
        .map(|i| {
            let lo = if i == 0 {
                inset.clone()
            } else {
                centre(i) - &half
            };
            let hi = if i + 1 == s {
                &width - &inset
            } else {
                centre(i) + &half
            };
            (lo, hi)
        })
        .collect();
    let corridor = ConvexPolygon::new(vec![
        Point2::origin(),
        Point2::new(width.clone(), int(0)),
        Point2::new(&width - &inset, ceiling.clone()),
        Point2::new(inset, ceiling),
    ])?;
    Ok(Comb {
        spike_count: s,
        polygon,
        spike_apertures,
        corridor,
    })
}

const STAGGER_TRIES: u64 = 32;

/// `k` guards on a flat convex arc below each spike, arc by arc from the left.
///
/// Arc heights are staggered by distinct offsets, and the result is checked
/// exactly: the corridor has no 3-dark point and no dark ray leaves the
/// corridor through the ceiling, so none enters a spike.
pub fn comb_cover(comb: &Comb, k: usize) -> Result<GuardSet> {
    if k < 2 {
        return Err(Error::InvalidInput(format!(
            "comb covers need depth at least 2, got {k}"
        )));
    }
    let mut last = None;
    for shift in 0..STAGGER_TRIES {
        let guards = GuardSet::new(arcs(comb, k, Some(shift)))?;
        let w = max_darkness(&comb.corridor.clone().into(), &guards)?;
        if w.darkness > 2 {
            last = Some(w.point);
            continue;
        }
        if rays_stay_low(comb, &guards) {
            return Ok(guards);
        }
    }
    Err(Error::ConstructionFailed {
        reason: "no stagger kept the corridor free of 3-dark points".into(),
        witness: last,
    })
}

/// Same arcs without staggering. Arcs are translates of each other, so many
/// guards line up; kept to show what staggering prevents.
pub fn comb_cover_unstaggered(comb: &Comb, k: usize) -> Result<GuardSet> {
    if k < 2 {
        return Err(Error::InvalidInput(format!(
            "comb covers need depth at least 2, got {k}"
        )));
    }
    GuardSet::new(arcs(comb, k, None))
}

fn arcs(comb: &Comb, k: usize, shift: Option<u64>) -> Vec<Point2> {
    let s = comb.spike_count;
    let s_rat = Rat::from_integer(BigInt::from(s));
    // Curvature and stagger spread shrink with s so that every guard line
    // rises less than the corridor height over the corridor length.
    let curve = rat(1, 8) / &s_rat;
    let spread = rat(1, 8) / &s_rat;
    let base = rat(3, 8);
    let reach = rat(1, 4);
    let mut out = Vec::with_capacity(k * s);
    for i in 0..s {
        let lift = match shift {
            Some(shift) => &spread * radical_inverse(i as u64 + 1 + shift, 2),
            None => Rat::zero(),
        };
        for m in 0..k {
            // Slot m of 2 reach / k, at a jittered spot when staggering so
            // that arcs are neither symmetric nor translates of each other.
            let jitter = match shift {
                Some(shift) => {
                    rat(1, 4) + radical_inverse((i * k + m) as u64 + 1 + shift, 3) * rat(1, 2)
                }
                None => rat(1, 2),
            };
            let t = -&reach + &reach * rat(2, k as i64) * (rat(m as i64, 1) + jitter);
            let y = &base + &lift + &curve * &t * &t;
            out.push(Point2::new(centre(i) + &t, y));
        }
    }
    out
}

/// True if every dark ray leaves the corridor below the ceiling.
pub fn rays_stay_low(comb: &Comb, guards: &GuardSet) -> bool {
    let ceiling = comb.ceiling();
    let (lo, hi) = (
        &comb.spike_apertures[0].0,
        &comb.spike_apertures[comb.spike_count - 1].1,
    );
    for a in guards.iter() {
        for b in guards.iter() {
            if a == b {
                continue;
            }
            let d = a - b;
            if !d.y.is_positive() {
                continue;
            }
            let x = &a.x + &d.x * (&ceiling - &a.y) / &d.y;
            if x >= *lo && x <= *hi {
                return false;
            }
        }
    }
    true
}
