//! Dark rays and exact depth certification.
//!
//! Guards on a common line block each other: a guard sees only its immediate
//! neighbours along that line. Cutting the line at its guards gives open
//! portions, each hidden from a fixed number of the line's guards. The
//! darkness of a point is the total number of guards it cannot see, which is
//! the sum of those counts over the guard lines through it; depth is the guard
//! count minus darkness. [`max_darkness`] finds the darkest point exactly by
//! checking a finite candidate set.

mod census;
mod scan;

use std::collections::{BTreeSet, HashMap, HashSet};

use num_traits::Zero;

pub use census::{boundary_census, BoundaryCensus, CensusViolation};
pub use scan::{
    has_j_dark, max_darkness, max_ray_concurrency, min_depth, scan_darkness, Candidate,
    CandidateKind, DarknessScan, DepthCertificate,
};

use crate::error::{Error, Result};
use crate::geom::hom::Hom3;
use crate::geom::{ContainMode, ConvexRegion, Line, Point2, Rat};

/// Distinct guard positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuardSet {
    guards: Vec<Point2>,
}

impl GuardSet {
    pub fn new(guards: Vec<Point2>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(guards.len());
        for g in &guards {
            if !seen.insert(g) {
                return Err(Error::CoLocatedGuards(g.clone()));
            }
        }
        Ok(GuardSet { guards })
    }

    pub fn points(&self) -> &[Point2] {
        &self.guards
    }

    pub fn len(&self) -> usize {
        self.guards.len()
    }

    pub fn is_empty(&self) -> bool {
        self.guards.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point2> {
        self.guards.iter()
    }

    pub fn into_points(self) -> Vec<Point2> {
        self.guards
    }

    /// Error on the first guard outside the closed region.
    pub fn check_inside(&self, region: &ConvexRegion) -> Result<()> {
        match self
            .guards
            .iter()
            .find(|g| !region.contains(g, ContainMode::Closed))
        {
            Some(g) => Err(Error::GuardOutsideRegion(g.clone())),
            None => Ok(()),
        }
    }
}

/// A maximal set of at least two collinear guards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuardLine {
    /// Guard indices, in lexicographic order of position.
    pub members: Vec<usize>,
    /// Member positions, same order.
    pub points: Vec<Point2>,
    params: Vec<Rat>,
    carrier: Line,
    coeffs: Hom3,
}

impl GuardLine {
    fn new(guards: &[Point2], mut members: Vec<usize>) -> Self {
        members.sort_by(|&a, &b| guards[a].cmp(&guards[b]));
        let points: Vec<Point2> = members.iter().map(|&i| guards[i].clone()).collect();
        let carrier = Line::through(&points[0], &points[1]).expect("distinct guards");
        let params = points.iter().map(|p| carrier.param_of(p)).collect();
        let coeffs = Hom3::point(&points[0]).cross(&Hom3::point(&points[1]));
        GuardLine {
            members,
            points,
            params,
            carrier,
            coeffs,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Line through the first two members, directed first to second.
    pub fn carrier(&self) -> &Line {
        &self.carrier
    }

    /// Member parameters along [`GuardLine::carrier`]: 0, 1, then increasing.
    pub fn params(&self) -> &[Rat] {
        &self.params
    }

    /// Guards of this line hidden from the member at position `j`.
    pub fn blocked_at_member(&self, j: usize) -> usize {
        let m = self.len();
        j.saturating_sub(1) + (m - j - 1).saturating_sub(1)
    }

    /// Guards of this line hidden from `p`; `None` if `p` is off the line.
    pub fn blocked_at(&self, p: &Point2) -> Option<usize> {
        self.blocked_at_hom(p, &Hom3::point(p))
    }

    fn blocked_at_hom(&self, p: &Point2, hp: &Hom3) -> Option<usize> {
        if self.coeffs.dot_sign(hp) != 0 {
            return None;
        }
        let t = self.carrier.param_of(p);
        let m = self.len();
        Some(match self.params.binary_search(&t) {
            Ok(j) => self.blocked_at_member(j),
            Err(0) => m - 1,
            Err(j) if j == m => m - 1,
            Err(_) => m - 2,
        })
    }

    /// The m + 1 open portions between and beyond the members.
    pub fn portions(&self) -> Vec<DarkPortion> {
        let m = self.len();
        let mut out = Vec::with_capacity(m + 1);
        out.push(DarkPortion {
            lo: None,
            hi: Some(self.params[0].clone()),
            blocked_count: m - 1,
        });
        for j in 0..m - 1 {
            out.push(DarkPortion {
                lo: Some(self.params[j].clone()),
                hi: Some(self.params[j + 1].clone()),
                blocked_count: m - 2,
            });
        }
        out.push(DarkPortion {
            lo: Some(self.params[m - 1].clone()),
            hi: None,
            blocked_count: m - 1,
        });
        out
    }
}

/// Open parameter interval of a guard line, `None` for an infinite end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DarkPortion {
    pub lo: Option<Rat>,
    pub hi: Option<Rat>,
    pub blocked_count: usize,
}

/// All guard lines, in canonical order (by their two smallest members).
pub fn collinear_groups(guards: &GuardSet) -> Vec<GuardLine> {
    let pts = guards.points();
    let mut groups: HashMap<(Rat, Rat, Rat), BTreeSet<usize>> = HashMap::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let a = &pts[j].y - &pts[i].y;
            let b = &pts[i].x - &pts[j].x;
            let c = &a * &pts[i].x + &b * &pts[i].y;
            let key = if !a.is_zero() {
                (Rat::from_integer(1.into()), &b / &a, &c / &a)
            } else {
                (Rat::zero(), Rat::from_integer(1.into()), &c / &b)
            };
            let e = groups.entry(key).or_default();
            e.insert(i);
            e.insert(j);
        }
    }
    let mut lines: Vec<GuardLine> = groups
        .into_values()
        .map(|members| GuardLine::new(pts, members.into_iter().collect()))
        .collect();
    lines.sort_by(|a, b| (&a.points[0], &a.points[1]).cmp(&(&b.points[0], &b.points[1])));
    lines
}

/// Every guard line with its portions.
pub fn dark_portions(guards: &GuardSet) -> Vec<(GuardLine, Vec<DarkPortion>)> {
    collinear_groups(guards)
        .into_iter()
        .map(|l| {
            let p = l.portions();
            (l, p)
        })
        .collect()
}

/// Darkness at a point, with the lines responsible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DarknessWitness {
    pub point: Point2,
    pub darkness: usize,
    /// Lines through the point that hide at least one guard, with their counts.
    pub contributing_lines: Vec<(GuardLine, usize)>,
}

/// Guard lines of a fixed guard set, for repeated point queries.
#[derive(Clone, Debug)]
pub struct DarkArrangement {
    guards: GuardSet,
    lines: Vec<GuardLine>,
}

impl DarkArrangement {
    pub fn new(guards: &GuardSet) -> Self {
        DarkArrangement {
            lines: collinear_groups(guards),
            guards: guards.clone(),
        }
    }

    pub fn guards(&self) -> &GuardSet {
        &self.guards
    }

    pub fn lines(&self) -> &[GuardLine] {
        &self.lines
    }

    /// Darkness anywhere in the plane.
    pub fn darkness_at(&self, p: &Point2) -> DarknessWitness {
        let mut contributing = Vec::new();
        let mut total = 0;
        let hp = Hom3::point(p);
        for line in &self.lines {
            if let Some(b) = line.blocked_at_hom(p, &hp) {
                if b > 0 {
                    total += b;
                    contributing.push((line.clone(), b));
                }
            }
        }
        DarknessWitness {
            point: p.clone(),
            darkness: total,
            contributing_lines: contributing,
        }
    }
}

/// Darkness at a point of the closed region.
pub fn darkness_at(
    region: &ConvexRegion,
    guards: &GuardSet,
    p: &Point2,
) -> Result<DarknessWitness> {
    if !region.contains(p, ContainMode::Closed) {
        return Err(Error::PointOutsideRegion(p.clone()));
    }
    Ok(DarkArrangement::new(guards).darkness_at(p))
}
