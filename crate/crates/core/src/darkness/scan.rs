use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use super::{DarkArrangement, DarknessWitness, GuardLine, GuardSet};
use crate::error::{Error, Result};
use crate::geom::hom::Hom3;
use crate::geom::{
    clip_ray_lines, floor_int, halfplane_lines, int, rat, ConvexRegion, Line, Point2, Rat, RayClip,
    Vector2,
};

#[derive(Clone, Debug)]
enum PieceEnd {
    Closed(Point2),
    Open(Point2),
    Unbounded(Vector2),
}

/// A dark portion clipped to the region. The start is always a guard (open).
#[derive(Clone, Debug)]
struct Piece {
    line: usize,
    blocked: usize,
    start: Point2,
    end: PieceEnd,
    h_start: Hom3,
    h_end: Hom3,
    bbox: IntBox,
}

impl Piece {
    fn new(line: usize, blocked: usize, start: Point2, end: PieceEnd, scale: &Rat) -> Self {
        let h_start = Hom3::point(&start);
        let h_end = match &end {
            PieceEnd::Closed(p) | PieceEnd::Open(p) => Hom3::point(p),
            PieceEnd::Unbounded(d) => Hom3::direction(d),
        };
        let bbox = IntBox::of(&start, &end, scale);
        Piece {
            line,
            blocked,
            start,
            end,
            h_start,
            h_end,
            bbox,
        }
    }

    fn end_closed(&self) -> bool {
        matches!(self.end, PieceEnd::Closed(_))
    }

    /// Does this piece meet the line `other` (homogeneous coefficients).
    fn meets(&self, other: &Hom3) -> bool {
        let s = other.dot_sign(&self.h_start);
        let e = other.dot_sign(&self.h_end);
        if s * e < 0 {
            return true;
        }
        e == 0 && s != 0 && self.end_closed()
    }

    fn carrier(&self) -> Line {
        let dir = match &self.end {
            PieceEnd::Closed(p) | PieceEnd::Open(p) => p - &self.start,
            PieceEnd::Unbounded(d) => d.clone(),
        };
        Line::new(self.start.clone(), dir).expect("nondegenerate piece")
    }

    /// A point of the piece's relative interior before its first crossing.
    fn representative(&self, crossings: &[Point2]) -> Point2 {
        let carrier = self.carrier();
        let first = crossings.iter().map(|p| carrier.param_of(p)).min();
        let t = match (first, &self.end) {
            (Some(t), _) => t * rat(1, 2),
            (None, PieceEnd::Unbounded(_)) => int(1),
            (None, _) => rat(1, 2),
        };
        carrier.point_at(&t)
    }
}

/// Conservative integer bounding box on a dyadic grid, used only to skip pairs.
#[derive(Clone, Copy, Debug)]
struct IntBox {
    x0: i64,
    x1: i64,
    y0: i64,
    y1: i64,
}

fn clamp_i64(v: BigInt) -> i64 {
    v.to_i64().unwrap_or(if v.is_negative() {
        i64::MIN / 2
    } else {
        i64::MAX / 2
    })
}

impl IntBox {
    fn of(start: &Point2, end: &PieceEnd, scale: &Rat) -> Self {
        let fl = |r: &Rat| clamp_i64(floor_int(&(r * scale)));
        let ce = |r: &Rat| clamp_i64(floor_int(&(r * scale))).saturating_add(1);
        let (mut x0, mut x1, mut y0, mut y1) =
            (fl(&start.x), ce(&start.x), fl(&start.y), ce(&start.y));
        match end {
            PieceEnd::Closed(p) | PieceEnd::Open(p) => {
                x0 = x0.min(fl(&p.x));
                x1 = x1.max(ce(&p.x));
                y0 = y0.min(fl(&p.y));
                y1 = y1.max(ce(&p.y));
            }
            PieceEnd::Unbounded(d) => {
                if d.x.is_positive() {
                    x1 = i64::MAX;
                } else if d.x.is_negative() {
                    x0 = i64::MIN;
                }
                if d.y.is_positive() {
                    y1 = i64::MAX;
                } else if d.y.is_negative() {
                    y0 = i64::MIN;
                }
            }
        }
        IntBox { x0, x1, y0, y1 }
    }
}

/// Power-of-two grid scale putting the guards' spread at about 2^20 cells.
fn grid_scale(points: &[Point2]) -> Rat {
    let mut lo_x = points[0].x.clone();
    let mut hi_x = lo_x.clone();
    let mut lo_y = points[0].y.clone();
    let mut hi_y = lo_y.clone();
    for p in points {
        lo_x = lo_x.min(p.x.clone());
        hi_x = hi_x.max(p.x.clone());
        lo_y = lo_y.min(p.y.clone());
        hi_y = hi_y.max(p.y.clone());
    }
    let spread = (hi_x - lo_x).max(hi_y - lo_y);
    if spread.is_zero() {
        return Rat::one();
    }
    let bits = spread.numer().bits() as i64 - spread.denom().bits() as i64;
    let k = 20 - bits;
    if k >= 0 {
        Rat::from_integer(BigInt::one() << k as u32)
    } else {
        Rat::new(BigInt::one(), BigInt::one() << (-k) as u32)
    }
}

fn build_pieces(region: &ConvexRegion, lines: &[GuardLine], scale: &Rat) -> Vec<Piece> {
    let walls = halfplane_lines(&region.halfplanes());
    let mut pieces = Vec::new();
    for (li, line) in lines.iter().enumerate() {
        let m = line.len();
        let dir = line.carrier().direction();
        let ends = [(&line.points[0], -dir), (&line.points[m - 1], dir.clone())];
        for (origin, d) in ends {
            match clip_ray_lines(&walls, origin, &d) {
                RayClip::Segment { hi, .. } if hi.is_positive() => {
                    let end = origin + &d.scale(&hi);
                    pieces.push(Piece::new(
                        li,
                        m - 1,
                        origin.clone(),
                        PieceEnd::Closed(end),
                        scale,
                    ));
                }
                RayClip::Ray { .. } => {
                    pieces.push(Piece::new(
                        li,
                        m - 1,
                        origin.clone(),
                        PieceEnd::Unbounded(d),
                        scale,
                    ));
                }
                _ => {}
            }
        }
        if m >= 3 {
            for j in 0..m - 1 {
                pieces.push(Piece::new(
                    li,
                    m - 2,
                    line.points[j].clone(),
                    PieceEnd::Open(line.points[j + 1].clone()),
                    scale,
                ));
            }
        }
    }
    pieces
}

/// Pairwise crossings of pieces on distinct lines, as (piece, piece, point).
fn piece_crossings(pieces: &[Piece], line_coeffs: &[Hom3]) -> Vec<(usize, usize, Point2)> {
    let mut order: Vec<usize> = (0..pieces.len()).collect();
    order.sort_by_key(|&i| pieces[i].bbox.x0);
    let mut hits: Vec<(usize, usize, Point2)> = (0..order.len())
        .into_par_iter()
        .flat_map_iter(|a| {
            let pa = &pieces[order[a]];
            let mut local = Vec::new();
            for &bi in &order[a + 1..] {
                let pb = &pieces[bi];
                if pb.bbox.x0 > pa.bbox.x1 {
                    break;
                }
                if pb.line == pa.line || pb.bbox.y0 > pa.bbox.y1 || pa.bbox.y0 > pb.bbox.y1 {
                    continue;
                }
                let (la, lb) = (&line_coeffs[pa.line], &line_coeffs[pb.line]);
                if pa.meets(lb) && pb.meets(la) {
                    let p = la.cross(lb).to_point().expect("crossing lines");
                    let (i, j) = (order[a].min(bi), order[a].max(bi));
                    local.push((i, j, p));
                }
            }
            local
        })
        .collect();
    hits.sort_by_key(|x| (x.0, x.1));
    hits
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CandidateKind {
    /// Interior point of a clipped dark portion, clear of crossings.
    Portion,
    /// Crossing point of portions from two or more lines.
    Crossing,
    Guard,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub point: Point2,
    pub darkness: usize,
    pub kind: CandidateKind,
}

/// Everything the exact scan looked at. Darkness over the region is maximized
/// on this candidate set.
#[derive(Clone, Debug)]
pub struct DarknessScan {
    pub arrangement: DarkArrangement,
    pub candidates: Vec<Candidate>,
    pub max_darkness: usize,
    pub witness: DarknessWitness,
}

impl DarknessScan {
    /// Candidate points at least `j` dark, lexicographically, without repeats.
    pub fn points_at_least(&self, j: usize) -> Vec<(Point2, usize)> {
        let set: BTreeSet<(Point2, usize)> = self
            .candidates
            .iter()
            .filter(|c| c.darkness >= j)
            .map(|c| (c.point.clone(), c.darkness))
            .collect();
        set.into_iter().collect()
    }
}

/// Exact darkness scan over a convex region.
pub fn scan_darkness(region: &ConvexRegion, guards: &GuardSet) -> Result<DarknessScan> {
    if guards.is_empty() {
        return Err(Error::NoGuards);
    }
    guards.check_inside(region)?;
    let arrangement = DarkArrangement::new(guards);
    let lines = arrangement.lines();
    let scale = grid_scale(guards.points());
    let pieces = build_pieces(region, lines, &scale);
    let line_coeffs: Vec<Hom3> = lines
        .iter()
        .map(|l| Hom3::point(&l.points[0]).cross(&Hom3::point(&l.points[1])))
        .collect();
    let hits = piece_crossings(&pieces, &line_coeffs);

    let mut per_piece: Vec<Vec<Point2>> = vec![Vec::new(); pieces.len()];
    let mut at_point: HashMap<Point2, BTreeSet<usize>> = HashMap::new();
    for (i, j, p) in hits {
        per_piece[i].push(p.clone());
        per_piece[j].push(p.clone());
        let e = at_point.entry(p).or_default();
        e.insert(i);
        e.insert(j);
    }

    let mut candidates = Vec::new();
    for (k, piece) in pieces.iter().enumerate() {
        candidates.push(Candidate {
            point: piece.representative(&per_piece[k]),
            darkness: piece.blocked,
            kind: CandidateKind::Portion,
        });
    }
    for (p, set) in at_point {
        candidates.push(Candidate {
            darkness: set.iter().map(|&k| pieces[k].blocked).sum(),
            point: p,
            kind: CandidateKind::Crossing,
        });
    }
    let mut guard_dark = vec![0usize; guards.len()];
    for line in lines {
        for (j, &g) in line.members.iter().enumerate() {
            guard_dark[g] += line.blocked_at_member(j);
        }
    }
    for (g, p) in guards.iter().enumerate() {
        candidates.push(Candidate {
            point: p.clone(),
            darkness: guard_dark[g],
            kind: CandidateKind::Guard,
        });
    }
    candidates.sort_by(|a, b| (&a.point, a.kind as u8).cmp(&(&b.point, b.kind as u8)));

    let max = candidates.iter().map(|c| c.darkness).max().unwrap_or(0);
    let best = candidates
        .iter()
        .filter(|c| c.darkness == max)
        .map(|c| &c.point)
        .min()
        .expect("at least one guard candidate")
        .clone();
    let witness = arrangement.darkness_at(&best);
    debug_assert_eq!(
        witness.darkness, max,
        "scan and point query disagree at {best}"
    );
    Ok(DarknessScan {
        arrangement,
        candidates,
        max_darkness: max,
        witness,
    })
}

/// The darkest point of the closed region (lexicographically least on ties).
pub fn max_darkness(region: &ConvexRegion, guards: &GuardSet) -> Result<DarknessWitness> {
    Ok(scan_darkness(region, guards)?.witness)
}

/// Exact proof of the least depth over a convex region.
#[derive(Clone, Debug)]
pub struct DepthCertificate {
    pub region: ConvexRegion,
    pub guards: GuardSet,
    pub min_depth: usize,
    pub max_darkness: usize,
    /// A point attaining `max_darkness`.
    pub witness: DarknessWitness,
}

pub fn min_depth(region: &ConvexRegion, guards: &GuardSet) -> Result<DepthCertificate> {
    let scan = scan_darkness(region, guards)?;
    Ok(DepthCertificate {
        region: region.clone(),
        guards: guards.clone(),
        min_depth: guards.len() - scan.max_darkness,
        max_darkness: scan.max_darkness,
        witness: scan.witness,
    })
}

/// A point of the region at least `j` dark, if one exists.
pub fn has_j_dark(
    region: &ConvexRegion,
    guards: &GuardSet,
    j: usize,
) -> Result<Option<DarknessWitness>> {
    let scan = scan_darkness(region, guards)?;
    Ok(if scan.max_darkness >= j {
        Some(scan.witness)
    } else {
        None
    })
}

/// Largest number of dark rays from distinct guard lines through one point
/// of the plane; 0 without rays, 1 if no two rays cross.
pub fn max_ray_concurrency(guards: &GuardSet) -> usize {
    let lines = super::collinear_groups(guards);
    let one = Rat::one();
    let mut rays = Vec::new();
    for (li, line) in lines.iter().enumerate() {
        for w in line.points.windows(2) {
            rays.push(Piece::new(
                li,
                1,
                w[1].clone(),
                PieceEnd::Unbounded(&w[1] - &w[0]),
                &one,
            ));
            rays.push(Piece::new(
                li,
                1,
                w[0].clone(),
                PieceEnd::Unbounded(&w[0] - &w[1]),
                &one,
            ));
        }
    }
    if rays.is_empty() {
        return 0;
    }
    let coeffs: Vec<Hom3> = lines
        .iter()
        .map(|l| Hom3::point(&l.points[0]).cross(&Hom3::point(&l.points[1])))
        .collect();
    let hits: Vec<(usize, usize, Point2)> = (0..rays.len())
        .into_par_iter()
        .flat_map_iter(|a| {
            let mut local = Vec::new();
            for b in a + 1..rays.len() {
                let (ra, rb) = (&rays[a], &rays[b]);
                if ra.line == rb.line {
                    continue;
                }
                let (la, lb) = (&coeffs[ra.line], &coeffs[rb.line]);
                if ra.meets(lb) && rb.meets(la) {
                    local.push((a, b, la.cross(lb).to_point().expect("crossing")));
                }
            }
            local
        })
        .collect();
    let mut at: HashMap<Point2, BTreeSet<usize>> = HashMap::new();
    for (a, b, p) in hits {
        let e = at.entry(p).or_default();
        e.insert(a);
        e.insert(b);
    }
    at.values().map(BTreeSet::len).max().unwrap_or(1)
}
