use num_traits::Zero;

use super::{has_j_dark, DarkArrangement, GuardSet};
use crate::error::Result;
use crate::geom::{int, rat, ConvexPolygon, Point2, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CensusViolation {
    /// Edge with no guard in its interior and not both endpoints guarded.
    EdgeUncovered(usize),
    /// A point of the polygon at least 2 dark.
    TwoDark(Point2),
}

/// Boundary guard counts of a convex polygon.
#[derive(Clone, Debug)]
pub struct BoundaryCensus {
    /// Per edge: interior guards plus half of each guarded endpoint.
    pub edge_weights: Vec<Rat>,
    /// Sum of the edge weights, the number of boundary guards.
    pub boundary_guards: Rat,
    /// Vertices hidden from at least one boundary guard by another.
    pub darkened_vertices: Vec<usize>,
    /// Why the census relation need not hold; empty when it applies.
    pub violations: Vec<CensusViolation>,
    vertex_count: usize,
}

impl BoundaryCensus {
    pub fn applicable(&self) -> bool {
        self.violations.is_empty()
    }

    /// Boundary guards equal vertices plus half the darkened vertices.
    pub fn equation_holds(&self) -> bool {
        let rhs = int(self.vertex_count as i64) + rat(self.darkened_vertices.len() as i64, 2);
        self.boundary_guards == rhs
    }
}

pub fn boundary_census(polygon: &ConvexPolygon, guards: &GuardSet) -> Result<BoundaryCensus> {
    let n = polygon.len();
    let mut interior = vec![0usize; n];
    let mut at_vertex = vec![false; n];
    let mut boundary = Vec::new();
    for g in guards.iter() {
        if let Some(v) = polygon.vertex_index(g) {
            at_vertex[v] = true;
            boundary.push(g.clone());
        } else if let Some(e) = polygon.edge_interior_containing(g) {
            interior[e] += 1;
            boundary.push(g.clone());
        }
    }
    let half = rat(1, 2);
    let edge_weights: Vec<Rat> = (0..n)
        .map(|e| {
            let mut w = int(interior[e] as i64);
            for v in [e, (e + 1) % n] {
                if at_vertex[v] {
                    w += &half;
                }
            }
            w
        })
        .collect();
    let boundary_guards = edge_weights.iter().fold(Rat::zero(), |a, w| a + w);

    let darkened_vertices = if boundary.len() >= 2 {
        let arr = DarkArrangement::new(&GuardSet::new(boundary)?);
        (0..n)
            .filter(|&v| arr.darkness_at(polygon.vertex(v)).darkness >= 1)
            .collect()
    } else {
        Vec::new()
    };

    let mut violations: Vec<CensusViolation> = (0..n)
        .filter(|&e| interior[e] == 0 && !(at_vertex[e] && at_vertex[(e + 1) % n]))
        .map(CensusViolation::EdgeUncovered)
        .collect();
    if !guards.is_empty() {
        if let Some(w) = has_j_dark(&polygon.clone().into(), guards, 2)? {
            violations.push(CensusViolation::TwoDark(w.point));
        }
    }
    Ok(BoundaryCensus {
        edge_weights,
        boundary_guards,
        darkened_vertices,
        violations,
        vertex_count: n,
    })
}
