//! Guard placements for convex polygons and wedges.
//!
//! Depth k in a convex n-gon needs k guards up to k = n (vertex guards), one
//! extra guard below 4n - 2, and two extra from there on. The middle regime
//! takes a prefix of the 4n - 2 guard scaffold, which has no 2-dark point;
//! dropping guards never darkens a point, so any prefix keeps that property.

mod fourn;
pub(crate) mod general;
mod wedge;
mod zigzag;

pub use fourn::{place_4n_minus_2, ConstructionScaffold, VertexScaffold};
pub use general::{has_collinear_triple, place_general_position, radical_inverse};
pub use wedge::{guards_for_wedge, place_wedge, wedge_map};
pub use zigzag::{zigzag, ApexTriangle, ZigzagTriangulation};

use serde::{Deserialize, Serialize};

use crate::darkness::{min_depth, DepthCertificate, GuardSet};
use crate::error::{Error, Result};
use crate::geom::ConvexPolygon;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Regime {
    /// k <= n: guards at k vertices.
    VertexGuards,
    /// n < k < 4n - 2: k + 1 guards.
    Plus1,
    /// k >= 4n - 2: k + 2 guards.
    Plus2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegimePlan {
    pub n: usize,
    pub k: usize,
    pub regime: Regime,
    /// Guards required.
    pub g: usize,
}

pub fn plan(n: usize, k: usize) -> Result<RegimePlan> {
    if n < 3 {
        return Err(Error::TooFewVertices(n));
    }
    if k == 0 {
        return Err(Error::ZeroDepth);
    }
    let (regime, g) = if k <= n {
        (Regime::VertexGuards, k)
    } else if k < 4 * n - 2 {
        (Regime::Plus1, k + 1)
    } else {
        (Regime::Plus2, k + 2)
    };
    Ok(RegimePlan { n, k, regime, g })
}

/// Guards at the first `k` vertices.
pub fn place_vertex_guards(polygon: &ConvexPolygon, k: usize) -> Result<GuardSet> {
    if k > polygon.len() {
        return Err(Error::NotEnoughVertices {
            requested: k,
            available: polygon.len(),
        });
    }
    GuardSet::new(polygon.vertices()[..k].to_vec())
}

/// Guards covering `polygon` to depth `k`, with the plan and an exact certificate.
pub fn construct_certified(
    polygon: &ConvexPolygon,
    k: usize,
) -> Result<(RegimePlan, GuardSet, DepthCertificate)> {
    let plan = plan(polygon.len(), k)?;
    let guards = match plan.regime {
        Regime::VertexGuards => place_vertex_guards(polygon, k)?,
        Regime::Plus1 => {
            let (all, _) = place_4n_minus_2(polygon)?;
            GuardSet::new(all.into_points().into_iter().take(plan.g).collect())?
        }
        Regime::Plus2 => place_general_position(&polygon.clone().into(), plan.g)?,
    };
    let cert = min_depth(&polygon.clone().into(), &guards)?;
    if cert.min_depth < k {
        return Err(Error::ConstructionFailed {
            reason: format!("depth {} below the requested {k}", cert.min_depth),
            witness: Some(cert.witness.point.clone()),
        });
    }
    Ok((plan, guards, cert))
}

pub fn construct(polygon: &ConvexPolygon, k: usize) -> Result<GuardSet> {
    construct_certified(polygon, k).map(|(_, g, _)| g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::stock_polygon;

    #[test]
    fn plan_examples() {
        let p = plan(3, 4).unwrap();
        assert_eq!((p.regime, p.g), (Regime::Plus1, 5));
        let p = plan(3, 10).unwrap();
        assert_eq!((p.regime, p.g), (Regime::Plus2, 12));
        assert_eq!(plan(4, 13).unwrap().g, 14);
        assert_eq!(plan(4, 14).unwrap().g, 16);
        assert!(plan(2, 1).is_err());
        assert!(plan(3, 0).is_err());
    }

    #[test]
    fn vertex_guards_reach_depth_k() {
        let tri = stock_polygon(3).unwrap();
        let g = place_vertex_guards(&tri, 3).unwrap();
        assert_eq!(min_depth(&tri.into(), &g).unwrap().min_depth, 3);
        let sq = stock_polygon(4).unwrap();
        let g = place_vertex_guards(&sq, 2).unwrap();
        assert_eq!(min_depth(&sq.clone().into(), &g).unwrap().min_depth, 2);
        assert!(place_vertex_guards(&sq, 5).is_err());
        let hex = stock_polygon(6).unwrap();
        let g = place_vertex_guards(&hex, 6).unwrap();
        assert_eq!(min_depth(&hex.into(), &g).unwrap().min_depth, 6);
    }

    #[test]
    fn construct_examples() {
        let tri = stock_polygon(3).unwrap();
        let (_, g, c) = construct_certified(&tri, 4).unwrap();
        assert_eq!((g.len(), c.min_depth >= 4), (5, true));
        let sq = stock_polygon(4).unwrap();
        let (_, g, c) = construct_certified(&sq, 13).unwrap();
        assert_eq!((g.len(), c.min_depth >= 13), (14, true));
        let pent = stock_polygon(5).unwrap();
        assert_eq!(construct(&pent, 3).unwrap().len(), 3);
    }
}
