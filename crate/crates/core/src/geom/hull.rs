use super::{on_segment, orientation, ConvexPolygon, Orientation, Point2};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HullClass {
    /// A vertex of the strictly convex hull.
    Corner,
    /// On the hull boundary but not a corner.
    OnEdge,
    Interior,
}

#[derive(Clone, Debug)]
pub struct ConvexHull {
    pub polygon: ConvexPolygon,
    /// Class of each input point, in input order.
    pub classes: Vec<HullClass>,
}

/// Exact convex hull (monotone chain). Collinear input is an error carrying the segment.
pub fn convex_hull(points: &[Point2]) -> Result<ConvexHull> {
    let mut pts: Vec<Point2> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.is_empty() {
        return Err(Error::TooFewVertices(0));
    }
    let turn_ok =
        |a: &Point2, b: &Point2, c: &Point2| orientation(a, b, c) == Orientation::CounterClockwise;
    let mut lower: Vec<Point2> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && !turn_ok(&lower[lower.len() - 2], &lower[lower.len() - 1], p) {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point2> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && !turn_ok(&upper[upper.len() - 2], &upper[upper.len() - 1], p) {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        return Err(Error::DegenerateHull {
            from: pts[0].clone(),
            to: pts[pts.len() - 1].clone(),
        });
    }
    let polygon = ConvexPolygon::new(lower)?;
    let classes = points
        .iter()
        .map(|p| {
            if polygon.vertex_index(p).is_some() {
                HullClass::Corner
            } else if (0..polygon.len()).any(|i| {
                let (a, b) = polygon.edge(i);
                on_segment(a, b, p)
            }) {
                HullClass::OnEdge
            } else {
                HullClass::Interior
            }
        })
        .collect();
    Ok(ConvexHull { polygon, classes })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classifies_points() {
        let pts = vec![
            Point2::from_ints(0, 0),
            Point2::from_ints(4, 0),
            Point2::from_ints(4, 4),
            Point2::from_ints(0, 4),
            Point2::from_ints(2, 0),
            Point2::from_ints(1, 1),
        ];
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.polygon.len(), 4);
        assert_eq!(
            h.classes,
            vec![
                HullClass::Corner,
                HullClass::Corner,
                HullClass::Corner,
                HullClass::Corner,
                HullClass::OnEdge,
                HullClass::Interior
            ]
        );
    }

    #[test]
    fn collinear_input_is_degenerate() {
        let pts = vec![
            Point2::from_ints(0, 0),
            Point2::from_ints(2, 2),
            Point2::from_ints(1, 1),
        ];
        match convex_hull(&pts) {
            Err(Error::DegenerateHull { from, to }) => {
                assert_eq!(from, Point2::from_ints(0, 0));
                assert_eq!(to, Point2::from_ints(2, 2));
            }
            other => panic!("{other:?}"),
        }
    }
}
