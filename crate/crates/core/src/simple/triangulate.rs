use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::geom::{between_collinear, orientation, Orientation, SimplePolygon};

/// Triangles (counterclockwise vertex indices) and the diagonals between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    pub triangles: Vec<[usize; 3]>,
    pub diagonals: Vec<(usize, usize)>,
}

/// Ear-clipping triangulation.
///
/// An ear is a strictly convex corner whose triangle holds no other remaining
/// vertex, not even on its boundary. When no ear exists the polygon has a
/// straight corner, which is clipped as a zero-area triangle.
pub fn triangulate(polygon: &SimplePolygon) -> Result<Triangulation> {
    let n = polygon.len();
    let v = polygon.vertices();
    let mut ring: Vec<usize> = (0..n).collect();
    let mut triangles = Vec::with_capacity(n - 2);
    let mut diagonals = Vec::with_capacity(n - 3);

    let is_ear = |ring: &[usize], at: usize| {
        let m = ring.len();
        let (a, b, c) = (ring[(at + m - 1) % m], ring[at], ring[(at + 1) % m]);
        if orientation(&v[a], &v[b], &v[c]) != Orientation::CounterClockwise {
            return false;
        }
        !ring.iter().any(|&o| {
            o != a
                && o != b
                && o != c
                && orientation(&v[a], &v[b], &v[o]) != Orientation::Clockwise
                && orientation(&v[b], &v[c], &v[o]) != Orientation::Clockwise
                && orientation(&v[c], &v[a], &v[o]) != Orientation::Clockwise
        })
    };
    let is_straight = |ring: &[usize], at: usize| {
        let m = ring.len();
        let (a, b, c) = (ring[(at + m - 1) % m], ring[at], ring[(at + 1) % m]);
        orientation(&v[a], &v[b], &v[c]) == Orientation::Collinear
            && between_collinear(&v[a], &v[c], &v[b], false)
    };

    while ring.len() > 3 {
        let m = ring.len();
        let at = (0..m)
            .find(|&i| is_ear(&ring, i))
            .or_else(|| (0..m).find(|&i| is_straight(&ring, i)))
            .ok_or_else(|| Error::Triangulation(format!("no ear among {m} vertices")))?;
        let (a, b, c) = (ring[(at + m - 1) % m], ring[at], ring[(at + 1) % m]);
        triangles.push([a, b, c]);
        diagonals.push((a.min(c), a.max(c)));
        ring.remove(at);
    }
    triangles.push([ring[0], ring[1], ring[2]]);
    Ok(Triangulation {
        triangles,
        diagonals,
    })
}

/// Proper 3-coloring (colors 1, 2, 3) by walking the dual tree from the first
/// triangle; each new triangle shares an edge with a colored one and its third
/// vertex takes the remaining color.
pub fn three_color(polygon: &SimplePolygon, t: &Triangulation) -> Result<Vec<u8>> {
    let n = polygon.len();
    if t.triangles.is_empty() {
        return Err(Error::Triangulation("no triangles".into()));
    }
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut by_edge: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (i, tri) in t.triangles.iter().enumerate() {
        for j in 0..3 {
            by_edge
                .entry(key(tri[j], tri[(j + 1) % 3]))
                .or_default()
                .push(i);
        }
    }
    let mut color = vec![0u8; n];
    let first = t.triangles[0];
    for (c, &v) in first.iter().enumerate() {
        color[v] = c as u8 + 1;
    }
    let mut seen = vec![false; t.triangles.len()];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let tri = t.triangles[i];
        for j in 0..3 {
            for &o in &by_edge[&key(tri[j], tri[(j + 1) % 3])] {
                if seen[o] {
                    continue;
                }
                seen[o] = true;
                let other = t.triangles[o];
                let third = *other
                    .iter()
                    .find(|&&x| x != tri[j] && x != tri[(j + 1) % 3])
                    .ok_or_else(|| Error::Triangulation("repeated triangle".into()))?;
                let want = 6 - color[tri[j]] - color[tri[(j + 1) % 3]];
                if color[third] != 0 && color[third] != want {
                    return Err(Error::Triangulation(format!(
                        "vertex {third} cannot be colored consistently"
                    )));
                }
                color[third] = want;
                queue.push_back(o);
            }
        }
    }
    if color.contains(&0) || seen.contains(&false) {
        return Err(Error::Triangulation("triangles are not connected".into()));
    }
    Ok(color)
}

/// The least used color (lowest on ties) and its vertices in index order.
pub fn smallest_class(coloring: &[u8]) -> (u8, Vec<usize>) {
    let count = |c: u8| coloring.iter().filter(|&&x| x == c).count();
    let best = (1..=3u8)
        .min_by_key(|&c| (count(c), c))
        .expect("three colors");
    let members = (0..coloring.len())
        .filter(|&i| coloring[i] == best)
        .collect();
    (best, members)
}
