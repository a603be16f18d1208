//! JSON documents for placements and certificates.
//!
//! Rationals are written as `"p/q"` strings (`"p"` for integers) and read back
//! from that form, from plain or decimal strings such as `"-102.57"`, and from
//! JSON numbers. Points are two-element arrays.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::darkness::{scan_darkness, GuardSet};
use crate::error::{Error, Result};
use crate::geom::{ConvexPolygon, ConvexRegion, Point2, Rat, SimplePolygon, Vector2, Wedge};
use crate::sampling::{sample_depth, Sampler};

/// Parse `"p"`, `"p/q"` or a decimal such as `"-102.57"` exactly.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::InvalidInput(format!("not a rational number: {s:?}"));
    let t = s.trim();
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rat::new(p, q));
    }
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole
        .chars()
        .chain(frac.chars())
        .all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits = format!("{whole}{frac}");
    let numer: BigInt = digits.parse().map_err(|_| bad())?;
    let denom = num_traits::pow(BigInt::from(10), frac.len());
    let r = Rat::new(numer, denom);
    Ok(if neg { -r } else { r })
}

pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawRat {
    Text(String),
    Number(serde_json::Number),
}

impl RawRat {
    fn value(&self) -> Result<Rat> {
        match self {
            RawRat::Text(s) => parse_rat(s),
            RawRat::Number(n) => parse_rat(&n.to_string()),
        }
    }
}

impl Serialize for Point2 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [format_rat(&self.x), format_rat(&self.y)].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Point2 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [x, y] = <[RawRat; 2]>::deserialize(d)?;
        Ok(Point2::new(
            x.value().map_err(D::Error::custom)?,
            y.value().map_err(D::Error::custom)?,
        ))
    }
}

/// A region as stored in documents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawRegion", into = "RawRegion")]
pub enum Region {
    Convex(ConvexPolygon),
    Wedge(Wedge),
    Simple(SimplePolygon),
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum RawRegion {
    ConvexPolygon {
        vertices: Vec<Point2>,
    },
    Wedge {
        apex: Point2,
        dir1: Point2,
        dir2: Point2,
    },
    SimplePolygon {
        vertices: Vec<Point2>,
    },
    /// Convex if it can be, simple otherwise.
    Polygon {
        vertices: Vec<Point2>,
    },
}

impl TryFrom<RawRegion> for Region {
    type Error = Error;

    fn try_from(raw: RawRegion) -> Result<Region> {
        Ok(match raw {
            RawRegion::ConvexPolygon { vertices } => {
                Region::Convex(ConvexPolygon::normalized(vertices)?)
            }
            RawRegion::Wedge { apex, dir1, dir2 } => {
                Region::Wedge(Wedge::new(apex, dir1.to_vector(), dir2.to_vector())?)
            }
            RawRegion::SimplePolygon { vertices } => {
                Region::Simple(SimplePolygon::normalized(vertices)?)
            }
            RawRegion::Polygon { vertices } => match ConvexPolygon::normalized(vertices.clone()) {
                Ok(p) => Region::Convex(p),
                Err(_) => Region::Simple(SimplePolygon::normalized(vertices)?),
            },
        })
    }
}

fn vector_point(v: &Vector2) -> Point2 {
    Point2::new(v.x.clone(), v.y.clone())
}

impl From<Region> for RawRegion {
    fn from(r: Region) -> RawRegion {
        match r {
            Region::Convex(p) => RawRegion::ConvexPolygon {
                vertices: p.vertices().to_vec(),
            },
            Region::Wedge(w) => RawRegion::Wedge {
                apex: w.apex().clone(),
                dir1: vector_point(w.dir1()),
                dir2: vector_point(w.dir2()),
            },
            Region::Simple(p) => RawRegion::SimplePolygon {
                vertices: p.vertices().to_vec(),
            },
        }
    }
}

impl From<ConvexRegion> for Region {
    fn from(r: ConvexRegion) -> Region {
        match r {
            ConvexRegion::Polygon(p) => Region::Convex(p),
            ConvexRegion::Wedge(w) => Region::Wedge(w),
        }
    }
}

impl Region {
    pub fn kind(&self) -> &'static str {
        match self {
            Region::Convex(_) => "convex_polygon",
            Region::Wedge(_) => "wedge",
            Region::Simple(_) => "simple_polygon",
        }
    }

    /// The region for the exact verifier, if it is convex.
    pub fn convex(&self) -> Option<ConvexRegion> {
        match self {
            Region::Convex(p) => Some(p.clone().into()),
            Region::Wedge(w) => Some(w.clone().into()),
            Region::Simple(_) => None,
        }
    }

    /// The region as a simple polygon, if it is bounded.
    pub fn simple(&self) -> Option<SimplePolygon> {
        match self {
            Region::Convex(p) => SimplePolygon::new(p.vertices().to_vec()).ok(),
            Region::Wedge(_) => None,
            Region::Simple(p) => Some(p.clone()),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub construction: String,
    #[serde(default)]
    pub parameters: BTreeMap<String, serde_json::Value>,
    #[serde(default)]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlacementDocument {
    pub region: Region,
    pub guards: Vec<Point2>,
    #[serde(default)]
    pub metadata: Metadata,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateDocument>,
}

fn to_pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("documents serialize");
    s.push('\n');
    s
}

fn from_text<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))
}

impl PlacementDocument {
    pub fn new(region: Region, guards: &GuardSet, metadata: Metadata) -> Self {
        PlacementDocument {
            region,
            guards: guards.points().to_vec(),
            metadata,
            certificate: None,
        }
    }

    pub fn to_json(&self) -> String {
        to_pretty(self)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        from_text(text)
    }

    pub fn guard_set(&self) -> Result<GuardSet> {
        GuardSet::new(self.guards.clone())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerificationMode {
    Exact,
    Sampled,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DarkPoint {
    pub point: Point2,
    pub darkness: usize,
}

/// Longest j-dark witness list written out; `j_dark_count` has the total.
pub const WITNESS_LIST_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub mode: VerificationMode,
    pub region_kind: String,
    pub guard_count: usize,
    /// Least depth over the region (exact) or over the samples.
    pub min_depth: usize,
    pub max_darkness: usize,
    pub witness: DarkPoint,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub has_j_dark: Option<bool>,
    #[serde(default)]
    pub j_dark_count: usize,
    /// At most [`WITNESS_LIST_LIMIT`] points, lexicographically.
    #[serde(default)]
    pub j_dark_witnesses: Vec<DarkPoint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_depth: Option<usize>,
    /// No j-dark point when `j` is given and depth reached when a target is.
    pub verified: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sampler: Option<Sampler>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sample_count: Option<usize>,
}

impl CertificateDocument {
    pub fn to_json(&self) -> String {
        to_pretty(self)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        from_text(text)
    }
}

fn finish(
    mut doc: CertificateDocument,
    j: Option<usize>,
    target: Option<usize>,
    mut dark: Vec<DarkPoint>,
) -> CertificateDocument {
    if let Some(j) = j {
        dark.retain(|d| d.darkness >= j);
        doc.j = Some(j);
        doc.has_j_dark = Some(!dark.is_empty());
        doc.j_dark_count = dark.len();
        dark.truncate(WITNESS_LIST_LIMIT);
        doc.j_dark_witnesses = dark;
    }
    doc.target_depth = target;
    doc.verified = doc.has_j_dark != Some(true) && target.is_none_or(|k| doc.min_depth >= k);
    doc
}

/// Exact certificate over a convex polygon or wedge.
pub fn exact_certificate(
    region: &ConvexRegion,
    guards: &GuardSet,
    j: Option<usize>,
    target: Option<usize>,
) -> Result<CertificateDocument> {
    let scan = scan_darkness(region, guards)?;
    let dark = match j {
        Some(j) => scan
            .points_at_least(j)
            .into_iter()
            .map(|(point, darkness)| DarkPoint { point, darkness })
            .collect(),
        None => Vec::new(),
    };
    let doc = CertificateDocument {
        mode: VerificationMode::Exact,
        region_kind: Region::from(region.clone()).kind().into(),
        guard_count: guards.len(),
        min_depth: guards.len() - scan.max_darkness,
        max_darkness: scan.max_darkness,
        witness: DarkPoint {
            point: scan.witness.point.clone(),
            darkness: scan.witness.darkness,
        },
        j: None,
        has_j_dark: None,
        j_dark_count: 0,
        j_dark_witnesses: Vec::new(),
        target_depth: None,
        verified: false,
        sampler: None,
        sample_count: None,
    };
    Ok(finish(doc, j, target, dark))
}

/// Sampled certificate over a bounded region. Darkness at a sample counts
/// the guards that do not see it, whether walls or guards are in the way.
pub fn sampled_certificate(
    region: &Region,
    guards: &GuardSet,
    sampler: &Sampler,
    j: Option<usize>,
    target: Option<usize>,
) -> Result<CertificateDocument> {
    let polygon = region
        .simple()
        .ok_or_else(|| Error::UnsupportedMode("sampling needs a bounded region".into()))?;
    if guards.is_empty() {
        return Err(Error::NoGuards);
    }
    if let Some(g) = guards.iter().find(|g| !polygon.contains_closed(g)) {
        return Err(Error::GuardOutsideRegion(g.clone()));
    }
    let report = sample_depth(&polygon, guards, sampler, target.unwrap_or(0));
    let g = guards.len();
    let dark: Vec<DarkPoint> = report
        .samples
        .iter()
        .map(|(p, d)| DarkPoint {
            point: p.clone(),
            darkness: g - d,
        })
        .collect();
    let witness = dark
        .iter()
        .find(|d| d.darkness == g - report.min_sampled_depth)
        .cloned()
        .expect("vertices are always sampled");
    let doc = CertificateDocument {
        mode: VerificationMode::Sampled,
        region_kind: region.kind().into(),
        guard_count: g,
        min_depth: report.min_sampled_depth,
        max_darkness: g - report.min_sampled_depth,
        witness,
        j: None,
        has_j_dark: None,
        j_dark_count: 0,
        j_dark_witnesses: Vec::new(),
        target_depth: None,
        verified: false,
        sampler: Some(sampler.clone()),
        sample_count: Some(report.samples.len()),
    };
    Ok(finish(doc, j, target, dark))
}

/// Names accepted by [`fixture_placement`].
pub const FIXTURE_NAMES: &str = "triangle, square, wedge, triangle-tabulated, wedge-tabulated";

/// The fixture placements, by name, with their certificates left out.
pub fn fixture_placement(name: &str) -> Option<PlacementDocument> {
    let (region, guards, construction) = match name {
        "triangle" => {
            let (p, g) = crate::fixtures::reference_triangle();
            (Region::Convex(p), g, "fixture_triangle")
        }
        "square" => {
            let (p, g) = crate::fixtures::reference_square();
            (Region::Convex(p), g, "fixture_square")
        }
        "wedge" => {
            let (w, g) = crate::fixtures::reference_wedge();
            (Region::Wedge(w), g, "fixture_wedge")
        }
        "triangle-tabulated" => {
            let (p, g) = crate::fixtures::tabulated_triangle();
            (Region::Convex(p), g, "fixture_triangle_tabulated")
        }
        "wedge-tabulated" => {
            let (w, g) = crate::fixtures::tabulated_wedge();
            (Region::Wedge(w), g, "fixture_wedge_tabulated")
        }
        _ => return None,
    };
    let metadata = Metadata {
        construction: construction.into(),
        ..Metadata::default()
    };
    Some(PlacementDocument::new(region, &guards, metadata))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::geom::{int, rat};

    #[test]
    fn rationals() {
        assert_eq!(parse_rat("-102.57").unwrap(), rat(-10257, 100));
        assert_eq!(parse_rat("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rat("+7").unwrap(), int(7));
        assert_eq!(parse_rat(".5").unwrap(), rat(1, 2));
        for bad in ["", "1/0", "1e3", "abc", "-", "."] {
            assert!(parse_rat(bad).is_err(), "{bad}");
        }
        assert_eq!(format_rat(&rat(-866, 5)), "-866/5");
        assert_eq!(format_rat(&int(4)), "4");
    }

    #[test]
    fn numbers_and_strings_both_parse() {
        let text = r#"{"region": {"kind": "polygon", "vertices": [[0, 0], ["4", 0], [4, "3.5"]]},
                       "guards": [[1, "1/2"]]}"#;
        let doc = PlacementDocument::from_json(text).unwrap();
        assert_eq!(doc.region.kind(), "convex_polygon");
        assert_eq!(doc.guards[0], Point2::new(int(1), rat(1, 2)));
        assert_eq!(doc.metadata, Metadata::default());
    }

    #[test]
    fn placement_round_trip() {
        let (t, g) = fixtures::reference_triangle();
        let (w, wg) = fixtures::reference_wedge();
        let docs = [
            PlacementDocument::new(Region::Convex(t), &g, Metadata::default()),
            PlacementDocument::new(Region::Wedge(w), &wg, Metadata::default()),
        ];
        for doc in docs {
            let text = doc.to_json();
            let back = PlacementDocument::from_json(&text).unwrap();
            assert_eq!(back, doc);
            assert_eq!(back.to_json(), text);
        }
    }

    #[test]
    fn bad_regions_are_input_errors() {
        let text = r#"{"region": {"kind": "simple_polygon", "vertices": [[0,0],[2,2],[2,0],[0,2]]},
                       "guards": []}"#;
        assert!(PlacementDocument::from_json(text).is_err());
        let text = r#"{"region": {"kind": "blob"}, "guards": []}"#;
        assert!(PlacementDocument::from_json(text).is_err());
    }

    #[test]
    fn exact_certificate_for_the_square() {
        let (s, g) = fixtures::reference_square();
        let c = exact_certificate(&s.into(), &g, Some(2), Some(13)).unwrap();
        assert_eq!(c.min_depth, 13);
        assert_eq!(c.has_j_dark, Some(false));
        assert!(c.verified);
        let back = CertificateDocument::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
    }
}
