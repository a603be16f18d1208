//! Named shapes available without an input file.

use darkgallery_core::fixtures;
use darkgallery_core::io::Region;
use darkgallery_core::simple::{make_comb, Comb};
use darkgallery_core::{Error, Result};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Radius of random shapes; integer vertices need room to stay distinct.
const RANDOM_RADIUS: f64 = 1000.0;

#[allow(clippy::large_enum_variant)]
pub enum Shape {
    Region(Region),
    Comb(Comb),
}

pub const SHAPE_NAMES: &str = "triangle, square, wedge, pentagon, hexagon, heptagon, octagon, \
comb:<s>, random-convex:<n>, random-simple:<n>";

pub fn shape(name: &str, seed: u64) -> Option<Result<Shape>> {
    let stock = |n| {
        Shape::Region(Region::Convex(
            fixtures::stock_polygon(n).expect("stock sizes"),
        ))
    };
    let fixed = match name {
        "triangle" => Some(stock(3)),
        "square" => Some(stock(4)),
        "pentagon" => Some(stock(5)),
        "hexagon" => Some(stock(6)),
        "heptagon" => Some(stock(7)),
        "octagon" => Some(stock(8)),
        "wedge" => Some(Shape::Region(Region::Wedge(
            fixtures::reference_wedge_region(),
        ))),
        _ => None,
    };
    if let Some(s) = fixed {
        return Some(Ok(s));
    }
    let (family, size) = name.split_once(':')?;
    let size = match size.parse::<usize>() {
        Ok(v) => v,
        Err(_) => {
            return Some(Err(Error::InvalidInput(format!(
                "bad size in shape name {name:?}"
            ))))
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Some(match family {
        "comb" => make_comb(size).map(Shape::Comb),
        "random-convex" if size >= 3 => Ok(Shape::Region(Region::Convex(
            fixtures::random_convex_polygon(&mut rng, size, RANDOM_RADIUS),
        ))),
        "random-simple" if size >= 3 => Ok(Shape::Region(Region::Simple(
            fixtures::random_simple_polygon(&mut rng, size, RANDOM_RADIUS),
        ))),
        "random-convex" | "random-simple" => Err(Error::TooFewVertices(size)),
        _ => return None,
    })
}
