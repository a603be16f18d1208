//! Homogeneous integer triples for the hot predicates.
//!
//! A finite point (x, y) becomes (X, Y, W) with W > 0 and x = X / W; a
//! direction becomes (X, Y, 0); a line a x + b y + c = 0 becomes (a, b, c).
//! Incidence and side tests are then a single integer dot product, and the
//! line through two points (or the meet of two lines) is a cross product.
//! Components that fit in 62 bits take an `i128` path that cannot overflow;
//! everything else falls back to `BigInt`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{Point2, Rat, Vector2};

const SMALL_LIMIT: i64 = 1 << 62;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hom3 {
    small: Option<[i64; 3]>,
    big: [BigInt; 3],
}

fn small_of(v: &[BigInt; 3]) -> Option<[i64; 3]> {
    let mut out = [0i64; 3];
    for (slot, c) in out.iter_mut().zip(v.iter()) {
        let s = c.to_i64()?;
        if s.abs() >= SMALL_LIMIT {
            return None;
        }
        *slot = s;
    }
    Some(out)
}

fn reduce(mut v: [BigInt; 3]) -> [BigInt; 3] {
    let g = v[0].gcd(&v[1]).gcd(&v[2]);
    if !g.is_zero() && g != BigInt::from(1) {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    v
}

impl Hom3 {
    pub fn from_big(v: [BigInt; 3]) -> Self {
        let v = reduce(v);
        Hom3 {
            small: small_of(&v),
            big: v,
        }
    }

    pub fn point(p: &Point2) -> Self {
        let w = p.x.denom().lcm(p.y.denom());
        let x = p.x.numer() * (&w / p.x.denom());
        let y = p.y.numer() * (&w / p.y.denom());
        Hom3::from_big([x, y, w])
    }

    pub fn direction(v: &Vector2) -> Self {
        let w = v.x.denom().lcm(v.y.denom());
        let x = v.x.numer() * (&w / v.x.denom());
        let y = v.y.numer() * (&w / v.y.denom());
        Hom3::from_big([x, y, BigInt::zero()])
    }

    /// Line through two homogeneous points, or meet point of two lines.
    pub fn cross(&self, o: &Hom3) -> Hom3 {
        if let (Some(a), Some(b)) = (self.small, o.small) {
            let (a0, a1, a2) = (a[0] as i128, a[1] as i128, a[2] as i128);
            let (b0, b1, b2) = (b[0] as i128, b[1] as i128, b[2] as i128);
            let v = [a1 * b2 - a2 * b1, a2 * b0 - a0 * b2, a0 * b1 - a1 * b0];
            return Hom3::from_big(v.map(BigInt::from));
        }
        let (a, b) = (&self.big, &o.big);
        Hom3::from_big([
            &a[1] * &b[2] - &a[2] * &b[1],
            &a[2] * &b[0] - &a[0] * &b[2],
            &a[0] * &b[1] - &a[1] * &b[0],
        ])
    }

    pub fn dot(&self, o: &Hom3) -> BigInt {
        if let (Some(a), Some(b)) = (self.small, o.small) {
            let s = a[0] as i128 * b[0] as i128
                + a[1] as i128 * b[1] as i128
                + a[2] as i128 * b[2] as i128;
            return BigInt::from(s);
        }
        let (a, b) = (&self.big, &o.big);
        &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
    }

    /// Sign of the dot product.
    pub fn dot_sign(&self, o: &Hom3) -> i8 {
        if let (Some(a), Some(b)) = (self.small, o.small) {
            let s = a[0] as i128 * b[0] as i128
                + a[1] as i128 * b[1] as i128
                + a[2] as i128 * b[2] as i128;
            return s.signum() as i8;
        }
        let (a, b) = (&self.big, &o.big);
        let s = &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2];
        if s.is_zero() {
            0
        } else if s.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn is_zero(&self) -> bool {
        self.big.iter().all(Zero::is_zero)
    }

    pub fn is_finite(&self) -> bool {
        !self.big[2].is_zero()
    }

    /// Affine point for a triple with nonzero last component.
    pub fn to_point(&self) -> Option<Point2> {
        if self.big[2].is_zero() {
            return None;
        }
        let w = &self.big[2];
        Some(Point2::new(
            Rat::new(self.big[0].clone(), w.clone()),
            Rat::new(self.big[1].clone(), w.clone()),
        ))
    }

    pub fn components(&self) -> &[BigInt; 3] {
        &self.big
    }

    /// Nearest floats of the components; only for filtering before an exact test.
    pub fn approx(&self) -> [f64; 3] {
        self.big.each_ref().map(|c| c.to_f64().unwrap_or(f64::NAN))
    }
}

/// Orientation sign of three finite points via homogeneous coordinates.
pub fn hom_orientation(a: &Hom3, b: &Hom3, c: &Hom3) -> i8 {
    a.cross(b).dot_sign(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{orientation, rat};

    #[test]
    fn point_roundtrip() {
        let p = Point2::new(rat(-7, 6), rat(5, 4));
        assert_eq!(Hom3::point(&p).to_point().unwrap(), p);
    }

    #[test]
    fn orientation_matches_rational() {
        let pts = [
            Point2::new(rat(1, 3), rat(2, 5)),
            Point2::new(rat(-4, 7), rat(9, 2)),
            Point2::new(rat(11, 3), rat(-1, 8)),
            Point2::new(rat(2, 3), rat(4, 5)),
        ];
        for a in &pts {
            for b in &pts {
                for c in &pts {
                    let h = hom_orientation(&Hom3::point(a), &Hom3::point(b), &Hom3::point(c));
                    assert_eq!(h, orientation(a, b, c).sign());
                }
            }
        }
    }

    #[test]
    fn big_components_fall_back() {
        let huge = Rat::new(BigInt::from(1u8) << 200, BigInt::from(3));
        let a = Point2::new(huge.clone(), rat(0, 1));
        let b = Point2::new(rat(0, 1), huge.clone());
        let c = Point2::new(huge.clone() / rat(2, 1), huge / rat(2, 1));
        let h = hom_orientation(&Hom3::point(&a), &Hom3::point(&b), &Hom3::point(&c));
        assert_eq!(h, 0);
    }

    #[test]
    fn meet_of_lines() {
        let l1 =
            Hom3::point(&Point2::from_ints(0, 0)).cross(&Hom3::point(&Point2::from_ints(2, 2)));
        let l2 =
            Hom3::point(&Point2::from_ints(0, 2)).cross(&Hom3::point(&Point2::from_ints(2, 0)));
        assert_eq!(l1.cross(&l2).to_point().unwrap(), Point2::from_ints(1, 1));
    }
}
