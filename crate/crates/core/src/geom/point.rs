use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::Rat;

/// Exact rational integer shorthand.
pub fn int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Exact rational `n / d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// A point with exact rational coordinates. Ordered lexicographically by (x, y).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point2 {
    pub x: Rat,
    pub y: Rat,
}

/// A displacement with exact rational components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector2 {
    pub x: Rat,
    pub y: Rat,
}

impl Point2 {
    pub fn new(x: Rat, y: Rat) -> Self {
        Point2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point2::new(int(x), int(y))
    }

    pub fn origin() -> Self {
        Point2::from_ints(0, 0)
    }

    pub fn midpoint(&self, other: &Point2) -> Point2 {
        let half = rat(1, 2);
        Point2::new((&self.x + &other.x) * &half, (&self.y + &other.y) * &half)
    }

    /// `self + t (other - self)`.
    pub fn lerp(&self, other: &Point2, t: &Rat) -> Point2 {
        Point2::new(
            &self.x + (&other.x - &self.x) * t,
            &self.y + (&other.y - &self.y) * t,
        )
    }

    pub fn to_vector(&self) -> Vector2 {
        Vector2::new(self.x.clone(), self.y.clone())
    }
}

impl Vector2 {
    pub fn new(x: Rat, y: Rat) -> Self {
        Vector2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Vector2::new(int(x), int(y))
    }

    pub fn cross(&self, other: &Vector2) -> Rat {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn dot(&self, other: &Vector2) -> Rat {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn scale(&self, t: &Rat) -> Vector2 {
        Vector2::new(&self.x * t, &self.y * t)
    }
}

impl<'a> Sub<&'a Point2> for &'a Point2 {
    type Output = Vector2;
    fn sub(self, rhs: &'a Point2) -> Vector2 {
        Vector2::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl<'a> Add<&'a Vector2> for &'a Point2 {
    type Output = Point2;
    fn add(self, rhs: &'a Vector2) -> Point2 {
        Point2::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl<'a> Sub<&'a Vector2> for &'a Point2 {
    type Output = Point2;
    fn sub(self, rhs: &'a Vector2) -> Point2 {
        Point2::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl<'a> Add<&'a Vector2> for &'a Vector2 {
    type Output = Vector2;
    fn add(self, rhs: &'a Vector2) -> Vector2 {
        Vector2::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl<'a> Sub<&'a Vector2> for &'a Vector2 {
    type Output = Vector2;
    fn sub(self, rhs: &'a Vector2) -> Vector2 {
        Vector2::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl<'a> Mul<&'a Rat> for &'a Vector2 {
    type Output = Vector2;
    fn mul(self, rhs: &'a Rat) -> Vector2 {
        self.scale(rhs)
    }
}

impl Neg for &Vector2 {
    type Output = Vector2;
    fn neg(self) -> Vector2 {
        Vector2::new(-&self.x, -&self.y)
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for Vector2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}>", self.x, self.y)
    }
}
