use num_traits::Zero;

use super::{int, Point2, Rat, Vector2};
use crate::error::{Error, Result};

/// Rational affine map `p -> M p + t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Affine {
    m: [[Rat; 2]; 2],
    t: [Rat; 2],
}

impl Affine {
    pub fn new(m: [[Rat; 2]; 2], t: [Rat; 2]) -> Self {
        Affine { m, t }
    }

    pub fn identity() -> Self {
        Affine::new([[int(1), int(0)], [int(0), int(1)]], [int(0), int(0)])
    }

    /// Quarter turn counterclockwise about the origin.
    pub fn quarter_turn() -> Self {
        Affine::new([[int(0), int(-1)], [int(1), int(0)]], [int(0), int(0)])
    }

    /// Reflection across the y axis.
    pub fn mirror_x() -> Self {
        Affine::new([[int(-1), int(0)], [int(0), int(1)]], [int(0), int(0)])
    }

    /// The map taking `src[i]` to `dst[i]`. Fails if `src` is collinear.
    pub fn from_triangles(src: [&Point2; 3], dst: [&Point2; 3]) -> Result<Self> {
        let a = Affine::frame(src[0], &(src[1] - src[0]), &(src[2] - src[0]))?;
        let b = Affine::frame(dst[0], &(dst[1] - dst[0]), &(dst[2] - dst[0]))?;
        Ok(b.compose(&a.inverse()?))
    }

    /// The map (x, y) -> origin + x e1 + y e2.
    pub fn frame(origin: &Point2, e1: &Vector2, e2: &Vector2) -> Result<Self> {
        Ok(Affine::new(
            [[e1.x.clone(), e2.x.clone()], [e1.y.clone(), e2.y.clone()]],
            [origin.x.clone(), origin.y.clone()],
        ))
    }

    pub fn det(&self) -> Rat {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    pub fn inverse(&self) -> Result<Self> {
        let d = self.det();
        if d.is_zero() {
            return Err(Error::InvalidInput("singular affine map".into()));
        }
        let m = [
            [&self.m[1][1] / &d, -&self.m[0][1] / &d],
            [-&self.m[1][0] / &d, &self.m[0][0] / &d],
        ];
        let t = [
            -(&m[0][0] * &self.t[0] + &m[0][1] * &self.t[1]),
            -(&m[1][0] * &self.t[0] + &m[1][1] * &self.t[1]),
        ];
        Ok(Affine::new(m, t))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Affine) -> Affine {
        let a = &self.m;
        let b = &other.m;
        let m = [
            [
                &a[0][0] * &b[0][0] + &a[0][1] * &b[1][0],
                &a[0][0] * &b[0][1] + &a[0][1] * &b[1][1],
            ],
            [
                &a[1][0] * &b[0][0] + &a[1][1] * &b[1][0],
                &a[1][0] * &b[0][1] + &a[1][1] * &b[1][1],
            ],
        ];
        let t = [
            &a[0][0] * &other.t[0] + &a[0][1] * &other.t[1] + &self.t[0],
            &a[1][0] * &other.t[0] + &a[1][1] * &other.t[1] + &self.t[1],
        ];
        Affine::new(m, t)
    }

    pub fn apply(&self, p: &Point2) -> Point2 {
        Point2::new(
            &self.m[0][0] * &p.x + &self.m[0][1] * &p.y + &self.t[0],
            &self.m[1][0] * &p.x + &self.m[1][1] * &p.y + &self.t[1],
        )
    }

    pub fn apply_vector(&self, v: &Vector2) -> Vector2 {
        Vector2::new(
            &self.m[0][0] * &v.x + &self.m[0][1] * &v.y,
            &self.m[1][0] * &v.x + &self.m[1][1] * &v.y,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rat;

    #[test]
    fn triangle_map_hits_targets() {
        let s = [
            Point2::from_ints(0, 0),
            Point2::from_ints(1, 0),
            Point2::from_ints(0, 1),
        ];
        let d = [
            Point2::new(rat(1, 2), int(3)),
            Point2::from_ints(-2, 5),
            Point2::new(int(7), rat(-1, 3)),
        ];
        let f = Affine::from_triangles([&s[0], &s[1], &s[2]], [&d[0], &d[1], &d[2]]).unwrap();
        for i in 0..3 {
            assert_eq!(f.apply(&s[i]), d[i]);
        }
        let back = f.inverse().unwrap();
        assert_eq!(back.apply(&d[1]), s[1]);
        assert_eq!(f.compose(&back), Affine::identity());
    }

    #[test]
    fn quarter_turn_cycles() {
        let r = Affine::quarter_turn();
        let p = Point2::from_ints(3, 1);
        let q = r.apply(&r.apply(&r.apply(&r.apply(&p))));
        assert_eq!(q, p);
        assert_eq!(r.apply(&p), Point2::from_ints(-1, 3));
    }
}
