//! The open-ball velocity type and the Einstein gyrovector operations on it:
//! gamma factors, Einstein addition/subtraction, scalar multiplication, and
//! coaddition.
//!
//! Every `BallVec` carries the ball radius `c` it was constructed against.
//! Binary operations reject operands with different radii.

use crate::error::{Error, Result};
use crate::vec3::{self, Vec3};

/// Construction rejects norms above `c * (1 - BOUNDARY_MARGIN)` so that
/// downstream gamma factors stay finite.
pub const BOUNDARY_MARGIN: f64 = 1e-15;

/// A relativistically admissible velocity: a 3-vector strictly inside the
/// open ball of radius `c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BallVec {
    v: Vec3,
    c: f64,
}

impl BallVec {
    pub fn new(x: f64, y: f64, z: f64, c: f64) -> Result<Self> {
        Self::from_array([x, y, z], c)
    }

    pub fn from_array(v: Vec3, c: f64) -> Result<Self> {
        if !(c.is_finite() && c > 0.0) {
            return Err(Error::BadRadius(c));
        }
        if !v.iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite);
        }
        let norm = vec3::norm(v);
        if norm >= c * (1.0 - BOUNDARY_MARGIN) {
            return Err(Error::OutOfBall { norm, c });
        }
        Ok(Self { v, c })
    }

    pub fn zero(c: f64) -> Self {
        Self { v: [0.0; 3], c }
    }

    pub fn x(&self) -> f64 {
        self.v[0]
    }

    pub fn y(&self) -> f64 {
        self.v[1]
    }

    pub fn z(&self) -> f64 {
        self.v[2]
    }

    pub fn components(&self) -> Vec3 {
        self.v
    }

    /// Ball radius this velocity was validated against.
    pub fn radius(&self) -> f64 {
        self.c
    }

    pub fn norm(&self) -> f64 {
        vec3::norm(self.v)
    }

    pub fn norm_sq(&self) -> f64 {
        vec3::norm_sq(self.v)
    }

    pub fn neg(&self) -> Self {
        Self {
            v: vec3::neg(self.v),
            c: self.c,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.v == [0.0; 3]
    }

    pub(crate) fn check_same_radius(&self, other: &Self) -> Result<()> {
        if self.c == other.c {
            Ok(())
        } else {
            Err(Error::MixedRadius {
                lhs: self.c,
                rhs: other.c,
            })
        }
    }
}

/// A Lorentz gamma factor, always finite and >= 1.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Gamma(f64);

impl Gamma {
    pub fn value(&self) -> f64 {
        self.0
    }
}

/// Gamma factor of a ball velocity, `1 / sqrt(1 - |v|^2 / c^2)`.
pub fn gamma(v: &BallVec) -> Gamma {
    Gamma(gamma_of_speed(v.norm(), v.radius()).unwrap())
}

/// Gamma factor of a scalar speed. Errors when `speed >= c`.
pub fn gamma_of_speed(speed: f64, c: f64) -> Result<f64> {
    let beta_sq = (speed / c) * (speed / c);
    if beta_sq >= 1.0 {
        return Err(Error::OutOfBall { norm: speed, c });
    }
    Ok(1.0 / (1.0 - beta_sq).sqrt())
}

/// Einstein velocity addition.
pub fn einstein_add(u: &BallVec, v: &BallVec) -> Result<BallVec> {
    u.check_same_radius(v)?;
    let c2 = u.radius() * u.radius();
    let gu = gamma(u).value();
    let uv = vec3::dot(u.components(), v.components());
    let prefactor = 1.0 / (1.0 + uv / c2);
    let term_u = u.components();
    let term_v = vec3::scale(1.0 / gu, v.components());
    let term_proj = vec3::scale(gu / ((1.0 + gu) * c2) * uv, u.components());
    let sum = vec3::scale(prefactor, vec3::add(vec3::add(term_u, term_v), term_proj));
    BallVec::from_array(sum, u.radius())
}

/// Einstein subtraction, `u (+) (-v)`.
pub fn einstein_sub(u: &BallVec, v: &BallVec) -> Result<BallVec> {
    einstein_add(u, &v.neg())
}

/// The gamma identity: `gamma_u gamma_v (1 + u.v / c^2)`, which equals
/// `gamma(u (+) v)`.
pub fn gamma_identity(u: &BallVec, v: &BallVec) -> Result<Gamma> {
    u.check_same_radius(v)?;
    let c2 = u.radius() * u.radius();
    let uv = vec3::dot(u.components(), v.components());
    Ok(Gamma(
        gamma(u).value() * gamma(v).value() * (1.0 + uv / c2),
    ))
}

/// Einstein scalar multiplication,
/// `r (x) v = c tanh(r atanh(|v| / c)) v / |v|`, with `r (x) 0 = 0`.
pub fn scalar_mul(r: f64, v: &BallVec) -> BallVec {
    let speed = v.norm();
    if speed == 0.0 {
        return BallVec::zero(v.radius());
    }
    let c = v.radius();
    let new_speed = c * (r * (speed / c).atanh()).tanh();
    let out = vec3::scale(new_speed / speed, v.components());
    // tanh keeps the magnitude strictly below c for finite r
    BallVec::from_array(out, c).unwrap_or_else(|_| {
        let clamped = c * (1.0 - 2.0 * BOUNDARY_MARGIN);
        BallVec {
            v: vec3::scale(clamped / speed, v.components()),
            c,
        }
    })
}

/// Definitional gyration image, `gyr[a,b]w = -(a (+) b) (+) {a (+) (b (+) w)}`.
pub fn gyr_image(a: &BallVec, b: &BallVec, w: &BallVec) -> Result<BallVec> {
    let ab = einstein_add(a, b)?;
    let bw = einstein_add(b, w)?;
    let abw = einstein_add(a, &bw)?;
    einstein_add(&ab.neg(), &abw)
}

/// Einstein coaddition, `u (++) v = u (+) gyr[u, -v] v`. Commutative.
pub fn coadd(u: &BallVec, v: &BallVec) -> Result<BallVec> {
    let rotated = gyr_image(u, &v.neg(), v)?;
    einstein_add(u, &rotated)
}

/// Einstein subtraction dual to coaddition, `u (--) v = u (++) (-v)`.
pub fn cosub(u: &BallVec, v: &BallVec) -> Result<BallVec> {
    coadd(u, &v.neg())
}

/// Einstein addition of two nonnegative scalar speeds,
/// `(a + b) / (1 + a b / c^2)`. Used by the gyrotriangle inequality.
pub fn scalar_einstein_add(a: f64, b: f64, c: f64) -> f64 {
    (a + b) / (1.0 + a * b / (c * c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vec3::max_abs_diff;

    fn bv(x: f64, y: f64, z: f64) -> BallVec {
        BallVec::new(x, y, z, 1.0).unwrap()
    }

    #[test]
    fn rejects_out_of_ball() {
        assert!(matches!(
            BallVec::new(1.1, 0.0, 0.0, 1.0),
            Err(Error::OutOfBall { .. })
        ));
        assert!(matches!(
            BallVec::new(1.0, 0.0, 0.0, 1.0),
            Err(Error::OutOfBall { .. })
        ));
        assert!(BallVec::new(0.999999, 0.0, 0.0, 1.0).is_ok());
    }

    #[test]
    fn rejects_non_finite() {
        assert_eq!(BallVec::new(f64::NAN, 0.0, 0.0, 1.0), Err(Error::NonFinite));
        assert_eq!(
            BallVec::new(0.0, f64::INFINITY, 0.0, 1.0),
            Err(Error::NonFinite)
        );
    }

    #[test]
    fn rejects_mixed_radius() {
        let u = BallVec::new(0.1, 0.0, 0.0, 1.0).unwrap();
        let v = BallVec::new(0.1, 0.0, 0.0, 2.0).unwrap();
        assert!(matches!(
            einstein_add(&u, &v),
            Err(Error::MixedRadius { .. })
        ));
    }

    #[test]
    fn gamma_values() {
        assert_eq!(gamma(&BallVec::zero(1.0)).value(), 1.0);
        assert!((gamma(&bv(0.6, 0.0, 0.0)).value() - 1.25).abs() < 1e-15);
        assert!((gamma(&bv(0.0, 0.8, 0.0)).value() - 5.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn gamma_norm_identity() {
        // |v|^2 / c^2 = (g^2 - 1) / g^2
        let v = bv(0.3, -0.5, 0.2);
        let g = gamma(&v).value();
        assert!((v.norm_sq() - (g * g - 1.0) / (g * g)).abs() < 1e-15);
    }

    #[test]
    fn add_left_identity() {
        let v = bv(0.5, 0.0, 0.0);
        let sum = einstein_add(&BallVec::zero(1.0), &v).unwrap();
        assert_eq!(sum.components(), v.components());
    }

    #[test]
    fn add_collinear_matches_1d_formula() {
        let u = bv(0.5, 0.0, 0.0);
        let sum = einstein_add(&u, &u).unwrap();
        assert!((sum.x() - 0.8).abs() < 1e-15);
        assert!(sum.y().abs() < 1e-15 && sum.z().abs() < 1e-15);
    }

    #[test]
    fn add_orthogonal_example() {
        let u = bv(0.6, 0.0, 0.0);
        let v = bv(0.0, 0.6, 0.0);
        let sum = einstein_add(&u, &v).unwrap();
        assert!(max_abs_diff(sum.components(), [0.6, 0.48, 0.0]) < 1e-15);
    }

    #[test]
    fn sub_is_inverse() {
        let v = bv(0.3, 0.2, 0.1);
        let zero = einstein_sub(&v, &v).unwrap();
        assert!(zero.norm() < 1e-15);
    }

    #[test]
    fn left_cancellation() {
        let u = bv(0.4, 0.0, 0.0);
        let v = bv(0.0, 0.5, 0.0);
        let uv = einstein_add(&u, &v).unwrap();
        let back = einstein_add(&u.neg(), &uv).unwrap();
        assert!(max_abs_diff(back.components(), v.components()) < 1e-15);
    }

    #[test]
    fn naive_right_cancellation_fails() {
        let u = bv(0.6, 0.0, 0.0);
        let v = bv(0.0, 0.6, 0.0);
        let uv = einstein_add(&u, &v).unwrap();
        let back = einstein_sub(&uv, &v).unwrap();
        assert!(max_abs_diff(back.components(), u.components()) > 1e-3);
    }

    #[test]
    fn automorphic_inverse() {
        let u = bv(0.4, 0.1, -0.2);
        let v = bv(-0.1, 0.5, 0.3);
        let lhs = einstein_add(&u, &v).unwrap().neg();
        let rhs = einstein_add(&u.neg(), &v.neg()).unwrap();
        assert!(max_abs_diff(lhs.components(), rhs.components()) < 1e-15);
    }

    #[test]
    fn gamma_identity_orthogonal() {
        let u = bv(0.6, 0.0, 0.0);
        let v = bv(0.0, 0.6, 0.0);
        let g = gamma_identity(&u, &v).unwrap().value();
        assert!((g - 1.5625).abs() < 1e-15);
        let direct = gamma(&einstein_add(&u, &v).unwrap()).value();
        assert!((g - direct).abs() < 1e-12);
    }

    #[test]
    fn gamma_identity_trivial_cases() {
        let u = bv(0.3, 0.4, 0.0);
        let g = gamma_identity(&u, &BallVec::zero(1.0)).unwrap().value();
        assert!((g - gamma(&u).value()).abs() < 1e-15);
        let one = gamma_identity(&u, &u.neg()).unwrap().value();
        assert!((one - 1.0).abs() < 1e-15);
    }

    #[test]
    fn scalar_mul_examples() {
        let v = bv(0.3, 0.1, 0.0);
        let same = scalar_mul(1.0, &v);
        assert!(max_abs_diff(same.components(), v.components()) < 1e-15);

        let half = bv(0.5, 0.0, 0.0);
        let doubled = scalar_mul(2.0, &half);
        assert!((doubled.x() - 0.8).abs() < 1e-15);

        let full = bv(0.8, 0.0, 0.0);
        let halved = scalar_mul(0.5, &full);
        assert!((halved.x() - 0.5).abs() < 1e-15);
        let back = scalar_mul(2.0, &halved);
        assert!(max_abs_diff(back.components(), full.components()) < 1e-14);
    }

    #[test]
    fn scalar_mul_zero_short_circuits() {
        let z = scalar_mul(7.5, &BallVec::zero(1.0));
        assert!(z.is_zero());
    }

    #[test]
    fn scalar_mul_integer_matches_repeated_addition() {
        let v = bv(0.2, 0.3, -0.1);
        let mut acc = v;
        for _ in 1..4 {
            acc = einstein_add(&acc, &v).unwrap();
        }
        let quad = scalar_mul(4.0, &v);
        assert!(max_abs_diff(acc.components(), quad.components()) < 1e-12);
    }

    #[test]
    fn coadd_doubles() {
        let u = bv(0.4, 0.2, 0.0);
        let co = coadd(&u, &u).unwrap();
        let twice = scalar_mul(2.0, &u);
        assert!(max_abs_diff(co.components(), twice.components()) < 1e-13);
    }

    #[test]
    fn coadd_commutative() {
        let u = bv(0.6, 0.0, 0.0);
        let v = bv(0.0, 0.5, 0.2);
        let a = coadd(&u, &v).unwrap();
        let b = coadd(&v, &u).unwrap();
        assert!(max_abs_diff(a.components(), b.components()) < 1e-14);
    }

    #[test]
    fn right_cancellation_laws() {
        let u = bv(0.3, 0.0, 0.0);
        let v = bv(0.0, 0.4, 0.0);
        // (v (+) u) (--) u = v
        let lhs = cosub(&einstein_add(&v, &u).unwrap(), &u).unwrap();
        assert!(max_abs_diff(lhs.components(), v.components()) < 1e-14);
        // (v (++) u) (-) u = v
        let lhs2 = einstein_sub(&coadd(&v, &u).unwrap(), &u).unwrap();
        assert!(max_abs_diff(lhs2.components(), v.components()) < 1e-14);
    }

    #[test]
    fn newtonian_limit() {
        let c = 1e6;
        let u = BallVec::new(0.3, -0.7, 0.2, c).unwrap();
        let v = BallVec::new(-0.5, 0.1, 0.9, c).unwrap();
        let sum = einstein_add(&u, &v).unwrap();
        let plain = vec3::add(u.components(), v.components());
        assert!(max_abs_diff(sum.components(), plain) < 1e-9);
    }
}
