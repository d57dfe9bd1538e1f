//! Beltrami-Klein ball-model primitives induced by Einstein addition:
//! gyrodistance, gyrolines, gyromidpoints, gyrotriangles with defect, and
//! the Riemannian metric tensor of the disc model.

use crate::ball::{self, BallVec};
use crate::error::{Error, Result};
use crate::vec3::{self, Vec3};

/// Tiny negative defect radicands produced by collinear vertices are clamped
/// to zero above this threshold.
pub const DEFECT_RADICAND_CLAMP: f64 = -1e-12;

/// Gyrodistance `d(u, v) = |u (-) v|`.
pub fn gyrodistance(u: &BallVec, v: &BallVec) -> Result<f64> {
    Ok(ball::einstein_sub(u, v)?.norm())
}

/// The hyperbolic geodesic through two distinct points,
/// `point(t) = A (+) (-A (+) B) (x) t`. In the Klein model its trace is a
/// chord of the ball.
#[derive(Debug, Clone, Copy)]
pub struct GyroLine {
    a: BallVec,
    b: BallVec,
}

impl GyroLine {
    pub fn new(a: BallVec, b: BallVec) -> Result<Self> {
        a.check_same_radius(&b)?;
        if a == b {
            return Err(Error::CoincidentAnchors);
        }
        Ok(Self { a, b })
    }

    pub fn anchors(&self) -> (BallVec, BallVec) {
        (self.a, self.b)
    }

    pub fn point(&self, t: f64) -> BallVec {
        gyroline_point(&self.a, &self.b, t).expect("anchors validated at construction")
    }
}

/// `A (+) (-A (+) B) (x) t`; passes through A at t = 0, B at t = 1, and the
/// gyromidpoint at t = 1/2.
pub fn gyroline_point(a: &BallVec, b: &BallVec, t: f64) -> Result<BallVec> {
    let dir = ball::einstein_add(&a.neg(), b)?;
    ball::einstein_add(a, &ball::scalar_mul(t, &dir))
}

/// Gyromidpoint `M = A (+) (-A (+) B) (x) 1/2`.
pub fn gyromidpoint(a: &BallVec, b: &BallVec) -> Result<BallVec> {
    gyroline_point(a, b, 0.5)
}

/// The dual gyromidpoint formula `M = 1/2 (x) (A (++) B)`; agrees with
/// [`gyromidpoint`] and serves as its independent cross-check.
pub fn gyromidpoint_coadd(a: &BallVec, b: &BallVec) -> Result<BallVec> {
    Ok(ball::scalar_mul(0.5, &ball::coadd(a, b)?))
}

/// Point on the Euclidean line `A + (-A + B) t` through two points of R^3.
pub fn euclidean_line_point(a: Vec3, b: Vec3, t: f64) -> Vec3 {
    vec3::add(a, vec3::scale(t, vec3::sub(b, a)))
}

/// A hyperbolic triangle: three ball vertices with derived side gyrovectors
/// and side gamma factors.
#[derive(Debug, Clone, Copy)]
pub struct GyroTriangle {
    vertices: [BallVec; 3],
    sides: [BallVec; 3],
    gammas: [f64; 3],
}

impl GyroTriangle {
    /// Vertices `U, V, W`; side gyrovectors `u = -W (+) V`, `v = -W (+) U`,
    /// `w = -U (+) V`.
    pub fn new(u: BallVec, v: BallVec, w: BallVec) -> Result<Self> {
        u.check_same_radius(&v)?;
        u.check_same_radius(&w)?;
        let side_u = ball::einstein_add(&w.neg(), &v)?;
        let side_v = ball::einstein_add(&w.neg(), &u)?;
        let side_w = ball::einstein_add(&u.neg(), &v)?;
        let gammas = [
            ball::gamma(&side_u).value(),
            ball::gamma(&side_v).value(),
            ball::gamma(&side_w).value(),
        ];
        Ok(Self {
            vertices: [u, v, w],
            sides: [side_u, side_v, side_w],
            gammas,
        })
    }

    pub fn vertices(&self) -> [BallVec; 3] {
        self.vertices
    }

    /// Side gyrovectors `(u, v, w)`.
    pub fn sides(&self) -> [BallVec; 3] {
        self.sides
    }

    /// Side gamma factors `(gamma_u, gamma_v, gamma_w)`.
    pub fn side_gammas(&self) -> [f64; 3] {
        self.gammas
    }

    /// Gyrotriangular defect in `[0, pi)`:
    /// `tan(d/2) = sqrt(1 + 2 g_u g_v g_w - g_u^2 - g_v^2 - g_w^2)
    ///             / (1 + g_u + g_v + g_w)`.
    pub fn defect(&self) -> Result<f64> {
        let [gu, gv, gw] = self.gammas;
        defect_from_gammas(gu, gv, gw)
    }
}

/// Defect from the three side gamma factors directly.
pub fn defect_from_gammas(gu: f64, gv: f64, gw: f64) -> Result<f64> {
    let radicand = 1.0 + 2.0 * gu * gv * gw - gu * gu - gv * gv - gw * gw;
    if radicand < DEFECT_RADICAND_CLAMP {
        return Err(Error::DegenerateTriangle(radicand));
    }
    let radicand = radicand.max(0.0);
    Ok(2.0 * (radicand.sqrt() / (1.0 + gu + gv + gw)).atan())
}

/// Metric tensor of the Beltrami-Klein disc model at a point of the 2-D ball.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricTensor2 {
    pub e: f64,
    pub f: f64,
    pub g: f64,
}

impl MetricTensor2 {
    /// Quadratic form `E dx1^2 + 2 F dx1 dx2 + G dx2^2`.
    pub fn quadratic_form(&self, dx1: f64, dx2: f64) -> f64 {
        self.e * dx1 * dx1 + 2.0 * self.f * dx1 * dx2 + self.g * dx2 * dx2
    }

    pub fn determinant(&self) -> f64 {
        self.e * self.g - self.f * self.f
    }
}

/// `E = c^2 (c^2 - x2^2) / (c^2 - r^2)^2`, `F = c^2 x1 x2 / (c^2 - r^2)^2`,
/// `G = c^2 (c^2 - x1^2) / (c^2 - r^2)^2` with `r^2 = x1^2 + x2^2 < c^2`.
pub fn metric_tensor(x1: f64, x2: f64, c: f64) -> Result<MetricTensor2> {
    let c2 = c * c;
    let r2 = x1 * x1 + x2 * x2;
    if r2 >= c2 {
        return Err(Error::OutOfBall {
            norm: r2.sqrt(),
            c,
        });
    }
    let denom = (c2 - r2) * (c2 - r2);
    Ok(MetricTensor2 {
        e: c2 * (c2 - x2 * x2) / denom,
        f: c2 * x1 * x2 / denom,
        g: c2 * (c2 - x1 * x1) / denom,
    })
}
