//! Gyrations computed three independent ways (definitional, closed-form, and
//! via the antisymmetric omega matrix), plus the Thomas precession angle
//! formulas that relate the gyration angle to its generating angle.

use crate::ball::{gamma, gamma_identity, BallVec};
use crate::error::{Error, Result};
use crate::vec3::{self, Vec3};

/// Two velocities are treated as parallel when |u x v| <= this factor times
/// |u||v|; the gyration is then the exact identity.
pub const PARALLEL_THRESHOLD: f64 = 1e-14;

/// A proper rotation of Euclidean 3-space: orthogonal with determinant 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation3 {
    m: [[f64; 3]; 3],
}

impl Rotation3 {
    pub fn identity() -> Self {
        Self {
            m: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
        }
    }

    pub fn from_rows(m: [[f64; 3]; 3]) -> Self {
        Self { m }
    }

    /// Rotation by `angle` about a unit `axis` (Rodrigues form).
    pub fn from_axis_angle(axis: Vec3, angle: f64) -> Self {
        let n = vec3::normalize(axis);
        let (s, c) = angle.sin_cos();
        let k = 1.0 - c;
        let (x, y, z) = (n[0], n[1], n[2]);
        Self {
            m: [
                [c + x * x * k, x * y * k - z * s, x * z * k + y * s],
                [y * x * k + z * s, c + y * y * k, y * z * k - x * s],
                [z * x * k - y * s, z * y * k + x * s, c + z * z * k],
            ],
        }
    }

    /// Rotation by `angle` about the +z axis, counterclockwise viewed from +z.
    pub fn about_z(angle: f64) -> Self {
        Self::from_axis_angle([0.0, 0.0, 1.0], angle)
    }

    pub fn entries(&self) -> [[f64; 3]; 3] {
        self.m
    }

    pub fn apply(&self, w: Vec3) -> Vec3 {
        [
            vec3::dot(self.m[0], w),
            vec3::dot(self.m[1], w),
            vec3::dot(self.m[2], w),
        ]
    }

    /// Apply to a ball velocity. Rotations are isometries, so the result
    /// stays in the ball.
    pub fn apply_ball(&self, w: &BallVec) -> BallVec {
        BallVec::from_array(self.apply(w.components()), w.radius())
            .expect("rotation preserves the norm")
    }

    pub fn transpose(&self) -> Self {
        let mut t = [[0.0; 3]; 3];
        for (i, row) in self.m.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                t[j][i] = x;
            }
        }
        Self { m: t }
    }

    pub fn compose(&self, other: &Self) -> Self {
        let mut p = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                p[i][j] = (0..3).map(|k| self.m[i][k] * other.m[k][j]).sum();
            }
        }
        Self { m: p }
    }

    pub fn trace(&self) -> f64 {
        self.m[0][0] + self.m[1][1] + self.m[2][2]
    }

    pub fn det(&self) -> f64 {
        let m = &self.m;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                d = d.max((self.m[i][j] - other.m[i][j]).abs());
            }
        }
        d
    }

    /// Residual of M^T M = I.
    pub fn orthogonality_residual(&self) -> f64 {
        self.transpose()
            .compose(self)
            .max_abs_diff(&Self::identity())
    }

    /// Residual of the trace identity
    /// M^3 - tr(M) M^2 + tr(M) M - I = 0, which characterizes proper
    /// rotations of 3-space.
    pub fn trace_identity_residual(&self) -> f64 {
        let t = self.trace();
        let m2 = self.compose(self);
        let m3 = m2.compose(self);
        let mut d: f64 = 0.0;
        let id = Self::identity();
        for i in 0..3 {
            for j in 0..3 {
                let r = m3.m[i][j] - t * m2.m[i][j] + t * self.m[i][j] - id.m[i][j];
                d = d.max(r.abs());
            }
        }
        d
    }
}

/// The antisymmetric matrix `Omega(a, b) = b a^T - a b^T`, acting as
/// `Omega x = (a x b) x x`.
#[derive(Debug, Clone, Copy)]
pub struct OmegaMatrix {
    m: [[f64; 3]; 3],
    a: Vec3,
    b: Vec3,
}

impl OmegaMatrix {
    pub fn new(a: Vec3, b: Vec3) -> Self {
        let mut m = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] = b[i] * a[j] - a[i] * b[j];
            }
        }
        Self { m, a, b }
    }

    pub fn entries(&self) -> [[f64; 3]; 3] {
        self.m
    }

    pub fn generators(&self) -> (Vec3, Vec3) {
        (self.a, self.b)
    }

    /// The rotation-axis vector `a x b`.
    pub fn axis_vector(&self) -> Vec3 {
        vec3::cross(self.a, self.b)
    }

    pub fn apply(&self, x: Vec3) -> Vec3 {
        [
            vec3::dot(self.m[0], x),
            vec3::dot(self.m[1], x),
            vec3::dot(self.m[2], x),
        ]
    }

    pub fn squared(&self) -> [[f64; 3]; 3] {
        let mut p = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                p[i][j] = (0..3).map(|k| self.m[i][k] * self.m[k][j]).sum();
            }
        }
        p
    }
}

fn is_parallel(u: &BallVec, v: &BallVec) -> bool {
    let cr = vec3::cross(u.components(), v.components());
    vec3::norm(cr) <= PARALLEL_THRESHOLD * u.norm() * v.norm()
}

/// Gyration image computed purely from Einstein addition:
/// `gyr[u,v]w = -(u (+) v) (+) {u (+) (v (+) w)}`.
///
/// This path requires `w` inside the ball; it is the oracle for the matrix
/// forms below.
pub fn gyr_definitional(u: &BallVec, v: &BallVec, w: &BallVec) -> Result<BallVec> {
    crate::ball::gyr_image(u, v, w)
}

/// Coefficients of the closed-form gyration
/// `gyr[u,v]w = w + (A u + B v) / D`.
fn closed_form_coefficients(u: &BallVec, v: &BallVec, w: Vec3) -> (f64, f64, f64) {
    let c2 = u.radius() * u.radius();
    let c4 = c2 * c2;
    let gu = gamma(u).value();
    let gv = gamma(v).value();
    let uw = vec3::dot(u.components(), w);
    let vw = vec3::dot(v.components(), w);
    let uv = vec3::dot(u.components(), v.components());

    let a = -(gu * gu / (gu + 1.0)) * (gv - 1.0) * uw / c2
        + gu * gv * vw / c2
        + 2.0 * (gu * gu * gv * gv) / ((gu + 1.0) * (gv + 1.0)) * uv * vw / c4;
    let b = -(gv / (gv + 1.0)) * (gu * (gv + 1.0) * uw + (gu - 1.0) * gv * vw) / c2;
    let d = gu * gv * (1.0 + uv / c2) + 1.0;
    (a, b, d)
}

/// Closed-form gyration matrix, built column by column from the linear map
/// `w -> w + (A u + B v) / D`. The map is defined for all `w` in R^3, not
/// only inside the ball.
pub fn gyr_closed_form(u: &BallVec, v: &BallVec) -> Result<Rotation3> {
    u.check_same_radius(v)?;
    if u.is_zero() || v.is_zero() || is_parallel(u, v) {
        return Ok(Rotation3::identity());
    }
    let mut m = [[0.0; 3]; 3];
    for j in 0..3 {
        let mut e = [0.0; 3];
        e[j] = 1.0;
        let (a, b, d) = closed_form_coefficients(u, v, e);
        let col = vec3::add(
            e,
            vec3::scale(
                1.0 / d,
                vec3::add(
                    vec3::scale(a, u.components()),
                    vec3::scale(b, v.components()),
                ),
            ),
        );
        for i in 0..3 {
            m[i][j] = col[i];
        }
    }
    Ok(Rotation3::from_rows(m))
}

/// The coefficients of `gyr[u,v] = I + alpha Omega + beta Omega^2`,
/// satisfying `alpha < 0`, `beta > 0`, and
/// `alpha^2 + [u^2 v^2 - (u.v)^2] beta^2 - 2 beta = 0`.
pub fn alpha_beta(u: &BallVec, v: &BallVec) -> Result<(f64, f64)> {
    u.check_same_radius(v)?;
    let c2 = u.radius() * u.radius();
    let gu = gamma(u).value();
    let gv = gamma(v).value();
    let guv = gamma_identity(u, v)?.value();
    let denom = (1.0 + gu) * (1.0 + gv) * (1.0 + guv);
    let alpha = -(gu * gv * (1.0 + gu + gv + guv)) / denom / c2;
    let beta = (gu * gu * gv * gv) / denom / (c2 * c2);
    Ok((alpha, beta))
}

/// Gyration matrix built from the omega matrix:
/// `gyr[u,v] = I + alpha Omega(u,v) + beta Omega^2(u,v)`.
pub fn gyr_matrix_form(u: &BallVec, v: &BallVec) -> Result<Rotation3> {
    u.check_same_radius(v)?;
    if u.is_zero() || v.is_zero() || is_parallel(u, v) {
        return Ok(Rotation3::identity());
    }
    let (alpha, beta) = alpha_beta(u, v)?;
    let omega = OmegaMatrix::new(u.components(), v.components());
    let om = omega.entries();
    let om2 = omega.squared();
    let mut m = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let id = if i == j { 1.0 } else { 0.0 };
            m[i][j] = id + alpha * om[i][j] + beta * om2[i][j];
        }
    }
    Ok(Rotation3::from_rows(m))
}

/// The generating angle theta, the velocity parameter k, and the Thomas
/// precession angle epsilon of the gyration `gyr[u,v]`.
///
/// Angles are signed by the orientation of the plane spanned by `(u, v)`
/// with normal `u x v / |u x v|`; with that convention theta lies in
/// `(0, pi)` and epsilon is negative.
#[derive(Debug, Clone, Copy)]
pub struct PrecessionAngles {
    pub theta: f64,
    pub epsilon: f64,
    pub k: f64,
    /// Signed magnitude of `u x v`, sign matching `sin theta`.
    pub omega_theta: f64,
    /// True when `sin theta = 0` (parallel generators); epsilon is then 0.
    pub degenerate: bool,
}

/// Thomas angle from the k-parameterization:
/// `cos eps = ((k + cos t)^2 - sin^2 t) / ((k + cos t)^2 + sin^2 t)` and
/// `sin eps = -2 (k + cos t) sin t / ((k + cos t)^2 + sin^2 t)`.
///
/// `theta` may be signed; `sin eps` then flips sign with `sin theta`.
/// A numerically vanishing `sin theta` yields exactly `(1, 0)`.
pub fn angle_from_k(k: f64, theta: f64) -> (f64, f64) {
    let s = theta.sin();
    if s.abs() < 1e-12 {
        return (1.0, 0.0);
    }
    let t = k + theta.cos();
    let denom = t * t + s * s;
    ((t * t - s * s) / denom, -2.0 * t * s / denom)
}

/// The velocity parameter `k > 1`,
/// `k^2 = (g_u + 1)/(g_u - 1) * (g_v + 1)/(g_v - 1)`.
pub fn k_parameter(gamma_u: f64, gamma_v: f64) -> f64 {
    ((gamma_u + 1.0) / (gamma_u - 1.0) * (gamma_v + 1.0) / (gamma_v - 1.0)).sqrt()
}

pub fn precession_angles(u: &BallVec, v: &BallVec) -> Result<PrecessionAngles> {
    u.check_same_radius(v)?;
    if u.is_zero() || v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let cr = vec3::cross(u.components(), v.components());
    let sin_theta_norm = vec3::norm(cr) / (u.norm() * v.norm());
    let cos_theta = vec3::dot(u.components(), v.components()) / (u.norm() * v.norm());
    let theta = sin_theta_norm.atan2(cos_theta);
    let gu = gamma(u).value();
    let gv = gamma(v).value();
    let k = k_parameter(gu, gv);
    if is_parallel(u, v) {
        return Ok(PrecessionAngles {
            theta,
            epsilon: 0.0,
            k,
            omega_theta: 0.0,
            degenerate: true,
        });
    }
    let (cos_eps, sin_eps) = angle_from_k(k, theta);
    Ok(PrecessionAngles {
        theta,
        epsilon: sin_eps.atan2(cos_eps),
        k,
        omega_theta: u.norm() * v.norm() * theta.sin(),
        degenerate: false,
    })
}

/// Thomas angle computed from gamma factors alone:
/// `cos eps = 1 - (g_u - 1)(g_v - 1) sin^2 t / (g_{u(+)v} + 1)` with
/// `g_{u(+)v} = g_u g_v + sqrt(g_u^2 - 1) sqrt(g_v^2 - 1) cos t`.
///
/// Cross-check path for [`angle_from_k`] and the matrix-extracted angle.
/// `theta` may be signed.
pub fn angle_from_gammas_at(gamma_u: f64, gamma_v: f64, theta: f64) -> (f64, f64) {
    let s = theta.sin();
    if s.abs() < 1e-12 {
        return (1.0, 0.0);
    }
    let cos_t = theta.cos();
    let ru = (gamma_u * gamma_u - 1.0).sqrt();
    let rv = (gamma_v * gamma_v - 1.0).sqrt();
    let g_sum = gamma_u * gamma_v + ru * rv * cos_t;
    let cos_eps = 1.0 - (gamma_u - 1.0) * (gamma_v - 1.0) * s * s / (g_sum + 1.0);
    let sin_eps = -(ru * rv + (gamma_u - 1.0) * (gamma_v - 1.0) * cos_t) / (g_sum + 1.0) * s;
    (cos_eps, sin_eps)
}

/// [`angle_from_gammas_at`] evaluated at the unsigned angle between `u`
/// and `v`.
pub fn angle_from_gammas(u: &BallVec, v: &BallVec) -> Result<(f64, f64)> {
    u.check_same_radius(v)?;
    if u.is_zero() || v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let cos_theta = vec3::dot(u.components(), v.components()) / (u.norm() * v.norm());
    let sin_theta = vec3::norm(vec3::cross(u.components(), v.components())) / (u.norm() * v.norm());
    Ok(angle_from_gammas_at(
        gamma(u).value(),
        gamma(v).value(),
        sin_theta.atan2(cos_theta),
    ))
}

/// Half-angle values with the sign convention `cos(eps/2) > 0` and
/// `sin(eps/2)` opposite in sign to `sin theta`:
/// `cos(eps/2) = (k + cos t) / sqrt((k + cos t)^2 + sin^2 t)`,
/// `sin(eps/2) = -sin t / sqrt((k + cos t)^2 + sin^2 t)`.
pub fn half_angle_from_k(k: f64, theta: f64) -> (f64, f64) {
    let t = k + theta.cos();
    let s = theta.sin();
    let r = (t * t + s * s).sqrt();
    (t / r, -s / r)
}

/// Signed rotation angle of `r` about a known unit `axis`, in `(-pi, pi]`.
/// Errors when the axis is not fixed to within `tol`.
pub fn rotation_angle_about_axis(r: &Rotation3, axis: Vec3, tol: f64) -> Result<f64> {
    let n = vec3::normalize(axis);
    let moved = vec3::max_abs_diff(r.apply(n), n);
    if moved > tol {
        return Err(Error::AxisNotFixed(moved));
    }
    // pick the coordinate axis least aligned with n, orthogonalize
    let mut e = [0.0; 3];
    let k = (0..3)
        .min_by(|&i, &j| n[i].abs().partial_cmp(&n[j].abs()).unwrap())
        .unwrap();
    e[k] = 1.0;
    let p = vec3::normalize(vec3::sub(e, vec3::scale(vec3::dot(e, n), n)));
    let q = vec3::cross(n, p);
    let rp = r.apply(p);
    Ok(vec3::dot(rp, q).atan2(vec3::dot(rp, p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vec3::max_abs_diff;

    fn bv(x: f64, y: f64, z: f64) -> BallVec {
        BallVec::new(x, y, z, 1.0).unwrap()
    }

    #[test]
    fn definitional_trivial_cases() {
        let v = bv(0.5, 0.1, 0.0);
        let w = bv(0.1, 0.2, 0.3);
        let img = gyr_definitional(&BallVec::zero(1.0), &v, &w).unwrap();
        assert!(max_abs_diff(img.components(), w.components()) < 1e-15);

        let u = bv(0.3, 0.0, 0.0);
        let vpar = bv(0.6, 0.0, 0.0);
        let img = gyr_definitional(&u, &vpar, &w).unwrap();
        assert!(max_abs_diff(img.components(), w.components()) < 1e-15);
    }

    #[test]
    fn closed_form_matches_definitional() {
        let u = bv(0.5, -0.2, 0.1);
        let v = bv(-0.1, 0.4, 0.3);
        let w = bv(0.2, 0.1, -0.3);
        let m = gyr_closed_form(&u, &v).unwrap();
        let by_matrix = m.apply(w.components());
        let by_def = gyr_definitional(&u, &v, &w).unwrap();
        assert!(max_abs_diff(by_matrix, by_def.components()) < 1e-13);
    }

    #[test]
    fn closed_form_trivial_for_zero_argument() {
        let v = bv(0.0, 0.6, 0.0);
        let m = gyr_closed_form(&BallVec::zero(1.0), &v).unwrap();
        assert_eq!(m, Rotation3::identity());
    }

    #[test]
    fn exact_right_angle_case() {
        // speeds 0.6/0.6 at 90 degrees: cos eps = 40/41, sin eps = -9/41
        let u = bv(0.6, 0.0, 0.0);
        let v = bv(0.0, 0.6, 0.0);
        let m = gyr_closed_form(&u, &v).unwrap();
        let eps = rotation_angle_about_axis(&m, [0.0, 0.0, 1.0], 1e-12).unwrap();
        assert!((eps.cos() - 40.0 / 41.0).abs() < 1e-14);
        assert!((eps.sin() + 9.0 / 41.0).abs() < 1e-14);

        let angles = precession_angles(&u, &v).unwrap();
        assert!((angles.k - 9.0).abs() < 1e-13);
        assert!((angles.epsilon.cos() - 40.0 / 41.0).abs() < 1e-14);
        assert!((angles.epsilon.sin() + 9.0 / 41.0).abs() < 1e-14);

        let (ce, se) = angle_from_gammas(&u, &v).unwrap();
        assert!((ce - 40.0 / 41.0).abs() < 1e-14);
        assert!((se + 9.0 / 41.0).abs() < 1e-14);
    }

    #[test]
    fn gyration_inversion() {
        let u = bv(0.5, 0.1, -0.2);
        let v = bv(0.2, -0.4, 0.3);
        let forward = gyr_closed_form(&u, &v).unwrap();
        let backward = gyr_closed_form(&v, &u).unwrap();
        assert!(forward.compose(&backward).max_abs_diff(&Rotation3::identity()) < 1e-14);
        assert!(forward.transpose().max_abs_diff(&backward) < 1e-14);
    }

    #[test]
    fn matrix_form_matches_closed_form() {
        let u = bv(0.7, 0.05, -0.1);
        let v = bv(-0.2, 0.5, 0.25);
        let a = gyr_closed_form(&u, &v).unwrap();
        let b = gyr_matrix_form(&u, &v).unwrap();
        assert!(a.max_abs_diff(&b) < 1e-13);
    }

    #[test]
    fn alpha_beta_constraint() {
        let u = bv(0.4, 0.2, 0.0);
        let v = bv(-0.1, 0.3, 0.5);
        let (alpha, beta) = alpha_beta(&u, &v).unwrap();
        assert!(alpha < 0.0 && beta > 0.0);
        let uv = vec3::dot(u.components(), v.components());
        let residual = alpha * alpha + (u.norm_sq() * v.norm_sq() - uv * uv) * beta * beta
            - 2.0 * beta;
        assert!(residual.abs() < 1e-15);
    }

    #[test]
    fn omega_matrix_properties() {
        let a = [0.3, -0.2, 0.5];
        let b = [0.1, 0.4, -0.6];
        let om = OmegaMatrix::new(a, b);
        let x = [0.7, -0.3, 0.2];
        assert!(max_abs_diff(om.apply(x), vec3::cross(vec3::cross(a, b), x)) < 1e-15);
        // antisymmetry and annihilation of the axis
        let m = om.entries();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m[i][j], -m[j][i]);
            }
        }
        assert!(vec3::norm(om.apply(om.axis_vector())) < 1e-15);
        // Omega^3 = -|a x b|^2 Omega
        let om2 = om.squared();
        let w2 = vec3::norm_sq(om.axis_vector());
        for i in 0..3 {
            for j in 0..3 {
                let cube: f64 = (0..3).map(|k| om2[i][k] * m[k][j]).sum();
                assert!((cube + w2 * m[i][j]).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn rotation_angle_extraction() {
        let r = Rotation3::about_z(std::f64::consts::FRAC_PI_3);
        let a = rotation_angle_about_axis(&r, [0.0, 0.0, 1.0], 1e-12).unwrap();
        assert!((a - std::f64::consts::FRAC_PI_3).abs() < 1e-14);
        let id = Rotation3::identity();
        assert_eq!(rotation_angle_about_axis(&id, [0.0, 1.0, 0.0], 1e-12).unwrap(), 0.0);
        // reconstruction from (axis, angle)
        let u = bv(0.5, 0.2, 0.0);
        let v = bv(-0.3, 0.4, 0.0);
        let g = gyr_closed_form(&u, &v).unwrap();
        let axis = vec3::normalize(vec3::cross(u.components(), v.components()));
        let eps = rotation_angle_about_axis(&g, axis, 1e-10).unwrap();
        let rebuilt = Rotation3::from_axis_angle(axis, eps);
        assert!(g.max_abs_diff(&rebuilt) < 1e-13);
    }

    #[test]
    fn axis_not_fixed_error() {
        let r = Rotation3::about_z(0.7);
        assert!(matches!(
            rotation_angle_about_axis(&r, [1.0, 0.0, 0.0], 1e-10),
            Err(Error::AxisNotFixed(_))
        ));
    }

    #[test]
    fn high_speed_limit() {
        // k -> 1: cos eps -> cos theta, sin eps -> -sin theta
        let speed = 0.99999;
        let g = crate::ball::gamma_of_speed(speed, 1.0).unwrap();
        let k = k_parameter(g, g);
        let theta = 0.9;
        let (ce, se) = angle_from_k(k, theta);
        assert!((ce - theta.cos()).abs() < 0.01);
        assert!((se + theta.sin()).abs() < 0.01);
    }

    #[test]
    fn mcfarlane_identity() {
        let u = bv(0.45, -0.3, 0.2);
        let v = bv(0.1, 0.5, -0.4);
        let (ce, _) = angle_from_gammas(&u, &v).unwrap();
        let gu = gamma(&u).value();
        let gv = gamma(&v).value();
        let guv = gamma_identity(&u, &v).unwrap().value();
        let rhs = (1.0 + gu + gv + guv).powi(2) / ((1.0 + gu) * (1.0 + gv) * (1.0 + guv));
        assert!((1.0 + ce - rhs).abs() < 1e-13);
        assert!(1.0 + ce > 0.0);
    }

    #[test]
    fn half_angle_signs() {
        let (ch, sh) = half_angle_from_k(4.0, 1.2);
        assert!(ch > 0.0);
        assert!(sh < 0.0); // opposite to sin(1.2) > 0
        let (ce, se) = angle_from_k(4.0, 1.2);
        assert!((ch * ch - sh * sh - ce).abs() < 1e-15);
        assert!((2.0 * ch * sh - se).abs() < 1e-15);
    }

    #[test]
    fn zero_vector_rejected() {
        let v = bv(0.1, 0.0, 0.0);
        assert_eq!(
            precession_angles(&BallVec::zero(1.0), &v).unwrap_err(),
            Error::ZeroVector
        );
    }

    #[test]
    fn parallel_generators_flagged_degenerate() {
        let u = bv(0.3, 0.0, 0.0);
        let v = bv(0.6, 0.0, 0.0);
        let angles = precession_angles(&u, &v).unwrap();
        assert!(angles.degenerate);
        assert_eq!(angles.epsilon, 0.0);
    }
}
