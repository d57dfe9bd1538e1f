//! Numeric corroboration that the Thomas precession angle and its
//! generating angle have opposite signs: construct `v` by rotating `u`
//! through `theta` in the z = 0 plane, compute the gyration two independent
//! ways, and compare.
//!
//! Angles are counterclockwise-positive viewed from +z.

use crate::ball::{gamma, BallVec};
use crate::error::{Error, Result};
use crate::gyration::{angle_from_gammas_at, gyr_closed_form, Rotation3};
use crate::vec3;

/// Default probe vector when the caller does not supply one.
pub const DEFAULT_PROBE: [f64; 3] = [0.1, 0.2, 0.0];

/// Outcome of one sign-opposition check.
#[derive(Debug, Clone, Copy)]
pub struct SignCheckReport {
    /// Generating angle (signed, from u to v).
    pub theta: f64,
    /// Thomas precession angle extracted from the gamma-factor formula.
    pub epsilon: f64,
    /// Max-norm difference between `gyr[u,v]w` and the planar rotation of
    /// `w` through epsilon.
    pub residual: f64,
    /// `Some(sign(eps) == -sign(theta))` when `sin theta != 0`, else `None`.
    pub opposite_signs: Option<bool>,
}

fn require_planar(u: &BallVec) -> Result<()> {
    if u.z() != 0.0 {
        return Err(Error::NotPlanar);
    }
    Ok(())
}

/// Rotate `u` through the signed angle `theta` about +z and rescale its
/// speed by `speed_ratio`.
pub fn rotate_in_plane(u: &BallVec, theta: f64, speed_ratio: f64) -> Result<BallVec> {
    require_planar(u)?;
    if u.is_zero() {
        return Err(Error::ZeroVector);
    }
    let rotated = Rotation3::about_z(theta).apply(u.components());
    BallVec::from_array(vec3::scale(speed_ratio, rotated), u.radius())
}

/// Compare `gyr[u, R(theta) (|v|/|u|) u] w` against `R(eps) w` and record
/// whether theta and eps have opposite signs.
pub fn sign_check(
    u: &BallVec,
    theta: f64,
    speed_ratio: f64,
    w: &BallVec,
) -> Result<SignCheckReport> {
    require_planar(u)?;
    require_planar(w)?;
    u.check_same_radius(w)?;
    let v = rotate_in_plane(u, theta, speed_ratio)?;

    if theta.sin().abs() < 1e-12 {
        return Ok(SignCheckReport {
            theta,
            epsilon: 0.0,
            residual: vec3::max_abs_diff(
                gyr_closed_form(u, &v)?.apply(w.components()),
                w.components(),
            ),
            opposite_signs: None,
        });
    }

    let lhs = gyr_closed_form(u, &v)?.apply(w.components());

    let (cos_eps, sin_eps) = angle_from_gammas_at(gamma(u).value(), gamma(&v).value(), theta);
    let epsilon = sin_eps.atan2(cos_eps);
    let rhs = Rotation3::about_z(epsilon).apply(w.components());

    Ok(SignCheckReport {
        theta,
        epsilon,
        residual: vec3::max_abs_diff(lhs, rhs),
        opposite_signs: Some(epsilon.signum() == -theta.signum()),
    })
}
