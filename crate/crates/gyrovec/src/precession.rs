//! Polygonal-orbit Thomas precession: per-corner angle, accumulated
//! precession, its closed-form limit, and the Thomas precession angular
//! velocity with its small-speed Thomas half.

use crate::ball::gamma_of_speed;
use crate::error::{Error, Result};
use crate::vec3::{self, Vec3};
use num_complex::Complex64;
use std::f64::consts::TAU;

/// A uniform circular orbit approximated by a regular polygon.
#[derive(Debug, Clone, Copy)]
pub struct OrbitConfig {
    speed: f64,
    sides: u64,
    c: f64,
}

impl OrbitConfig {
    pub fn new(speed: f64, sides: u64, c: f64) -> Result<Self> {
        if sides < 3 {
            return Err(Error::BadOrbit(format!(
                "polygon needs at least 3 sides, got {sides}"
            )));
        }
        if !(speed > 0.0 && speed < c) {
            return Err(Error::BadOrbit(format!(
                "orbital speed {speed} must lie strictly in (0, {c})"
            )));
        }
        Ok(Self { speed, sides, c })
    }

    pub fn speed(&self) -> f64 {
        self.speed
    }

    pub fn sides(&self) -> u64 {
        self.sides
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// Corner turn angle, `2 pi / n`.
    pub fn corner_angle(&self) -> f64 {
        TAU / self.sides as f64
    }
}

#[derive(Debug, Clone, Copy)]
pub struct PrecessionResult {
    /// Per-corner precession angle `eps_n` (negative).
    pub eps_per_corner: f64,
    /// Accumulated precession `n * eps_n`.
    pub total: f64,
    /// Closed-form limit `eps_t = -2 pi (g - 1) / g`.
    pub limit: f64,
    /// `omega_t / omega = -(g - 1) / g`.
    pub omega_ratio: f64,
}

/// The complex corner factor `f(phi)` with `e^{i eps_n} = 1 + f(2 pi / n)`:
/// `f(phi) = -[(g-1)^2 sin phi + i ((g^2-1) + (g-1)^2 cos phi)] sin phi
///           / [2 + (g^2-1)(1 + cos phi)]`.
pub fn corner_factor(phi: f64, gamma: f64) -> Complex64 {
    let g = gamma;
    let gm1 = g - 1.0;
    let g2m1 = g * g - 1.0;
    let denom = 2.0 + g2m1 * (1.0 + phi.cos());
    let re = gm1 * gm1 * phi.sin();
    let im = g2m1 + gm1 * gm1 * phi.cos();
    -Complex64::new(re, im) * phi.sin() / denom
}

/// Analytic derivative of the corner factor at zero, `f'(0) = -i (g - 1)/g`.
pub fn corner_factor_derivative_at_zero(gamma: f64) -> Complex64 {
    Complex64::new(0.0, -(gamma - 1.0) / gamma)
}

/// Per-corner Thomas precession angle for an n-sided polygonal orbit,
/// with equal-speed boosts meeting at the corner angle `2 pi / n`.
pub fn corner_precession(speed: f64, sides: u64, c: f64) -> Result<f64> {
    let cfg = OrbitConfig::new(speed, sides, c)?;
    let g = gamma_of_speed(speed, c)?;
    let phase = Complex64::new(1.0, 0.0) + corner_factor(cfg.corner_angle(), g);
    Ok(phase.arg())
}

/// Accumulated precession around the polygon, its closed-form limit, and
/// the precession-to-orbit angular velocity ratio.
///
/// The total is accumulated as `n` arg-increments of the unimodular corner
/// factor rather than the arg of the product, so it is an unwrapped angle.
pub fn total_precession(cfg: &OrbitConfig) -> Result<PrecessionResult> {
    let g = gamma_of_speed(cfg.speed(), cfg.c())?;
    let eps_n = corner_precession(cfg.speed(), cfg.sides(), cfg.c())?;
    let ratio = -(g - 1.0) / g;
    Ok(PrecessionResult {
        eps_per_corner: eps_n,
        total: cfg.sides() as f64 * eps_n,
        limit: TAU * ratio,
        omega_ratio: ratio,
    })
}

/// Scalar Thomas precession angular velocity for a circular orbit with
/// `omega = a / v`: `omega_t = -((g - 1)/g) (a / v)`.
pub fn thomas_frequency_scalar(speed: f64, accel_magnitude: f64, c: f64) -> Result<f64> {
    if !(speed > 0.0 && speed < c) {
        return Err(Error::BadOrbit(format!(
            "speed {speed} must lie strictly in (0, {c})"
        )));
    }
    if accel_magnitude < 0.0 {
        return Err(Error::BadOrbit(format!(
            "acceleration magnitude {accel_magnitude} must be nonnegative"
        )));
    }
    let g = gamma_of_speed(speed, c)?;
    Ok(-(g - 1.0) / g * accel_magnitude / speed)
}

/// Vector Thomas precession angular velocity,
/// `omega_t = (g / (1 + g)) (a x v) / c^2`.
///
/// For small speeds the prefactor `g / (1 + g)` approaches the Thomas
/// half, 1/2.
pub fn thomas_frequency_vector(accel: Vec3, velocity: Vec3, c: f64) -> Result<Vec3> {
    let speed = vec3::norm(velocity);
    if !(speed > 0.0 && speed < c) {
        return Err(Error::BadOrbit(format!(
            "speed {speed} must lie strictly in (0, {c})"
        )));
    }
    let g = gamma_of_speed(speed, c)?;
    Ok(vec3::scale(
        g / (1.0 + g) / (c * c),
        vec3::cross(accel, velocity),
    ))
}
