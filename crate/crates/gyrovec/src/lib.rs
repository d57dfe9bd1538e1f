//! Gyrovector algebra in the open ball of relativistically admissible
//! velocities, with the rotation (gyration) machinery it induces.
//!
//! The crate is organised around a handful of small modules:
//!
//! - [`ball`]: the ball itself — Einstein velocity addition, gamma factors,
//!   scalar multiplication, and the dual coaddition.
//! - [`gyration`]: gyrations as explicit 3x3 rotations, computed three
//!   independent ways, together with the rotation-angle formulas.
//! - [`hyperbolic`]: the Beltrami–Klein picture — gyrolines, gyromidpoints,
//!   triangle defects, and the induced metric tensor on the disc.
//! - [`lorentz`]: 4x4 boosts and the factorisation of a boost product into
//!   a boost and a spatial rotation.
//! - [`precession`]: accumulated precession around polygonal orbits and the
//!   low-speed Thomas frequency.
//! - [`signcheck`]: a self-contained numerical check that the precession
//!   angle opposes the rotation generating it.
//! - [`audit`]: batch verification of the algebraic laws over seeded
//!   random samples, reported per law with residuals.

// small fixed-size matrix kernels: index loops mirror the written formulas
#![allow(clippy::needless_range_loop)]

pub mod audit;
pub mod ball;
pub mod error;
pub mod gyration;
pub mod hyperbolic;
pub mod lorentz;
pub mod precession;
pub mod sampling;
pub mod signcheck;
pub mod vec3;

pub use audit::{full_audit, gyro_law_audit, AuditReport, LawResidual};
pub use ball::{einstein_add, einstein_sub, gamma, BallVec, Gamma};
pub use error::{Error, Result};
pub use gyration::{
    gyr_closed_form, gyr_definitional, gyr_matrix_form, precession_angles, PrecessionAngles,
    Rotation3,
};
pub use hyperbolic::{gyrodistance, gyromidpoint, GyroLine, GyroTriangle, MetricTensor2};
pub use lorentz::{boost_composition_check, boost_matrix, Boost4, SpacetimeEvent};
pub use precession::{corner_precession, total_precession, OrbitConfig, PrecessionResult};
pub use signcheck::{sign_check, SignCheckReport};
pub use vec3::Vec3;
