use thiserror::Error;

/// Errors produced by the velocity-ball operations and their consumers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vector norm {norm} is not strictly inside the ball of radius {c}")]
    OutOfBall { norm: f64, c: f64 },

    #[error("operands carry different ball radii ({lhs} vs {rhs})")]
    MixedRadius { lhs: f64, rhs: f64 },

    #[error("vector has non-finite components")]
    NonFinite,

    #[error("ball radius must be positive and finite, got {0}")]
    BadRadius(f64),

    #[error("operation undefined for the zero vector")]
    ZeroVector,

    #[error("angle is degenerate (sin theta = 0), precession sign is undefined")]
    DegenerateAngle,

    #[error("gyroline anchors coincide")]
    CoincidentAnchors,

    #[error("degenerate gyrotriangle: defect radicand {0} is negative")]
    DegenerateTriangle(f64),

    #[error("rotation does not fix the given axis (|R a - a| = {0})")]
    AxisNotFixed(f64),

    #[error("invalid orbit configuration: {0}")]
    BadOrbit(String),

    #[error("input must lie in the z = 0 plane")]
    NotPlanar,
}

pub type Result<T> = std::result::Result<T, Error>;
