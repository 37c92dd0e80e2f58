use thiserror::Error;

/// Errors raised by curve ingestion, rectangle construction, the solver and
/// the knot audit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("too few samples: {got} given, degree {degree} needs at least {needed}")]
    TooFewSamples {
        got: usize,
        needed: usize,
        degree: usize,
    },
    #[error("invalid curve specification: {0}")]
    InvalidSpec(String),
    #[error("degenerate curve: all points coincide")]
    DegenerateCurve,
    #[error(
        "degenerate velocity: min |γ'| = {min_speed:e} at θ = {theta} (threshold {threshold:e})"
    )]
    DegenerateVelocity {
        min_speed: f64,
        theta: f64,
        threshold: f64,
    },
    #[error("self-intersecting curve: chord {chord:e} between θ = {theta1} and θ = {theta2}")]
    SelfIntersecting {
        chord: f64,
        theta1: f64,
        theta2: f64,
    },
    #[error("validation grid too small: {0} < 64")]
    GridTooSmall(usize),
    #[error("n must be at least 2, got {0}")]
    BadN(u32),
    #[error("family index k = {k} outside 1..{n}")]
    BadK { n: u32, k: u32 },
    #[error("aspect ratio must be positive, got {0}")]
    NonpositiveRatio(f64),
    #[error("pairs closer than the separation {separation} (distance {distance})")]
    SamePair { distance: f64, separation: f64 },
    #[error("degenerate diagonal of length {length:e}")]
    DegenerateDiagonal { length: f64 },
    #[error("diagonal angle {angle} is {offset} rad from the nearest family angle (limit 0.1)")]
    NotInFamily { angle: f64, offset: f64 },
    #[error("singular Jacobian (condition number {condition:e})")]
    SingularJacobian { condition: f64 },
    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
    #[error("point has modulus {0}, expected 1")]
    NotUnitModulus(f64),
    #[error("epsilon {epsilon} too large: {reason}")]
    EpsilonTooLarge { epsilon: f64, reason: String },
    #[error("loop passes within {distance:e} of the base point")]
    BasePointOnLoop { distance: f64 },
    #[error("winding sum {turns} is not within 1e-6 of an integer")]
    NonIntegerWinding { turns: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
