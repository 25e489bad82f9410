//! Error types shared across the crate.

use thiserror::Error;

/// Rejected input to a norm evaluator or a parameter constructor.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum NormError {
    #[error("vector must have at least one component")]
    EmptyVector,
    #[error("component {index} is not finite")]
    NonFiniteComponent { index: usize },
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("Minkowski exponent must be a real >= 1, got {p}")]
    BadExponent { p: f64 },
    #[error("t must lie in 1..={dim}, got {t}")]
    TOutOfRange { t: usize, dim: usize },
    #[error("expected {expected} weights, got {got}")]
    WeightCountMismatch { expected: usize, got: usize },
    #[error("weight {index} must be finite and non-negative")]
    BadWeight { index: usize },
    #[error("weight vector must not be empty")]
    EmptyWeights,
    #[error("scale factor must be a finite real > 0, got {delta}")]
    BadScale { delta: f64 },
    #[error("coefficients must be finite reals > 0, got a = {a}, b = {b}")]
    BadCoefficients { a: f64, b: f64 },
    #[error("this norm is defined for dimension 2 only, got {dim}")]
    NotPlanar { dim: usize },
}

/// Rejected input to the benchmark harness.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum BenchError {
    #[error("unknown norm name {name:?}; known: dinf, d1, d2, seol-cheun, barni, mukherjee")]
    UnknownNorm { name: String },
    #[error("need at least {min} trials for a meaningful median, got {got}")]
    TooFewTrials { min: usize, got: usize },
    #[error(transparent)]
    Norm(#[from] NormError),
}

/// Rejected input or degenerate state in the sampler and the error lab.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum LabError {
    #[error("sampler dimension must be at least 1")]
    ZeroDimension,
    #[error("batch size must be at least 1")]
    ZeroBatchSize,
    #[error("point count must be at least {min}, got {got}")]
    TooFewPoints { min: u64, got: u64 },
    #[error("convergence threshold must be a finite real > 0, got {epsilon}")]
    BadEpsilon { epsilon: f64 },
    #[error(
        "sample cap {max_points} is smaller than the initial round of {initial_points} points"
    )]
    CapBelowInitial {
        initial_points: u64,
        max_points: u64,
    },
    #[error("this analysis needs dimension >= {min}, got {got}")]
    UnsupportedDimension { min: usize, got: usize },
    #[error("batch stream is empty")]
    EmptyStream,
    #[error("point {index} of batch {batch} is off the unit sphere by {deviation:e}")]
    OffSpherePoint {
        batch: usize,
        index: usize,
        deviation: f64,
    },
    #[error("normal equations are degenerate (condition number {cond:e}); the norms are collinear on this sample")]
    DegenerateSystem { cond: f64 },
    #[error("grid step must be a real in (0, {span}], got {step}")]
    BadGridStep { step: f64, span: f64 },
    #[error(transparent)]
    Norm(#[from] NormError),
}
