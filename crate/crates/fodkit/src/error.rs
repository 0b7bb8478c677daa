//! Crate-wide error type. Scalar payloads are widened to `f64` for display.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("fractional order {nu} outside supported range [0, 2]")]
    InvalidOrder { nu: f64 },

    #[error("step value must be positive and finite, got {h}")]
    InvalidStep { h: f64 },

    #[error("window requires lo < hi, got [{lo}, {hi}]")]
    InvalidWindow { lo: f64, hi: f64 },

    #[error("step {h} over window span {span} would need {terms} terms")]
    ExcessiveTerms { h: f64, span: f64, terms: u64 },

    #[error("input sequence is empty")]
    EmptyInput,

    #[error("need at least 2 sensors and 2 readings, got {sensors} x {readings}")]
    InsufficientData { sensors: usize, readings: usize },

    #[error("reading at row {row}, column {col} must be finite and non-negative")]
    InvalidReading { row: usize, col: usize },

    #[error("dataset rows must be rectangular; row {row} has {got} cells, expected {expected}")]
    RaggedRow {
        row: usize,
        got: usize,
        expected: usize,
    },

    #[error("degree {degree} needs more than {points} points")]
    Underdetermined { degree: usize, points: usize },

    #[error("design matrix is numerically singular")]
    SingularFit,

    #[error("no polynomial degree in 1..={cap} could be fitted")]
    NoFittableDegree { cap: usize },

    #[error("all impact parameters are equal; fusion window is degenerate")]
    DegenerateWindow,

    #[error("step {h} must be smaller than the window span {span}")]
    WindowTooCoarse { h: f64, span: f64 },

    #[error("step underflowed below 1e-12 while searching (h = {h})")]
    StepUnderflow { h: f64 },

    #[error("attenuation coefficient must lie in (0, 1), got {coeff}")]
    InvalidAttenuation { coeff: f64 },

    #[error("per-pass amplification {k} cannot reach gain target {target}")]
    GainUnreachable { k: f64, target: f64 },

    #[error("gain arguments must be positive and finite (k = {k}, target = {target})")]
    InvalidGain { k: f64, target: f64 },

    #[error("refit failed during iteration pass {pass}: {message}")]
    IterationRefit { pass: usize, message: String },
}
