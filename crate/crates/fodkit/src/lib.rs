//! Fractional-order differintegral conditioning for multi-sensor telemetry.
//!
//! The crate computes Grünwald–Letnikov (G-L) fractional derivatives of fitted
//! measurement models, calibrates the operator step until a precision target is
//! met, plans how many operator passes reach a gain target, and chains the whole
//! thing into a reporting pipeline. All numeric code is generic over the scalar
//! type through [`Real`]; `f64` aliases live at the crate root.

pub mod calibrate;
pub mod dataset;
pub mod error;
pub mod fit;
pub mod gl;
pub mod num;
pub mod pipeline;
pub mod transmit;

pub use crate::error::Error;
pub use crate::num::Real;

pub type Result<T> = std::result::Result<T, Error>;

// Concrete aliases for the common 64-bit instantiation.
pub type FractionalOrder64 = gl::FractionalOrder<f64>;
pub type GlPlan64 = gl::GlPlan<f64>;
pub type SpectralPoint64 = gl::SpectralPoint<f64>;
pub type SensorDataset64 = dataset::SensorDataset<f64>;
pub type SensorStats64 = dataset::SensorStats<f64>;
pub type PolynomialModel64 = fit::PolynomialModel<f64>;
pub type DegreeSelection64 = fit::DegreeSelection<f64>;
pub type FusionResult64 = calibrate::FusionResult<f64>;
pub type CalibrationTrace64 = calibrate::CalibrationTrace<f64>;
pub type GainTarget64 = transmit::GainTarget<f64>;
pub type TransmissionPlan64 = transmit::TransmissionPlan<f64>;
pub type PipelineConfig64 = pipeline::PipelineConfig<f64>;
pub type PipelineReport64 = pipeline::PipelineReport<f64>;
