//! Scalar abstraction shared by every numeric routine in the crate.

use std::fmt::{Debug, Display};

use num_traits::float::FloatConst;
use num_traits::Float;

/// Floating-point scalar the toolkit operates on (`f32`, `f64`, ...).
pub trait Real: Float + FloatConst + Debug + Display + 'static {}

impl<T> Real for T where T: Float + FloatConst + Debug + Display + 'static {}

/// Lossy cast from `f64`, for constants baked into the algorithms.
pub fn real<F: Real>(x: f64) -> F {
    F::from(x).expect("constant representable in scalar type")
}

/// Exact-by-intent cast from a count.
pub fn from_count<F: Real>(n: usize) -> F {
    F::from(n).expect("count representable in scalar type")
}

/// Population mean. Callers guarantee a non-empty slice.
pub fn mean<F: Real>(values: &[F]) -> F {
    debug_assert!(!values.is_empty());
    let sum = values.iter().fold(F::zero(), |acc, &v| acc + v);
    sum / from_count(values.len())
}

/// Population standard deviation (divisor N, not N-1).
pub fn population_std<F: Real>(values: &[F]) -> F {
    let m = mean(values);
    let ss = values
        .iter()
        .fold(F::zero(), |acc, &v| acc + (v - m) * (v - m));
    (ss / from_count(values.len())).sqrt()
}

/// Truncation index for a window/step quotient.
///
/// Quotients that land a hair below an integer because of rounding (0.19/0.01,
/// 0.15/0.003, ...) must still truncate to that integer, so a small guard is
/// added before flooring.
pub fn floor_terms<F: Real>(quotient: F) -> usize {
    let guarded = quotient + real::<F>(1e-9);
    guarded.floor().to_usize().unwrap_or(0)
}
