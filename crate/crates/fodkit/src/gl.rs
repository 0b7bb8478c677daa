//! Grünwald–Letnikov fractional differintegral: weights, windowed application,
//! and the operator's spectral response.
//!
//! The operator approximates the v-order derivative of `f` at `x` as
//! `h^-v * sum_{j=0..n} w_j f(x - j h)` with signed binomial weights
//! `w_j = (-1)^j C(v, j)` and `n = floor((b - a) / h)` for a window `[a, b]`.

use crate::error::Error;
use crate::fit::{polyfit, PolynomialModel};
use crate::num::{floor_terms, from_count, real, Real};
use crate::Result;

/// Plans above this term count are rejected instead of allocated.
const MAX_TERMS: usize = 50_000_000;

/// Differintegral order, restricted to the supported range [0, 2].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FractionalOrder<F: Real>(F);

impl<F: Real> FractionalOrder<F> {
    pub fn new(nu: F) -> Result<Self> {
        if !nu.is_finite() || nu < F::zero() || nu > real(2.0) {
            return Err(Error::InvalidOrder {
                nu: nu.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self(nu))
    }

    pub fn value(&self) -> F {
        self.0
    }
}

/// Precomputed application plan: order, step, window, term count, weights.
#[derive(Debug, Clone, PartialEq)]
pub struct GlPlan<F: Real> {
    nu: FractionalOrder<F>,
    h: F,
    window: (F, F),
    n: usize,
    weights: Vec<F>,
    scale: F,
}

impl<F: Real> GlPlan<F> {
    /// Builds a plan over `[lo, hi]` with step `h`; `n = floor((hi - lo) / h)`.
    pub fn new(nu: FractionalOrder<F>, h: F, lo: F, hi: F) -> Result<Self> {
        if !h.is_finite() || h <= F::zero() {
            return Err(Error::InvalidStep {
                h: h.to_f64().unwrap_or(f64::NAN),
            });
        }
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            return Err(Error::InvalidWindow {
                lo: lo.to_f64().unwrap_or(f64::NAN),
                hi: hi.to_f64().unwrap_or(f64::NAN),
            });
        }
        let span = hi - lo;
        let n = floor_terms(span / h);
        if n > MAX_TERMS {
            return Err(Error::ExcessiveTerms {
                h: h.to_f64().unwrap_or(f64::NAN),
                span: span.to_f64().unwrap_or(f64::NAN),
                terms: n as u64,
            });
        }
        let weights = gl_weights(nu, n);
        let scale = h.powf(-nu.value());
        Ok(Self {
            nu,
            h,
            window: (lo, hi),
            n,
            weights,
            scale,
        })
    }

    pub fn order(&self) -> FractionalOrder<F> {
        self.nu
    }

    pub fn step(&self) -> F {
        self.h
    }

    pub fn window(&self) -> (F, F) {
        self.window
    }

    pub fn term_count(&self) -> usize {
        self.n
    }

    pub fn weights(&self) -> &[F] {
        &self.weights
    }
}

/// Signed binomial weights `w_j = (-1)^j C(nu, j)` for `j = 0..=n`.
///
/// Uses the multiplicative recurrence `w_j = w_{j-1} (j - 1 - nu) / j`, which
/// avoids factorial overflow and is exact for integer orders.
pub fn gl_weights<F: Real>(nu: FractionalOrder<F>, n: usize) -> Vec<F> {
    let v = nu.value();
    let mut weights = Vec::with_capacity(n + 1);
    weights.push(F::one());
    for j in 1..=n {
        let jf = from_count::<F>(j);
        let prev = weights[j - 1];
        weights.push(prev * (jf - F::one() - v) / jf);
    }
    weights
}

/// Applies the plan to a fitted model at `x`.
///
/// Arguments `x - j h` below the fitting window evaluate the polynomial
/// directly; a polynomial has a natural analytic extension.
pub fn gl_apply_model<F: Real>(model: &PolynomialModel<F>, plan: &GlPlan<F>, x: F) -> F {
    let mut acc = F::zero();
    for (j, &w) in plan.weights.iter().enumerate() {
        acc = acc + w * model.eval(x - from_count::<F>(j) * plan.h);
    }
    plan.scale * acc
}

/// How `gl_apply_sequence` supplies samples left of the first grid point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryMode {
    /// Repeat the first sample.
    Hold,
    /// Drop weights that would reach past index 0.
    Truncate,
    /// Fit a polynomial of the given degree to the sequence and evaluate it
    /// below the grid. Used by the transmission iteration loop.
    ExtrapolateRefit { degree: usize },
}

/// Applies the plan to samples on a uniform grid of spacing `plan.step()`.
///
/// Output `i` is `h^-v * sum_j w_j value[i - j]`, with out-of-range indices
/// handled per `mode`; the length is preserved.
pub fn gl_apply_sequence<F: Real>(
    values: &[F],
    plan: &GlPlan<F>,
    mode: BoundaryMode,
) -> Result<Vec<F>> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    let below: Option<PolynomialModel<F>> = match mode {
        BoundaryMode::ExtrapolateRefit { degree } => {
            let (lo, _) = plan.window;
            let points: Vec<(F, F)> = values
                .iter()
                .enumerate()
                .map(|(i, &v)| (lo + from_count::<F>(i) * plan.h, v))
                .collect();
            Some(polyfit(&points, degree)?)
        }
        _ => None,
    };
    let (lo, _) = plan.window;
    let mut out = Vec::with_capacity(values.len());
    for i in 0..values.len() {
        let mut acc = F::zero();
        for (j, &w) in plan.weights.iter().enumerate() {
            let sample = if j <= i {
                values[i - j]
            } else {
                match mode {
                    BoundaryMode::Hold => values[0],
                    BoundaryMode::Truncate => continue,
                    BoundaryMode::ExtrapolateRefit { .. } => {
                        let x = lo + (from_count::<F>(i) - from_count::<F>(j)) * plan.h;
                        below.as_ref().unwrap().eval(x)
                    }
                }
            };
            acc = acc + w * sample;
        }
        out.push(plan.scale * acc);
    }
    Ok(out)
}

/// One point of the operator's frequency response.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralPoint<F: Real> {
    pub omega: F,
    pub amplitude: F,
    pub phase: F,
}

/// Frequency response `|w|^v` with phase `(pi v / 2) sgn(w)`.
pub fn spectral_response<F: Real>(nu: FractionalOrder<F>, omegas: &[F]) -> Vec<SpectralPoint<F>> {
    let v = nu.value();
    omegas
        .iter()
        .map(|&omega| {
            let amplitude = if omega == F::zero() {
                if v == F::zero() {
                    F::one()
                } else {
                    F::zero()
                }
            } else {
                omega.abs().powf(v)
            };
            let sign = if omega > F::zero() {
                F::one()
            } else if omega < F::zero() {
                -F::one()
            } else {
                F::zero()
            };
            let phase = F::PI() * v / real(2.0) * sign;
            SpectralPoint {
                omega,
                amplitude,
                phase,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn order(nu: f64) -> FractionalOrder<f64> {
        FractionalOrder::new(nu).unwrap()
    }

    #[test]
    fn rejects_orders_outside_supported_range() {
        assert!(FractionalOrder::new(-0.1).is_err());
        assert!(FractionalOrder::new(2.1).is_err());
        assert!(FractionalOrder::new(f64::NAN).is_err());
        assert!(FractionalOrder::new(0.0).is_ok());
        assert!(FractionalOrder::new(2.0).is_ok());
    }

    #[test]
    fn integer_order_weights_collapse() {
        assert_eq!(gl_weights(order(1.0), 3), vec![1.0, -1.0, 0.0, 0.0]);
        assert_eq!(gl_weights(order(0.0), 2), vec![1.0, 0.0, 0.0]);
    }

    #[test]
    fn half_order_weights_match_hand_evaluation() {
        let w = gl_weights(order(0.5), 4);
        assert_eq!(w, vec![1.0, -0.5, -0.125, -0.0625, -0.0390625]);
    }

    #[test]
    fn weights_are_generic_over_the_scalar() {
        let nu = FractionalOrder::<f32>::new(0.5).unwrap();
        let w = gl_weights(nu, 2);
        assert_eq!(w, vec![1.0f32, -0.5, -0.125]);
    }

    #[test]
    fn plan_term_count_uses_guarded_floor() {
        let plan = GlPlan::new(order(0.5), 0.01, 0.07, 0.26).unwrap();
        assert_eq!(plan.term_count(), 19);
        assert_eq!(plan.weights().len(), 20);
        let plan = GlPlan::new(order(0.5), 0.003, 0.27, 0.42).unwrap();
        assert_eq!(plan.term_count(), 50);
    }

    #[test]
    fn plan_validates_step_and_window() {
        assert!(matches!(
            GlPlan::new(order(0.5), 0.0, 0.0, 1.0),
            Err(Error::InvalidStep { .. })
        ));
        assert!(matches!(
            GlPlan::new(order(0.5), 0.1, 1.0, 1.0),
            Err(Error::InvalidWindow { .. })
        ));
        assert!(matches!(
            GlPlan::new(order(0.5), 1e-12, 0.0, 1.0),
            Err(Error::ExcessiveTerms { .. })
        ));
    }

    #[test]
    fn identity_order_returns_model_value() {
        let model = PolynomialModel::new(vec![2.0, -1.0, 0.5], (0.0, 1.0)).unwrap();
        let plan = GlPlan::new(order(0.0), 0.05, 0.0, 1.0).unwrap();
        for &x in &[0.1, 0.4, 0.9] {
            assert_eq!(gl_apply_model(&model, &plan, x), model.eval(x));
        }
    }

    #[test]
    fn first_order_is_backward_difference_of_identity() {
        let model = PolynomialModel::new(vec![0.0, 1.0], (0.0, 1.0)).unwrap();
        let plan = GlPlan::new(order(1.0), 0.01, 0.0, 1.0).unwrap();
        assert_relative_eq!(gl_apply_model(&model, &plan, 1.0), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn half_derivative_of_identity_converges() {
        // D^{1/2} x at 1 over [0, 1] tends to 2/sqrt(pi).
        let model = PolynomialModel::new(vec![0.0, 1.0], (0.0, 1.0)).unwrap();
        let target = 2.0 / std::f64::consts::PI.sqrt();
        let mut last_err = f64::INFINITY;
        for &h in &[1e-2, 1e-3, 1e-4] {
            let plan = GlPlan::new(order(0.5), h, 0.0, 1.0).unwrap();
            let err = (gl_apply_model(&model, &plan, 1.0) - target).abs();
            assert!(err < last_err, "error must shrink as h shrinks");
            last_err = err;
        }
        assert!(last_err < 2e-5);
    }

    #[test]
    fn sequence_identity_and_backward_difference() {
        let plan = GlPlan::new(order(0.0), 1.0, 0.0, 3.0).unwrap();
        let out = gl_apply_sequence(&[3.0, 5.0, 7.0], &plan, BoundaryMode::Hold).unwrap();
        assert_eq!(out, vec![3.0, 5.0, 7.0]);

        let plan = GlPlan::new(order(1.0), 1.0, 0.0, 3.0).unwrap();
        let out = gl_apply_sequence(&[0.0, 1.0, 2.0, 3.0], &plan, BoundaryMode::Hold).unwrap();
        assert_eq!(out, vec![0.0, 1.0, 1.0, 1.0]);
    }

    #[test]
    fn truncated_constant_sequence_yields_partial_weight_sums() {
        // Direct-summation oracle: output i is c * h^-0.5 * sum_{j<=i} w_j.
        let plan = GlPlan::new(order(0.5), 0.25, 0.0, 1.0).unwrap();
        let c = 3.0;
        let out = gl_apply_sequence(&[c; 5], &plan, BoundaryMode::Truncate).unwrap();
        assert_eq!(out.len(), 5);
        let expected = [6.0, 3.0, 2.25, 1.875, 1.640625];
        for (got, want) in out.iter().zip(expected) {
            assert_relative_eq!(got, &want, max_relative = 1e-12);
        }
    }

    #[test]
    fn refit_extension_matches_model_application_for_affine_data() {
        let plan = GlPlan::new(order(0.5), 0.25, 0.0, 1.0).unwrap();
        let values: Vec<f64> = (0..5).map(|i| 2.0 + 0.5 * (i as f64) * 0.25).collect();
        let out =
            gl_apply_sequence(&values, &plan, BoundaryMode::ExtrapolateRefit { degree: 1 })
                .unwrap();
        let model = PolynomialModel::new(vec![2.0, 0.5], (0.0, 1.0)).unwrap();
        for (i, &got) in out.iter().enumerate() {
            let x = i as f64 * 0.25;
            assert_relative_eq!(got, gl_apply_model(&model, &plan, x), max_relative = 1e-9);
        }
    }

    #[test]
    fn empty_sequence_is_rejected() {
        let plan = GlPlan::new(order(0.5), 0.25, 0.0, 1.0).unwrap();
        assert!(matches!(
            gl_apply_sequence::<f64>(&[], &plan, BoundaryMode::Hold),
            Err(Error::EmptyInput)
        ));
    }

    #[test]
    fn spectral_response_known_points() {
        let pts = spectral_response(order(0.0), &[5.0]);
        assert_eq!((pts[0].amplitude, pts[0].phase), (1.0, 0.0));

        let pts = spectral_response(order(1.0), &[2.0]);
        assert_eq!(pts[0].amplitude, 2.0);
        assert_relative_eq!(pts[0].phase, std::f64::consts::FRAC_PI_2);

        let pts = spectral_response(order(0.5), &[4.0]);
        assert_eq!(pts[0].amplitude, 2.0);
        assert_relative_eq!(pts[0].phase, std::f64::consts::FRAC_PI_4);
    }

    #[test]
    fn spectral_response_at_zero_frequency() {
        let pts = spectral_response(order(0.5), &[0.0]);
        assert_eq!((pts[0].amplitude, pts[0].phase), (0.0, 0.0));
        let pts = spectral_response(order(0.0), &[0.0]);
        assert_eq!((pts[0].amplitude, pts[0].phase), (1.0, 0.0));
        let pts = spectral_response(order(0.5), &[-4.0]);
        assert!(pts[0].phase < 0.0);
    }
}
