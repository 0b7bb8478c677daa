//! Least-squares polynomial fitting over the monomial basis, plus automatic
//! degree selection against a reference true value.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::num::{real, Real};
use crate::Result;

/// Fitted measurement-vs-impact-parameter model `a_0 + a_1 x + ... + a_n x^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialModel<F: Real> {
    coefficients: Vec<F>,
    domain: (F, F),
}

impl<F: Real> PolynomialModel<F> {
    pub fn new(coefficients: Vec<F>, domain: (F, F)) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::EmptyInput);
        }
        if coefficients.iter().any(|c| !c.is_finite()) {
            return Err(Error::SingularFit);
        }
        Ok(Self {
            coefficients,
            domain,
        })
    }

    pub fn coefficients(&self) -> &[F] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Fitting range of the impact parameter. Evaluation outside it is the
    /// polynomial's analytic extension.
    pub fn domain(&self) -> (F, F) {
        self.domain
    }

    pub fn eval(&self, x: F) -> F {
        let mut acc = F::zero();
        for &c in self.coefficients.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

/// Ordinary least squares over the monomial basis via Householder QR.
pub fn polyfit<F: Real>(points: &[(F, F)], degree: usize) -> Result<PolynomialModel<F>> {
    let rows = points.len();
    let cols = degree + 1;
    if rows <= degree {
        return Err(Error::Underdetermined {
            degree,
            points: rows,
        });
    }
    // Column-major Vandermonde design matrix.
    let mut a = vec![F::zero(); rows * cols];
    for (r, &(x, _)) in points.iter().enumerate() {
        let mut p = F::one();
        for c in 0..cols {
            a[c * rows + r] = p;
            p = p * x;
        }
    }
    let mut b: Vec<F> = points.iter().map(|&(_, y)| y).collect();

    // Householder QR, applying reflectors to b as they are formed.
    for c in 0..cols {
        let mut norm = F::zero();
        for r in c..rows {
            norm = norm + a[c * rows + r] * a[c * rows + r];
        }
        let norm = norm.sqrt();
        if norm <= real(1e-12) {
            return Err(Error::SingularFit);
        }
        let alpha = if a[c * rows + c] >= F::zero() {
            -norm
        } else {
            norm
        };
        let mut v = vec![F::zero(); rows];
        v[c] = a[c * rows + c] - alpha;
        for r in (c + 1)..rows {
            v[r] = a[c * rows + r];
        }
        let vtv = v[c..].iter().fold(F::zero(), |acc, &x| acc + x * x);
        if vtv > F::zero() {
            for col in c..cols {
                let dot = (c..rows).fold(F::zero(), |acc, r| acc + v[r] * a[col * rows + r]);
                let f = (F::one() + F::one()) * dot / vtv;
                for r in c..rows {
                    a[col * rows + r] = a[col * rows + r] - f * v[r];
                }
            }
            let dot = (c..rows).fold(F::zero(), |acc, r| acc + v[r] * b[r]);
            let f = (F::one() + F::one()) * dot / vtv;
            for r in c..rows {
                b[r] = b[r] - f * v[r];
            }
        }
    }

    // Back substitution on the upper-triangular factor.
    let mut coeffs = vec![F::zero(); cols];
    for c in (0..cols).rev() {
        let diag = a[c * rows + c];
        if diag.abs() <= real(1e-12) {
            return Err(Error::SingularFit);
        }
        let mut s = b[c];
        for k in (c + 1)..cols {
            s = s - a[k * rows + c] * coeffs[k];
        }
        coeffs[c] = s / diag;
    }
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::SingularFit);
    }

    let lo = points
        .iter()
        .map(|&(x, _)| x)
        .fold(F::infinity(), |a, b| a.min(b));
    let hi = points
        .iter()
        .map(|&(x, _)| x)
        .fold(F::neg_infinity(), |a, b| a.max(b));
    PolynomialModel::new(coeffs, (lo, hi))
}

/// Outcome of scanning candidate degrees for the smallest total error.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeSelection<F: Real> {
    pub chosen_degree: usize,
    /// Sum of `|fit(x_i) - true_value|` per candidate degree.
    pub total_error_by_degree: BTreeMap<usize, F>,
    /// Candidates that failed to fit, with the reason.
    pub excluded: BTreeMap<usize, String>,
}

/// Fits every candidate degree `1..=min(max_degree, points - 1)` and picks the
/// one whose fitted values stray least from `true_value` in total absolute
/// error. Near-ties (1e-9 relative) break to the lower degree.
///
/// Degree 0 is not a candidate: its fit is exactly the mean of the samples, so
/// its error against a mean-derived true value is identically zero and the
/// selection would be vacuous.
pub fn select_degree<F: Real>(
    points: &[(F, F)],
    max_degree: usize,
    true_value: F,
) -> Result<DegreeSelection<F>> {
    if points.len() < 2 {
        return Err(Error::Underdetermined {
            degree: max_degree,
            points: points.len(),
        });
    }
    let cap = max_degree.min(points.len() - 1);
    if cap < 1 {
        return Err(Error::Underdetermined {
            degree: max_degree,
            points: points.len(),
        });
    }

    let mut errors = BTreeMap::new();
    let mut excluded = BTreeMap::new();
    let mut best: Option<(usize, F)> = None;
    for degree in 1..=cap {
        match polyfit(points, degree) {
            Ok(model) => {
                let total = points.iter().fold(F::zero(), |acc, &(x, _)| {
                    acc + (model.eval(x) - true_value).abs()
                });
                errors.insert(degree, total);
                let improved = match best {
                    None => true,
                    Some((_, best_err)) => {
                        let tie = real::<F>(1e-9) * best_err.max(F::one());
                        total < best_err - tie
                    }
                };
                if improved {
                    best = Some((degree, total));
                }
            }
            Err(e) => {
                excluded.insert(degree, e.to_string());
            }
        }
    }

    match best {
        Some((chosen_degree, _)) => Ok(DegreeSelection {
            chosen_degree,
            total_error_by_degree: errors,
            excluded,
        }),
        None => Err(Error::NoFittableDegree { cap }),
    }
}
