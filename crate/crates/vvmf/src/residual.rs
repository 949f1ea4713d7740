//! Residual measures for series identities.

use crate::error::Result;
use crate::scalar::Scalar;
use crate::series::{PuiseuxSeries, VectorSeries};
use serde::{Deserialize, Serialize};

/// Default tolerance for series residuals.
pub const SERIES_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Residual {
    pub name: String,
    pub value: f64,
    pub tolerance: f64,
}

impl Residual {
    pub fn new(name: impl Into<String>, value: f64, tolerance: f64) -> Self {
        Residual { name: name.into(), value, tolerance }
    }

    pub fn passed(&self) -> bool {
        self.value.is_finite() && self.value < self.tolerance
    }
}

/// `max |l_n - r_n| / max(|l_n|, |r_n|)` over coefficients where either side
/// is nonzero.
pub fn coeffwise_rel<S: Scalar>(lhs: &PuiseuxSeries<S>, rhs: &PuiseuxSeries<S>) -> Result<f64> {
    let diff = lhs.sub(rhs)?;
    let aligned_l = lhs.sub(&rhs.scale(&S::zero()))?;
    let aligned_r = rhs.sub(&lhs.scale(&S::zero()))?;
    let mut worst: f64 = 0.0;
    for n in 0..=diff.order() {
        let scale = aligned_l.coeff(n).abs().max(aligned_r.coeff(n).abs());
        if scale > 1e-300 {
            worst = worst.max(diff.coeff(n).abs() / scale);
        }
    }
    Ok(worst)
}

/// `max |l_n - r_n|` divided by the largest coefficient modulus of either side.
pub fn window_rel<S: Scalar>(lhs: &PuiseuxSeries<S>, rhs: &PuiseuxSeries<S>) -> Result<f64> {
    let diff = lhs.sub(rhs)?;
    let scale = lhs.truncate(diff.order()).max_abs().max(rhs.truncate(diff.order()).max_abs());
    Ok(ratio(diff.max_abs(), scale))
}

/// Largest residual coefficient relative to the largest coefficient among the
/// terms that were summed to produce it.
pub fn relative_to_terms<S: Scalar>(residual: &PuiseuxSeries<S>, terms: &[&PuiseuxSeries<S>]) -> f64 {
    let scale = terms.iter().map(|t| t.truncate(residual.order()).max_abs()).fold(0.0, f64::max);
    ratio(residual.max_abs(), scale)
}

/// Componentwise version of [`relative_to_terms`].
pub fn vector_relative_to_terms<S: Scalar>(residual: &VectorSeries<S>, terms: &[&VectorSeries<S>]) -> f64 {
    let order = residual.order();
    let scale = terms.iter().map(|t| t.truncate(order).max_abs()).fold(0.0, f64::max);
    ratio(residual.truncate(order).max_abs(), scale)
}

fn ratio(num: f64, den: f64) -> f64 {
    if den == 0.0 {
        if num == 0.0 { 0.0 } else { f64::INFINITY }
    } else {
        num / den
    }
}
