//! Gauss hypergeometric series and the operator it solves.

use super::operator::FuchsianOperator;
use super::poly::ThetaPoly;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::series::{Nome, PuiseuxSeries};

/// `₂F₁(a, b; c; x) = Σ (a)_n (b)_n / ((c)_n n!) x^n` through `x^order`, in
/// nome K.
pub fn hypergeom_2f1<S: Scalar>(a: &S, b: &S, c: &S, order: usize) -> Result<PuiseuxSeries<S>> {
    let mut t = vec![S::one()];
    for n in 0..order {
        let nn = S::from_i64(n as i64);
        let den = c.clone() + &nn;
        if den.abs() < 1e-12 {
            return Err(Error::PoleInC { n });
        }
        let next = t[n].clone() * (a.clone() + &nn) * (b.clone() + &nn) / (den * (nn + S::one()));
        t.push(next);
    }
    Ok(PuiseuxSeries::new(Nome::K, S::zero(), t))
}

/// `θ(θ + c - 1) - x(θ + a)(θ + b)` in nome K.
pub fn hypergeometric_operator<S: Scalar>(a: &S, b: &S, c: &S) -> FuchsianOperator<S> {
    let p0 = ThetaPoly::from_roots(&[S::zero(), S::one() - c]);
    let p1 = ThetaPoly::from_roots(&[-a.clone(), -b.clone()]).scale(&-S::one());
    FuchsianOperator::new(vec![p0, p1], Nome::K)
}
