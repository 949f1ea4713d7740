//! The modular derivative `D_k = θ_q - (k/12) E2`.

use crate::classical::ClassicalCatalog;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::series::{Nome, PuiseuxSeries, VectorSeries};

/// `D_k f` for a scalar series in nome Q or Q2; in Q2 the derivative is
/// `θ_{q2}/2`.
pub fn modular_derivative_scalar<S: Scalar>(
    f: &PuiseuxSeries<S>,
    k: i64,
    cat: &ClassicalCatalog<S>,
) -> Result<PuiseuxSeries<S>> {
    let theta = match f.nome() {
        Nome::Q => f.theta(),
        Nome::Q2 => f.theta().scale(&S::ratio(1, 2)),
        other => return Err(Error::WrongNome { expected: "Q or Q2", found: other }),
    };
    let e2f = cat.e2(f.nome())?.mul(f)?;
    theta.truncate(e2f.order()).sub(&e2f.scale(&S::ratio(k, 12)))
}

/// `D_k F` componentwise, with `k` the weight carried by `F`.
pub fn modular_derivative<S: Scalar>(f: &VectorSeries<S>, cat: &ClassicalCatalog<S>) -> Result<VectorSeries<S>> {
    f.map(f.weight + 2, |c| modular_derivative_scalar(c, f.weight, cat))
}
