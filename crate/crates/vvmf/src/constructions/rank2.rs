//! Minimal-weight forms of rank two from Gauss hypergeometric series.

use super::Route;
use crate::classical::ClassicalCatalog;
use crate::error::{Error, Result};
use crate::mlde::coeffs::{hauptmodul_normalization, rank2_mlde};
use crate::mlde::hypergeom::hypergeom_2f1;
use crate::rep::{ExponentData, Rank2Rep};
use crate::scalar::{near_integer, Scalar};
use crate::series::{integral_gap, Nome, PuiseuxSeries, VectorSeries};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rank2Source {
    Hypergeometric,
    /// `ρ ≅ ν⊗χ^a`: the form is `η^{2k1+2} (τ, 1)`; only the second
    /// component has a q-expansion.
    NuChi,
}

#[derive(Clone, Debug)]
pub struct Rank2MinimalForm<S> {
    pub k1: i64,
    /// For `Hypergeometric` both components; for `NuChi` only the second.
    pub components: VectorSeries<S>,
    pub source: Rank2Source,
    /// `K^{f_j} ₂F₁(...)`, the components divided by `η^{2k1}` as series in
    /// `K` (empty for `NuChi`).
    pub k_series: Vec<PuiseuxSeries<S>>,
    /// `f_j = r_j - k1/12`.
    pub f: Vec<S>,
}

/// `K^{α} ₂F₁(α, α + 1/3; r_i - r_j + 1; K)` with `α = (6(r_i - r_j) + 1)/12`.
pub fn hypergeometric_component<S: Scalar>(ri: &S, rj: &S, order: usize) -> Result<PuiseuxSeries<S>> {
    let diff = ri.clone() - rj;
    let alpha = (diff.clone() * S::from_i64(6) + S::one()) / S::from_i64(12);
    let beta = alpha.clone() + S::ratio(1, 3);
    let c = diff + S::one();
    let h = hypergeom_2f1(&alpha, &beta, &c, order)?;
    Ok(PuiseuxSeries::new(Nome::K, alpha, h.coeffs().to_vec()))
}

/// `k1 = 6 Tr(L) - 1`.
pub fn rank2_weight<S: Scalar>(l: &ExponentData<S>) -> Result<i64> {
    let six_tr = l.trace().to_c64() * 6.0;
    near_integer(six_tr, 1e-9)
        .map(|n| n - 1)
        .ok_or_else(|| Error::InconsistentRep(format!("6 Tr(L) = {six_tr} is not an integer")))
}

/// The minimal-weight form of `(ρ, L)` to `order` in `q`.
pub fn rank2_minimal<S: Scalar>(
    rep: &Rank2Rep,
    l: &ExponentData<S>,
    order: usize,
    cat: &ClassicalCatalog<S>,
    route: Route,
) -> Result<Rank2MinimalForm<S>> {
    if !rep.is_irreducible() {
        return Err(Error::ReducibleRep);
    }
    if l.rank() != 2 {
        return Err(Error::WrongRank { expected: 2, found: l.rank() });
    }
    l.check_spectrum(&rep.t_eigenvalues())?;
    let k1 = rank2_weight(l)?;
    let (r1, r2) = (&l.eigenvalues[0], &l.eigenvalues[1]);
    let twelfth_k = S::ratio(k1, 12);
    let f = vec![r1.clone() - &twelfth_k, r2.clone() - &twelfth_k];
    if rep.jordan {
        let eta = cat.eta_power(2 * k1 + 2, Nome::Q)?.truncate(order);
        return Ok(Rank2MinimalForm {
            k1,
            components: VectorSeries::new(vec![eta], k1),
            source: Rank2Source::NuChi,
            k_series: Vec::new(),
            f,
        });
    }
    if integral_gap(r1, r2).is_some() {
        return Err(Error::ResonantExponents(format!("{} and {}", r1.to_c64(), r2.to_c64())));
    }
    let k_series = vec![hypergeometric_component(r1, r2, order)?, hypergeometric_component(r2, r1, order)?];
    let eta = cat.eta_power(2 * k1, Nome::Q)?.truncate(order);
    let components = match route {
        Route::Compose => k_series
            .iter()
            .map(|s| eta.mul(&s.compose_frobenius(cat.k())?))
            .collect::<Result<Vec<_>>>()?,
        Route::Modular => {
            let a = f[0].clone() * &f[1];
            let op = rank2_mlde(&a, k1, cat, order)?;
            [(r1, &f[0]), (r2, &f[1])]
                .iter()
                .map(|(r, fj)| Ok(op.frobenius_solve(r, order)?.scale(&hauptmodul_normalization(cat.k(), fj)?)))
                .collect::<Result<Vec<_>>>()?
        }
    };
    Ok(Rank2MinimalForm { k1, components: VectorSeries::new(components, k1), source: Rank2Source::Hypergeometric, k_series, f })
}
