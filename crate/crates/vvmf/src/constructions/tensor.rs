//! Bases for tensor products of two rank-two representations.

use super::rank2::{rank2_minimal, Rank2MinimalForm, Rank2Source};
use super::Route;
use crate::classical::ClassicalCatalog;
use crate::error::{Error, Result};
use crate::mlde::basis::{assemble_noncyclic_basis, noncyclic_from_parts, FormBasis};
use crate::mlde::classify::{classify, Case};
use crate::mlde::coeffs::{build_noncyclic_operator, coeffs_for, noncyclic_modular_system, OdeCoefficients};
use crate::mlde::derivative::modular_derivative;
use crate::mlde::system::{frobenius_solve_series_system, left_eigenvector};
use crate::rep::{tensor_exponents, tensor_is_irreducible, tensor_rep, ExponentData, Rank2Rep};
use crate::residual::Residual;
use crate::scalar::Scalar;
use crate::series::{PuiseuxSeries, VectorSeries};

/// Everything a tensor-product run produces.
#[derive(Clone, Debug)]
pub struct TensorResult<S> {
    pub basis: FormBasis<S>,
    pub coefficients: OdeCoefficients<S>,
    pub exponents: ExponentData<S>,
    pub factors: [Rank2MinimalForm<S>; 2],
}

/// `(a1 b1, a1 b2, a2 b1, a2 b2)`.
pub fn kronecker<S: Scalar>(a: &[PuiseuxSeries<S>], b: &[PuiseuxSeries<S>]) -> Result<Vec<PuiseuxSeries<S>>> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x.mul(y)?);
        }
    }
    Ok(out)
}

/// Largest relative residual of a `K`-operator over a list of series.
pub fn operator_residual<S: Scalar>(op: &crate::mlde::FuchsianOperator<S>, series: &[PuiseuxSeries<S>]) -> Result<f64> {
    series.iter().try_fold(0.0f64, |acc, s| Ok(acc.max(op.residual(s)?)))
}

#[allow(clippy::too_many_arguments)]
pub fn tensor_pipeline<S: Scalar>(
    alpha: &Rank2Rep,
    beta: &Rank2Rep,
    l1: &ExponentData<S>,
    l2: &ExponentData<S>,
    order: usize,
    cat: &ClassicalCatalog<S>,
    route: Route,
    tol: f64,
) -> Result<TensorResult<S>> {
    if !tensor_is_irreducible(alpha, beta) {
        return Err(Error::NotIrreducible("tensor"));
    }
    let a = rank2_minimal(alpha, l1, order, cat, route).map_err(|e| e.at_step('d'))?;
    let b = rank2_minimal(beta, l2, order, cat, route).map_err(|e| e.at_step('d'))?;
    if a.source == Rank2Source::NuChi || b.source == Rank2Source::NuChi {
        return Err(Error::SymbolicComponent);
    }
    let l = tensor_exponents(l1, l2)?;
    let rep = tensor_rep(alpha, beta).map_err(|e| e.at_step('a'))?;
    let case = classify(&rep, &l).map_err(|e| e.at_step('b'))?;
    let weight = a.k1 + b.k1;
    if case.case != Case::Noncyclic || case.k1 != weight {
        return Err(Error::Validation(format!(
            "classification gives {:?} with k1 = {}, the tensor form has weight {weight}",
            case.case, case.k1
        )));
    }
    let co = coeffs_for(&l, Case::Noncyclic).map_err(|e| e.at_step('c'))?;
    let f = VectorSeries::new(kronecker(&a.components.components, &b.components.components)?, weight);
    let f_tilde = kronecker(&a.k_series, &b.k_series)?;
    let ode = operator_residual(&build_noncyclic_operator(&co), &f_tilde)?;
    let mut basis = match route {
        Route::Compose => assemble_noncyclic_basis(&f, &co, &case, cat, tol)?,
        Route::Modular => noncyclic_basis_from_system(&f, &co, &case, cat, order, tol)?,
    };
    basis.residuals.insert(0, Residual::new("noncyclic scalar ODE in K applied to F/eta^(2k1)", ode, tol));
    Ok(TensorResult { basis, coefficients: co, exponents: l, factors: [a, b] })
}

/// Builds `G` from the first-order system in `q` instead of dividing by
/// `E4`: for each component the system solution with the component's
/// exponent is scaled to agree with `F`, and its third entry is `G`.
pub fn noncyclic_basis_from_system<S: Scalar>(
    f: &VectorSeries<S>,
    co: &OdeCoefficients<S>,
    case: &crate::mlde::CaseReport,
    cat: &ClassicalCatalog<S>,
    order: usize,
    tol: f64,
) -> Result<FormBasis<S>> {
    let a = noncyclic_modular_system(co, case.k1, cat, order)?;
    let mut g = Vec::with_capacity(f.rank());
    for comp in &f.components {
        let v0 = left_eigenvector(&a[0], comp.lead())?;
        if v0[0].abs() < 1e-12 {
            return Err(Error::ZeroForm);
        }
        let x = frobenius_solve_series_system(&a, comp.lead(), &v0, order, comp.nome())?;
        let scale = comp.coeff(0).clone() / x[0].coeff(0);
        g.push(x[2].scale(&scale));
    }
    let g = VectorSeries::new(g, case.k1 + 2);
    let df = modular_derivative(f, cat)?;
    let h = modular_derivative(&df, cat)?.sub(&f.mul_scalar_form(cat.e4(f.nome())?, 4)?.scale(&co.a))?;
    noncyclic_from_parts(f.clone(), df, g, h, co, case, cat, tol)
}
