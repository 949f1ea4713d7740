//! Bases for symmetric cubes of rank-two representations.

use super::rank2::{rank2_minimal, Rank2MinimalForm, Rank2Source};
use super::tensor::operator_residual;
use super::Route;
use crate::classical::ClassicalCatalog;
use crate::error::{Error, Result};
use crate::mlde::basis::{assemble_cyclic_basis, FormBasis};
use crate::mlde::classify::{classify, Case};
use crate::mlde::coeffs::{build_cyclic_operator, coeffs_for, OdeCoefficients};
use crate::rep::{sym3_exponents, sym3_is_irreducible, sym3_rep, ExponentData, Rank2Rep};
use crate::residual::Residual;
use crate::scalar::Scalar;
use crate::series::{PuiseuxSeries, VectorSeries};

#[derive(Clone, Debug)]
pub struct Sym3Result<S> {
    pub basis: FormBasis<S>,
    pub coefficients: OdeCoefficients<S>,
    pub exponents: ExponentData<S>,
    pub factor: Rank2MinimalForm<S>,
}

/// `(f³, f²g, fg², g³)`.
pub fn sym3_vector<S: Scalar>(f: &PuiseuxSeries<S>, g: &PuiseuxSeries<S>) -> Result<Vec<PuiseuxSeries<S>>> {
    let f2 = f.mul(f)?;
    let g2 = g.mul(g)?;
    Ok(vec![f2.mul(f)?, f2.mul(g)?, f.mul(&g2)?, g2.mul(g)?])
}

pub fn sym3_pipeline<S: Scalar>(
    alpha: &Rank2Rep,
    l: &ExponentData<S>,
    order: usize,
    cat: &ClassicalCatalog<S>,
    route: Route,
    tol: f64,
) -> Result<Sym3Result<S>> {
    if !sym3_is_irreducible(alpha) {
        return Err(Error::NotIrreducible("symmetric cube"));
    }
    let a = rank2_minimal(alpha, l, order, cat, route).map_err(|e| e.at_step('d'))?;
    if a.source == Rank2Source::NuChi {
        return Err(Error::SymbolicComponent);
    }
    let l3 = sym3_exponents(l)?;
    let rep = sym3_rep(alpha).map_err(|e| e.at_step('a'))?;
    let case = classify(&rep, &l3).map_err(|e| e.at_step('b'))?;
    let weight = 3 * a.k1;
    if case.case != Case::Cyclic || case.k1 != weight {
        return Err(Error::Validation(format!(
            "classification gives {:?} with k1 = {}, the symmetric cube has weight {weight}",
            case.case, case.k1
        )));
    }
    let co = coeffs_for(&l3, Case::Cyclic).map_err(|e| e.at_step('c'))?;
    let comps = &a.components.components;
    let f = VectorSeries::new(sym3_vector(&comps[0], &comps[1])?, weight);
    let f_tilde = sym3_vector(&a.k_series[0], &a.k_series[1])?;
    let ode = operator_residual(&build_cyclic_operator(&co), &f_tilde)?;
    let mut basis = assemble_cyclic_basis(&f, &co, &case, cat, tol)?;
    basis.residuals.insert(0, Residual::new("cyclic ODE in K applied to F/eta^(2k1)", ode, tol));
    Ok(Sym3Result { basis, coefficients: co, exponents: l3, factor: a })
}
