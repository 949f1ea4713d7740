//! Free bases generated from a minimal-weight form.

use super::classify::{Case, CaseReport};
use super::coeffs::OdeCoefficients;
use super::derivative::modular_derivative;
use crate::classical::ClassicalCatalog;
use crate::error::{Error, Result};
use crate::residual::{vector_relative_to_terms, Residual};
use crate::scalar::Scalar;
use crate::series::{integral_gap, PuiseuxSeries, VectorSeries};
use nalgebra::DMatrix;
use num_complex::Complex64;

/// Largest acceptable `σ_max / σ_min` of the leading-coefficient matrix.
pub const FREENESS_TOL: f64 = 1e6;

#[derive(Clone, Debug)]
pub struct FormBasis<S> {
    pub forms: Vec<VectorSeries<S>>,
    pub case: CaseReport,
    pub residuals: Vec<Residual>,
}

impl<S: Scalar> FormBasis<S> {
    pub fn weights(&self) -> Vec<i64> {
        self.forms.iter().map(|f| f.weight).collect()
    }

    pub fn all_passed(&self) -> bool {
        self.residuals.iter().all(Residual::passed)
    }
}

fn check_nonzero<S: Scalar>(f: &VectorSeries<S>) -> Result<()> {
    if f.max_abs() == 0.0 {
        return Err(Error::ZeroForm);
    }
    Ok(())
}

/// `E * F` for a scalar catalog series `E` of weight `w`.
fn times<S: Scalar>(f: &VectorSeries<S>, e: &PuiseuxSeries<S>, w: i64) -> Result<VectorSeries<S>> {
    f.mul_scalar_form(e, w)
}

/// `F, DF, D²F, D³F` and the residual of
/// `D⁴F + a E4 D²F + b E6 DF + c E4² F = 0`.
pub fn assemble_cyclic_basis<S: Scalar>(
    f: &VectorSeries<S>,
    co: &OdeCoefficients<S>,
    case: &CaseReport,
    cat: &ClassicalCatalog<S>,
    tol: f64,
) -> Result<FormBasis<S>> {
    check_nonzero(f)?;
    let nome = f.nome();
    let e4 = cat.e4(nome)?;
    let e6 = cat.e6(nome)?;
    let d1 = modular_derivative(f, cat)?;
    let d2 = modular_derivative(&d1, cat)?;
    let d3 = modular_derivative(&d2, cat)?;
    let d4 = modular_derivative(&d3, cat)?;
    let t_a = times(&d2, e4, 4)?.scale(&co.a);
    let t_b = times(&d1, e6, 6)?.scale(&co.b);
    let t_c = times(f, &e4.mul(e4)?, 8)?.scale(&co.c);
    let sum = d4.add(&t_a)?.add(&t_b)?.add(&t_c)?;
    let rel = vector_relative_to_terms(&sum, &[&d4, &t_a, &t_b, &t_c]);
    let forms = vec![f.clone(), d1, d2, d3];
    let mut residuals = vec![Residual::new("D^4F + aE4 D^2F + bE6 DF + cE4^2 F = 0", rel, tol)];
    residuals.push(freeness_residual(&forms)?);
    Ok(FormBasis { forms, case: case.clone(), residuals })
}

/// `F, DF, G, H` with `H = D²F - a E4 F`, `G = (DH - b E4 DF)/(c E4)`, and
/// the residuals of `DG = E4 F` and `DH = b E4 DF + c E4 G`.
pub fn assemble_noncyclic_basis<S: Scalar>(
    f: &VectorSeries<S>,
    co: &OdeCoefficients<S>,
    case: &CaseReport,
    cat: &ClassicalCatalog<S>,
    tol: f64,
) -> Result<FormBasis<S>> {
    check_nonzero(f)?;
    if co.c.abs() < 1e-12 {
        return Err(Error::DegenerateC);
    }
    let nome = f.nome();
    let e4 = cat.e4(nome)?;
    let df = modular_derivative(f, cat)?;
    let d2f = modular_derivative(&df, cat)?;
    let h = d2f.sub(&times(f, e4, 4)?.scale(&co.a))?;
    let dh = modular_derivative(&h, cat)?;
    let b_e4_df = times(&df, e4, 4)?.scale(&co.b);
    let num = dh.sub(&b_e4_df)?;
    let inv = e4.scale(&co.c).invert()?;
    let g = num.map(case.k1 + 2, |c| c.mul(&inv))?;
    noncyclic_from_parts(f.clone(), df, g, h, co, case, cat, tol)
}

/// Records the noncyclic relations for already computed `(F, DF, G, H)`.
#[allow(clippy::too_many_arguments)]
pub fn noncyclic_from_parts<S: Scalar>(
    f: VectorSeries<S>,
    df: VectorSeries<S>,
    g: VectorSeries<S>,
    h: VectorSeries<S>,
    co: &OdeCoefficients<S>,
    case: &CaseReport,
    cat: &ClassicalCatalog<S>,
    tol: f64,
) -> Result<FormBasis<S>> {
    let nome = f.nome();
    let e4 = cat.e4(nome)?;
    let dg = modular_derivative(&g, cat)?;
    let e4f = times(&f, e4, 4)?;
    let rel_g = vector_relative_to_terms(&dg.sub(&e4f)?, &[&dg, &e4f]);
    let dh = modular_derivative(&h, cat)?;
    let b_term = times(&df, e4, 4)?.scale(&co.b);
    let c_term = times(&g, e4, 4)?.scale(&co.c);
    let rel_h = vector_relative_to_terms(&dh.sub(&b_term)?.sub(&c_term)?, &[&dh, &b_term, &c_term]);
    let d2f = modular_derivative(&df, cat)?;
    let a_term = times(&f, e4, 4)?.scale(&co.a);
    let rel_d2 = vector_relative_to_terms(&d2f.sub(&a_term)?.sub(&h)?, &[&d2f, &a_term, &h]);
    let drop = exponent_drop(&f, &g);
    let forms = vec![f, df, g, h];
    let residuals = vec![
        Residual::new("D^2F = aE4 F + H", rel_d2, tol),
        Residual::new("DG = E4 F", rel_g, tol),
        Residual::new("DH = bE4 DF + cE4 G", rel_h, tol),
        Residual::new("G has no exponent below those of F", drop, tol),
        freeness_residual(&forms)?,
    ];
    Ok(FormBasis { forms, case: case.clone(), residuals })
}

/// How far (in exponent) the first nonzero coefficient of any component of
/// `g` sits below the leading exponent of the same component of `f`;
/// zero when there is no drop.
pub fn exponent_drop<S: Scalar>(f: &VectorSeries<S>, g: &VectorSeries<S>) -> f64 {
    let mut worst: f64 = 0.0;
    for (fc, gc) in f.components.iter().zip(&g.components) {
        let Some(v) = gc.valuation(1e-12) else { continue };
        let first = gc.lead().to_c64().re + v as f64;
        worst = worst.max(fc.lead().to_c64().re - first);
    }
    worst
}

/// Matrix of the coefficients of `q^{λ_j}` (the leading exponent of
/// component `j` of the first form) in component `j` of each form.
pub fn leading_coefficient_matrix<S: Scalar>(forms: &[VectorSeries<S>]) -> Result<DMatrix<Complex64>> {
    let first = &forms[0];
    let rows = forms.len();
    let cols = first.rank();
    let mut m = DMatrix::zeros(rows, cols);
    for (i, form) in forms.iter().enumerate() {
        for (j, comp) in form.components.iter().enumerate() {
            let target = first.components[j].lead();
            let gap = integral_gap(comp.lead(), target)
                .ok_or_else(|| Error::NonIntegralExponentGap { gap: format!("{}", (target.clone() - comp.lead()).to_c64()) })?;
            m[(i, j)] = if gap >= 0 && (gap as usize) <= comp.order() { comp.coeff(gap as usize).to_c64() } else { Complex64::new(0.0, 0.0) };
        }
    }
    Ok(m)
}

/// `σ_max / σ_min` of the leading-coefficient matrix after each component
/// column is scaled to unit max-norm.
pub fn freeness_condition<S: Scalar>(forms: &[VectorSeries<S>]) -> Result<f64> {
    let mut m = leading_coefficient_matrix(forms)?;
    for mut col in m.column_iter_mut() {
        let scale = col.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if scale > 0.0 {
            col /= Complex64::new(scale, 0.0);
        }
    }
    let sv = m.singular_values();
    let max = sv.iter().cloned().fold(0.0, f64::max);
    let min = sv.iter().cloned().fold(f64::INFINITY, f64::min);
    Ok(if min == 0.0 { f64::INFINITY } else { max / min })
}

pub fn freeness_residual<S: Scalar>(forms: &[VectorSeries<S>]) -> Result<Residual> {
    Ok(Residual::new("leading coefficients have full rank (condition number)", freeness_condition(forms)?, FREENESS_TOL))
}

/// Weight-`k1` basis for whichever case applies.
pub fn assemble_basis<S: Scalar>(
    f: &VectorSeries<S>,
    co: &OdeCoefficients<S>,
    case: &CaseReport,
    cat: &ClassicalCatalog<S>,
    tol: f64,
) -> Result<FormBasis<S>> {
    match case.case {
        Case::Cyclic => assemble_cyclic_basis(f, co, case, cat, tol),
        Case::Noncyclic => assemble_noncyclic_basis(f, co, case, cat, tol),
    }
}

