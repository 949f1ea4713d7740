//! Frobenius solutions of first-order matrix systems acting on row vectors.

use crate::error::{Error, Result};
use crate::linalg::{self, Mat};
use crate::residual::vector_relative_to_terms;
use crate::scalar::Scalar;
use crate::series::{Nome, PuiseuxSeries, VectorSeries};

/// Pivot threshold used when solving `c_n ((r+n) I - B0) = rhs`.
pub const SYSTEM_PIVOT_TOL: f64 = 1e-12;

/// `s I - b0`.
fn shifted<S: Scalar>(b0: &Mat<S>, s: &S) -> Mat<S> {
    let mut m = linalg::scale(b0, &-S::one());
    for (i, row) in m.iter_mut().enumerate() {
        row[i] += s;
    }
    m
}

/// Row-vector solve `x m = rhs`.
fn solve_row<S: Scalar>(m: &Mat<S>, rhs: &[S]) -> Option<Vec<S>> {
    linalg::solve(&linalg::transpose(m), rhs, SYSTEM_PIVOT_TOL)
}

fn check_left_eigenvector<S: Scalar>(a0: &Mat<S>, r: &S, v0: &[S]) -> Result<()> {
    let defect = linalg::vecmat(v0, &shifted(a0, r));
    let scale = (linalg::max_abs(a0) + r.abs() + 1.0) * v0.iter().map(S::abs).fold(0.0, f64::max);
    let worst = defect.iter().map(S::abs).fold(0.0, f64::max);
    if scale == 0.0 || worst > 1e-9 * scale {
        return Err(Error::NotLeftEigenvector);
    }
    Ok(())
}

fn to_components<S: Scalar>(c: Vec<Vec<S>>, r: &S, nome: Nome) -> Vec<PuiseuxSeries<S>> {
    let dim = c[0].len();
    (0..dim).map(|j| PuiseuxSeries::new(nome, r.clone(), c.iter().map(|cn| cn[j].clone()).collect())).collect()
}

/// Solves `(1 - x) θX = X (B0 + B1 x)` for a row vector
/// `X = x^r Σ c_n x^n` with `c_0 = v0`, via
/// `c_n ((r+n) I - B0) = c_{n-1} ((r+n-1) I + B1)`.
pub fn frobenius_solve_system<S: Scalar>(
    b0: &Mat<S>,
    b1: &Mat<S>,
    r: &S,
    v0: &[S],
    order: usize,
    nome: Nome,
) -> Result<Vec<PuiseuxSeries<S>>> {
    check_left_eigenvector(b0, r, v0)?;
    let mut c: Vec<Vec<S>> = vec![v0.to_vec()];
    for n in 1..=order {
        let prev_shift = r.clone() + S::from_i64(n as i64 - 1);
        let mut right = b1.clone();
        for (i, row) in right.iter_mut().enumerate() {
            row[i] += &prev_shift;
        }
        let rhs = linalg::vecmat(&c[n - 1], &right);
        let m = shifted(b0, &(r.clone() + S::from_i64(n as i64)));
        let cn = solve_row(&m, &rhs).ok_or(Error::Resonance { shift: n })?;
        c.push(cn);
    }
    Ok(to_components(c, r, nome))
}

/// Solves `θX = X A(x)` with `A = Σ_m A_m x^m` for `X = x^r Σ c_n x^n`,
/// `c_0 = v0`, via `c_n ((r+n) I - A_0) = Σ_{m≥1} c_{n-m} A_m`.
pub fn frobenius_solve_series_system<S: Scalar>(
    a: &[Mat<S>],
    r: &S,
    v0: &[S],
    order: usize,
    nome: Nome,
) -> Result<Vec<PuiseuxSeries<S>>> {
    check_left_eigenvector(&a[0], r, v0)?;
    let dim = v0.len();
    let mut c: Vec<Vec<S>> = vec![v0.to_vec()];
    for n in 1..=order {
        let mut rhs = vec![S::zero(); dim];
        for m in 1..=n.min(a.len() - 1) {
            for (acc, v) in rhs.iter_mut().zip(linalg::vecmat(&c[n - m], &a[m])) {
                *acc += v;
            }
        }
        let m = shifted(&a[0], &(r.clone() + S::from_i64(n as i64)));
        c.push(solve_row(&m, &rhs).ok_or(Error::Resonance { shift: n })?);
    }
    Ok(to_components(c, r, nome))
}

/// Left eigenvector of `b0` for the eigenvalue `r`, largest entry 1.
pub fn left_eigenvector<S: Scalar>(b0: &Mat<S>, r: &S) -> Result<Vec<S>> {
    linalg::left_null_vector(&shifted(b0, r), 1e-9).ok_or_else(|| Error::NotAnExponent(format!("{}", r.to_c64())))
}

/// Relative residual of `(1 - x) θX - X (B0 + B1 x)`.
pub fn system_residual<S: Scalar>(b0: &Mat<S>, b1: &Mat<S>, x: &[PuiseuxSeries<S>]) -> Result<f64> {
    let nome = x[0].nome();
    let order = x.iter().map(PuiseuxSeries::order).min().unwrap_or(0);
    let xv = VectorSeries::new(x.to_vec(), 0);
    let theta = xv.map(0, |c| Ok(c.theta()))?;
    let x_theta = theta.map(0, |c| Ok(c.shift(1).truncate(order)))?;
    let lhs = theta.truncate(order).sub(&x_theta)?;
    let times = |m: &Mat<S>, shift: i64| -> Result<VectorSeries<S>> {
        let dim = m.len();
        let comps = (0..dim)
            .map(|j| {
                let mut acc = PuiseuxSeries::new(nome, x[0].lead().clone(), vec![S::zero(); order + 1]);
                for (i, xi) in x.iter().enumerate() {
                    acc = acc.add(&xi.scale(&m[i][j]).shift(shift))?.truncate(order);
                }
                Ok(acc)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(VectorSeries::new(comps, 0))
    };
    let r0 = times(b0, 0)?;
    let r1 = times(b1, 1)?;
    let rhs = r0.add(&r1)?;
    let res = lhs.sub(&rhs)?;
    Ok(vector_relative_to_terms(&res, &[&lhs, &r0, &r1]))
}
