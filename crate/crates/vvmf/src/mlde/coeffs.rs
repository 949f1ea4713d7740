//! ODE coefficients `(a, b, c)` from exponents, and the operators and
//! systems they determine, both in the hauptmodul `K` and directly in `q`.

use super::classify::Case;
use super::operator::FuchsianOperator;
use super::poly::ThetaPoly;
use crate::classical::ClassicalCatalog;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::rep::ExponentData;
use crate::scalar::Scalar;
use crate::series::{Nome, PuiseuxSeries};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug)]
pub struct OdeCoefficients<S> {
    pub case: Case,
    pub a: S,
    pub b: S,
    pub c: S,
    /// The shifted indicial exponents `f_j`.
    pub f: Vec<S>,
}

/// Serialized coefficients.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OdeCoefficientsJson {
    pub case: Case,
    pub a: [f64; 2],
    pub b: [f64; 2],
    pub c: [f64; 2],
    pub f: Vec<[f64; 2]>,
}

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

impl<S: Scalar> OdeCoefficients<S> {
    pub fn to_json(&self) -> OdeCoefficientsJson {
        OdeCoefficientsJson {
            case: self.case,
            a: pair(self.a.to_c64()),
            b: pair(self.b.to_c64()),
            c: pair(self.c.to_c64()),
            f: self.f.iter().map(|x| pair(x.to_c64())).collect(),
        }
    }

    /// The monic indicial polynomial at `K = 0` written in `(a, b, c)`.
    pub fn characteristic_polynomial(&self) -> ThetaPoly<S> {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        let r = |p, q| S::ratio(p, q);
        match self.case {
            Case::Cyclic => ThetaPoly::new(vec![
                c.clone(),
                -(a.clone() * r(1, 6) - b + r(1, 36)),
                a.clone() + r(11, 36),
                -S::one(),
                S::one(),
            ]),
            Case::Noncyclic => ThetaPoly::new(vec![
                -(a.clone() * r(1, 18)) - c,
                a.clone() * r(1, 2) + &(b.clone() * r(1, 6)) - r(1, 108),
                -a.clone() - b + r(5, 36),
                -r(2, 3),
                S::one(),
            ]),
        }
    }
}

/// Elementary symmetric polynomials `σ_1..σ_4` of four values.
pub fn elementary_symmetric<S: Scalar>(f: &[S]) -> [S; 4] {
    let mut e = [S::one(), S::zero(), S::zero(), S::zero(), S::zero()];
    for x in f {
        for k in (1..=4).rev() {
            let t = e[k - 1].clone() * x;
            e[k] += t;
        }
    }
    let [_, s1, s2, s3, s4] = e;
    [s1, s2, s3, s4]
}

fn check_sum<S: Scalar>(f: &[S], expected: S) -> Result<()> {
    if f.len() != 4 {
        return Err(Error::WrongRank { expected: 4, found: f.len() });
    }
    let mut s = S::zero();
    for x in f {
        s += x;
    }
    if (s.clone() - &expected).abs() > 1e-9 {
        return Err(Error::ExponentSumMismatch {
            expected: format!("{}", expected.to_c64()),
            found: format!("{}", s.to_c64()),
        });
    }
    Ok(())
}

pub fn cyclic_coeffs<S: Scalar>(f: &[S]) -> Result<OdeCoefficients<S>> {
    check_sum(f, S::one())?;
    let [_, s2, s3, s4] = elementary_symmetric(f);
    let a = s2 - S::ratio(11, 36);
    let b = -s3 + &(a.clone() * S::ratio(1, 6)) + S::ratio(1, 36);
    Ok(OdeCoefficients { case: Case::Cyclic, a, b, c: s4, f: f.to_vec() })
}

pub fn noncyclic_coeffs<S: Scalar>(f: &[S]) -> Result<OdeCoefficients<S>> {
    check_sum(f, S::ratio(2, 3))?;
    let [_, s2, s3, s4] = elementary_symmetric(f);
    let a = s3.clone() * S::from_i64(-3) + &(s2.clone() * S::ratio(1, 2)) - S::ratio(1, 24);
    let b = s3 * S::from_i64(3) - &(s2 * S::ratio(3, 2)) + S::ratio(13, 72);
    let c = -s4 - &(a.clone() * S::ratio(1, 18));
    Ok(OdeCoefficients { case: Case::Noncyclic, a, b, c, f: f.to_vec() })
}

/// `f_j = e_j + (1 - Tr L)/4` (cyclic) or `f_j = e_j - Tr L/4 + 1/6`
/// (noncyclic).
pub fn shifted_exponents<S: Scalar>(l: &ExponentData<S>, case: Case) -> Vec<S> {
    let quarter_tr = l.trace() * S::ratio(1, 4);
    let shift = match case {
        Case::Cyclic => S::ratio(1, 4) - quarter_tr,
        Case::Noncyclic => S::ratio(1, 6) - quarter_tr,
    };
    l.eigenvalues.iter().map(|e| e.clone() + &shift).collect()
}

/// Coefficients for exponent data and a case.
pub fn coeffs_for<S: Scalar>(l: &ExponentData<S>, case: Case) -> Result<OdeCoefficients<S>> {
    let f = shifted_exponents(l, case);
    match case {
        Case::Cyclic => cyclic_coeffs(&f),
        Case::Noncyclic => noncyclic_coeffs(&f),
    }
}

fn poly<S: Scalar>(c: Vec<S>) -> ThetaPoly<S> {
    ThetaPoly::new(c)
}

/// The cyclic fourth-order equation in `K`, multiplied by `36(1-K)^2`.
pub fn build_cyclic_operator<S: Scalar>(co: &OdeCoefficients<S>) -> FuchsianOperator<S> {
    let (a, b, c) = (&co.a, &co.b, &co.c);
    let n = S::from_i64;
    let p0 = poly(vec![
        c.clone() * n(36),
        a.clone() * n(-6) + &(b.clone() * n(36)) - n(1),
        a.clone() * n(36) + n(11),
        n(-36),
        n(36),
    ]);
    let p1 = poly(vec![
        S::zero(),
        -(a.clone() * n(12) + &(b.clone() * n(36)) + n(4)),
        -(a.clone() * n(36) + n(28)),
        n(-36),
        n(-72),
    ]);
    let p2 = poly(vec![S::zero(), n(8), n(44), n(72), n(36)]);
    FuchsianOperator::new(vec![p0, p1, p2], Nome::K)
}

/// The scalar noncyclic fourth-order equation in `K`, multiplied by
/// `108(1-K)^2`.
pub fn build_noncyclic_operator<S: Scalar>(co: &OdeCoefficients<S>) -> FuchsianOperator<S> {
    let (a, b, c) = (&co.a, &co.b, &co.c);
    let n = S::from_i64;
    let ab = a.clone() + b;
    let p0 = poly(vec![
        -((a.clone() + &(c.clone() * n(18))) * n(6)),
        a.clone() * n(54) + &(b.clone() * n(18)) - n(1),
        (n(5) - ab.clone() * n(36)) * n(3),
        n(-72),
        n(108),
    ]);
    let p1 = poly(vec![
        a.clone() * n(-12),
        b.clone() * n(36) - n(22),
        (ab * n(36) - n(34)) * n(3),
        n(-180),
        n(-216),
    ]);
    let p2 = poly(vec![S::zero(), n(32), n(168), n(252), n(108)]);
    FuchsianOperator::new(vec![p0, p1, p2], Nome::K)
}

/// `(1 - K) θX = X (B0 + B1 K)`.
#[derive(Clone, Debug)]
pub struct NoncyclicSystem<S> {
    pub b0: Mat<S>,
    pub b1: Mat<S>,
}

pub fn build_noncyclic_system<S: Scalar>(co: &OdeCoefficients<S>) -> Result<NoncyclicSystem<S>> {
    if co.c.abs() < 1e-12 {
        return Err(Error::DegenerateC);
    }
    let (a, b, c) = (&co.a, &co.b, &co.c);
    let z = S::zero;
    let o = S::one;
    let r = |p, q| S::ratio(p, q);
    let b0 = vec![
        vec![z(), a.clone(), o(), z()],
        vec![o(), r(1, 6), z(), b.clone()],
        vec![z(), z(), r(1, 6), c.clone()],
        vec![z(), o(), z(), r(1, 3)],
    ];
    let b1 = vec![
        vec![z(), z(), z(), z()],
        vec![-o(), r(1, 3), z(), -b.clone()],
        vec![z(), z(), r(1, 3), -c.clone()],
        vec![z(), z(), z(), -r(1, 3)],
    ];
    Ok(NoncyclicSystem { b0, b1 })
}

/// `D_{k+2m-2} ∘ ... ∘ D_k` in the nome of the catalog series.
fn iterated_derivative<S: Scalar>(k: i64, m: usize, nome: Nome, cat: &ClassicalCatalog<S>, order: usize) -> Result<FuchsianOperator<S>> {
    let e2 = cat.e2(nome)?.truncate(order);
    let mut op = FuchsianOperator::new(vec![ThetaPoly::constant(S::one())], nome);
    for j in 0..m {
        let d = FuchsianOperator::modular_derivative(&S::from_i64(k + 2 * j as i64), &e2)?;
        op = d.compose(&op, order)?;
    }
    Ok(op)
}

/// `D^2 F + a E4 F` at weight `k`, as an operator in `q`.
pub fn rank2_mlde<S: Scalar>(a: &S, k: i64, cat: &ClassicalCatalog<S>, order: usize) -> Result<FuchsianOperator<S>> {
    let d2 = iterated_derivative(k, 2, Nome::Q, cat, order)?;
    let e4 = FuchsianOperator::multiplication(&cat.e4(Nome::Q)?.scale(a), order)?;
    d2.add(&e4)
}

/// `D^4 F + a E4 D^2 F + b E6 D F + c E4^2 F` at weight `k`, as an operator
/// in `q`.
pub fn cyclic_mlde<S: Scalar>(co: &OdeCoefficients<S>, k: i64, cat: &ClassicalCatalog<S>, order: usize) -> Result<FuchsianOperator<S>> {
    let e4 = cat.e4(Nome::Q)?.truncate(order);
    let e6 = cat.e6(Nome::Q)?.truncate(order);
    let d1 = iterated_derivative(k, 1, Nome::Q, cat, order)?;
    let d2 = iterated_derivative(k, 2, Nome::Q, cat, order)?;
    let d4 = iterated_derivative(k, 4, Nome::Q, cat, order)?;
    let one = FuchsianOperator::new(vec![ThetaPoly::constant(S::one())], Nome::Q);
    d4.add(&d2.left_mul_series(&e4.scale(&co.a), order)?)?
        .add(&d1.left_mul_series(&e6.scale(&co.b), order)?)?
        .add(&one.left_mul_series(&e4.mul(&e4)?.scale(&co.c), order)?)
}

/// `θ_q X = X A(q)` for `X = (F, DF, G, H)` with
/// `D X = X M(E4)` and `D` taken at weights `(k, k+2, k+2, k+4)`; returns
/// the coefficient matrices `A_m`.
pub fn noncyclic_modular_system<S: Scalar>(co: &OdeCoefficients<S>, k: i64, cat: &ClassicalCatalog<S>, order: usize) -> Result<Vec<Mat<S>>> {
    let e2 = cat.e2(Nome::Q)?;
    let e4 = cat.e4(Nome::Q)?;
    let weights = [k, k + 2, k + 2, k + 4];
    let n = order.min(e2.order()).min(e4.order());
    Ok((0..=n)
        .map(|m| {
            let e4m = e4.coeff(m).clone();
            let e2m = e2.coeff(m).clone();
            let z = S::zero;
            let mut a = vec![
                vec![z(), co.a.clone() * &e4m, e4m.clone(), z()],
                vec![if m == 0 { S::one() } else { z() }, z(), z(), co.b.clone() * &e4m],
                vec![z(), z(), z(), co.c.clone() * &e4m],
                vec![z(), if m == 0 { S::one() } else { z() }, z(), z()],
            ];
            for (i, w) in weights.iter().enumerate() {
                a[i][i] += e2m.clone() * S::ratio(*w, 12);
            }
            a
        })
        .collect())
}

/// `c0^r` with the principal branch, where `x(q) = c0 q^μ (1 + ...)`:
/// multiplies a `q`-route solution with unit lead so that it agrees with
/// the composed `K`- or `Z`-solution.
pub fn hauptmodul_normalization<S: Scalar>(x_of_q: &PuiseuxSeries<S>, r: &S) -> Result<S> {
    let (_, c0, _) = x_of_q.factor_hauptmodul()?;
    Ok(c0.powc(r))
}
