//! Representation parameters, irreducibility criteria and the exponent
//! functors for tensor products, symmetric cubes and induction.
//!
//! Representations are stored by their normal-form parameters; explicit
//! matrices are rebuilt only for validation.

use crate::error::{Error, Result};
use crate::linalg::{self, Mat};
use crate::scalar::{near_integer, Scalar};
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Tolerance for eigenvalue coincidences and root-of-unity checks.
pub const REP_TOL: f64 = 1e-9;

fn cis(turns: f64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * turns)
}

fn xi_pow(k: i64) -> Complex64 {
    cis(k.rem_euclid(6) as f64 / 6.0)
}

fn zeta_pow(k: i64) -> Complex64 {
    cis(k.rem_euclid(3) as f64 / 3.0)
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() < REP_TOL
}

/// The `k` with `z = e^{2 pi i k/n}`, if any.
pub fn root_of_unity_index(z: Complex64, n: i64) -> Option<i64> {
    (0..n).find(|&k| close(z, cis(k as f64 / n as f64)))
}

fn pairwise_distinct(v: &[Complex64]) -> bool {
    v.iter().enumerate().all(|(i, a)| v[i + 1..].iter().all(|b| !close(*a, *b)))
}

/// Rank-2 normal form: `ρ(T) = [[x, x], [0, y]]` with `xy = ξ^a`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Rank2Rep {
    pub x: Complex64,
    pub y: Complex64,
    /// `xy = e^{2 pi i a/6}`; kept mod 12 so that the Jordan case can tell
    /// `α⊗χ^a` from `α⊗χ^{a+6}`.
    pub a: u8,
    pub jordan: bool,
}

impl Rank2Rep {
    pub fn new(x: Complex64, y: Complex64, a: u8, jordan: bool) -> Result<Self> {
        let rep = Rank2Rep { x, y, a: a % 12, jordan };
        rep.validate()?;
        Ok(rep)
    }

    pub fn validate(&self) -> Result<()> {
        if !close(self.x * self.y, xi_pow(self.a as i64)) {
            return Err(Error::InconsistentRep(format!("xy = {} is not e^(2 pi i {}/6)", self.x * self.y, self.a)));
        }
        if self.jordan && !close(self.x, self.y) {
            return Err(Error::InconsistentRep("a Jordan block needs x = y".into()));
        }
        Ok(())
    }

    /// The representation with `ρ(T) = e^{2 pi i L}` for diagonal `L`.
    pub fn from_exponents(r1: Complex64, r2: Complex64) -> Result<Self> {
        let six_trace = near_integer((r1 + r2) * 6.0, REP_TOL)
            .ok_or_else(|| Error::InconsistentRep(format!("6 Tr(L) = {} is not an integer", (r1 + r2) * 6.0)))?;
        let x = (Complex64::i() * 2.0 * PI * r1).exp();
        let y = (Complex64::i() * 2.0 * PI * r2).exp();
        Rank2Rep::new(x, y, six_trace.rem_euclid(12) as u8, false)
    }

    pub fn is_t_regular(&self) -> bool {
        !close(self.x, self.y)
    }

    /// `ρ(-I) = (-1)^e`.
    pub fn parity(&self) -> u8 {
        (self.a + 1) % 2
    }

    pub fn t_eigenvalues(&self) -> [Complex64; 2] {
        [self.x, self.y]
    }

    pub fn is_irreducible(&self) -> bool {
        self.jordan || (self.x * self.x - self.x * self.y + self.y * self.y).norm() > REP_TOL
    }

    /// `(ρ(T), ρ(S), ρ(R))` of the normal form.
    pub fn matrices(&self) -> [DMatrix<Complex64>; 3] {
        let (x, y) = (self.x, self.y);
        let a = self.a as i64;
        let zero = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        let t = DMatrix::from_row_slice(2, 2, &[x, x, zero, y]);
        let s = DMatrix::from_row_slice(2, 2, &[zero, -x, y, zero]) * zeta_pow(2 * a);
        let r = DMatrix::from_row_slice(2, 2, &[zero, -one, one, one]) * xi_pow(-a);
        [t, s, r]
    }
}

/// Rank-4 normal form with `ρ(T)` eigenvalues `x, y, z, w`,
/// `xyzw = ζ^d` and `ρ(-I) = (-1)^e`, `e ≢ d (mod 2)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Rank4Rep {
    pub x: Complex64,
    pub y: Complex64,
    pub z: Complex64,
    pub w: Complex64,
    pub d: u8,
    pub e: u8,
}

/// The unique `d` in 0..6 with `xyzw = e^{2 pi i d/3}` and `d ≢ e (mod 2)`.
pub fn d_invariant(eigenvalues: [Complex64; 4], e: u8) -> Result<u8> {
    let det = eigenvalues.iter().product::<Complex64>();
    let m = root_of_unity_index(det, 3)
        .ok_or_else(|| Error::InconsistentRep(format!("det ρ(T) = {det} is not a cube root of unity")))?;
    Ok((0..6u8).find(|&d| d as i64 % 3 == m && d % 2 != e % 2).expect("CRT always has a solution"))
}

impl Rank4Rep {
    pub fn new(eigenvalues: [Complex64; 4], d: u8, e: u8) -> Result<Self> {
        let rep = Rank4Rep { x: eigenvalues[0], y: eigenvalues[1], z: eigenvalues[2], w: eigenvalues[3], d: d % 6, e: e % 2 };
        rep.validate()?;
        Ok(rep)
    }

    /// Derives `d` from the eigenvalues and the parity.
    pub fn from_eigenvalues(eigenvalues: [Complex64; 4], e: u8) -> Result<Self> {
        Rank4Rep::new(eigenvalues, d_invariant(eigenvalues, e)?, e)
    }

    pub fn validate(&self) -> Result<()> {
        let expected = d_invariant(self.t_eigenvalues(), self.e)?;
        if expected != self.d {
            return Err(Error::InconsistentRep(format!(
                "d = {} does not match xyzw = zeta^{} with parity e = {} (expected d = {expected})",
                self.d,
                expected % 3,
                self.e
            )));
        }
        Ok(())
    }

    pub fn t_eigenvalues(&self) -> [Complex64; 4] {
        [self.x, self.y, self.z, self.w]
    }

    pub fn is_t_regular(&self) -> bool {
        pairwise_distinct(&self.t_eigenvalues())
    }

    /// `D = ξ^d / (xw)`, the square root of `yz/(xw)` selected by `d`.
    pub fn d_scalar(&self) -> Complex64 {
        xi_pow(self.d as i64) / (self.x * self.w)
    }

    /// `(ρ(T), ρ(B), ρ(S), ρ(R))` with `S = B⁻¹T⁻¹B⁻¹` and `R = ST`.
    pub fn matrices(&self) -> [DMatrix<Complex64>; 4] {
        let (x, y, z, w) = (self.x, self.y, self.z, self.w);
        let dd = self.d_scalar();
        let one = Complex64::new(1.0, 0.0);
        let o = Complex64::new(0.0, 0.0);
        let s1 = one + one / dd + one / (dd * dd);
        let t = DMatrix::from_row_slice(4, 4, &[x, s1 * y, s1 * z, w, o, y, (one + one / dd) * z, w, o, o, z, w, o, o, o, w]);
        let b = DMatrix::from_row_slice(
            4,
            4,
            &[
                w,
                o,
                o,
                o,
                -z,
                z,
                o,
                o,
                dd * y,
                -(dd + one) * y,
                y,
                o,
                -dd.powi(3) * x,
                (dd.powi(3) + dd * dd + dd) * x,
                -(dd * dd + dd + one) * x,
                x,
            ],
        );
        let b_inv = b.clone().try_inverse().expect("normal-form B is invertible");
        let t_inv = t.clone().try_inverse().expect("normal-form T is invertible");
        let s = &b_inv * t_inv * &b_inv;
        let r = &s * &t;
        [t, b, s, r]
    }

    /// Residuals of `Tr ρ(S) = 0`, `Tr ρ(R) = -ξ^{-d}`, `Tr ρ(R²) = ζ^{-d}`
    /// and `ρ(S)² = (-1)^e`.
    pub fn normal_form_defects(&self) -> [f64; 4] {
        let [_, _, s, r] = self.matrices();
        let d = self.d as i64;
        let sign = if self.e == 0 { 1.0 } else { -1.0 };
        let s2 = &s * &s - DMatrix::<Complex64>::identity(4, 4) * Complex64::new(sign, 0.0);
        [
            s.trace().norm(),
            (r.trace() + xi_pow(-d)).norm(),
            ((&r * &r).trace() - zeta_pow(-d)).norm(),
            s2.iter().map(|v| v.norm()).fold(0.0, f64::max),
        ]
    }
}

/// Rank-2 irreducible of the index-two subgroup `G`:
/// `ρ(R0) = (-1)^e diag(ζ1, ζ2)`,
/// `ρ(R1) = (-1)^e [[a, 1], [-(a²+ζ3 a+ζ3²), -ζ3-a]]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GRank2Rep {
    pub e: u8,
    /// `ζ_j = e^{2 pi i k_j / 3}` is stored by its index `k_j` mod 3.
    pub zeta: [u8; 3],
    pub a: Complex64,
}

impl GRank2Rep {
    pub fn new(e: u8, zeta: [u8; 3], a: Complex64) -> Result<Self> {
        let rep = GRank2Rep { e: e % 2, zeta: zeta.map(|k| k % 3), a };
        rep.validate()?;
        Ok(rep)
    }

    pub fn zetas(&self) -> [Complex64; 3] {
        self.zeta.map(|k| zeta_pow(k as i64))
    }

    pub fn validate(&self) -> Result<()> {
        let [_, _, z3] = self.zetas();
        if self.zeta[0] == self.zeta[1] {
            return Err(Error::InconsistentRep("zeta1 must differ from zeta2".into()));
        }
        if (self.a * self.a + z3 * self.a + z3 * z3).norm() < REP_TOL {
            return Err(Error::InconsistentRep("a^2 + zeta3 a + zeta3^2 vanishes".into()));
        }
        Ok(())
    }

    fn sign(&self) -> f64 {
        if self.e == 0 {
            1.0
        } else {
            -1.0
        }
    }

    /// True when `ζ1 + ζ2 + ζ3 = 0`, i.e. `ρ` extends to `SL2(Z)`.
    pub fn restricts_from_gamma(&self) -> bool {
        let [z1, z2, z3] = self.zetas();
        (z1 + z2 + z3).norm() < REP_TOL
    }

    pub fn induction_is_irreducible(&self) -> bool {
        let [z1, z2, z3] = self.zetas();
        if self.restricts_from_gamma() {
            return false;
        }
        let excluded = (z1 * z2 + z2 * z3 + z3 * z3) / (z1 - z2) * self.sign();
        !close(self.a, excluded)
    }

    /// `ρ⊗β^j`: `(ζ1 ζ^j, ζ2 ζ^j, ζ3 ζ^{2j}, a ζ^{2j})`.
    pub fn twist(&self, j: u8) -> GRank2Rep {
        let j = j % 3;
        GRank2Rep {
            e: self.e,
            zeta: [(self.zeta[0] + j) % 3, (self.zeta[1] + j) % 3, (self.zeta[2] + 2 * j) % 3],
            a: self.a * zeta_pow(2 * j as i64),
        }
    }

    /// `(ρ(R0), ρ(R1))`.
    pub fn matrices(&self) -> [DMatrix<Complex64>; 2] {
        let [z1, z2, z3] = self.zetas();
        let s = Complex64::new(self.sign(), 0.0);
        let o = Complex64::new(0.0, 0.0);
        let a = self.a;
        let r0 = DMatrix::from_row_slice(2, 2, &[z1, o, o, z2]) * s;
        let r1 = DMatrix::from_row_slice(2, 2, &[a, Complex64::new(1.0, 0.0), -(a * a + z3 * a + z3 * z3), -z3 - a]) * s;
        [r0, r1]
    }

    /// `ρ(T²) = -ρ(R1)ρ(R0)`, from `R1 R0 = T S² T = -T²`.
    pub fn t_squared(&self) -> DMatrix<Complex64> {
        let [r0, r1] = self.matrices();
        -(r1 * r0)
    }

    pub fn t_squared_eigenvalues(&self) -> [Complex64; 2] {
        let m = self.t_squared();
        let tr = m[(0, 0)] + m[(1, 1)];
        let det = m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)];
        let disc = (tr * tr - det * 4.0).sqrt();
        [(tr + disc) / 2.0, (tr - disc) / 2.0]
    }

    /// The representation with the given `ζ`s and parity whose `ρ(T²)` has
    /// eigenvalues `λ1, λ2`. Requires `λ1 λ2 = ζ3` (the determinant of
    /// `ρ(T²)` in the normal form).
    pub fn from_t_squared_spectrum(e: u8, zeta: [u8; 3], lambda: [Complex64; 2]) -> Result<Self> {
        let z = zeta.map(|k| zeta_pow(k as i64));
        if !close(lambda[0] * lambda[1], z[2]) {
            return Err(Error::InconsistentRep(format!("det ρ(T²) = {} must equal zeta3 = {}", lambda[0] * lambda[1], z[2])));
        }
        if zeta[0] % 3 == zeta[1] % 3 {
            return Err(Error::InconsistentRep("zeta1 must differ from zeta2".into()));
        }
        // Tr ρ(T²) = (-1)^e (a (ζ1 - ζ2) - ζ3 ζ2)
        let sign = if e.is_multiple_of(2) { 1.0 } else { -1.0 };
        let a = ((lambda[0] + lambda[1]) * sign + z[2] * z[1]) / (z[0] - z[1]);
        GRank2Rep::new(e, zeta, a)
    }
}

/// The cube roots of unity in the twist orbit of `ρ` that make
/// `ρ⊗β^j` restrict from `SL2(Z)`.
pub fn restricting_twists(rep: &GRank2Rep) -> Vec<u8> {
    (0..3).filter(|&j| rep.twist(j).restricts_from_gamma()).collect()
}

/// Checks the normalization the induction construction needs: `ρ` itself
/// restricts from `SL2(Z)`, and both nontrivial twists induce irreducibly.
pub fn check_induction_orbit(rep: &GRank2Rep) -> Result<()> {
    let twists = restricting_twists(rep);
    if twists != [0] {
        return Err(Error::NormalizationError(format!(
            "exactly the untwisted member must restrict from SL2(Z); restricting twists: {twists:?}"
        )));
    }
    for j in 1..=2 {
        if !rep.twist(j).induction_is_irreducible() {
            return Err(Error::NotIrreducible("induction"));
        }
    }
    Ok(())
}

/// True iff `α⊗β` is irreducible.
pub fn tensor_is_irreducible(alpha: &Rank2Rep, beta: &Rank2Rep) -> bool {
    if !alpha.is_irreducible() || !beta.is_irreducible() {
        return false;
    }
    match (alpha.is_t_regular(), beta.is_t_regular()) {
        (true, false) | (false, true) => true,
        (true, true) => {
            let products: Vec<Complex64> =
                alpha.t_eigenvalues().iter().flat_map(|x| beta.t_eigenvalues().map(|y| x * y)).collect();
            pairwise_distinct(&products)
        }
        (false, false) => false,
    }
}

/// True iff `Sym³α` is irreducible.
pub fn sym3_is_irreducible(alpha: &Rank2Rep) -> bool {
    if !alpha.is_irreducible() {
        return false;
    }
    if alpha.jordan {
        return true;
    }
    let (x, y) = (alpha.x, alpha.y);
    alpha.is_t_regular() && pairwise_distinct(&[x * x * x, x * x * y, x * y * y, y * y * y])
}

/// `Sym³α` as a rank-4 normal form.
pub fn sym3_rep(alpha: &Rank2Rep) -> Result<Rank4Rep> {
    let (x, y) = (alpha.x, alpha.y);
    Rank4Rep::from_eigenvalues([x * x * x, x * x * y, x * y * y, y * y * y], alpha.parity())
}

/// `α⊗β` as a rank-4 normal form.
pub fn tensor_rep(alpha: &Rank2Rep, beta: &Rank2Rep) -> Result<Rank4Rep> {
    let e = (alpha.parity() + beta.parity()) % 2;
    Rank4Rep::from_eigenvalues([alpha.x * beta.x, alpha.x * beta.y, alpha.y * beta.x, alpha.y * beta.y], e)
}

/// `Ind ρ` as a rank-4 normal form, from the spectrum of `ρ(T²)`.
pub fn induced_rep(rep: &GRank2Rep) -> Result<Rank4Rep> {
    let [l1, l2] = rep.t_squared_eigenvalues();
    let (s1, s2) = (l1.sqrt(), l2.sqrt());
    Rank4Rep::from_eigenvalues([s1, -s1, s2, -s2], rep.e)
}

/// Whether exponents describe `T` (group Γ) or `T²` (group G).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Group {
    Gamma,
    G,
}

/// A choice of exponents: the eigenvalues of `L` (and optionally `L`).
#[derive(Clone, Debug)]
pub struct ExponentData<S> {
    pub eigenvalues: Vec<S>,
    pub matrix: Option<Mat<S>>,
    pub group: Group,
}

impl<S: Scalar> ExponentData<S> {
    pub fn diagonal(eigenvalues: Vec<S>, group: Group) -> Self {
        ExponentData { eigenvalues, matrix: None, group }
    }

    pub fn from_f64(eigenvalues: &[f64], group: Group) -> Self {
        Self::diagonal(eigenvalues.iter().map(|&x| S::from_f64(x)).collect(), group)
    }

    /// Exponent data with an explicit matrix and the stated eigenvalues;
    /// the eigenvalue multiset is checked against the characteristic
    /// polynomial.
    pub fn with_matrix(eigenvalues: Vec<S>, matrix: Mat<S>, group: Group) -> Result<Self> {
        let cp = linalg::char_poly(&matrix);
        let scale: f64 = cp.iter().map(S::abs).fold(1.0, f64::max);
        for e in &eigenvalues {
            let mut v = S::zero();
            for c in cp.iter().rev() {
                v = v * e + c;
            }
            if v.abs() > 1e-7 * scale {
                return Err(Error::InconsistentRep(format!("{} is not an eigenvalue of L", e.to_c64())));
            }
        }
        if eigenvalues.len() != matrix.len() {
            return Err(Error::WrongRank { expected: matrix.len(), found: eigenvalues.len() });
        }
        Ok(ExponentData { eigenvalues, matrix: Some(matrix), group })
    }

    pub fn rank(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn trace(&self) -> S {
        let mut t = S::zero();
        for e in &self.eigenvalues {
            t += e;
        }
        t
    }

    pub fn eigenvalues_c64(&self) -> Vec<Complex64> {
        self.eigenvalues.iter().map(S::to_c64).collect()
    }

    /// Every `e^{2 pi i e_j}` must be one of `spectrum`.
    pub fn check_spectrum(&self, spectrum: &[Complex64]) -> Result<()> {
        for e in self.eigenvalues_c64() {
            let t = cis(e.re) * (-2.0 * PI * e.im).exp();
            if !spectrum.iter().any(|s| (s - t).norm() < 1e-8) {
                return Err(Error::InconsistentRep(format!("e^(2 pi i {e}) is not an eigenvalue of the T-matrix")));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> ExponentJson {
        let pair = |z: &S| {
            let c = z.to_c64();
            [c.re, c.im]
        };
        ExponentJson {
            eigenvalues: self.eigenvalues.iter().map(pair).collect(),
            matrix: self.matrix.as_ref().map(|m| m.iter().map(|r| r.iter().map(pair).collect()).collect()),
            group: self.group,
        }
    }

    pub fn from_json(j: &ExponentJson) -> Result<Self> {
        let conv = |p: &[f64; 2]| S::from_c64(Complex64::new(p[0], p[1]));
        let eigenvalues = j.eigenvalues.iter().map(conv).collect();
        match &j.matrix {
            Some(m) => Self::with_matrix(eigenvalues, m.iter().map(|r| r.iter().map(conv).collect()).collect(), j.group),
            None => Ok(Self::diagonal(eigenvalues, j.group)),
        }
    }
}

/// Serialized exponent data.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExponentJson {
    pub eigenvalues: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<[f64; 2]>>>,
    pub group: Group,
}

/// `L1 ⊗ I + I ⊗ L2`.
pub fn tensor_exponents<S: Scalar>(l1: &ExponentData<S>, l2: &ExponentData<S>) -> Result<ExponentData<S>> {
    if l1.group != l2.group {
        return Err(Error::GroupMismatch);
    }
    let eigenvalues = l1.eigenvalues.iter().flat_map(|a| l2.eigenvalues.iter().map(move |b| a.clone() + b)).collect();
    let matrix = match (&l1.matrix, &l2.matrix) {
        (Some(a), Some(b)) => Some(linalg::add(&linalg::kron(a, &linalg::identity(b.len())), &linalg::kron(&linalg::identity(a.len()), b))),
        _ => None,
    };
    Ok(ExponentData { eigenvalues, matrix, group: l1.group })
}

/// Symmetric-cube exponents of a rank-2 `L`.
pub fn sym3_exponents<S: Scalar>(l: &ExponentData<S>) -> Result<ExponentData<S>> {
    if l.rank() != 2 {
        return Err(Error::WrongRank { expected: 2, found: l.rank() });
    }
    let (r, s) = (&l.eigenvalues[0], &l.eigenvalues[1]);
    let k = |n: i64| S::from_i64(n);
    let eigenvalues = vec![
        r.clone() * k(3),
        r.clone() * k(2) + s,
        r.clone() + &(s.clone() * k(2)),
        s.clone() * k(3),
    ];
    let matrix = l.matrix.as_ref().map(|m| {
        let (e1, e2, e3, e4) = (&m[0][0], &m[0][1], &m[1][0], &m[1][1]);
        let z = S::zero;
        vec![
            vec![e1.clone() * k(3), e2.clone(), z(), z()],
            vec![e3.clone() * k(3), e1.clone() * k(2) + e4, e2.clone() * k(2), z()],
            vec![z(), e3.clone() * k(2), e1.clone() + &(e4.clone() * k(2)), e2.clone() * k(3)],
            vec![z(), z(), e3.clone(), e4.clone() * k(3)],
        ]
    });
    Ok(ExponentData { eigenvalues, matrix, group: l.group })
}

/// `Ind L`: eigenvalues `{e_j/2} ∪ {(e_j+1)/2}`; with a matrix,
/// `½ M⁻¹ diag(L, L+1) M` for `M = [[1, e^{πiL}], [1, -e^{πiL}]]`.
pub fn induced_exponents<S: Scalar>(l: &ExponentData<S>) -> Result<ExponentData<S>> {
    if l.group != Group::G {
        return Err(Error::GroupMismatch);
    }
    let half = S::ratio(1, 2);
    let mut eigenvalues: Vec<S> = l.eigenvalues.iter().map(|e| e.clone() * &half).collect();
    eigenvalues.extend(l.eigenvalues.iter().map(|e| (e.clone() + S::one()) * &half));
    let matrix = l.matrix.as_ref().map(|m| {
        let n = m.len();
        let exp_m = linalg::expm(&linalg::scale(m, &(S::pi() * S::i())));
        let exp_inv = linalg::expm(&linalg::scale(m, &(-(S::pi() * S::i()))));
        let id = linalg::identity::<S>(n);
        // Ind L = ¼ [[2L+1, -E], [-E⁻¹, 2L+1]] with E = e^{πiL}.
        let two_l_plus_one = linalg::add(&linalg::scale(m, &S::from_i64(2)), &id);
        let quarter = S::ratio(1, 4);
        let mut out = linalg::zeros::<S>(2 * n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                out[i][j] = two_l_plus_one[i][j].clone() * &quarter;
                out[n + i][n + j] = two_l_plus_one[i][j].clone() * &quarter;
                out[i][n + j] = -(exp_m[i][j].clone() * &quarter);
                out[n + i][j] = -(exp_inv[i][j].clone() * &quarter);
            }
        }
        out
    });
    Ok(ExponentData { eigenvalues, matrix, group: Group::Gamma })
}

/// Serialized representation parameters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum RepSpec {
    #[serde(rename = "rank2")]
    Rank2 {
        x: [f64; 2],
        y: [f64; 2],
        a: u8,
        #[serde(default)]
        jordan: bool,
    },
    #[serde(rename = "rank4")]
    Rank4 {
        x: [f64; 2],
        y: [f64; 2],
        z: [f64; 2],
        w: [f64; 2],
        #[serde(default, skip_serializing_if = "Option::is_none")]
        d: Option<u8>,
        e: u8,
    },
    #[serde(rename = "g-rank2")]
    GRank2 { e: u8, zeta: [u8; 3], a: [f64; 2] },
}

fn c(p: [f64; 2]) -> Complex64 {
    Complex64::new(p[0], p[1])
}

impl RepSpec {
    pub fn rank2(&self) -> Result<Rank2Rep> {
        match self {
            RepSpec::Rank2 { x, y, a, jordan } => Rank2Rep::new(c(*x), c(*y), *a, *jordan),
            _ => Err(Error::Validation("expected a rank2 representation".into())),
        }
    }

    pub fn rank4(&self) -> Result<Rank4Rep> {
        match self {
            RepSpec::Rank4 { x, y, z, w, d, e } => {
                let eig = [c(*x), c(*y), c(*z), c(*w)];
                match d {
                    Some(d) => Rank4Rep::new(eig, *d, *e),
                    None => Rank4Rep::from_eigenvalues(eig, *e),
                }
            }
            _ => Err(Error::Validation("expected a rank4 representation".into())),
        }
    }

    pub fn g_rank2(&self) -> Result<GRank2Rep> {
        match self {
            RepSpec::GRank2 { e, zeta, a } => GRank2Rep::new(*e, *zeta, c(*a)),
            _ => Err(Error::Validation("expected a g-rank2 representation".into())),
        }
    }

    pub fn from_rank2(r: &Rank2Rep) -> Self {
        RepSpec::Rank2 { x: [r.x.re, r.x.im], y: [r.y.re, r.y.im], a: r.a, jordan: r.jordan }
    }

    pub fn from_rank4(r: &Rank4Rep) -> Self {
        let p = |z: Complex64| [z.re, z.im];
        RepSpec::Rank4 { x: p(r.x), y: p(r.y), z: p(r.z), w: p(r.w), d: Some(r.d), e: r.e }
    }

    pub fn from_g_rank2(r: &GRank2Rep) -> Self {
        RepSpec::GRank2 { e: r.e, zeta: r.zeta, a: [r.a.re, r.a.im] }
    }
}
