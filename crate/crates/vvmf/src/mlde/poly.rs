//! Polynomials in the Euler operator `θ`.

use crate::scalar::Scalar;
use num_complex::Complex64;

/// `Σ c_m θ^m`, ascending coefficients.
#[derive(Clone, Debug)]
pub struct ThetaPoly<S> {
    pub coeffs: Vec<S>,
}

impl<S: Scalar> ThetaPoly<S> {
    pub fn new(coeffs: Vec<S>) -> Self {
        let mut p = ThetaPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_f64(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| S::from_f64(c)).collect())
    }

    pub fn zero() -> Self {
        ThetaPoly { coeffs: vec![S::zero()] }
    }

    pub fn constant(c: S) -> Self {
        ThetaPoly { coeffs: vec![c] }
    }

    /// `θ - r`.
    pub fn linear_root(r: S) -> Self {
        ThetaPoly { coeffs: vec![-r, S::one()] }
    }

    /// `Π (θ - r_j)`.
    pub fn from_roots(roots: &[S]) -> Self {
        roots.iter().fold(Self::constant(S::one()), |acc, r| acc.mul(&Self::linear_root(r.clone())))
    }

    fn trim(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().is_some_and(S::is_zero) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.coeffs.push(S::zero());
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(S::is_zero)
    }

    pub fn coeff(&self, m: usize) -> S {
        self.coeffs.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn eval(&self, x: &S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sum of coefficient moduli weighted by `max(1, |x|)^m`, the natural
    /// scale against which `eval(x)` is compared to zero.
    pub fn eval_scale(&self, x: &S) -> f64 {
        let r = x.abs().max(1.0);
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.abs())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|m| self.coeff(m) + other.coeff(m)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![S::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a.clone() * b;
            }
        }
        Self::new(out)
    }

    /// `P(θ + s)`.
    pub fn shift(&self, s: &S) -> Self {
        let mut out = Self::zero();
        let step = ThetaPoly { coeffs: vec![s.clone(), S::one()] };
        for c in self.coeffs.iter().rev() {
            out = out.mul(&step).add(&Self::constant(c.clone()));
        }
        out
    }

    /// `P(θ/μ)`.
    pub fn rescale_argument(&self, mu: &S) -> Self {
        let inv = S::one() / mu;
        let mut p = S::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.clone() * &p);
            p *= &inv;
        }
        Self::new(out)
    }

    /// Complex roots (double precision) by Durand-Kerner iteration followed
    /// by Newton polishing.
    pub fn roots(&self) -> Vec<Complex64> {
        let c: Vec<Complex64> = self.coeffs.iter().map(S::to_c64).collect();
        polynomial_roots(&c)
    }
}

/// Roots of `Σ c_m x^m` (ascending coefficients).
pub fn polynomial_roots(c: &[Complex64]) -> Vec<Complex64> {
    let mut c = c.to_vec();
    while c.len() > 1 && c.last().is_some_and(|z| z.norm() == 0.0) {
        c.pop();
    }
    let n = c.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let lead = c[n];
    let monic: Vec<Complex64> = c.iter().map(|z| z / lead).collect();
    let eval = |x: Complex64| monic.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, a| acc * x + a);
    let deriv = |x: Complex64| {
        monic.iter().enumerate().skip(1).rev().fold(Complex64::new(0.0, 0.0), |acc, (m, a)| acc * x + a * m as f64)
    };
    let radius = 1.0 + monic[..n].iter().map(|z| z.norm()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32) * radius.min(2.0)).collect();
    for _ in 0..500 {
        let mut delta: f64 = 0.0;
        for i in 0..n {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            let step = eval(z[i]) / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let d = deriv(*zi);
            if d.norm() == 0.0 {
                break;
            }
            let step = eval(*zi) / d;
            if !step.is_finite() {
                break;
            }
            *zi -= step;
        }
    }
    z
}

/// Greedy matching distance between two root multisets.
pub fn multiset_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let mut used = vec![false; b.len()];
    let mut worst: f64 = 0.0;
    for x in a {
        let (j, d) = b
            .iter()
            .enumerate()
            .filter(|(j, _)| !used[*j])
            .map(|(j, y)| (j, (x - y).norm()))
            .min_by(|p, q| p.1.total_cmp(&q.1))
            .expect("equal lengths");
        used[j] = true;
        worst = worst.max(d);
    }
    worst
}
