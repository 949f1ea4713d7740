//! Linear differential operators `Σ x^i P_i(θ)` and their Frobenius
//! solutions at `x = 0`.

use super::poly::ThetaPoly;
use crate::error::{Error, Result};
use crate::scalar::{near_integer, Scalar};
use crate::series::{Nome, PuiseuxSeries, GAP_TOL};
use num_complex::Complex64;

/// Relative size below which an indicial value counts as zero.
pub const INDICIAL_TOL: f64 = 1e-9;

/// `Σ_i x^i P_i(θ)` with `θ = x d/dx`; the powers of `x` stand to the left.
#[derive(Clone, Debug)]
pub struct FuchsianOperator<S> {
    pub polys: Vec<ThetaPoly<S>>,
    pub nome: Nome,
}

impl<S: Scalar> FuchsianOperator<S> {
    pub fn new(polys: Vec<ThetaPoly<S>>, nome: Nome) -> Self {
        assert!(!polys.is_empty(), "an operator needs at least P_0");
        FuchsianOperator { polys, nome }
    }

    /// Order in `θ` at `x = 0`.
    pub fn order(&self) -> usize {
        self.polys[0].degree()
    }

    /// Highest power of `x` present.
    pub fn x_degree(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn indicial(&self) -> &ThetaPoly<S> {
        &self.polys[0]
    }

    pub fn indicial_roots(&self) -> Vec<Complex64> {
        self.polys[0].roots()
    }

    fn poly(&self, i: usize) -> Option<&ThetaPoly<S>> {
        self.polys.get(i)
    }

    /// `L y`, truncated at the order of `y`.
    pub fn apply(&self, y: &PuiseuxSeries<S>) -> Result<PuiseuxSeries<S>> {
        Ok(self.apply_with_scale(y)?.0)
    }

    /// `L y` together with the largest single term `x^i P_i(θ) y` entering
    /// any coefficient.
    fn apply_with_scale(&self, y: &PuiseuxSeries<S>) -> Result<(PuiseuxSeries<S>, f64)> {
        if y.nome() != self.nome {
            return Err(Error::NomeMismatch { left: self.nome, right: y.nome() });
        }
        let lam = y.lead();
        let mut scale: f64 = 0.0;
        let coeffs = (0..=y.order())
            .map(|n| {
                let mut acc = S::zero();
                for i in 0..=n.min(self.x_degree()) {
                    let e = lam.clone() + S::from_i64((n - i) as i64);
                    let t = self.polys[i].eval(&e) * y.coeff(n - i);
                    scale = scale.max(t.abs());
                    acc += t;
                }
                acc
            })
            .collect();
        Ok((PuiseuxSeries::new(self.nome, lam.clone(), coeffs), scale))
    }

    /// Largest coefficient of `L y` relative to the largest term summed into
    /// it.
    pub fn residual(&self, y: &PuiseuxSeries<S>) -> Result<f64> {
        let (ly, scale) = self.apply_with_scale(y)?;
        Ok(if scale == 0.0 { ly.max_abs() } else { ly.max_abs() / scale })
    }

    /// Checks that `r` is a root of the indicial polynomial.
    pub fn check_exponent(&self, r: &S) -> Result<()> {
        let p0 = self.indicial();
        if p0.eval(r).abs() > INDICIAL_TOL * p0.eval_scale(r) {
            return Err(Error::NotAnExponent(format!("{}", r.to_c64())));
        }
        Ok(())
    }

    /// `x^r Σ c_n x^n` with `c_0 = 1` and
    /// `c_n P_0(r+n) = -Σ_{i≥1} P_i(r+n-i) c_{n-i}`.
    pub fn frobenius_solve(&self, r: &S, order: usize) -> Result<PuiseuxSeries<S>> {
        self.check_exponent(r)?;
        let p0 = self.indicial();
        let mut c: Vec<S> = Vec::with_capacity(order + 1);
        c.push(S::one());
        for n in 1..=order {
            let e = r.clone() + S::from_i64(n as i64);
            let d = p0.eval(&e);
            if d.abs() <= INDICIAL_TOL * p0.eval_scale(&e) {
                return Err(Error::Resonance { shift: n });
            }
            let mut acc = S::zero();
            for i in 1..=n.min(self.x_degree()) {
                let e = r.clone() + S::from_i64((n - i) as i64);
                acc += self.polys[i].eval(&e) * &c[n - i];
            }
            c.push(-(acc / d));
        }
        Ok(PuiseuxSeries::new(self.nome, r.clone(), c))
    }

    /// Indicial roots that differ from another root by a positive integer
    /// (those whose Frobenius series cannot be formed).
    pub fn resonant_roots(&self) -> Vec<Complex64> {
        let roots = self.indicial_roots();
        roots
            .iter()
            .filter(|r| roots.iter().any(|s| near_integer(*s - **r, GAP_TOL).is_some_and(|n| n >= 1)))
            .copied()
            .collect()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.nome != other.nome {
            return Err(Error::NomeMismatch { left: self.nome, right: other.nome });
        }
        let n = self.polys.len().max(other.polys.len());
        let zero = ThetaPoly::zero();
        let polys = (0..n)
            .map(|i| self.poly(i).unwrap_or(&zero).add(other.poly(i).unwrap_or(&zero)))
            .collect();
        Ok(Self::new(polys, self.nome))
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.polys.iter().map(|p| p.scale(c)).collect(), self.nome)
    }

    /// `s(x) ∘ L` for a series `s` with a non-negative integral leading
    /// exponent, keeping powers of `x` up to `max_power`.
    pub fn left_mul_series(&self, s: &PuiseuxSeries<S>, max_power: usize) -> Result<Self> {
        if s.nome() != self.nome {
            return Err(Error::NomeMismatch { left: self.nome, right: s.nome() });
        }
        let offset = near_integer(s.lead().to_c64(), GAP_TOL)
            .filter(|&m| m >= 0)
            .ok_or_else(|| Error::NonIntegralExponentGap { gap: format!("{}", s.lead().to_c64()) })? as usize;
        let mut polys = vec![ThetaPoly::zero(); max_power + 1];
        for (k, sk) in s.coeffs().iter().enumerate() {
            if sk.is_zero() {
                continue;
            }
            for (j, p) in self.polys.iter().enumerate() {
                let idx = offset + k + j;
                if idx <= max_power {
                    polys[idx] = polys[idx].add(&p.scale(sk));
                }
            }
        }
        Ok(Self::new(polys, self.nome))
    }

    /// `self ∘ other`, keeping powers of `x` up to `max_power`.
    pub fn compose(&self, other: &Self, max_power: usize) -> Result<Self> {
        if self.nome != other.nome {
            return Err(Error::NomeMismatch { left: self.nome, right: other.nome });
        }
        let mut polys = vec![ThetaPoly::zero(); max_power + 1];
        for (i, a) in self.polys.iter().enumerate() {
            for (j, b) in other.polys.iter().enumerate() {
                if i + j <= max_power && !a.is_zero() && !b.is_zero() {
                    // P_i(θ) x^j = x^j P_i(θ + j)
                    let term = a.shift(&S::from_i64(j as i64)).mul(b);
                    polys[i + j] = polys[i + j].add(&term);
                }
            }
        }
        Ok(Self::new(polys, self.nome))
    }

    /// The modular derivative `D_k = θ_q - (k/12) E2` as an operator in the
    /// nome of `e2` (`θ_q = θ_{q2}/2` in nome Q2).
    pub fn modular_derivative(k: &S, e2: &PuiseuxSeries<S>) -> Result<Self> {
        let theta_factor = match e2.nome() {
            Nome::Q => S::one(),
            Nome::Q2 => S::ratio(1, 2),
            other => return Err(Error::WrongNome { expected: "Q or Q2", found: other }),
        };
        let kk = k.clone() / S::from_i64(12);
        let polys = e2
            .coeffs()
            .iter()
            .enumerate()
            .map(|(n, c)| {
                let constant = -(c.clone() * &kk);
                if n == 0 {
                    ThetaPoly::new(vec![constant, theta_factor.clone()])
                } else {
                    ThetaPoly::constant(constant)
                }
            })
            .collect();
        Ok(Self::new(polys, e2.nome()))
    }

    /// The operator of multiplication by a series.
    pub fn multiplication(s: &PuiseuxSeries<S>, max_power: usize) -> Result<Self> {
        Self::new(vec![ThetaPoly::constant(S::one())], s.nome()).left_mul_series(s, max_power)
    }
}
