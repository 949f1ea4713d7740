//! Truncated Puiseux series `x^λ Σ a_n x^n` over a [`Scalar`] field.

use crate::error::{Error, Result};
use crate::scalar::{near_integer, Scalar};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Tolerance for deciding that two exponents differ by an integer.
pub const GAP_TOL: f64 = 1e-9;

/// The formal variable a series is expanded in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Nome {
    /// `q = e^{2 pi i tau}`
    Q,
    /// `q2 = e^{pi i tau}`
    Q2,
    /// `K = 1728 / j`
    K,
    /// The hauptmodul of the index-two subgroup.
    Z,
}

#[derive(Clone, Debug)]
pub struct PuiseuxSeries<S> {
    lead: S,
    coeffs: Vec<S>,
    nome: Nome,
}

/// Integer `n` with `b - a = n`, if there is one.
pub fn integral_gap<S: Scalar>(a: &S, b: &S) -> Option<i64> {
    near_integer((b.clone() - a).to_c64(), GAP_TOL)
}

impl<S: Scalar> PuiseuxSeries<S> {
    /// # Panics
    /// If `coeffs` is empty.
    pub fn new(nome: Nome, lead: S, coeffs: Vec<S>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least one coefficient");
        PuiseuxSeries { lead, coeffs, nome }
    }

    pub fn from_c64(nome: Nome, lead: Complex64, coeffs: &[Complex64]) -> Self {
        Self::new(nome, S::from_c64(lead), coeffs.iter().map(|&z| S::from_c64(z)).collect())
    }

    pub fn from_f64(nome: Nome, lead: f64, coeffs: &[f64]) -> Self {
        Self::new(nome, S::from_f64(lead), coeffs.iter().map(|&x| S::from_f64(x)).collect())
    }

    pub fn zero(nome: Nome, order: usize) -> Self {
        Self::new(nome, S::zero(), vec![S::zero(); order + 1])
    }

    /// The constant `c + O(x^{order+1})`.
    pub fn constant(nome: Nome, c: S, order: usize) -> Self {
        let mut coeffs = vec![S::zero(); order + 1];
        coeffs[0] = c;
        Self::new(nome, S::zero(), coeffs)
    }

    pub fn one(nome: Nome, order: usize) -> Self {
        Self::constant(nome, S::one(), order)
    }

    pub fn lead(&self) -> &S {
        &self.lead
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &S {
        &self.coeffs[n]
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn nome(&self) -> Nome {
        self.nome
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(S::abs).fold(0.0, f64::max)
    }

    /// Index of the first coefficient whose modulus exceeds `tol * max_abs`.
    pub fn valuation(&self, tol: f64) -> Option<usize> {
        let cut = tol * self.max_abs();
        self.coeffs.iter().position(|c| c.abs() > cut)
    }

    pub fn to_c64(&self) -> (Complex64, Vec<Complex64>) {
        (self.lead.to_c64(), self.coeffs.iter().map(S::to_c64).collect())
    }

    fn same_nome(&self, other: &Self) -> Result<()> {
        if self.nome == other.nome {
            Ok(())
        } else {
            Err(Error::NomeMismatch { left: self.nome, right: other.nome })
        }
    }

    fn expect_nome(&self, expected: &'static str, ok: &[Nome]) -> Result<()> {
        if ok.contains(&self.nome) {
            Ok(())
        } else {
            Err(Error::WrongNome { expected, found: self.nome })
        }
    }

    /// Keeps coefficients `a_0..a_order`.
    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        Self::new(self.nome, self.lead.clone(), self.coeffs[..=n].to_vec())
    }

    /// Relabels the formal variable without touching coefficients.
    pub fn with_nome(mut self, nome: Nome) -> Self {
        self.nome = nome;
        self
    }

    /// Multiplies by `x^m`.
    pub fn shift(&self, m: i64) -> Self {
        Self::new(self.nome, self.lead.clone() + S::from_i64(m), self.coeffs.clone())
    }

    /// Rewrites the leading exponent as `lead + m` by moving `m` coefficients
    /// into the body. `m` must be non-positive or cover only zero coefficients.
    pub fn realign(&self, new_lead_offset: i64) -> Self {
        if new_lead_offset <= 0 {
            let pad = new_lead_offset.unsigned_abs() as usize;
            let mut coeffs = vec![S::zero(); pad];
            coeffs.extend(self.coeffs.iter().cloned());
            coeffs.truncate(self.coeffs.len());
            Self::new(self.nome, self.lead.clone() + S::from_i64(new_lead_offset), coeffs)
        } else {
            let drop = (new_lead_offset as usize).min(self.order());
            let mut coeffs = self.coeffs[drop..].to_vec();
            coeffs.resize(self.coeffs.len() - drop, S::zero());
            Self::new(self.nome, self.lead.clone() + S::from_i64(drop as i64), coeffs)
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.nome, self.lead.clone(), self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.nome, self.lead.clone(), self.coeffs.iter().map(|a| -a.clone()).collect())
    }

    /// Sum aligned to the smaller exponent; the order is the largest one
    /// covered by both operands.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_nome(other)?;
        let gap = integral_gap(&self.lead, &other.lead).ok_or_else(|| Error::NonIntegralExponentGap {
            gap: format!("{}", (other.lead.clone() - &self.lead).to_c64()),
        })?;
        let (low, high, gap) = if gap >= 0 { (self, other, gap as usize) } else { (other, self, (-gap) as usize) };
        let order = low.order().min(gap + high.order());
        let coeffs = (0..=order)
            .map(|n| {
                let mut c = low.coeffs[n].clone();
                if n >= gap {
                    c += &high.coeffs[n - gap];
                }
                c
            })
            .collect();
        Ok(Self::new(self.nome, low.lead.clone(), coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Cauchy product truncated to the shorter operand.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_nome(other)?;
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| {
                let mut c = S::zero();
                for i in 0..=n {
                    c += self.coeffs[i].clone() * &other.coeffs[n - i];
                }
                c
            })
            .collect();
        Ok(Self::new(self.nome, self.lead.clone() + &other.lead, coeffs))
    }

    pub fn powi(&self, n: u32) -> Result<Self> {
        let mut acc = Self::one(self.nome, self.order());
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// The Euler operator `x d/dx`.
    pub fn theta(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, a)| a.clone() * (self.lead.clone() + S::from_i64(n as i64)))
            .collect();
        Self::new(self.nome, self.lead.clone(), coeffs)
    }

    pub fn invert(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.abs() <= f64::MIN_POSITIVE {
            return Err(Error::NonUnitLeadingCoefficient);
        }
        let inv0 = S::one() / a0;
        let mut out: Vec<S> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..=self.order() {
            let mut acc = S::zero();
            for i in 1..=n {
                acc += self.coeffs[i].clone() * &out[n - i];
            }
            out.push(-(acc * &inv0));
        }
        Ok(Self::new(self.nome, -self.lead.clone(), out))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.invert()?)
    }

    /// `(1 + u)^r` for a series `1 + u`; the leading exponent is scaled by `r`.
    pub fn pow_binomial(&self, r: &S) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if (a0.clone() - S::one()).abs() > 1e-9 {
            return Err(Error::NonMonicLeadingCoefficient { found: format!("{}", a0.to_c64()) });
        }
        let mut out: Vec<S> = Vec::with_capacity(self.coeffs.len());
        out.push(S::one());
        let r1 = r.clone() + S::one();
        for k in 1..=self.order() {
            let mut acc = S::zero();
            for i in 1..=k {
                let w = r1.clone() * S::from_i64(i as i64) - S::from_i64(k as i64);
                acc += w * &self.coeffs[i] * &out[k - i];
            }
            out.push(acc / (S::from_i64(k as i64) * a0));
        }
        Ok(Self::new(self.nome, self.lead.clone() * r, out))
    }

    /// Substitutes `x = x(q)` into a series in `K` or `Z`:
    /// `Σ a_n x(q)^{λ+n}` with the principal branch of `c0^{λ+n}`.
    pub fn compose_frobenius(&self, x_of_q: &Self) -> Result<Self> {
        self.expect_nome("K or Z", &[Nome::K, Nome::Z])?;
        let (mu, c0, unit) = x_of_q.factor_hauptmodul()?;
        let order = x_of_q.order().min(mu * (self.order() + 1) - 1);
        let unit = unit.truncate(order);
        let c0_lambda = c0.powc(&self.lead);
        let mut out = vec![S::zero(); order + 1];
        let mut c0_n = S::one();
        for n in 0..=self.order() {
            let start = mu * n;
            if start > order {
                break;
            }
            let a = &self.coeffs[n];
            if !a.is_zero() {
                let power = self.lead.clone() + S::from_i64(n as i64);
                let term = unit.pow_binomial(&power)?;
                let factor = a.clone() * &c0_lambda * &c0_n;
                for (m, t) in term.coeffs.iter().enumerate().take(order + 1 - start) {
                    out[start + m] += factor.clone() * t;
                }
            }
            c0_n *= &c0;
        }
        Ok(Self::new(x_of_q.nome, self.lead.clone() * S::from_i64(mu as i64), out))
    }

    /// Splits `x(q) = c0 q^mu (1 + u)` for a hauptmodul expansion.
    pub fn factor_hauptmodul(&self) -> Result<(usize, S, Self)> {
        let mu = near_integer(self.lead.to_c64(), GAP_TOL)
            .filter(|&m| m >= 1)
            .ok_or_else(|| Error::NonIntegralHauptmodulExponent { found: format!("{}", self.lead.to_c64()) })?;
        let c0 = self.coeffs[0].clone();
        if c0.abs() <= 1e-300 {
            return Err(Error::ZeroLeadingCoefficient);
        }
        let unit = Self::new(self.nome, S::zero(), self.coeffs.iter().map(|a| a.clone() / &c0).collect());
        Ok((mu as usize, c0, unit))
    }

    /// Coefficient of `q2^{λ+n}` times `e^{-pi i (λ+n)}`.
    pub fn slash_t_inverse(&self) -> Result<Self> {
        self.expect_nome("Q2", &[Nome::Q2])?;
        let phase = (-(S::pi() * S::i() * &self.lead)).exp();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, a)| if n % 2 == 0 { a.clone() * &phase } else { -(a.clone() * &phase) })
            .collect();
        Ok(Self::new(Nome::Q2, self.lead.clone(), coeffs))
    }

    /// Rewrites a `q`-series as a `q2`-series (`q = q2^2`).
    pub fn to_q2(&self) -> Result<Self> {
        self.expect_nome("Q", &[Nome::Q])?;
        let mut coeffs = vec![S::zero(); 2 * self.order() + 1];
        for (n, a) in self.coeffs.iter().enumerate() {
            coeffs[2 * n] = a.clone();
        }
        Ok(Self::new(Nome::Q2, self.lead.clone() * S::from_i64(2), coeffs))
    }

    /// Keeps the coefficients of `q2^{λ + 2n}` as a `q`-series with leading
    /// exponent `λ/2`.
    pub fn even_part_in_q(&self) -> Result<Self> {
        self.expect_nome("Q2", &[Nome::Q2])?;
        let coeffs = self.coeffs.iter().step_by(2).cloned().collect();
        Ok(Self::new(Nome::Q, self.lead.clone() / S::from_i64(2), coeffs))
    }

    /// Keeps the coefficients of `q2^{λ + 2n + 1}` as a `q`-series with
    /// leading exponent `(λ+1)/2`.
    pub fn odd_part_in_q(&self) -> Result<Self> {
        self.expect_nome("Q2", &[Nome::Q2])?;
        if self.order() == 0 {
            return Ok(Self::new(Nome::Q, (self.lead.clone() + S::one()) / S::from_i64(2), vec![S::zero()]));
        }
        let coeffs = self.coeffs.iter().skip(1).step_by(2).cloned().collect();
        Ok(Self::new(Nome::Q, (self.lead.clone() + S::one()) / S::from_i64(2), coeffs))
    }

    pub fn to_json(&self) -> SeriesJson {
        let (lead, coeffs) = self.to_c64();
        SeriesJson { nome: self.nome, lead_exponent: [lead.re, lead.im], coeffs: coeffs.iter().map(|z| [z.re, z.im]).collect() }
    }

    pub fn from_json(j: &SeriesJson) -> Self {
        Self::new(
            j.nome,
            S::from_c64(Complex64::new(j.lead_exponent[0], j.lead_exponent[1])),
            j.coeffs.iter().map(|c| S::from_c64(Complex64::new(c[0], c[1]))).collect(),
        )
    }
}

/// Serialized form of a series.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub nome: Nome,
    pub lead_exponent: [f64; 2],
    pub coeffs: Vec<[f64; 2]>,
}

/// A vector-valued q-expansion of fixed weight.
#[derive(Clone, Debug)]
pub struct VectorSeries<S> {
    pub components: Vec<PuiseuxSeries<S>>,
    pub weight: i64,
}

impl<S: Scalar> VectorSeries<S> {
    /// # Panics
    /// If the components do not share a nome.
    pub fn new(components: Vec<PuiseuxSeries<S>>, weight: i64) -> Self {
        if let Some(first) = components.first() {
            assert!(components.iter().all(|c| c.nome() == first.nome()), "components must share a nome");
        }
        VectorSeries { components, weight }
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn order(&self) -> usize {
        self.components.iter().map(PuiseuxSeries::order).min().unwrap_or(0)
    }

    pub fn nome(&self) -> Nome {
        self.components[0].nome()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.components.iter().map(|c| c.truncate(order)).collect(), self.weight)
    }

    pub fn map(&self, weight: i64, f: impl Fn(&PuiseuxSeries<S>) -> Result<PuiseuxSeries<S>>) -> Result<Self> {
        Ok(Self::new(self.components.iter().map(f).collect::<Result<_>>()?, weight))
    }

    /// Multiplies every component by a scalar series of weight `w`.
    pub fn mul_scalar_form(&self, f: &PuiseuxSeries<S>, w: i64) -> Result<Self> {
        self.map(self.weight + w, |c| c.mul(f))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let comps = self.components.iter().zip(&other.components).map(|(a, b)| a.add(b)).collect::<Result<_>>()?;
        Ok(Self::new(comps, self.weight))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let comps = self.components.iter().zip(&other.components).map(|(a, b)| a.sub(b)).collect::<Result<_>>()?;
        Ok(Self::new(comps, self.weight))
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.components.iter().map(|s| s.scale(c)).collect(), self.weight)
    }

    pub fn max_abs(&self) -> f64 {
        self.components.iter().map(PuiseuxSeries::max_abs).fold(0.0, f64::max)
    }
}
