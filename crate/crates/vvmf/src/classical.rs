//! q- and q2-expansions of level-one forms and of the generators for the
//! index-two subgroup.

use crate::error::{Error, Result};
use crate::mlde::derivative::modular_derivative_scalar;
use crate::residual::{coeffwise_rel, window_rel, Residual};
use crate::scalar::{xi, Scalar};
use crate::series::{Nome, PuiseuxSeries};

/// Sum of `d^k` over the divisors `d` of `n`.
pub fn divisor_sigma(k: u32, n: u64) -> i64 {
    let mut s: i64 = 0;
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            s += (d as i64).pow(k);
            let e = n / d;
            if e != d {
                s += (e as i64).pow(k);
            }
        }
        d += 1;
    }
    s
}

/// Eisenstein series `E_k` for `k` in {2, 4, 6}, normalized with constant
/// term 1, in nome Q.
///
/// # Panics
/// For any other weight.
pub fn eisenstein<S: Scalar>(k: u32, order: usize) -> PuiseuxSeries<S> {
    let factor: i64 = match k {
        2 => -24,
        4 => 240,
        6 => -504,
        _ => panic!("only E2, E4 and E6 are provided"),
    };
    let coeffs = (0..=order as u64)
        .map(|n| if n == 0 { S::one() } else { S::from_i64(factor * divisor_sigma(k - 1, n)) })
        .collect();
    PuiseuxSeries::new(Nome::Q, S::zero(), coeffs)
}

/// `η^m` in nome Q (leading exponent `m/24`) or Q2 (leading exponent `m/12`).
pub fn eta_power<S: Scalar>(m: i64, order: usize, nome: Nome) -> Result<PuiseuxSeries<S>> {
    match nome {
        Nome::Q => Ok(eta_power_q(m, order)),
        Nome::Q2 => Ok(eta_power_q(m, order.div_ceil(2)).to_q2()?.truncate(order)),
        other => Err(Error::WrongNome { expected: "Q or Q2", found: other }),
    }
}

/// `θ log Π(1-q^n)^m = -m Σ σ(n) q^n` gives the recurrence
/// `n P_n = -m Σ_{j=1}^{n} σ(j) P_{n-j}`.
fn eta_power_q<S: Scalar>(m: i64, order: usize) -> PuiseuxSeries<S> {
    let sigma: Vec<S> = (0..=order as u64).map(|n| S::from_i64(if n == 0 { 0 } else { divisor_sigma(1, n) })).collect();
    let mut p: Vec<S> = vec![S::one()];
    let mm = S::from_i64(-m);
    for n in 1..=order {
        let mut acc = S::zero();
        for j in 1..=n {
            acc += sigma[j].clone() * &p[n - j];
        }
        p.push(acc * &mm / S::from_i64(n as i64));
    }
    PuiseuxSeries::new(Nome::Q, S::ratio(m, 24), p)
}

/// `Δ = η^24`.
pub fn delta<S: Scalar>(order: usize) -> PuiseuxSeries<S> {
    eta_power_q(24, order)
}

/// `K = 1728 Δ / E4^3 = 1728 / j`.
pub fn k_hauptmodul<S: Scalar>(order: usize) -> Result<PuiseuxSeries<S>> {
    let e4 = eisenstein::<S>(4, order);
    let e4_cubed = e4.powi(3)?;
    Ok(delta::<S>(order).div(&e4_cubed)?.scale(&S::from_i64(1728)))
}

/// `j = E4^3 / Δ`.
pub fn j_invariant<S: Scalar>(order: usize) -> Result<PuiseuxSeries<S>> {
    let e4 = eisenstein::<S>(4, order);
    e4.powi(3)?.div(&delta::<S>(order))
}

/// `(θ2^4, θ3^4, θ4^4)` as q2-series of the given order, all with leading
/// exponent 0 (`θ2^4 = 16 q2 + 64 q2^3 + ...`).
pub fn theta_fourth_powers<S: Scalar>(order: usize) -> Result<(PuiseuxSeries<S>, PuiseuxSeries<S>, PuiseuxSeries<S>)> {
    let bound = ((2 * order) as f64).sqrt() as i64 + 2;
    let mut t2 = vec![S::zero(); order + 1];
    let mut t3 = vec![S::zero(); order + 1];
    let mut t4 = vec![S::zero(); order + 1];
    for n in -bound..=bound {
        let sq = (n * n) as usize;
        if sq <= order {
            t3[sq] += S::one();
            t4[sq] += if n % 2 == 0 { S::one() } else { -S::one() };
        }
        // θ2 = q2^{1/4} Σ q2^{n^2+n}; the fourth power of the prefactor is q2.
        let tri = (n * n + n) as usize;
        if tri <= order {
            t2[tri] += S::one();
        }
    }
    let fourth = |c: Vec<S>| PuiseuxSeries::new(Nome::Q2, S::zero(), c).powi(4);
    let theta2_4 = fourth(t2)?.shift(1).realign(-1);
    Ok((theta2_4, fourth(t3)?, fourth(t4)?))
}

/// `f = (1+ξ)θ2^4 - ξ^5(θ3^4+θ4^4)` and `g = f|T`, in nome Q2.
pub fn fg_generators<S: Scalar>(order: usize) -> Result<(PuiseuxSeries<S>, PuiseuxSeries<S>)> {
    let (t2, t3, t4) = theta_fourth_powers::<S>(order)?;
    let x: S = xi();
    let f = t2.scale(&(S::one() + &x)).sub(&t3.add(&t4)?.scale(&x.powi(5)))?;
    let g_coeffs = f.coeffs().iter().enumerate().map(|(n, a)| if n % 2 == 0 { a.clone() } else { -a.clone() }).collect();
    let g = PuiseuxSeries::new(Nome::Q2, f.lead().clone(), g_coeffs);
    Ok((f, g))
}

/// `12^{3/2}`, the positive root.
pub fn twelve_three_halves<S: Scalar>() -> S {
    S::from_i64(12).powc(&S::ratio(3, 2))
}

/// `Z = 2cη^12 / (cη^12 + iE6)` with `c = 12^{3/2}`, as a q2-series.
pub fn z_hauptmodul<S: Scalar>(order: usize) -> Result<PuiseuxSeries<S>> {
    let c = twelve_three_halves::<S>();
    let eta12 = eta_power::<S>(12, order, Nome::Q2)?;
    let e6 = eisenstein::<S>(6, order.div_ceil(2)).to_q2()?.truncate(order);
    let den = eta12.scale(&c).add(&e6.scale(&S::i()))?;
    eta12.scale(&(c * S::from_i64(2))).div(&den)
}

/// `h = E6 / (12^{3/2} η^12)` as a q2-series.
pub fn h_hauptmodul<S: Scalar>(order: usize) -> Result<PuiseuxSeries<S>> {
    let c = twelve_three_halves::<S>();
    let eta12 = eta_power::<S>(12, order, Nome::Q2)?;
    let e6 = eisenstein::<S>(6, order.div_ceil(2)).to_q2()?.truncate(order);
    e6.div(&eta12.scale(&c))
}

/// Largest coefficient modulus of `(f^3 - g^3) - Z f^3`.
pub fn z_of_fg_check<S: Scalar>(order: usize) -> Result<f64> {
    let (f, g) = fg_generators::<S>(order)?;
    let z = z_hauptmodul::<S>(order)?;
    let f3 = f.powi(3)?;
    let g3 = g.powi(3)?;
    Ok(f3.sub(&g3)?.sub(&z.mul(&f3)?)?.max_abs())
}

/// Every series the pipelines consume, expanded once.
///
/// Level-one series are expanded in `q` to `order`; level-two series are
/// expanded in `q2` to the same `order` (the level-one data they need are
/// index-doubled, never recomputed).
#[derive(Clone, Debug)]
pub struct ClassicalCatalog<S> {
    order: usize,
    e2: PuiseuxSeries<S>,
    e4: PuiseuxSeries<S>,
    e6: PuiseuxSeries<S>,
    e2_q2: PuiseuxSeries<S>,
    e4_q2: PuiseuxSeries<S>,
    e6_q2: PuiseuxSeries<S>,
    delta: PuiseuxSeries<S>,
    j: PuiseuxSeries<S>,
    k: PuiseuxSeries<S>,
    theta: (PuiseuxSeries<S>, PuiseuxSeries<S>, PuiseuxSeries<S>),
    f: PuiseuxSeries<S>,
    g: PuiseuxSeries<S>,
    h: PuiseuxSeries<S>,
    z: PuiseuxSeries<S>,
}

impl<S: Scalar> ClassicalCatalog<S> {
    pub fn new(order: usize) -> Result<Self> {
        let half = order.div_ceil(2);
        let to_q2 = |s: PuiseuxSeries<S>| -> Result<PuiseuxSeries<S>> { Ok(s.truncate(half).to_q2()?.truncate(order)) };
        let e2 = eisenstein::<S>(2, order);
        let e4 = eisenstein::<S>(4, order);
        let e6 = eisenstein::<S>(6, order);
        let (f, g) = fg_generators::<S>(order)?;
        Ok(ClassicalCatalog {
            order,
            e2_q2: to_q2(e2.clone())?,
            e4_q2: to_q2(e4.clone())?,
            e6_q2: to_q2(e6.clone())?,
            e2,
            e4,
            e6,
            delta: delta::<S>(order),
            j: j_invariant::<S>(order)?,
            k: k_hauptmodul::<S>(order)?,
            theta: theta_fourth_powers::<S>(order)?,
            f,
            g,
            h: h_hauptmodul::<S>(order)?,
            z: z_hauptmodul::<S>(order)?,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn pick<'a>(&'a self, nome: Nome, q: &'a PuiseuxSeries<S>, q2: &'a PuiseuxSeries<S>) -> Result<&'a PuiseuxSeries<S>> {
        match nome {
            Nome::Q => Ok(q),
            Nome::Q2 => Ok(q2),
            other => Err(Error::WrongNome { expected: "Q or Q2", found: other }),
        }
    }

    pub fn e2(&self, nome: Nome) -> Result<&PuiseuxSeries<S>> {
        self.pick(nome, &self.e2, &self.e2_q2)
    }

    pub fn e4(&self, nome: Nome) -> Result<&PuiseuxSeries<S>> {
        self.pick(nome, &self.e4, &self.e4_q2)
    }

    pub fn e6(&self, nome: Nome) -> Result<&PuiseuxSeries<S>> {
        self.pick(nome, &self.e6, &self.e6_q2)
    }

    pub fn delta(&self) -> &PuiseuxSeries<S> {
        &self.delta
    }

    pub fn j(&self) -> &PuiseuxSeries<S> {
        &self.j
    }

    /// `K(q)`.
    pub fn k(&self) -> &PuiseuxSeries<S> {
        &self.k
    }

    /// `(θ2^4, θ3^4, θ4^4)` in q2.
    pub fn theta_fourth(&self) -> &(PuiseuxSeries<S>, PuiseuxSeries<S>, PuiseuxSeries<S>) {
        &self.theta
    }

    pub fn f(&self) -> &PuiseuxSeries<S> {
        &self.f
    }

    pub fn g(&self) -> &PuiseuxSeries<S> {
        &self.g
    }

    pub fn h(&self) -> &PuiseuxSeries<S> {
        &self.h
    }

    /// `Z(q2)`.
    pub fn z(&self) -> &PuiseuxSeries<S> {
        &self.z
    }

    /// `η^m` at the catalog order.
    pub fn eta_power(&self, m: i64, nome: Nome) -> Result<PuiseuxSeries<S>> {
        eta_power(m, self.order, nome)
    }

    /// Named lookup used by the `classical` subcommand.
    pub fn by_name(&self, name: &str) -> Result<PuiseuxSeries<S>> {
        let s = match name.to_ascii_lowercase().as_str() {
            "e2" => self.e2.clone(),
            "e4" => self.e4.clone(),
            "e6" => self.e6.clone(),
            "delta" => self.delta.clone(),
            "j" => self.j.clone(),
            "k" => self.k.clone(),
            "theta2_4" => self.theta.0.clone(),
            "theta3_4" => self.theta.1.clone(),
            "theta4_4" => self.theta.2.clone(),
            "f" | "f_gen" => self.f.clone(),
            "g" | "g_gen" => self.g.clone(),
            "h" | "h_haupt" => self.h.clone(),
            "z" | "z_haupt" => self.z.clone(),
            other => {
                if let Some(m) = other.strip_prefix("eta").and_then(|m| m.trim_start_matches('^').parse::<i64>().ok()) {
                    self.eta_power(m, Nome::Q)?
                } else {
                    return Err(Error::Validation(format!("unknown classical series `{name}`")));
                }
            }
        };
        Ok(s)
    }
}

/// Level-one identities, compared coefficientwise.
pub fn classical_identities<S: Scalar>(cat: &ClassicalCatalog<S>, tol: f64) -> Result<Vec<Residual>> {
    let n = cat.order();
    let e2 = cat.e2(Nome::Q)?;
    let e4 = cat.e4(Nome::Q)?;
    let e6 = cat.e6(Nome::Q)?;
    let delta = cat.delta();
    let c = |v: i64| S::from_i64(v);
    let mut out = Vec::new();

    let lhs = e4.powi(3)?.sub(&e6.powi(2)?)?;
    out.push(Residual::new("E4^3 - E6^2 = 1728 Delta", coeffwise_rel(&lhs, &delta.scale(&c(1728)))?, tol));
    out.push(Residual::new("Delta = eta^24", coeffwise_rel(delta, &eta_power(24, n, Nome::Q)?)?, tol));
    let one_over_k = cat.k().invert()?.scale(&c(1728));
    out.push(Residual::new("j K = 1728", coeffwise_rel(cat.j(), &one_over_k)?, tol));
    out.push(Residual::new("K E4^3 = 1728 Delta", coeffwise_rel(&cat.k().mul(&e4.powi(3)?)?, &delta.scale(&c(1728)))?, tol));
    out.push(Residual::new("D_12 Delta = 0", coeffwise_rel(&delta.theta(), &e2.mul(delta)?)?, tol));
    let twelfth = S::ratio(1, 12);
    out.push(Residual::new(
        "theta E2 = (E2^2 - E4)/12",
        coeffwise_rel(&e2.theta(), &e2.powi(2)?.sub(e4)?.scale(&twelfth))?,
        tol,
    ));
    out.push(Residual::new(
        "theta E4 = (E2 E4 - E6)/3",
        coeffwise_rel(&e4.theta(), &e2.mul(e4)?.sub(e6)?.scale(&S::ratio(1, 3)))?,
        tol,
    ));
    out.push(Residual::new(
        "theta E6 = (E2 E6 - E4^2)/2",
        coeffwise_rel(&e6.theta(), &e2.mul(e6)?.sub(&e4.powi(2)?)?.scale(&S::ratio(1, 2)))?,
        tol,
    ));
    Ok(out)
}

/// Identities among the level-two generators, measured relative to the
/// largest coefficient in the window.
pub fn level2_identities<S: Scalar>(cat: &ClassicalCatalog<S>, tol: f64) -> Result<Vec<Residual>> {
    let f = cat.f();
    let g = cat.g();
    let z = cat.z();
    let x: S = xi();
    let e4 = cat.e4(Nome::Q2)?;
    let e6 = cat.e6(Nome::Q2)?;
    let f3 = f.powi(3)?;
    let g3 = g.powi(3)?;
    let mut out = Vec::new();

    out.push(Residual::new("f g = -4 xi E4", window_rel(&f.mul(g)?, &e4.scale(&(x.clone() * S::from_i64(-4))))?, tol));
    out.push(Residual::new("f^3 + g^3 = 16 E6", window_rel(&f3.add(&g3)?, &e6.scale(&S::from_i64(16)))?, tol));
    let df = modular_derivative_scalar(f, 2, cat)?;
    out.push(Residual::new("D f = xi g^2 / 12", window_rel(&df, &g.powi(2)?.scale(&(x.clone() / S::from_i64(12))))?, tol));
    let d2f = modular_derivative_scalar(&df, 4, cat)?;
    out.push(Residual::new("D^2 f = E4 f / 18", window_rel(&d2f, &e4.mul(f)?.scale(&S::ratio(1, 18)))?, tol));
    let k_q2 = cat.k().truncate(cat.order().div_ceil(2)).to_q2()?.truncate(cat.order());
    let zz = z.powi(2)?.div(&z.sub(&PuiseuxSeries::one(Nome::Q2, cat.order()))?.scale(&S::from_i64(4)))?;
    out.push(Residual::new("K(q2^2) = Z^2 / (4(Z-1))", window_rel(&k_q2, &zz)?, tol));
    out.push(Residual::new("Z f^3 = f^3 - g^3", window_rel(&z.mul(&f3)?, &f3.sub(&g3)?)?, tol));
    let gf3 = g3.div(&f3)?;
    let one_minus_z = PuiseuxSeries::one(Nome::Q2, cat.order()).sub(z)?;
    out.push(Residual::new("(g/f)^3 = 1 - Z", window_rel(&gf3, &one_minus_z)?, tol));
    let theta_q_z = z.theta().scale(&S::ratio(1, 2));
    let factor = g.powi(2)?.div(&f.scale(&((x - S::one()) * S::from_i64(4))))?;
    out.push(Residual::new("theta_q Z = g^2 Z / (4(xi-1) f)", window_rel(&theta_q_z, &factor.mul(z)?)?, tol));
    Ok(out)
}
