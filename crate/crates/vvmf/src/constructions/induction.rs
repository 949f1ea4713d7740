//! Induction from the index-two subgroup: the minimal pair `(A, B)` from the
//! second-order equation in `Z`, and the induced forms for `SL2(Z)`.

use super::Route;
use crate::classical::ClassicalCatalog;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::mlde::basis::{assemble_basis, freeness_condition, FormBasis, FREENESS_TOL};
use crate::mlde::classify::classify;
use crate::mlde::coeffs::{coeffs_for, hauptmodul_normalization};
use crate::mlde::derivative::modular_derivative;
use crate::mlde::operator::FuchsianOperator;
use crate::mlde::poly::{multiset_distance, ThetaPoly};
use crate::mlde::system::{frobenius_solve_series_system, left_eigenvector};
use crate::rep::{check_induction_orbit, induced_exponents, ExponentData, GRank2Rep, Group, Rank4Rep};
use crate::residual::{vector_relative_to_terms, Residual};
use crate::scalar::{near_integer, xi, Scalar};
use crate::series::{integral_gap, Nome, PuiseuxSeries, VectorSeries};
use num_complex::Complex64;

fn fuchsian_z<S: Scalar>(u: &S, p: S) -> FuchsianOperator<S> {
    let sixteen_xi_u = xi::<S>() * u * S::from_i64(16);
    let n = S::from_i64;
    let p0 = ThetaPoly::new(vec![sixteen_xi_u.clone(), S::zero(), S::one()]);
    let p1 = ThetaPoly::new(vec![-(p.clone() + &sixteen_xi_u), n(-1), n(-2)]);
    let p2 = ThetaPoly::new(vec![p.clone() - &(p.clone() * &p), n(1), n(1)]);
    FuchsianOperator::new(vec![p0, p1, p2], Nome::Z)
}

/// The second-order equation in `Z` satisfied by the weight-zero transport
/// of the minimal pair, multiplied by `(1 - Z)^2`:
/// `(1-Z)^2 θ² - Z(1-Z) θ + 16ξu(1 - Z) + (Z - Z²)/3 + 2Z²/9`.
pub fn build_fuchsian_z<S: Scalar>(u: &S) -> FuchsianOperator<S> {
    fuchsian_z(u, S::ratio(1, 3))
}

/// The same equation with the constant block
/// `(14Z² - 18(72ξu + 1)Z + 1296ξu)/81`. Its solutions do not satisfy the
/// `D(A, B)` relation; kept for comparison.
pub fn build_fuchsian_z_printed<S: Scalar>(u: &S) -> FuchsianOperator<S> {
    fuchsian_z(u, S::ratio(2, 9))
}

/// `u = -r² ξ^{-1} / 16`, inverting the indicial relation `r² = -16ξu`.
pub fn u_from_local_exponent<S: Scalar>(r: &S) -> S {
    -(r.clone() * r) / (xi::<S>() * S::from_i64(16))
}

#[derive(Clone, Debug)]
pub struct InductionJob<S> {
    pub rep: GRank2Rep,
    /// Exponents for `ρ(T²)`, group `G`.
    pub exponents: ExponentData<S>,
    pub u: Option<S>,
}

/// Parameters resolved from an [`InductionJob`].
#[derive(Clone, Debug)]
pub struct InductionParameters<S> {
    pub k1: i64,
    pub r: S,
    pub u: S,
}

impl<S: Scalar> InductionJob<S> {
    /// `k1 = 3Tr(L)` (requires `3Tr(L) ≡ e mod 2`), `r = (e1 - e2)/2`, and
    /// `u` either derived from `r`, or checked against it, in which case `r`
    /// is recomputed as the root of `r² = -16ξu` nearest the exponents.
    pub fn resolve(&self) -> Result<InductionParameters<S>> {
        let l = &self.exponents;
        if l.group != Group::G {
            return Err(Error::GroupMismatch);
        }
        if l.rank() != 2 {
            return Err(Error::WrongRank { expected: 2, found: l.rank() });
        }
        let three_trace = near_integer(l.trace().to_c64() * 3.0, 1e-9)
            .ok_or_else(|| Error::NonIntegralThreeTrace(format!("{}", l.trace().to_c64() * 3.0)))?;
        if (three_trace - self.rep.e as i64).rem_euclid(2) != 0 {
            return Err(Error::UnsupportedInductionBranch { three_trace, e: self.rep.e });
        }
        let r = (l.eigenvalues[0].clone() - &l.eigenvalues[1]) * S::ratio(1, 2);
        if integral_gap(&l.eigenvalues[1], &l.eigenvalues[0]).is_some() {
            return Err(Error::ResonantExponents(format!("{} and {}", l.eigenvalues[0].to_c64(), l.eigenvalues[1].to_c64())));
        }
        let derived = u_from_local_exponent(&r);
        let (u, r) = match &self.u {
            Some(u) => {
                if (u.clone() - &derived).abs() > 1e-9 * u.abs().max(1.0) {
                    return Err(Error::Validation(format!(
                        "u = {} does not match the exponents (they give u = {})",
                        u.to_c64(),
                        derived.to_c64()
                    )));
                }
                let root = (-(xi::<S>() * S::from_i64(16) * u)).sqrt();
                let r = if (root.clone() - &r).abs() <= (root.clone() + &r).abs() { root } else { -root };
                (u.clone(), r)
            }
            None => (derived, r),
        };
        if u.abs() < 1e-12 {
            return Err(Error::DegenerateU);
        }
        Ok(InductionParameters { k1: three_trace, r, u })
    }
}

#[derive(Clone, Debug)]
pub struct MinimalPair<S> {
    pub a: VectorSeries<S>,
    pub b: VectorSeries<S>,
    pub params: InductionParameters<S>,
    pub residuals: Vec<Residual>,
}

/// `Z a + 3(Z - 1) θ_Z a`.
fn b_transport<S: Scalar>(a: &PuiseuxSeries<S>) -> Result<PuiseuxSeries<S>> {
    let th = a.theta().scale(&S::from_i64(3));
    a.shift(1).add(&th.shift(1))?.sub(&th)
}

/// Residuals of `D A = g B` and `D B = u f A`, the derivative taken at the
/// weight of `A`.
pub fn pair_relations<S: Scalar>(
    a: &VectorSeries<S>,
    b: &VectorSeries<S>,
    u: &S,
    cat: &ClassicalCatalog<S>,
    tol: f64,
) -> Result<Vec<Residual>> {
    let da = modular_derivative(a, cat)?;
    let gb = b.mul_scalar_form(cat.g(), 2)?;
    let db = modular_derivative(b, cat)?;
    let ufa = a.mul_scalar_form(cat.f(), 2)?.scale(u);
    Ok(vec![
        Residual::new("D A = g B", vector_relative_to_terms(&da.sub(&gb)?, &[&da, &gb]), tol),
        Residual::new("D B = u f A", vector_relative_to_terms(&db.sub(&ufa)?, &[&db, &ufa]), tol),
    ])
}

/// The minimal pair `A = η^{2k1}(g/f)(a₊, a₋)`,
/// `B = (ξ/12) η^{2k1} (f/g)(Z a + 3(Z-1) θ_Z a)` in nome Q2, where `a±`
/// solve [`build_fuchsian_z`] at the exponents `±r`.
pub fn induction_minimal_pair<S: Scalar>(
    job: &InductionJob<S>,
    order: usize,
    cat: &ClassicalCatalog<S>,
    route: Route,
    tol: f64,
) -> Result<MinimalPair<S>> {
    let params = job.resolve()?;
    let InductionParameters { k1, r, u } = &params;
    let exps = [r.clone(), -r.clone()];
    let (a_comps, b_comps) = match route {
        Route::Compose => {
            let op = build_fuchsian_z(u);
            let eta = cat.eta_power(2 * k1, Nome::Q2)?.truncate(order);
            let g_over_f = cat.g().div(cat.f())?;
            let f_over_g = cat.f().div(cat.g())?;
            let pre_a = eta.mul(&g_over_f)?;
            let pre_b = eta.mul(&f_over_g)?.scale(&(xi::<S>() / S::from_i64(12)));
            let mut a_comps = Vec::new();
            let mut b_comps = Vec::new();
            for e in &exps {
                let a = op.frobenius_solve(e, order).map_err(|err| err.at_step('d'))?;
                let b = b_transport(&a)?;
                a_comps.push(pre_a.mul(&a.compose_frobenius(cat.z()).map_err(|err| err.at_step('e'))?)?);
                b_comps.push(pre_b.mul(&b.compose_frobenius(cat.z()).map_err(|err| err.at_step('e'))?)?);
            }
            (a_comps, b_comps)
        }
        Route::Modular => {
            let system = pair_system(*k1, u, cat, order)?;
            let base = S::ratio(*k1, 6);
            let mut a_comps = Vec::new();
            let mut b_comps = Vec::new();
            for e in &exps {
                let lam = base.clone() + e;
                let v0 = left_eigenvector(&system[0], &lam)?;
                let x = frobenius_solve_series_system(&system, &lam, &v0, order, Nome::Q2).map_err(|err| err.at_step('d'))?;
                let scale = hauptmodul_normalization(cat.z(), e)? / x[0].coeff(0);
                a_comps.push(x[0].scale(&scale));
                b_comps.push(x[1].scale(&scale));
            }
            (a_comps, b_comps)
        }
    };
    let a = VectorSeries::new(a_comps, *k1);
    let b = VectorSeries::new(b_comps, *k1);
    let residuals = pair_relations(&a, &b, u, cat, tol)?;
    Ok(MinimalPair { a, b, params, residuals })
}

/// `θ_{q2} (A, B) = (A, B) · 2[[k1 E2/12, u f], [g, k1 E2/12]]` as
/// coefficient matrices.
fn pair_system<S: Scalar>(k1: i64, u: &S, cat: &ClassicalCatalog<S>, order: usize) -> Result<Vec<Mat<S>>> {
    let e2 = cat.e2(Nome::Q2)?;
    let (f, g) = (cat.f(), cat.g());
    let n = order.min(e2.order()).min(f.order());
    let two = S::from_i64(2);
    let kk = S::ratio(k1, 12);
    Ok((0..=n)
        .map(|m| {
            let diag = e2.coeff(m).clone() * &kk * &two;
            vec![
                vec![diag.clone(), f.coeff(m).clone() * u * &two],
                vec![g.coeff(m).clone() * &two, diag],
            ]
        })
        .collect())
}

/// A form for `G` lifted to `SL2(Z)`.
#[derive(Clone, Debug)]
pub struct InducedForm<S> {
    /// `(F, F|T⁻¹)` in nome Q2.
    pub stacked: VectorSeries<S>,
    /// Even parts then odd parts of the components of `F`, as `q`-series
    /// with leading exponents `λ/2` and `(λ+1)/2`.
    pub diagonal: VectorSeries<S>,
    pub residuals: Vec<Residual>,
}

/// Even/odd parts of each component, as a `q`-vector.
fn diagonalize<S: Scalar>(f: &VectorSeries<S>) -> Result<VectorSeries<S>> {
    let mut comps = Vec::with_capacity(2 * f.rank());
    for c in &f.components {
        comps.push(c.even_part_in_q()?);
    }
    for c in &f.components {
        comps.push(c.odd_part_in_q()?);
    }
    Ok(VectorSeries::new(comps, f.weight))
}

/// Stacks `F` over `F|T⁻¹` and checks that `F ± e^{πiλ} F|T⁻¹` carry only
/// even or only odd powers beyond `q2^λ`.
pub fn induce_to_gamma<S: Scalar>(f: &VectorSeries<S>, l: &ExponentData<S>, tol: f64) -> Result<InducedForm<S>> {
    if f.nome() != Nome::Q2 {
        return Err(Error::WrongNome { expected: "Q2", found: f.nome() });
    }
    let mut stacked = f.components.clone();
    let mut pattern: f64 = 0.0;
    for c in &f.components {
        let slashed = c.slash_t_inverse()?;
        let phase = (S::pi() * S::i() * c.lead()).exp();
        let plus = c.add(&slashed.scale(&phase))?;
        let minus = c.sub(&slashed.scale(&phase))?;
        let scale = c.max_abs().max(f64::MIN_POSITIVE);
        for (n, (p, m)) in plus.coeffs().iter().zip(minus.coeffs()).enumerate() {
            let stray = if n % 2 == 0 { m.abs() } else { p.abs() };
            pattern = pattern.max(stray / scale);
        }
        stacked.push(slashed);
    }
    let stacked = VectorSeries::new(stacked, f.weight);
    let diagonal = diagonalize(f)?;
    let declared: Vec<Complex64> = diagonal.components.iter().map(|c| c.lead().to_c64()).collect();
    let expected = induced_exponents(l)?.eigenvalues_c64();
    let residuals = vec![
        Residual::new("F +- e^(pi i lambda) F|T^-1 splits into even and odd q2-powers", pattern, tol),
        Residual::new("induced exponents match Ind L", multiset_distance(&declared, &expected), tol),
    ];
    Ok(InducedForm { stacked, diagonal, residuals })
}

#[derive(Clone, Debug)]
pub struct InductionResult<S> {
    pub pair: MinimalPair<S>,
    pub induced: [InducedForm<S>; 2],
    pub bases: [FormBasis<S>; 2],
}

/// Exponent data read off the leading exponents of a form.
fn exponents_of<S: Scalar>(f: &VectorSeries<S>, group: Group) -> ExponentData<S> {
    ExponentData::diagonal(f.components.iter().map(|c| c.lead().clone()).collect(), group)
}

/// Minimal pair, induction of both members to `SL2(Z)`, and the bases of
/// the induced modules in nome Q2.
pub fn induction_pipeline<S: Scalar>(
    job: &InductionJob<S>,
    order: usize,
    cat: &ClassicalCatalog<S>,
    route: Route,
    tol: f64,
) -> Result<InductionResult<S>> {
    check_induction_orbit(&job.rep)?;
    let pair = induction_minimal_pair(job, order, cat, route, tol)?;
    let mut induced = Vec::new();
    let mut bases = Vec::new();
    for form in [&pair.a, &pair.b] {
        let l = exponents_of(form, Group::G);
        let ind = induce_to_gamma(form, &l, tol)?;
        let ind_l = induced_exponents(&l)?;
        let t_spectrum: Vec<Complex64> = ind_l.eigenvalues_c64().iter().map(|e| (Complex64::i() * 2.0 * std::f64::consts::PI * e).exp()).collect();
        let rep = Rank4Rep::from_eigenvalues([t_spectrum[0], t_spectrum[1], t_spectrum[2], t_spectrum[3]], job.rep.e)?;
        let case = classify(&rep, &ind_l).map_err(|e| e.at_step('b'))?;
        let co = coeffs_for(&ind_l, case.case).map_err(|e| e.at_step('c'))?;
        let mut basis = assemble_basis(&ind.stacked, &co, &case, cat, tol)?;
        let diagonal_forms = basis
            .forms
            .iter()
            .map(|b| diagonalize(&VectorSeries::new(b.components[..form.rank()].to_vec(), b.weight)))
            .collect::<Result<Vec<_>>>()?;
        let cond = freeness_condition(&diagonal_forms)?;
        basis.residuals.retain(|r| !r.name.starts_with("leading coefficients"));
        basis.residuals.push(Residual::new("leading coefficients have full rank (condition number)", cond, FREENESS_TOL));
        basis.residuals.extend(ind.residuals.iter().cloned());
        induced.push(ind);
        bases.push(basis);
    }
    let [i0, i1]: [InducedForm<S>; 2] = induced.try_into().expect("two induced forms");
    let [b0, b1]: [FormBasis<S>; 2] = bases.try_into().expect("two bases");
    Ok(InductionResult { pair, induced: [i0, i1], bases: [b0, b1] })
}
