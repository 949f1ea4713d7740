//! Batch jobs: a JSON job description in, a result envelope out.

use crate::classical::{classical_identities, level2_identities, ClassicalCatalog};
use crate::constructions::{
    induction_pipeline, rank2_minimal, sym3_pipeline, tensor_pipeline, InductionJob, Rank2Source, Route,
};
use crate::error::{Error, Result};
use crate::mlde::basis::{freeness_residual, FormBasis};
use crate::mlde::classify::{classify, Case, CaseReport};
use crate::mlde::coeffs::{
    build_cyclic_operator, build_noncyclic_operator, build_noncyclic_system, coeffs_for, OdeCoefficients,
    OdeCoefficientsJson,
};
use crate::mlde::derivative::modular_derivative;
use crate::mlde::system::{frobenius_solve_system, left_eigenvector};
use crate::rep::{
    induced_exponents, induced_rep, sym3_exponents, sym3_rep, tensor_exponents, tensor_rep, ExponentData,
    ExponentJson, Rank4Rep, RepSpec,
};
use crate::residual::{Residual, SERIES_TOL};
use crate::scalar::{bits_for_order, with_precision, Big, Scalar};
use crate::series::{Nome, SeriesJson, VectorSeries};
use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize};
use std::io::Write;
use std::path::PathBuf;

/// Environment variable overriding the residual tolerance.
pub const TOL_ENV: &str = "VVMF_TOL";

/// Tolerance for the `check` command when none is given.
pub const CHECK_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Classical,
    Check,
    Classify,
    Coeffs,
    Solve,
    Minimal,
    Basis,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Construction {
    Rank2,
    Tensor,
    Sym3,
    Induction,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Precision {
    Double,
    Extended,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

fn default_order() -> usize {
    40
}

#[derive(Deserialize)]
#[serde(untagged)]
enum OneOrMany<T> {
    One(T),
    Many(Vec<T>),
}

fn one_or_many<'de, D, T>(d: D) -> std::result::Result<Vec<T>, D::Error>
where
    D: Deserializer<'de>,
    T: Deserialize<'de>,
{
    Ok(match OneOrMany::deserialize(d)? {
        OneOrMany::One(x) => vec![x],
        OneOrMany::Many(v) => v,
    })
}

/// One unit of work. `reps` and `exponents` accept a single object or a
/// list; `rep` is accepted as an alias of `reps`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JobSpec {
    pub command: Command,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<Construction>,
    #[serde(default, alias = "rep", deserialize_with = "one_or_many", skip_serializing_if = "Vec::is_empty")]
    pub reps: Vec<RepSpec>,
    #[serde(default, deserialize_with = "one_or_many", skip_serializing_if = "Vec::is_empty")]
    pub exponents: Vec<ExponentJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<[f64; 2]>,
    /// Series name for `classical`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default = "default_order")]
    pub order: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precision: Option<Precision>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub route: Option<Route>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_path: Option<PathBuf>,
}

impl JobSpec {
    pub fn new(command: Command) -> Self {
        JobSpec {
            command,
            construction: None,
            reps: Vec::new(),
            exponents: Vec::new(),
            u: None,
            name: None,
            order: default_order(),
            precision: None,
            route: None,
            output_path: None,
        }
    }

    /// `check` runs in extended precision unless told otherwise.
    pub fn effective_precision(&self) -> Precision {
        self.precision.unwrap_or(match self.command {
            Command::Check => Precision::Extended,
            _ => Precision::Double,
        })
    }

    pub fn default_tolerance(&self) -> f64 {
        match self.command {
            Command::Check => CHECK_TOL,
            _ => SERIES_TOL,
        }
    }

    fn need(&self, reps: usize, exponents: usize) -> Result<()> {
        if self.reps.len() != reps || self.exponents.len() != exponents {
            return Err(Error::Validation(format!(
                "{:?} job with construction {:?} needs {reps} representation(s) and {exponents} exponent set(s), got {} and {}",
                self.command,
                self.construction,
                self.reps.len(),
                self.exponents.len()
            )));
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        if self.order < 1 {
            return Err(Error::Validation("order must be at least 1".into()));
        }
        match self.command {
            Command::Classical => {
                if self.name.is_none() {
                    return Err(Error::Validation("classical needs a series name".into()));
                }
                Ok(())
            }
            Command::Check => Ok(()),
            _ => match self.construction {
                None | Some(Construction::Rank2) | Some(Construction::Sym3) | Some(Construction::Induction) => self.need(1, 1),
                Some(Construction::Tensor) => self.need(2, 2),
            },
        }
    }
}

/// A form in the output: its weight and components.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FormJson {
    pub weight: f64,
    pub components: Vec<SeriesJson>,
}

impl FormJson {
    pub fn from_vector<S: Scalar>(v: &VectorSeries<S>) -> Self {
        FormJson { weight: v.weight as f64, components: v.components.iter().map(|c| c.to_json()).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultEnvelope {
    pub job: JobSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<CaseReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<OdeCoefficientsJson>,
    #[serde(default)]
    pub basis: Vec<FormJson>,
    #[serde(default)]
    pub residuals: Vec<Residual>,
    /// Left empty by [`run`] so that output is reproducible byte for byte.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl ResultEnvelope {
    fn new(job: &JobSpec) -> Self {
        ResultEnvelope { job: job.clone(), case: None, coefficients: None, basis: Vec::new(), residuals: Vec::new(), timing: None }
    }

    pub fn passed(&self) -> bool {
        self.residuals.iter().all(Residual::passed)
    }

    fn push_basis<S: Scalar>(&mut self, basis: &FormBasis<S>, label: Option<&str>) {
        self.case.get_or_insert_with(|| basis.case.clone());
        self.basis.extend(basis.forms.iter().map(FormJson::from_vector));
        self.push_residuals(&basis.residuals, label);
    }

    fn push_residuals(&mut self, residuals: &[Residual], label: Option<&str>) {
        self.residuals.extend(residuals.iter().map(|r| match label {
            Some(l) => Residual { name: format!("[{l}] {}", r.name), ..r.clone() },
            None => r.clone(),
        }));
    }
}

/// Reads [`TOL_ENV`] if set.
pub fn tolerance_from_env() -> Result<Option<f64>> {
    match std::env::var(TOL_ENV) {
        Ok(s) => s
            .trim()
            .parse::<f64>()
            .ok()
            .filter(|t| t.is_finite() && *t > 0.0)
            .map(Some)
            .ok_or_else(|| Error::Validation(format!("{TOL_ENV}={s} is not a positive decimal"))),
        Err(_) => Ok(None),
    }
}

/// Runs one job. `tol` overrides the command's default tolerance.
pub fn run(job: &JobSpec, tol: Option<f64>) -> Result<ResultEnvelope> {
    job.validate()?;
    let tol = tol.unwrap_or_else(|| job.default_tolerance());
    match job.effective_precision() {
        Precision::Double => run_with::<Complex64>(job, tol),
        Precision::Extended => with_precision(bits_for_order(job.order), || run_with::<Big>(job, tol)),
    }
}

fn classical_weight(name: &str) -> f64 {
    let name = name.to_ascii_lowercase();
    match name.as_str() {
        "e2" | "theta2_4" | "theta3_4" | "theta4_4" | "f" | "f_gen" | "g" | "g_gen" => 2.0,
        "e4" => 4.0,
        "e6" => 6.0,
        "delta" => 12.0,
        _ => name
            .strip_prefix("eta")
            .and_then(|m| m.trim_start_matches('^').parse::<f64>().ok())
            .map_or(0.0, |m| m / 2.0),
    }
}

fn exponents<S: Scalar>(job: &JobSpec, i: usize) -> Result<ExponentData<S>> {
    ExponentData::from_json(&job.exponents[i])
}

/// Step (a): the rank-four representation and exponents a job describes.
fn rank4_problem<S: Scalar>(job: &JobSpec) -> Result<(Rank4Rep, ExponentData<S>)> {
    let step_a = |e: Error| e.at_step('a');
    match job.construction {
        None => Ok((job.reps[0].rank4().map_err(step_a)?, exponents(job, 0)?)),
        Some(Construction::Tensor) => {
            let (a, b) = (job.reps[0].rank2().map_err(step_a)?, job.reps[1].rank2().map_err(step_a)?);
            Ok((tensor_rep(&a, &b).map_err(step_a)?, tensor_exponents(&exponents(job, 0)?, &exponents(job, 1)?)?))
        }
        Some(Construction::Sym3) => {
            let a = job.reps[0].rank2().map_err(step_a)?;
            Ok((sym3_rep(&a).map_err(step_a)?, sym3_exponents(&exponents(job, 0)?)?))
        }
        Some(Construction::Induction) => {
            let g = job.reps[0].g_rank2().map_err(step_a)?;
            Ok((induced_rep(&g).map_err(step_a)?, induced_exponents(&exponents(job, 0)?)?))
        }
        Some(Construction::Rank2) => Err(Error::Validation(
            "rank-two representations have a single generator of weight 6Tr(L) - 1; use `minimal` or `basis`".into(),
        )),
    }
}

fn classify_job<S: Scalar>(job: &JobSpec) -> Result<(CaseReport, ExponentData<S>)> {
    let (rep, l) = rank4_problem::<S>(job)?;
    let case = classify(&rep, &l).map_err(|e| e.at_step('b'))?;
    Ok((case, l))
}

fn coeffs_job<S: Scalar>(job: &JobSpec) -> Result<(CaseReport, OdeCoefficients<S>)> {
    let (case, l) = classify_job::<S>(job)?;
    let co = coeffs_for(&l, case.case).map_err(|e| e.at_step('c'))?;
    Ok((case, co))
}

fn induction_job<S: Scalar>(job: &JobSpec) -> Result<InductionJob<S>> {
    Ok(InductionJob {
        rep: job.reps[0].g_rank2().map_err(|e| e.at_step('a'))?,
        exponents: exponents(job, 0)?,
        u: job.u.map(|u| S::from_c64(Complex64::new(u[0], u[1]))),
    })
}

fn run_with<S: Scalar>(job: &JobSpec, tol: f64) -> Result<ResultEnvelope> {
    let mut env = ResultEnvelope::new(job);
    let order = job.order;
    let route = job.route.unwrap_or_else(Route::default_for::<S>);
    match job.command {
        Command::Classical => {
            let name = job.name.as_deref().unwrap_or_default();
            let cat = ClassicalCatalog::<S>::new(order)?;
            let s = cat.by_name(name)?;
            env.basis.push(FormJson { weight: classical_weight(name), components: vec![s.to_json()] });
        }
        Command::Check => {
            let cat = ClassicalCatalog::<S>::new(order)?;
            env.residuals.extend(classical_identities(&cat, tol)?);
            env.residuals.extend(level2_identities(&cat, tol)?);
        }
        Command::Classify => {
            env.case = Some(classify_job::<S>(job)?.0);
        }
        Command::Coeffs => {
            let (case, co) = coeffs_job::<S>(job)?;
            env.case = Some(case);
            env.coefficients = Some(co.to_json());
        }
        Command::Solve => solve::<S>(job, &mut env, tol)?,
        Command::Minimal => minimal::<S>(job, &mut env, route, tol)?,
        Command::Basis => basis::<S>(job, &mut env, route, tol)?,
    }
    Ok(env)
}

/// Step (d) alone: Frobenius solutions in `K` at each shifted exponent.
fn solve<S: Scalar>(job: &JobSpec, env: &mut ResultEnvelope, tol: f64) -> Result<()> {
    let (case, co) = coeffs_job::<S>(job)?;
    let step_d = |e: Error| e.at_step('d');
    let mut comps = Vec::with_capacity(co.f.len());
    match case.case {
        Case::Cyclic => {
            let op = build_cyclic_operator(&co);
            for f in &co.f {
                let s = op.frobenius_solve(f, job.order).map_err(step_d)?;
                env.residuals.push(Residual::new(format!("cyclic ODE in K at exponent {}", f.to_c64()), op.residual(&s)?, tol));
                comps.push(s);
            }
        }
        Case::Noncyclic => {
            let sys = build_noncyclic_system(&co).map_err(|e| e.at_step('c'))?;
            let scalar = build_noncyclic_operator(&co);
            for f in &co.f {
                let v0 = left_eigenvector(&sys.b0, f).map_err(step_d)?;
                let x = frobenius_solve_system(&sys.b0, &sys.b1, f, &v0, job.order, Nome::K).map_err(step_d)?;
                let s = x[0].clone();
                env.residuals.push(Residual::new(
                    format!("scalar noncyclic ODE in K at exponent {}", f.to_c64()),
                    scalar.residual(&s)?,
                    tol,
                ));
                comps.push(s);
            }
        }
    }
    env.case = Some(case);
    env.coefficients = Some(co.to_json());
    env.basis.push(FormJson::from_vector(&VectorSeries::new(comps, 0)));
    Ok(())
}

fn rank2_form<S: Scalar>(job: &JobSpec, cat: &ClassicalCatalog<S>, route: Route) -> Result<crate::constructions::Rank2MinimalForm<S>> {
    let rep = job.reps[0].rank2().map_err(|e| e.at_step('a'))?;
    rank2_minimal(&rep, &exponents(job, 0)?, job.order, cat, route).map_err(|e| e.at_step('d'))
}

fn minimal<S: Scalar>(job: &JobSpec, env: &mut ResultEnvelope, route: Route, tol: f64) -> Result<()> {
    let cat = ClassicalCatalog::<S>::new(job.order)?;
    match job.construction {
        Some(Construction::Rank2) => {
            let a = rank2_form(job, &cat, route)?;
            env.basis.push(FormJson::from_vector(&a.components));
        }
        Some(Construction::Induction) => {
            let pair = crate::constructions::induction_minimal_pair(&induction_job::<S>(job)?, job.order, &cat, route, tol)?;
            env.basis.push(FormJson::from_vector(&pair.a));
            env.basis.push(FormJson::from_vector(&pair.b));
            env.push_residuals(&pair.residuals, None);
        }
        Some(Construction::Tensor) | Some(Construction::Sym3) => {
            basis::<S>(job, env, route, tol)?;
            env.basis.truncate(1);
        }
        None => {
            return Err(Error::Validation(
                "a minimal form for a general rank-four representation needs a construction (tensor, sym3 or induction)".into(),
            ))
        }
    }
    Ok(())
}

fn basis<S: Scalar>(job: &JobSpec, env: &mut ResultEnvelope, route: Route, tol: f64) -> Result<()> {
    let cat = ClassicalCatalog::<S>::new(job.order)?;
    let order = job.order;
    match job.construction {
        Some(Construction::Rank2) => {
            let a = rank2_form(job, &cat, route)?;
            if a.source == Rank2Source::NuChi {
                return Err(Error::SymbolicComponent.at_step('f'));
            }
            let da = modular_derivative(&a.components, &cat)?;
            let forms = vec![a.components, da];
            env.basis.extend(forms.iter().map(FormJson::from_vector));
            env.residuals.push(freeness_residual(&forms)?);
        }
        Some(Construction::Tensor) => {
            let (a, b) = (job.reps[0].rank2().map_err(|e| e.at_step('a'))?, job.reps[1].rank2().map_err(|e| e.at_step('a'))?);
            let t = tensor_pipeline(&a, &b, &exponents(job, 0)?, &exponents(job, 1)?, order, &cat, route, tol)?;
            env.coefficients = Some(t.coefficients.to_json());
            env.push_basis(&t.basis, None);
        }
        Some(Construction::Sym3) => {
            let a = job.reps[0].rank2().map_err(|e| e.at_step('a'))?;
            let t = sym3_pipeline(&a, &exponents(job, 0)?, order, &cat, route, tol)?;
            env.coefficients = Some(t.coefficients.to_json());
            env.push_basis(&t.basis, None);
        }
        Some(Construction::Induction) => {
            let t = induction_pipeline(&induction_job::<S>(job)?, order, &cat, route, tol)?;
            env.push_residuals(&t.pair.residuals, None);
            env.push_basis(&t.bases[0], Some("Ind A"));
            env.push_basis(&t.bases[1], Some("Ind B"));
        }
        None => {
            return Err(Error::Validation(
                "a basis for a general rank-four representation needs a construction (tensor, sym3 or induction)".into(),
            ))
        }
    }
    Ok(())
}

/// Writes one envelope.
pub fn emit<W: Write>(env: &ResultEnvelope, format: Format, out: W) -> Result<()> {
    emit_all(std::slice::from_ref(env), format, out)
}

/// Writes several envelopes: a JSON array (a bare object when there is
/// exactly one), or CSV rows `form_index,component,n,re,im`, with a leading
/// `job` column when there is more than one envelope.
pub fn emit_all<W: Write>(envs: &[ResultEnvelope], format: Format, mut out: W) -> Result<()> {
    match format {
        Format::Json => {
            if let [one] = envs {
                serde_json::to_writer_pretty(&mut out, one)?;
            } else {
                serde_json::to_writer_pretty(&mut out, envs)?;
            }
            writeln!(out)?;
        }
        Format::Csv => {
            let multi = envs.len() > 1;
            let mut w = csv::Writer::from_writer(out);
            let mut header = vec!["form_index", "component", "n", "re", "im"];
            if multi {
                header.insert(0, "job");
            }
            w.write_record(&header)?;
            for (j, env) in envs.iter().enumerate() {
                for (i, form) in env.basis.iter().enumerate() {
                    for (c, s) in form.components.iter().enumerate() {
                        for (n, z) in s.coeffs.iter().enumerate() {
                            let mut row = vec![i.to_string(), c.to_string(), n.to_string(), z[0].to_string(), z[1].to_string()];
                            if multi {
                                row.insert(0, j.to_string());
                            }
                            w.write_record(&row)?;
                        }
                    }
                }
            }
            w.flush()?;
        }
    }
    Ok(())
}

/// Reads a job file holding either one job or a list of jobs.
pub fn load_jobs(text: &str) -> Result<Vec<JobSpec>> {
    Ok(match serde_json::from_str::<OneOrMany<JobSpec>>(text)? {
        OneOrMany::One(j) => vec![j],
        OneOrMany::Many(v) => v,
    })
}
