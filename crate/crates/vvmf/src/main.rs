use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;
use vvmf::cli::{self, Command, Construction, Format, JobSpec, Precision, ResultEnvelope};

#[derive(Parser)]
#[command(name = "vvmf", version, about = "q-expansions of free bases of vector-valued modular forms")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Dump one catalog series (E2, E4, E6, Delta, j, K, f, g, h, Z, eta^m, theta*_4).
    Classical {
        #[arg(long)]
        name: String,
        #[command(flatten)]
        common: Common,
    },
    /// Case, minimal weight and weight tuple.
    Classify(Common),
    /// Coefficients a, b, c of the differential equation.
    Coeffs(Common),
    /// Frobenius solutions in K at each shifted exponent.
    Solve(Common),
    /// The minimal-weight form of a construction.
    Minimal(Common),
    /// A free basis with residual diagnostics.
    Basis(Common),
    /// Classical and level-two identity residuals.
    Check(Common),
}

#[derive(Args)]
struct Common {
    /// Job file: one JSON job or a list of jobs.
    #[arg(long)]
    spec: Option<PathBuf>,
    #[arg(long, value_enum)]
    construction: Option<Construction>,
    #[arg(long)]
    order: Option<usize>,
    #[arg(long, value_enum)]
    precision: Option<Precision>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads for a list of jobs.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

fn jobs_for(command: Command, common: &Common, name: Option<String>) -> vvmf::Result<Vec<JobSpec>> {
    let mut jobs = match &common.spec {
        Some(path) => cli::load_jobs(&std::fs::read_to_string(path)?)?,
        None => vec![JobSpec::new(command)],
    };
    for job in &mut jobs {
        job.command = command;
        if let Some(c) = common.construction {
            job.construction = Some(c);
        }
        if let Some(n) = common.order {
            job.order = n;
        }
        if let Some(p) = common.precision {
            job.precision = Some(p);
        }
        if name.is_some() {
            job.name.clone_from(&name);
        }
    }
    Ok(jobs)
}

fn run_one(job: &JobSpec, tol: Option<f64>) -> Option<ResultEnvelope> {
    let start = Instant::now();
    let result = cli::run(job, tol);
    let secs = start.elapsed().as_secs_f64();
    match result {
        Ok(env) => {
            eprintln!("{:?}: {secs:.3} s", job.command);
            for r in env.residuals.iter().filter(|r| !r.passed()) {
                eprintln!("residual above tolerance: {} = {:e} (tolerance {:e})", r.name, r.value, r.tolerance);
            }
            Some(env)
        }
        Err(e) => {
            eprintln!("{:?} failed after {secs:.3} s: {e}", job.command);
            None
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, common, name) = match cli.command {
        Sub::Classical { name, common } => (Command::Classical, common, Some(name)),
        Sub::Classify(c) => (Command::Classify, c, None),
        Sub::Coeffs(c) => (Command::Coeffs, c, None),
        Sub::Solve(c) => (Command::Solve, c, None),
        Sub::Minimal(c) => (Command::Minimal, c, None),
        Sub::Basis(c) => (Command::Basis, c, None),
        Sub::Check(c) => (Command::Check, c, None),
    };
    let setup = cli::tolerance_from_env().and_then(|tol| Ok((tol, jobs_for(command, &common, name)?)));
    let (tol, jobs) = match setup {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(common.jobs.max(1)).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let results: Vec<Option<ResultEnvelope>> = pool.install(|| jobs.par_iter().map(|j| run_one(j, tol)).collect());
    let failed_jobs = results.iter().any(Option::is_none);
    let envs: Vec<ResultEnvelope> = results.into_iter().flatten().collect();

    let written = match &common.out {
        Some(path) => File::create(path)
            .map_err(vvmf::Error::from)
            .and_then(|f| {
                let mut w = BufWriter::new(f);
                cli::emit_all(&envs, common.format, &mut w)?;
                w.flush()?;
                Ok(())
            }),
        None => cli::emit_all(&envs, common.format, std::io::stdout().lock()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if failed_jobs {
        ExitCode::from(2)
    } else if envs.iter().all(ResultEnvelope::passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
