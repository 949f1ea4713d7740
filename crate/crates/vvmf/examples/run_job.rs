//! Runs a JSON job file through the same entry point as the command-line
//! tool and prints the envelope. Defaults to `examples/jobs/sym3_basis.json`.

use vvmf::cli::{emit_all, load_jobs, run, Format};

fn main() -> vvmf::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/jobs/sym3_basis.json").into());
    let jobs = load_jobs(&std::fs::read_to_string(&path)?)?;
    let envs = jobs.iter().map(|j| run(j, None)).collect::<vvmf::Result<Vec<_>>>()?;
    for env in &envs {
        eprintln!("{:?}: {} forms, passed {}", env.job.command, env.basis.len(), env.passed());
    }
    emit_all(&envs, Format::Json, std::io::stdout().lock())
}
