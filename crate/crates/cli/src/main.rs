use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};

use satake_gl2::{
    compute, run_suite, CliError, ComputeCommand, OutputFormat, Suite, SweepConfig, EXIT_OK, EXIT_USAGE,
    EXIT_VERIFICATION_FAILED, OUT_DIR_ENV,
};

#[derive(Debug, Parser)]
#[command(name = "satake-gl2", version)]
#[command(about = "Exact checks for the GL(2) equivariant Grassmannian and its coherent model")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a verification suite and write a report.
    Verify(VerifyArgs),
    /// Print one computed object as JSON.
    Compute {
        #[command(subcommand)]
        command: ComputeCommand,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    suite: Suite,
    #[arg(long, default_value_t = 4)]
    lam_max: i64,
    #[arg(long, default_value_t = 4)]
    mu_bound: i64,
    #[arg(long, default_value_t = 20)]
    max_degree: i64,
    #[arg(long, default_value_t = 3)]
    k_max: usize,
    /// Primes for the finite-field character sums.
    #[arg(long, value_delimiter = ',', default_value = "3,5,7")]
    primes: Vec<u64>,
    /// Report path. Without it the report goes to `$SATAKE_GL2_OUT_DIR/<suite>.<ext>`,
    /// or to stdout when that variable is unset.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, env = OUT_DIR_ENV, hide_env_values = true)]
    out_dir: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long)]
    jobs: Option<usize>,
}

fn verify(args: VerifyArgs) -> anyhow::Result<u8> {
    let output_path = args
        .out
        .or_else(|| args.out_dir.map(|d| d.join(format!("{}.{}", args.suite, args.format.extension()))));
    let config = SweepConfig {
        lam_max: args.lam_max,
        mu_bound: args.mu_bound,
        max_degree: args.max_degree,
        k_max: args.k_max,
        finite_field_primes: args.primes,
        output_format: args.format,
        output_path,
    };
    config.validate()?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = args.jobs {
        anyhow::ensure!(jobs > 0, CliError::Config("--jobs must be at least 1".into()));
        pool = pool.num_threads(jobs);
    }
    let pool = pool.build().context("starting worker pool")?;

    let start = Instant::now();
    let report = pool.install(|| run_suite(args.suite, &config))?;
    let elapsed = start.elapsed();

    match &config.output_path {
        Some(path) => {
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir).map_err(CliError::from)?;
            }
            let file = File::create(path).map_err(CliError::from)?;
            let mut w = BufWriter::new(file);
            report.write(config.output_format, &mut w)?;
            w.flush().map_err(CliError::from)?;
        }
        None => report.write(config.output_format, io::stdout().lock())?,
    }
    eprintln!(
        "{}: {} cases, {} passed, {} failed in {:.2}s",
        report.suite,
        report.summary.cases,
        report.summary.passed,
        report.summary.failed,
        elapsed.as_secs_f64()
    );
    Ok(if report.passed() { EXIT_OK } else { EXIT_VERIFICATION_FAILED })
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Verify(args) => verify(args),
        Command::Compute { command } => {
            let value = compute(&command)?;
            println!("{}", serde_json::to_string(&value)?);
            Ok(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
