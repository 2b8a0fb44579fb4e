use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use radical_reparam_cli::{run_pipeline, write_outputs, CliError, Emit, JobConfig, EXIT_OK};

/// Optimal piecewise radical reparameterization of a rational curve.
#[derive(Debug, Parser)]
#[command(name = "radreparam", version)]
struct Args {
    /// JSON job file with "coordinates" and optional settings.
    #[arg(long)]
    input: PathBuf,
    /// Absolute quadrature tolerance (overrides the job file).
    #[arg(long)]
    tolerance: Option<f64>,
    /// Number of equi-spaced samples (overrides the job file).
    #[arg(long)]
    samples: Option<usize>,
    /// Artifacts to write, comma separated (overrides the job file).
    #[arg(long, value_enum, value_delimiter = ',')]
    emit: Option<Vec<Emit>>,
    /// Equally spaced breakpoints added inside every piece.
    #[arg(long)]
    extra_breakpoints: Option<usize>,
    #[arg(long, default_value = ".")]
    output_dir: PathBuf,
}

fn run(args: Args) -> Result<(), CliError> {
    let mut cfg = JobConfig::from_path(&args.input)?;
    if let Some(tol) = args.tolerance {
        cfg.tolerance = tol;
    }
    if let Some(n) = args.samples {
        cfg.samples = n;
    }
    if let Some(emit) = args.emit {
        cfg.emit = emit.into_iter().collect();
    }
    if let Some(k) = args.extra_breakpoints {
        cfg.extra_breakpoints = k;
    }
    cfg.validate()?;
    let out = run_pipeline(&cfg)?;
    let written = write_outputs(&out, cfg.emit.iter().copied(), &args.output_dir)?;
    let r = &out.result;
    println!("u_p = {:.6}  u_phi* = {:.6}  u_final = {:.6}", r.u_p(), r.u_phi(), r.u_final());
    for path in written {
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(EXIT_OK);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(radical_reparam_cli::EXIT_CONFIG);
        }
    };
    match run(args) {
        Ok(()) => ExitCode::from(EXIT_OK),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
