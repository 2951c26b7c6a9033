use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use qbroadcast::bloch::decompose;
use qbroadcast::cloning::broadcast;
use qbroadcast::criteria::{nonbroadcastable_predicate, Tolerances};
use qbroadcast::io::{load_state, survey_csv, survey_json, sweep_csv, sweep_json, Format, Metadata};
use qbroadcast::scan::{
    evaluate_outputs, locate_threshold, reproduce_table, survey_with_env, sweep, validate_monotone, Family, ParamGrid,
    Predicate, Slice, Table, MONOTONE_SAMPLES,
};
use qbroadcast::Result;

#[derive(Parser)]
#[command(
    name = "qbroadcast",
    version,
    about = "Broadcasting of correlations through local cloners"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a state family over a parameter grid.
    Sweep {
        #[arg(long)]
        family: Family,
        /// `default`, `step=<h>`, `n=<N>` or `points=<p>;<p>` (comma-separated parameters).
        #[arg(long, default_value = "default")]
        grid: ParamGrid,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value = "csv")]
        format: Format,
    },
    /// Bisect for the parameter where a predicate changes value.
    Threshold {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        predicate: Predicate,
        #[arg(long)]
        lo: f64,
        #[arg(long)]
        hi: f64,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        /// Fixed gamma for the TPCS slice (alpha varies).
        #[arg(long, default_value_t = 0.0)]
        gamma: f64,
    },
    /// Classify Haar-random qubit-qudit states.
    Survey {
        #[arg(long)]
        samples: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        dim: usize,
        /// Environment dimension of the induced measure (default 2 * dim).
        #[arg(long)]
        env: Option<usize>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value = "csv")]
        format: Format,
    },
    /// Compare the protocol against closed-form expressions.
    Table {
        #[arg(long)]
        which: Table,
    },
    /// Run the protocol on a state read from a JSON file.
    Broadcast {
        #[arg(long)]
        state: PathBuf,
    },
}

fn run(cli: Cli) -> Result<()> {
    let tol = Tolerances::default();
    match cli.command {
        Command::Sweep {
            family,
            grid,
            out,
            format,
        } => {
            let records = sweep(family, &grid, &tol)?;
            let text = match format {
                Format::Csv => sweep_csv(family, &records),
                Format::Json => sweep_json(family, &records, &tol)?,
            };
            std::fs::write(&out, text)?;
            eprintln!("{} records written to {}", records.len(), out.display());
        }
        Command::Threshold {
            family,
            predicate,
            lo,
            hi,
            tol: t,
            gamma,
        } => {
            let slice = match family {
                Family::Mems => Slice::mems(),
                Family::Tpcs => Slice::tpcs(gamma),
            };
            validate_monotone(slice, predicate, lo, hi, MONOTONE_SAMPLES, &tol)?;
            let res = locate_threshold(slice, predicate, lo, hi, t, &tol)?;
            println!("{}", serde_json::to_string_pretty(&res)?);
        }
        Command::Survey {
            samples,
            seed,
            dim,
            env,
            out,
            format,
        } => {
            let report = survey_with_env(samples, seed, dim, env.unwrap_or(2 * dim))?;
            let text = match format {
                Format::Csv => survey_csv(&report),
                Format::Json => survey_json(&report)?,
            };
            std::fs::write(&out, text)?;
            println!("samples={} blue={} red={}", report.samples, report.blue, report.red);
        }
        Command::Table { which } => {
            let report = reproduce_table(which)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
        Command::Broadcast { state } => {
            let (rho, shape) = load_state(&state)?;
            let out = broadcast(&rho, &shape)?;
            let input = decompose(&rho, &shape)?;
            let report = json!({
                "metadata": Metadata::new(None, tol),
                "input": input,
                "nonbroadcastable": nonbroadcastable_predicate(&input),
                "nonlocal": decompose(&out.rho_14, &out.nonlocal_shape())?,
                "alice_local": decompose(&out.rho_13, &out.alice_shape())?,
                "evaluation": evaluate_outputs(&out, &tol)?,
            });
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
