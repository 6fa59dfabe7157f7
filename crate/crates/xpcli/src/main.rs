use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use uca_xp::{list_scenarios, load_scenario, prepare, run, RunOptions, XpError};

#[derive(Parser)]
#[command(name = "uca-xp", version, about = "Reproduce UCA beam defocus experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a built-in scenario or a scenario file.
    Run {
        scenario: String,
        /// Output file; defaults to the scenario's output path, then stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Base seed, replacing the scenario's.
        #[arg(long)]
        seed: Option<u64>,
        /// Number of points of a range sweep.
        #[arg(long)]
        points: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Check a scenario and list every problem found.
    Validate { path: String },
    /// List built-in scenarios.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn write_out(out: Option<PathBuf>, body: &[u8]) -> Result<(), XpError> {
    match out {
        Some(path) => {
            let io_err = |source| XpError::Io {
                path: path.clone(),
                source,
            };
            let mut w = BufWriter::new(File::create(&path).map_err(io_err)?);
            w.write_all(body).and_then(|_| w.flush()).map_err(io_err)
        }
        None => io::stdout().lock().write_all(body).map_err(|source| XpError::Io {
            path: "<stdout>".into(),
            source,
        }),
    }
}

fn execute(cli: Cli) -> Result<(), XpError> {
    match cli.command {
        Command::Run {
            scenario,
            out,
            seed,
            points,
            format,
        } => {
            let sc = prepare(load_scenario(&scenario)?, RunOptions { seed, points })?;
            let table = run(&sc)?;
            let body = match format {
                Format::Csv => table.to_csv_string(),
                Format::Json => table.to_json_string(&sc.name),
            };
            let out = out.or_else(|| sc.output.as_ref().map(|o| PathBuf::from(&o.path)));
            write_out(out, body.as_bytes())
        }
        Command::Validate { path } => {
            let sc = load_scenario(&path)?;
            let diags = sc.validate();
            if diags.is_empty() {
                println!("{path}: ok");
                Ok(())
            } else {
                Err(XpError::Invalid(diags))
            }
        }
        Command::List => {
            for (name, desc) in list_scenarios() {
                println!("{name:<6}  {desc}");
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
