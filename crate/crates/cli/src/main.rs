use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use dtring_cli::commands::{self, Options, Report, EXIT_USAGE};
use dtring_cli::DEFAULT_CORPUS;

#[derive(Parser)]
#[command(name = "dtring", version, about = "Finite ring tables: structural sets, ring classes and theorem checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Largest ring order that will be built.
    #[arg(long, global = true)]
    cap: Option<usize>,

    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Directory for cached structural sets.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Units, idempotents, tripotents, nilpotents, J and Delta of a ring.
    Sets { expr: String },
    /// Class memberships of a ring, with witnesses.
    Classify { expr: String },
    /// Check a registered statement (or `all`) over a corpus.
    Verify {
        theorem: String,
        /// Corpus file; the built-in default corpus when omitted.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Find the first decomposition of an element.
    Decompose {
        expr: String,
        element: usize,
        /// TripotentDelta, SumIdem, DiffIdemCommuting, DiffIdemOrth,
        /// SquareIdem or IdemInvolution.
        kind: String,
    },
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    if let Some(n) = cli.jobs {
        anyhow::ensure!(n > 0, "--jobs must be positive");
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    let opts = Options {
        cap: cli.cap,
        cache: cli.cache.clone(),
    };
    let report: Report = match &cli.command {
        Command::Sets { expr } => commands::cmd_sets(expr, &opts)?,
        Command::Classify { expr } => commands::cmd_classify(expr, &opts)?,
        Command::Decompose { expr, element, kind } => commands::cmd_decompose(expr, *element, kind, &opts)?,
        Command::Verify { theorem, corpus } => {
            let text = match corpus {
                Some(path) => fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?,
                None => DEFAULT_CORPUS.to_string(),
            };
            commands::cmd_verify(theorem, &text, &opts)?
        }
    };
    let out = cli.out.clone().or_else(|| report.output_path.as_ref().map(PathBuf::from));
    match (&out, cli.format) {
        (Some(path), format) => {
            fs::write(path, report.to_json() + "\n").with_context(|| format!("writing {}", path.display()))?;
            if format == Format::Table {
                print!("{}", report.table);
            }
        }
        (None, Format::Json) => println!("{}", report.to_json()),
        (None, Format::Table) => print!("{}", report.table),
    }
    Ok(report.exit_code)
}

fn main() -> ExitCode {
    tracing_subscriber::fmt()
        .with_writer(std::io::stderr)
        .with_env_filter(
            tracing_subscriber::EnvFilter::try_from_default_env().unwrap_or_else(|_| "warn".into()),
        )
        .init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
