use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use structa_cli::suites::{self, SuiteConfig};
use structa_cli::{derive, doc, exit_code, parse_bounded, render_report, CliError, DEFAULT_MAX_SIZE};

/// Check laws of finite structures, derive constructions, run suites.
#[derive(Parser)]
#[command(name = "structa", version)]
struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Largest document size accepted.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_SIZE)]
    max_size: usize,
    /// Seed for sampled checks.
    #[arg(long, global = true, env = "STRUCTA_SEED", default_value_t = suites::DEFAULT_SEED)]
    seed: u64,
    /// Worker threads; reports do not depend on it.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every law that applies to a document.
    Check {
        /// Document path, or `-` for standard input.
        file: PathBuf,
    },
    /// Build a new document from an existing one.
    Derive {
        /// One of the operations listed by `structa formats`.
        op: String,
        file: PathBuf,
        /// Operation arguments, such as subgroup elements or an object name.
        args: Vec<String>,
        /// Write the result here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run a named law suite.
    Suite {
        /// Suite name, or `all`.
        name: String,
    },
    /// Describe the document kinds and derive operations.
    Formats,
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    let io = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn formats() -> String {
    let mut s = doc::schema_text();
    s.push_str("\nderive operations:\n");
    for (name, kinds, what) in derive::OPS {
        let kinds: Vec<&str> = kinds.iter().map(|k| k.name()).collect();
        s.push_str(&format!("  {name:<10} {:<22} {what}\n", kinds.join(", ")));
    }
    s
}

fn run(cli: &Cli) -> Result<i32, CliError> {
    match &cli.command {
        Command::Check { file } => {
            let outcome = structa_cli::check_text(&read(file)?, cli.max_size);
            if let Ok(report) = &outcome {
                print!("{}", render_report(report, cli.json));
            }
            let code = exit_code(&outcome);
            outcome?;
            Ok(code)
        }
        Command::Derive {
            op,
            file,
            args,
            output,
        } => {
            let input = parse_bounded(&read(file)?, cli.max_size)?;
            let text = derive::run_derive(&input, op, args)?.render();
            match output {
                Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
                    path: path.display().to_string(),
                    source,
                })?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::Suite { name } => {
            let config = SuiteConfig { seed: cli.seed };
            let report = suites::run_suite(name, &config)?;
            print!("{}", render_report(&report, cli.json));
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Formats => {
            print!("{}", formats());
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.into())
        .build()
        .expect("thread pool");
    match pool.install(|| run(&cli)) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
