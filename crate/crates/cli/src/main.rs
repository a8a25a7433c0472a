mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::{error_exit_code, error_json, EXIT_USAGE};

#[derive(Parser, Debug)]
#[command(name = "dchase", version, about = "Check kernel/cokernel complex lemmas, the cross lemma and the snake lemma on concrete instances")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Machine-readable JSON output on stdout.
    #[arg(long, global = true)]
    pub json: bool,
    /// Field override: a prime, or Q.
    #[arg(long, global = true, value_name = "P|Q")]
    pub field: Option<String>,
    /// No human-readable output (the exit code still reports the outcome).
    #[arg(long, short, global = true)]
    pub quiet: bool,
    /// Leave elapsed time out of the output.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check commutativity and exactness of a grid.
    Validate { grid: PathBuf },
    /// Homology of the two kernel complexes of a kernel-orientation grid.
    Kcl(LemmaArgs),
    /// Homology of the two cokernel complexes of a cokernel-orientation grid.
    Ccl(LemmaArgs),
    /// Decide the three statements of the cross lemma.
    Cross { cross: PathBuf },
    /// The six-term sequence of a snake diagram.
    Snake {
        snake: PathBuf,
        /// Also derive the sequence from the grid lemmas and compare.
        #[arg(long)]
        via_grids: bool,
    },
    /// The Hom grid of a short exact and a right exact sequence.
    Hom {
        aseq: PathBuf,
        eseq: PathBuf,
        /// Report the additivity defect and the summand test.
        #[arg(long)]
        additivity: bool,
    },
    /// Write a seeded random instance.
    Gen(GenArgs),
    /// Run the seeded property suites.
    Selftest {
        #[arg(long, default_value_t = 200)]
        seeds: u64,
    },
}

#[derive(Args, Debug)]
pub struct LemmaArgs {
    pub grid: PathBuf,
    /// Only this (1-based) position.
    #[arg(long)]
    pub position: Option<usize>,
    /// Print the isomorphism matrices.
    #[arg(long)]
    pub iso: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GenKind {
    Complex,
    Grid,
    Cross,
    Snake,
    Hom,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum OrientationArg {
    Kernel,
    Cokernel,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    pub kind: GenKind,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Row lengths of the staircase, e.g. 3,3,2.
    #[arg(long, value_delimiter = ',', default_value = "3,3,3")]
    pub shape: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    pub max_dim: usize,
    /// Number of terms of a generated complex.
    #[arg(long, default_value_t = 5)]
    pub length: usize,
    #[arg(long, value_enum, default_value_t = OrientationArg::Kernel)]
    pub orientation: OrientationArg,
    /// Output file (stdout if absent).
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

/// Writes one block to stdout; a closed pipe is not an error.
pub fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}").and_then(|_| out.flush());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let started = (!cli.global.no_timing).then(Instant::now);
    let name = commands::name(&cli.command);
    let code = match commands::run(&cli) {
        Ok(commands::Outcome::Report(report)) => {
            if cli.global.json {
                emit(&serde_json::to_string_pretty(&report.to_json(started)).expect("valid JSON"));
            } else if !cli.global.quiet {
                emit(&report.to_text(started));
            }
            report.exit_code()
        }
        Ok(commands::Outcome::Done(code)) => code,
        Err(commands::Failure { digest, error }) => {
            if cli.global.json {
                emit(&serde_json::to_string_pretty(&error_json(name, &digest, &error)).expect("valid JSON"));
            }
            eprintln!("error: {error}");
            error_exit_code(&error)
        }
    };
    ExitCode::from(code as u8)
}
