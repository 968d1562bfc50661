use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use ptsym::cli::commands::EXIT_CONFIG;
use ptsym::cli::{run, Command, Options, Which};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Cmd {
    Build,
    Spectrum,
    Operators,
    Verify,
    Cfrac,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum WhichArg {
    #[value(name = "C")]
    C,
    #[value(name = "P")]
    P,
    #[value(name = "T")]
    T,
}

/// PT-symmetric block Hamiltonians: spectra, C/P/T operators and symmetry checks.
#[derive(Debug, Parser)]
#[command(name = "ptsym", version)]
struct Args {
    command: Cmd,
    /// JSON system description
    config: PathBuf,
    /// Override the residual tolerance from the config
    #[arg(long)]
    tol: Option<f64>,
    /// Also print eigenvectors (spectrum)
    #[arg(long)]
    vectors: bool,
    /// Print only one operator (operators)
    #[arg(long, value_enum)]
    which: Option<WhichArg>,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_CONFIG as u8 } else { 0 });
        }
    };
    let text = match std::fs::read_to_string(&args.config) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("config error: cannot read {}: {e}", args.config.display());
            return ExitCode::from(EXIT_CONFIG as u8);
        }
    };
    let command = match args.command {
        Cmd::Build => Command::Build,
        Cmd::Spectrum => Command::Spectrum,
        Cmd::Operators => Command::Operators,
        Cmd::Verify => Command::Verify,
        Cmd::Cfrac => Command::Cfrac,
    };
    let options = Options {
        tol: args.tol,
        vectors: args.vectors,
        which: args.which.map(|w| match w {
            WhichArg::C => Which::C,
            WhichArg::P => Which::P,
            WhichArg::T => Which::T,
        }),
    };
    let outcome = run(command, &text, &options);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
