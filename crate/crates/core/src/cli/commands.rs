use std::fmt::Write as _;

use crate::cli::config::{parse_config, validate_tol, ConfigError, RunConfig};
use crate::cli::format;
use crate::error::Error;
use crate::model::Block;
use crate::numerics::CScalar;
use crate::spectra::{eigenpairs, spectrum_only, BlockSpectrum, Sign};
use crate::symmetry::{cfrac_f, commutator_norm, CFracConfig};
use crate::verify::{Analysis, Check};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_PHASE: i32 = 3;

/// Default bound for the continued-fraction checks.
pub const CFRAC_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Build,
    Spectrum,
    Operators,
    Verify,
    Cfrac,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Build => "build",
            Command::Spectrum => "spectrum",
            Command::Operators => "operators",
            Command::Verify => "verify",
            Command::Cfrac => "cfrac",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    C,
    P,
    T,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Options {
    pub tol: Option<f64>,
    pub vectors: bool,
    pub which: Option<Which>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn failure(stdout: String, stderr: String, code: i32) -> Self {
        Self {
            stdout,
            stderr,
            code,
        }
    }
}

/// Runs one command against a config document.
pub fn run(command: Command, config_text: &str, options: &Options) -> Outcome {
    let config = match parse_config(config_text) {
        Ok(c) => c,
        Err(e) => return config_error(&e),
    };
    if let Some(tol) = options.tol {
        if let Err(e) = validate_tol(tol) {
            return config_error(&e);
        }
    }
    let result = match command {
        Command::Build => Ok(cmd_build(&config)),
        Command::Spectrum => Ok(cmd_spectrum(&config, options.vectors)),
        Command::Operators => cmd_operators(&config, options.which),
        Command::Verify => cmd_verify(&config, options.tol.unwrap_or(config.tol)),
        Command::Cfrac => cmd_cfrac(&config, options.tol.unwrap_or(config.tol.max(CFRAC_TOL))),
    };
    match result {
        Ok(outcome) => outcome,
        Err(e) => computation_error(command, &config, &e),
    }
}

pub fn config_error(e: &ConfigError) -> Outcome {
    Outcome::failure(String::new(), format!("config error: {e}\n"), EXIT_CONFIG)
}

fn computation_error(command: Command, config: &RunConfig, e: &Error) -> Outcome {
    match e {
        Error::NotUnbroken { block_id, phase } => {
            let kind = config.spec.blocks()[*block_id].kind();
            Outcome::failure(
                String::new(),
                format!(
                    "phase error: {} requires every block UNBROKEN; block {block_id} ({kind}) is {phase}\n",
                    command.name()
                ),
                EXIT_PHASE,
            )
        }
        other => Outcome::failure(
            String::new(),
            format!("error: {}: {other}\n", command.name()),
            EXIT_CHECK_FAILED,
        ),
    }
}

pub fn cmd_build(config: &RunConfig) -> Outcome {
    Outcome::ok(format::matrix("H", &config.spec.assemble()))
}

fn block_line(block: &Block, sp: &BlockSpectrum) -> String {
    let mut line = format!(
        "BLOCK {} kind={} offset={} phase={}",
        sp.block_id,
        block.kind(),
        sp.offset,
        sp.phase
    );
    if let Some(phi) = sp.phi {
        write!(line, " phi={}", format::float(phi)).expect("String write");
    }
    let values: Vec<String> = sp
        .eigenvalues
        .iter()
        .map(|&z| format::eigenvalue(z))
        .collect();
    write!(line, " eigenvalues={}", values.join(", ")).expect("String write");
    line
}

pub fn cmd_spectrum(config: &RunConfig, vectors: bool) -> Outcome {
    let spectra = spectrum_only(&config.spec);
    let mut out = String::new();
    for (block, sp) in config.spec.blocks().iter().zip(&spectra) {
        out.push_str(&block_line(block, sp));
        out.push('\n');
    }
    if vectors {
        for (id, pair) in eigenpairs(&spectra).enumerate() {
            let sign = match pair.sign_index {
                Sign::Plus => '+',
                Sign::Minus => '-',
            };
            writeln!(
                out,
                "VECTOR {id} block={} sign={sign}1 value={}\n{}",
                pair.block_id,
                format::eigenvalue(pair.value),
                format::vector_entries(&pair.vector)
            )
            .expect("String write");
        }
    }
    Outcome::ok(out)
}

pub fn cmd_operators(config: &RunConfig, which: Option<Which>) -> Result<Outcome, Error> {
    let analysis = Analysis::new(&config.spec)?;
    let ops = &analysis.operators;
    let mut out = String::new();
    let wanted = |w: Which| which.is_none_or(|x| x == w);
    if wanted(Which::C) {
        out.push_str(&format::matrix("C", &ops.c));
    }
    if wanted(Which::P) {
        out.push_str(&format::matrix("P", &ops.p));
    }
    if wanted(Which::T) {
        writeln!(out, "ANTILINEAR T conjugates={}", ops.t.conjugates).expect("String write");
        out.push_str(&format::matrix("T.A", &ops.t.matrix_part));
    }
    Ok(Outcome::ok(out))
}

pub fn cmd_verify(config: &RunConfig, tol: f64) -> Result<Outcome, Error> {
    let analysis = Analysis::new(&config.spec)?;
    let report = analysis.report(tol)?;
    let mut out = format!(
        "SYSTEM dim={} blocks={} levels={}\n",
        config.spec.dimension(),
        config.spec.blocks().len(),
        config.spec.num_levels()
    );
    for check in &report.checks {
        out.push_str(&format::check_line(check));
        out.push('\n');
    }
    let passed = report.all_passed();
    writeln!(out, "RESULT {}", if passed { "PASS" } else { "FAIL" }).expect("String write");
    Ok(if passed {
        Outcome::ok(out)
    } else {
        Outcome::failure(out, String::new(), EXIT_CHECK_FAILED)
    })
}

pub fn cmd_cfrac(config: &RunConfig, tol: f64) -> Result<Outcome, Error> {
    let cfg = CFracConfig::new(config.beta, config.cfrac_depth)?;
    let analysis = Analysis::new(&config.spec)?;
    let c = &analysis.operators.c;
    let f = cfrac_f(c, &cfg)?;

    // F must act on each eigenvector as the scalar fraction of its C eigenvalue.
    let mut eig_residual: f64 = 0.0;
    for pair in eigenpairs(&analysis.spectra) {
        let expected = cfg.scalar(pair.sign_index.value())?;
        let fv = f.matvec(&pair.vector)?;
        let diff = fv.add(&pair.vector.scale(CScalar::new(-expected, 0.0)))?;
        eig_residual = eig_residual.max(diff.max_abs());
    }

    let checks = [
        Check {
            name: "commutator_hf",
            residual: commutator_norm(&analysis.hamiltonian, &f)?,
            tol,
        },
        Check {
            name: "commutator_cf",
            residual: commutator_norm(c, &f)?,
            tol,
        },
        Check {
            name: "cfrac_eigenvalues",
            residual: eig_residual,
            tol,
        },
    ];
    let mut out = format!(
        "CFRAC beta={} depth={}\n",
        format::float(cfg.beta),
        cfg.depth
    );
    out.push_str(&format::matrix("F", &f));
    for check in &checks {
        out.push_str(&format::check_line(check));
        out.push('\n');
    }
    Ok(if checks.iter().all(Check::passed) {
        Outcome::ok(out)
    } else {
        Outcome::failure(out, String::new(), EXIT_CHECK_FAILED)
    })
}
