//! The `ronco` command-line tool.
//!
//! [`run`] is the whole program minus process plumbing, so tests can drive
//! it in-process and compare output bytes.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use ronco_core::algebra::{
    free_nil2, mu_to_ronco, ronco_to_mu, verify_mu, verify_variety, Variety, VerificationReport,
};
use ronco_core::format::{
    algebra_to_json, mu_to_json, parse_algebra, render_leib, render_ronco, report_to_json,
    AlgebraData,
};
use ronco_core::free_lie::{lyndon_words, witt_dim};
use ronco_core::homology::{h1_adjoint, hl1, hl2, hr0};
use ronco_core::leibniz::FreeLeibniz;
use ronco_core::ronco::{graded_dim, graded_kernel_basis, truncate_to_structure, FreeRonco};
use ronco_core::term::parse_term;
use ronco_core::{max_degree_from_env, Error};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "ronco",
    version,
    about = "Exact computations in free Lie, Leibniz and Ronco algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

type Count = u32;

fn positive() -> clap::builder::RangedI64ValueParser<Count> {
    clap::value_parser!(Count).range(1..)
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the Lyndon words of length N over D letters.
    Lyndon {
        #[arg(long, value_parser = positive())]
        gens: Count,
        #[arg(long, value_parser = positive())]
        len: Count,
    },
    /// Dimensions of the free Lie algebra in degrees 1..=N.
    Witt {
        #[arg(long, value_parser = positive())]
        gens: Count,
        #[arg(long, value_parser = positive())]
        max: Count,
    },
    /// Evaluate a bracket term in the free Leibniz algebra.
    LeibBracket {
        #[arg(long, value_parser = positive())]
        gens: Count,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
    },
    /// Evaluate a bracket term in the free Ronco algebra.
    RoncoEval {
        #[arg(long, value_parser = positive())]
        gens: Count,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
    },
    /// Dimensions of the free Ronco algebra in degrees 1..=N.
    RoncoDims {
        #[arg(long, value_parser = positive())]
        gens: Count,
        #[arg(long, value_parser = positive())]
        max: Count,
    },
    /// Basis of the kernel of the degree-N bracket map onto the free Lie algebra.
    GradedKernel {
        #[arg(long, value_parser = positive())]
        gens: Count,
        #[arg(long, value_parser = positive())]
        deg: Count,
    },
    /// Structure constants of the free Ronco algebra truncated above degree N.
    RoncoTruncate {
        #[arg(long, value_parser = positive())]
        gens: Count,
        #[arg(long, value_parser = positive())]
        max: Count,
        /// Output file; standard output when omitted or "-".
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Structure constants of the free nilpotent class-2 Lie algebra.
    FreeNil2 {
        #[arg(long, value_parser = positive())]
        dim: Count,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check an algebra file against the identities of a variety.
    Verify {
        #[arg(long, value_enum)]
        variety: VarietyArg,
        /// Algebra file, or "-" for standard input.
        file: PathBuf,
    },
    /// Convert between Ronco algebras and μ-algebras.
    Convert {
        #[arg(long, value_enum)]
        to: Target,
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Low-degree homology of an algebra file, as JSON.
    Homology {
        #[arg(long, value_enum)]
        which: Which,
        file: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VarietyArg {
    Leibniz,
    Lie,
    Ronco,
    Symmetric,
    Mu,
    MuSymmetric,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Target {
    Mu,
    Ronco,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Which {
    Hl1,
    Hl2,
    Hr0,
    H1ad,
}

/// Command failure: the exit code and what to print on stderr.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotInVariety(report) => Failure {
                code: EXIT_VIOLATION,
                message: report.to_string(),
            },
            Error::Internal(_) => Failure {
                code: EXIT_INTERNAL,
                message: format!("error: {e}"),
            },
            other => Failure {
                code: EXIT_INPUT,
                message: format!("error: {other}"),
            },
        }
    }
}

fn input_error(message: String) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: format!("error: {message}"),
    }
}

fn io_failure(path: &std::path::Path, e: io::Error) -> Failure {
    input_error(format!("{}: {e}", path.display()))
}

fn is_stdio(path: &std::path::Path) -> bool {
    path.as_os_str() == "-"
}

fn read_input(path: &std::path::Path) -> Result<String, Failure> {
    if is_stdio(path) {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| io_failure(path, e))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| io_failure(path, e))
    }
}

fn load(path: &std::path::Path) -> Result<AlgebraData, Failure> {
    Ok(parse_algebra(&read_input(path)?)?)
}

fn emit(out: &mut dyn Write, target: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match target {
        Some(path) if !is_stdio(path) => fs::write(path, text).map_err(|e| io_failure(path, e)),
        _ => out
            .write_all(text.as_bytes())
            .map_err(|e| input_error(format!("writing output: {e}"))),
    }
}

fn kind_mismatch(expected: &str, data: &AlgebraData) -> Failure {
    let found = match data {
        AlgebraData::Leibniz(_) => "leibniz",
        AlgebraData::Mu(_) => "mu",
    };
    input_error(format!(
        "expected an algebra of kind {expected:?}, found {found:?}"
    ))
}

fn report_outcome(report: VerificationReport, out: &mut String) -> i32 {
    out.push_str(&report.to_string());
    out.push('\n');
    if report.is_ok() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    let mut text = String::new();
    let mut code = EXIT_OK;
    match command {
        Command::Lyndon { gens, len } => {
            for w in lyndon_words(gens as usize, len as usize)? {
                text.push_str(&w.render(gens as usize));
                text.push('\n');
            }
        }
        Command::Witt { gens, max } => {
            for n in 1..=max as usize {
                text.push_str(&format!("{n}\t{}\n", witt_dim(gens as usize, n)?));
            }
        }
        Command::LeibBracket { gens, expr } => {
            let algebra = FreeLeibniz {
                gens: gens as usize,
                max_degree: max_degree_from_env()?,
            };
            let value = parse_term(&expr)?.evaluate(&algebra)?;
            text = render_leib(&value, gens as usize) + "\n";
        }
        Command::RoncoEval { gens, expr } => {
            let algebra = FreeRonco {
                gens: gens as usize,
                max_degree: max_degree_from_env()?,
            };
            let value = parse_term(&expr)?.evaluate(&algebra)?;
            text = render_ronco(&value, gens as usize) + "\n";
        }
        Command::RoncoDims { gens, max } => {
            for n in 1..=max as usize {
                text.push_str(&format!("{n}\t{}\n", graded_dim(gens as usize, n)?));
            }
        }
        Command::GradedKernel { gens, deg } => {
            let basis = graded_kernel_basis(gens as usize, deg as usize, max_degree_from_env()?)?;
            text.push_str(&format!("dimension {}\n", basis.len()));
            for k in &basis {
                text.push_str(&render_ronco(k, gens as usize));
                text.push('\n');
            }
        }
        Command::RoncoTruncate { gens, max, output } => {
            let a = truncate_to_structure(gens as usize, max as usize, max_degree_from_env()?)?;
            emit(out, output.as_ref(), &algebra_to_json(&a))?;
        }
        Command::FreeNil2 { dim, output } => {
            emit(
                out,
                output.as_ref(),
                &algebra_to_json(&free_nil2(dim as usize)?),
            )?;
        }
        Command::Verify { variety, file } => {
            let data = load(&file)?;
            let report = match (variety, &data) {
                (VarietyArg::Mu, AlgebraData::Mu(m)) => verify_mu(m, false),
                (VarietyArg::MuSymmetric, AlgebraData::Mu(m)) => verify_mu(m, true),
                (VarietyArg::Mu | VarietyArg::MuSymmetric, _) => {
                    return Err(kind_mismatch("mu", &data))
                }
                (v, AlgebraData::Leibniz(a)) => verify_variety(a, structure_variety(v)),
                (_, AlgebraData::Mu(_)) => return Err(kind_mismatch("leibniz", &data)),
            };
            code = report_outcome(report, &mut text);
        }
        Command::Convert { to, file, output } => {
            let data = load(&file)?;
            let converted = match (to, &data) {
                (Target::Mu, AlgebraData::Leibniz(a)) => mu_to_json(&ronco_to_mu(a)?),
                (Target::Ronco, AlgebraData::Mu(m)) => algebra_to_json(&mu_to_ronco(m)?),
                (Target::Mu, _) => return Err(kind_mismatch("leibniz", &data)),
                (Target::Ronco, _) => return Err(kind_mismatch("mu", &data)),
            };
            emit(out, output.as_ref(), &converted)?;
        }
        Command::Homology { which, file } => {
            let data = load(&file)?;
            let AlgebraData::Leibniz(a) = &data else {
                return Err(kind_mismatch("leibniz", &data));
            };
            let report = match which {
                Which::Hl1 => hl1(a)?,
                Which::Hl2 => hl2(a)?,
                Which::Hr0 => hr0(a)?,
                Which::H1ad => h1_adjoint(a)?,
            };
            text = report_to_json(&report) + "\n";
        }
    }
    emit(out, None, &text)?;
    Ok(code)
}

fn structure_variety(v: VarietyArg) -> Variety {
    match v {
        VarietyArg::Leibniz => Variety::Leibniz,
        VarietyArg::Lie => Variety::Lie,
        VarietyArg::Ronco => Variety::Ronco,
        VarietyArg::Symmetric => Variety::SymmetricLeibniz,
        VarietyArg::Mu | VarietyArg::MuSymmetric => unreachable!("handled by the caller"),
    }
}

/// Runs the tool on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
                EXIT_INPUT
            } else {
                let _ = out.write_all(rendered.as_bytes());
                EXIT_OK
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "{}", f.message);
            f.code
        }
    }
}
