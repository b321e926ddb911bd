//! Command line front end for `polyhermite`.

pub mod bench;
pub mod format;
pub mod random;

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use polyhermite::colbasis::column_basis;
use polyhermite::hermite::{hermite_diagonal, hermite_form, HermiteForm};
use polyhermite::kernel::minimal_kernel_basis;
use polyhermite::oracle::{module_equal, naive_hermite};
use polyhermite::{PolyMatrix, PrimeModulus, Shift};
use thiserror::Error;

use format::{parse_matrix, serialize_matrix, FormatError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_SINGULAR: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_CHECK_FAILED: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "polyhermite", version, about = "Hermite normal forms of polynomial matrices over Z/pZ")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Column Hermite form of a square nonsingular matrix.
    Hnf(Unary),
    /// Diagonal entries of the Hermite form, as an n x 1 matrix.
    Diagonals(Unary),
    /// Minimal kernel basis, optionally shifted.
    Kernel {
        #[command(flatten)]
        io: Unary,
        /// Comma separated shift, one value per column of the input.
        #[arg(long, allow_hyphen_values = true)]
        shift: Option<String>,
    },
    /// Column basis of the input's column space.
    Colbasis(Unary),
    /// Hermite form by plain elimination.
    Oracle(Unary),
    /// Verify that CANDIDATE is the Hermite form of INPUT.
    Check {
        input: PathBuf,
        candidate: PathBuf,
    },
    /// Reproducible random nonsingular matrix.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        deg: usize,
        #[arg(long, default_value_t = 65521)]
        modulus: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time the fast form against the elimination oracle.
    Bench {
        /// Comma separated dimensions.
        #[arg(long, default_value = "4,8,16")]
        n: String,
        /// Comma separated degree bounds.
        #[arg(long, default_value = "4")]
        deg: String,
        #[arg(long, default_value_t = 65521)]
        modulus: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        repeat: usize,
    },
}

#[derive(Debug, clap::Args)]
struct Unary {
    /// Matrix document, or `-` for stdin.
    input: PathBuf,
    /// Write the result here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Error)]
enum Failure {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error("{0}")]
    Invalid(String),
    #[error("matrix is singular")]
    Singular,
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    CheckFailed(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) | Failure::Io(_) | Failure::Internal(_) => EXIT_USAGE,
            Failure::Format { .. } | Failure::Invalid(_) => EXIT_INVALID,
            Failure::Singular => EXIT_SINGULAR,
            Failure::CheckFailed(_) => EXIT_CHECK_FAILED,
        }
    }
}

impl From<polyhermite::Error> for Failure {
    fn from(e: polyhermite::Error) -> Self {
        use polyhermite::Error as E;
        match e {
            E::Singular => Failure::Singular,
            E::Inconsistent(_) => Failure::Internal(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

/// Runs the tool on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(cli.command, stdin, stdout) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.code()
        }
    }
}

fn execute(command: Command, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Hnf(io) => {
            let f = load(&io.input, stdin)?;
            require_square(&f)?;
            emit(hermite_form(&f)?.matrix(), io.out.as_deref(), stdout)
        }
        Command::Oracle(io) => {
            let f = load(&io.input, stdin)?;
            require_square(&f)?;
            emit(naive_hermite(&f)?.matrix(), io.out.as_deref(), stdout)
        }
        Command::Diagonals(io) => {
            let f = load(&io.input, stdin)?;
            require_square(&f)?;
            let diagonal = hermite_diagonal(&f)?;
            let column = PolyMatrix::from_columns(diagonal.len(), vec![diagonal], f.modulus());
            emit(&column, io.out.as_deref(), stdout)
        }
        Command::Kernel { io, shift } => {
            let f = load(&io.input, stdin)?;
            let shift = match shift {
                Some(text) => parse_list::<i64>(&text, "shift")?,
                None => vec![0; f.cols()],
            };
            if shift.len() != f.cols() {
                return Err(Failure::Invalid(format!(
                    "shift has {} values but the matrix has {} columns",
                    shift.len(),
                    f.cols()
                )));
            }
            let kernel = minimal_kernel_basis(&f, &Shift::new(shift))?;
            emit(&kernel.basis, io.out.as_deref(), stdout)
        }
        Command::Colbasis(io) => {
            let f = load(&io.input, stdin)?;
            emit(&column_basis(&f), io.out.as_deref(), stdout)
        }
        Command::Check { input, candidate } => {
            let f = load(&input, stdin)?;
            let h = load(&candidate, stdin)?;
            let verdict = check(&f, &h)?;
            match verdict {
                None => writeln!(stdout, "valid").map_err(io_failure),
                Some(reason) => {
                    writeln!(stdout, "invalid: {reason}").map_err(io_failure)?;
                    Err(Failure::CheckFailed(reason))
                }
            }
        }
        Command::Random { n, deg, modulus, seed, out } => {
            let modulus = PrimeModulus::new(modulus).map_err(|e| Failure::Invalid(e.to_string()))?;
            if n == 0 {
                return Err(Failure::Invalid("n must be positive".into()));
            }
            let f = random::random_nonsingular(n, deg, modulus, seed).ok_or_else(|| {
                Failure::Invalid(format!("no nonsingular draw in {} attempts", random::MAX_ATTEMPTS))
            })?;
            emit(&f, out.as_deref(), stdout)
        }
        Command::Bench { n, deg, modulus, seed, repeat } => {
            let modulus = PrimeModulus::new(modulus).map_err(|e| Failure::Invalid(e.to_string()))?;
            let ns = parse_list::<usize>(&n, "n")?;
            let degs = parse_list::<usize>(&deg, "deg")?;
            let mut rows = Vec::new();
            for &n in &ns {
                for &d in &degs {
                    rows.push(bench::bench_cell(n, d, modulus, seed, repeat)?);
                }
            }
            write!(stdout, "{}", bench::render_table(&rows)).map_err(io_failure)
        }
    }
}

/// `None` when `h` is the Hermite form of `f`, otherwise the reason it is not.
fn check(f: &PolyMatrix, h: &PolyMatrix) -> Result<Option<String>, Failure> {
    if f.modulus() != h.modulus() {
        return Ok(Some(format!(
            "candidate modulus {} differs from input modulus {}",
            h.modulus().value(),
            f.modulus().value()
        )));
    }
    if f.rows() != h.rows() || f.cols() != h.cols() {
        return Ok(Some(format!(
            "candidate is {}x{} but the input is {}x{}",
            h.rows(),
            h.cols(),
            f.rows(),
            f.cols()
        )));
    }
    if let Err(e) = HermiteForm::check(h) {
        return Ok(Some(e.to_string()));
    }
    if !module_equal(f, h)? {
        return Ok(Some("candidate does not generate the column space of the input".into()));
    }
    Ok(None)
}

fn require_square(f: &PolyMatrix) -> Result<(), Failure> {
    if f.is_square() {
        Ok(())
    } else {
        Err(Failure::Invalid(format!("expected a square matrix, got {}x{}", f.rows(), f.cols())))
    }
}

fn parse_list<T: std::str::FromStr>(text: &str, name: &str) -> Result<Vec<T>, Failure> {
    text.split(',')
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| Failure::Usage(format!("--{name}: cannot parse `{s}`"))))
        .collect()
}

fn load(path: &Path, stdin: &mut dyn Read) -> Result<PolyMatrix, Failure> {
    let text = if path == Path::new("-") {
        let mut text = String::new();
        stdin.read_to_string(&mut text).map_err(io_failure)?;
        text
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?
    };
    parse_matrix(&text).map_err(|source| Failure::Format { path: path.display().to_string(), source })
}

fn emit(m: &PolyMatrix, out: Option<&Path>, stdout: &mut dyn Write) -> Result<(), Failure> {
    let text = serialize_matrix(m);
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(io_failure),
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure::Io(e.to_string())
}
