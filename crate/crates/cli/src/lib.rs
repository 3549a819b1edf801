//! Command-line front end for `idealkit`.
//!
//! Every command prints a single JSON document on standard output. Exit
//! codes: 0 pass, 1 a failed check or negative verdict, 2 unusable input.

pub mod casefile;
mod commands;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use idealkit::Error;

pub use commands::Outcome;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 1 for verdicts that are answers about the input, 2 for the rest.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::NotContained | Error::UnitIdeal) => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "idealkit",
    version,
    about = "Exact ideal predicates and witness verification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Debug, Clone, Args)]
pub struct CapsArgs {
    /// Largest power tried when looking for a generator power in an ideal.
    #[arg(long, default_value_t = 16)]
    pub exponent_cap: u32,
    #[arg(long, default_value_t = 200)]
    pub probe_trials: usize,
    #[arg(long, default_value_t = 2)]
    pub probe_degree: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Ambient ring for inline operands.
#[derive(Debug, Clone, Args)]
pub struct RingArgs {
    /// Comma-separated variable names; by default, the names in order of
    /// first appearance in the operands.
    #[arg(long)]
    pub vars: Option<String>,
    /// `Q` or a prime `p`.
    #[arg(long, default_value = "Q")]
    pub field: String,
    #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
    pub order: OrderArg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a case file's witness.
    Verify {
        case: PathBuf,
        /// Reduce the witness modulo this prime first.
        #[arg(long, conflicts_with = "char0")]
        prime: Option<u64>,
        /// Verify over the rationals (the witness must be rational).
        #[arg(long)]
        char0: bool,
        #[command(flatten)]
        caps: CapsArgs,
    },
    /// Re-verify a rational witness modulo every good prime in a range.
    Sweep {
        case: PathBuf,
        /// `LO..HI`, or a comma-separated list of primes.
        #[arg(long)]
        primes: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the report here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        caps: CapsArgs,
    },
    /// Reduced Groebner basis.
    Gb {
        #[arg(long)]
        ideal: String,
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Ideal membership of a polynomial.
    Member {
        #[arg(long)]
        f: String,
        #[arg(long)]
        ideal: String,
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Krull dimension of the quotient ring.
    Dim {
        #[arg(long)]
        ideal: String,
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Height of an ideal, optionally inside the quotient by another.
    Height {
        #[arg(long)]
        ideal: String,
        /// Ideal `I` with `ideal ⊇ I`; the height is taken in `k[T]/I`.
        #[arg(long = "in")]
        within: Option<String>,
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Decide whether the radical of an ideal equals a given prime ideal.
    RadicalEq {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        prime_ideal: String,
        #[arg(long, default_value_t = 16)]
        exponent_cap: u32,
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Randomized search for zero divisors modulo an ideal.
    PrimeProbe {
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = 2)]
        degree: u32,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Check that an ideal is the maximal ideal of a rational point.
    Maximal {
        #[arg(long)]
        ideal: String,
        /// Comma-separated coordinates.
        #[arg(long)]
        point: String,
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Fixed-size coefficient code of an ideal.
    Encode {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Generators recovered from a code file.
    Decode {
        #[arg(long)]
        code: PathBuf,
    },
    /// Complexity of a presentation.
    Complexity {
        #[arg(long)]
        ideal: String,
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Points over a prime field where every generator vanishes.
    Points {
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = idealkit::transfer::DEFAULT_POINT_BUDGET)]
        budget: u128,
        #[command(flatten)]
        ring: RingArgs,
    },
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = write!(stderr, "{e}");
            return code;
        }
    };
    match commands::execute(&cli.command) {
        Ok(out) => {
            if let Err(e) = out.emit(stdout) {
                let _ = writeln!(stderr, "error: {e}");
                return 2;
            }
            out.exit
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            let code = e.exit_code();
            if code == 1 {
                let _ = writeln!(stdout, "{}", commands::error_json(&e));
            }
            code
        }
    }
}
