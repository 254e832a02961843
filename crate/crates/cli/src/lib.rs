//! The `corep` command line: Hopf-axiom checks, link quivers, classification reports,
//! fusion rings, comodule analysis and coalgebra export.
//!
//! `run` is the whole program minus process exit, so tests can drive it in memory.

mod commands;
mod instance;

use std::ffi::OsString;
use std::fmt;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use commands::{classify_quiver, ClassifyMode, ClassifyReport};

/// Exit code when every check passed.
pub const EXIT_OK: i32 = 0;
/// Exit code when a check ran and failed.
pub const EXIT_FAIL: i32 = 1;
/// Exit code for usage, parse and structural errors.
pub const EXIT_USAGE: i32 = 2;

/// Any error that ends a command with exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError(pub String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Parser, Debug)]
#[command(name = "corep", version, about = "Exact computations with coalgebras, link quivers and comodules")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Cyclotomic order used to print scalars as polynomials in z.
    #[arg(long, global = true, value_name = "n")]
    pub field_order: Option<u32>,
    /// Group window for infinite families; cosemisimple window for fusion rings.
    #[arg(long, global = true, value_name = "N")]
    pub window: Option<i64>,
    /// Run every computation on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the Hopf axioms on generators and defining relations.
    VerifyHopf { descriptor: String },
    /// Compute the link quiver of a truncation.
    LinkQuiver {
        descriptor: String,
        /// Truncation level N of H^N.
        #[arg(short = 'N')]
        n: Option<i64>,
    },
    /// Separated-quiver classes and the discreteness verdict for a descriptor or quiver JSON file.
    Classify {
        input: String,
        #[arg(short = 'N')]
        n: Option<i64>,
        /// Treat a quiver file as the unit component of a Hopf algebra with infinite coradical.
        #[arg(long)]
        infinite_coradical: bool,
    },
    /// Fusion ring of the coradical, with the based-ring axioms checked.
    Fusion {
        descriptor: String,
        #[arg(short = 'N')]
        n: Option<i64>,
    },
    /// Comodule checks over H(e±,f±,u,v).
    Comodule(ComoduleArgs),
    /// Write a truncation as coalgebra JSON.
    Export {
        descriptor: String,
        #[arg(short = 'N')]
        n: Option<i64>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ComoduleAction {
    Verify,
    Indec,
    Iso,
    Loewy,
    Dimvec,
    Decompose,
}

#[derive(Args, Debug)]
pub struct ComoduleArgs {
    pub action: ComoduleAction,
    #[arg(long, default_value = "Hefuv")]
    pub family: String,
    /// Truncation level N of H^N the comodules live in.
    #[arg(short = 'N', default_value_t = 2)]
    pub n: i64,
    /// The simple comodule spanned by e_i, f_i.
    #[arg(long = "S", value_name = "i")]
    pub s: Vec<i64>,
    #[arg(long)]
    pub trivial: bool,
    #[arg(long)]
    pub sign: bool,
    #[arg(long = "U")]
    pub u: bool,
    #[arg(long = "V")]
    pub v: bool,
    #[arg(long = "V0")]
    pub v0: bool,
    /// W(k) for a nonzero scalar k.
    #[arg(long = "W", value_name = "k")]
    pub w: Vec<String>,
    /// Two simple blocks whose ⊙′ product to decompose.
    #[arg(long, num_args = 2, value_names = ["LEFT", "RIGHT"])]
    pub tensor: Option<Vec<String>>,
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    match commands::dispatch(&cli) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
