//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 for
//! usage, configuration and fixture errors.

mod commands;
mod config;

pub use commands::Output;
pub use config::{FileConfig, Format, Overrides, RunConfig, ENV_PRIMES, ENV_WORKERS};

use crate::error::Error;
use crate::invariant_eval::Slice;
use clap::{Args, Parser, Subcommand};
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "sptrace", version, about = "Poincaré series and trace invariants of symplectic matrix tuples")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// key = value file; flags take precedence
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Two primes, comma separated
    #[arg(long, global = true, value_delimiter = ',')]
    pub primes: Option<Vec<u64>>,
    /// Runs use this seed and the next one
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// full, upper-triangular, upper-triangular-refined, pi or traceless-pi
    #[arg(long, global = true, value_parser = parse_slice)]
    pub slice: Option<Slice>,
    /// Rows per rank run
    #[arg(long, global = true)]
    pub rank_samples: Option<usize>,
    #[arg(long, global = true)]
    pub max_columns: Option<usize>,
    /// Lift the column ceiling
    #[arg(long, global = true)]
    pub force: bool,
    /// Directory holding the fixtures and MANIFEST.sha256
    #[arg(long, global = true)]
    pub data_dir: Option<PathBuf>,
}

fn parse_slice(s: &str) -> Result<Slice, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Taylor coefficients of a series fixture
    Expand(ExpandArgs),
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Empirical dimensions from all trace words
    Dims(DimsArgs),
    #[command(subcommand)]
    Words(WordsCmd),
}

#[derive(Args, Debug)]
pub struct ExpandArgs {
    #[arg(long)]
    pub fixture: String,
    #[arg(long, default_value_t = 10)]
    pub max_degree: u32,
    #[arg(long)]
    pub check_functional_equation: bool,
    #[arg(long)]
    pub check_palindrome: bool,
}

#[derive(Subcommand, Debug)]
pub enum VerifyCmd {
    /// Generators span every component up to the bound
    Msg(MsgArgs),
    /// Jacobian rank of trace functions on the slice
    HsopJacobian {
        #[arg(long, default_value = "w2_hash.words")]
        words: String,
        #[arg(long, default_value = "hsop_point.qmat")]
        point: String,
    },
    /// Free module basis over the parameters
    ModuleBasis {
        #[arg(long, default_value = "j_basis.basis")]
        basis: String,
        #[arg(long, default_value = "w2_hash.words")]
        hsop: String,
        #[arg(long, default_value = "n3_1p1k_star.series")]
        series: String,
        #[arg(long, default_value_t = 10)]
        max_degree: u32,
        /// Look for products completing `?` entries
        #[arg(long)]
        search: bool,
    },
    /// The degree 14 relation
    Syzygy {
        #[arg(long, default_value = "syzygy_6_8.poly")]
        relation: String,
        #[arg(long, default_value = "n3_k1_star.series")]
        series: String,
        /// Random traceless points per prime
        #[arg(long = "samples", default_value_t = 100)]
        points: usize,
        #[arg(long, default_value_t = 12)]
        independent_through: u32,
        #[arg(long, default_value_t = 14)]
        relation_degree: u32,
    },
    /// Generators needed per degree against the shipped counts
    Histogram(MsgArgs),
    /// GL2 modules spanned by the new generators of each degree
    Gl2 {
        #[arg(long, default_value = "msg136.words")]
        words: String,
        #[arg(long)]
        degree: Option<u32>,
    },
}

#[derive(Args, Debug)]
pub struct MsgArgs {
    #[arg(long)]
    pub words: String,
    #[arg(long)]
    pub series: String,
    #[arg(long, default_value_t = 8)]
    pub max_degree: u32,
    /// Also check single removals for generators up to this degree
    #[arg(long)]
    pub minimality: Option<u32>,
}

#[derive(Args, Debug)]
pub struct DimsArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k1: usize,
    #[arg(long)]
    pub k2: usize,
    #[arg(long, num_args = 2, value_names = ["I", "J"], conflicts_with_all = ["multidegree", "total", "max_total"])]
    pub bidegree: Option<Vec<u32>>,
    #[arg(long, num_args = 1.., conflicts_with_all = ["total", "max_total"])]
    pub multidegree: Option<Vec<u32>>,
    #[arg(long, conflicts_with = "max_total")]
    pub total: Option<u32>,
    /// Every total degree from 0 up to this
    #[arg(long)]
    pub max_total: Option<u32>,
    /// Annotate agreement with this series
    #[arg(long)]
    pub series: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum WordsCmd {
    /// One word per nonzero trace class
    Enumerate {
        #[arg(long)]
        alphabet: String,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, num_args = 1..)]
        multidegree: Option<Vec<u32>>,
    },
    /// Canonical representative of each word
    Canon {
        #[arg(long)]
        alphabet: String,
        #[arg(required = true)]
        words: Vec<String>,
    },
}

/// Parses `args` (program name first), runs, writes the report to `out`
/// and diagnostics to `err`; returns the exit code.
pub fn run<I, T>(args: I, env: impl Fn(&str) -> Option<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{}", e.render()) } else { write!(out, "{}", e.render()) };
            return code;
        }
    };
    let result = (|| {
        let file = cli.global.config.as_deref().map(FileConfig::load).transpose()?;
        let g = cli.global.clone();
        let flags = Overrides {
            format: g.format,
            primes: g.primes,
            seed: g.seed,
            workers: g.workers,
            slice: g.slice,
            samples: g.rank_samples,
            max_columns: g.max_columns,
            force: g.force,
            data_dir: g.data_dir,
        };
        let cfg = RunConfig::resolve(file, &env, flags)?;
        let output = commands::dispatch(&cli.command, &cfg)?;
        Ok::<_, Error>((cfg.format, output))
    })();
    match result {
        Ok((format, output)) => {
            let _ = out.write_all(output.render(format).as_bytes());
            if output.ok {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_input_error() {
                EXIT_USAGE
            } else {
                EXIT_FAILED
            }
        }
    }
}

/// Entry point of the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), |k| std::env::var(k).ok(), &mut stdout.lock(), &mut stderr.lock())
}
