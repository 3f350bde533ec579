use crate::algebra_core::{is_prime_u64, DEFAULT_PRIMES};
use crate::error::{Error, Result};
use crate::invariant_eval::{RankConfig, Slice, DEFAULT_COLUMN_LIMIT};
use serde::Deserialize;
use std::path::{Path, PathBuf};

pub const ENV_PRIMES: &str = "SPTRACE_PRIMES";
pub const ENV_WORKERS: &str = "SPTRACE_WORKERS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Keys accepted in a `--config` file (`key = value`, TOML syntax).
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub format: Option<Format>,
    pub primes: Option<Vec<u64>>,
    pub seed: Option<u64>,
    pub workers: Option<usize>,
    pub slice: Option<String>,
    pub rank_samples: Option<usize>,
    pub max_columns: Option<usize>,
    pub data_dir: Option<PathBuf>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.into(), source })?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }
}

/// Everything a command needs besides its own arguments.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub format: Format,
    pub primes: Vec<u64>,
    pub seed: u64,
    pub workers: Option<usize>,
    pub slice: Slice,
    pub samples: Option<usize>,
    /// `None` when `--force` lifts the ceiling.
    pub max_columns: Option<usize>,
    pub data_dir: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            format: Format::Text,
            primes: DEFAULT_PRIMES.to_vec(),
            seed: 1,
            workers: None,
            slice: Slice::Full,
            samples: None,
            max_columns: Some(DEFAULT_COLUMN_LIMIT),
            data_dir: None,
        }
    }
}

/// Flag values; `None` leaves the lower layers alone.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub format: Option<Format>,
    pub primes: Option<Vec<u64>>,
    pub seed: Option<u64>,
    pub workers: Option<usize>,
    pub slice: Option<Slice>,
    pub samples: Option<usize>,
    pub max_columns: Option<usize>,
    pub force: bool,
    pub data_dir: Option<PathBuf>,
}

fn parse_primes(s: &str) -> Result<Vec<u64>> {
    s.split(',').map(|p| p.trim().parse().map_err(|_| Error::Config(format!("bad prime '{p}' in {ENV_PRIMES}")))).collect()
}

impl RunConfig {
    /// Defaults, then the file, then the environment, then flags.
    pub fn resolve(file: Option<FileConfig>, env: impl Fn(&str) -> Option<String>, flags: Overrides) -> Result<Self> {
        let mut c = RunConfig::default();
        if let Some(f) = file {
            if let Some(v) = f.format {
                c.format = v;
            }
            if let Some(v) = f.primes {
                c.primes = v;
            }
            if let Some(v) = f.seed {
                c.seed = v;
            }
            if let Some(v) = f.slice {
                c.slice = v.parse()?;
            }
            c.workers = f.workers.or(c.workers);
            c.samples = f.rank_samples.or(c.samples);
            c.max_columns = f.max_columns.or(c.max_columns);
            c.data_dir = f.data_dir.or(c.data_dir);
        }
        if let Some(v) = env(ENV_PRIMES) {
            c.primes = parse_primes(&v)?;
        }
        if let Some(v) = env(ENV_WORKERS) {
            c.workers = Some(v.trim().parse().map_err(|_| Error::Config(format!("bad worker count '{v}' in {ENV_WORKERS}")))?);
        }
        if let Some(v) = flags.format {
            c.format = v;
        }
        if let Some(v) = flags.primes {
            c.primes = v;
        }
        if let Some(v) = flags.seed {
            c.seed = v;
        }
        if let Some(v) = flags.slice {
            c.slice = v;
        }
        c.workers = flags.workers.or(c.workers);
        c.samples = flags.samples.or(c.samples);
        c.max_columns = flags.max_columns.or(c.max_columns);
        c.data_dir = flags.data_dir.or(c.data_dir);
        if flags.force {
            c.max_columns = None;
        }
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if self.primes.len() != 2 || self.primes[0] == self.primes[1] {
            return Err(Error::Config("need exactly two distinct primes".into()));
        }
        for &p in &self.primes {
            if !(p > 1 << 30 && p < 1 << 31 && p % 4 == 1 && is_prime_u64(p)) {
                return Err(Error::Config(format!("{p} must be a prime between 2^30 and 2^31 that is 1 mod 4")));
            }
        }
        if self.workers == Some(0) {
            return Err(Error::Config("worker count must be positive".into()));
        }
        Ok(())
    }

    pub fn rank(&self) -> RankConfig {
        RankConfig {
            primes: self.primes.clone(),
            seeds: vec![self.seed, self.seed.wrapping_add(1)],
            slice: self.slice,
            workers: self.workers,
            samples: self.samples,
            max_columns: self.max_columns,
        }
    }
}
