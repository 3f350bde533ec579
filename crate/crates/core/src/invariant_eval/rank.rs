use super::eval::{check_words, FastPoint};
use super::monomials::{trace_monomials, Target};
use super::reduce::Reducer;
use super::sample::{SampleSpace, Slice};
use crate::algebra_core::{is_prime_u64, PrimeField, DEFAULT_PRIMES};
use crate::error::{Error, Result};
use crate::words::{Alphabet, Word};
use rayon::prelude::*;
use serde::Serialize;

pub const DEFAULT_COLUMN_LIMIT: usize = 5000;
pub const DEFAULT_SEEDS: [u64; 2] = [1, 2];

/// Knobs shared by every rank computation.
#[derive(Clone, Debug, PartialEq)]
pub struct RankConfig {
    pub primes: Vec<u64>,
    pub seeds: Vec<u64>,
    pub slice: Slice,
    /// Worker threads for row generation; `None` uses the global pool.
    pub workers: Option<usize>,
    /// Rows per run; default ⌈1.25·columns⌉ + 10.
    pub samples: Option<usize>,
    pub max_columns: Option<usize>,
}

impl Default for RankConfig {
    fn default() -> Self {
        RankConfig {
            primes: DEFAULT_PRIMES.to_vec(),
            seeds: DEFAULT_SEEDS.to_vec(),
            slice: Slice::Full,
            workers: None,
            samples: None,
            max_columns: Some(DEFAULT_COLUMN_LIMIT),
        }
    }
}

pub fn min_samples(columns: usize) -> usize {
    (columns * 5).div_ceil(4)
}

pub fn default_samples(columns: usize) -> usize {
    min_samples(columns) + 10
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Run {
    pub prime: u64,
    pub seed: u64,
    pub rank: usize,
    pub rows: usize,
    /// Row index (0-based) of the last rank increase.
    pub last_increase: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RankReport {
    pub columns: usize,
    pub rank: usize,
    pub samples: usize,
    pub runs: Vec<Run>,
    /// True when the first prime pair disagreed and fresh primes decided.
    pub retried: bool,
}

/// Generator words evaluated on points of a sample space.
#[derive(Clone, Debug)]
pub struct Evaluator {
    space: SampleSpace,
    gens: Vec<Word>,
}

pub fn with_workers<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match workers {
        None => Ok(f()),
        Some(0) => Err(Error::Config("worker count must be positive".into())),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

/// Largest prime ≡ 1 mod 4 strictly below `below`.
pub fn prime_below(below: u64) -> u64 {
    let mut q = below - 1;
    while q % 4 != 1 || !is_prime_u64(q) {
        q -= 1;
    }
    q
}

impl Evaluator {
    pub fn new(n: usize, alphabet: &Alphabet, slice: Slice, gens: Vec<Word>) -> Result<Self> {
        check_words(alphabet, &gens)?;
        Ok(Evaluator { space: SampleSpace::new(n, alphabet, slice)?, gens })
    }

    pub fn space(&self) -> &SampleSpace {
        &self.space
    }

    pub fn generators(&self) -> &[Word] {
        &self.gens
    }

    pub fn degrees(&self) -> Vec<Vec<u32>> {
        let k = self.space.alphabet().len();
        self.gens.iter().map(|w| w.multidegree(k)).collect()
    }

    /// Generator traces at sample `index`, as integers in [0, p).
    pub fn generator_values(&self, field: PrimeField, seed: u64, index: u64) -> Result<Vec<u64>> {
        let pt = self.space.point(field, seed, index)?;
        let fast = FastPoint::new(self.space.ctx(), &pt)?;
        Ok(self.gens.iter().map(|w| fast.trace(w)).collect())
    }

    fn run(&self, columns: &[Vec<usize>], prime: u64, seed: u64, samples: usize) -> Result<Run> {
        let field = PrimeField::new(prime)?;
        let mut red = Reducer::new(prime, columns.len());
        let mut last_increase = None;
        let batch = 64.max(4 * rayon::current_num_threads());
        let mut next = 0usize;
        while next < samples && !red.is_full() {
            let end = (next + batch).min(samples);
            let rows: Vec<Vec<u64>> = (next..end)
                .into_par_iter()
                .map(|i| {
                    let g = self.generator_values(field, seed, i as u64)?;
                    Ok(columns.iter().map(|c| c.iter().fold(1u64, |acc, &j| acc * g[j] % prime)).collect())
                })
                .collect::<Result<_>>()?;
            for (k, row) in rows.into_iter().enumerate() {
                if red.insert(row) {
                    last_increase = Some(next + k);
                    if red.is_full() {
                        break;
                    }
                }
            }
            next = end;
        }
        let rows = last_increase.map_or(next, |l| if red.is_full() { l + 1 } else { next });
        Ok(Run { prime, seed, rank: red.rank(), rows, last_increase })
    }

    fn runs(&self, columns: &[Vec<usize>], primes: &[u64], seeds: &[u64], samples: usize) -> Result<Vec<Run>> {
        let jobs: Vec<(u64, u64)> = primes.iter().flat_map(|&p| seeds.iter().map(move |&s| (p, s))).collect();
        jobs.into_par_iter().map(|(p, s)| self.run(columns, p, s, samples)).collect()
    }

    /// Rank of the evaluation matrix whose columns are products of
    /// generators, agreed across every configured prime and seed.
    pub fn column_rank(&self, columns: &[Vec<usize>], cfg: &RankConfig) -> Result<RankReport> {
        let m = columns.len();
        if let Some(limit) = cfg.max_columns {
            if m > limit {
                return Err(Error::TooManyColumns { cols: m, limit });
            }
        }
        if cfg.primes.is_empty() || cfg.seeds.is_empty() {
            return Err(Error::Config("need at least one prime and one seed".into()));
        }
        if columns.iter().flatten().any(|&g| g >= self.gens.len()) {
            return Err(Error::Incompatible("column refers to a missing generator".into()));
        }
        let samples = cfg.samples.unwrap_or_else(|| default_samples(m));
        if samples < min_samples(m) {
            return Err(Error::InsufficientSamples { have: samples, need: min_samples(m) });
        }
        if m == 0 {
            return Ok(RankReport { columns: 0, rank: 0, samples, runs: vec![], retried: false });
        }
        with_workers(cfg.workers, || {
            let mut runs = self.runs(columns, &cfg.primes, &cfg.seeds, samples)?;
            let mut retried = false;
            if !agree(&runs) {
                retried = true;
                let lo = *cfg.primes.iter().min().unwrap();
                let p1 = prime_below(lo);
                let fresh = [p1, prime_below(p1)];
                let seeds: Vec<u64> = cfg.seeds.iter().map(|s| s.wrapping_add(1000)).collect();
                let again = self.runs(columns, &fresh, &seeds, samples)?;
                if !agree(&again) {
                    let all: Vec<String> = runs.iter().chain(&again).map(|r| format!("p={} seed={} rank={}", r.prime, r.seed, r.rank)).collect();
                    return Err(Error::Disagreement(all.join(", ")));
                }
                runs.extend(again);
            }
            let last = runs.last().unwrap();
            let rank = last.rank;
            for r in runs.iter().filter(|r| r.rank == rank && r.rank < m) {
                let trailing = samples - r.last_increase.map_or(0, |l| l + 1);
                if 2 * trailing < samples - r.rank {
                    return Err(Error::InsufficientSamples { have: samples, need: samples + r.rank });
                }
            }
            Ok(RankReport { columns: m, rank, samples, runs, retried })
        })?
    }

    /// Dimension of the span of all generator monomials of the target.
    pub fn graded_dimension(&self, target: &Target, cfg: &RankConfig) -> Result<(Vec<Vec<usize>>, RankReport)> {
        let cols = trace_monomials(&self.degrees(), target);
        let rep = self.column_rank(&cols, cfg)?;
        Ok((cols, rep))
    }
}

fn agree(runs: &[Run]) -> bool {
    runs.windows(2).all(|w| w[0].rank == w[1].rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn words(a: &Alphabet, ws: &[&str]) -> Vec<Word> {
        ws.iter().map(|w| parse_word(w, a).unwrap()).collect()
    }

    #[test]
    fn one_matrix_n1_traces() {
        // n = 1: Sp₂ = SL₂ acting on M₂.
        let a = Alphabet::parse("z").unwrap();
        let ev = Evaluator::new(1, &a, Slice::Full, words(&a, &["z", "z z", "z z*", "z*"])).unwrap();
        let cfg = RankConfig::default();
        let (cols, rep) = ev.graded_dimension(&Target::Total(2), &cfg).unwrap();
        assert_eq!(cols.len(), 5);
        // z* = tr(z)·I − z here, so everything lies in ⟨(tr z)², tr z²⟩
        assert_eq!(rep.rank, 2);
        assert_eq!(rep.runs.len(), 4);
        assert!(!rep.retried);
    }

    #[test]
    fn guards() {
        let a = Alphabet::parse("z").unwrap();
        let ev = Evaluator::new(1, &a, Slice::Full, words(&a, &["z"])).unwrap();
        let cols = vec![vec![0]; 3];
        let mut cfg = RankConfig { samples: Some(2), ..Default::default() };
        assert!(matches!(ev.column_rank(&cols, &cfg), Err(Error::InsufficientSamples { .. })));
        cfg.samples = None;
        cfg.max_columns = Some(2);
        assert!(matches!(ev.column_rank(&cols, &cfg), Err(Error::TooManyColumns { .. })));
        cfg.max_columns = None;
        assert_eq!(ev.column_rank(&cols, &cfg).unwrap().rank, 1);
        assert!(ev.column_rank(&[vec![3]], &cfg).is_err());
        assert!(Evaluator::new(1, &a, Slice::Full, words(&Alphabet::parse("x y").unwrap(), &["y"])).is_err());
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let a = Alphabet::parse("x y").unwrap();
        let ev = Evaluator::new(2, &a, Slice::Full, words(&a, &["x", "y", "x x", "x y", "y y", "x x*", "x y*"])).unwrap();
        let t = Target::Exact(vec![2, 1]);
        let one = ev.graded_dimension(&t, &RankConfig { workers: Some(1), ..Default::default() }).unwrap();
        let three = ev.graded_dimension(&t, &RankConfig { workers: Some(3), ..Default::default() }).unwrap();
        assert_eq!(one, three);
    }

    #[test]
    fn fresh_primes() {
        let p = prime_below(DEFAULT_PRIMES[1]);
        assert!(p < DEFAULT_PRIMES[1] && p % 4 == 1 && is_prime_u64(p));
    }
}
