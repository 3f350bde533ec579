//! Randomized evaluation of trace polynomials and modular ranks.
//!
//! Sample points are pure functions of (prime, seed, index); rows are
//! generated on a worker pool and reduced by one streaming reducer, so
//! results do not depend on the worker count.

mod dims;
mod eval;
mod monomials;
mod rank;
mod reduce;
mod sample;

pub use dims::{dims_alphabet, empirical_dimension};
pub use eval::{check_words, eval_trace, FastPoint};
pub use monomials::{trace_monomials, Target};
pub use rank::{
    default_samples, min_samples, prime_below, with_workers, Evaluator, RankConfig, RankReport, Run,
    DEFAULT_COLUMN_LIMIT, DEFAULT_SEEDS,
};
pub use reduce::Reducer;
pub use sample::{point_rng, random_symplectic, SamplePoint, SampleSpace, Slice};
