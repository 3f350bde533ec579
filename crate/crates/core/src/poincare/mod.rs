//! Exact power-series arithmetic on the shipped Poincaré series.

mod expr;
mod fixture;
mod poly;
mod series;

pub use expr::{complete_symmetric, evaluate, Scope};
pub use fixture::{Fixture, Item};
pub use poly::{total, Monomial, SparsePoly};
pub use series::{palindromic_complete, FeOutcome, Meta, RationalSeries, Role, SeriesTable, Variable, Witness};
