//! Exact workbench for symplectic trace-invariant algebras.
//!
//! The crate ships the Poincaré series of several invariant algebras
//! of Sp₄ and Sp₆ as data fixtures and checks them against randomized
//! rank computations of trace monomials over prime fields.

pub mod algebra_core;
pub mod cli;
pub mod data;
pub mod error;
pub mod invariant_eval;
pub mod poincare;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
