//! Checks that tie word lists, module bases and relations to the
//! shipped series.
//!
//! Every check returns a report; failures of the mathematics are
//! reported there, while malformed or incompatible inputs are errors.

mod gens;
mod gl2;
mod grading;
mod histogram;
mod hsop;
mod module_basis;
mod msg;
mod report;
mod syzygy;

pub use grading::Grading;
pub use hsop::{parse_qmat, pi_coordinates, verify_hsop_jacobian, JacobianWitness};
pub use msg::{verify_msg, MsgCheck, MsgOptions};
pub use report::{fmt_degree, DegreeRow, GradedReport, RemovalRow, Status, Table};
pub use gens::{fmt_gen_monomial, parse_gen_monomial};
pub use syzygy::{verify_syzygy, EvalSummary, EvalWitness, SyzygyOptions, SyzygyPolynomial, SyzygyReport};
pub use module_basis::{verify_module_basis, BasisItem, ModuleBasis, ModuleCheck, ModuleOptions, ModuleReport, PlaceholderSearch, StaticCheck};
pub use gl2::{decompose_gl2, Gl2Decomposition};
pub use histogram::{degree_histogram, verify_generator_degree_histogram, HistogramReport, HistogramRow};
