//! Scalars, dense matrices, quaternions and the symplectic structure.
//!
//! Everything here is exact: prime fields for the randomized rank
//! checks, big rationals for the Jacobian, first-order jets on top of
//! either.

mod dual;
mod field;
mod linalg;
mod mat;
mod quaternion;
mod ring;
mod symplectic;

pub use dual::Dual;
pub use field::{is_prime_u64, Fp, PrimeField, DEFAULT_PRIMES};
pub use linalg::rank;
pub use mat::Mat;
pub use quaternion::{parse_quaternion, quat_embed, quat_trace, QuatMat, Quaternion};
pub use ring::{FieldOps, Ring};
pub use symplectic::SymplecticContext;
