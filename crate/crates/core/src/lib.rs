//! Rank-one degenerate double affine Hecke algebra of Wilson type: exact
//! polynomial representation, non-symmetric Wilson polynomials, the
//! polynomial Fourier transform pair and the Wilson function transform.

pub mod daha;
pub mod error;
pub mod function;
pub mod numeric;
pub mod report;
pub mod suite;
pub mod transform;
pub mod wilson;

pub use error::{Error, Result};
pub use suite::{run_suite, Fault, Suite};
