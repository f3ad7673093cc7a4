//! Exact type-A branching data.
//!
//! Littlewood-Richardson numbers and the three-weight `GL_n` invariant
//! dimension ([`lrcalc`]), Schubert calculus on Grassmannians ([`schubert`]),
//! Horn/Belkale membership ([`horncone`]), the factorization of invariant
//! dimensions along regular faces ([`reduction`]) and symmetric-group
//! Kronecker coefficients ([`kronecker`]).
//!
//! Every coefficient is an exact nonnegative integer ([`Coefficient`]).

pub mod error;
pub mod horncone;
pub mod kronecker;
pub mod lrcalc;
pub mod reduction;
pub mod schubert;
pub mod weights;

pub use error::{Error, Result};
pub use weights::{Partition, SchubertIndex, Weight};

/// Exact coefficient type used across the crate.
pub type Coefficient = num_bigint::BigUint;
