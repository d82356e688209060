//! Exact scalars, quadratic extensions, combinatorics and sparse linear algebra.

mod combin;
mod linalg;
mod quad;
mod scalar;

pub use combin::{binomial, binomial_poly, binomial_u64, compositions, subsets};
pub use linalg::{axpy, Echelon, SparseMatrix, SparseVec, Subspace};
pub use quad::{quadext_sign, rational, QuadExt};
pub use scalar::{Field, Scalar, DEFAULT_PRIME};
