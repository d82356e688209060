//! Multigraded polynomial rings of products of projective spaces.

mod cox;
mod monomial;
mod parse;
mod poly;
mod space;

pub use cox::CoxRing;
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{format_polynomial, parse_polynomial};
pub use poly::{PolyRing, Polynomial};
pub use space::{degree_slice_basis, degree_slice_dimension, MultiDegree, ProductSpace};
