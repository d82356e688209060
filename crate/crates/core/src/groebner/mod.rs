//! Gröbner bases and the ideal toolbox built on them.

mod buchberger;
mod ideal;
mod ops;
mod slices;

pub use buchberger::{buchberger, GroebnerBasis};
pub use ideal::{groebner_basis, ideal_power, normal_form, Ideal};
pub use ops::{colon, colon_poly, intersect, saturate};
pub use slices::{
    coordinates, ideal_slice_basis, ideal_slice_dimension, krull_dimension, monomial_index, quotient_slice_dimension,
    standard_monomials, subscheme_dimension, substitution_map_rank, BinaryForm, GradedSliceMap,
};

pub(crate) use slices::ideal_slice_subspace;
