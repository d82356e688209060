//! Free resolutions, Koszul complexes and graded Hom complexes.

mod complex;
mod hom;
mod koszul;
mod schreyer;

pub use complex::{FreeModule, FreeResolution, PolyMatrix, Presented};
pub use hom::{
    cohomology_of_maps, complex_cohomology_at, complex_cohomology_dims, hom_slice_complex, hom_slice_complex_range,
    GradedModule, HomSliceComplex, SliceModule,
};
pub use koszul::{irrelevant_power_resolution, koszul_resolution, koszul_shape, BlockSubsets};
pub use schreyer::resolve;
