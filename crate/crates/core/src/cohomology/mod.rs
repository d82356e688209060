//! Local and sheaf cohomology of multigraded modules.

mod chop;
mod engine;
mod line_bundle;
mod planner;
mod table;

pub use chop::{koszul_chop, KoszulChop};
pub use engine::{
    ext_dim, irrelevant_resolution, local_cohomology, local_cohomology_dim, module_dimension, sheaf_cohomology,
    sheaf_cohomology_dim, structure_sheaf, LocalCohomologyRequest, Stabilization,
};
pub use line_bundle::{line_bundle_cohomology, line_bundle_euler, line_bundle_h, projective_space_cohomology};
pub use planner::{cohomology_table, euler_characteristic};
pub use table::{CohomologyTable, Entry, Provenance};
