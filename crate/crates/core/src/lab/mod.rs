//! Checkers for vanishing statements, regularity predictions,
//! multiplication maps and cone arithmetic.

mod cones;
mod products;
mod theorem;

pub use cones::{
    add, cone_contains, rational_point, scale, shifted_cone_subset, shifted_cones_intersection_apex, sub, ConeQD, Point,
};
pub use products::{
    adjoint_hypothesis, diagonal_hypothesis, diagonal_ideal, diagonal_power_is_principal_at, multiplication_map_check,
    wahl_vanishing_check, MultiplicationMode, WahlCheck, DIAGONAL_VARIABLE_LIMIT,
};
pub use theorem::{
    check_theorem_main, generic_forms, ideal_power_cohomology, is_big_nef, is_l_regular, is_nef, nonnegative_vectors,
    regularity_region_predicted, scheme_of_forms, sharpness_witness, structure_sheaf_regular, theorem_hypothesis,
    DivisorOnProduct, HypothesisReport, RegionPath, RegularityReport, RegularityViolation, SharpnessWitness,
    TheoremCheck, Witness,
};
