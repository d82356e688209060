use rayon::prelude::*;

use crate::error::Result;
use crate::resolution::{resolve, GradedModule, Presented};
use crate::ring::MultiDegree;

use super::engine::{sheaf_cohomology, Stabilization};
use super::line_bundle::line_bundle_euler;
use super::table::CohomologyTable;

/// `χ(M~(u))` from a free resolution of `M` and the closed form for line
/// bundles.
pub fn euler_characteristic(module: &GradedModule, u: &MultiDegree) -> i128 {
    let space = module.ring().space();
    match module {
        GradedModule::Free { shift, .. } => line_bundle_euler(space, &(u - shift)),
        GradedModule::Quotient(i) | GradedModule::Ideal(i) => {
            let presented = match module {
                GradedModule::Ideal(_) => Presented::Ideal,
                _ => Presented::Quotient,
            };
            if i.is_zero() {
                return match presented {
                    Presented::Quotient => line_bundle_euler(space, u),
                    _ => 0,
                };
            }
            let res = resolve(i, presented, 0);
            res.modules
                .iter()
                .enumerate()
                .map(|(j, f)| {
                    let s: i128 = f.degrees.iter().map(|a| line_bundle_euler(space, &(u - a))).sum();
                    if j % 2 == 0 {
                        s
                    } else {
                        -s
                    }
                })
                .sum()
        }
    }
}

/// Sheaf cohomology dimensions of `M~(u)` for every index in `indices` and
/// every twist, computed cell by cell in parallel. Indices above `dim X`
/// are filled with zeros.
pub fn cohomology_table(
    module: &GradedModule,
    indices: impl IntoIterator<Item = usize>,
    twists: &[MultiDegree],
    params: Stabilization,
) -> Result<CohomologyTable> {
    let indices: Vec<usize> = indices.into_iter().collect();
    let cells: Vec<(usize, MultiDegree)> = twists
        .iter()
        .flat_map(|u| indices.iter().map(move |&i| (i, u.clone())))
        .collect();
    let entries = cells
        .par_iter()
        .map(|(i, u)| sheaf_cohomology(module, *i, u, params).map(|e| (*i, u.clone(), e)))
        .collect::<Result<Vec<_>>>()?;
    let mut table = CohomologyTable::new();
    for (i, u, e) in entries {
        table.insert(i, u, e.dim, e.provenance);
    }
    Ok(table)
}
