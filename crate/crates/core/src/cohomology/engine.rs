//! Local cohomology `H^i_B(M)_u` as the stable value of
//! `dim Ext^i(S/B^[t], M)_u`, and sheaf cohomology built on it.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::arith::{binomial_u64, Field, SparseMatrix, SparseVec};
use crate::error::{Error, Result};
use crate::groebner::{ideal_slice_dimension, krull_dimension, quotient_slice_dimension, saturate, Ideal};
use crate::resolution::{
    cohomology_of_maps, complex_cohomology_at, hom_slice_complex_range, irrelevant_power_resolution, BlockSubsets,
    FreeResolution, GradedModule, SliceModule,
};
use crate::ring::{CoxRing, MultiDegree, ProductSpace};

use super::table::{Entry, Provenance};

/// Stabilization parameters for the colimit over `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Stabilization {
    pub t_start: u32,
    pub t_cap: u32,
}

impl Default for Stabilization {
    fn default() -> Self {
        Stabilization { t_start: 2, t_cap: 8 }
    }
}

impl Stabilization {
    pub fn new(t_start: u32, t_cap: u32) -> Result<Stabilization> {
        if t_start < 1 || t_cap < t_start + 2 {
            return Err(Error::InvalidArgument(format!(
                "stabilization needs t_start >= 1 and t_cap >= t_start + 2, got {t_start} and {t_cap}"
            )));
        }
        Ok(Stabilization { t_start, t_cap })
    }

    /// Start and cap actually used at twist `v`. Below `t = 1 − v_k` the
    /// complexes at a very negative twist are identically zero, which would
    /// fake an early agreement at 0, so the start is raised past that point.
    pub fn effective(&self, v: &MultiDegree) -> (u32, u32) {
        let lift = v.components().iter().map(|&c| (-c).max(0)).max().unwrap_or(0);
        let start = self.t_start.max(1 + lift as u32);
        let cap = self.t_cap.max(start + 2);
        (start, cap)
    }
}

/// A request for `dim H^i_B(M)_u`.
#[derive(Clone, Debug)]
pub struct LocalCohomologyRequest {
    pub module: GradedModule,
    pub index: usize,
    pub twist: MultiDegree,
    pub stabilization: Stabilization,
}

type ResKey = (Vec<u32>, Field, u32);
type ResEntry = Arc<(FreeResolution, Vec<Vec<BlockSubsets>>)>;

fn resolution_cache() -> &'static Mutex<HashMap<ResKey, ResEntry>> {
    static CACHE: OnceLock<Mutex<HashMap<ResKey, ResEntry>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The resolution of `S/B^[t]`, built once per ring and `t`.
pub fn irrelevant_resolution(ring: &CoxRing, t: u32) -> ResEntry {
    let key = (ring.space().factors().to_vec(), ring.field(), t);
    if let Some(r) = resolution_cache().lock().unwrap().get(&key) {
        return r.clone();
    }
    let r = Arc::new(irrelevant_power_resolution(ring, t));
    resolution_cache().lock().unwrap().entry(key).or_insert(r).clone()
}

type MaskKey = (Vec<u32>, Field, Vec<u32>);

fn mask_cache() -> &'static Mutex<HashMap<MaskKey, Arc<Vec<usize>>>> {
    static CACHE: OnceLock<Mutex<HashMap<MaskKey, Arc<Vec<usize>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Number of `γ ∈ Z^n` with `Σγ = s`, `γ_i ∈ [−t, −1]` for `i` in `mask`
/// and `γ_i >= 0` otherwise.
fn fine_degree_count(n: usize, s: i64, t: u32, mask: u32) -> u64 {
    let r = mask.count_ones() as usize;
    let free = n - r;
    // distribution of the sum of r values in [0, t−1]
    let mut dist = vec![1u64];
    for _ in 0..r {
        let mut next = vec![0u64; dist.len() + t as usize - 1];
        for (k, &c) in dist.iter().enumerate() {
            for y in 0..t as usize {
                next[k + y] += c;
            }
        }
        dist = next;
    }
    let mut total = 0u64;
    for (sum_y, &c) in dist.iter().enumerate() {
        let rest = s + r as i64 + sum_y as i64;
        if rest < 0 {
            continue;
        }
        let ways = if free == 0 {
            u64::from(rest == 0)
        } else {
            binomial_u64(rest as u64 + free as u64 - 1, free as u64 - 1)
        };
        total += c * ways;
    }
    total
}

/// Cohomology of the fine-degree strand of `Hom(F_•, S)` in which the
/// negative coordinates of the degree form the sets `masks` (one per block).
fn strand_cohomology(
    ring: &CoxRing,
    res: &FreeResolution,
    labels: &[Vec<BlockSubsets>],
    masks: &[u32],
) -> Arc<Vec<usize>> {
    let key = (ring.space().factors().to_vec(), ring.field(), masks.to_vec());
    if let Some(h) = mask_cache().lock().unwrap().get(&key) {
        return h.clone();
    }
    let active = |lab: &BlockSubsets| -> bool {
        if lab.is_empty() {
            return masks.iter().all(|&m| m == 0);
        }
        lab.iter().zip(masks).all(|(s, &m)| {
            let set = s.iter().fold(0u32, |acc, &i| acc | 1 << i);
            m & !set == 0
        })
    };
    let idx: Vec<Vec<usize>> = labels
        .iter()
        .map(|lv| (0..lv.len()).filter(|&g| active(&lv[g])).collect())
        .collect();
    let dims: Vec<usize> = idx.iter().map(|v| v.len()).collect();
    let field = ring.field();
    let mut maps = Vec::new();
    for j in 0..labels.len() - 1 {
        let d = res.differential(j + 1);
        let rows: Vec<SparseVec> = idx[j]
            .iter()
            .map(|&g| {
                idx[j + 1]
                    .iter()
                    .enumerate()
                    .filter(|&(_, &h)| !d.get(g, h).is_zero())
                    .map(|(c, &h)| (c, d.get(g, h).lc().clone()))
                    .collect()
            })
            .collect();
        maps.push(SparseMatrix {
            field,
            nrows: dims[j],
            ncols: dims[j + 1],
            rows,
        });
    }
    let h = Arc::new(cohomology_of_maps(&dims, &maps));
    mask_cache().lock().unwrap().insert(key, h.clone());
    h
}

/// `dim Ext^i(S/B^[t], S)_v`, summed over fine degrees.
fn ext_free(ring: &CoxRing, v: &MultiDegree, i: usize, t: u32) -> u64 {
    let space = ring.space();
    let res = irrelevant_resolution(ring, t);
    if i >= res.1.len() {
        return 0;
    }
    let mut per_block: Vec<Vec<(u32, u64)>> = Vec::new();
    for k in 0..space.nfactors() {
        let n = space.block(k).len();
        let counts: Vec<(u32, u64)> = (0..1u32 << n)
            .map(|m| (m, fine_degree_count(n, v[k], t, m)))
            .filter(|&(_, c)| c > 0)
            .collect();
        if counts.is_empty() {
            return 0;
        }
        per_block.push(counts);
    }
    let mut total = 0u64;
    let mut choice = vec![0usize; per_block.len()];
    loop {
        let masks: Vec<u32> = choice.iter().zip(&per_block).map(|(&c, b)| b[c].0).collect();
        let count: u64 = choice.iter().zip(&per_block).map(|(&c, b)| b[c].1).product();
        let h = strand_cohomology(ring, &res.0, &res.1, &masks);
        total += count * h[i] as u64;
        let mut k = 0;
        loop {
            if k == choice.len() {
                return total;
            }
            choice[k] += 1;
            if choice[k] < per_block[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// Evaluates `dim Ext^i(S/B^[t], M)_u` for one module over a range of `t`,
/// reusing slice bases and normal forms between steps.
struct ExtRunner<'a> {
    module: &'a GradedModule,
    slices: SliceModule<'a>,
}

impl<'a> ExtRunner<'a> {
    fn new(module: &'a GradedModule) -> ExtRunner<'a> {
        ExtRunner {
            module,
            slices: SliceModule::new(module),
        }
    }

    fn ext(&mut self, i: usize, u: &MultiDegree, t: u32) -> u64 {
        match self.module {
            GradedModule::Free { ring, shift } => ext_free(ring, &(u - shift), i, t),
            _ => {
                let ring = self.module.ring();
                let res = irrelevant_resolution(ring, t);
                let lo = i.saturating_sub(1);
                let c = hom_slice_complex_range(&res.0, &mut self.slices, u, lo..=i + 1);
                complex_cohomology_at(&c, i).unwrap_or(0) as u64
            }
        }
    }
}

/// `dim Ext^i(S/B^[t], M)_u` for a single `t`.
pub fn ext_dim(module: &GradedModule, i: usize, u: &MultiDegree, t: u32) -> u64 {
    ExtRunner::new(module).ext(i, u, t)
}

/// Krull dimension of `M`, or `None` for the zero module.
pub fn module_dimension(module: &GradedModule) -> Option<usize> {
    match module {
        GradedModule::Free { ring, .. } => Some(ring.nvars()),
        GradedModule::Quotient(i) => krull_dimension(i),
        GradedModule::Ideal(i) => (!i.is_zero()).then(|| i.ring().nvars()),
    }
}

fn stabilize(module: &GradedModule, i: usize, u: &MultiDegree, params: Stabilization) -> Result<u64> {
    let v = match module {
        GradedModule::Free { shift, .. } => u - shift,
        _ => u.clone(),
    };
    let (start, cap) = params.effective(&v);
    let mut runner = ExtRunner::new(module);
    let mut values = Vec::new();
    for t in start..=cap {
        values.push(runner.ext(i, u, t));
        let n = values.len();
        if n >= 3 && values[n - 1] == values[n - 2] && values[n - 2] == values[n - 3] {
            return Ok(values[n - 1]);
        }
    }
    Err(Error::StabilizationNotReached {
        index: i,
        twist: u.clone(),
        t_start: start,
        t_cap: cap,
        values,
    })
}

/// A principal ideal `(f)` is isomorphic to `S(−deg f)`.
fn as_free(ideal: &Ideal) -> Option<GradedModule> {
    let gb = ideal.gb();
    if gb.polys.len() == 1 {
        let d = ideal.ring().multidegree(&gb.polys[0]).ok().flatten()?;
        return Some(GradedModule::free(ideal.ring(), d));
    }
    None
}

/// `dim H^i_B(M)_u` with its provenance.
pub fn local_cohomology(req: &LocalCohomologyRequest) -> Result<Entry> {
    let LocalCohomologyRequest {
        module,
        index: i,
        twist: u,
        stabilization: params,
    } = req;
    let (i, params) = (*i, *params);
    let ext = |dim| Entry {
        dim,
        provenance: Provenance::ExtEngine,
    };
    // vanishing above the dimension of the module
    match module_dimension(module) {
        None => {
            return Ok(Entry {
                dim: 0,
                provenance: Provenance::ClosedForm,
            })
        }
        Some(d) if i > d => {
            return Ok(Entry {
                dim: 0,
                provenance: Provenance::ClosedForm,
            })
        }
        _ => {}
    }
    match module {
        GradedModule::Free { .. } | GradedModule::Quotient(_) => Ok(ext(stabilize(module, i, u, params)?)),
        GradedModule::Ideal(ideal) => {
            if let Some(free) = as_free(ideal) {
                return Ok(ext(stabilize(&free, i, u, params)?));
            }
            // 0 → I → S → S/I → 0 gives
            // H^{i−1}(S) → H^{i−1}(S/I) → H^i(I) → H^i(S)
            let s = GradedModule::free(ideal.ring(), MultiDegree::zero(u.len()));
            let q = GradedModule::Quotient(ideal.clone());
            let right = stabilize(&s, i, u, params)?;
            let left = if i == 0 { 0 } else { stabilize(&s, i - 1, u, params)? };
            let les = |dim| Entry {
                dim,
                provenance: Provenance::LongExactSequence,
            };
            if i == 0 {
                return Ok(les(0));
            }
            let middle = stabilize(&q, i - 1, u, params)?;
            if left == 0 && right == 0 {
                return Ok(les(middle));
            }
            if middle == 0 && right == 0 {
                return Ok(les(0));
            }
            Ok(ext(stabilize(module, i, u, params)?))
        }
    }
}

/// `dim H^i_B(M)_u`.
pub fn local_cohomology_dim(req: &LocalCohomologyRequest) -> Result<u64> {
    local_cohomology(req).map(|e| e.dim)
}

/// `h^i(X, M~(u))` with its provenance. For `i >= 1` this is
/// `H^{i+1}_B(M)_u`; for `i = 0` it is `dim M_u − dim H^0_B(M)_u +
/// dim H^1_B(M)_u`, evaluated through saturation for ideals and quotients.
pub fn sheaf_cohomology(module: &GradedModule, i: usize, u: &MultiDegree, params: Stabilization) -> Result<Entry> {
    let ring = module.ring();
    let d = ring.space().dim();
    if i > d {
        return Ok(Entry {
            dim: 0,
            provenance: Provenance::ClosedForm,
        });
    }
    let req = |index| LocalCohomologyRequest {
        module: module.clone(),
        index,
        twist: u.clone(),
        stabilization: params,
    };
    if i >= 1 {
        return local_cohomology(&req(i + 1));
    }
    match module {
        GradedModule::Free { ring, shift } => {
            let m = ring.space().slice_dimension(&(u - shift));
            let h0 = local_cohomology_dim(&req(0))?;
            let h1 = local_cohomology_dim(&req(1))?;
            Ok(Entry {
                dim: m - h0 + h1,
                provenance: Provenance::ExtEngine,
            })
        }
        GradedModule::Ideal(ideal) => {
            let sat = saturate(ideal, &Ideal::irrelevant(ring));
            Ok(Entry {
                dim: ideal_slice_dimension(&sat, u),
                provenance: Provenance::LongExactSequence,
            })
        }
        GradedModule::Quotient(ideal) => {
            let sat = saturate(ideal, &Ideal::irrelevant(ring));
            let h1 = local_cohomology_dim(&LocalCohomologyRequest {
                module: GradedModule::Quotient(sat.clone()),
                index: 1,
                twist: u.clone(),
                stabilization: params,
            })?;
            Ok(Entry {
                dim: quotient_slice_dimension(&sat, u) + h1,
                provenance: Provenance::LongExactSequence,
            })
        }
    }
}

/// `h^i(X, M~(u))`.
pub fn sheaf_cohomology_dim(module: &GradedModule, i: usize, u: &MultiDegree, params: Stabilization) -> Result<u64> {
    sheaf_cohomology(module, i, u, params).map(|e| e.dim)
}

/// Convenience: the free module `S` on a product space.
pub fn structure_sheaf(space: &ProductSpace, field: Field) -> GradedModule {
    let ring = CoxRing::new(space.clone(), field);
    GradedModule::free(&ring, MultiDegree::zero(space.nfactors()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::line_bundle_cohomology;

    fn ring(f: &[u32]) -> CoxRing {
        CoxRing::new(ProductSpace::new(f.to_vec()).unwrap(), Field::default())
    }

    #[test]
    fn fine_counts_add_up() {
        // all gamma with coordinates >= −t and sum s
        for n in 2..4usize {
            for t in 1..4u32 {
                for s in -6..5i64 {
                    let total: u64 = (0..1u32 << n).map(|m| fine_degree_count(n, s, t, m)).sum();
                    let shifted = s + t as i64 * n as i64;
                    let want = if shifted < 0 {
                        0
                    } else {
                        binomial_u64(shifted as u64 + n as u64 - 1, n as u64 - 1)
                    };
                    assert_eq!(total, want);
                }
            }
        }
    }

    #[test]
    fn free_module_on_p1() {
        let r = ring(&[1]);
        let s = GradedModule::free(&r, MultiDegree::from([0]));
        for u in -5..5 {
            let u = MultiDegree::from([u]);
            let h = |i| {
                local_cohomology_dim(&LocalCohomologyRequest {
                    module: s.clone(),
                    index: i,
                    twist: u.clone(),
                    stabilization: Stabilization::default(),
                })
                .unwrap()
            };
            assert_eq!(h(0), 0);
            assert_eq!(h(1), 0);
            assert_eq!(h(2), line_bundle_cohomology(r.space(), &u)[1]);
        }
    }

    #[test]
    fn socle_of_a_small_quotient() {
        let r = ring(&[1]);
        let i = Ideal::parse(&r, &["x0^2", "x0*x1"]).unwrap();
        let m = GradedModule::Quotient(i);
        let req = LocalCohomologyRequest {
            module: m,
            index: 0,
            twist: MultiDegree::from([1]),
            stabilization: Stabilization::default(),
        };
        assert_eq!(local_cohomology_dim(&req).unwrap(), 1);
    }

    #[test]
    fn stabilization_start_is_raised_for_negative_twists() {
        let p = Stabilization::default();
        assert_eq!(p.effective(&[1, 2].into()), (2, 8));
        assert_eq!(p.effective(&[-9, 0].into()), (10, 12));
        assert!(Stabilization::new(2, 3).is_err());
    }
}
