use rand::rngs::StdRng;
use rand::SeedableRng;
use rayon::prelude::*;

use crate::arith::subsets;
use crate::cohomology::{
    koszul_chop, line_bundle_cohomology, sheaf_cohomology, CohomologyTable, KoszulChop, Stabilization,
};
use crate::error::{Error, Result};
use crate::groebner::{ideal_power, saturate, subscheme_dimension, Ideal};
use crate::resolution::GradedModule;
use crate::ring::{CoxRing, MultiDegree, Polynomial, ProductSpace};

/// `O(a)` is nef.
pub fn is_nef(a: &MultiDegree) -> bool {
    a.components().iter().all(|&c| c >= 0)
}

/// `O(a)` is big and nef.
pub fn is_big_nef(a: &MultiDegree) -> bool {
    a.components().iter().all(|&c| c >= 1)
}

/// A divisor class, optionally with a defining form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorOnProduct {
    pub degree: MultiDegree,
    pub form: Option<Polynomial>,
}

impl DivisorOnProduct {
    pub fn from_degree(degree: MultiDegree) -> DivisorOnProduct {
        DivisorOnProduct { degree, form: None }
    }

    /// The divisor of a nonzero multihomogeneous form.
    pub fn from_form(ring: &CoxRing, form: Polynomial) -> Result<DivisorOnProduct> {
        let degree = ring
            .multidegree(&form)?
            .ok_or_else(|| Error::InvalidArgument("the zero form defines no divisor".into()))?;
        Ok(DivisorOnProduct {
            degree,
            form: Some(form),
        })
    }

    pub fn parse(ring: &CoxRing, text: &str) -> Result<DivisorOnProduct> {
        DivisorOnProduct::from_form(ring, ring.parse(text)?)
    }
}

/// Forms of the given degrees with random nonzero coefficients on every
/// monomial, drawn from a seeded generator so runs are reproducible.
pub fn generic_forms(ring: &CoxRing, degrees: &[MultiDegree], seed: u64) -> Vec<Polynomial> {
    let mut rng = StdRng::seed_from_u64(seed);
    let pr = ring.poly_ring();
    degrees
        .iter()
        .map(|d| {
            let terms = ring
                .space()
                .slice_basis(d)
                .into_iter()
                .map(|m| (m, ring.field().random_nonzero(&mut rng, 50)))
                .collect();
            pr.from_terms(terms)
        })
        .collect()
}

/// One failed instance of a positivity hypothesis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Indices into the degree list.
    pub subset: Vec<usize>,
    /// The index singled out as the first element, when the hypothesis has one.
    pub first: Option<usize>,
    /// The extra shift `u`, when the hypothesis ranges over shifts.
    pub shift: Option<MultiDegree>,
    /// The class that fails to be big and nef.
    pub twist: MultiDegree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisReport {
    pub holds: bool,
    pub witnesses: Vec<Witness>,
}

impl HypothesisReport {
    fn from_witnesses(witnesses: Vec<Witness>) -> HypothesisReport {
        HypothesisReport {
            holds: witnesses.is_empty(),
            witnesses,
        }
    }
}

/// `L − (m+1) d_{s1} − d_{s2} − … − d_{se}` is big and nef for every
/// `e`-subset of indices and every choice of first element.
pub fn theorem_hypothesis(degrees: &[MultiDegree], e: usize, m: u32, l: &MultiDegree) -> HypothesisReport {
    let mut witnesses = Vec::new();
    for s in subsets(degrees.len(), e) {
        let rest = s.iter().fold(l.clone(), |acc, &j| &acc - &degrees[j]);
        for &first in &s {
            let twist = &rest - &degrees[first].scale(m as i64);
            if !is_big_nef(&twist) {
                witnesses.push(Witness {
                    subset: s.clone(),
                    first: Some(first),
                    shift: None,
                    twist,
                });
            }
        }
    }
    HypothesisReport::from_witnesses(witnesses)
}

/// Outcome of checking the vanishing theorem on one instance.
#[derive(Clone, Debug)]
pub struct TheoremCheck {
    pub report: HypothesisReport,
    /// The saturated ideal of the scheme cut out by the forms.
    pub scheme: Ideal,
    /// `h^i(I_Y^{m+1} ⊗ K ⊗ L)` for `1 <= i <= dim X`, present when the
    /// hypothesis holds.
    pub table: Option<CohomologyTable>,
    /// Every computed entry vanishes. False when nothing was computed.
    pub verified: bool,
}

/// The saturated ideal of the scheme cut out by `forms`, checked to have
/// codimension `e`.
pub fn scheme_of_forms(ring: &CoxRing, forms: &[Polynomial], e: usize) -> Result<Ideal> {
    let ideal = Ideal::new(ring, forms.to_vec())?;
    let y = saturate(&ideal, &Ideal::irrelevant(ring));
    let dim_x = ring.space().dim();
    let codim = match subscheme_dimension(&y) {
        Some(d) => dim_x - d,
        None => dim_x + 1,
    };
    if codim != e {
        return Err(Error::CodimensionMismatch {
            expected: e,
            actual: codim,
        });
    }
    Ok(y)
}

/// `h^i(X, I_Y^{m+1} ⊗ O(twist))` for `1 <= i <= dim X`, where the power is
/// saturated before sheafifying.
pub fn ideal_power_cohomology(
    y: &Ideal,
    m: u32,
    twist: &MultiDegree,
    params: Stabilization,
) -> Result<CohomologyTable> {
    let ring = y.ring();
    let power = if m == 0 {
        y.clone()
    } else {
        saturate(&ideal_power(y, m + 1), &Ideal::irrelevant(ring))
    };
    let module = GradedModule::Ideal(power);
    let dim = ring.space().dim();
    let entries = (1..=dim)
        .into_par_iter()
        .map(|i| sheaf_cohomology(&module, i, twist, params).map(|e| (i, e)))
        .collect::<Result<Vec<_>>>()?;
    let mut table = CohomologyTable::new();
    for (i, e) in entries {
        table.insert(i, twist.clone(), e.dim, e.provenance);
    }
    Ok(table)
}

/// Checks the hypothesis of the vanishing theorem for `I_Y^{m+1} ⊗ K ⊗ L`
/// and, when it holds, computes every `h^i` with `i >= 1`.
pub fn check_theorem_main(
    ring: &CoxRing,
    generators: &[DivisorOnProduct],
    e: usize,
    m: u32,
    l: &MultiDegree,
    params: Stabilization,
) -> Result<TheoremCheck> {
    let forms = generators
        .iter()
        .map(|d| {
            d.form
                .clone()
                .ok_or_else(|| Error::InvalidArgument("every divisor needs an explicit form".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let scheme = scheme_of_forms(ring, &forms, e)?;
    let degrees: Vec<MultiDegree> = generators.iter().map(|d| d.degree.clone()).collect();
    let report = theorem_hypothesis(&degrees, e, m, l);
    if !report.holds {
        return Ok(TheoremCheck {
            report,
            scheme,
            table: None,
            verified: false,
        });
    }
    let twist = &ring.space().canonical() + l;
    let table = ideal_power_cohomology(&scheme, m, &twist, params)?;
    let verified = table.all_zero();
    Ok(TheoremCheck {
        report,
        scheme,
        table: Some(table),
        verified,
    })
}

/// Which hypothesis of the regularity prediction to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegionPath {
    /// Every form degree is a positive combination of the hyperplane classes.
    Corollary,
    /// The structure sheaf is itself regular at the target.
    Remark,
}

/// Whether the vanishing theorem predicts that `I_Y` is `K ⊗ L`-regular:
/// `L − d_{s1} − … − d_{se} − u` must be big and nef for all `e`-subsets and
/// all `u ∈ N^ℓ` with `|u| = dim Y + 1`, where `e = dim X − dim Y`.
pub fn regularity_region_predicted(
    space: &ProductSpace,
    degrees: &[MultiDegree],
    dim_y: usize,
    l: &MultiDegree,
    path: RegionPath,
) -> Result<HypothesisReport> {
    let dim_x = space.dim();
    if dim_y >= dim_x {
        return Err(Error::InvalidArgument(format!(
            "dim Y = {dim_y} must be below dim X = {dim_x}"
        )));
    }
    match path {
        RegionPath::Corollary => {
            if let Some(d) = degrees.iter().find(|d| !is_big_nef(d)) {
                return Err(Error::InvalidArgument(format!(
                    "degree {d} has a zero component; use the structure-sheaf path"
                )));
            }
        }
        RegionPath::Remark => {
            let target = &space.canonical() + l;
            if !structure_sheaf_regular(space, &target) {
                return Err(Error::InvalidArgument(format!("O_X is not {target}-regular")));
            }
        }
    }
    let e = dim_x - dim_y;
    let shifts = nonnegative_vectors(space.nfactors(), dim_y + 1);
    let mut witnesses = Vec::new();
    for s in subsets(degrees.len(), e) {
        let rest = s.iter().fold(l.clone(), |acc, &j| &acc - &degrees[j]);
        for u in &shifts {
            let twist = &rest - u;
            if !is_big_nef(&twist) {
                witnesses.push(Witness {
                    subset: s.clone(),
                    first: None,
                    shift: Some(u.clone()),
                    twist,
                });
            }
        }
    }
    Ok(HypothesisReport::from_witnesses(witnesses))
}

/// All `u ∈ N^len` with `|u| = total`.
pub fn nonnegative_vectors(len: usize, total: usize) -> Vec<MultiDegree> {
    crate::arith::compositions(total as u32, len)
        .into_iter()
        .map(|c| MultiDegree(c.into_iter().map(i64::from).collect()))
        .collect()
}

/// `O_X` is `L`-regular, decided by the closed form.
pub fn structure_sheaf_regular(space: &ProductSpace, l: &MultiDegree) -> bool {
    (1..=space.dim()).all(|i| {
        nonnegative_vectors(space.nfactors(), i)
            .iter()
            .all(|u| line_bundle_cohomology(space, &(l - u))[i] == 0)
    })
}

/// A failed vanishing `h^i(M~(L − u)) = dim ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityViolation {
    pub index: usize,
    pub shift: MultiDegree,
    pub dim: u64,
}

#[derive(Clone, Debug)]
pub struct RegularityReport {
    pub regular: bool,
    pub violations: Vec<RegularityViolation>,
    pub table: CohomologyTable,
}

/// Direct check that `M~` is `L`-regular: `h^i(M~(L − u)) = 0` for all
/// `1 <= i <= dim X` and `u ∈ N^ℓ` with `|u| = i`.
pub fn is_l_regular(module: &GradedModule, l: &MultiDegree, params: Stabilization) -> Result<RegularityReport> {
    let space = module.ring().space();
    let cells: Vec<(usize, MultiDegree)> = (1..=space.dim())
        .flat_map(|i| {
            nonnegative_vectors(space.nfactors(), i)
                .into_iter()
                .map(move |u| (i, u))
        })
        .collect();
    let results = cells
        .par_iter()
        .map(|(i, u)| sheaf_cohomology(module, *i, &(l - u), params).map(|e| (*i, u.clone(), e)))
        .collect::<Result<Vec<_>>>()?;
    let mut table = CohomologyTable::new();
    let mut violations = Vec::new();
    for (i, u, e) in results {
        if e.dim != 0 {
            violations.push(RegularityViolation {
                index: i,
                shift: u.clone(),
                dim: e.dim,
            });
        }
        table.insert(i, l - &u, e.dim, e.provenance);
    }
    Ok(RegularityReport {
        regular: violations.is_empty(),
        violations,
        table,
    })
}

/// A nonvanishing forced by the Koszul chop.
#[derive(Clone, Debug)]
pub struct SharpnessWitness {
    /// The first index `i >= 1` with `h^i(I_Y ⊗ K ⊗ O(Σd) ⊗ N) ≠ 0`, with
    /// its dimension, if any index in range has one.
    pub nonzero: Option<(usize, u64)>,
    pub twist: MultiDegree,
    pub chop: KoszulChop,
}

/// Shows that the bigness assumption on `N` cannot be dropped: for a
/// complete intersection of forms of the given big and nef degrees,
/// `h^i(I_Y ⊗ K ⊗ O(Σd) ⊗ N) = h^{i+e−1}(K ⊗ N)`, which is nonzero for
/// suitable nef `N`.
pub fn sharpness_witness(space: &ProductSpace, degrees: &[MultiDegree], n: &MultiDegree) -> Result<SharpnessWitness> {
    if !is_nef(n) {
        return Err(Error::InvalidArgument(format!("{n} is not nef")));
    }
    let e = degrees.len();
    let k = space.canonical();
    let kn = line_bundle_cohomology(space, &(&k + n));
    if kn.iter().skip(e.saturating_sub(1)).all(|&h| h == 0) {
        return Err(Error::InvalidArgument(format!(
            "K + {n} has no cohomology in degrees >= {}",
            e.saturating_sub(1)
        )));
    }
    let sum = degrees.iter().fold(n.clone(), |acc, d| &acc + d);
    let twist = &k + &sum;
    let chop = koszul_chop(space, degrees, &twist)?;
    if !chop.valid {
        return Err(Error::InvalidArgument(
            "an intermediate Koszul term has higher cohomology; no claim is made".into(),
        ));
    }
    let nonzero = chop
        .dims
        .iter()
        .enumerate()
        .skip(1)
        .find_map(|(i, h)| h.filter(|&h| h != 0).map(|h| (i, h)));
    Ok(SharpnessWitness { nonzero, twist, chop })
}
