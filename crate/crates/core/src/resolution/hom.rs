//! Degree slices of `Hom(F_•, M)` for a free resolution `F_•` and a module
//! `M` that is free, a cyclic quotient or an ideal.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::arith::{Field, SparseMatrix, SparseVec, Subspace};
use crate::groebner::{coordinates, ideal_slice_subspace, monomial_index, standard_monomials, Ideal};
use crate::ring::{CoxRing, Monomial, MultiDegree, Polynomial};

use super::complex::FreeResolution;

/// The modules the cohomology engine works with.
#[derive(Clone, Debug)]
pub enum GradedModule {
    /// `S(−a)`.
    Free { ring: CoxRing, shift: MultiDegree },
    /// `S/I`.
    Quotient(Ideal),
    /// `I`.
    Ideal(Ideal),
}

impl GradedModule {
    pub fn free(ring: &CoxRing, shift: MultiDegree) -> GradedModule {
        GradedModule::Free {
            ring: ring.clone(),
            shift,
        }
    }

    pub fn ring(&self) -> &CoxRing {
        match self {
            GradedModule::Free { ring, .. } => ring,
            GradedModule::Quotient(i) | GradedModule::Ideal(i) => i.ring(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            GradedModule::Free { .. } => "free",
            GradedModule::Quotient(_) => "quotient",
            GradedModule::Ideal(_) => "ideal",
        }
    }
}

/// A chosen basis of `M_w`.
#[derive(Debug)]
enum Basis {
    /// Monomials (free modules and quotients by standard monomials).
    Monomials {
        monomials: Vec<Monomial>,
        index: HashMap<Monomial, usize>,
    },
    /// Echelon rows over the monomials of `S_w` (ideals).
    Rows {
        monomials: Vec<Monomial>,
        index: HashMap<Monomial, usize>,
        space: Subspace,
    },
}

impl Basis {
    fn dim(&self) -> usize {
        match self {
            Basis::Monomials { monomials, .. } => monomials.len(),
            Basis::Rows { space, .. } => space.dim(),
        }
    }
}

/// Bases of the graded pieces of a module with the multiplication maps
/// between them. Bases and normal forms are memoized.
pub struct SliceModule<'a> {
    module: &'a GradedModule,
    field: Field,
    bases: HashMap<MultiDegree, Arc<Basis>>,
    normal_forms: HashMap<Monomial, Polynomial>,
}

impl<'a> SliceModule<'a> {
    pub fn new(module: &'a GradedModule) -> SliceModule<'a> {
        SliceModule {
            module,
            field: module.ring().field(),
            bases: HashMap::new(),
            normal_forms: HashMap::new(),
        }
    }

    fn basis(&mut self, w: &MultiDegree) -> Arc<Basis> {
        if let Some(b) = self.bases.get(w) {
            return b.clone();
        }
        let b = match self.module {
            GradedModule::Free { ring, shift } => {
                let monomials = ring.space().slice_basis(&(w - shift));
                let index = monomial_index(&monomials);
                Basis::Monomials { monomials, index }
            }
            GradedModule::Quotient(i) => {
                let monomials = standard_monomials(i, w);
                let index = monomial_index(&monomials);
                Basis::Monomials { monomials, index }
            }
            GradedModule::Ideal(i) => {
                let monomials = i.ring().space().slice_basis(w);
                let index = monomial_index(&monomials);
                let space = ideal_slice_subspace(i, w);
                Basis::Rows {
                    monomials,
                    index,
                    space,
                }
            }
        };
        let b = Arc::new(b);
        self.bases.insert(w.clone(), b.clone());
        b
    }

    pub fn dim(&mut self, w: &MultiDegree) -> usize {
        self.basis(w).dim()
    }

    fn reduce_monomial(&mut self, m: Monomial) -> Polynomial {
        match self.module {
            GradedModule::Quotient(i) => {
                if let Some(p) = self.normal_forms.get(&m) {
                    return p.clone();
                }
                let pr = i.poly_ring();
                let p = i.normal_form(&pr.monomial(m.clone()));
                self.normal_forms.insert(m, p.clone());
                p
            }
            _ => self.module.ring().poly_ring().monomial(m),
        }
    }

    /// Matrix of multiplication by `p` (homogeneous of degree `a`) from
    /// `M_w` to `M_{w+a}`; row `i` is the image of basis vector `i`.
    pub fn multiply(&mut self, w: &MultiDegree, p: &Polynomial, a: &MultiDegree) -> SparseMatrix {
        let target = w + a;
        let src = self.basis(w);
        let tgt = self.basis(&target);
        let pr = self.module.ring().poly_ring();
        let one = self.field.one();
        let mut rows: Vec<SparseVec> = Vec::with_capacity(src.dim());
        match (&*src, &*tgt) {
            (Basis::Monomials { monomials, .. }, Basis::Monomials { index, .. }) => {
                for m in monomials {
                    let mut acc: Vec<(Monomial, crate::arith::Scalar)> = Vec::new();
                    for (n, c) in p.terms() {
                        let nf = self.reduce_monomial(m.mul(n));
                        for (k, x) in nf.terms() {
                            acc.push((k.clone(), c * x));
                        }
                    }
                    let img = pr.from_terms(acc);
                    rows.push(coordinates(&img, index));
                }
            }
            (
                Basis::Rows {
                    monomials: sm,
                    space: ss,
                    ..
                },
                Basis::Rows {
                    index: ti, space: ts, ..
                },
            ) => {
                for row in &ss.basis {
                    let f = pr.from_terms(row.iter().map(|(j, c)| (sm[*j].clone(), c.clone())).collect());
                    let img = pr.mul(&f, p);
                    rows.push(ts.coordinates(&coordinates(&img, ti)));
                }
            }
            _ => unreachable!("bases of one module share a kind"),
        }
        let _ = one;
        SparseMatrix {
            field: self.field,
            nrows: src.dim(),
            ncols: tgt.dim(),
            rows,
        }
    }
}

/// The degree-`u` slice of `Hom(F_•, M)`: `C^j = ⊕_{g ∈ F_j} M_{u + a_g}`
/// with `δ^j(φ)(e_h) = Σ_g d_{j+1}[g,h] φ(e_g)`. Matrices use the row
/// convention: row `i` of `maps[j]` is `δ^j` of basis vector `i` of `C^j`.
#[derive(Clone, Debug)]
pub struct HomSliceComplex {
    pub twist: MultiDegree,
    pub dims: Vec<usize>,
    /// `maps[j] : C^j → C^{j+1}` for `j` in `first..first + maps.len()`.
    pub maps: Vec<SparseMatrix>,
    pub first: usize,
}

impl HomSliceComplex {
    pub fn map(&self, j: usize) -> Option<&SparseMatrix> {
        j.checked_sub(self.first).and_then(|k| self.maps.get(k))
    }

    /// Checks that consecutive maps compose to zero.
    pub fn is_complex(&self) -> bool {
        self.maps.windows(2).all(|w| w[0].mul(&w[1]).is_zero())
    }
}

/// Builds `C^j` and `δ^j` for `j` in `range` (maps beyond the resolution's
/// length are zero and omitted).
pub fn hom_slice_complex_range(
    res: &FreeResolution,
    slices: &mut SliceModule<'_>,
    u: &MultiDegree,
    range: std::ops::RangeInclusive<usize>,
) -> HomSliceComplex {
    let len = res.length();
    let lo = *range.start();
    let hi = (*range.end()).min(len);
    let block_dims = |slices: &mut SliceModule<'_>, j: usize| -> Vec<usize> {
        res.modules[j].degrees.iter().map(|a| slices.dim(&(u + a))).collect()
    };
    let mut dims = vec![0; len + 1];
    for (j, d) in dims.iter_mut().enumerate() {
        if j + 1 >= lo && j <= hi + 1 {
            *d = block_dims(slices, j).iter().sum();
        }
    }
    let mut maps = Vec::new();
    for j in lo..hi {
        let src_dims = block_dims(slices, j);
        let tgt_dims = block_dims(slices, j + 1);
        let mut tgt_off = vec![0usize; tgt_dims.len() + 1];
        for h in 0..tgt_dims.len() {
            tgt_off[h + 1] = tgt_off[h] + tgt_dims[h];
        }
        let d = res.differential(j + 1);
        let mut rows: Vec<SparseVec> = Vec::with_capacity(src_dims.iter().sum());
        for (g, a_g) in res.modules[j].degrees.iter().enumerate() {
            let w = u + a_g;
            let mut block_rows: Vec<SparseVec> = vec![Vec::new(); src_dims[g]];
            for h in 0..d.ncols {
                let entry = d.get(g, h);
                if entry.is_zero() || src_dims[g] == 0 || tgt_dims[h] == 0 {
                    continue;
                }
                let deg = &res.modules[j + 1].degrees[h] - a_g;
                let m = slices.multiply(&w, entry, &deg);
                for (b, row) in m.rows.into_iter().enumerate() {
                    block_rows[b].extend(row.into_iter().map(|(c, x)| (c + tgt_off[h], x)));
                }
            }
            rows.extend(block_rows);
        }
        maps.push(SparseMatrix {
            field: slices.field,
            nrows: rows.len(),
            ncols: tgt_off[tgt_dims.len()],
            rows,
        });
    }
    HomSliceComplex {
        twist: u.clone(),
        dims,
        maps,
        first: lo,
    }
}

/// The full degree-`u` slice of `Hom(F_•, M)`.
pub fn hom_slice_complex(res: &FreeResolution, module: &GradedModule, u: &MultiDegree) -> HomSliceComplex {
    let mut slices = SliceModule::new(module);
    hom_slice_complex_range(res, &mut slices, u, 0..=res.length())
}

/// `dim ker δ^j − rank δ^{j−1}` for every position `j` whose two adjacent
/// maps are available (missing maps beyond the ends count as zero).
pub fn complex_cohomology_dims(c: &HomSliceComplex) -> Vec<usize> {
    let ranks: Vec<usize> = c.maps.par_iter().map(|m| m.rank()).collect();
    let rank = |j: usize| -> Option<usize> {
        if j + 1 >= c.dims.len() {
            return Some(0);
        }
        j.checked_sub(c.first).and_then(|k| ranks.get(k).copied())
    };
    let mut out = Vec::new();
    for j in 0..c.dims.len() {
        let out_rank = rank(j);
        let in_rank = if j == 0 { Some(0) } else { rank(j - 1) };
        if let (Some(r_out), Some(r_in)) = (out_rank, in_rank) {
            out.push(c.dims[j] - r_out - r_in);
        } else {
            out.push(usize::MAX);
        }
    }
    out
}

/// Cohomology at position `j` only.
pub fn complex_cohomology_at(c: &HomSliceComplex, j: usize) -> Option<usize> {
    complex_cohomology_dims(c).get(j).copied().filter(|&d| d != usize::MAX)
}

/// Cohomology dimensions of an abstract complex given by its term
/// dimensions and maps (row convention).
pub fn cohomology_of_maps(dims: &[usize], maps: &[SparseMatrix]) -> Vec<usize> {
    let ranks: Vec<usize> = maps.iter().map(|m| m.rank()).collect();
    (0..dims.len())
        .map(|j| {
            let r_out = ranks.get(j).copied().unwrap_or(0);
            let r_in = if j == 0 {
                0
            } else {
                ranks.get(j - 1).copied().unwrap_or(0)
            };
            dims[j] - r_out - r_in
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Field;
    use crate::resolution::{resolve, Presented};
    use crate::ring::ProductSpace;

    fn p1() -> CoxRing {
        CoxRing::new(ProductSpace::new([1]).unwrap(), Field::default())
    }

    #[test]
    fn hom_into_free_has_no_socle() {
        let r = p1();
        let i = Ideal::parse(&r, &["x0", "x1"]).unwrap();
        let res = resolve(&i, Presented::Quotient, 0);
        let m = GradedModule::free(&r, MultiDegree::from([0]));
        let c = hom_slice_complex(&res, &m, &[0].into());
        assert!(c.is_complex());
        assert_eq!(c.dims, vec![1, 4, 3]);
        let h = complex_cohomology_dims(&c);
        assert_eq!(h[0], 0);
        // Ext^2(k, S)_0 = k(2)_0 ... lives in degree -2, so zero here
        assert_eq!(h, vec![0, 0, 0]);
        let c = hom_slice_complex(&res, &m, &[-2].into());
        assert_eq!(complex_cohomology_dims(&c), vec![0, 0, 1]);
    }

    #[test]
    fn identity_class_of_a_quotient() {
        let r = p1();
        let i = Ideal::parse(&r, &["x0"]).unwrap();
        let res = resolve(&i, Presented::Quotient, 0);
        let m = GradedModule::Quotient(i.clone());
        let c = hom_slice_complex(&res, &m, &[0].into());
        assert_eq!(complex_cohomology_dims(&c)[0], 1);
    }

    #[test]
    fn trivial_complexes() {
        let f = Field::Rational;
        assert_eq!(cohomology_of_maps(&[0, 0], &[SparseMatrix::zeros(f, 0, 0)]), vec![0, 0]);
        let id = SparseMatrix::from_dense(f, &[vec![1]]);
        assert_eq!(cohomology_of_maps(&[1, 1], &[id]), vec![0, 0]);
        let a = SparseMatrix::from_dense(f, &[vec![1, 0, 0], vec![0, 0, 0]]);
        let b = SparseMatrix::from_dense(f, &[vec![0, 0], vec![1, 0], vec![0, 1]]);
        let h = cohomology_of_maps(&[2, 3, 2], &[a, b]);
        // Euler characteristic of terms equals that of cohomology
        assert_eq!(h, vec![1, 0, 0]);
        assert_eq!(2 - 3 + 2, h[0] as i64 - h[1] as i64 + h[2] as i64);
    }
}
