//! Graded pieces of ideals and quotients, and linear maps between them.

use std::collections::HashMap;

use crate::arith::{subsets, Field, Scalar, SparseMatrix, SparseVec, Subspace};
use crate::error::{Error, Result};
use crate::ring::{Monomial, MultiDegree, Polynomial, ProductSpace};

use super::Ideal;

/// Degree-`u` monomials outside the leading-term ideal, in decreasing order.
pub fn standard_monomials(ideal: &Ideal, u: &MultiDegree) -> Vec<Monomial> {
    let gb = ideal.gb();
    ideal
        .ring()
        .space()
        .slice_basis(u)
        .into_iter()
        .filter(|m| !gb.lt_divides(m))
        .collect()
}

/// `dim (S/I)_u`.
pub fn quotient_slice_dimension(ideal: &Ideal, u: &MultiDegree) -> u64 {
    if !u.is_nonnegative() {
        return 0;
    }
    let gb = ideal.gb();
    let space = ideal.ring().space();
    // count without materializing the full list when the basis is monomial
    space.slice_basis(u).iter().filter(|m| !gb.lt_divides(m)).count() as u64
}

/// `dim I_u = dim S_u − dim (S/I)_u`.
pub fn ideal_slice_dimension(ideal: &Ideal, u: &MultiDegree) -> u64 {
    ideal.ring().space().slice_dimension(u) - quotient_slice_dimension(ideal, u)
}

/// Index of each monomial in a slice basis.
pub fn monomial_index(basis: &[Monomial]) -> HashMap<Monomial, usize> {
    basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect()
}

/// Coordinates of a degree-`u` polynomial in the monomial basis `index`.
pub fn coordinates(p: &Polynomial, index: &HashMap<Monomial, usize>) -> SparseVec {
    let mut v: SparseVec = p
        .terms()
        .iter()
        .map(|(m, c)| (*index.get(m).expect("term outside the slice"), c.clone()))
        .collect();
    v.sort_by_key(|e| e.0);
    v
}

/// A basis of `I_u` as coefficient rows over `degree_slice_basis(u)`,
/// obtained by multiplying every generator into degree `u` and row-reducing.
/// The rows are in reduced row echelon form.
pub fn ideal_slice_basis(ideal: &Ideal, u: &MultiDegree) -> Vec<SparseVec> {
    ideal_slice_subspace(ideal, u).basis
}

pub(crate) fn ideal_slice_subspace(ideal: &Ideal, u: &MultiDegree) -> Subspace {
    let space = ideal.ring().space();
    let field = ideal.ring().field();
    let pr = ideal.poly_ring();
    let target = space.slice_basis(u);
    let index = monomial_index(&target);
    let mut rows = Vec::new();
    for (g, a) in ideal.generators().iter().zip(ideal.generator_degrees()) {
        let shift = u - a;
        for m in space.slice_basis(&shift) {
            let p = pr.mul_term(g, &m, &field.one());
            rows.push(coordinates(&p, &index));
        }
    }
    Subspace::span(field, rows)
}

/// A binary form `sum_i c_i t0^(d-i) t1^i`, stored densely by increasing
/// power of `t1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    pub coeffs: Vec<i64>,
}

impl BinaryForm {
    pub fn new(coeffs: impl Into<Vec<i64>>) -> BinaryForm {
        BinaryForm { coeffs: coeffs.into() }
    }

    /// The monomial `t0^(d-k) t1^k`.
    pub fn monomial(d: u32, k: u32) -> BinaryForm {
        let mut coeffs = vec![0; d as usize + 1];
        coeffs[k as usize] = 1;
        BinaryForm { coeffs }
    }

    pub fn degree(&self) -> u32 {
        self.coeffs.len() as u32 - 1
    }
}

fn mul_dense(field: Field, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add_mul(x, y);
        }
    }
    out
}

/// Rank of `S_u → H^0(P^1, O(sum_k u_k e_k))` sending a monomial to its
/// image under the parametrization, where `e_k` is the common degree of the
/// forms in block `k`.
pub fn substitution_map_rank(
    space: &ProductSpace,
    field: Field,
    parametrization: &[Vec<BinaryForm>],
    u: &MultiDegree,
) -> Result<usize> {
    if parametrization.len() != space.nfactors() {
        return Err(Error::InvalidArgument(
            "one list of forms per factor is required".into(),
        ));
    }
    for (k, forms) in parametrization.iter().enumerate() {
        if forms.len() != space.factors()[k] as usize + 1 {
            return Err(Error::InvalidArgument(format!(
                "block {} needs {} forms",
                k + 1,
                space.factors()[k] + 1
            )));
        }
        let d0 = forms[0].degree();
        if let Some(f) = forms.iter().find(|f| f.degree() != d0) {
            return Err(Error::InconsistentFormDegrees {
                block: k,
                first: d0,
                second: f.degree(),
            });
        }
    }
    let images: Vec<Vec<Scalar>> = parametrization
        .iter()
        .flatten()
        .map(|f| f.coeffs.iter().map(|&c| field.from_i64(c)).collect())
        .collect();
    let rows: Vec<SparseVec> = space
        .slice_basis(u)
        .iter()
        .map(|m| {
            let mut acc = vec![field.one()];
            for (v, image) in images.iter().enumerate().take(m.nvars()) {
                for _ in 0..m.exp(v) {
                    acc = mul_dense(field, &acc, image);
                }
            }
            acc.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
        })
        .collect();
    let ncols = rows.iter().filter_map(|r| r.last().map(|e| e.0 + 1)).max().unwrap_or(0);
    let mat = SparseMatrix {
        field,
        nrows: rows.len(),
        ncols,
        rows,
    };
    Ok(mat.rank())
}

/// Multiplication by a fixed form between two graded pieces of an ideal
/// or of a cyclic quotient, written in chosen bases. Row `i` of `matrix`
/// holds the coordinates of the image of source basis vector `i`.
#[derive(Clone, Debug)]
pub struct GradedSliceMap {
    pub source: MultiDegree,
    pub target: MultiDegree,
    pub multiplier: Polynomial,
    pub matrix: SparseMatrix,
}

impl GradedSliceMap {
    /// The map `(S/I)_v → (S/I)_w`, in standard-monomial bases.
    pub fn quotient(ideal: &Ideal, v: &MultiDegree, multiplier: &Polynomial) -> Result<GradedSliceMap> {
        let ring = ideal.ring();
        let a = ring
            .multidegree(multiplier)?
            .unwrap_or_else(|| MultiDegree::zero(v.len()));
        let w = v + &a;
        let pr = ideal.poly_ring();
        let field = ring.field();
        let src = standard_monomials(ideal, v);
        let tgt = standard_monomials(ideal, &w);
        let index = monomial_index(&tgt);
        let rows = src
            .iter()
            .map(|m| {
                let p = pr.mul_term(multiplier, m, &field.one());
                coordinates(&ideal.normal_form(&p), &index)
            })
            .collect();
        Ok(GradedSliceMap {
            source: v.clone(),
            target: w,
            multiplier: multiplier.clone(),
            matrix: SparseMatrix {
                field,
                nrows: src.len(),
                ncols: tgt.len(),
                rows,
            },
        })
    }

    /// The map `I_v → I_w`, in reduced echelon bases of the ideal slices.
    pub fn ideal(ideal: &Ideal, v: &MultiDegree, multiplier: &Polynomial) -> Result<GradedSliceMap> {
        let ring = ideal.ring();
        let a = ring
            .multidegree(multiplier)?
            .unwrap_or_else(|| MultiDegree::zero(v.len()));
        let w = v + &a;
        let pr = ideal.poly_ring();
        let field = ring.field();
        let space = ring.space();
        let src_mons = space.slice_basis(v);
        let tgt_mons = space.slice_basis(&w);
        let tgt_index = monomial_index(&tgt_mons);
        let src = ideal_slice_subspace(ideal, v);
        let tgt = ideal_slice_subspace(ideal, &w);
        let rows = src
            .basis
            .iter()
            .map(|row| {
                let p = pr.from_terms(row.iter().map(|(j, c)| (src_mons[*j].clone(), c.clone())).collect());
                let img = pr.mul(&p, multiplier);
                tgt.coordinates(&coordinates(&img, &tgt_index))
            })
            .collect();
        Ok(GradedSliceMap {
            source: v.clone(),
            target: w,
            multiplier: multiplier.clone(),
            matrix: SparseMatrix {
                field,
                nrows: src.dim(),
                ncols: tgt.dim(),
                rows,
            },
        })
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

/// Krull dimension of `S/I`, from the leading-term ideal: the largest set
/// of variables containing the support of no leading monomial. `None` for
/// the unit ideal.
pub fn krull_dimension(ideal: &Ideal) -> Option<usize> {
    let gb = ideal.gb();
    if gb.is_unit() {
        return None;
    }
    let n = ideal.ring().nvars();
    let supports: Vec<u64> = gb
        .leading_monomials()
        .map(|m| m.support().fold(0u64, |acc, v| acc | 1 << v))
        .collect();
    for size in (0..=n).rev() {
        for set in subsets(n, size) {
            let mask = set.iter().fold(0u64, |acc, &v| acc | 1 << v);
            if supports.iter().all(|s| s & !mask != 0) {
                return Some(size);
            }
        }
    }
    Some(0)
}

/// Dimension of the subscheme of the product space cut out by `ideal`,
/// `None` when it is empty.
pub fn subscheme_dimension(ideal: &Ideal) -> Option<usize> {
    let sat = super::saturate(ideal, &Ideal::irrelevant(ideal.ring()));
    let l = ideal.ring().space().nfactors();
    krull_dimension(&sat).and_then(|k| k.checked_sub(l))
}
