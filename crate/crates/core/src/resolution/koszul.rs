//! Koszul complexes and the explicit resolution of `S/B^[t]`.

use crate::arith::subsets;
use crate::error::{Error, Result};
use crate::ring::{CoxRing, Monomial, MultiDegree, Polynomial};

use super::complex::{FreeModule, FreeResolution, PolyMatrix, Presented};

/// The shape of the Koszul complex on forms of the given degrees:
/// `F_k = ⊕_{|T| = k} S(−Σ_{i∈T} deg_i)`, subsets in lexicographic order.
pub fn koszul_shape(degrees: &[MultiDegree]) -> Result<Vec<FreeModule>> {
    let Some(first) = degrees.first() else {
        return Err(Error::InvalidArgument(
            "a Koszul complex needs at least one form".into(),
        ));
    };
    let l = first.len();
    Ok((0..=degrees.len())
        .map(|k| {
            FreeModule::new(
                subsets(degrees.len(), k)
                    .iter()
                    .map(|t| t.iter().fold(MultiDegree::zero(l), |acc, &i| &acc + &degrees[i]))
                    .collect(),
            )
        })
        .collect())
}

/// The Koszul complex on concrete homogeneous forms. It resolves
/// `S/(f_1, ..., f_e)` exactly when the forms are a regular sequence.
pub fn koszul_resolution(ring: &CoxRing, forms: &[Polynomial]) -> Result<FreeResolution> {
    let degrees = forms
        .iter()
        .map(|f| {
            ring.multidegree(f)?
                .ok_or_else(|| Error::InvalidArgument("Koszul forms must be nonzero".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let modules = koszul_shape(&degrees)?;
    let pr = ring.poly_ring();
    let e = forms.len();
    let mut diffs = Vec::with_capacity(e);
    for k in 1..=e {
        let src = subsets(e, k);
        let tgt = subsets(e, k - 1);
        let mut d = PolyMatrix::zeros(tgt.len(), src.len());
        for (c, t) in src.iter().enumerate() {
            for (pos, &i) in t.iter().enumerate() {
                let mut rest = t.clone();
                rest.remove(pos);
                let r = tgt.iter().position(|s| *s == rest).unwrap();
                let f = if pos % 2 == 0 {
                    forms[i].clone()
                } else {
                    pr.neg(&forms[i])
                };
                d.set(r, c, f);
            }
        }
        diffs.push(d);
    }
    Ok(FreeResolution {
        ring: ring.clone(),
        modules,
        differentials: diffs,
        presented: Presented::Explicit,
        raw: None,
    })
}

/// A generator of the resolution of `S/B^[t]`: one nonempty subset of
/// variables per block (an empty tuple denotes `F_0 = S`).
pub type BlockSubsets = Vec<Vec<usize>>;

/// The minimal resolution of `S/B^[t]`, where `B^[t]` is generated by the
/// `t`-th powers of the irrelevant generators. Since `B^[t]` is the product
/// of the ideals `(x_{k,0}^t, ..., x_{k,n_k}^t)` in disjoint sets of
/// variables, the tensor product of their truncated Koszul complexes
/// resolves it. Every differential entry is `± x^(t·1_T)` for a single
/// variable set `T`.
///
/// Also returns, for each step, the block subsets labelling its basis.
pub fn irrelevant_power_resolution(ring: &CoxRing, t: u32) -> (FreeResolution, Vec<Vec<BlockSubsets>>) {
    let space = ring.space();
    let l = space.nfactors();
    let n = ring.nvars();
    let pr = ring.poly_ring();
    let one = ring.field().one();

    // labels of F_{j+1}: tuples of nonempty subsets with sizes summing to j + l
    let block_sizes: Vec<usize> = (0..l).map(|k| space.block(k).len()).collect();
    let max_j = block_sizes.iter().sum::<usize>() - l;
    let mut labels: Vec<Vec<BlockSubsets>> = vec![vec![Vec::new()]];
    for j in 0..=max_j {
        let mut level = Vec::new();
        fn rec(k: usize, left: usize, sizes: &[usize], cur: &mut BlockSubsets, out: &mut Vec<BlockSubsets>) {
            if k == sizes.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            for extra in 0..=left.min(sizes[k] - 1) {
                for s in subsets(sizes[k], extra + 1) {
                    cur.push(s);
                    rec(k + 1, left - extra, sizes, cur, out);
                    cur.pop();
                }
            }
        }
        rec(0, j, &block_sizes, &mut Vec::new(), &mut level);
        labels.push(level);
    }

    let mono = |lab: &BlockSubsets| -> Monomial {
        let mut e = vec![0u32; n];
        for (k, s) in lab.iter().enumerate() {
            let off = space.block(k).start;
            for &i in s {
                e[off + i] = t;
            }
        }
        Monomial::from_exponents(e)
    };
    let degree = |lab: &BlockSubsets| -> MultiDegree {
        if lab.is_empty() {
            return MultiDegree::zero(l);
        }
        MultiDegree(lab.iter().map(|s| (s.len() as i64) * t as i64).collect())
    };

    let modules: Vec<FreeModule> = labels
        .iter()
        .map(|lv| FreeModule::new(lv.iter().map(degree).collect()))
        .collect();

    let mut diffs = Vec::new();
    // d_1: each generator maps to its monomial
    {
        let mut d = PolyMatrix::zeros(1, labels[1].len());
        for (c, lab) in labels[1].iter().enumerate() {
            d.set(0, c, pr.monomial(mono(lab)));
        }
        diffs.push(d);
    }
    for j in 2..labels.len() {
        let src = &labels[j];
        let tgt = &labels[j - 1];
        let mut d = PolyMatrix::zeros(tgt.len(), src.len());
        for (c, lab) in src.iter().enumerate() {
            // sign of the tensor product rule: (−1)^(homological degrees of
            // earlier factors); factor k sits in degree |T_k| − 1
            let mut before = 0usize;
            for k in 0..l {
                let s = &lab[k];
                if s.len() >= 2 {
                    for (pos, &i) in s.iter().enumerate() {
                        let mut rest = s.clone();
                        rest.remove(pos);
                        let mut target = lab.clone();
                        target[k] = rest;
                        let r = tgt.iter().position(|x| *x == target).unwrap();
                        let v = space.block(k).start + i;
                        let mut e = vec![0u32; n];
                        e[v] = t;
                        let sign_neg = (before + pos) % 2 == 1;
                        let c0 = if sign_neg { -&one } else { one.clone() };
                        d.set(r, c, pr.from_terms(vec![(Monomial::from_exponents(e), c0)]));
                    }
                }
                before += s.len() - 1;
            }
        }
        diffs.push(d);
    }
    (
        FreeResolution {
            ring: ring.clone(),
            modules,
            differentials: diffs,
            presented: Presented::Quotient,
            raw: None,
        },
        labels,
    )
}
