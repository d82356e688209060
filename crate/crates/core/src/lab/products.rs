use crate::arith::{binomial_u64, Field, SparseMatrix};
use crate::cohomology::{line_bundle_h, sheaf_cohomology_dim, Stabilization};
use crate::error::{Error, Result};
use crate::groebner::{ideal_power, ideal_slice_dimension, monomial_index, Ideal};
use crate::resolution::GradedModule;
use crate::ring::{CoxRing, MultiDegree, ProductSpace};

use super::theorem::{is_big_nef, nonnegative_vectors};

/// Default ceiling on the number of Cox variables of `X × X` in the
/// diagonal computation.
pub const DIAGONAL_VARIABLE_LIMIT: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MultiplicationMode {
    /// Rank of the multiplication map on monomial bases.
    DirectRank,
    /// Vanishing of `h^1(X × X, I_Δ ⊗ K_{X×X} ⊗ (L1 ⊠ L2))`.
    DiagonalVanishing,
}

/// The Cox ring of `X × X` and the ideal of the diagonal, generated by the
/// 2×2 minors of the coordinate matrices of each factor.
pub fn diagonal_ideal(space: &ProductSpace, field: Field) -> (CoxRing, Ideal) {
    let sq = CoxRing::new(space.square(), field);
    let pr = sq.poly_ring();
    let l = space.nfactors();
    let mut gens = Vec::new();
    for k in 0..l {
        let a = sq.space().block(k);
        let b = sq.space().block(l + k);
        let n = a.len();
        for i in 0..n {
            for j in i + 1..n {
                let p = pr.mul(&pr.var(a.start + i), &pr.var(b.start + j));
                let q = pr.mul(&pr.var(a.start + j), &pr.var(b.start + i));
                gens.push(pr.sub(&p, &q));
            }
        }
    }
    let ideal = Ideal::new(&sq, gens).expect("minors are multihomogeneous");
    (sq, ideal)
}

/// Surjectivity of `H^0(K + L1) ⊗ H^0(K + L2) → H^0(2K + L1 + L2)`.
///
/// The diagonal mode refuses products whose square has more than `limit`
/// Cox variables.
pub fn multiplication_map_check(
    space: &ProductSpace,
    field: Field,
    l1: &MultiDegree,
    l2: &MultiDegree,
    mode: MultiplicationMode,
    limit: usize,
    params: Stabilization,
) -> Result<bool> {
    let k = space.canonical();
    let a1 = &k + l1;
    let a2 = &k + l2;
    match mode {
        MultiplicationMode::DirectRank => {
            let target = space.slice_basis(&(&a1 + &a2));
            if target.is_empty() {
                return Ok(true);
            }
            let index = monomial_index(&target);
            let b1 = space.slice_basis(&a1);
            let b2 = space.slice_basis(&a2);
            let one = field.one();
            let rows = b1
                .iter()
                .flat_map(|m1| b2.iter().map(move |m2| m1.mul(m2)))
                .map(|m| vec![(index[&m], one.clone())])
                .collect::<Vec<_>>();
            let matrix = SparseMatrix {
                field,
                nrows: rows.len(),
                ncols: target.len(),
                rows,
            };
            Ok(matrix.rank() == target.len())
        }
        MultiplicationMode::DiagonalVanishing => {
            if 2 * space.nvars() > limit {
                return Err(Error::InvalidArgument(format!(
                    "X × X has {} Cox variables, above the limit of {limit}",
                    2 * space.nvars()
                )));
            }
            let (_, delta) = diagonal_ideal(space, field);
            let twist = a1.concat(&a2);
            let h1 = sheaf_cohomology_dim(&GradedModule::Ideal(delta), 1, &twist, params)?;
            Ok(h1 == 0)
        }
    }
}

/// `L_j − A_1 − … − A_d` is big and nef for both `j`, the hypothesis for
/// surjectivity with globally generated ample `A_i`.
pub fn adjoint_hypothesis(l1: &MultiDegree, l2: &MultiDegree, a: &[MultiDegree]) -> bool {
    [l1, l2].iter().all(|l| {
        let rest = a.iter().fold((*l).clone(), |acc, ai| &acc - ai);
        is_big_nef(&rest)
    })
}

/// `L_j − Σ u_k P_k` is big and nef for both `j` and every `u ∈ N^ℓ` with
/// `|u| = dim X` and `u_k <= C(n_k + 1, 2)`.
pub fn diagonal_hypothesis(space: &ProductSpace, l1: &MultiDegree, l2: &MultiDegree) -> bool {
    let caps: Vec<u64> = space.factors().iter().map(|&n| binomial_u64(n as u64 + 1, 2)).collect();
    nonnegative_vectors(space.nfactors(), space.dim())
        .into_iter()
        .filter(|u| u.components().iter().zip(&caps).all(|(&c, &cap)| c as u64 <= cap))
        .all(|u| is_big_nef(&(l1 - &u)) && is_big_nef(&(l2 - &u)))
}

/// Result of the Wahl-map vanishing check on `P^1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WahlCheck {
    pub vanishes: bool,
    /// `h^1` from the cohomology engine on the ideal power.
    pub h1: u64,
    /// `h^1(O(l1 − 3 − m, l2 − 3 − m))` from the closed form.
    pub closed_form_h1: u64,
    /// The power of the diagonal ideal is principal of degree `(m+1, m+1)`.
    pub principal: bool,
}

/// `h^1(P^1 × P^1, I_Δ^{m+1} ⊗ O(l1 − 2, l2 − 2)) = 0`.
pub fn wahl_vanishing_check(field: Field, m: u32, l1: i64, l2: i64, params: Stabilization) -> Result<WahlCheck> {
    let p1 = ProductSpace::new([1]).expect("valid factors");
    let (sq, delta) = diagonal_ideal(&p1, field);
    let power = ideal_power(&delta, m + 1);
    let d = (m + 1) as i64;
    let gb = power.gb();
    let principal = gb.polys.len() == 1 && sq.multidegree(&gb.polys[0])? == Some(MultiDegree::from([d, d]));
    let twist = MultiDegree::from([l1 - 2, l2 - 2]);
    let h1 = sheaf_cohomology_dim(&GradedModule::Ideal(power), 1, &twist, params)?;
    let closed_form_h1 = line_bundle_h(sq.space(), &MultiDegree::from([l1 - 2 - d, l2 - 2 - d]), 1);
    Ok(WahlCheck {
        vanishes: h1 == 0,
        h1,
        closed_form_h1,
        principal,
    })
}

/// `dim (I_Δ^{m+1})_u = dim S_{u − (m+1, m+1)}` at `u`, the slice-level form
/// of `I_Δ^{m+1} ≅ S(−(m+1), −(m+1))`.
pub fn diagonal_power_is_principal_at(field: Field, m: u32, u: &MultiDegree) -> bool {
    let p1 = ProductSpace::new([1]).expect("valid factors");
    let (sq, delta) = diagonal_ideal(&p1, field);
    let power = ideal_power(&delta, m + 1);
    let d = (m + 1) as i64;
    ideal_slice_dimension(&power, u) == sq.space().slice_dimension(&(u - &MultiDegree::from([d, d])))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_on_the_line() {
        let p1 = ProductSpace::new([1]).unwrap();
        let f = Field::default();
        let params = Stabilization::default();
        for mode in [MultiplicationMode::DirectRank, MultiplicationMode::DiagonalVanishing] {
            assert!(multiplication_map_check(&p1, f, &[4].into(), &[4].into(), mode, 8, params).unwrap());
            assert!(multiplication_map_check(&p1, f, &[3].into(), &[3].into(), mode, 8, params).unwrap());
        }
        assert!(adjoint_hypothesis(&[2].into(), &[3].into(), &[[1].into()]));
        assert!(!adjoint_hypothesis(&[1].into(), &[3].into(), &[[1].into()]));
    }

    #[test]
    fn diagonal_guard() {
        let p22 = ProductSpace::new([2, 2]).unwrap();
        let r = multiplication_map_check(
            &p22,
            Field::default(),
            &[4, 4].into(),
            &[4, 4].into(),
            MultiplicationMode::DiagonalVanishing,
            DIAGONAL_VARIABLE_LIMIT,
            Stabilization::default(),
        );
        assert!(r.is_err());
    }

    #[test]
    fn wahl_examples() {
        let f = Field::default();
        let p = Stabilization::default();
        assert!(wahl_vanishing_check(f, 0, 3, 3, p).unwrap().vanishes);
        assert!(wahl_vanishing_check(f, 1, 4, 4, p).unwrap().vanishes);
        let w = wahl_vanishing_check(f, 1, 4, 2, p).unwrap();
        assert!(!w.vanishes);
        assert_eq!((w.h1, w.closed_form_h1), (1, 1));
        assert!(w.principal);
        assert!(diagonal_power_is_principal_at(f, 2, &[4, 3].into()));
    }

    #[test]
    fn diagonal_of_the_plane() {
        let p2 = ProductSpace::new([2]).unwrap();
        let (_, d) = diagonal_ideal(&p2, Field::default());
        assert_eq!(d.generators().len(), 3);
        assert!(diagonal_hypothesis(&p2, &[4].into(), &[4].into()));
        assert!(!diagonal_hypothesis(&p2, &[2].into(), &[4].into()));
    }
}
