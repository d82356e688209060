use crate::arith::subsets;
use crate::error::{Error, Result};
use crate::ring::{MultiDegree, ProductSpace};

use super::line_bundle::line_bundle_cohomology;

/// Result of chopping the Koszul complex of a complete intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulChop {
    /// `h^i(I_Y ⊗ O(twist))` for `i = 0..=dim X`, where asserted.
    pub dims: Vec<Option<u64>>,
    pub valid: bool,
    /// `N = twist − K − Σ d_j`.
    pub nef_part: MultiDegree,
}

/// Cohomology of `I_Y(twist)` for a complete intersection `Y` of forms of
/// degrees `degrees`, read off from `h^{i+e−1}(K + N)` once every
/// intermediate term `K + Σ_{S} d + N` (`S` a nonempty proper subset) has
/// no higher cohomology.
///
/// Index 0 is asserted only when it is forced: for `e = 1`, or when the
/// terms `K + Σ_{|S| = e−1} d + N` also have no sections.
pub fn koszul_chop(space: &ProductSpace, degrees: &[MultiDegree], twist: &MultiDegree) -> Result<KoszulChop> {
    let l = space.nfactors();
    if degrees.is_empty() {
        return Err(Error::InvalidArgument(
            "a complete intersection needs at least one form".into(),
        ));
    }
    for d in degrees {
        if d.len() != l || d.components().iter().any(|&c| c < 1) {
            return Err(Error::InvalidArgument(format!(
                "form degree {d} is not ample on {space}"
            )));
        }
    }
    if twist.len() != l {
        return Err(Error::InvalidArgument(format!("twist {twist} has the wrong length")));
    }
    let e = degrees.len();
    let k = space.canonical();
    let sum = degrees.iter().fold(MultiDegree::zero(l), |acc, d| &acc + d);
    let n = &(twist - &k) - &sum;
    let dim = space.dim();
    let mut valid = n.is_nonnegative();
    let mut sections_vanish = true;
    let base = &k + &n;
    for size in 1..e {
        for s in subsets(e, size) {
            let a = s.iter().fold(base.clone(), |acc, &j| &acc + &degrees[j]);
            let h = line_bundle_cohomology(space, &a);
            if h[1..].iter().any(|&x| x != 0) {
                valid = false;
            }
            if size == e - 1 && h[0] != 0 {
                sections_vanish = false;
            }
        }
    }
    let top = line_bundle_cohomology(space, &base);
    let dims = (0..=dim)
        .map(|i| {
            if !valid || (i == 0 && e > 1 && !sections_vanish) {
                return None;
            }
            Some(top.get(i + e - 1).copied().unwrap_or(0))
        })
        .collect();
    Ok(KoszulChop {
        dims,
        valid,
        nef_part: n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_forms_on_p2_times_p2() {
        let x = ProductSpace::new([2, 2]).unwrap();
        let d = vec![MultiDegree::from([1, 1]); 3];
        let twist = &(&x.canonical() + &MultiDegree::from([3, 3])) + &MultiDegree::from([0, 3]);
        let c = koszul_chop(&x, &d, &twist).unwrap();
        assert!(c.valid);
        assert_eq!(c.nef_part, MultiDegree::from([0, 3]));
        assert_eq!(c.dims, vec![Some(1), Some(0), Some(0), Some(0), Some(0)]);
    }

    #[test]
    fn divisors_reduce_to_line_bundles() {
        let x = ProductSpace::new([1, 2]).unwrap();
        let d = [MultiDegree::from([2, 1])];
        for n in [[0, 0], [1, 3], [0, 2]] {
            let n = MultiDegree::from(n);
            let twist = &(&x.canonical() + &d[0]) + &n;
            let c = koszul_chop(&x, &d, &twist).unwrap();
            let want = line_bundle_cohomology(&x, &(&x.canonical() + &n));
            assert_eq!(c.dims, want.into_iter().map(Some).collect::<Vec<_>>());
        }
    }

    #[test]
    fn big_and_nef_kills_higher_cohomology() {
        let x = ProductSpace::new([1, 1]).unwrap();
        let d = vec![MultiDegree::from([1, 2]), MultiDegree::from([2, 1])];
        let twist = &(&(&x.canonical() + &d[0]) + &d[1]) + &MultiDegree::from([1, 1]);
        let c = koszul_chop(&x, &d, &twist).unwrap();
        assert!(c.valid);
        assert!(c.dims[1..].iter().all(|&h| h == Some(0)));
    }

    #[test]
    fn rejects_non_ample_forms() {
        let x = ProductSpace::new([1, 1]).unwrap();
        assert!(koszul_chop(&x, &[MultiDegree::from([0, 1])], &MultiDegree::from([0, 0])).is_err());
    }
}
