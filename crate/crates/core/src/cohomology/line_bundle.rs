//! Closed-form cohomology of line bundles on products of projective spaces.

use crate::arith::{binomial_poly, binomial_u64};
use crate::ring::{MultiDegree, ProductSpace};

/// `h^i(P^n, O(d))`: `C(d+n, n)` in degree 0 for `d >= 0`, `C(−d−1, n)` in
/// degree `n` for `d <= −n−1`, zero otherwise.
pub fn projective_space_cohomology(n: u32, d: i64, i: u32) -> u64 {
    if i == 0 && d >= 0 {
        binomial_u64((d + n as i64) as u64, n as u64)
    } else if i == n && d < -(n as i64) {
        binomial_u64((-d - 1) as u64, n as u64)
    } else {
        0
    }
}

/// `h^i(X, O(a))` for `i = 0..=dim X`, by the Künneth formula.
pub fn line_bundle_cohomology(space: &ProductSpace, a: &MultiDegree) -> Vec<u64> {
    assert_eq!(a.len(), space.nfactors(), "multidegree length mismatch");
    let mut acc = vec![1u64];
    for (k, &n) in space.factors().iter().enumerate() {
        // each factor has cohomology in at most one degree
        let mut next = vec![0u64; acc.len() + n as usize];
        for i in [0, n] {
            let h = projective_space_cohomology(n, a[k], i);
            if h == 0 {
                continue;
            }
            for (j, &x) in acc.iter().enumerate() {
                next[j + i as usize] += x * h;
            }
        }
        acc = next;
    }
    acc
}

/// `h^i(X, O(a))` for a single index.
pub fn line_bundle_h(space: &ProductSpace, a: &MultiDegree, i: usize) -> u64 {
    line_bundle_cohomology(space, a).get(i).copied().unwrap_or(0)
}

/// `χ(X, O(a)) = Π_k C(a_k + n_k, n_k)` as an integer-valued polynomial.
pub fn line_bundle_euler(space: &ProductSpace, a: &MultiDegree) -> i128 {
    space
        .factors()
        .iter()
        .enumerate()
        .map(|(k, &n)| binomial_poly(a[k], n))
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let p22 = ProductSpace::new([2, 2]).unwrap();
        assert_eq!(line_bundle_cohomology(&p22, &[-3, 0].into()), vec![0, 0, 1, 0, 0]);
        assert_eq!(line_bundle_cohomology(&p22, &[0, 0].into()), vec![1, 0, 0, 0, 0]);
        let p12 = ProductSpace::new([1, 2]).unwrap();
        assert_eq!(line_bundle_cohomology(&p12, &[-2, 1].into()), vec![0, 3, 0, 0]);
    }

    #[test]
    fn serre_duality_and_euler() {
        let x = ProductSpace::new([1, 2]).unwrap();
        let k = x.canonical();
        for a in -5..4 {
            for b in -6..4 {
                let u = MultiDegree::from([a, b]);
                let h = line_bundle_cohomology(&x, &u);
                let dual = line_bundle_cohomology(&x, &(&k - &u));
                for i in 0..=3 {
                    assert_eq!(h[i], dual[3 - i]);
                }
                let chi: i128 = h
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| if i % 2 == 0 { x as i128 } else { -(x as i128) })
                    .sum();
                assert_eq!(chi, line_bundle_euler(&x, &u));
            }
        }
    }
}
