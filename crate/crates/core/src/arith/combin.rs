use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Machine-word binomial; panics if the value does not fit.
pub fn binomial_u64(n: u64, k: u64) -> u64 {
    binomial(n, k).to_u64().expect("binomial coefficient overflows u64")
}

/// The integer-valued polynomial `C(d + n, n) = (d+1)(d+2)...(d+n)/n!`
/// evaluated at any integer `d`; this is the Euler characteristic of
/// `O(d)` on `P^n`.
pub fn binomial_poly(d: i64, n: u32) -> i128 {
    let mut num: i128 = 1;
    for i in 1..=n as i128 {
        num *= d as i128 + i;
    }
    let mut den: i128 = 1;
    for i in 1..=n as i128 {
        den *= i;
    }
    num / den
}

/// All vectors in `N^parts` with coordinate sum `total`, in
/// lexicographically decreasing order of the first coordinate.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; parts];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for v in (0..=left).rev() {
            cur[i] = v;
            rec(i + 1, left - v, cur, out);
        }
    }
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, total, &mut cur, &mut out);
    out
}

/// All `k`-element subsets of `0..n` as sorted index vectors.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
