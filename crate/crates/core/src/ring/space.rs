use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use crate::arith::binomial_u64;
use crate::error::{Error, Result};

use super::Monomial;

/// An element of `Z^l`: a grading degree or the line bundle `O(u)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiDegree(pub Vec<i64>);

impl MultiDegree {
    pub fn new(components: impl Into<Vec<i64>>) -> MultiDegree {
        MultiDegree(components.into())
    }

    pub fn zero(len: usize) -> MultiDegree {
        MultiDegree(vec![0; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn components(&self) -> &[i64] {
        &self.0
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn scale(&self, k: i64) -> MultiDegree {
        MultiDegree(self.0.iter().map(|c| c * k).collect())
    }

    /// Concatenation, used for the degrees of a product `X x X`.
    pub fn concat(&self, other: &MultiDegree) -> MultiDegree {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        MultiDegree(v)
    }

    /// Parses `a,b,...` (surrounding parentheses optional).
    pub fn parse(text: &str) -> Result<MultiDegree> {
        let t = text.trim().trim_start_matches('(').trim_end_matches(')');
        let comps: std::result::Result<Vec<i64>, _> = t.split(',').map(|s| s.trim().parse::<i64>()).collect();
        comps
            .map(MultiDegree)
            .map_err(|e| Error::InvalidArgument(format!("bad multidegree `{text}`: {e}")))
    }
}

impl From<&[i64]> for MultiDegree {
    fn from(v: &[i64]) -> Self {
        MultiDegree(v.to_vec())
    }
}

impl<const N: usize> From<[i64; N]> for MultiDegree {
    fn from(v: [i64; N]) -> Self {
        MultiDegree(v.to_vec())
    }
}

impl Index<usize> for MultiDegree {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl<'a> Add<&'a MultiDegree> for &'a MultiDegree {
    type Output = MultiDegree;
    fn add(self, rhs: &MultiDegree) -> MultiDegree {
        assert_eq!(self.len(), rhs.len(), "multidegree length mismatch");
        MultiDegree(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub<&'a MultiDegree> for &'a MultiDegree {
    type Output = MultiDegree;
    fn sub(self, rhs: &MultiDegree) -> MultiDegree {
        assert_eq!(self.len(), rhs.len(), "multidegree length mismatch");
        MultiDegree(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &MultiDegree {
    type Output = MultiDegree;
    fn neg(self) -> MultiDegree {
        MultiDegree(self.0.iter().map(|a| -a).collect())
    }
}

/// The ambient `P^{n_1} x ... x P^{n_l}` together with the block structure
/// of its Cox ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProductSpace {
    factors: Vec<u32>,
    offsets: Vec<usize>,
}

impl ProductSpace {
    pub fn new(factors: impl Into<Vec<u32>>) -> Result<ProductSpace> {
        let factors = factors.into();
        if factors.is_empty() || factors.contains(&0) {
            return Err(Error::InvalidArgument(
                "a product space needs at least one factor, each of dimension >= 1".into(),
            ));
        }
        let mut offsets = Vec::with_capacity(factors.len() + 1);
        let mut acc = 0usize;
        for &n in &factors {
            offsets.push(acc);
            acc += n as usize + 1;
        }
        offsets.push(acc);
        Ok(ProductSpace { factors, offsets })
    }

    /// Parses `P(n1,...,nl)`.
    pub fn parse(text: &str) -> Result<ProductSpace> {
        let t = text.trim();
        let inner = t
            .strip_prefix("P(")
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidArgument(format!("expected P(n1,...,nl), got `{t}`")))?;
        let factors: std::result::Result<Vec<u32>, _> = inner.split(',').map(|s| s.trim().parse::<u32>()).collect();
        let factors = factors.map_err(|e| Error::InvalidArgument(format!("bad factor list `{t}`: {e}")))?;
        ProductSpace::new(factors)
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    /// Number of factors `l`.
    pub fn nfactors(&self) -> usize {
        self.factors.len()
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|&n| n as usize).sum()
    }

    pub fn nvars(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    /// Variable index range of block `k`.
    pub fn block(&self, k: usize) -> std::ops::Range<usize> {
        self.offsets[k]..self.offsets[k + 1]
    }

    pub fn block_of(&self, var: usize) -> usize {
        self.offsets.partition_point(|&o| o <= var) - 1
    }

    /// `K = (-n_1 - 1, ..., -n_l - 1)`.
    pub fn canonical(&self) -> MultiDegree {
        MultiDegree(self.factors.iter().map(|&n| -(n as i64) - 1).collect())
    }

    /// `X x X`, the product with itself.
    pub fn square(&self) -> ProductSpace {
        let mut f = self.factors.clone();
        f.extend_from_slice(&self.factors);
        ProductSpace::new(f).expect("valid factors")
    }

    pub fn degree_of(&self, m: &Monomial) -> MultiDegree {
        MultiDegree(
            (0..self.nfactors())
                .map(|k| self.block(k).map(|v| m.exp(v) as i64).sum())
                .collect(),
        )
    }

    /// Generators of the irrelevant ideal: one variable from each block,
    /// multiplied together. There are `prod (n_k + 1)` of them.
    pub fn irrelevant_generators(&self) -> Vec<Monomial> {
        self.irrelevant_powers(1)
    }

    /// The `t`-th powers of the irrelevant generators.
    pub fn irrelevant_powers(&self, t: u32) -> Vec<Monomial> {
        let mut out = vec![vec![0u32; self.nvars()]];
        for k in 0..self.nfactors() {
            let mut next = Vec::new();
            for e in &out {
                for v in self.block(k) {
                    let mut e2 = e.clone();
                    e2[v] = t;
                    next.push(e2);
                }
            }
            out = next;
        }
        out.into_iter().map(Monomial::from_exponents).collect()
    }

    /// `dim S_u = prod C(u_k + n_k, n_k)`, zero if some `u_k < 0`.
    pub fn slice_dimension(&self, u: &MultiDegree) -> u64 {
        assert_eq!(u.len(), self.nfactors(), "multidegree length mismatch");
        let mut acc = 1u64;
        for (k, &n) in self.factors.iter().enumerate() {
            if u[k] < 0 {
                return 0;
            }
            acc = acc
                .checked_mul(binomial_u64(u[k] as u64 + n as u64, n as u64))
                .expect("slice dimension overflows u64");
        }
        acc
    }

    /// All monomials of multidegree `u`, in decreasing graded reverse
    /// lexicographic order.
    pub fn slice_basis(&self, u: &MultiDegree) -> Vec<Monomial> {
        assert_eq!(u.len(), self.nfactors(), "multidegree length mismatch");
        if !u.is_nonnegative() {
            return Vec::new();
        }
        let mut per_block: Vec<Vec<Vec<u32>>> = Vec::new();
        for k in 0..self.nfactors() {
            let nv = self.factors[k] as usize + 1;
            per_block.push(crate::arith::compositions(u[k] as u32, nv));
        }
        let mut out = vec![Vec::<u32>::with_capacity(self.nvars())];
        for blk in &per_block {
            let mut next = Vec::with_capacity(out.len() * blk.len());
            for prefix in &out {
                for e in blk {
                    let mut v = prefix.clone();
                    v.extend_from_slice(e);
                    next.push(v);
                }
            }
            out = next;
        }
        let mut monos: Vec<Monomial> = out.into_iter().map(Monomial::from_exponents).collect();
        let order = super::MonomialOrder::GRevLex;
        monos.sort_by(|a, b| order.cmp(b, a));
        monos
    }
}

impl fmt::Display for ProductSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P(")?;
        for (i, n) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, ")")
    }
}

/// `dim S_u` on `ring`.
pub fn degree_slice_dimension(ring: &ProductSpace, u: &MultiDegree) -> u64 {
    ring.slice_dimension(u)
}

/// Monomial basis of `S_u` in the default order.
pub fn degree_slice_basis(ring: &ProductSpace, u: &MultiDegree) -> Vec<Monomial> {
    ring.slice_basis(u)
}
