//! Exact sparse linear algebra over a [`Field`].

use std::collections::HashMap;

use super::scalar::{Field, Scalar};

/// A sparse vector: `(index, value)` pairs, strictly increasing in index,
/// with no stored zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

/// `x + factor * y`.
pub fn axpy(x: &SparseVec, factor: &Scalar, y: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push(x[i].clone());
            i += 1;
        } else if i == x.len() || y[j].0 < x[i].0 {
            let v = factor * &y[j].1;
            if !v.is_zero() {
                out.push((y[j].0, v));
            }
            j += 1;
        } else {
            let v = x[i].1.add_mul(factor, &y[j].1);
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Row-major sparse matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub field: Field,
    pub nrows: usize,
    pub ncols: usize,
    pub rows: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(field: Field, nrows: usize, ncols: usize) -> SparseMatrix {
        SparseMatrix {
            field,
            nrows,
            ncols,
            rows: vec![Vec::new(); nrows],
        }
    }

    pub fn from_dense(field: Field, dense: &[Vec<i64>]) -> SparseMatrix {
        let nrows = dense.len();
        let ncols = dense.first().map_or(0, |r| r.len());
        let rows = dense
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter_map(|(j, &v)| {
                        let s = field.from_i64(v);
                        (!s.is_zero()).then_some((j, s))
                    })
                    .collect()
            })
            .collect();
        SparseMatrix {
            field,
            nrows,
            ncols,
            rows,
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        match self.rows[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(k) => self.rows[i][k].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut rows: Vec<SparseVec> = vec![Vec::new(); self.ncols];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, v) in r {
                rows[*j].push((i, v.clone()));
            }
        }
        SparseMatrix {
            field: self.field,
            nrows: self.ncols,
            ncols: self.nrows,
            rows,
        }
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, rhs.nrows, "dimension mismatch in product");
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc: SparseVec = Vec::new();
                for (k, v) in r {
                    acc = axpy(&acc, v, &rhs.rows[*k]);
                }
                acc
            })
            .collect();
        SparseMatrix {
            field: self.field,
            nrows: self.nrows,
            ncols: rhs.ncols,
            rows,
        }
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.field);
        let mut order: Vec<usize> = (0..self.nrows).collect();
        order.sort_by_key(|&i| self.rows[i].len());
        for i in order {
            ech.insert(self.rows[i].clone());
        }
        ech.rank()
    }
}

/// Incrementally built row echelon form, keyed by pivot column.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    pivots: HashMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(field: Field) -> Echelon {
        Echelon {
            field,
            pivots: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the stored pivots and stores the remainder if
    /// it is nonzero. Returns whether the rank grew.
    pub fn insert(&mut self, mut row: SparseVec) -> bool {
        while let Some((c, v)) = row.first().cloned() {
            match self.pivots.get(&c) {
                Some(p) => row = axpy(&row, &-&v, p),
                None => {
                    let inv = v.inv().expect("nonzero leading entry");
                    for e in row.iter_mut() {
                        e.1 = &e.1 * &inv;
                    }
                    self.pivots.insert(c, row);
                    return true;
                }
            }
        }
        false
    }

    /// Reduced row echelon basis of the span, ordered by pivot column.
    pub fn reduced_basis(&self) -> Vec<SparseVec> {
        let mut cols: Vec<usize> = self.pivots.keys().copied().collect();
        cols.sort_unstable();
        let mut rows: Vec<SparseVec> = cols.iter().map(|c| self.pivots[c].clone()).collect();
        // back substitution from the last pivot upwards
        for i in (0..rows.len()).rev() {
            let (pc, row_i) = (cols[i], rows[i].clone());
            for r in rows.iter_mut().take(i) {
                if let Ok(k) = r.binary_search_by_key(&pc, |(c, _)| *c) {
                    let f = -&r[k].1;
                    *r = axpy(r, &f, &row_i);
                }
            }
        }
        let _ = self.field;
        rows
    }
}

/// A subspace given by a reduced row echelon basis; expresses members in
/// basis coordinates.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub basis: Vec<SparseVec>,
    pivot_index: HashMap<usize, usize>,
}

impl Subspace {
    pub fn span(field: Field, vectors: impl IntoIterator<Item = SparseVec>) -> Subspace {
        let mut ech = Echelon::new(field);
        let mut vs: Vec<SparseVec> = vectors.into_iter().collect();
        vs.sort_by_key(|v| v.len());
        for v in vs {
            ech.insert(v);
        }
        let basis = ech.reduced_basis();
        let pivot_index = basis.iter().enumerate().map(|(i, r)| (r[0].0, i)).collect();
        Subspace { basis, pivot_index }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `v` (assumed to lie in the subspace) in the basis.
    pub fn coordinates(&self, v: &SparseVec) -> SparseVec {
        let mut out: SparseVec = v
            .iter()
            .filter_map(|(c, x)| self.pivot_index.get(c).map(|&i| (i, x.clone())))
            .collect();
        out.sort_by_key(|e| e.0);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::DEFAULT_PRIME;

    #[test]
    fn rank_of_small_matrices() {
        let f = Field::Prime(DEFAULT_PRIME);
        let m = SparseMatrix::from_dense(f, &[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(m.rank(), 2);
        let q = SparseMatrix::from_dense(Field::Rational, &[vec![1, 1], vec![1, -1]]);
        assert_eq!(q.rank(), 2);
        assert_eq!(SparseMatrix::zeros(f, 3, 4).rank(), 0);
    }

    #[test]
    fn product_and_transpose() {
        let f = Field::Rational;
        let a = SparseMatrix::from_dense(f, &[vec![1, 2], vec![0, 1]]);
        let b = SparseMatrix::from_dense(f, &[vec![1, 0], vec![3, 1]]);
        assert_eq!(a.mul(&b), SparseMatrix::from_dense(f, &[vec![7, 2], vec![3, 1]]));
        assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn subspace_coordinates() {
        let f = Field::Rational;
        let v1: SparseVec = vec![(0, f.from_i64(1)), (2, f.from_i64(1))];
        let v2: SparseVec = vec![(1, f.from_i64(1)), (2, f.from_i64(-1))];
        let s = Subspace::span(f, vec![v1.clone(), v2.clone()]);
        assert_eq!(s.dim(), 2);
        let w = axpy(&v1, &f.from_i64(3), &v2);
        let c = s.coordinates(&w);
        assert_eq!(c, vec![(0, f.from_i64(1)), (1, f.from_i64(3))]);
    }
}
