use crate::ring::{CoxRing, MultiDegree, PolyRing, Polynomial};

/// `⊕_j S(−a_j)`, recorded by its generator degrees `a_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeModule {
    pub degrees: Vec<MultiDegree>,
}

impl FreeModule {
    pub fn new(degrees: Vec<MultiDegree>) -> FreeModule {
        FreeModule { degrees }
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }
}

/// A dense matrix of polynomials. Column `j` is the image of the `j`-th
/// basis vector of the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    pub nrows: usize,
    pub ncols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> PolyMatrix {
        PolyMatrix {
            nrows,
            ncols,
            entries: vec![Polynomial::zero(); nrows * ncols],
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.ncols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Polynomial) {
        self.entries[r * self.ncols + c] = p;
    }

    /// Nonzero entries of column `c` as `(row, entry)`.
    pub fn column(&self, c: usize) -> impl Iterator<Item = (usize, &Polynomial)> {
        (0..self.nrows)
            .map(move |r| (r, self.get(r, c)))
            .filter(|(_, p)| !p.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }

    pub fn mul(&self, pr: &PolyRing, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.ncols, rhs.nrows, "dimension mismatch in product");
        let mut out = PolyMatrix::zeros(self.nrows, rhs.ncols);
        for r in 0..self.nrows {
            for c in 0..rhs.ncols {
                let mut acc = Polynomial::zero();
                for k in 0..self.ncols {
                    let (a, b) = (self.get(r, k), rhs.get(k, c));
                    if !a.is_zero() && !b.is_zero() {
                        acc = pr.add(&acc, &pr.mul(a, b));
                    }
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    pub(crate) fn remove_row(&mut self, r: usize) {
        let mut entries = Vec::with_capacity((self.nrows - 1) * self.ncols);
        for (i, row) in self.entries.chunks(self.ncols.max(1)).enumerate() {
            if i != r && self.ncols > 0 {
                entries.extend_from_slice(row);
            }
        }
        self.nrows -= 1;
        self.entries = entries;
    }

    pub(crate) fn remove_col(&mut self, c: usize) {
        let mut entries = Vec::with_capacity(self.nrows * (self.ncols - 1));
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                if j != c {
                    entries.push(self.entries[i * self.ncols + j].clone());
                }
            }
        }
        self.ncols -= 1;
        self.entries = entries;
    }
}

/// Which module a resolution resolves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Presented {
    /// `S/I`, with `F_0 = S`.
    Quotient,
    /// The ideal `I` itself, with `F_0` mapping onto its generators.
    Ideal,
    /// A module given by an explicit complex.
    Explicit,
}

/// A graded free resolution `0 ← F_0 ← F_1 ← ... ← F_s`. The differential
/// `d_i : F_i → F_{i−1}` is stored at `differentials[i − 1]`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    pub ring: CoxRing,
    pub modules: Vec<FreeModule>,
    pub differentials: Vec<PolyMatrix>,
    pub presented: Presented,
    /// The non-minimal complex the minimal one was extracted from.
    pub raw: Option<Box<FreeResolution>>,
}

impl FreeResolution {
    pub fn length(&self) -> usize {
        self.modules.len() - 1
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.rank()).collect()
    }

    /// `d_i`, for `1 <= i <= length`.
    pub fn differential(&self, i: usize) -> &PolyMatrix {
        &self.differentials[i - 1]
    }

    /// Graded Betti numbers: for each step, the distinct generator degrees
    /// with multiplicities, sorted.
    pub fn betti(&self) -> Vec<Vec<(MultiDegree, usize)>> {
        self.modules
            .iter()
            .map(|m| {
                let mut ds = m.degrees.clone();
                ds.sort();
                let mut out: Vec<(MultiDegree, usize)> = Vec::new();
                for d in ds {
                    match out.last_mut() {
                        Some((e, n)) if *e == d => *n += 1,
                        _ => out.push((d, 1)),
                    }
                }
                out
            })
            .collect()
    }

    /// Checks `d_{i−1} ∘ d_i = 0` as polynomial matrices.
    pub fn is_complex(&self) -> bool {
        let pr = self.ring.poly_ring();
        self.differentials.windows(2).all(|w| w[0].mul(&pr, &w[1]).is_zero())
    }

    /// Checks that every nonzero entry of `d_i` has degree
    /// `(column degree) − (row degree)`.
    pub fn is_homogeneous(&self) -> bool {
        (1..=self.length()).all(|i| {
            let d = self.differential(i);
            (0..d.ncols).all(|c| {
                d.column(c).all(|(r, p)| {
                    let want = &self.modules[i].degrees[c] - &self.modules[i - 1].degrees[r];
                    self.ring.multidegree(p).ok().flatten() == Some(want)
                })
            })
        })
    }

    /// Minimizes by repeatedly cancelling unit entries. Returns the
    /// minimized complex with `self` kept as its raw form.
    pub fn minimize(self) -> FreeResolution {
        let pr = self.ring.poly_ring();
        let mut modules = self.modules.clone();
        let mut diffs = self.differentials.clone();
        for k in (1..modules.len()).rev() {
            loop {
                let d = &diffs[k - 1];
                let unit = (0..d.ncols).find_map(|c| d.column(c).find(|(_, p)| p.is_unit()).map(|(r, _)| (r, c)));
                let Some((r, c)) = unit else { break };
                let d = &diffs[k - 1];
                let u_inv = d.get(r, c).lc().inv().unwrap();
                let mut nd = PolyMatrix::zeros(d.nrows, d.ncols);
                for i in 0..d.nrows {
                    for j in 0..d.ncols {
                        let a = d.get(i, j);
                        let b = d.get(i, c);
                        let e = d.get(r, j);
                        let v = if i == r || j == c || b.is_zero() || e.is_zero() {
                            a.clone()
                        } else {
                            let t = pr.scale(&pr.mul(b, e), &u_inv);
                            pr.sub(a, &t)
                        };
                        nd.set(i, j, v);
                    }
                }
                nd.remove_row(r);
                nd.remove_col(c);
                diffs[k - 1] = nd;
                if k < diffs.len() {
                    diffs[k].remove_row(c);
                }
                if k >= 2 {
                    diffs[k - 2].remove_col(r);
                }
                modules[k].degrees.remove(c);
                modules[k - 1].degrees.remove(r);
            }
        }
        // drop trailing zero modules
        while modules.len() > 1 && modules.last().unwrap().rank() == 0 {
            modules.pop();
            diffs.pop();
        }
        FreeResolution {
            ring: self.ring.clone(),
            modules,
            differentials: diffs,
            presented: self.presented.clone(),
            raw: Some(Box::new(self)),
        }
    }

    /// Whether no differential has a unit entry.
    pub fn is_minimal(&self) -> bool {
        self.differentials
            .iter()
            .all(|d| (0..d.ncols).all(|c| d.column(c).all(|(_, p)| !p.is_unit())))
    }
}
