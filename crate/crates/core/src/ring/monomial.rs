use std::cmp::Ordering;

use smallvec::SmallVec;

/// Exponent vector across all variable blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u32; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: impl IntoIterator<Item = u32>) -> Monomial {
        Monomial(exps.into_iter().collect())
    }

    pub fn var(nvars: usize, i: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Product; panics on exponent overflow.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(
            self.0
                .iter()
                .map(|a| a.checked_mul(k).expect("exponent overflow"))
                .collect(),
        )
    }

    /// Indices of variables with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// Drops the first `k` variables.
    pub fn drop_front(&self, k: usize) -> Monomial {
        Monomial(self.0[k..].iter().copied().collect())
    }

    /// Prepends `k` variables with the given exponents.
    pub fn prepend(&self, front: &[u32]) -> Monomial {
        Monomial(front.iter().chain(self.0.iter()).copied().collect())
    }
}

/// Monomial orders used by the engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic order on total degree.
    #[default]
    GRevLex,
    /// Block order: grevlex on the first `eliminate` variables, ties broken
    /// by grevlex on the remaining ones. Eliminates the leading block.
    Elimination { eliminate: usize },
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            // smaller exponent in the last differing variable is larger
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::GRevLex => grevlex(&a.0, &b.0),
            MonomialOrder::Elimination { eliminate } => match grevlex(&a.0[..eliminate], &b.0[..eliminate]) {
                Ordering::Equal => grevlex(&a.0[eliminate..], &b.0[eliminate..]),
                o => o,
            },
        }
    }
}
