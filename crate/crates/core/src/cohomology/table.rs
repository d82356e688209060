use std::collections::BTreeMap;
use std::fmt;

use crate::ring::MultiDegree;

/// How a cohomology dimension was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    ClosedForm,
    ExtEngine,
    KoszulChop,
    LongExactSequence,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::ClosedForm => "closed-form",
            Provenance::ExtEngine => "ext-engine",
            Provenance::KoszulChop => "koszul-chop",
            Provenance::LongExactSequence => "long-exact-sequence",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A computed dimension with its provenance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Entry {
    pub dim: u64,
    pub provenance: Provenance,
}

/// Dimensions indexed by `(i, u)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CohomologyTable {
    entries: BTreeMap<(usize, MultiDegree), Entry>,
}

impl CohomologyTable {
    pub fn new() -> CohomologyTable {
        CohomologyTable::default()
    }

    pub fn insert(&mut self, i: usize, u: MultiDegree, dim: u64, provenance: Provenance) {
        self.entries.insert((i, u), Entry { dim, provenance });
    }

    pub fn get(&self, i: usize, u: &MultiDegree) -> Option<Entry> {
        self.entries.get(&(i, u.clone())).copied()
    }

    pub fn dim(&self, i: usize, u: &MultiDegree) -> Option<u64> {
        self.get(i, u).map(|e| e.dim)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries sorted by twist, then index.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &MultiDegree, Entry)> {
        let mut v: Vec<_> = self.entries.iter().map(|((i, u), e)| (*i, u, *e)).collect();
        v.sort_by(|a, b| a.1.cmp(b.1).then(a.0.cmp(&b.0)));
        v.into_iter()
    }

    /// Whether every entry is zero.
    pub fn all_zero(&self) -> bool {
        self.entries.values().all(|e| e.dim == 0)
    }
}
