//! Syzygies by Schreyer's method.
//!
//! A level of the computation is a list of module elements forming a
//! Gröbner basis of a submodule of a free module `F` for the order induced
//! on `F` by the previous level. The S-pair syzygies of the list then form
//! a Gröbner basis of the syzygy module for the next induced order.

use std::cmp::Ordering;

use crate::arith::Scalar;
use crate::groebner::Ideal;
use crate::ring::{Monomial, MonomialOrder, MultiDegree, PolyRing, Polynomial};

use super::complex::{FreeModule, FreeResolution, PolyMatrix, Presented};

type Term = (Monomial, usize, Scalar);

/// Element of a free module: terms sorted decreasingly, no zero
/// coefficients.
type Elem = Vec<Term>;

/// The induced order on a free module: `x^a e_i` is compared through
/// `x^a * shift[i]` in grevlex, ties broken by `rank[i]` (smaller is larger).
struct ModuleOrder {
    shift: Vec<Monomial>,
    rank: Vec<usize>,
}

impl ModuleOrder {
    fn cmp(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        let ka = a.0.mul(&self.shift[a.1]);
        let kb = b.0.mul(&self.shift[b.1]);
        MonomialOrder::GRevLex
            .cmp(&ka, &kb)
            .then_with(|| self.rank[b.1].cmp(&self.rank[a.1]))
    }

    fn sort(&self, mut terms: Vec<Term>) -> Elem {
        terms.sort_by(|x, y| self.cmp((&y.0, y.1), (&x.0, x.1)));
        let mut out: Elem = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.0 == t.0 && last.1 == t.1 => last.2 = &last.2 + &t.2,
                _ => {
                    if out.last().is_some_and(|l| l.2.is_zero()) {
                        out.pop();
                    }
                    out.push(t);
                }
            }
        }
        if out.last().is_some_and(|l| l.2.is_zero()) {
            out.pop();
        }
        out
    }

    /// `f + c * m * g`.
    fn add_mul_term(&self, f: &Elem, c: &Scalar, m: &Monomial, g: &Elem) -> Elem {
        let mut out = Vec::with_capacity(f.len() + g.len());
        let (mut i, mut j) = (0, 0);
        let shifted: Vec<Monomial> = g.iter().map(|t| t.0.mul(m)).collect();
        while i < f.len() || j < g.len() {
            let ord = if i == f.len() {
                Ordering::Less
            } else if j == g.len() {
                Ordering::Greater
            } else {
                self.cmp((&f[i].0, f[i].1), (&shifted[j], g[j].1))
            };
            match ord {
                Ordering::Greater => {
                    out.push(f[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let v = c * &g[j].2;
                    if !v.is_zero() {
                        out.push((shifted[j].clone(), g[j].1, v));
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let v = f[i].2.add_mul(c, &g[j].2);
                    if !v.is_zero() {
                        out.push((shifted[j].clone(), g[j].1, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }
}

fn lex_desc(a: &Monomial, b: &Monomial) -> Ordering {
    b.exponents().cmp(a.exponents())
}

/// One Schreyer step. `gens` must be a Gröbner basis for `order`, sorted
/// so that within a lead component lead monomials decrease lexicographically.
/// Returns the sorted syzygy basis and the order it induces.
fn syzygy_step(order: &ModuleOrder, gens: &[Elem], chains: &[Vec<usize>]) -> (ModuleOrder, Vec<Vec<usize>>, Vec<Elem>) {
    let n = gens.len();
    let shift: Vec<Monomial> = gens.iter().map(|g| g[0].0.mul(&order.shift[g[0].1])).collect();
    let new_chains: Vec<Vec<usize>> = gens
        .iter()
        .enumerate()
        .map(|(a, g)| {
            let mut c = chains[g[0].1].clone();
            c.push(a);
            c
        })
        .collect();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| new_chains[a].cmp(&new_chains[b]));
    let mut rank = vec![0; n];
    for (r, &a) in idx.iter().enumerate() {
        rank[a] = r;
    }
    let next = ModuleOrder { shift, rank };

    let mut syz: Vec<Elem> = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let (ma, ia, ca) = &gens[a][0];
            let (mb, ib, cb) = &gens[b][0];
            if ia != ib {
                continue;
            }
            let l = ma.lcm(mb);
            let qa = l.div(ma).unwrap();
            let qb = l.div(mb).unwrap();
            let fa = ca.inv().unwrap();
            let fb = -&cb.inv().unwrap();
            let mut terms: Vec<Term> = vec![(qa.clone(), a, fa.clone()), (qb.clone(), b, fb.clone())];
            // reduce the S-element, recording quotients as syzygy terms
            let mut s = order.add_mul_term(&Vec::new(), &fa, &qa, &gens[a]);
            s = order.add_mul_term(&s, &fb, &qb, &gens[b]);
            while let Some((m, i, c)) = s.first().cloned() {
                let k = (0..n)
                    .find(|&k| gens[k][0].1 == i && gens[k][0].0.divides(&m))
                    .expect("generators of each level form a Gröbner basis");
                let q = m.div(&gens[k][0].0).unwrap();
                let coef = c.div(&gens[k][0].2);
                s = order.add_mul_term(&s, &-&coef, &q, &gens[k]);
                terms.push((q, k, -&coef));
            }
            let e = next.sort(terms);
            if !e.is_empty() {
                syz.push(e);
            }
        }
    }

    // keep only elements whose lead term is minimal in its component
    let mut keep = Vec::new();
    for (x, e) in syz.iter().enumerate() {
        let (m, i, _) = &e[0];
        let redundant = syz
            .iter()
            .enumerate()
            .any(|(y, f)| y != x && f[0].1 == *i && f[0].0.divides(m) && (f[0].0 != *m || y < x));
        if !redundant {
            keep.push(e.clone());
        }
    }
    keep.sort_by(|a, b| a[0].1.cmp(&b[0].1).then_with(|| lex_desc(&a[0].0, &b[0].0)));
    (next, new_chains, keep)
}

fn to_matrix(pr: &PolyRing, gens: &[Elem], nrows: usize) -> PolyMatrix {
    let mut d = PolyMatrix::zeros(nrows, gens.len());
    for (c, g) in gens.iter().enumerate() {
        let mut per_row: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); nrows];
        for (m, r, x) in g {
            per_row[*r].push((m.clone(), x.clone()));
        }
        for (r, terms) in per_row.into_iter().enumerate() {
            if !terms.is_empty() {
                d.set(r, c, pr.from_terms(terms));
            }
        }
    }
    d
}

/// A free resolution of `S/I` (or of `I`), built from Schreyer syzygies of
/// the reduced Gröbner basis and then minimized. The length is capped at
/// `max(max_length, number of variables)`.
pub fn resolve(ideal: &Ideal, presented: Presented, max_length: usize) -> FreeResolution {
    let ring = ideal.ring().clone();
    let pr = ring.poly_ring();
    let space = ring.space().clone();
    let l = space.nfactors();
    let cap = max_length.max(ring.nvars());

    let mut gb: Vec<Polynomial> = ideal.gb().polys.clone();
    gb.sort_by(|a, b| lex_desc(a.lm(), b.lm()));
    let mut gens: Vec<Elem> = gb
        .iter()
        .map(|p| p.terms().iter().map(|(m, c)| (m.clone(), 0, c.clone())).collect())
        .collect();
    let mut order = ModuleOrder {
        shift: vec![Monomial::one(ring.nvars())],
        rank: vec![0],
    };
    let mut chains = vec![vec![0usize]];

    let mut modules = vec![FreeModule::new(vec![MultiDegree::zero(l)])];
    let mut diffs = Vec::new();
    while !gens.is_empty() && diffs.len() < cap {
        let prev = modules.last().unwrap();
        let degrees = gens
            .iter()
            .map(|g| &space.degree_of(&g[0].0) + &prev.degrees[g[0].1])
            .collect();
        diffs.push(to_matrix(&pr, &gens, prev.rank()));
        modules.push(FreeModule::new(degrees));
        let (next, next_chains, syz) = syzygy_step(&order, &gens, &chains);
        order = next;
        chains = next_chains;
        gens = syz;
    }

    let raw = FreeResolution {
        ring: ring.clone(),
        modules,
        differentials: diffs,
        presented: Presented::Quotient,
        raw: None,
    };
    let mut res = raw.minimize();
    if presented == Presented::Ideal {
        res = shift_to_ideal(res);
    }
    res
}

/// Drops `F_0 = S` from a resolution of `S/I`, giving one of `I`.
fn shift_to_ideal(mut r: FreeResolution) -> FreeResolution {
    if r.modules.len() > 1 {
        r.modules.remove(0);
        r.differentials.remove(0);
    }
    r.presented = Presented::Ideal;
    if let Some(raw) = r.raw.take() {
        r.raw = Some(Box::new(shift_to_ideal(*raw)));
    }
    r
}
