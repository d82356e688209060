//! Buchberger's algorithm with the normal selection strategy and the
//! Gebauer–Möller pair criteria.

use std::borrow::Borrow;
use std::collections::BTreeSet;

use crate::ring::{Monomial, MonomialOrder, PolyRing, Polynomial};

/// A reduced Gröbner basis together with the arithmetic context it lives in.
/// Elements are monic and sorted by increasing leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub ring: PolyRing,
    pub polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.ring.order
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.polys.iter().map(|g| g.lm())
    }

    pub fn is_unit(&self) -> bool {
        self.polys.iter().any(|g| g.is_unit())
    }

    /// Remainder of `f` modulo the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form_with(&self.ring, f, &self.polys)
    }

    /// Whether a monomial lies in the leading-term ideal.
    pub fn lt_divides(&self, m: &Monomial) -> bool {
        self.polys.iter().any(|g| g.lm().divides(m))
    }

    /// Re-checks the Buchberger criterion: every S-polynomial reduces to 0.
    pub fn certify(&self) -> bool {
        let n = self.polys.len();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let s = self.ring.s_poly(&self.polys[i], &self.polys[j]);
                self.normal_form(&s).is_zero()
            })
        })
    }
}

/// Full reduction of `f` modulo `basis`. Picks the first divisor in list
/// order, which keeps the output deterministic.
pub(crate) fn normal_form_with<B: Borrow<Polynomial>>(ring: &PolyRing, f: &Polynomial, basis: &[B]) -> Polynomial {
    let mut p = f.clone();
    let mut rem: Vec<(Monomial, crate::arith::Scalar)> = Vec::new();
    loop {
        // split off the irreducible head in one go
        let terms = p.terms();
        let mut k = 0;
        let mut hit = None;
        while k < terms.len() {
            if let Some(g) = basis.iter().map(|g| g.borrow()).find(|g| g.lm().divides(&terms[k].0)) {
                hit = Some(g);
                break;
            }
            k += 1;
        }
        rem.extend_from_slice(&terms[..k]);
        let Some(g) = hit else {
            break;
        };
        let (m, c) = &terms[k];
        let q = m.div(g.lm()).unwrap();
        let factor = -&c.div(g.lc());
        let tail = Polynomial::from_sorted(terms[k..].to_vec());
        p = ring.add_mul_term(&tail, &factor, &q, g);
    }
    Polynomial::from_sorted(rem)
}

#[derive(Clone, Debug)]
struct Pair {
    lcm: Monomial,
    i: usize,
    j: usize,
}

/// Buchberger's algorithm. Returns the reduced Gröbner basis of the ideal
/// generated by `gens` in `ring`'s order.
pub fn buchberger(ring: &PolyRing, gens: &[Polynomial]) -> GroebnerBasis {
    let mut polys: Vec<Polynomial> = Vec::new();
    let mut active: BTreeSet<usize> = BTreeSet::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut input: Vec<Polynomial> = gens.iter().map(|g| ring.reorder(g)).filter(|g| !g.is_zero()).collect();
    input.sort_by(|a, b| ring.cmp(a.lm(), b.lm()));

    for g in input {
        let basis: Vec<&Polynomial> = active.iter().map(|&i| &polys[i]).collect();
        let h = normal_form_with(ring, &g, &basis);
        if h.is_zero() {
            continue;
        }
        update(&mut polys, &mut active, &mut pairs, ring.monic(&h));
    }

    while !pairs.is_empty() {
        // normal strategy: smallest lcm first; ties by index for determinism
        let (best, _) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| ring.cmp(&a.lcm, &b.lcm).then(a.j.cmp(&b.j)).then(a.i.cmp(&b.i)))
            .unwrap();
        let p = pairs.swap_remove(best);
        let s = ring.s_poly(&polys[p.i], &polys[p.j]);
        let basis: Vec<&Polynomial> = active.iter().map(|&i| &polys[i]).collect();
        let h = normal_form_with(ring, &s, &basis);
        if h.is_zero() {
            continue;
        }
        update(&mut polys, &mut active, &mut pairs, ring.monic(&h));
    }

    let basis: Vec<Polynomial> = active.iter().map(|&i| polys[i].clone()).collect();
    reduce_basis(ring, basis)
}

/// Gebauer–Möller installation of a new basis element `h`.
fn update(polys: &mut Vec<Polynomial>, active: &mut BTreeSet<usize>, pairs: &mut Vec<Pair>, h: Polynomial) {
    let hi = polys.len();
    let hl = h.lm().clone();
    polys.push(h);

    let cands: Vec<Pair> = active
        .iter()
        .map(|&g| Pair {
            lcm: hl.lcm(polys[g].lm()),
            i: g,
            j: hi,
        })
        .collect();

    // Chain criterion among the new pairs: drop (h,g) if some other new
    // pair's lcm properly divides its lcm. Coprime pairs are kept here and
    // removed afterwards by the product criterion.
    let mut keep: Vec<Pair> = Vec::new();
    for (a, p) in cands.iter().enumerate() {
        let coprime = hl.coprime(polys[p.i].lm());
        let dominated = cands
            .iter()
            .enumerate()
            .any(|(b, q)| b != a && q.lcm.divides(&p.lcm) && (q.lcm != p.lcm || b < a));
        if coprime || !dominated {
            keep.push(p.clone());
        }
    }
    // among pairs with equal lcm keep at most one, and none if any of them
    // is coprime
    let mut fresh: Vec<Pair> = Vec::new();
    let mut seen: Vec<(Monomial, bool)> = Vec::new();
    for p in &keep {
        let coprime = hl.coprime(polys[p.i].lm());
        if let Some(s) = seen.iter_mut().find(|s| s.0 == p.lcm) {
            s.1 |= coprime;
            continue;
        }
        seen.push((p.lcm.clone(), coprime));
    }
    for (l, any_coprime) in &seen {
        if *any_coprime {
            continue;
        }
        if let Some(p) = keep.iter().find(|p| &p.lcm == l) {
            fresh.push(p.clone());
        }
    }

    // old pairs made redundant by h
    pairs.retain(|p| {
        if !hl.divides(&p.lcm) {
            return true;
        }
        let li = hl.lcm(polys[p.i].lm());
        let lj = hl.lcm(polys[p.j].lm());
        li == p.lcm || lj == p.lcm
    });
    pairs.extend(fresh);

    // basis elements whose leading monomial h divides become redundant
    active.retain(|&g| !hl.divides(polys[g].lm()));
    active.insert(hi);
}

/// Minimalizes and inter-reduces a Gröbner basis; output is monic and
/// sorted by increasing leading monomial.
pub(crate) fn reduce_basis(ring: &PolyRing, mut basis: Vec<Polynomial>) -> GroebnerBasis {
    basis.sort_by(|a, b| ring.cmp(a.lm(), b.lm()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|m| m.lm().divides(g.lm())) {
            minimal.push(g);
        }
    }
    let n = minimal.len();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let others: Vec<&Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g)
            .collect();
        let g = &minimal[i];
        let head = Polynomial::from_sorted(vec![g.terms()[0].clone()]);
        let tail = Polynomial::from_sorted(g.terms()[1..].to_vec());
        let red = normal_form_with(ring, &tail, &others);
        out.push(ring.monic(&ring.add(&head, &red)));
    }
    GroebnerBasis {
        ring: *ring,
        polys: out,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Field;
    use crate::ring::{CoxRing, ProductSpace};

    fn p1() -> CoxRing {
        CoxRing::new(ProductSpace::new([1]).unwrap(), Field::default())
    }

    #[test]
    fn hand_run_two_generators() {
        let r = p1();
        let gens = vec![r.parse("x0^2 - x0*x1").unwrap(), r.parse("x0*x1").unwrap()];
        let gb = buchberger(&r.poly_ring(), &gens);
        let lms: Vec<String> = gb.polys.iter().map(|g| r.format(g)).collect();
        // S-pair gives x0 x1^2, already in (x0 x1)
        assert_eq!(lms, vec!["x0*x1", "x0^2"]);
        assert!(gb.certify());
    }

    #[test]
    fn twisted_cubic_basis() {
        let r = CoxRing::new(ProductSpace::new([3]).unwrap(), Field::Rational);
        let gens: Vec<Polynomial> = ["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"]
            .iter()
            .map(|s| r.parse(s).unwrap())
            .collect();
        let gb = buchberger(&r.poly_ring(), &gens);
        assert_eq!(gb.polys.len(), 3);
        assert!(gb.certify());
        for g in &gens {
            assert!(gb.normal_form(g).is_zero());
        }
    }

    #[test]
    fn unit_ideal() {
        let r = p1();
        let gens = vec![r.parse("x0").unwrap(), r.parse("x0 + 1").unwrap()];
        let gb = buchberger(&r.poly_ring(), &gens);
        assert!(gb.is_unit());
        assert_eq!(gb.polys.len(), 1);
    }
}
