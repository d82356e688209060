//! Intersection, colon and saturation.

use crate::ring::{MonomialOrder, PolyRing, Polynomial};

use super::buchberger::{buchberger, reduce_basis};
use super::Ideal;

/// `I ∩ J` by eliminating `t` from `t·I + (1 − t)·J`.
pub fn intersect(i: &Ideal, j: &Ideal) -> Ideal {
    i.check_same_ring(j);
    let ring = i.ring();
    if i.is_zero() || j.is_zero() {
        return Ideal::zero(ring);
    }
    let n = ring.nvars();
    // the auxiliary variable sits in front as its own block
    let er = PolyRing::new(n + 1, MonomialOrder::Elimination { eliminate: 1 }, ring.field());
    let lift =
        |p: &Polynomial, t: u32| er.from_terms(p.terms().iter().map(|(m, c)| (m.prepend(&[t]), c.clone())).collect());
    let mut gens = Vec::with_capacity(i.generators().len() + j.generators().len());
    for f in i.generators() {
        gens.push(lift(f, 1));
    }
    for g in j.generators() {
        gens.push(er.sub(&lift(g, 0), &lift(g, 1)));
    }
    let gb = buchberger(&er, &gens);
    let pr = ring.poly_ring();
    let eliminated: Vec<Polynomial> = gb
        .polys
        .iter()
        .filter(|p| p.terms().iter().all(|(m, _)| m.exp(0) == 0))
        .map(|p| pr.from_terms(p.terms().iter().map(|(m, c)| (m.drop_front(1), c.clone())).collect()))
        .collect();
    // t-free part of a reduced elimination basis is a reduced basis of the
    // intersection in the tail order
    let basis = reduce_basis(&pr, eliminated);
    Ideal::new(ring, basis.polys.clone())
        .expect("intersection of homogeneous ideals is homogeneous")
        .with_basis(basis)
}

/// `(I : g)` for a single homogeneous `g`, as `(I ∩ (g)) / g`.
pub fn colon_poly(i: &Ideal, g: &Polynomial) -> Ideal {
    let ring = i.ring();
    let pr = ring.poly_ring();
    if g.is_zero() {
        return Ideal::unit(ring);
    }
    if i.contains(g) {
        return Ideal::unit(ring);
    }
    let principal = Ideal::new(ring, vec![g.clone()]).expect("homogeneous colon element");
    let inter = intersect(i, &principal);
    let quotients: Vec<Polynomial> = inter
        .generators()
        .iter()
        .map(|h| pr.div_exact(h, g).expect("members of (g) are divisible by g"))
        .collect();
    Ideal::new(ring, quotients).expect("quotients of homogeneous forms are homogeneous")
}

/// `(I : J) = ∩_g (I : g)` over the generators `g` of `J`.
pub fn colon(i: &Ideal, j: &Ideal) -> Ideal {
    i.check_same_ring(j);
    let mut acc: Option<Ideal> = None;
    for g in j.generators() {
        let c = colon_poly(i, g);
        acc = Some(match acc {
            None => c,
            Some(a) if a.is_unit() => c,
            Some(a) if c.is_unit() => a,
            Some(a) => intersect(&a, &c),
        });
    }
    acc.unwrap_or_else(|| Ideal::unit(i.ring())).minimalized()
}

/// `(I : J^∞)` as the limit of `I ⊆ (I:J) ⊆ ((I:J):J) ⊆ ...`, detected by
/// equality of reduced Gröbner bases.
pub fn saturate(i: &Ideal, j: &Ideal) -> Ideal {
    i.check_same_ring(j);
    if i.saturated_wrt() == Some(j.generators()) {
        return i.clone();
    }
    let mut cur = i.minimalized();
    loop {
        let next = colon(&cur, j);
        if next.gb().polys == cur.gb().polys {
            return next.mark_saturated(j);
        }
        cur = next;
    }
}
