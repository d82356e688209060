use std::sync::OnceLock;

use crate::error::Result;
use crate::ring::{CoxRing, Monomial, MonomialOrder, MultiDegree, PolyRing, Polynomial};

use super::buchberger::{buchberger, GroebnerBasis};

/// A multihomogeneous ideal of the Cox ring with a lazily computed reduced
/// Gröbner basis in the default order.
#[derive(Debug)]
pub struct Ideal {
    ring: CoxRing,
    generators: Vec<Polynomial>,
    degrees: Vec<MultiDegree>,
    gb: OnceLock<GroebnerBasis>,
    saturated_wrt: Option<Vec<Polynomial>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(g.clone());
        }
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            degrees: self.degrees.clone(),
            gb,
            saturated_wrt: self.saturated_wrt.clone(),
        }
    }
}

impl PartialEq for Ideal {
    /// Equality of ideals, decided by comparing reduced Gröbner bases.
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gb().polys == other.gb().polys
    }
}

impl Eq for Ideal {}

impl Ideal {
    /// Builds an ideal, dropping zero generators. Fails if a generator is
    /// not multihomogeneous.
    pub fn new(ring: &CoxRing, generators: Vec<Polynomial>) -> Result<Ideal> {
        let pr = ring.poly_ring();
        let mut gens = Vec::with_capacity(generators.len());
        let mut degrees = Vec::with_capacity(generators.len());
        for g in generators {
            let g = pr.reorder(&g);
            if let Some(d) = ring.multidegree(&g)? {
                gens.push(g);
                degrees.push(d);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: gens,
            degrees,
            gb: OnceLock::new(),
            saturated_wrt: None,
        })
    }

    pub fn parse(ring: &CoxRing, generators: &[&str]) -> Result<Ideal> {
        let gens = generators.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn zero(ring: &CoxRing) -> Ideal {
        Ideal::new(ring, Vec::new()).unwrap()
    }

    pub fn unit(ring: &CoxRing) -> Ideal {
        Ideal::new(ring, vec![ring.poly_ring().one()]).unwrap()
    }

    /// The monomial ideal generated by `monomials`.
    pub fn monomial(ring: &CoxRing, monomials: impl IntoIterator<Item = Monomial>) -> Ideal {
        let pr = ring.poly_ring();
        Ideal::new(ring, monomials.into_iter().map(|m| pr.monomial(m)).collect()).unwrap()
    }

    /// The irrelevant ideal `B`, generated by one variable from each block.
    pub fn irrelevant(ring: &CoxRing) -> Ideal {
        Ideal::monomial(ring, ring.space().irrelevant_generators())
    }

    pub fn ring(&self) -> &CoxRing {
        &self.ring
    }

    pub fn poly_ring(&self) -> PolyRing {
        self.ring.poly_ring()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn generator_degrees(&self) -> &[MultiDegree] {
        &self.degrees
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    /// Whether every generator is a single term.
    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(|g| g.is_term())
    }

    /// Reduced Gröbner basis in the default order, computed once.
    pub fn gb(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| buchberger(&self.poly_ring(), &self.generators))
    }

    pub fn has_cached_basis(&self) -> bool {
        self.gb.get().is_some()
    }

    /// The generators of the ideal this one is known to be saturated
    /// against, if any.
    pub fn saturated_wrt(&self) -> Option<&[Polynomial]> {
        self.saturated_wrt.as_deref()
    }

    pub(crate) fn with_basis(mut self, gb: GroebnerBasis) -> Ideal {
        debug_assert_eq!(gb.order(), MonomialOrder::GRevLex);
        self.gb = OnceLock::from(gb);
        self
    }

    pub(crate) fn mark_saturated(mut self, wrt: &Ideal) -> Ideal {
        self.saturated_wrt = Some(wrt.generators.clone());
        self
    }

    /// The ideal generated by the reduced Gröbner basis, with the basis
    /// already cached.
    pub fn minimalized(&self) -> Ideal {
        let gb = self.gb().clone();
        let mut out = Ideal::new(&self.ring, gb.polys.clone())
            .expect("a basis of a homogeneous ideal is homogeneous")
            .with_basis(gb);
        out.saturated_wrt = self.saturated_wrt.clone();
        out
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.gb().normal_form(&self.poly_ring().reorder(f))
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    /// `I + J`.
    pub fn sum(&self, other: &Ideal) -> Ideal {
        self.check_same_ring(other);
        let mut g = self.generators.clone();
        g.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, g).unwrap()
    }

    /// `I * J` from pairwise products of generators.
    pub fn product(&self, other: &Ideal) -> Ideal {
        self.check_same_ring(other);
        let pr = self.poly_ring();
        let mut g = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                g.push(pr.mul(a, b));
            }
        }
        Ideal::new(&self.ring, g).unwrap()
    }

    pub(crate) fn check_same_ring(&self, other: &Ideal) {
        assert_eq!(self.ring, other.ring, "ideals live in different rings");
    }
}

/// The reduced Gröbner basis of `ideal` in `order`. The default order is
/// served from the ideal's cache.
pub fn groebner_basis(ideal: &Ideal, order: MonomialOrder) -> GroebnerBasis {
    if order == MonomialOrder::GRevLex {
        return ideal.gb().clone();
    }
    let pr = PolyRing::new(ideal.ring.nvars(), order, ideal.ring.field());
    buchberger(&pr, &ideal.generators)
}

/// Remainder of `f` modulo the Gröbner basis of `ideal` in the default order.
pub fn normal_form(f: &Polynomial, ideal: &Ideal) -> Polynomial {
    ideal.normal_form(f)
}

/// `I^m` as all `m`-fold products of generators, with no further reduction.
pub fn ideal_power(ideal: &Ideal, m: u32) -> Ideal {
    let pr = ideal.poly_ring();
    if m == 0 {
        return Ideal::unit(&ideal.ring);
    }
    let n = ideal.generators.len();
    let mut out = Vec::new();
    // multisets of size m from n generators, as non-decreasing index lists
    let mut idx = vec![0usize; m as usize];
    if n == 0 {
        return Ideal::zero(&ideal.ring);
    }
    loop {
        let mut p = ideal.generators[idx[0]].clone();
        for &i in &idx[1..] {
            p = pr.mul(&p, &ideal.generators[i]);
        }
        out.push(p);
        let mut k = idx.len();
        while k > 0 && idx[k - 1] == n - 1 {
            k -= 1;
        }
        if k == 0 {
            break;
        }
        idx[k - 1] += 1;
        let v = idx[k - 1];
        for e in idx.iter_mut().skip(k) {
            *e = v;
        }
    }
    Ideal::new(&ideal.ring, out).expect("products of homogeneous forms are homogeneous")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Field;
    use crate::ring::ProductSpace;

    fn ring(f: &[u32]) -> CoxRing {
        CoxRing::new(ProductSpace::new(f.to_vec()).unwrap(), Field::default())
    }

    #[test]
    fn powers() {
        let r = ring(&[1]);
        let i = Ideal::parse(&r, &["x0", "x1"]).unwrap();
        let sq = ideal_power(&i, 2);
        let shown: Vec<String> = sq.generators().iter().map(|g| r.format(g)).collect();
        assert_eq!(shown, vec!["x0^2", "x0*x1", "x1^2"]);
        assert_eq!(ideal_power(&i, 1).generators(), i.generators());
        assert!(ideal_power(&i, 0).is_unit());
        let r11 = ring(&[1, 1]);
        let d = Ideal::parse(&r11, &["x0*y1 - x1*y0"]).unwrap();
        let d2 = ideal_power(&d, 2);
        assert_eq!(d2.generators().len(), 1);
        assert_eq!(d2.generator_degrees()[0], MultiDegree::from([2, 2]));
    }

    #[test]
    fn normal_forms() {
        let r = ring(&[2]);
        let i = Ideal::parse(&r, &["x1^2 - x0*x2"]).unwrap();
        let f = r.parse("x1^2").unwrap();
        assert_eq!(r.format(&normal_form(&f, &i)), "x0*x2");
        assert!(normal_form(&i.generators()[0], &i).is_zero());
        let one = r.poly_ring().one();
        assert_eq!(normal_form(&one, &i), one);
    }

    #[test]
    fn trivial_basis() {
        let r = ring(&[1]);
        let i = Ideal::parse(&r, &["x0", "x1"]).unwrap();
        let gb = groebner_basis(&i, MonomialOrder::GRevLex);
        assert_eq!(gb.polys.len(), 2);
        assert!(gb.certify());
    }
}
