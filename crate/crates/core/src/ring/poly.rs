use std::cmp::Ordering;

use crate::arith::{Field, Scalar};

use super::{Monomial, MonomialOrder};

/// A polynomial as a list of terms, strictly decreasing in the monomial
/// order of the [`PolyRing`] that built it, with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: Vec<(Monomial, Scalar)>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Scalar)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &Scalar {
        &self.terms[0].1
    }

    /// Whether the polynomial is a nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    /// Whether the polynomial is a single term.
    pub fn is_term(&self) -> bool {
        self.terms.len() == 1
    }

    pub(crate) fn from_sorted(terms: Vec<(Monomial, Scalar)>) -> Polynomial {
        Polynomial { terms }
    }
}

/// Arithmetic context: number of variables, monomial order and field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    pub nvars: usize,
    pub order: MonomialOrder,
    pub field: Field,
}

impl PolyRing {
    pub fn new(nvars: usize, order: MonomialOrder, field: Field) -> PolyRing {
        PolyRing { nvars, order, field }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    /// Sorts, merges duplicate monomials and drops zeros.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, Scalar)>) -> Polynomial {
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = &last.1 + &c,
                _ => {
                    if let Some(last) = out.last() {
                        if last.1.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if out.last().is_some_and(|t| t.1.is_zero()) {
            out.pop();
        }
        out.retain(|t| !t.1.is_zero());
        Polynomial { terms: out }
    }

    /// Re-sorts a polynomial built under another order.
    pub fn reorder(&self, p: &Polynomial) -> Polynomial {
        self.from_terms(p.terms.clone())
    }

    pub fn constant(&self, c: Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: vec![(Monomial::one(self.nvars), c)],
        }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(self.field.one())
    }

    pub fn monomial(&self, m: Monomial) -> Polynomial {
        Polynomial {
            terms: vec![(m, self.field.one())],
        }
    }

    pub fn var(&self, i: usize) -> Polynomial {
        self.monomial(Monomial::var(self.nvars, i))
    }

    pub fn neg(&self, p: &Polynomial) -> Polynomial {
        Polynomial {
            terms: p.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, p: &Polynomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: p.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// `c * m * p`; multiplication by a term preserves the order.
    pub fn mul_term(&self, p: &Polynomial, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: p.terms.iter().map(|(n, x)| (n.mul(m), x * c)).collect(),
        }
    }

    /// `f + c * m * g`, merged in one pass.
    pub fn add_mul_term(&self, f: &Polynomial, c: &Scalar, m: &Monomial, g: &Polynomial) -> Polynomial {
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let mut i = 0;
        let mut j = 0;
        let shifted: Vec<Monomial> = g.terms.iter().map(|(n, _)| n.mul(m)).collect();
        while i < f.terms.len() || j < shifted.len() {
            let ord = if i == f.terms.len() {
                Ordering::Less
            } else if j == shifted.len() {
                Ordering::Greater
            } else {
                self.cmp(&f.terms[i].0, &shifted[j])
            };
            match ord {
                Ordering::Greater => {
                    out.push(f.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let v = c * &g.terms[j].1;
                    if !v.is_zero() {
                        out.push((shifted[j].clone(), v));
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let v = f.terms[i].1.add_mul(c, &g.terms[j].1);
                    if !v.is_zero() {
                        out.push((shifted[j].clone(), v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { terms: out }
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.add_mul_term(f, &self.field.one(), &Monomial::one(self.nvars), g)
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.add_mul_term(f, &-&self.field.one(), &Monomial::one(self.nvars), g)
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        if f.terms.len() > g.terms.len() {
            return self.mul(g, f);
        }
        let mut acc = Polynomial::zero();
        for (m, c) in &f.terms {
            acc = self.add_mul_term(&acc, c, m, g);
        }
        acc
    }

    pub fn pow(&self, f: &Polynomial, k: u32) -> Polynomial {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn monic(&self, p: &Polynomial) -> Polynomial {
        if p.is_zero() || p.lc().is_one() {
            return p.clone();
        }
        let inv = p.lc().inv().expect("nonzero leading coefficient");
        self.scale(p, &inv)
    }

    /// S-polynomial of two nonzero polynomials.
    pub fn s_poly(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let l = f.lm().lcm(g.lm());
        let mf = l.div(f.lm()).unwrap();
        let mg = l.div(g.lm()).unwrap();
        let cf = f.lc().inv().unwrap();
        let cg = -&g.lc().inv().unwrap();
        let a = self.mul_term(f, &mf, &cf);
        self.add_mul_term(&a, &cg, &mg, g)
    }

    /// Full reduction of `f` modulo `basis` (the remainder of multivariate
    /// division). `basis` need not be a Gröbner basis.
    pub fn reduce(&self, f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
        let mut p = f.clone();
        let mut rem: Vec<(Monomial, Scalar)> = Vec::new();
        while let Some((m, c)) = p.terms.first().cloned() {
            match basis.iter().find(|g| g.lm().divides(&m)) {
                Some(g) => {
                    let q = m.div(g.lm()).unwrap();
                    let factor = -&c.div(g.lc());
                    p = self.add_mul_term(&p, &factor, &q, g);
                }
                None => {
                    rem.push((m, c));
                    p.terms.remove(0);
                }
            }
        }
        Polynomial { terms: rem }
    }

    /// Division with quotients: returns `(quotients, remainder)` with
    /// `f = sum q_i g_i + r`.
    pub fn divide(&self, f: &Polynomial, divisors: &[Polynomial]) -> (Vec<Polynomial>, Polynomial) {
        let mut quot: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); divisors.len()];
        let mut p = f.clone();
        let mut rem = Vec::new();
        while let Some((m, c)) = p.terms.first().cloned() {
            match divisors.iter().position(|g| !g.is_zero() && g.lm().divides(&m)) {
                Some(i) => {
                    let g = &divisors[i];
                    let q = m.div(g.lm()).unwrap();
                    let coef = c.div(g.lc());
                    p = self.add_mul_term(&p, &-&coef, &q, g);
                    quot[i].push((q, coef));
                }
                None => {
                    rem.push((m, c));
                    p.terms.remove(0);
                }
            }
        }
        (
            quot.into_iter().map(|t| self.from_terms(t)).collect(),
            Polynomial { terms: rem },
        )
    }

    /// Exact quotient `f / g`, or `None` if `g` does not divide `f`.
    pub fn div_exact(&self, f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
        let (q, r) = self.divide(f, std::slice::from_ref(g));
        r.is_zero().then(|| q.into_iter().next().unwrap())
    }
}
