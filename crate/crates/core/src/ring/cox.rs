use crate::arith::Field;
use crate::error::{Error, Result};

use super::{MonomialOrder, MultiDegree, PolyRing, Polynomial, ProductSpace};

/// The Cox ring `k[x_{k,i}]` of a product of projective spaces, with its
/// `Z^l` grading and variable names.
///
/// Blocks one to three use the letters `x`, `y`, `z` (so `x0, x1, y0, ...`);
/// further blocks are named `w4_0, w4_1, ...` by their one-based index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxRing {
    space: ProductSpace,
    field: Field,
    names: Vec<String>,
}

impl CoxRing {
    pub fn new(space: ProductSpace, field: Field) -> CoxRing {
        let mut names = Vec::with_capacity(space.nvars());
        for k in 0..space.nfactors() {
            for (i, _) in space.block(k).enumerate() {
                names.push(match k {
                    0 => format!("x{i}"),
                    1 => format!("y{i}"),
                    2 => format!("z{i}"),
                    _ => format!("w{}_{i}", k + 1),
                });
            }
        }
        CoxRing { space, field, names }
    }

    pub fn space(&self) -> &ProductSpace {
        &self.space
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.space.nvars()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Arithmetic context in the default order.
    pub fn poly_ring(&self) -> PolyRing {
        PolyRing::new(self.nvars(), MonomialOrder::GRevLex, self.field)
    }

    pub fn var(&self, name: &str) -> Option<Polynomial> {
        self.var_index(name).map(|i| self.poly_ring().var(i))
    }

    /// Multidegree of a nonzero multihomogeneous polynomial, `None` for zero.
    pub fn multidegree(&self, f: &Polynomial) -> Result<Option<MultiDegree>> {
        let mut it = f.terms().iter();
        let Some((m0, _)) = it.next() else {
            return Ok(None);
        };
        let d0 = self.space.degree_of(m0);
        for (m, _) in it {
            let d = self.space.degree_of(m);
            if d != d0 {
                return Err(Error::Inhomogeneous {
                    generator: self.format(f),
                    first: d0,
                    second: d,
                });
            }
        }
        Ok(Some(d0))
    }

    pub fn is_homogeneous(&self, f: &Polynomial) -> bool {
        self.multidegree(f).is_ok()
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        super::parse::parse_polynomial(self, text)
    }

    pub fn format(&self, f: &Polynomial) -> String {
        super::parse::format_polynomial(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variable_names() {
        let r = CoxRing::new(ProductSpace::new([1, 2, 1, 1]).unwrap(), Field::default());
        assert_eq!(r.names(), &["x0", "x1", "y0", "y1", "y2", "z0", "z1", "w4_0", "w4_1"]);
        assert_eq!(r.var_index("y2"), Some(4));
    }

    #[test]
    fn homogeneity() {
        let r = CoxRing::new(ProductSpace::new([2, 2]).unwrap(), Field::default());
        let f = r.parse("x2*y0*y1 - x1*y2^2").unwrap();
        assert_eq!(r.multidegree(&f).unwrap(), Some(MultiDegree::from([1, 2])));
        let g = r.parse("x0 + y0").unwrap();
        assert!(matches!(r.multidegree(&g), Err(Error::Inhomogeneous { .. })));
    }
}
