//! Shared inputs for the benchmarks.

use coxreg::arith::Field;
use coxreg::groebner::Ideal;
use coxreg::ring::{CoxRing, ProductSpace};

/// Equations of the rational curve of bidegree (6,2) in P^2 x P^2.
pub const CURVE: [&str; 6] = [
    "x1^2 - x0*x2",
    "y1^2 - y0*y2",
    "x2*y0*y1 - x1*y2^2",
    "x1*y0*y1 - x0*y2^2",
    "x2*y0^2 - x1*y1*y2",
    "x1*y0^2 - x0*y1*y2",
];

pub fn ring(factors: &[u32], field: Field) -> CoxRing {
    CoxRing::new(ProductSpace::new(factors.to_vec()).expect("valid factors"), field)
}

/// The curve ideal, and the ideal of its last five equations. Both are
/// rebuilt on each call so no Gröbner basis is cached.
pub fn curve(field: Field) -> (Ideal, Ideal) {
    let r = ring(&[2, 2], field);
    let six = Ideal::parse(&r, &CURVE).expect("curve equations parse");
    let five = Ideal::parse(&r, &CURVE[1..]).expect("curve equations parse");
    (six, five)
}
