//! Exact arithmetic in real quadratic fields `Q(sqrt D)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// `a + b * sqrt(radicand)` with rational `a`, `b` and a positive square-free radicand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    pub a: BigRational,
    pub b: BigRational,
    radicand: u64,
}

fn is_square_free(d: u64) -> bool {
    let mut k = 2u64;
    while k * k <= d {
        if d.is_multiple_of(k * k) {
            return false;
        }
        k += 1;
    }
    true
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl QuadExt {
    pub fn new(a: BigRational, b: BigRational, radicand: u64) -> Result<QuadExt> {
        if radicand < 2 || !is_square_free(radicand) {
            return Err(Error::InvalidArgument(format!(
                "radicand {radicand} must be a square-free integer >= 2"
            )));
        }
        Ok(QuadExt { a, b, radicand })
    }

    pub fn from_rational(a: BigRational, radicand: u64) -> Result<QuadExt> {
        QuadExt::new(a, BigRational::zero(), radicand)
    }

    /// Shorthand for `an/ad + (bn/bd) sqrt(radicand)`; panics on a bad radicand.
    pub fn from_parts(an: i64, ad: i64, bn: i64, bd: i64, radicand: u64) -> QuadExt {
        QuadExt::new(rational(an, ad), rational(bn, bd), radicand).expect("valid radicand")
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn zero(radicand: u64) -> QuadExt {
        QuadExt {
            a: BigRational::zero(),
            b: BigRational::zero(),
            radicand,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn d(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.radicand))
    }

    /// Exact sign of the real number `a + b sqrt(D)`.
    pub fn sign(&self) -> i32 {
        let sa = signum(&self.a);
        let sb = signum(&self.b);
        if sa >= 0 && sb >= 0 {
            return if sa == 0 && sb == 0 { 0 } else { 1 };
        }
        if sa <= 0 && sb <= 0 {
            return -1;
        }
        // opposite signs: compare a^2 with b^2 D
        let lhs = &self.a * &self.a;
        let rhs = &self.b * &self.b * self.d();
        let c = match lhs.cmp(&rhs) {
            Ordering::Greater => 1,
            Ordering::Less => -1,
            Ordering::Equal => 0,
        };
        if sa > 0 {
            c
        } else {
            -c
        }
    }

    /// Conjugate-norm `a^2 - D b^2`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * self.d()
    }

    pub fn inv(&self) -> Option<QuadExt> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(QuadExt {
            a: &self.a / &n,
            b: -(&self.b / &n),
            radicand: self.radicand,
        })
    }

    pub fn div(&self, rhs: &QuadExt) -> Option<QuadExt> {
        rhs.inv().map(|r| self * &r)
    }

    pub fn scale(&self, q: &BigRational) -> QuadExt {
        QuadExt {
            a: &self.a * q,
            b: &self.b * q,
            radicand: self.radicand,
        }
    }

    pub fn approx(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * (self.radicand as f64).sqrt()
    }
}

fn signum(q: &BigRational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.radicand != other.radicand {
            return None;
        }
        Some((self - other).sign().cmp(&0))
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if !self.a.is_zero() {
            write!(f, "{} ", self.a)?;
            if self.b.is_negative() {
                write!(f, "- ")?;
            } else {
                write!(f, "+ ")?;
            }
            write!(f, "{}*s{}", self.b.abs(), self.radicand)
        } else {
            write!(f, "{}*s{}", self.b, self.radicand)
        }
    }
}

macro_rules! same_radicand {
    ($x:expr, $y:expr) => {
        assert_eq!($x.radicand, $y.radicand, "mixed quadratic fields")
    };
}

impl<'a> Add<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        same_radicand!(self, rhs);
        QuadExt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            radicand: self.radicand,
        }
    }
}

impl<'a> Sub<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        same_radicand!(self, rhs);
        QuadExt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            radicand: self.radicand,
        }
    }
}

impl<'a> Mul<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        same_radicand!(self, rhs);
        QuadExt {
            a: &self.a * &rhs.a + &self.b * &rhs.b * self.d(),
            b: &self.a * &rhs.b + &self.b * &rhs.a,
            radicand: self.radicand,
        }
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            a: -&self.a,
            b: -&self.b,
            radicand: self.radicand,
        }
    }
}

/// Exact sign of `a + b sqrt(D)`.
pub fn quadext_sign(x: &QuadExt) -> i32 {
    x.sign()
}
