use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// The default characteristic used for Gröbner computations.
pub const DEFAULT_PRIME: u32 = 32003;

/// Coefficient field of a ring context.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// `GF(p)` for an odd prime `p < 2^31`.
    Prime(u32),
    Rational,
}

impl Default for Field {
    fn default() -> Self {
        Field::Prime(DEFAULT_PRIME)
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u32) -> Result<Field> {
        if p == 2 || !is_prime(p) || p >= 1 << 31 {
            return Err(Error::InvalidArgument(format!(
                "GF({p}) requires an odd prime below 2^31"
            )));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Prime { value: 0, modulus: p },
            Field::Rational => Scalar::Rational(BigRational::zero()),
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Prime {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
        }
    }

    pub fn from_bigint(self, n: &BigInt) -> Scalar {
        match self {
            Field::Prime(p) => {
                let r = n % BigInt::from(p);
                let r = if r.is_negative() { r + BigInt::from(p) } else { r };
                Scalar::Prime {
                    value: r.to_u32().expect("residue fits"),
                    modulus: p,
                }
            }
            Field::Rational => Scalar::Rational(BigRational::from_integer(n.clone())),
        }
    }

    /// Maps a rational number into the field; fails when the denominator
    /// vanishes modulo `p`.
    pub fn from_rational(self, q: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rational => Ok(Scalar::Rational(q.clone())),
            Field::Prime(_) => {
                let num = self.from_bigint(q.numer());
                let den = self.from_bigint(q.denom());
                let inv = den
                    .inv()
                    .ok_or_else(|| Error::InvalidArgument(format!("denominator of {q} vanishes in {self}")))?;
                Ok(&num * &inv)
            }
        }
    }

    /// A uniformly random nonzero coefficient of small height.
    pub fn random_nonzero<R: Rng + ?Sized>(self, rng: &mut R, height: i64) -> Scalar {
        loop {
            let n = rng.gen_range(-height..=height);
            if n != 0 {
                let s = self.from_i64(n);
                if !s.is_zero() {
                    return s;
                }
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "GF({p})"),
            Field::Rational => write!(f, "QQ"),
        }
    }
}

/// An exact field element. The variant is fixed by the ring context and the
/// arithmetic operators panic if two variants (or two moduli) are mixed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u32, modulus: u32 },
}

#[inline]
fn mod_inv(a: u32, p: u32) -> u32 {
    // extended Euclid on signed 64-bit values
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, a as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(p as i64) as u32
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: mod_inv(*value, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// `self / rhs`; panics on division by zero.
    pub fn div(&self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero scalar")
    }

    /// Symmetric integer representative for prime-field values, the
    /// rational itself otherwise. Used for printing.
    pub fn to_rational_repr(&self) -> BigRational {
        match self {
            Scalar::Rational(q) => q.clone(),
            Scalar::Prime { value, modulus } => {
                let v = *value as i64;
                let p = *modulus as i64;
                let s = if v > p / 2 { v - p } else { v };
                BigRational::from_integer(BigInt::from(s))
            }
        }
    }

    /// `self + a * b`, the inner step of row reduction.
    pub fn add_mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (
                Scalar::Prime { value: s, modulus: p },
                Scalar::Prime { value: x, .. },
                Scalar::Prime { value: y, .. },
            ) => Scalar::Prime {
                value: ((*s as u64 + (*x as u64) * (*y as u64)) % *p as u64) as u32,
                modulus: *p,
            },
            _ => self + &(a * b),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = self.to_rational_repr();
        if q.is_integer() {
            write!(f, "{}", q.numer())
        } else {
            write!(f, "{}/{}", q.numer(), q.denom())
        }
    }
}

macro_rules! check_same {
    ($a:expr, $b:expr) => {
        match ($a, $b) {
            (Scalar::Prime { modulus: p, .. }, Scalar::Prime { modulus: q, .. }) => {
                assert_eq!(p, q, "mixed prime fields in scalar arithmetic")
            }
            (Scalar::Rational(_), Scalar::Rational(_)) => {}
            _ => panic!("mixed scalar variants"),
        }
    };
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        check_same!(self, rhs);
        match (self, rhs) {
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, .. }) => {
                let s = *a as u64 + *b as u64;
                Scalar::Prime {
                    value: (s % *p as u64) as u32,
                    modulus: *p,
                }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => unreachable!(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        check_same!(self, rhs);
        match (self, rhs) {
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, .. }) => {
                let s = *a as u64 + *p as u64 - *b as u64;
                Scalar::Prime {
                    value: (s % *p as u64) as u32,
                    modulus: *p,
                }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            _ => unreachable!(),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        check_same!(self, rhs);
        match (self, rhs) {
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, .. }) => Scalar::Prime {
                value: ((*a as u64 * *b as u64) % *p as u64) as u32,
                modulus: *p,
            },
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
            Scalar::Rational(q) => Scalar::Rational(-q),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(n: i64) -> Scalar {
        Field::Prime(DEFAULT_PRIME).from_i64(n)
    }

    #[test]
    fn prime_field_inverse() {
        for n in 1..200 {
            let x = gf(n);
            assert!((&x * &x.inv().unwrap()).is_one());
        }
        assert!(gf(0).inv().is_none());
    }

    #[test]
    fn rejects_non_primes() {
        assert!(Field::prime(2).is_err());
        assert!(Field::prime(32001).is_err());
        assert!(Field::prime(32003).is_ok());
    }

    #[test]
    fn symmetric_representatives() {
        assert_eq!(gf(-3).to_string(), "-3");
        assert_eq!(gf(5).to_string(), "5");
        let half = Field::Rational.from_i64(1).div(&Field::Rational.from_i64(2));
        assert_eq!(half.to_string(), "1/2");
    }

    #[test]
    #[should_panic(expected = "mixed")]
    fn mixing_variants_panics() {
        let _ = &gf(1) + &Field::Rational.one();
    }

    proptest! {
        #[test]
        fn field_axioms_gf(a in -50_000i64..50_000, b in -50_000i64..50_000, c in -50_000i64..50_000) {
            let (a, b, c) = (gf(a), gf(b), gf(c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn field_axioms_rational(an in -40i64..40, ad in 1i64..40, bn in -40i64..40, bd in 1i64..40) {
            let f = Field::Rational;
            let a = f.from_i64(an).div(&f.from_i64(ad));
            let b = f.from_i64(bn).div(&f.from_i64(bd));
            prop_assert_eq!(&a * &(&a + &b), &(&a * &a) + &(&a * &b));
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }
    }
}
