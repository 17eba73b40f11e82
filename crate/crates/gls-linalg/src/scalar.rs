//! Field tags and scalars.
//!
//! A [`Scalar`] is either an arbitrary precision rational or a residue
//! modulo a prime below 2^31. Arithmetic between scalars of different
//! fields panics; use [`Scalar::checked_add`] and friends where the field
//! is not known statically.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::LinalgError;

/// The ground field of a scalar or matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    /// Prime field with modulus `p`. Fails unless `p` is a prime below 2^31.
    pub fn prime(p: u32) -> Result<Field, LinalgError> {
        if p >= (1u32 << 31) || !is_prime(p as u64) {
            return Err(LinalgError::BadModulus(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::zero()),
            Field::Prime(p) => Scalar::Mod { value: 0, modulus: p },
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Mod {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    /// Image of a rational number in this field. Fails when the denominator
    /// vanishes modulo the characteristic.
    pub fn from_rational(self, q: &BigRational) -> Result<Scalar, LinalgError> {
        match self {
            Field::Rational => Ok(Scalar::Rational(q.clone())),
            Field::Prime(p) => {
                let n = reduce_bigint(q.numer(), p);
                let d = reduce_bigint(q.denom(), p);
                if d == 0 {
                    return Err(LinalgError::NotInvertible);
                }
                Ok(Scalar::Mod {
                    value: mul_mod(n, inv_mod(d, p) as u64, p),
                    modulus: p,
                })
            }
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn is_prime(self) -> bool {
        matches!(self, Field::Prime(_))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// An element of the rationals or of a prime field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Mod { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Mod { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: inv_mod(*value as u64, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, LinalgError> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a + b)),
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) if p == q => Ok(Scalar::Mod {
                value: ((*a as u64 + *b as u64) % *p as u64) as u32,
                modulus: *p,
            }),
            _ => Err(LinalgError::FieldMismatch(self.field(), other.field())),
        }
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, LinalgError> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) if p == q => Ok(Scalar::Mod {
                value: mul_mod(*a as u64, *b as u64, *p),
                modulus: *p,
            }),
            _ => Err(LinalgError::FieldMismatch(self.field(), other.field())),
        }
    }

    /// Rational value, if this is a rational scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Mod { .. } => None,
        }
    }

    /// Residue in `[0, p)`, if this is a prime-field scalar.
    pub fn residue(&self) -> Option<u32> {
        match self {
            Scalar::Rational(_) => None,
            Scalar::Mod { value, .. } => Some(*value),
        }
    }

    /// Small integer value when the scalar is an integer fitting in i64
    /// (rationals) or the residue (prime fields).
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rational(q) if q.is_integer() => q.numer().to_i64(),
            Scalar::Rational(_) => None,
            Scalar::Mod { value, .. } => Some(*value as i64),
        }
    }

    /// Re-express in another field. Rationals map to prime fields by
    /// reduction; a prime-field scalar only maps to its own field.
    pub fn to_field(&self, field: Field) -> Result<Scalar, LinalgError> {
        match self {
            Scalar::Rational(q) => field.from_rational(q),
            Scalar::Mod { .. } if self.field() == field => Ok(self.clone()),
            _ => Err(LinalgError::FieldMismatch(self.field(), field)),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.checked_add(rhs).expect("scalar fields differ")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.checked_add(&-rhs).expect("scalar fields differ")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.checked_mul(rhs).expect("scalar fields differ")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u32) -> u32 {
    ((a * b) % p as u64) as u32
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u32) -> u32 {
    let m = p as u64;
    let mut r = 1u64 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % m;
        }
        a = a * a % m;
        e >>= 1;
    }
    r as u32
}

pub(crate) fn inv_mod(a: u64, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p as u64));
    pow_mod(a, p as u64 - 2, p)
}

pub(crate) fn reduce_bigint(n: &BigInt, p: u32) -> u64 {
    let m = BigInt::from(p);
    let r = n % &m;
    let r = if r.is_negative() { r + m } else { r };
    r.to_u64().expect("residue fits in u64")
}

/// Deterministic trial division; moduli are below 2^31.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_reduced() {
        let a = Field::Rational.from_i64(2);
        let b = Field::Rational.from_i64(4);
        let q = (&a * &b.inv().unwrap()).as_rational().unwrap().clone();
        assert_eq!(q.numer(), &BigInt::from(1));
        assert_eq!(q.denom(), &BigInt::from(2));
        let neg = Scalar::Rational(BigRational::new(BigInt::from(3), BigInt::from(-6)));
        let r = neg.as_rational().unwrap();
        assert!(r.denom().is_positive());
    }

    #[test]
    fn prime_arithmetic() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(-1);
        assert_eq!(a.residue(), Some(6));
        assert_eq!((&a * &a).residue(), Some(1));
        assert_eq!(f.from_i64(3).inv().unwrap().residue(), Some(5));
        assert!(f.zero().inv().is_none());
    }

    #[test]
    fn mixing_moduli_is_an_error() {
        let a = Field::prime(5).unwrap().one();
        let b = Field::prime(7).unwrap().one();
        assert!(a.checked_add(&b).is_err());
        assert!(a.checked_mul(&Field::Rational.one()).is_err());
    }

    #[test]
    fn bad_moduli_rejected() {
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(2_147_483_647).is_ok());
        assert!(Field::prime(4_294_967_291).is_err());
    }

    #[test]
    fn rational_reduction_mod_p() {
        let q = BigRational::new(BigInt::from(1), BigInt::from(3));
        let s = Field::prime(5).unwrap().from_rational(&q).unwrap();
        assert_eq!(s.residue(), Some(2));
        assert!(Field::prime(3).unwrap().from_rational(&q).is_err());
    }
}
