use std::fmt;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use super::LinalgError;

/// The base field an algebra is defined over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// GF(p) for a prime p.
    Prime(u64),
    /// The rational numbers, with exact arbitrary-precision arithmetic.
    Rationals,
}

/// An element of a [`Field`].
///
/// Prime-field elements are stored as canonical residues in `0..p`; rationals
/// are kept in lowest terms with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Fp(u64),
    Q(Box<BigRational>),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Field, LinalgError> {
        // residues are multiplied in u128, so anything below 2^63 is safe
        if !is_prime(p) || p >= 1 << 62 {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn gf2() -> Field {
        Field::Prime(2)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Prime(p) => *p,
            Field::Rationals => 0,
        }
    }

    /// Number of elements, if finite.
    pub fn order(&self) -> Option<u64> {
        match self {
            Field::Prime(p) => Some(*p),
            Field::Rationals => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Fp(0),
            Field::Rationals => Scalar::Q(Box::new(BigRational::zero())),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Fp(1),
            Field::Rationals => Scalar::Q(Box::new(BigRational::one())),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Fp((v as i128).rem_euclid(*p as i128) as u64),
            Field::Rationals => Scalar::Q(Box::new(BigRational::from_integer(BigInt::from(v)))),
        }
    }

    /// Maps a rational number into the field. Fails over GF(p) when the
    /// denominator is divisible by p.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar, LinalgError> {
        match self {
            Field::Rationals => Ok(Scalar::Q(Box::new(q.clone()))),
            Field::Prime(p) => {
                let modulus = BigInt::from(*p);
                let reduce = |x: &BigInt| -> u64 {
                    let r = ((x % &modulus) + &modulus) % &modulus;
                    r.to_u64().expect("residue fits in u64")
                };
                let num = reduce(q.numer());
                let den = reduce(q.denom());
                if den == 0 {
                    return Err(LinalgError::NotInField(q.to_string(), *p));
                }
                Ok(self.mul(&Scalar::Fp(num), &self.inv(&Scalar::Fp(den))))
            }
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        a.is_zero()
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                let s = x + y;
                Scalar::Fp(if s >= *p { s - p } else { s })
            }
            (Field::Rationals, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(Box::new(&**x + &**y)),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Prime(p), Scalar::Fp(x)) => Scalar::Fp(if *x == 0 { 0 } else { p - x }),
            (Field::Rationals, Scalar::Q(x)) => Scalar::Q(Box::new(-&**x)),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            (Field::Rationals, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(Box::new(&**x * &**y)),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        assert!(!a.is_zero(), "inverse of zero");
        match (self, a) {
            (Field::Prime(p), Scalar::Fp(x)) => {
                // Fermat: x^(p-2)
                let mut result = 1u128;
                let mut base = *x as u128;
                let mut e = p - 2;
                let m = *p as u128;
                while e > 0 {
                    if e & 1 == 1 {
                        result = result * base % m;
                    }
                    base = base * base % m;
                    e >>= 1;
                }
                Scalar::Fp(result as u64)
            }
            (Field::Rationals, Scalar::Q(x)) => Scalar::Q(Box::new(x.recip())),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }

    /// `a + b * c`, the inner step of every elimination loop.
    pub fn mul_add(&self, a: &Scalar, b: &Scalar, c: &Scalar) -> Scalar {
        match (self, a, b, c) {
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y), Scalar::Fp(z)) => {
                let m = *p as u128;
                Scalar::Fp(((*x as u128 + (*y as u128 * *z as u128) % m) % m) as u64)
            }
            _ => self.add(a, &self.mul(b, c)),
        }
    }

    pub fn contains(&self, a: &Scalar) -> bool {
        match (self, a) {
            (Field::Prime(p), Scalar::Fp(x)) => x < p,
            (Field::Rationals, Scalar::Q(x)) => x.denom().is_positive(),
            _ => false,
        }
    }

    /// All elements of a finite field in canonical order `0, 1, …, p-1`.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            Field::Prime(p) => Some((0..*p).map(Scalar::Fp).collect()),
            Field::Rationals => None,
        }
    }

    /// A short label, `GF(p)` or `Q`.
    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "GF({p})"),
            Field::Rationals => write!(f, "Q"),
        }
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Fp(x) => *x == 0,
            Scalar::Q(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Fp(x) => *x == 1,
            Scalar::Q(x) => x.is_one(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp(x) => write!(f, "{x}"),
            Scalar::Q(x) => write!(f, "{x}"),
        }
    }
}
