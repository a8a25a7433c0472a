//! Coefficient fields: prime fields `F_p` and the rationals.
//!
//! Scalars are plain values; all arithmetic goes through the [`Field`] that
//! owns them, so a `Scalar::Mod` is only meaningful next to its modulus.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest modulus accepted by [`Field::prime`].
pub const MAX_PRIME: u64 = (1 << 31) - 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Prime(u64),
    Rationals,
}

/// An element of some [`Field`]. `Mod` values are always reduced, `Rat`
/// values are always in lowest terms with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod(u64),
    Rat(BigRational),
}

pub type Vector = Vec<Scalar>;

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p > MAX_PRIME || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn rationals() -> Field {
        Field::Rationals
    }

    /// `Some(p)` for prime fields.
    pub fn characteristic(&self) -> Option<u64> {
        match self {
            Field::Prime(p) => Some(*p),
            Field::Rationals => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Mod(0),
            Field::Rationals => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Mod(1),
            Field::Rationals => Scalar::Rat(BigRational::one()),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Mod(n.rem_euclid(*p as i64) as u64),
            Field::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
        }
    }

    /// `num/den` as a field element; fails on a zero denominator, and in
    /// `F_p` when `den` is divisible by `p`.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        match self {
            Field::Prime(p) => {
                let pb = BigInt::from(*p);
                let reduce = |x: &BigInt| -> u64 {
                    let r = ((x % &pb) + &pb) % &pb;
                    r.to_u64().expect("reduced value fits in u64")
                };
                let d = reduce(den);
                if d == 0 {
                    return Err(Error::Parse(format!("denominator divisible by {p}")));
                }
                let n = Scalar::Mod(reduce(num));
                Ok(self.mul(&n, &self.inv(&Scalar::Mod(d))))
            }
            Field::Rationals => Ok(Scalar::Rat(BigRational::new(num.clone(), den.clone()))),
        }
    }

    /// True when `s` is a canonical element of this field.
    pub fn owns(&self, s: &Scalar) -> bool {
        match (self, s) {
            (Field::Prime(p), Scalar::Mod(v)) => v < p,
            (Field::Rationals, Scalar::Rat(_)) => true,
            _ => false,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod((x + y) % p),
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            _ => panic!("scalar does not belong to {self:?}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Prime(p), Scalar::Mod(x)) => Scalar::Mod((p - x) % p),
            (Field::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            _ => panic!("scalar does not belong to {self:?}"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            _ => panic!("scalar does not belong to {self:?}"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        assert!(!self.is_zero(a), "inverse of zero");
        match (self, a) {
            (Field::Prime(p), Scalar::Mod(x)) => Scalar::Mod(pow_mod(*x, p - 2, *p)),
            (Field::Rationals, Scalar::Rat(x)) => Scalar::Rat(x.recip()),
            _ => panic!("scalar does not belong to {self:?}"),
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Mod(x) => *x == 0,
            Scalar::Rat(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Mod(x) => *x == 1,
            Scalar::Rat(x) => x.is_one(),
        }
    }

    pub fn zero_vector(&self, n: usize) -> Vector {
        vec![self.zero(); n]
    }

    pub fn unit_vector(&self, n: usize, i: usize) -> Vector {
        let mut v = self.zero_vector(n);
        v[i] = self.one();
        v
    }

    pub fn dot(&self, a: &[Scalar], b: &[Scalar]) -> Scalar {
        assert_eq!(a.len(), b.len(), "dot product of vectors of different length");
        a.iter()
            .zip(b)
            .fold(self.zero(), |acc, (x, y)| self.add(&acc, &self.mul(x, y)))
    }

    /// `y += c * x`
    pub fn axpy(&self, y: &mut [Scalar], c: &Scalar, x: &[Scalar]) {
        if self.is_zero(c) {
            return;
        }
        for (yi, xi) in y.iter_mut().zip(x) {
            *yi = self.add(yi, &self.mul(c, xi));
        }
    }

    pub fn add_vectors(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        a.iter().zip(b).map(|(x, y)| self.add(x, y)).collect()
    }

    pub fn is_zero_vector(&self, v: &[Scalar]) -> bool {
        v.iter().all(|x| self.is_zero(x))
    }
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m = m as u128;
    let mut acc = 1u128;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "F_{p}"),
            Field::Rationals => write!(f, "Q"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod(x) => write!(f, "{x}"),
            Scalar::Rat(x) if x.denom().is_one() => write!(f, "{}", x.numer()),
            Scalar::Rat(x) => write!(f, "{}/{}", x.numer(), x.denom()),
        }
    }
}

impl Scalar {
    /// The value as a small signed integer, if it is one. Prime-field values
    /// are returned as their canonical representative in `0..p`.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Mod(x) => i64::try_from(*x).ok(),
            Scalar::Rat(x) if x.denom().is_one() => x.numer().to_i64(),
            Scalar::Rat(_) => None,
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rat(x) if x.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_check() {
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(5).is_ok());
        assert!(Field::prime(7919).is_ok());
        assert_eq!(Field::prime(1), Err(Error::NotPrime(1)));
        assert_eq!(Field::prime(9), Err(Error::NotPrime(9)));
        assert!(Field::prime(1 << 40).is_err());
    }

    #[test]
    fn prime_field_axioms_exhaustive_f7() {
        let f = Field::prime(7).unwrap();
        let elems: Vec<_> = (0..7).map(|i| f.from_i64(i)).collect();
        for a in &elems {
            assert_eq!(f.add(a, &f.neg(a)), f.zero());
            if !f.is_zero(a) {
                assert_eq!(f.mul(a, &f.inv(a)), f.one());
            }
            for b in &elems {
                assert_eq!(f.add(a, b), f.add(b, a));
                for c in &elems {
                    let lhs = f.mul(a, &f.add(b, c));
                    let rhs = f.add(&f.mul(a, b), &f.mul(a, c));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn fractions() {
        let q = Field::rationals();
        let half = q.from_fraction(&BigInt::from(2), &BigInt::from(-4)).unwrap();
        assert_eq!(half.to_string(), "-1/2");
        assert_eq!(q.mul(&half, &q.from_i64(-2)), q.one());

        let f5 = Field::prime(5).unwrap();
        let x = f5.from_fraction(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(x, Scalar::Mod(3));
        assert!(f5.from_fraction(&BigInt::from(1), &BigInt::from(10)).is_err());
    }

    #[test]
    fn negative_reduction() {
        let f = Field::prime(5).unwrap();
        assert_eq!(f.from_i64(-1), Scalar::Mod(4));
        assert_eq!(f.neg(&Scalar::Mod(0)), Scalar::Mod(0));
    }
}
