//! Exact scalars: integers, rationals and prime-field residues.
//!
//! The three coefficient domains share one trait, [`Coeff`], so that
//! polynomials, series and matrices are written once and instantiated per
//! domain. Prime-field residues carry their modulus, which lets a domain be
//! chosen at run time (for example from a CLI flag).

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The coefficient ring a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoeffDomain {
    Integers,
    Rationals,
    PrimeField(u64),
}

impl CoeffDomain {
    /// Checked constructor for `F_p`.
    pub fn prime_field(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(CoeffDomain::PrimeField(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn is_field(self) -> bool {
        !matches!(self, CoeffDomain::Integers)
    }
}

impl fmt::Display for CoeffDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffDomain::Integers => write!(f, "Z"),
            CoeffDomain::Rationals => write!(f, "Q"),
            CoeffDomain::PrimeField(p) => write!(f, "F_{p}"),
        }
    }
}

/// Deterministic trial division; moduli used here are small.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact scalar in one of the [`CoeffDomain`]s.
pub trait Coeff: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn domain(&self) -> CoeffDomain;
    fn from_bigint(domain: CoeffDomain, v: &BigInt) -> Self;
    fn is_zero(&self) -> bool;

    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    /// Exact quotient. `None` when `other` is zero, or over the integers when
    /// the division leaves a remainder.
    fn checked_div(&self, other: &Self) -> Option<Self>;

    /// The value as an integer when it is one. Residues map to `0..p`.
    fn to_bigint(&self) -> Option<BigInt>;

    fn from_i64(domain: CoeffDomain, v: i64) -> Self {
        Self::from_bigint(domain, &BigInt::from(v))
    }

    fn zero(domain: CoeffDomain) -> Self {
        Self::from_i64(domain, 0)
    }

    fn one(domain: CoeffDomain) -> Self {
        Self::from_i64(domain, 1)
    }

    fn is_one(&self) -> bool {
        *self == Self::one(self.domain())
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.domain());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// Scalars of a field: every nonzero element is invertible.
pub trait FieldCoeff: Coeff {
    fn inv(&self) -> Option<Self> {
        Self::one(self.domain()).checked_div(self)
    }
}

impl Coeff for BigInt {
    fn domain(&self) -> CoeffDomain {
        CoeffDomain::Integers
    }

    fn from_bigint(domain: CoeffDomain, v: &BigInt) -> Self {
        debug_assert_eq!(domain, CoeffDomain::Integers);
        v.clone()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn checked_div(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            return None;
        }
        let (q, r) = self.div_rem(other);
        Zero::is_zero(&r).then_some(q)
    }

    fn to_bigint(&self) -> Option<BigInt> {
        Some(self.clone())
    }
}

impl Coeff for BigRational {
    fn domain(&self) -> CoeffDomain {
        CoeffDomain::Rationals
    }

    fn from_bigint(domain: CoeffDomain, v: &BigInt) -> Self {
        debug_assert_eq!(domain, CoeffDomain::Rationals);
        BigRational::from_integer(v.clone())
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn checked_div(&self, other: &Self) -> Option<Self> {
        (!Zero::is_zero(other)).then(|| self / other)
    }

    fn to_bigint(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.to_integer())
    }
}

impl FieldCoeff for BigRational {}

/// A residue modulo a prime `p < 2^63`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: i128, modulus: u64) -> Self {
        let m = modulus as i128;
        Fp { value: value.rem_euclid(m) as u64, modulus }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    fn check(self, other: Fp) {
        assert_eq!(self.modulus, other.modulus, "mixing residues of different moduli");
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Coeff for Fp {
    fn domain(&self) -> CoeffDomain {
        CoeffDomain::PrimeField(self.modulus)
    }

    fn from_bigint(domain: CoeffDomain, v: &BigInt) -> Self {
        let CoeffDomain::PrimeField(p) = domain else {
            panic!("Fp::from_bigint called with domain {domain}");
        };
        let r = v.mod_floor(&BigInt::from(p));
        Fp { value: r.to_u64().expect("reduced residue fits in u64"), modulus: p }
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn add(&self, other: &Self) -> Self {
        self.check(*other);
        let s = (self.value as u128 + other.value as u128) % self.modulus as u128;
        Fp { value: s as u64, modulus: self.modulus }
    }

    fn sub(&self, other: &Self) -> Self {
        self.check(*other);
        let s = (self.value as u128 + self.modulus as u128 - other.value as u128) % self.modulus as u128;
        Fp { value: s as u64, modulus: self.modulus }
    }

    fn mul(&self, other: &Self) -> Self {
        self.check(*other);
        let s = (self.value as u128 * other.value as u128) % self.modulus as u128;
        Fp { value: s as u64, modulus: self.modulus }
    }

    fn neg(&self) -> Self {
        Fp { value: (self.modulus - self.value) % self.modulus, modulus: self.modulus }
    }

    fn checked_div(&self, other: &Self) -> Option<Self> {
        self.check(*other);
        if other.value == 0 {
            return None;
        }
        // Fermat inverse.
        let inv = other.pow(self.modulus - 2);
        Some(self.mul(&inv))
    }

    fn to_bigint(&self) -> Option<BigInt> {
        Some(BigInt::from(self.value))
    }
}

impl FieldCoeff for Fp {}

/// Parses `"7"`, `"-3"` or `"5/4"` into a rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidArgument(format!("not a rational number: {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().map_err(|_| bad())?;
            let den: BigInt = den.trim().parse().map_err(|_| bad())?;
            if Zero::is_zero(&den) {
                return Err(bad());
            }
            Ok(BigRational::new(num, den))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Reduces an integer scalar modulo `p`.
pub fn reduce_mod(v: &BigInt, p: u64) -> Fp {
    Fp::from_bigint(CoeffDomain::PrimeField(p), v)
}

/// Maps a rational with denominator prime to `p` into `F_p`.
pub fn rational_mod(v: &BigRational, p: u64) -> Option<Fp> {
    let num = reduce_mod(v.numer(), p);
    let den = reduce_mod(v.denom(), p);
    num.checked_div(&den)
}
