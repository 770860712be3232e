//! Dense univariate polynomials in `q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::scalar::{Coeff, CoeffDomain, FieldCoeff};
use crate::error::{Error, Result};

/// `coeffs[i]` is the coefficient of `q^i`. Trailing zeros are stripped, so
/// the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<C: Coeff> {
    domain: CoeffDomain,
    coeffs: Vec<C>,
}

impl<C: Coeff> Polynomial<C> {
    pub fn new(domain: CoeffDomain, mut coeffs: Vec<C>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.domain() == domain));
        while coeffs.last().is_some_and(Coeff::is_zero) {
            coeffs.pop();
        }
        Polynomial { domain, coeffs }
    }

    pub fn from_i64s(domain: CoeffDomain, coeffs: &[i64]) -> Self {
        Self::new(domain, coeffs.iter().map(|&c| C::from_i64(domain, c)).collect())
    }

    pub fn zero(domain: CoeffDomain) -> Self {
        Polynomial { domain, coeffs: Vec::new() }
    }

    pub fn one(domain: CoeffDomain) -> Self {
        Self::constant(C::one(domain))
    }

    pub fn constant(c: C) -> Self {
        Self::new(c.domain(), vec![c])
    }

    /// `c * q^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        let domain = c.domain();
        let mut coeffs = vec![C::zero(domain); k];
        coeffs.push(c);
        Self::new(domain, coeffs)
    }

    /// `q^k` with unit coefficient.
    pub fn q_pow(domain: CoeffDomain, k: usize) -> Self {
        Self::monomial(C::one(domain), k)
    }

    pub fn domain(&self) -> CoeffDomain {
        self.domain
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(|| C::zero(self.domain))
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.coeffs.last()
    }

    /// Lowest-order nonzero term `(k, a)` with `self = a q^k + O(q^{k+1})`.
    pub fn lowest_term(&self) -> Option<(usize, C)> {
        self.coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c.clone()))
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.domain, self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    /// Multiplication by `q^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![C::zero(self.domain); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { domain: self.domain, coeffs }
    }

    /// Exact division by `q^k`; fails when a coefficient below `k` is nonzero.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision { domain: self.domain });
        }
        Ok(Self::new(self.domain, self.coeffs.iter().skip(k).cloned().collect()))
    }

    /// Keeps the terms of degree `< n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.domain, self.coeffs.iter().take(n).cloned().collect())
    }

    pub fn eval(&self, x: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(self.domain), |acc, c| acc.mul(x).add(c))
    }

    /// Reverses the coefficient list relative to degree `d`: `q^d P(1/q)`.
    pub fn reversed(&self, d: usize) -> Self {
        let mut coeffs = vec![C::zero(self.domain); d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            assert!(i <= d, "reversal degree below polynomial degree");
            coeffs[d - i] = c.clone();
        }
        Self::new(self.domain, coeffs)
    }

    pub fn map<D: Coeff>(&self, domain: CoeffDomain, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial::new(domain, self.coeffs.iter().map(f).collect())
    }

    /// Division with remainder where only the leading coefficient of the
    /// divisor needs to be invertible. Over the integers this succeeds exactly
    /// when every partial quotient divides evenly.
    pub fn checked_divrem(&self, den: &Self) -> Result<(Self, Self)> {
        let lead = den.leading_coeff().ok_or(Error::DivisionByZero)?;
        let dd = den.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(self.domain), self.clone()));
        }
        let mut quot = vec![C::zero(self.domain); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let factor = top
                .checked_div(lead)
                .ok_or(Error::InexactDivision { domain: self.domain })?;
            for (j, dc) in den.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].sub(&factor.mul(dc));
            }
            quot[i] = factor;
        }
        rem.truncate(dd);
        Ok((Self::new(self.domain, quot), Self::new(self.domain, rem)))
    }

    /// Quotient of an exact division; errors on a nonzero remainder.
    pub fn exact_div(&self, den: &Self) -> Result<Self> {
        let (q, r) = self.checked_divrem(den)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision { domain: self.domain })
        }
    }

    fn assert_same_domain(&self, other: &Self) {
        assert_eq!(self.domain, other.domain, "polynomials over different domains");
    }
}

impl<C: FieldCoeff> Polynomial<C> {
    /// Euclidean division over a field.
    pub fn divrem(&self, den: &Self) -> Result<(Self, Self)> {
        self.checked_divrem(den)
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(c) => self.scale(&c.inv().expect("nonzero leading coefficient")),
            None => self.clone(),
        }
    }
}

impl Polynomial<BigInt> {
    pub fn to_rational(&self) -> Polynomial<num_rational::BigRational> {
        self.map(CoeffDomain::Rationals, |c| num_rational::BigRational::from_integer(c.clone()))
    }
}

impl<'a, C: Coeff> Add<&'a Polynomial<C>> for &'a Polynomial<C> {
    type Output = Polynomial<C>;

    fn add(self, rhs: &'a Polynomial<C>) -> Polynomial<C> {
        self.assert_same_domain(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new(self.domain, (0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect())
    }
}

impl<'a, C: Coeff> Sub<&'a Polynomial<C>> for &'a Polynomial<C> {
    type Output = Polynomial<C>;

    fn sub(self, rhs: &'a Polynomial<C>) -> Polynomial<C> {
        self.assert_same_domain(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new(self.domain, (0..n).map(|i| self.coeff(i).sub(&rhs.coeff(i))).collect())
    }
}

impl<'a, C: Coeff> Mul<&'a Polynomial<C>> for &'a Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: &'a Polynomial<C>) -> Polynomial<C> {
        self.assert_same_domain(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(self.domain);
        }
        let mut out = vec![C::zero(self.domain); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Polynomial::new(self.domain, out)
    }
}

impl<C: Coeff> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        Polynomial::new(self.domain, self.coeffs.iter().map(Coeff::neg).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Coeff> $tr<Polynomial<C>> for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $m(self, rhs: Polynomial<C>) -> Polynomial<C> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coeff> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        -&self
    }
}

/// Ascending powers with explicit `q^k`, e.g. `1 - q + 2q^3`.
impl<C: Coeff> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let unit = magnitude == "1";
            match (i, unit) {
                (0, _) => write!(f, "{magnitude}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{magnitude}q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{magnitude}q^{i}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.domain, self)
    }
}
