//! Power series known up to a finite precision.
//!
//! A [`TruncatedSeries`] with precision `N` stores `f_0..f_{N-1}`; nothing is
//! claimed about `f_N` and beyond. Arithmetic never invents coefficients: the
//! result of an operation is only as precise as its least precise input, and
//! dividing by a series of valuation `v` costs `v` coefficients.

use std::fmt;

use super::poly::Polynomial;
use super::scalar::{Coeff, CoeffDomain};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries<C: Coeff> {
    domain: CoeffDomain,
    coeffs: Vec<C>,
}

/// Outcome of looking for the first nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LowestTerm<C> {
    /// `F = a q^k + O(q^{k+1})`, `a != 0`.
    Term { k: usize, a: C },
    /// Every known coefficient vanishes; `F = O(q^precision)`.
    ZeroToPrecision,
}

impl<C: Coeff> TruncatedSeries<C> {
    /// The precision is `coeffs.len()`, which must be at least 1.
    pub fn new(domain: CoeffDomain, coeffs: Vec<C>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Precision { needed: 1, available: 0 });
        }
        debug_assert!(coeffs.iter().all(|c| c.domain() == domain));
        Ok(TruncatedSeries { domain, coeffs })
    }

    pub fn from_i64s(domain: CoeffDomain, coeffs: &[i64]) -> Result<Self> {
        Self::new(domain, coeffs.iter().map(|&c| C::from_i64(domain, c)).collect())
    }

    pub fn from_poly(p: &Polynomial<C>, precision: usize) -> Result<Self> {
        Self::new(p.domain(), (0..precision).map(|i| p.coeff(i)).collect())
    }

    pub fn zero(domain: CoeffDomain, precision: usize) -> Result<Self> {
        Self::new(domain, vec![C::zero(domain); precision])
    }

    pub fn domain(&self) -> CoeffDomain {
        self.domain
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `q^i`, or `None` when `i` is beyond the precision.
    pub fn coeff(&self, i: usize) -> Option<&C> {
        self.coeffs.get(i)
    }

    pub fn lowest_term(&self) -> LowestTerm<C> {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(k) => LowestTerm::Term { k, a: self.coeffs[k].clone() },
            None => LowestTerm::ZeroToPrecision,
        }
    }

    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero_to_precision(&self) -> bool {
        self.valuation().is_none()
    }

    /// The known part as a polynomial.
    pub fn to_polynomial(&self) -> Polynomial<C> {
        Polynomial::new(self.domain, self.coeffs.clone())
    }

    pub fn truncate(&self, precision: usize) -> Result<Self> {
        if precision > self.precision() {
            return Err(Error::Precision { needed: precision, available: self.precision() });
        }
        Self::new(self.domain, self.coeffs[..precision].to_vec())
    }

    /// `F^{(l)} = (F - f_0 - ... - f_{l-1} q^{l-1}) / q^l`.
    pub fn drop_front(&self, l: usize) -> Result<Self> {
        if l >= self.precision() {
            return Err(Error::Precision { needed: l + 1, available: self.precision() });
        }
        Self::new(self.domain, self.coeffs[l..].to_vec())
    }

    /// Exact division by `q^k`; the first `k` coefficients must vanish.
    pub fn div_q_pow(&self, k: usize) -> Result<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision { domain: self.domain });
        }
        self.drop_front(k)
    }

    /// Multiplication by `q^k`; gains `k` coefficients of precision.
    pub fn mul_q_pow(&self, k: usize) -> Self {
        let mut coeffs = vec![C::zero(self.domain); k];
        coeffs.extend(self.coeffs.iter().cloned());
        TruncatedSeries { domain: self.domain, coeffs }
    }

    pub fn scale(&self, c: &C) -> Self {
        TruncatedSeries { domain: self.domain, coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect() }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries { domain: self.domain, coeffs: self.coeffs.iter().map(Coeff::neg).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a.sub(b))
    }

    pub fn add_poly(&self, p: &Polynomial<C>) -> Self {
        let coeffs = self.coeffs.iter().enumerate().map(|(i, c)| c.add(&p.coeff(i))).collect();
        TruncatedSeries { domain: self.domain, coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_domain(other);
        let n = self.precision().min(other.precision());
        let mut out = vec![C::zero(self.domain); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        TruncatedSeries { domain: self.domain, coeffs: out }
    }

    pub fn mul_poly(&self, p: &Polynomial<C>) -> Self {
        let n = self.precision();
        let mut out = vec![C::zero(self.domain); n];
        for (i, a) in p.coeffs().iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in self.coeffs.iter().take(n - i).enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        TruncatedSeries { domain: self.domain, coeffs: out }
    }

    /// Multiplicative inverse of a unit series (nonzero constant term).
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NonUnit);
        }
        let n = self.precision();
        let mut out: Vec<C> = Vec::with_capacity(n);
        let inv0 = C::one(self.domain).checked_div(c0).ok_or(Error::InexactDivision { domain: self.domain })?;
        out.push(inv0);
        for m in 1..n {
            let mut acc = C::zero(self.domain);
            for i in 1..=m {
                let f = &self.coeffs[i];
                if !f.is_zero() {
                    acc = acc.add(&f.mul(&out[m - i]));
                }
            }
            let next = acc.neg().checked_div(c0).ok_or(Error::InexactDivision { domain: self.domain })?;
            out.push(next);
        }
        Ok(TruncatedSeries { domain: self.domain, coeffs: out })
    }

    /// `self / other`. If `other` has valuation `v`, both operands are first
    /// divided by `q^v` and the quotient loses `v` coefficients of precision.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_domain(other);
        let v = other.valuation().ok_or(Error::NonUnit)?;
        let num = self.div_q_pow(v)?;
        let den = other.drop_front(v)?;
        let n = num.precision().min(den.precision());
        Ok(num.truncate(n)?.mul(&den.truncate(n)?.invert()?))
    }

    fn zip(&self, other: &Self, f: impl Fn(&C, &C) -> C) -> Self {
        self.check_domain(other);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect();
        TruncatedSeries { domain: self.domain, coeffs }
    }

    fn check_domain(&self, other: &Self) {
        assert_eq!(self.domain, other.domain, "series over different domains");
    }

    pub fn map<D: Coeff>(&self, domain: CoeffDomain, f: impl Fn(&C) -> D) -> TruncatedSeries<D> {
        TruncatedSeries { domain, coeffs: self.coeffs.iter().map(f).collect() }
    }
}

impl<C: Coeff> fmt::Display for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.to_polynomial();
        if p.is_zero() {
            write!(f, "O(q^{})", self.precision())
        } else {
            write!(f, "{p} + O(q^{})", self.precision())
        }
    }
}

impl<C: Coeff> fmt::Debug for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries[{}]({self})", self.domain)
    }
}
