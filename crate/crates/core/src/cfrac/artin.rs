use super::{ExpansionEnd, HTerm};
use crate::algebra::{Coeff, CoeffDomain, FieldCoeff, Polynomial, TruncatedSeries};
use crate::error::{Error, Result};

/// A polynomial in `1/q`: `coeffs[r]` is the coefficient of `q^{-r}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvPoly<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> InvPoly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Coeff::is_zero) {
            coeffs.pop();
        }
        InvPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Highest exponent of `1/q` (`m_j`); `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent of `1/q` with a nonzero coefficient (`n_j`).
    pub fn low(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `q^m * self`, a polynomial in `q` when `m >= degree`.
    fn times_q_pow(&self, domain: CoeffDomain, m: usize) -> Polynomial<C> {
        let mut out = vec![C::zero(domain); m + 1];
        for (r, c) in self.coeffs.iter().enumerate() {
            out[m - r] = c.clone();
        }
        Polynomial::new(domain, out)
    }
}

/// `a0 + 1/(a_1 + 1/(a_2 + ...))` with partial quotients in `1/q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularCf<C: Coeff> {
    pub a0: InvPoly<C>,
    pub quotients: Vec<InvPoly<C>>,
}

impl<C: FieldCoeff> RegularCf<C> {
    /// The value of the convergent built from the first `count` quotients.
    ///
    /// With `P_j = q^{m_j} a_j(1/q)` (a polynomial with nonzero constant
    /// term) the tails satisfy `1/(a_j + y) = q^{m_j} / (P_j + q^{m_j} y)`.
    pub fn convergent(&self, domain: CoeffDomain, count: usize, prec: usize) -> Result<TruncatedSeries<C>> {
        let mut y = TruncatedSeries::zero(domain, prec)?;
        for (j, a) in self.quotients.iter().take(count).enumerate().rev() {
            let m = a.degree().filter(|&m| m >= 1).ok_or(Error::MalformedQuotient { index: j + 1 })?;
            let p = a.times_q_pow(domain, m);
            let den = y.mul_q_pow(m).truncate(prec)?.add_poly(&p);
            y = den.invert()?.mul_q_pow(m).truncate(prec)?;
        }
        let a0 = self.a0.coeffs().first().cloned().unwrap_or_else(|| C::zero(domain));
        if self.a0.degree().is_some_and(|d| d > 0) {
            return Err(Error::InvalidArgument("a0 has negative powers of q".into()));
        }
        Ok(y.add_poly(&Polynomial::constant(a0)))
    }
}

/// A certified prefix of an Artin expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArtinExpansion<C: Coeff> {
    pub cf: RegularCf<C>,
    pub end: ExpansionEnd,
}

/// Expands `f` with `f(0) = 0` as `1/(a_1(1/q) + 1/(a_2(1/q) + ...))`.
///
/// Each step inverts the current remainder `f = q^v u`, keeps the part of
/// `1/f` with nonpositive powers of `q` as the quotient and continues with
/// the rest. A step needs precision `2v + 1` and leaves `N - 2v`.
pub fn artin_expand<C: FieldCoeff>(f: &TruncatedSeries<C>, max_quotients: usize) -> Result<ArtinExpansion<C>> {
    if f.coeff(0).is_some_and(|c| !c.is_zero()) {
        return Err(Error::InvalidArgument("series must vanish at q = 0".into()));
    }
    if f.is_zero_to_precision() {
        return Err(Error::InvalidArgument("series is zero to its precision".into()));
    }
    let mut quotients = Vec::new();
    let mut cur = f.clone();
    let end = loop {
        if quotients.len() == max_quotients {
            break ExpansionEnd::TermLimit;
        }
        let Some(v) = cur.valuation() else { break ExpansionEnd::RemainderVanished };
        let n = cur.precision();
        if n < 2 * v + 1 {
            break ExpansionEnd::PrecisionExhausted;
        }
        let h = cur.drop_front(v)?.invert()?;
        let coeffs: Vec<C> = (0..=v).map(|r| h.coeff(v - r).expect("in precision").clone()).collect();
        quotients.push(InvPoly::new(coeffs));
        let rest = h.drop_front(v)?;
        let mut tail = vec![C::zero(f.domain())];
        tail.extend(rest.coeffs().iter().skip(1).cloned());
        if tail.len() == 1 {
            break ExpansionEnd::PrecisionExhausted;
        }
        cur = TruncatedSeries::new(f.domain(), tail)?;
    };
    Ok(ArtinExpansion { cf: RegularCf { a0: InvPoly::new(Vec::new()), quotients }, end })
}

/// Artin expansion of `q F(q)` from the H-fraction terms of `F`.
///
/// Quotient `j + 1` has degree `m = k_j + 1`, leading coefficient
/// `1 / v_0` for `j = 0` and `-1 / (v_j c_j)` afterwards, and
/// `q^m a_{j+1}(1/q) = c_{j+1} D_j(q)`.
pub fn hf_to_artin<C: FieldCoeff>(terms: &[HTerm<C>]) -> Result<RegularCf<C>> {
    let mut quotients = Vec::with_capacity(terms.len());
    let mut lead: Option<C> = None;
    for (j, t) in terms.iter().enumerate() {
        let v = t.v();
        let c = match &lead {
            None => v.inv(),
            Some(prev) => v.mul(prev).inv().map(|x| x.neg()),
        }
        .ok_or(Error::IllPosedFraction { index: j, reason: "zero numerator coefficient".into() })?;
        let m = t.k + 1;
        if t.d.degree().is_some_and(|d| d > m) {
            return Err(Error::IllPosedFraction { index: j, reason: "denominator degree exceeds k + 1".into() });
        }
        let coeffs = (0..=m).map(|r| t.d.coeff(m - r).mul(&c)).collect();
        quotients.push(InvPoly::new(coeffs));
        lead = Some(c);
    }
    Ok(RegularCf { a0: InvPoly::new(Vec::new()), quotients })
}

/// Inverse of [`hf_to_artin`].
pub fn artin_to_hf<C: FieldCoeff>(cf: &RegularCf<C>) -> Result<Vec<HTerm<C>>> {
    if !cf.a0.is_zero() {
        return Err(Error::InvalidArgument("a0 must be zero".into()));
    }
    let mut terms = Vec::with_capacity(cf.quotients.len());
    let mut prev: Option<C> = None;
    for (j, quo) in cf.quotients.iter().enumerate() {
        let m = quo.degree().filter(|&m| m >= 1).ok_or(Error::MalformedQuotient { index: j + 1 })?;
        let c = quo.coeffs()[m].clone();
        let domain = c.domain();
        let cinv = c.inv().expect("nonzero leading coefficient");
        let v = match &prev {
            None => cinv.clone(),
            Some(p) => p.mul(&c).inv().expect("nonzero").neg(),
        };
        let d = quo.times_q_pow(domain, m).scale(&cinv);
        terms.push(HTerm { k: m - 1, a: v.neg(), d });
        prev = Some(c);
    }
    Ok(terms)
}
