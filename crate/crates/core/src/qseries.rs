//! q-integers, q-rationals, quadratic models and the metallic family.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::algebra::{Coeff, CoeffDomain, Polynomial, TruncatedSeries};
use crate::error::{Error, Result};

const ZZ: CoeffDomain = CoeffDomain::Integers;

/// `q^shift * poly`, with a possibly negative shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly<C: Coeff> {
    pub poly: Polynomial<C>,
    pub shift: i64,
}

/// `[n]_q = (1 - q^n) / (1 - q)` for any integer `n`.
///
/// For `n < 0` this is `-q^{n} [-n]_q`, a Laurent polynomial in `q^{-1}`.
pub fn q_integer<C: Coeff>(domain: CoeffDomain, n: i64) -> LaurentPoly<C> {
    if n >= 0 {
        LaurentPoly { poly: q_int(domain, n as usize), shift: 0 }
    } else {
        LaurentPoly { poly: -q_int::<C>(domain, n.unsigned_abs() as usize), shift: n }
    }
}

/// `[n]_q = 1 + q + ... + q^{n-1}` for `n >= 0`.
pub fn q_int<C: Coeff>(domain: CoeffDomain, n: usize) -> Polynomial<C> {
    Polynomial::new(domain, vec![C::one(domain); n])
}

/// `<n>_q = q [n]_q + (1 + q^n)(1 - q)`.
pub fn angle_bracket<C: Coeff>(domain: CoeffDomain, n: usize) -> Result<Polynomial<C>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("<n>_q needs n >= 2, got {n}")));
    }
    let one = Polynomial::one(domain);
    let q = Polynomial::q_pow(domain, 1);
    let qn = Polynomial::q_pow(domain, n);
    Ok(&q * &q_int(domain, n) + &(&one + &qn) * &(&one - &q))
}

/// A triple `(A, B, C)` whose equation `A + B F + C F^2 = 0` has a unique
/// power-series root, which requires `B(0) = 1` and `C(0) = 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadraticModel<C: Coeff> {
    pub a: Polynomial<C>,
    pub b: Polynomial<C>,
    pub c: Polynomial<C>,
}

impl<C: Coeff> QuadraticModel<C> {
    /// Builds a model, checking `A != 0`, `B(0) = 1`, `C != 0`, `C(0) = 0`.
    pub fn new(a: Polynomial<C>, b: Polynomial<C>, c: Polynomial<C>) -> Result<Self> {
        let m = QuadraticModel { a, b, c };
        m.validate()?;
        Ok(m)
    }

    pub fn domain(&self) -> CoeffDomain {
        self.b.domain()
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |s: &str| Err(Error::InvalidModel(s.into()));
        if self.a.is_zero() {
            return bad("A is zero");
        }
        if !self.b.coeff(0).is_one() {
            return bad("B(0) != 1");
        }
        if self.c.is_zero() {
            return bad("C is zero");
        }
        if !self.c.coeff(0).is_zero() {
            return bad("C(0) != 0");
        }
        Ok(())
    }

    /// The root to precision `n`, by solving for one coefficient at a time:
    /// the coefficient of `q^m` in `A + B F + C F^2` is `f_m` plus terms in
    /// `f_0..f_{m-1}` only.
    pub fn series(&self, n: usize) -> Result<TruncatedSeries<C>> {
        let domain = self.domain();
        let mut f: Vec<C> = Vec::with_capacity(n);
        let mut sq: Vec<C> = Vec::with_capacity(n);
        for m in 0..n {
            let mut acc = self.a.coeff(m);
            for (i, bi) in self.b.coeffs().iter().enumerate().skip(1).take_while(|(i, _)| *i <= m) {
                if !bi.is_zero() {
                    acc = acc.add(&bi.mul(&f[m - i]));
                }
            }
            for (i, ci) in self.c.coeffs().iter().enumerate().skip(1).take_while(|(i, _)| *i <= m) {
                if !ci.is_zero() {
                    acc = acc.add(&ci.mul(&sq[m - i]));
                }
            }
            f.push(acc.neg());
            // (F^2)_m now that f_m is known
            let mut s = C::zero(domain);
            for i in 0..=m {
                s = s.add(&f[i].mul(&f[m - i]));
            }
            sq.push(s);
        }
        TruncatedSeries::new(domain, f)
    }

    /// `A + B F + C F^2` truncated to the precision of `f`.
    pub fn residual(&self, f: &TruncatedSeries<C>) -> TruncatedSeries<C> {
        let ff = f.mul(f);
        let zero = TruncatedSeries::zero(self.domain(), f.precision()).expect("positive precision");
        zero.add_poly(&self.a).add(&f.mul_poly(&self.b)).add(&ff.mul_poly(&self.c))
    }

    pub fn map<D: Coeff>(&self, domain: CoeffDomain, f: impl Fn(&C) -> D) -> QuadraticModel<D> {
        QuadraticModel { a: self.a.map(domain, &f), b: self.b.map(domain, &f), c: self.c.map(domain, &f) }
    }

    /// Replaces the root `F` by `(F - f0) / q`.
    ///
    /// `A' = (A + f0 B + f0^2 C) / q`, `B' = B + 2 f0 C`, `C' = q C`. Since
    /// `C(0) = 0` the new `B'(0)` is still 1, so no rescaling is needed.
    pub fn shift(&self, f0: &C) -> Result<Self> {
        let num = &(&self.a + &self.b.scale(f0)) + &self.c.scale(&f0.mul(f0));
        if !num.coeff(0).is_zero() {
            return Err(Error::InvalidArgument(format!("{f0} is not the constant term of the root")));
        }
        let two = C::from_i64(self.domain(), 2);
        let a = num.shift_down(1)?;
        let b = &self.b + &self.c.scale(&two.mul(f0));
        let c = self.c.shift_up(1);
        Ok(QuadraticModel { a, b, c })
    }
}

impl QuadraticModel<BigInt> {
    pub fn to_rational(&self) -> QuadraticModel<BigRational> {
        self.map(CoeffDomain::Rationals, |c| BigRational::from_integer(c.clone()))
    }
}

/// `qF^2 + ((1 + q^n)(1 - q) - q[n]_q) F - 1 = 0`, whose root is the
/// q-deformed metallic number.
pub fn metallic_model(n: usize) -> Result<QuadraticModel<BigInt>> {
    if n == 0 {
        return Err(Error::InvalidArgument("metallic index must be >= 1".into()));
    }
    let one = Polynomial::one(ZZ);
    let q = Polynomial::q_pow(ZZ, 1);
    let b = &(&one + &Polynomial::q_pow(ZZ, n)) * &(&one - &q) - &q * &q_int(ZZ, n);
    QuadraticModel::new(-one, b, q)
}

/// Taylor coefficients of the q-metallic number to precision `prec`.
pub fn metallic_series(n: usize, prec: usize) -> Result<TruncatedSeries<BigInt>> {
    metallic_model(n)?.series(prec)
}

/// Closed form of the model satisfied by `F^{(l)}`, the root with its first
/// `l` coefficients removed, for `0 <= l <= n + 1`.
pub fn shifted_metallic_model(n: usize, l: usize) -> Result<QuadraticModel<BigInt>> {
    if n == 0 || l > n + 1 {
        return Err(Error::InvalidArgument(format!("shift {l} out of range 0..={} for n = {n}", n + 1)));
    }
    let p = |c: &[i64]| Polynomial::<BigInt>::from_i64s(ZZ, c);
    let qp = |k| Polynomial::<BigInt>::q_pow(ZZ, k);
    let tri = p(&[1, -1, 1]);
    let qm1 = p(&[-1, 1]);
    let one = Polynomial::one(ZZ);
    let qn1 = &qp(n) + &one;
    if l <= n {
        let num_a = &qp(l + 1) - &(&tri * &(&(&qp(n) - &qp(n - l)) + &one));
        let a = num_a.exact_div(&(&qm1 * &qm1))?;
        let b = (&(&qp(l + 1) + &qp(l + 1)) - &(&tri * &qn1)).exact_div(&qm1)?;
        QuadraticModel::new(a, b, qp(l + 1))
    } else {
        let a = -qp(n - 1);
        let b = -(&tri + &(&p(&[1, -3, 1]) * &qp(n))).exact_div(&qm1)?;
        QuadraticModel::new(a, b, qp(n + 2))
    }
}

/// Regular continued fraction `[a0; a1, ..., am]` of a nonnegative rational.
pub fn regular_cf(x: &BigRational) -> Result<Vec<BigInt>> {
    if x.is_negative() {
        return Err(Error::InvalidArgument("negative rationals are not supported".into()));
    }
    let (mut num, mut den) = (x.numer().clone(), x.denom().clone());
    let mut out = Vec::new();
    loop {
        let (quo, rem) = num.div_mod_floor(&den);
        out.push(quo);
        if Zero::is_zero(&rem) {
            return Ok(out);
        }
        num = den;
        den = rem;
    }
}

/// `q^e * p / d`.
struct QFrac {
    p: Polynomial<BigInt>,
    d: Polynomial<BigInt>,
    e: i64,
}

impl QFrac {
    fn poly(p: Polynomial<BigInt>, e: i64) -> Self {
        QFrac { p, d: Polynomial::one(ZZ), e }
    }

    fn add(&self, other: &QFrac) -> QFrac {
        let e = self.e.min(other.e);
        let l = (&self.p * &other.d).shift_up((self.e - e) as usize);
        let r = (&other.p * &self.d).shift_up((other.e - e) as usize);
        QFrac { p: &l + &r, d: &self.d * &other.d, e }
    }

    fn recip(&self) -> QFrac {
        QFrac { p: self.d.clone(), d: self.p.clone(), e: -self.e }
    }

    fn normalize(mut self) -> QFrac {
        if let Some((k, _)) = self.p.lowest_term() {
            self.p = self.p.shift_down(k).expect("lowest term");
            self.e += k as i64;
        }
        if let Some((k, _)) = self.d.lowest_term() {
            self.d = self.d.shift_down(k).expect("lowest term");
            self.e -= k as i64;
        }
        self
    }
}

/// `[x]_q` for a nonnegative rational `x`, expanded to precision `prec`.
///
/// With `x = [a0; a1, ..., am]` the value is
/// `[a0]_q + q^{a0} / ([a1]_{q^-1} + q^{-a1} / ([a2]_q + q^{a2} / ...))`,
/// evaluated from the bottom as a quotient of polynomials with a power of
/// `q` kept aside, using `[a]_{q^-1} = q^{1-a} [a]_q`.
pub fn q_rational(x: &BigRational, prec: usize) -> Result<TruncatedSeries<BigInt>> {
    let cf = regular_cf(x)?;
    let small = |a: &BigInt| -> Result<usize> {
        usize::try_from(a).map_err(|_| Error::InvalidArgument(format!("partial quotient {a} too large")))
    };
    let mut acc: Option<QFrac> = None;
    for (i, a) in cf.iter().enumerate().rev() {
        let a = small(a)?;
        let ai = a as i64;
        let (block, step) = if i % 2 == 0 {
            (QFrac::poly(q_int(ZZ, a), 0), ai)
        } else {
            (QFrac::poly(q_int(ZZ, a), 1 - ai), -ai)
        };
        acc = Some(match acc {
            None => block,
            Some(tail) => {
                let mut t = tail.recip();
                t.e += step;
                block.add(&t)
            }
        });
    }
    let v = acc.expect("nonempty expansion").normalize();
    if v.p.is_zero() {
        return TruncatedSeries::zero(ZZ, prec);
    }
    if v.e < 0 {
        return Err(Error::InvalidArgument("q-rational has a pole at q = 0".into()));
    }
    let e = v.e as usize;
    if e >= prec {
        return TruncatedSeries::zero(ZZ, prec);
    }
    let p = TruncatedSeries::from_poly(&v.p, prec - e)?;
    let d = TruncatedSeries::from_poly(&v.d, prec - e)?;
    Ok(p.mul(&d.invert()?).mul_q_pow(e))
}

/// Catalan numbers `binom(2i, i) / (i + 1)`.
pub fn catalan_series(prec: usize) -> Result<TruncatedSeries<BigInt>> {
    TruncatedSeries::new(ZZ, (0..prec).map(catalan).collect())
}

fn catalan(i: usize) -> BigInt {
    num_integer::binomial(BigInt::from(2 * i), BigInt::from(i)) / BigInt::from(i + 1)
}

/// Motzkin numbers `M_i = sum_k binom(i, 2k) catalan(k)`.
pub fn motzkin_series(prec: usize) -> Result<TruncatedSeries<BigInt>> {
    let coeffs = (0..prec)
        .map(|i| {
            (0..=i / 2)
                .map(|k| num_integer::binomial(BigInt::from(i), BigInt::from(2 * k)) * catalan(k))
                .sum()
        })
        .collect();
    TruncatedSeries::new(ZZ, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::parse_rational;

    fn zp(c: &[i64]) -> Polynomial<BigInt> {
        Polynomial::from_i64s(ZZ, c)
    }

    fn ints(s: &TruncatedSeries<BigInt>) -> Vec<i64> {
        s.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_int::<BigInt>(ZZ, 3), zp(&[1, 1, 1]));
        assert!(q_int::<BigInt>(ZZ, 0).is_zero());
        let neg = q_integer::<BigInt>(ZZ, -2);
        assert_eq!((neg.poly, neg.shift), (zp(&[-1, -1]), -2));
        for n in 0..20 {
            let next = &Polynomial::<BigInt>::q_pow(ZZ, 1) * &q_int(ZZ, n) + Polynomial::one(ZZ);
            assert_eq!(next, q_int(ZZ, n + 1));
        }
    }

    #[test]
    fn angle_brackets() {
        assert_eq!(angle_bracket::<BigInt>(ZZ, 2).unwrap(), zp(&[1, 0, 2, -1]));
        assert_eq!(angle_bracket::<BigInt>(ZZ, 3).unwrap(), zp(&[1, 0, 1, 2, -1]));
        assert_eq!(angle_bracket::<BigInt>(ZZ, 5).unwrap(), zp(&[1, 0, 1, 1, 1, 2, -1]));
        assert!(angle_bracket::<BigInt>(ZZ, 1).is_err());
    }

    #[test]
    fn golden_model() {
        let m = metallic_model(1).unwrap();
        assert_eq!(m.b, zp(&[1, -1, -1]));
        let f = m.series(16).unwrap();
        assert_eq!(
            ints(&f),
            vec![1, 0, 1, -1, 2, -4, 8, -17, 37, -82, 185, -423, 978, -2283, 5373, -12735]
        );
    }

    #[test]
    fn metallic_b_cross_identity() {
        for n in 1..=12 {
            let b = metallic_model(n).unwrap().b;
            let rhs = -(&(&zp(&[1, -1, 1]) * &(&Polynomial::q_pow(ZZ, n) + &Polynomial::one(ZZ))) - &zp(&[0, 2]));
            assert_eq!(&b * &zp(&[-1, 1]), rhs, "n = {n}");
        }
    }

    #[test]
    fn shifted_models_match_iterated_shift() {
        for n in 1..=6 {
            let f = metallic_series(n, 3 * n + 8).unwrap();
            let mut m = metallic_model(n).unwrap();
            for l in 0..=n + 1 {
                let closed = shifted_metallic_model(n, l).unwrap();
                assert_eq!(m, closed, "n = {n}, l = {l}");
                m = m.shift(f.coeff(l).unwrap()).unwrap();
            }
        }
        let top = shifted_metallic_model(5, 5).unwrap();
        assert_eq!((top.a, top.c), (-Polynomial::q_pow(ZZ, 5), Polynomial::q_pow(ZZ, 6)));
        assert!(shifted_metallic_model(3, 5).is_err());
    }

    #[test]
    fn shift_with_zero_constant() {
        let m = QuadraticModel::new(zp(&[0, 1]), zp(&[1, 1]), zp(&[0, 1])).unwrap();
        let s = m.shift(&BigInt::from(0)).unwrap();
        assert_eq!((s.a, s.b, s.c), (zp(&[1]), zp(&[1, 1]), zp(&[0, 0, 1])));
        assert!(metallic_model(2).unwrap().shift(&BigInt::from(2)).is_err());
    }

    #[test]
    fn q_rationals() {
        let r = |s: &str, n| ints(&q_rational(&parse_rational(s).unwrap(), n).unwrap());
        assert_eq!(r("3", 5), vec![1, 1, 1, 0, 0]);
        assert_eq!(r("1/2", 6), vec![0, 1, -1, 1, -1, 1]);
        assert_eq!(r("0", 4), vec![0, 0, 0, 0]);
        for p in 0..=10 {
            let want: Vec<i64> = (0..12).map(|i| i64::from(i < p)).collect();
            assert_eq!(r(&p.to_string(), 12), want);
        }
        assert!(q_rational(&parse_rational("-1/2").unwrap(), 4).is_err());
    }

    #[test]
    fn q_rational_integer_coefficients_satisfy_recursion() {
        // [x + 1]_q = q [x]_q + 1 for rational x
        for s in ["1/2", "5/3", "7/4", "13/5"] {
            let x = parse_rational(s).unwrap();
            let lhs = q_rational(&(&x + BigRational::from_integer(1.into())), 20).unwrap();
            let rhs = q_rational(&x, 19).unwrap().mul_q_pow(1).add_poly(&Polynomial::one(ZZ));
            assert_eq!(lhs, rhs, "x = {s}");
        }
    }

    #[test]
    fn baselines() {
        assert_eq!(ints(&catalan_series(7).unwrap()), vec![1, 1, 2, 5, 14, 42, 132]);
        assert_eq!(ints(&motzkin_series(7).unwrap()), vec![1, 1, 2, 4, 9, 21, 51]);
    }

    #[test]
    fn invalid_models_rejected() {
        assert!(QuadraticModel::new(zp(&[]), zp(&[1]), zp(&[0, 1])).is_err());
        assert!(QuadraticModel::new(zp(&[1]), zp(&[2]), zp(&[0, 1])).is_err());
        assert!(QuadraticModel::new(zp(&[1]), zp(&[1]), zp(&[1, 1])).is_err());
        assert!(metallic_model(0).is_err());
    }
}
