use crate::algebra::{Coeff, CoeffDomain, FieldCoeff};
use crate::cfrac::{HTerm, PeriodicHFraction};
use crate::error::{Error, Result};
use crate::hfrac::{expected_hfraction, hfraction_of_quadratic};
use crate::qseries::shifted_metallic_model;

/// How many leading terms of the H-fraction of the metallic series are
/// removed to get the fraction of its `l`-th shift.
pub fn dropped_terms(n: usize, l: usize) -> Result<usize> {
    if n == 0 || l > n + 1 {
        return Err(Error::InvalidArgument(format!("shift {l} out of range 0..={} for n = {n}", n + 1)));
    }
    Ok(if l < n {
        3 * l
    } else if l == n {
        3 * n - 1
    } else {
        3 * n
    })
}

/// H-fraction of the `l`-th shift of the q-metallic number, read off the
/// unshifted fraction: drop the first `dropped_terms(n, l)` terms and make
/// the new head numerator `q^{k}` (that is, `a = -1`).
pub fn hfraction_of_shift<C: Coeff>(domain: CoeffDomain, n: usize, l: usize) -> Result<PeriodicHFraction<C>> {
    let m = dropped_terms(n, l)?;
    let base = expected_hfraction::<C>(domain, n)?;
    let period = base.period();
    let mut stream: Vec<HTerm<C>> = (m..=m + period).map(|j| base.term(j).expect("periodic").clone()).collect();
    stream[0].a = C::one(domain).neg();
    PeriodicHFraction::from_stream(stream, Some(1))
}

/// The same fraction computed directly by Algorithm Q on the closed-form
/// shifted model.
pub fn hfraction_of_shift_by_algorithm<C: FieldCoeff>(
    domain: CoeffDomain,
    n: usize,
    l: usize,
    max_steps: usize,
    lift: impl Fn(&num_bigint::BigInt) -> C,
) -> Result<PeriodicHFraction<C>> {
    let model = shifted_metallic_model(n, l)?.map(domain, lift);
    hfraction_of_quadratic(&model, max_steps)?.found()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{BigRational, Polynomial};
    use crate::hfrac::default_max_steps;
    use crate::qseries::q_int;

    const QQ: CoeffDomain = CoeffDomain::Rationals;

    fn lift(c: &num_bigint::BigInt) -> BigRational {
        BigRational::from_integer(c.clone())
    }

    #[test]
    fn closed_form_matches_algorithm() {
        for n in 1..=6 {
            for l in 0..=n + 1 {
                let closed = hfraction_of_shift::<BigRational>(QQ, n, l).unwrap();
                let direct = hfraction_of_shift_by_algorithm(QQ, n, l, default_max_steps(n), lift).unwrap();
                assert_eq!(closed, direct, "n = {n}, l = {l}");
            }
        }
    }

    #[test]
    fn n5_shift_heads() {
        let h1 = hfraction_of_shift::<BigRational>(QQ, 5, 1).unwrap();
        assert_eq!(h1.numerator(0).unwrap(), Polynomial::one(QQ));
        assert_eq!(h1.numerator(1).unwrap(), Polynomial::q_pow(QQ, 4));
        assert_eq!(h1.denominator(1).unwrap(), &q_int(QQ, 4));
        let h5 = hfraction_of_shift::<BigRational>(QQ, 5, 5).unwrap();
        assert_eq!(h5.numerator(0).unwrap(), Polynomial::q_pow(QQ, 5));
        assert_eq!(h5.numerator(1).unwrap(), Polynomial::q_pow(QQ, 11));
        assert_eq!(h5.numerator(2).unwrap(), -Polynomial::q_pow(QQ, 6));
        assert!(hfraction_of_shift::<BigRational>(QQ, 5, 7).is_err());
    }
}
