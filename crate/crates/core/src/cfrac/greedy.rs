use super::{ExpansionEnd, HTerm};
use crate::algebra::{FieldCoeff, LowestTerm, TruncatedSeries};
use crate::error::{Error, Result};

/// A certified prefix of the H-fraction of a truncated series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyExpansion<C: FieldCoeff> {
    pub terms: Vec<HTerm<C>>,
    /// Input coefficients consumed by each term (`2k + 2`).
    pub consumed: Vec<usize>,
    pub end: ExpansionEnd,
}

/// Expands `F` as `-a q^k / (D - q^{k+2} F_1)` repeatedly.
///
/// With `F = c q^k + ...` set `a = -c`; then `R = c q^k / F` is a unit
/// series, `D` is `R` truncated to degree `k + 1` and `F_1 = (D - R) / q^{k+2}`.
/// A step on a series of precision `N` needs `N >= 2k + 2` and leaves
/// precision `N - 2k - 2`.
pub fn greedy_hfraction<C: FieldCoeff>(f: &TruncatedSeries<C>, max_terms: usize) -> Result<GreedyExpansion<C>> {
    if f.is_zero_to_precision() {
        return Err(Error::InvalidArgument("series is zero to its precision".into()));
    }
    let mut terms = Vec::new();
    let mut consumed = Vec::new();
    let mut cur = f.clone();
    let end = loop {
        if terms.len() == max_terms {
            break ExpansionEnd::TermLimit;
        }
        let LowestTerm::Term { k, a: c } = cur.lowest_term() else {
            break ExpansionEnd::RemainderVanished;
        };
        let n = cur.precision();
        if n < 2 * k + 2 {
            break ExpansionEnd::PrecisionExhausted;
        }
        let unit = cur.drop_front(k)?;
        let r = unit.invert()?.scale(&c);
        let d = r.truncate(k + 2)?.to_polynomial();
        terms.push(HTerm { k, a: c.neg(), d: d.clone() });
        consumed.push(2 * k + 2);
        if n == 2 * k + 2 {
            break ExpansionEnd::PrecisionExhausted;
        }
        cur = r.neg().add_poly(&d).div_q_pow(k + 2)?;
    };
    Ok(GreedyExpansion { terms, consumed, end })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{BigRational, CoeffDomain, Polynomial};
    use crate::cfrac::eval_terms;
    use crate::qseries::{catalan_series, metallic_series};
    use proptest::prelude::*;

    const QQ: CoeffDomain = CoeffDomain::Rationals;

    fn rat(s: &TruncatedSeries<num_bigint::BigInt>) -> TruncatedSeries<BigRational> {
        s.map(QQ, |c| BigRational::from_integer(c.clone()))
    }

    fn qp(c: &[i64]) -> Polynomial<BigRational> {
        Polynomial::from_i64s(QQ, c)
    }

    fn r(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn golden_prefix() {
        let f = rat(&metallic_series(1, 40).unwrap());
        let g = greedy_hfraction(&f, 100).unwrap();
        assert_eq!(g.terms[0], HTerm { k: 0, a: r(-1), d: qp(&[1]) });
        assert_eq!(g.terms[1], HTerm { k: 0, a: r(-1), d: qp(&[1, 1]) });
        assert_eq!(g.terms[2], HTerm { k: 1, a: r(1), d: qp(&[1, 1, -1]) });
        assert_eq!(g.terms[3], HTerm { k: 0, a: r(1), d: qp(&[1, 1]) });
        assert_eq!(g.terms[4], g.terms[1]);
        assert_eq!(g.end, ExpansionEnd::PrecisionExhausted);
        assert_eq!(g.consumed.iter().sum::<usize>(), 40);
    }

    #[test]
    fn catalan_is_a_j_fraction() {
        let g = greedy_hfraction(&rat(&catalan_series(40).unwrap()), 100).unwrap();
        assert_eq!(g.terms.len(), 20);
        assert!(g.terms.iter().all(|t| t.k == 0));
    }

    #[test]
    fn polynomial_gives_finite_fraction() {
        let f = TruncatedSeries::from_poly(&qp(&[1, 1]), 12).unwrap();
        let g = greedy_hfraction(&f, 100).unwrap();
        assert_eq!(g.end, ExpansionEnd::RemainderVanished);
        assert_eq!(g.terms.len(), 2);
        assert_eq!(eval_terms(&g.terms, 12).unwrap(), f);
    }

    #[test]
    fn zero_input_rejected() {
        let f = TruncatedSeries::<BigRational>::zero(QQ, 5).unwrap();
        assert!(greedy_hfraction(&f, 10).is_err());
    }

    #[test]
    fn metallic_expansions_reproduce_input() {
        for n in 1..=6 {
            let f = rat(&metallic_series(n, 48).unwrap());
            let g = greedy_hfraction(&f, 200).unwrap();
            let used: usize = g.consumed.iter().sum();
            assert_eq!(eval_terms(&g.terms, used).unwrap(), f.truncate(used).unwrap(), "n = {n}");
        }
    }

    /// Random `P / Q` with `Q(0) = 1`.
    fn rational_series() -> impl Strategy<Value = TruncatedSeries<BigRational>> {
        (
            prop::collection::vec(-3i64..=3, 1..6),
            prop::collection::vec(-3i64..=3, 0..5),
            prop::sample::select(vec![0usize, 1, 2]),
        )
            .prop_filter_map("zero numerator", |(p, mut q, shift)| {
                q.insert(0, 1);
                let num = qp(&p).shift_up(shift);
                if num.is_zero() {
                    return None;
                }
                let n = TruncatedSeries::from_poly(&num, 40).unwrap();
                let d = TruncatedSeries::from_poly(&qp(&q), 40).unwrap();
                Some(n.mul(&d.invert().unwrap()))
            })
    }

    proptest! {
        #[test]
        fn expansion_round_trips(f in rational_series()) {
            let g = greedy_hfraction(&f, 100).unwrap();
            let used: usize = g.consumed.iter().sum::<usize>().min(f.precision());
            if g.end == ExpansionEnd::RemainderVanished {
                prop_assert_eq!(eval_terms(&g.terms, f.precision()).unwrap(), f.clone());
            } else {
                prop_assert_eq!(eval_terms(&g.terms, used).unwrap(), f.truncate(used).unwrap());
            }
        }

        #[test]
        fn more_precision_never_changes_emitted_terms(f in rational_series(), cut in 10usize..40) {
            let short = greedy_hfraction(&f.truncate(cut).unwrap(), 100).unwrap();
            let long = greedy_hfraction(&f, 100).unwrap();
            let m = short.terms.len().min(long.terms.len());
            // the last short term may only be certified up to its own budget
            prop_assert_eq!(&short.terms[..m], &long.terms[..m]);
        }
    }
}
