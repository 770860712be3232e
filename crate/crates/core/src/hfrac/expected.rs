use crate::algebra::{Coeff, CoeffDomain, Polynomial};
use crate::cfrac::{HTerm, PeriodicHFraction};
use crate::error::{Error, Result};
use crate::qseries::{angle_bracket, q_int};

/// A level `sign * q^exp / den` of a displayed H-fraction.
type Level<C> = (i64, usize, Polynomial<C>);

/// Turns displayed levels into terms. The head `s q^e` has `a = -s`,
/// `k = e`; later levels `s q^e` have `a = s`, `k = e - k_prev - 2`.
fn terms_from_levels<C: Coeff>(domain: CoeffDomain, levels: Vec<Level<C>>) -> Result<Vec<HTerm<C>>> {
    let mut out: Vec<HTerm<C>> = Vec::with_capacity(levels.len());
    for (j, (sign, e, d)) in levels.into_iter().enumerate() {
        let s = C::from_i64(domain, sign);
        let term = match out.last() {
            None => HTerm { k: e, a: s.neg(), d },
            Some(prev) => {
                let k = e.checked_sub(prev.k + 2).ok_or_else(|| {
                    Error::InvalidArgument(format!("level {j}: exponent {e} below k_prev + 2"))
                })?;
                HTerm { k, a: s, d }
            }
        };
        out.push(term);
    }
    Ok(out)
}

fn periodic<C: Coeff>(domain: CoeffDomain, head: Level<C>, cycle: Vec<Level<C>>) -> Result<PeriodicHFraction<C>> {
    let mut levels = vec![head];
    levels.extend(cycle.iter().cloned());
    // second pass of the first level pins its k against the end of the cycle
    levels.push(cycle[0].clone());
    let mut terms = terms_from_levels(domain, levels)?;
    let again = terms.pop().expect("nonempty");
    if again != terms[1] {
        return Err(Error::InvalidArgument("cycle is not consistent with itself".into()));
    }
    PeriodicHFraction::from_stream(terms, Some(1))
}

/// The H-fraction of the q-metallic number predicted by the closed form:
/// the published 3-periodic golden and 8-periodic silver fractions, and for
/// `n >= 3` the head `1/(1-q)` followed by the blocks `U_n, V_n, W_n`.
pub fn expected_hfraction<C: Coeff>(domain: CoeffDomain, n: usize) -> Result<PeriodicHFraction<C>> {
    let p = |c: &[i64]| Polynomial::<C>::from_i64s(domain, c);
    match n {
        0 => Err(Error::InvalidArgument("metallic index must be >= 1".into())),
        1 => periodic(
            domain,
            (1, 0, p(&[1])),
            vec![(-1, 2, p(&[1, 1])), (1, 3, p(&[1, 1, -1])), (1, 3, p(&[1, 1]))],
        ),
        2 => periodic(
            domain,
            (1, 0, p(&[1, -1])),
            vec![
                (1, 2, p(&[1, 1])),
                (1, 2, p(&[1])),
                (1, 2, p(&[1])),
                (-1, 3, p(&[1, 0, 2])),
                (1, 5, p(&[1, 0, 2, -1])),
                (1, 5, p(&[1, 0, 2])),
                (-1, 3, p(&[1])),
                (1, 2, p(&[1])),
            ],
        ),
        _ => periodic(domain, (1, 0, p(&[1, -1])), metallic_cycle(domain, n)?),
    }
}

/// `U_n, V_n, W_n` as level lists (valid for `n >= 2`, with empty chains at 2).
pub(crate) fn metallic_cycle<C: Coeff>(domain: CoeffDomain, n: usize) -> Result<Vec<Level<C>>> {
    let qi = |m: usize| q_int::<C>(domain, m);
    let q = Polynomial::<C>::q_pow(domain, 1);
    let one = Polynomial::<C>::one(domain);
    let one_minus_q = &one - &q;
    let br = angle_bracket::<C>(domain, n)?;
    let br_plus = &br + &Polynomial::q_pow(domain, n + 1);
    let mut u = Vec::new();
    for i in 0..n.saturating_sub(2) {
        u.push((1, n - i, qi(n - i)));
        u.push((1, n, &qi(i + 2) - &q));
        u.push((1, i + 2, one_minus_q.clone()));
    }
    u.push((1, 2, qi(2)));
    u.push((1, n, &qi(n) - &q));
    u.push((1, n, one.clone()));
    let v = vec![
        (-1, n + 1, br_plus.clone()),
        (1, 2 * n + 1, br.clone()),
        (1, 2 * n + 1, br_plus),
        (-1, n + 1, one.clone()),
    ];
    let mut w = Vec::new();
    for i in 0..n.saturating_sub(2) {
        w.push((1, n - i, &qi(n - i) - &q));
        w.push((1, n, qi(i + 2)));
        w.push((1, i + 2, one_minus_q.clone()));
    }
    w.push((1, 2, one));
    u.extend(v);
    u.extend(w);
    Ok(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BigRational;

    const QQ: CoeffDomain = CoeffDomain::Rationals;

    #[test]
    fn cycle_lengths() {
        assert_eq!(expected_hfraction::<BigRational>(QQ, 1).unwrap().period(), 3);
        assert_eq!(expected_hfraction::<BigRational>(QQ, 2).unwrap().period(), 8);
        for n in 3..=10 {
            let h = expected_hfraction::<BigRational>(QQ, n).unwrap();
            assert_eq!((h.offset(), h.period()), (1, 6 * n - 4), "n = {n}");
        }
    }

    #[test]
    fn general_template_reduces_to_silver() {
        let hard = expected_hfraction::<BigRational>(QQ, 2).unwrap();
        let general = periodic(QQ, (1, 0, Polynomial::from_i64s(QQ, &[1, -1])), metallic_cycle(QQ, 2).unwrap()).unwrap();
        assert_eq!(hard, general);
    }
}
