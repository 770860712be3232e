use std::collections::HashMap;

use crate::algebra::{Coeff, FieldCoeff, Polynomial, TruncatedSeries};
use crate::cfrac::{HTerm, PeriodicHFraction};
use crate::error::{Error, Result};
use crate::qseries::QuadraticModel;

/// Output of one Algorithm Q step. `next` may have `A = 0`, which means the
/// remaining tail is zero and the fraction ends here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgStep<C: Coeff> {
    pub next: QuadraticModel<C>,
    pub k: usize,
    pub a: C,
    pub d: Polynomial<C>,
}

impl<C: Coeff> AlgStep<C> {
    pub fn term(&self) -> HTerm<C> {
        HTerm { k: self.k, a: self.a.clone(), d: self.d.clone() }
    }
}

/// One step of Algorithm Q on a model with root `F`.
///
/// 1. `(k, a)` is the lowest term of `A`.
/// 2. `D` is the polynomial of degree `<= k + 1` with
///    `a q^k B / A - a c_1 q^{k+1} = D + O(q^{k+2})`, `c_1` the `q`-coefficient of `C`.
/// 3. `A* = (-D^2 A / a + B D q^k - C a q^{2k}) / q^{2k+2}`,
///    `B* = 2 A D / (a q^k) - B`, `C* = -A q^2 / a`.
///
/// The root then satisfies `F = -a q^k / (D - q^{k+2} F*)`.
pub fn alg_step<C: FieldCoeff>(m: &QuadraticModel<C>) -> Result<AlgStep<C>> {
    let domain = m.domain();
    let (k, a) = m.a.lowest_term().ok_or_else(|| Error::InvalidModel("A is zero".into()))?;
    let a_inv = a.inv().expect("nonzero lowest coefficient");
    let unit = m.a.shift_down(k)?;
    let prec = k + 2;
    let ratio = TruncatedSeries::from_poly(&m.b, prec)?.mul(&TruncatedSeries::from_poly(&unit, prec)?.invert()?);
    let c1 = m.c.coeff(1);
    let d = ratio.scale(&a).to_polynomial() - Polynomial::monomial(a.mul(&c1), k + 1);

    let d2a = (&(&d * &d) * &m.a).scale(&a_inv);
    let bdq = (&m.b * &d).shift_up(k);
    let caq = m.c.scale(&a).shift_up(2 * k);
    let a_next = (&(&bdq - &d2a) - &caq).shift_down(2 * k + 2)?;
    let two = C::from_i64(domain, 2);
    let b_next = &(&unit * &d).scale(&two.mul(&a_inv)) - &m.b;
    let c_next = m.a.shift_up(2).scale(&a_inv.neg());
    let next = QuadraticModel { a: a_next, b: b_next, c: c_next };
    if !next.b.coeff(0).is_one() || !next.c.coeff(0).is_zero() {
        return Err(Error::InvalidModel("Algorithm Q produced a model without B(0) = 1, C(0) = 0".into()));
    }
    Ok(AlgStep { next, k, a, d })
}

/// Default step budget for the metallic family: twelve periods plus slack.
pub fn default_max_steps(n: usize) -> usize {
    12 * (6 * n).saturating_sub(4).max(3) + 24
}

/// Result of running Algorithm Q with cycle detection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleSearch<C: Coeff> {
    /// A repeated model (periodic fraction) or a zero tail (finite fraction).
    Found(PeriodicHFraction<C>),
    /// No repetition within the budget; the terms computed so far.
    Exhausted { prefix: Vec<HTerm<C>> },
}

impl<C: Coeff> CycleSearch<C> {
    pub fn found(self) -> Result<PeriodicHFraction<C>> {
        match self {
            CycleSearch::Found(h) => Ok(h),
            CycleSearch::Exhausted { prefix } => Err(Error::NoCycle(prefix.len())),
        }
    }
}

/// Iterates Algorithm Q until a model repeats. Models are compared exactly;
/// every model produced has `B(0) = 1`, so equal roots give equal triples
/// up to the common scalar already fixed by that normalization.
pub fn hfraction_of_quadratic<C: FieldCoeff>(m: &QuadraticModel<C>, max_steps: usize) -> Result<CycleSearch<C>> {
    m.validate()?;
    let mut seen: HashMap<QuadraticModel<C>, usize> = HashMap::new();
    let mut terms = Vec::new();
    let mut cur = m.clone();
    for j in 0..max_steps {
        if let Some(&p) = seen.get(&cur) {
            return Ok(CycleSearch::Found(PeriodicHFraction::from_stream(terms, Some(p))?));
        }
        seen.insert(cur.clone(), j);
        let step = alg_step(&cur)?;
        terms.push(step.term());
        if step.next.a.is_zero() {
            return Ok(CycleSearch::Found(PeriodicHFraction::from_stream(terms, None)?));
        }
        cur = step.next;
    }
    Ok(CycleSearch::Exhausted { prefix: terms })
}

/// One row of an Algorithm Q trace: the model fed to step `j` and its output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceRow<C: Coeff> {
    pub j: usize,
    pub model: QuadraticModel<C>,
    pub term: HTerm<C>,
}

/// The first `steps` steps of Algorithm Q (fewer if the fraction ends).
pub fn algorithm_trace<C: FieldCoeff>(m: &QuadraticModel<C>, steps: usize) -> Result<Vec<TraceRow<C>>> {
    let mut rows = Vec::with_capacity(steps);
    let mut cur = m.clone();
    for j in 0..steps {
        let step = alg_step(&cur)?;
        rows.push(TraceRow { j, model: cur, term: step.term() });
        if step.next.a.is_zero() {
            break;
        }
        cur = step.next;
    }
    Ok(rows)
}
