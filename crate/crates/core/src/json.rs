//! JSON encodings of the library's results. Keys come out sorted and big
//! integers are written as plain JSON numbers, so equal inputs give
//! byte-identical documents.

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::algebra::{Coeff, Polynomial, TruncatedSeries};
use crate::cfrac::{HTerm, PeriodicHFraction};
use crate::hfrac::{SupportProfile, TraceRow};
use crate::qseries::QuadraticModel;
use crate::verify::{
    CheckResult, ConjectureReport, GaleRobinsonResidual, HankelReport, ModpOutcome, ModpReport, PeriodicityVerdict,
};

pub fn bigint(v: &BigInt) -> Value {
    Value::Number(v.to_string().parse::<Number>().expect("decimal integer is a JSON number"))
}

/// Integers (and residues) as numbers, other rationals as `"p/q"` strings.
pub fn scalar<C: Coeff>(c: &C) -> Value {
    match c.to_bigint() {
        Some(v) => bigint(&v),
        None => Value::String(c.to_string()),
    }
}

/// Coefficient list in ascending powers of `q`.
pub fn polynomial<C: Coeff>(p: &Polynomial<C>) -> Value {
    Value::Array(p.coeffs().iter().map(scalar).collect())
}

pub fn series<C: Coeff>(f: &TruncatedSeries<C>) -> Value {
    json!({ "precision": f.precision(), "coeffs": f.coeffs().iter().map(scalar).collect::<Vec<_>>() })
}

pub fn term<C: Coeff>(t: &HTerm<C>) -> Value {
    json!({ "k": t.k, "a": scalar(&t.a), "v": scalar(&t.v()), "D": polynomial(&t.d) })
}

pub fn hfraction<C: Coeff>(h: &PeriodicHFraction<C>) -> Value {
    json!({
        "delta": h.delta(),
        "head": term(&h.head),
        "preamble": h.preamble.iter().map(term).collect::<Vec<_>>(),
        "cycle": h.cycle.iter().map(term).collect::<Vec<_>>(),
        "offset": h.offset(),
        "period": h.period(),
    })
}

pub fn model<C: Coeff>(m: &QuadraticModel<C>) -> Value {
    json!({ "A": polynomial(&m.a), "B": polynomial(&m.b), "C": polynomial(&m.c) })
}

pub fn trace<C: Coeff>(rows: &[TraceRow<C>]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| json!({ "j": r.j, "model": model(&r.model), "term": term(&r.term) }))
            .collect(),
    )
}

pub fn profile(p: &SupportProfile) -> Value {
    json!({ "k": p.k, "s": p.s, "eps": p.eps, "period_len": p.period_len, "complete": p.complete })
}

pub fn check(c: &CheckResult) -> Value {
    let mut m = Map::new();
    m.insert("name".into(), json!(c.name));
    m.insert("pass".into(), json!(c.pass));
    if let Some(ce) = &c.counterexample {
        m.insert("counterexample".into(), json!({ "j": ce.j, "expected": ce.expected, "got": ce.got }));
    }
    Value::Object(m)
}

pub fn checks(cs: &[CheckResult]) -> Value {
    Value::Array(cs.iter().map(check).collect())
}

pub fn hankel_report(r: &HankelReport) -> Value {
    json!({
        "n": r.n,
        "ell": r.ell,
        "horizon": r.horizon,
        "source": r.source.as_str(),
        "values": r.values.iter().map(bigint).collect::<Vec<_>>(),
        "checks": checks(&r.checks),
    })
}

pub fn residuals(rs: &[GaleRobinsonResidual]) -> Value {
    Value::Array(rs.iter().map(|r| json!({ "j": r.j, "value": bigint(&r.value) })).collect())
}

pub fn modp_report(r: &ModpReport) -> Value {
    let mut m = Map::new();
    m.insert("n".into(), json!(r.n));
    m.insert("ell".into(), json!(r.ell));
    m.insert("p".into(), json!(r.p));
    m.insert("max_steps".into(), json!(r.max_steps));
    match &r.outcome {
        ModpOutcome::Cycle { hfraction_preperiod, hfraction_period, hankel_preperiod, hankel_period, hfraction: h, consistency } => {
            m.insert("status".into(), json!("cycle"));
            m.insert("hfraction_preperiod".into(), json!(hfraction_preperiod));
            m.insert("hfraction_period".into(), json!(hfraction_period));
            m.insert("hankel_preperiod".into(), json!(hankel_preperiod));
            m.insert("hankel_period".into(), json!(hankel_period));
            m.insert("hfraction".into(), hfraction(h));
            m.insert("checks".into(), checks(std::slice::from_ref(consistency)));
        }
        ModpOutcome::Inconclusive { steps } => {
            m.insert("status".into(), json!("inconclusive"));
            m.insert("steps".into(), json!(steps));
        }
        ModpOutcome::VanishingSeries => {
            m.insert("status".into(), json!("vanishing_series"));
        }
    }
    Value::Object(m)
}

pub fn conjecture_report(r: &ConjectureReport) -> Value {
    let verdict = match r.periodicity_verdict {
        PeriodicityVerdict::Holds => json!({ "status": "holds" }),
        PeriodicityVerdict::Fails { j } => json!({ "status": "fails", "j": j }),
        PeriodicityVerdict::WindowTooShort => json!({ "status": "window_too_short" }),
    };
    json!({
        "label": r.label,
        "n": r.n,
        "ell": r.ell,
        "horizon": r.horizon,
        "values": r.values.iter().map(bigint).collect::<Vec<_>>(),
        "value_min": bigint(&r.value_min),
        "value_max": bigint(&r.value_max),
        "max_abs": bigint(&r.max_abs),
        "periodicity_verdict": verdict,
        "conjectured_bound": r.conjectured_bound,
        "within_bound": r.within_bound,
    })
}

/// Aggregated pass/fail report of a verification run.
pub fn verify_report(suite: &str, ns: &[usize], cs: &[CheckResult]) -> Value {
    json!({
        "suite": suite,
        "n": ns,
        "pass": cs.iter().all(|c| c.pass),
        "checks": checks(cs),
    })
}
