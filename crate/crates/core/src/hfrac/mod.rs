//! Algorithm Q, the closed-form metallic H-fractions and the Hankel
//! determinants they encode.

mod algorithm;
mod expected;
mod profile;
mod shift;

pub use algorithm::{
    alg_step, algorithm_trace, default_max_steps, hfraction_of_quadratic, AlgStep, CycleSearch, TraceRow,
};
pub use expected::expected_hfraction;
pub use profile::{
    hankel_from_hfraction, hankel_from_terms, hankel_values, support_profile, SupportProfile,
};
pub use shift::{dropped_terms, hfraction_of_shift, hfraction_of_shift_by_algorithm};

use crate::algebra::BigRational;
use crate::cfrac::PeriodicHFraction;
use crate::error::Result;
use crate::qseries::metallic_model;

/// Algorithm Q on the metallic model over the rationals.
pub fn metallic_hfraction(n: usize) -> Result<PeriodicHFraction<BigRational>> {
    let m = metallic_model(n)?.to_rational();
    hfraction_of_quadratic(&m, default_max_steps(n))?.found()
}
