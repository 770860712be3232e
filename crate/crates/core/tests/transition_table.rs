mod common;

use common::{first_family, second_family, table_row};
use hm_core::algebra::{BigInt, BigRational};
use hm_core::hfrac::algorithm_trace;
use hm_core::qseries::metallic_model;

fn check_table(n: usize) {
    let m = metallic_model(n).unwrap().to_rational();
    let trace = algorithm_trace(&m, 6 * n - 2).unwrap();
    assert_eq!(trace.len(), 6 * n - 2);
    for (j, got) in trace.iter().enumerate() {
        let want = table_row(n, j);
        assert_eq!(got.model, want.model, "n = {n}, model fed to step {j}");
        assert_eq!(got.term.k, want.k, "n = {n}, k_{j}");
        assert_eq!(got.term.a, BigRational::from_integer(BigInt::from(want.a)), "n = {n}, a_{j}");
        assert_eq!(got.term.d, want.d, "n = {n}, D_{j}");
    }
}

#[test]
fn trace_matches_table_for_n5() {
    check_table(5);
}

#[test]
fn trace_matches_table_for_small_and_large_n() {
    for n in [3, 4, 6, 7, 8] {
        check_table(n);
    }
}

#[test]
fn families_join_and_reenter() {
    for n in 3..=10 {
        // the first family's generic row at m = 3n - 2 is the second family's start
        assert_eq!(first_family(n, 3 * n - 2).model, second_family(n, 1).model, "n = {n}");
        assert_eq!(second_family(n, 3 * n + 1), first_family(n, 2), "n = {n}");
    }
}

#[test]
fn cycle_closes_after_6n_minus_4_steps() {
    let n = 5;
    let m = metallic_model(n).unwrap().to_rational();
    let trace = algorithm_trace(&m, 2 * (6 * n - 4) + 1).unwrap();
    for j in 1..=6 * n - 4 {
        assert_eq!(trace[j].model, trace[j + 6 * n - 4].model, "j = {j}");
    }
    assert_ne!(trace[0].model, trace[6 * n - 4].model);
}
