//! Golden data and helpers shared by the integration tests.
#![allow(dead_code)]

use hm_core::algebra::{BigInt, BigRational, CoeffDomain, Polynomial};
use hm_core::qseries::{angle_bracket, q_int, QuadraticModel};

pub type QP = Polynomial<BigRational>;

const QQ: CoeffDomain = CoeffDomain::Rationals;

/// Published Taylor expansions as `(n, [(exponent, coefficient)], terms)`.
/// Omitted exponents below `terms` are zero.
pub const TAYLOR: [(usize, &[(usize, i64)], usize); 4] = [
    (
        1,
        &[
            (0, 1),
            (2, 1),
            (3, -1),
            (4, 2),
            (5, -4),
            (6, 8),
            (7, -17),
            (8, 37),
            (9, -82),
            (10, 185),
            (11, -423),
            (12, 978),
            (13, -2283),
            (14, 5373),
            (15, -12735),
        ],
        16,
    ),
    (
        2,
        &[
            (0, 1),
            (1, 1),
            (4, 1),
            (6, -2),
            (7, 1),
            (8, 4),
            (9, -5),
            (10, -7),
            (11, 18),
            (12, 7),
            (13, -55),
            (14, 18),
            (15, 146),
            (16, -155),
            (17, -322),
            (18, 692),
            (19, 476),
            (20, -2446),
            (21, 307),
            (22, 7322),
        ],
        23,
    ),
    (
        5,
        &[
            (0, 1),
            (1, 1),
            (2, 1),
            (3, 1),
            (4, 1),
            (10, 1),
            (12, -1),
            (13, -1),
            (16, 3),
            (17, 3),
            (18, -2),
            (19, -7),
            (20, -4),
            (21, -1),
            (22, 10),
            (23, 21),
            (24, 9),
            (25, -30),
            (26, -44),
            (27, -28),
            (28, 27),
            (29, 115),
        ],
        30,
    ),
    (
        10,
        &[
            (0, 1),
            (1, 1),
            (2, 1),
            (3, 1),
            (4, 1),
            (5, 1),
            (6, 1),
            (7, 1),
            (8, 1),
            (9, 1),
            (20, 1),
            (22, -1),
            (23, -1),
            (25, 1),
            (26, 1),
            (28, -1),
            (29, -1),
            (30, -1),
            (31, 3),
            (32, 4),
            (33, -1),
            (34, -7),
            (35, -6),
            (36, 3),
            (37, 11),
            (38, 8),
        ],
        39,
    ),
];

pub fn dense(sparse: &[(usize, i64)], len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); len];
    for &(e, c) in sparse {
        out[e] = BigInt::from(c);
    }
    out
}

/// First (anti)period of the unshifted Hankel determinants, with the sign
/// relating consecutive periods.
pub const HANKEL_PERIODS: [(usize, &[i64], i64); 5] = [
    (1, &[1, 1, 1, 0], -1),
    (2, &[1, 1, -1, -1, 1, 0, -1, 0, 0, 1, 0, -1], 1),
    (3, &[1, 1, 0, -1, -1, 1, 1, 0, -1, -1, 0, 0, 1, 0, 0, 0, 1, 0, 0, -1, -1, 0, 1, 1], -1),
    (
        4,
        &[
            1, 1, 0, 0, 1, 1, -1, 0, 1, 0, -1, -1, 1, 0, 0, -1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, -1, 0, 0, 1,
            -1, -1, 0, 1, 0, -1,
        ],
        1,
    ),
    (
        5,
        &[
            1, 1, 0, 0, 0, 1, 1, -1, 0, 0, 1, 0, -1, -1, 0, 1, 0, 0, -1, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0,
            0, -1, 0, 0, 0, 0, -1, -1, 0, 0, 0, -1, -1, 1, 0, 0, -1, 0, 1, 1, 0, -1, 0, 0, 1,
        ],
        -1,
    ),
];

/// Shifted Hankel rows of the q-golden number, `(shift, first values)`.
pub const GOLDEN_SHIFTED: [(usize, &[i64]); 4] = [
    (1, &[1, 0, -1, 1, -1, 0, 1, -1]),
    (2, &[1, 1, 1, 0, -1, -1, -1, 0]),
    (3, &[1, -1, 0, 0, -1, 1, 0, 0]),
    (4, &[1, 2, 0, -2, -3, -4, 0, 4, 5, 6, 0, -6, -7, -8, 0, 8]),
];

/// Support of the unshifted Hankel determinants of the n = 5 case on
/// `0..=60`, split by the residue of the profile index mod 3.
pub const N5_SUPPORT: [[usize; 9]; 3] = [
    [0, 6, 12, 18, 24, 36, 46, 51, 56],
    [1, 7, 13, 19, 25, 41, 47, 53, 59],
    [5, 10, 15, 20, 30, 42, 48, 54, 60],
];

/// Second and third shifted Hankel rows of the Motzkin series.
pub const MOTZKIN_SHIFT2: [i64; 12] = [1, 2, 2, 3, 4, 4, 5, 6, 6, 7, 8, 8];
pub const MOTZKIN_SHIFT3: [i64; 13] = [1, 4, 3, -6, -16, -10, 15, 36, 21, -28, -64, -36, 45];

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn p(c: &[i64]) -> QP {
    Polynomial::from_i64s(QQ, c)
}

pub fn qpow(k: usize) -> QP {
    Polynomial::q_pow(QQ, k)
}

pub fn qi(n: usize) -> QP {
    q_int(QQ, n)
}

pub fn ab(n: usize) -> QP {
    angle_bracket(QQ, n).unwrap()
}

pub fn signed_qpow(sign: i64, k: usize) -> QP {
    qpow(k).scale(&BigRational::from_integer(BigInt::from(sign)))
}

/// Published H-fraction as numerators and denominators `(alpha_i, beta_i)`
/// for `i = 0 ..= period`, with offset 1.
pub fn published_fraction(n: usize) -> Option<Vec<(QP, QP)>> {
    let one = p(&[1]);
    let omq = p(&[1, -1]);
    let q2 = |s: i64, k: usize| signed_qpow(s, k);
    let rows = match n {
        1 => vec![
            (one.clone(), one.clone()),
            (q2(-1, 2), p(&[1, 1])),
            (q2(1, 3), p(&[1, 1, -1])),
            (q2(1, 3), p(&[1, 1])),
        ],
        2 => vec![
            (one.clone(), omq.clone()),
            (q2(1, 2), p(&[1, 1])),
            (q2(1, 2), one.clone()),
            (q2(1, 2), one.clone()),
            (q2(-1, 3), p(&[1, 0, 2])),
            (q2(1, 5), p(&[1, 0, 2, -1])),
            (q2(1, 5), p(&[1, 0, 2])),
            (q2(-1, 3), one.clone()),
            (q2(1, 2), one.clone()),
        ],
        5 => {
            let q = qpow(1);
            let a5 = ab(5);
            let a5q6 = &a5 + &qpow(6);
            vec![
                (one.clone(), omq.clone()),
                // U
                (q2(1, 5), qi(5)),
                (q2(1, 5), one.clone()),
                (q2(1, 2), omq.clone()),
                (q2(1, 4), qi(4)),
                (q2(1, 5), p(&[1, 0, 1])),
                (q2(1, 3), omq.clone()),
                (q2(1, 3), qi(3)),
                (q2(1, 5), &qi(4) - &q),
                (q2(1, 4), omq.clone()),
                (q2(1, 2), qi(2)),
                (q2(1, 5), &qi(5) - &q),
                (q2(1, 5), one.clone()),
                // V
                (q2(-1, 6), a5q6.clone()),
                (q2(1, 11), a5.clone()),
                (q2(1, 11), a5q6),
                (q2(-1, 6), one.clone()),
                // W
                (q2(1, 5), &qi(5) - &q),
                (q2(1, 5), qi(2)),
                (q2(1, 2), omq.clone()),
                (q2(1, 4), &qi(4) - &q),
                (q2(1, 5), qi(3)),
                (q2(1, 3), omq.clone()),
                (q2(1, 3), p(&[1, 0, 1])),
                (q2(1, 5), qi(4)),
                (q2(1, 4), omq),
                (q2(1, 2), one),
            ]
        }
        _ => return None,
    };
    Some(rows)
}

/// One row of the Algorithm Q transition table: the model fed to the step
/// and the term `(k, a, D)` it emits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub model: QuadraticModel<BigRational>,
    pub k: usize,
    pub a: i64,
    pub d: QP,
}

fn row(a: QP, b: QP, c: QP, k: usize, sign: i64, d: QP) -> TableRow {
    TableRow { model: QuadraticModel { a, b, c }, k, a: sign, d }
}

fn div(num: &QP, den: &QP) -> QP {
    num.exact_div(den).expect("exact division")
}

/// `r = q^2 - q + 1`, `u = q - 1`.
fn ru() -> (QP, QP) {
    (p(&[1, -1, 1]), p(&[-1, 1]))
}

/// First family of transition rows, `1 <= m <= 3n - 2`, for `n >= 3`.
pub fn first_family(n: usize, m: usize) -> TableRow {
    let (r, u) = ru();
    let u2 = &u * &u;
    let one = p(&[1]);
    let qn1 = &qpow(n) + &one;
    match (m - 1) % 3 {
        0 if m == 1 => row(
            p(&[-1]),
            -div(&(&(&r * &qn1) - &signed_qpow(2, 1)), &u),
            qpow(1),
            0,
            -1,
            p(&[1, -1]),
        ),
        0 => {
            let j = (m - 1) / 3;
            let inner = &(&qpow(n - j) - &qpow(n)) - &one;
            row(
                -div(&(&(&r * &inner) + &qpow(j + 1)), &u2),
                -div(&(&(&r * &qn1) - &signed_qpow(2, j + 1)), &u),
                signed_qpow(-1, j + 1),
                0,
                1,
                p(&[1, -1]),
            )
        }
        1 => {
            let j = (m - 2) / 3;
            let inner = &(&qpow(n - j) - &qpow(n)) - &one;
            let two = &(&signed_qpow(2, n - j) - &qpow(n)) - &one;
            row(
                &r * &qpow(n - j - 2),
                div(&(&r * &two), &u),
                div(&(&(&p(&[0, 0, 1, -1, 1]) * &inner) + &qpow(j + 3)), &u2),
                n - 2 - j,
                1,
                qi(n - j),
            )
        }
        _ => {
            let j = (m - 3) / 3;
            row(qpow(j), &r * &qi(n), -(&r * &qpow(n - j)), j, 1, &qi(j + 2) - &qpow(1))
        }
    }
}

/// Second family of transition rows, `1 <= m <= 3n + 1`, for `n >= 3`.
pub fn second_family(n: usize, m: usize) -> TableRow {
    let (r, u) = ru();
    let u2 = &u * &u;
    let one = p(&[1]);
    let an = ab(n);
    let q2n1 = &qpow(2) * &qi(n - 1);
    match m {
        1 => row(&one + &q2n1, &an - &signed_qpow(2, n), signed_qpow(-1, n), 0, 1, one),
        2 => row(
            signed_qpow(-1, n - 1),
            &an + &signed_qpow(2, n + 1),
            -(&qpow(2) + &(&qpow(4) * &qi(n - 1))),
            n - 1,
            -1,
            &an + &qpow(n + 1),
        ),
        3 => row(qpow(n), an.clone(), signed_qpow(-1, n + 1), n, 1, an),
        4 => row(qpow(n - 1), an.clone(), signed_qpow(-1, n + 2), n - 1, 1, &an + &qpow(n + 1)),
        5 => row(-(&one + &q2n1), &an + &signed_qpow(2, n + 1), signed_qpow(-1, n + 1), 0, -1, one),
        _ => match m % 3 {
            1 => {
                let j = (m - 1) / 3;
                row(&r * &qpow(j - 2), &r * &qi(n), signed_qpow(-1, n - j + 2), j - 2, 1, qi(j))
            }
            2 => {
                let j = (m - 2) / 3;
                let inner = &(&qpow(j) - &qpow(n)) - &one;
                let two = &(&signed_qpow(2, j) - &qpow(n)) - &one;
                row(
                    -div(&(&(&r * &inner) + &qpow(n - j + 1)), &u2),
                    div(&(&r * &two), &u),
                    -(&r * &qpow(j)),
                    0,
                    1,
                    p(&[1, -1]),
                )
            }
            _ => {
                let j = (m - 3) / 3;
                let inner = &(&qpow(j) - &qpow(n)) - &one;
                let qn1 = &qpow(n) + &one;
                row(
                    qpow(n - j - 1),
                    -div(&(&(&r * &qn1) - &signed_qpow(2, n - j + 1)), &u),
                    div(&(&(&(&r * &inner) + &qpow(n - j + 1)) * &qpow(2)), &u2),
                    n - 1 - j,
                    1,
                    &qi(n - j + 1) - &qpow(1),
                )
            }
        },
    }
}

/// Expected row `j` of the transition table, `0 <= j <= 6n - 3`.
pub fn table_row(n: usize, j: usize) -> TableRow {
    if j + 4 <= 3 * n {
        first_family(n, j + 1)
    } else {
        second_family(n, j + 4 - 3 * n)
    }
}
