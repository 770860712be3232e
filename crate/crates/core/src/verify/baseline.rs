use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::hankel::bruteforce_sequence;
use super::CheckResult;
use crate::error::Result;
use crate::qseries::{catalan_series, motzkin_series};

/// `prod_{1 <= a <= b <= l-1} (2j + a + b) / (a + b)`.
pub fn catalan_product(l: usize, j: usize) -> BigInt {
    let mut acc = BigRational::one();
    for b in 1..l {
        for a in 1..=b {
            acc *= BigRational::new(BigInt::from(2 * j + a + b), BigInt::from(a + b));
        }
    }
    assert!(acc.is_integer(), "the product is an integer Hankel determinant");
    acc.to_integer()
}

/// `D_{j+2} D_j = D_{j+1}^2 - 1` over the slice.
pub fn motzkin_somos_check(values: &[BigInt]) -> CheckResult {
    let name = "motzkin_somos";
    for j in 0..values.len().saturating_sub(2) {
        let lhs = &values[j + 2] * &values[j];
        let rhs = &values[j + 1] * &values[j + 1] - 1;
        if lhs != rhs {
            return CheckResult::failed(name, j, rhs, lhs);
        }
    }
    CheckResult::passed(name)
}

const MOTZKIN_SHIFT2: [i64; 12] = [1, 2, 2, 3, 4, 4, 5, 6, 6, 7, 8, 8];
const MOTZKIN_SHIFT3: [i64; 13] = [1, 4, 3, -6, -16, -10, 15, 36, 21, -28, -64, -36, 45];

/// Brute-force Hankel values of the Catalan and Motzkin series against
/// their classical closed forms and prefixes.
pub fn baseline_catalan_motzkin() -> Result<Vec<CheckResult>> {
    const HORIZON: usize = 24;
    let cat = catalan_series(3 + 2 * HORIZON)?;
    let motz = motzkin_series(3 + 2 * HORIZON)?;
    let expect = |name: &str, got: &[BigInt], want: &dyn Fn(usize) -> BigInt| {
        let want: Vec<BigInt> = (0..got.len()).map(want).collect();
        CheckResult::compare(name, want.iter().zip(got).enumerate().map(|(j, (w, g))| (j, w, g)))
    };
    let mut out = Vec::new();
    for l in 0..=3 {
        let got = bruteforce_sequence(&cat, l, HORIZON)?;
        let name = format!("catalan_shift{l}");
        out.push(if l < 2 { expect(&name, &got, &|_| BigInt::one()) } else { expect(&name, &got, &|j| catalan_product(l, j)) });
    }
    let m0 = bruteforce_sequence(&motz, 0, HORIZON)?;
    out.push(expect("motzkin_shift0", &m0, &|_| BigInt::one()));
    let m1 = bruteforce_sequence(&motz, 1, HORIZON)?;
    out.push(expect("motzkin_shift1", &m1, &|j| BigInt::from([1, 1, 0, -1, -1, 0][j % 6])));
    out.push(motzkin_somos_check(&m1));
    let m2 = bruteforce_sequence(&motz, 2, MOTZKIN_SHIFT2.len())?;
    out.push(expect("motzkin_shift2", &m2, &|j| BigInt::from(MOTZKIN_SHIFT2[j])));
    let m3 = bruteforce_sequence(&motz, 3, MOTZKIN_SHIFT3.len())?;
    out.push(expect("motzkin_shift3", &m3, &|j| BigInt::from(MOTZKIN_SHIFT3[j])));
    Ok(out)
}
