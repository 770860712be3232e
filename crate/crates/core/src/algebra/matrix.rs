//! Square matrices over exact scalars and fraction-free determinants.

use super::scalar::{Coeff, CoeffDomain};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix<C: Coeff> {
    domain: CoeffDomain,
    dim: usize,
    entries: Vec<C>,
}

impl<C: Coeff> ExactMatrix<C> {
    pub fn new(domain: CoeffDomain, rows: Vec<Vec<C>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidArgument("matrix is not square".into()));
        }
        Ok(ExactMatrix { domain, dim, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(domain: CoeffDomain, dim: usize, mut f: impl FnMut(usize, usize) -> C) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        ExactMatrix { domain, dim, entries }
    }

    pub fn from_i64s(domain: CoeffDomain, rows: &[&[i64]]) -> Result<Self> {
        Self::new(domain, rows.iter().map(|r| r.iter().map(|&v| C::from_i64(domain, v)).collect()).collect())
    }

    /// The `dim x dim` Hankel matrix `(f_{a+b+shift})`.
    pub fn hankel(seq: &[C], shift: usize, dim: usize) -> Result<Self> {
        let needed = if dim == 0 { 0 } else { shift + 2 * dim - 1 };
        if seq.len() < needed {
            return Err(Error::Precision { needed, available: seq.len() });
        }
        let domain = seq.first().map_or(CoeffDomain::Integers, Coeff::domain);
        Ok(Self::from_fn(domain, dim, |a, b| seq[a + b + shift].clone()))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn domain(&self) -> CoeffDomain {
        self.domain
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.entries[i * self.dim + j]
    }

    fn rows(&self) -> Vec<Vec<C>> {
        self.entries.chunks(self.dim.max(1)).take(self.dim).map(<[C]>::to_vec).collect()
    }

    /// Bareiss elimination with row pivoting. Every intermediate entry is a
    /// minor of the input, so integer inputs stay integral.
    pub fn det_fraction_free(&self) -> C {
        bareiss(self.rows(), self.domain)
    }

    /// Leading principal minors `[1, M_1, ..., M_dim]` in one elimination pass.
    ///
    /// After `k` pivots with nonzero leading minor `d = M_k`, the working
    /// matrix holds the bordered minors `det M[0..k + {k+i}, 0..k + {k+j}]`.
    /// By Sylvester's identity the next leading minors are
    /// `M_{k+m} = det(P_m) / d^{m-1}` where `P_m` is the leading `m x m`
    /// block of the working matrix, and when `P_m` is the first nonsingular
    /// one the whole state advances by `m` at once.
    pub fn leading_minors(&self) -> Vec<C> {
        let domain = self.domain;
        let one = C::one(domain);
        let mut minors = vec![one.clone()];
        let mut work = self.rows();
        let mut d = one;
        loop {
            let size = work.len();
            if size == 0 {
                break;
            }
            let mut step = None;
            for m in 1..=size {
                let block: Vec<Vec<C>> = work[..m].iter().map(|r| r[..m].to_vec()).collect();
                let det_p = bareiss(block, domain);
                if det_p.is_zero() {
                    minors.push(C::zero(domain));
                } else {
                    step = Some((m, det_p));
                    break;
                }
            }
            let Some((m, det_p)) = step else { break };
            let next = det_p.checked_div(&d.pow(m as u64 - 1)).expect("Sylvester quotient is exact");
            minors.push(next.clone());
            if m == size {
                break;
            }
            let p_block: Vec<Vec<C>> = work[..m].iter().map(|r| r[..m].to_vec()).collect();
            let adj = adjugate(&p_block, domain);
            let d_pow = d.pow(m as u64);
            let rest = size - m;
            // adj(P) * column block, one m-vector per remaining column
            let adj_cols: Vec<Vec<C>> = (0..rest)
                .map(|j| {
                    (0..m)
                        .map(|a| {
                            (0..m).fold(C::zero(domain), |acc, b| acc.add(&adj[a][b].mul(&work[b][m + j])))
                        })
                        .collect()
                })
                .collect();
            let mut fresh = Vec::with_capacity(rest);
            for i in 0..rest {
                let row = &work[m + i];
                let mut out = Vec::with_capacity(rest);
                for (j, w) in adj_cols.iter().enumerate() {
                    let border = (0..m).fold(C::zero(domain), |acc, a| acc.add(&row[a].mul(&w[a])));
                    let num = det_p.mul(&row[m + j]).sub(&border);
                    out.push(num.checked_div(&d_pow).expect("Sylvester quotient is exact"));
                }
                fresh.push(out);
            }
            work = fresh;
            d = next;
        }
        let want = self.dim + 1;
        minors.resize(want, C::zero(domain));
        minors
    }
}

fn bareiss<C: Coeff>(mut a: Vec<Vec<C>>, domain: CoeffDomain) -> C {
    let n = a.len();
    let mut negate = false;
    let mut prev = C::one(domain);
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return C::zero(domain),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.checked_div(&prev).expect("Bareiss quotient is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let det = if n == 0 { C::one(domain) } else { a[n - 1][n - 1].clone() };
    if negate {
        det.neg()
    } else {
        det
    }
}

fn adjugate<C: Coeff>(p: &[Vec<C>], domain: CoeffDomain) -> Vec<Vec<C>> {
    let m = p.len();
    if m == 1 {
        return vec![vec![C::one(domain)]];
    }
    let mut adj = vec![vec![C::zero(domain); m]; m];
    for (i, adj_row) in adj.iter_mut().enumerate() {
        for (j, slot) in adj_row.iter_mut().enumerate() {
            // cofactor of entry (j, i)
            let minor: Vec<Vec<C>> = p
                .iter()
                .enumerate()
                .filter(|(r, _)| *r != j)
                .map(|(_, row)| row.iter().enumerate().filter(|(c, _)| *c != i).map(|(_, v)| v.clone()).collect())
                .collect();
            let c = bareiss(minor, domain);
            *slot = if (i + j) % 2 == 0 { c } else { c.neg() };
        }
    }
    adj
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    const ZZ: CoeffDomain = CoeffDomain::Integers;

    /// Independent oracle: Laplace expansion along the first row.
    fn cofactor(m: &[Vec<i64>]) -> BigInt {
        let n = m.len();
        if n == 0 {
            return BigInt::from(1);
        }
        let mut acc = BigInt::from(0);
        for c in 0..n {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, v)| *v).collect())
                .collect();
            let term = BigInt::from(m[0][c]) * cofactor(&minor);
            if c % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    fn mat(rows: &[Vec<i64>]) -> ExactMatrix<BigInt> {
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        ExactMatrix::from_i64s(ZZ, &refs).unwrap()
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(mat(&[vec![1, 1], vec![1, 2]]).det_fraction_free(), BigInt::from(1));
        assert_eq!(mat(&[]).det_fraction_free(), BigInt::from(1));
        assert_eq!(mat(&[vec![1, 1, 2], vec![1, 2, 4], vec![2, 4, 9]]).det_fraction_free(), BigInt::from(1));
        assert_eq!(mat(&[vec![0, 1], vec![1, 0]]).det_fraction_free(), BigInt::from(-1));
    }

    #[test]
    fn non_square_rejected() {
        assert!(ExactMatrix::<BigInt>::from_i64s(ZZ, &[&[1, 2], &[3]]).is_err());
    }

    #[test]
    fn exhaustive_small_dimensions() {
        for a in -9..=9 {
            assert_eq!(mat(&[vec![a]]).det_fraction_free(), BigInt::from(a));
        }
        for a in -9..=9 {
            for b in -9..=9 {
                for c in -9..=9 {
                    for d in -9..=9 {
                        let m = vec![vec![a, b], vec![c, d]];
                        assert_eq!(mat(&m).det_fraction_free(), cofactor(&m));
                    }
                }
            }
        }
    }

    fn square(dim: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        prop::collection::vec(prop::collection::vec(-9i64..=9, dim), dim)
    }

    proptest! {
        #[test]
        fn bareiss_matches_cofactor(m in (3usize..=4).prop_flat_map(square)) {
            prop_assert_eq!(mat(&m).det_fraction_free(), cofactor(&m));
        }

        #[test]
        fn leading_minors_match_direct(
            m in (1usize..=7).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-2i64..=2, n), n))
        ) {
            let full = mat(&m);
            let minors = full.leading_minors();
            for k in 0..=m.len() {
                let block: Vec<Vec<i64>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
                prop_assert_eq!(&minors[k], &cofactor(&block), "k = {}", k);
            }
        }
    }

    #[test]
    fn leading_minors_with_singular_runs() {
        // leading minors 1, 0, 0, -1, ... exercise the multi-step advance
        let m = vec![
            vec![0, 0, 1, 2],
            vec![0, 0, 3, 1],
            vec![1, 3, 0, 1],
            vec![2, 1, 1, 5],
        ];
        let minors = mat(&m).leading_minors();
        let expected: Vec<BigInt> = (0..=4)
            .map(|k| cofactor(&m[..k].iter().map(|r| r[..k].to_vec()).collect::<Vec<_>>()))
            .collect();
        assert_eq!(minors, expected);
        let zeros = mat(&[vec![0, 0], vec![0, 0]]).leading_minors();
        assert_eq!(zeros, vec![BigInt::from(1), BigInt::from(0), BigInt::from(0)]);
    }
}
