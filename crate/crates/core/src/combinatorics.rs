//! Stirling numbers of both kinds, binomial coefficients and factorials, and the
//! Stirling-matrix identities used by the moment integrals.
//!
//! Both Stirling triangles are built row by row from their recurrences and
//! memoized process-wide. The signed first kind is a view over the unsigned
//! triangle: `s(n, k) = (-1)^(n+k) [n k]`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{precondition, Result};
use crate::memo::Memo;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StirlingKind {
    /// Unsigned cycle numbers `[n k]`.
    FirstUnsigned,
    /// Subset numbers `{n k}`.
    Second,
}

/// Rows `0..=n_max` of a Stirling triangle; row `n` holds `k = 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingTriangle {
    kind: StirlingKind,
    rows: Vec<Arc<Vec<BigInt>>>,
}

impl StirlingTriangle {
    pub fn up_to(kind: StirlingKind, n_max: usize) -> Self {
        let rows = (0..=n_max).map(|n| stirling_row(kind, n)).collect();
        StirlingTriangle { kind, rows }
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }

    /// Value at `(n, k)`; zero when `k > n`. Panics if `n > n_max`.
    pub fn get(&self, n: usize, k: usize) -> BigInt {
        self.rows[n].get(k).cloned().unwrap_or_default()
    }
}

static SECOND: Memo<Vec<BigInt>> = Memo::new();
static FIRST: Memo<Vec<BigInt>> = Memo::new();

fn next_row(kind: StirlingKind, n: usize, prev: &[BigInt]) -> Vec<BigInt> {
    // row n from row n-1; `weight` multiplies the "same k" term
    (0..=n)
        .map(|k| {
            let stay = prev.get(k).map_or_else(BigInt::zero, |v| {
                let weight = match kind {
                    StirlingKind::Second => k,
                    StirlingKind::FirstUnsigned => n - 1,
                };
                v * BigInt::from(weight)
            });
            let step = if k > 0 {
                prev[k - 1].clone()
            } else {
                BigInt::zero()
            };
            stay + step
        })
        .collect()
}

/// Shared row `n` of the requested triangle.
pub fn stirling_row(kind: StirlingKind, n: usize) -> Arc<Vec<BigInt>> {
    let memo = match kind {
        StirlingKind::Second => &SECOND,
        StirlingKind::FirstUnsigned => &FIRST,
    };
    memo.get(n, |i, prefix| {
        if i == 0 {
            vec![BigInt::one()]
        } else {
            next_row(kind, i, &prefix[i - 1])
        }
    })
}

/// Stirling number of the second kind `{n k}`; zero for `k > n`.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    stirling_row(StirlingKind::Second, n)
        .get(k)
        .cloned()
        .unwrap_or_default()
}

/// Unsigned Stirling number of the first kind `[n k]`; zero for `k > n`.
pub fn stirling1_unsigned(n: usize, k: usize) -> BigInt {
    stirling_row(StirlingKind::FirstUnsigned, n)
        .get(k)
        .cloned()
        .unwrap_or_default()
}

pub fn stirling1_signed(n: usize, k: usize) -> BigInt {
    let v = stirling1_unsigned(n, k);
    if (n + k).is_multiple_of(2) {
        v
    } else {
        -v
    }
}

/// `C(n, k)`, zero for `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| {
        acc * BigInt::from(n - i) / BigInt::from(i + 1)
    })
}

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `sum_{k=j}^{m} {m k} [k+1 j+1] (-1)^k`, which equals `(-1)^m C(m, j)`.
pub fn lemma2_lhs(m: usize, j: usize) -> Result<BigInt> {
    if j > m {
        return Err(precondition(
            "lemma2_lhs",
            format!("requires j <= m, got j = {j}, m = {m}"),
        ));
    }
    Ok((j..=m)
        .map(|k| {
            let term = stirling2(m, k) * stirling1_unsigned(k + 1, j + 1);
            if k % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum())
}

/// `(sum_k C(i, k) {k j}, {i+1 j+1})`; the two entries agree.
pub fn stirling_cross_identity(i: usize, j: usize) -> (BigInt, BigInt) {
    let lhs = (0..=i).map(|k| binomial(i, k) * stirling2(k, j)).sum();
    (lhs, stirling2(i + 1, j + 1))
}

/// `sum_k {i k} C(k, j)`, the sum with the factors the other way round. It is
/// not `{i+1 j+1}` in general; `(2, 0)` gives 2 against 1.
pub fn stirling_cross_swapped(i: usize, j: usize) -> BigInt {
    (0..=i).map(|k| stirling2(i, k) * binomial(k, j)).sum()
}

/// Entry `(n, m)` of the product of the signed first-kind and second-kind
/// Stirling matrices; it is the Kronecker delta.
pub fn stirling_inverse_entry(n: usize, m: usize) -> BigInt {
    (0..=n)
        .map(|k| stirling1_signed(n, k) * stirling2(k, m))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Number of set partitions of `n` labelled elements into exactly `k` blocks,
    /// by enumerating restricted growth strings.
    fn partitions_into(n: usize, k: usize) -> u64 {
        fn go(i: usize, n: usize, blocks: usize, k: usize) -> u64 {
            if i == n {
                return u64::from(blocks == k);
            }
            let mut total = 0;
            for b in 0..=blocks {
                let nb = if b == blocks { blocks + 1 } else { blocks };
                if nb <= k {
                    total += go(i + 1, n, nb, k);
                }
            }
            total
        }
        go(0, n, 0, k)
    }

    /// Number of permutations of `n` elements with exactly `k` cycles.
    fn permutations_with_cycles(n: usize, k: usize) -> u64 {
        fn cycles(p: &[usize]) -> usize {
            let mut seen = vec![false; p.len()];
            let mut c = 0;
            for s in 0..p.len() {
                if !seen[s] {
                    c += 1;
                    let mut i = s;
                    while !seen[i] {
                        seen[i] = true;
                        i = p[i];
                    }
                }
            }
            c
        }
        fn permute(p: &mut Vec<usize>, at: usize, k: usize, count: &mut u64) {
            if at == p.len() {
                *count += u64::from(cycles(p) == k);
                return;
            }
            for i in at..p.len() {
                p.swap(at, i);
                permute(p, at + 1, k, count);
                p.swap(at, i);
            }
        }
        let mut count = 0;
        permute(&mut (0..n).collect(), 0, k, &mut count);
        count
    }

    #[test]
    fn stirling2_examples() {
        assert_eq!(stirling2(0, 0), BigInt::from(1));
        assert_eq!(stirling2(3, 2), BigInt::from(3));
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2(3, 5), BigInt::from(0));
        assert_eq!(stirling2(5, 0), BigInt::from(0));
    }

    #[test]
    fn stirling1_examples() {
        assert_eq!(stirling1_unsigned(0, 0), BigInt::from(1));
        assert_eq!(stirling1_unsigned(3, 2), BigInt::from(3));
        assert_eq!(stirling1_unsigned(4, 2), BigInt::from(11));
        assert_eq!(stirling1_signed(4, 2), BigInt::from(11));
        assert_eq!(stirling1_signed(4, 3), BigInt::from(-6));
    }

    #[test]
    fn triangles_match_enumeration() {
        for n in 0..=7 {
            for k in 0..=n {
                assert_eq!(
                    stirling2(n, k),
                    BigInt::from(partitions_into(n, k)),
                    "S2({n},{k})"
                );
                assert_eq!(
                    stirling1_unsigned(n, k),
                    BigInt::from(permutations_with_cycles(n, k)),
                    "S1({n},{k})"
                );
            }
        }
    }

    #[test]
    fn first_kind_row_sums_and_first_column() {
        for n in 1..=25 {
            let row = stirling_row(StirlingKind::FirstUnsigned, n);
            assert_eq!(row.iter().sum::<BigInt>(), factorial(n));
            assert_eq!(stirling1_unsigned(n, 1), factorial(n - 1));
        }
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 0), BigInt::from(1));
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(10, 5), BigInt::from(252));
        assert_eq!(binomial(3, 4), BigInt::from(0));
        // Pascal's rule
        for n in 1..30 {
            for k in 1..=n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn lemma2_examples() {
        assert_eq!(lemma2_lhs(0, 0).unwrap(), BigInt::from(1));
        assert_eq!(lemma2_lhs(2, 0).unwrap(), BigInt::from(1));
        assert_eq!(lemma2_lhs(2, 1).unwrap(), BigInt::from(2));
        assert!(lemma2_lhs(1, 2).is_err());
    }

    #[test]
    fn cross_identity_examples() {
        assert_eq!(stirling_cross_identity(0, 0), (1.into(), 1.into()));
        assert_eq!(stirling_cross_identity(2, 1), (3.into(), 3.into()));
        assert_eq!(stirling_cross_identity(3, 2), (6.into(), 6.into()));
        for i in 0..=25 {
            for j in 0..=i + 1 {
                let (l, r) = stirling_cross_identity(i, j);
                assert_eq!(l, r, "({i},{j})");
            }
        }
    }

    #[test]
    fn swapped_cross_sum_differs() {
        assert_eq!(stirling_cross_swapped(2, 1), BigInt::from(3));
        assert_eq!(stirling_cross_swapped(2, 0), BigInt::from(2));
        assert_eq!(stirling2(3, 1), BigInt::from(1));
    }

    #[test]
    fn matrices_are_inverse() {
        for n in 0..=20 {
            for m in 0..=20 {
                let expect = BigInt::from(u8::from(n == m));
                assert_eq!(stirling_inverse_entry(n, m), expect, "({n},{m})");
            }
        }
    }

    #[test]
    fn triangle_snapshot() {
        let t = StirlingTriangle::up_to(StirlingKind::Second, 5);
        assert_eq!(t.n_max(), 5);
        assert_eq!(t.row(4), &[0, 1, 7, 6, 1].map(BigInt::from)[..]);
        assert_eq!(t.get(2, 7), BigInt::zero());
        assert_eq!(t.kind(), StirlingKind::Second);
    }
}
