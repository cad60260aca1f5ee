//! Exact matrix rank for sparse signed boundary columns.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// One column of a boundary matrix: `(row, ±1)` entries.
pub(crate) type Column = Vec<(usize, i8)>;

pub(crate) fn rank_gf2(columns: &[Column], nrows: usize) -> usize {
    let words = nrows.div_ceil(64).max(1);
    let mut pivots: HashMap<usize, Vec<u64>> = HashMap::new();
    for col in columns {
        let mut v = vec![0u64; words];
        for &(r, _) in col {
            v[r / 64] ^= 1 << (r % 64);
        }
        while let Some(low) = highest_bit(&v) {
            match pivots.get(&low) {
                Some(p) => {
                    for (a, b) in v.iter_mut().zip(p) {
                        *a ^= b;
                    }
                }
                None => {
                    pivots.insert(low, v);
                    break;
                }
            }
        }
    }
    pivots.len()
}

fn highest_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .rev()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) is the inverse.
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

pub(crate) fn rank_gfp(columns: &[Column], nrows: usize, p: u32) -> usize {
    let p = p as u64;
    // pivot row -> column normalized to 1 at that row
    let mut pivots: HashMap<usize, Vec<u64>> = HashMap::new();
    for col in columns {
        let mut v = vec![0u64; nrows];
        for &(r, s) in col {
            v[r] = if s > 0 { 1 } else { p - 1 };
        }
        while let Some(low) = v.iter().rposition(|x| *x != 0) {
            match pivots.get(&low) {
                Some(piv) => {
                    let factor = v[low];
                    for (a, b) in v.iter_mut().zip(piv) {
                        *a = (*a + p - factor * b % p) % p;
                    }
                }
                None => {
                    let inv = inv_mod(v[low], p);
                    for a in v.iter_mut() {
                        *a = *a * inv % p;
                    }
                    pivots.insert(low, v);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Fraction-free (Bareiss) elimination over the integers; the rank equals
/// the rank over ℚ.
pub(crate) fn rank_rational(columns: &[Column], nrows: usize) -> usize {
    let ncols = columns.len();
    if ncols == 0 || nrows == 0 {
        return 0;
    }
    // rows of the transpose are columns of the boundary matrix; rank is
    // unchanged and the transpose is usually the wider layout.
    let mut m: Vec<Vec<BigInt>> = columns
        .iter()
        .map(|col| {
            let mut row = vec![BigInt::zero(); nrows];
            for &(r, s) in col {
                row[r] = BigInt::from(s);
            }
            row
        })
        .collect();
    bareiss_rank(&mut m)
}

pub(crate) fn bareiss_rank(m: &mut [Vec<BigInt>]) -> usize {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for i in rank + 1..nrows {
            for j in c + 1..ncols {
                let v = (&m[rank][c] * &m[i][j] - &m[i][c] * &m[rank][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Rank by Gaussian elimination over reduced i128 fractions.
    fn rank_fraction_oracle(rows: &[Vec<i64>]) -> usize {
        fn gcd(a: i128, b: i128) -> i128 {
            if b == 0 {
                a.abs()
            } else {
                gcd(b, a % b)
            }
        }
        #[derive(Clone, Copy)]
        struct Q(i128, i128);
        fn norm(q: Q) -> Q {
            if q.0 == 0 {
                return Q(0, 1);
            }
            let g = gcd(q.0, q.1);
            let s = if q.1 < 0 { -1 } else { 1 };
            Q(s * q.0 / g, s * q.1 / g)
        }
        let mut m: Vec<Vec<Q>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Q(x as i128, 1)).collect())
            .collect();
        let nrows = m.len();
        let ncols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..ncols {
            let Some(p) = (rank..nrows).find(|&r| m[r][c].0 != 0) else {
                continue;
            };
            m.swap(rank, p);
            for i in 0..nrows {
                if i == rank || m[i][c].0 == 0 {
                    continue;
                }
                let f = norm(Q(m[i][c].0 * m[rank][c].1, m[i][c].1 * m[rank][c].0));
                let pivot = m[rank].clone();
                for (a, t) in m[i].iter_mut().zip(&pivot) {
                    let sub = norm(Q(f.0 * t.0, f.1 * t.1));
                    *a = norm(Q(a.0 * sub.1 - sub.0 * a.1, a.1 * sub.1));
                }
            }
            rank += 1;
        }
        rank
    }

    fn to_columns(rows: &[Vec<i64>]) -> (Vec<Column>, usize) {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let cols = (0..ncols)
            .map(|c| {
                (0..nrows)
                    .filter(|&r| rows[r][c] != 0)
                    .map(|r| (r, rows[r][c] as i8))
                    .collect()
            })
            .collect();
        (cols, nrows)
    }

    #[test]
    fn small_ranks() {
        // boundary of a triangle: 3 edges onto 3 vertices, rank 2
        let rows = vec![vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]];
        let (cols, n) = to_columns(&rows);
        assert_eq!(rank_gf2(&cols, n), 2);
        assert_eq!(rank_gfp(&cols, n, 3), 2);
        assert_eq!(rank_rational(&cols, n), 2);
    }

    #[test]
    fn characteristic_two_differs() {
        // [[1,1],[1,-1]] has rank 2 over Q and GF(3) but 1 over GF(2)
        let rows = vec![vec![1, 1], vec![1, -1]];
        let (cols, n) = to_columns(&rows);
        assert_eq!(rank_gf2(&cols, n), 1);
        assert_eq!(rank_gfp(&cols, n, 3), 2);
        assert_eq!(rank_rational(&cols, n), 2);
    }

    proptest! {
        #[test]
        fn bareiss_matches_fraction_oracle(rows in proptest::collection::vec(proptest::collection::vec(-1i64..=1, 6), 0..7)) {
            let (cols, n) = to_columns(&rows);
            prop_assert_eq!(rank_rational(&cols, n), rank_fraction_oracle(&rows));
        }

        #[test]
        fn large_prime_agrees_with_rationals(rows in proptest::collection::vec(proptest::collection::vec(-1i64..=1, 5), 0..6)) {
            // 5x5 ±1 minors are bounded by Hadamard (≈ 56), far below 1_000_003
            let (cols, n) = to_columns(&rows);
            prop_assert_eq!(rank_gfp(&cols, n, 1_000_003), rank_rational(&cols, n));
        }
    }
}
