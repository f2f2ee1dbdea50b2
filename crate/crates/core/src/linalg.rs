//! Exact matrix rank by fraction-free (Bareiss) elimination.
//!
//! Elimination first runs in `i128` with checked arithmetic and restarts with
//! arbitrary-precision integers on overflow, so every rank is exact.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{CheckedMul, CheckedSub, One, Zero};

/// Rank over the rationals of an integer matrix given as rows.
pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    let narrow: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    if let Some(rank) = bareiss_rank(narrow) {
        return rank;
    }
    let wide: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    bareiss_rank(wide).expect("big integers do not overflow")
}

/// Rank over the rationals of a big-integer matrix.
pub fn rank_big(rows: Vec<Vec<BigInt>>) -> usize {
    bareiss_rank(rows).expect("big integers do not overflow")
}

/// Fraction-free elimination with row pivoting. Returns `None` on overflow.
///
/// After step `k` every active entry equals a `(k+1) x (k+1)` minor of the
/// input, so the division by the previous pivot is exact.
fn bareiss_rank<T>(mut m: Vec<Vec<T>>) -> Option<usize>
where
    T: Clone + Zero + One + CheckedMul + CheckedSub + PartialEq + core::ops::Div<Output = T>,
{
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col].clone();
        for r in rank + 1..rows {
            let factor = m[r][col].clone();
            for c in col + 1..cols {
                let a = pivot.checked_mul(&m[r][c])?;
                let b = factor.checked_mul(&m[rank][c])?;
                m[r][c] = a.checked_sub(&b)? / prev.clone();
            }
            m[r][col] = T::zero();
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}
