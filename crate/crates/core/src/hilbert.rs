//! Multigraded Hilbert functions by exact evaluation-matrix rank, and their
//! first differences.
//!
//! Level `j` in any direction is realized as the point `[j:1]` of `P^1`. In
//! degree `t` the coordinate ring is spanned by products of binary forms of
//! degrees `t_i`; evaluated at the points of `X` they give the matrix with
//! entries `prod_i j_i^{a_i}` for `0 <= a_i <= t_i`, and `h_X(t)` is its rank.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::grid::{MultiDegree, PointSet};
use crate::linalg;

fn check_degree(x: &PointSet, t: &MultiDegree) -> Result<()> {
    if t.dim() != x.n() {
        return Err(Error::DimensionMismatch {
            expected: x.n(),
            found: t.dim(),
        });
    }
    if !t.is_nonnegative() {
        return Err(Error::BadDegree);
    }
    Ok(())
}

/// `h_X(t)` for `t >= 0`.
pub fn hilbert_value(x: &PointSet, t: &MultiDegree) -> Result<usize> {
    check_degree(x, t)?;
    if x.is_empty() {
        return Ok(0);
    }
    // with r_i distinct nodes in direction i, exponents beyond r_i - 1 only
    // add dependent columns
    let capped = MultiDegree::new(
        t.entries()
            .iter()
            .zip(x.dims())
            .map(|(&ti, &r)| ti.min(i64::from(r.max(1)) - 1))
            .collect(),
    );
    let exponents: Vec<MultiDegree> = capped.box_iter().collect();
    let narrow: Option<Vec<Vec<i64>>> = x
        .iter()
        .map(|p| {
            exponents
                .iter()
                .map(|a| {
                    p.coords()
                        .iter()
                        .zip(a.entries())
                        .try_fold(1i64, |acc, (&j, &e)| {
                            i64::from(j).checked_pow(e as u32)?.checked_mul(acc)
                        })
                })
                .collect()
        })
        .collect();
    if let Some(rows) = narrow {
        return Ok(linalg::rank_i64(&rows));
    }
    let rows = x
        .iter()
        .map(|p| {
            exponents
                .iter()
                .map(|a| {
                    p.coords()
                        .iter()
                        .zip(a.entries())
                        .fold(BigInt::from(1), |acc, (&j, &e)| acc * BigInt::from(j).pow(e as u32))
                })
                .collect()
        })
        .collect();
    Ok(linalg::rank_big(rows))
}

/// Values of `h_X` on the box `0 <= t <= upper`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertTable {
    upper: MultiDegree,
    values: Vec<usize>,
}

/// Values of the first difference `Delta h_X` on the box `0 <= t <= upper`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaTable {
    upper: MultiDegree,
    values: Vec<i64>,
}

fn box_index(upper: &MultiDegree, t: &[i64]) -> Option<usize> {
    if t.len() != upper.dim() {
        return None;
    }
    let mut idx = 0usize;
    for (&ti, &ui) in t.iter().zip(upper.entries()) {
        if ti < 0 || ti > ui {
            return None;
        }
        idx = idx * (ui + 1) as usize + ti as usize;
    }
    Some(idx)
}

impl HilbertTable {
    pub fn upper(&self) -> &MultiDegree {
        &self.upper
    }

    /// `h_X(t)` inside the box, `None` outside.
    pub fn get(&self, t: &[i64]) -> Option<usize> {
        box_index(&self.upper, t).map(|k| self.values[k])
    }

    /// Like [`get`](Self::get) but with `h_X = 0` at negative degrees.
    fn get_or_zero(&self, t: &[i64]) -> usize {
        if t.iter().any(|&c| c < 0) {
            0
        } else {
            self.get(t).expect("degree inside box")
        }
    }

    /// `(t, h_X(t))` in box order (last coordinate fastest).
    pub fn iter(&self) -> impl Iterator<Item = (MultiDegree, usize)> + '_ {
        self.upper.box_iter().zip(self.values.iter().copied())
    }

    pub fn corner(&self) -> usize {
        *self.values.last().expect("box is nonempty")
    }
}

impl DeltaTable {
    pub fn upper(&self) -> &MultiDegree {
        &self.upper
    }

    pub fn get(&self, t: &[i64]) -> Option<i64> {
        box_index(&self.upper, t).map(|k| self.values[k])
    }

    pub fn iter(&self) -> impl Iterator<Item = (MultiDegree, i64)> + '_ {
        self.upper.box_iter().zip(self.values.iter().copied())
    }

    pub fn total(&self) -> i64 {
        self.values.iter().sum()
    }
}

pub fn hilbert_table(x: &PointSet, upper: &MultiDegree) -> Result<HilbertTable> {
    check_degree(x, upper)?;
    let values = upper
        .box_iter()
        .map(|t| hilbert_value(x, &t))
        .collect::<Result<Vec<_>>>()?;
    Ok(HilbertTable {
        upper: upper.clone(),
        values,
    })
}

/// `Delta h(t) = sum over S of (-1)^|S| h(t - chi_S)`, `S` ranging over
/// subsets of the directions.
pub fn delta_from_table(h: &HilbertTable) -> DeltaTable {
    let n = h.upper.dim();
    let values = h
        .upper
        .box_iter()
        .map(|t| {
            (0u32..1 << n)
                .map(|mask| {
                    let shifted: Vec<i64> = t
                        .entries()
                        .iter()
                        .enumerate()
                        .map(|(i, &ti)| ti - i64::from((mask >> i) & 1))
                        .collect();
                    let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
                    sign * h.get_or_zero(&shifted) as i64
                })
                .sum()
        })
        .collect();
    DeltaTable {
        upper: h.upper.clone(),
        values,
    }
}

pub fn delta_table(x: &PointSet, upper: &MultiDegree) -> Result<DeltaTable> {
    hilbert_table(x, upper).map(|h| delta_from_table(&h))
}
