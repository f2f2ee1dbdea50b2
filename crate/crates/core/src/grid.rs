//! Combinatorial model of point configurations on the hyperplane grid.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A point `P_u` given by the levels `u = (u_1, ..., u_n)` of the grid
/// hyperplanes through it. Ordering is lexicographic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridPoint(Vec<u32>);

impl GridPoint {
    pub fn new(coords: Vec<u32>) -> Self {
        GridPoint(coords)
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// The level of this point in direction `i` (the projection `eta_i`).
    pub fn coordinate(&self, i: usize) -> Result<u32> {
        self.0.get(i).copied().ok_or(Error::BadDirection {
            direction: i,
            n: self.0.len(),
        })
    }

    /// Deletes coordinate `i`.
    pub fn without(&self, i: usize) -> GridPoint {
        let mut coords = self.0.clone();
        coords.remove(i);
        GridPoint(coords)
    }

    /// Inserts `level` as the new coordinate `i`.
    pub fn with_inserted(&self, i: usize, level: u32) -> GridPoint {
        let mut coords = self.0.clone();
        coords.insert(i, level);
        GridPoint(coords)
    }

    pub fn with_coordinate(&self, i: usize, level: u32) -> GridPoint {
        let mut coords = self.0.clone();
        coords[i] = level;
        GridPoint(coords)
    }
}

impl From<Vec<u32>> for GridPoint {
    fn from(coords: Vec<u32>) -> Self {
        GridPoint(coords)
    }
}

impl<const N: usize> From<[u32; N]> for GridPoint {
    fn from(coords: [u32; N]) -> Self {
        GridPoint(coords.to_vec())
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A multidegree `t = (t_1, ..., t_n)`. Entries may go negative while
/// shifting; Hilbert functions vanish there.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiDegree(Vec<i64>);

impl MultiDegree {
    pub fn new(entries: Vec<i64>) -> Self {
        MultiDegree(entries)
    }

    pub fn zero(n: usize) -> Self {
        MultiDegree(alloc::vec![0; n])
    }

    /// `k * e_i` in `n` directions.
    pub fn unit(n: usize, i: usize, k: i64) -> Self {
        let mut e = alloc::vec![0; n];
        e[i] = k;
        MultiDegree(e)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&t| t >= 0)
    }

    pub fn sub(&self, other: &MultiDegree) -> MultiDegree {
        MultiDegree(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Every degree `0 <= t <= self`, last coordinate varying fastest.
    pub fn box_iter(&self) -> impl Iterator<Item = MultiDegree> + '_ {
        let total: usize = self.0.iter().map(|&t| (t.max(-1) + 1) as usize).product();
        (0..total).map(move |mut idx| {
            let mut t = alloc::vec![0i64; self.0.len()];
            for k in (0..self.0.len()).rev() {
                let side = (self.0[k] + 1) as usize;
                t[k] = (idx % side) as i64;
                idx /= side;
            }
            MultiDegree(t)
        })
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A finite reduced set of grid points in `(P^1)^n`.
///
/// `dims[i]` is the number of grid hyperplanes in direction `i`. A set built
/// by [`canonicalize`] uses every level; [`PointSet::new`] also admits unused
/// levels, which several consistency checks need.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    dims: Vec<u32>,
    points: BTreeSet<GridPoint>,
}

impl PointSet {
    /// Builds a set inside the grid `dims`; duplicate points merge.
    pub fn new(dims: Vec<u32>, points: impl IntoIterator<Item = GridPoint>) -> Result<Self> {
        let n = dims.len();
        if n == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        let mut set = BTreeSet::new();
        for p in points {
            if p.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: p.dim(),
                });
            }
            if p.coords().iter().zip(&dims).any(|(&c, &r)| c == 0 || c > r) {
                return Err(Error::PointOutOfGrid);
            }
            set.insert(p);
        }
        Ok(PointSet { dims, points: set })
    }

    /// The empty configuration in `(P^1)^n`.
    pub fn empty(n: usize) -> Self {
        PointSet {
            dims: alloc::vec![0; n],
            points: BTreeSet::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[u32] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &GridPoint) -> bool {
        self.points.contains(p)
    }

    /// Points in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = &GridPoint> + '_ {
        self.points.iter()
    }

    pub fn points(&self) -> &BTreeSet<GridPoint> {
        &self.points
    }

    /// Number of cells `prod r_i` of the ambient grid.
    pub fn grid_size(&self) -> usize {
        self.dims.iter().map(|&r| r as usize).product()
    }

    /// Every cell of the ambient grid, lexicographically.
    pub fn grid_points(&self) -> impl Iterator<Item = GridPoint> + '_ {
        let total = self.grid_size();
        (0..total).map(move |mut idx| {
            let mut coords = alloc::vec![0u32; self.n()];
            for k in (0..self.n()).rev() {
                let side = self.dims[k] as usize;
                coords[k] = (idx % side) as u32 + 1;
                idx /= side;
            }
            GridPoint(coords)
        })
    }

    /// True when every grid hyperplane meets the set.
    pub fn is_canonical(&self) -> bool {
        (0..self.n()).all(|i| {
            let used: BTreeSet<u32> = self.points.iter().map(|p| p.0[i]).collect();
            used.len() == self.dims[i] as usize
        })
    }

    /// Relabels to the canonical grid (unused levels dropped, order kept).
    pub fn canonical(&self) -> PointSet {
        if self.points.is_empty() {
            return PointSet::empty(self.n());
        }
        canonicalize_points(self.n(), self.points.iter().map(|p| p.0.as_slice()))
    }

    pub fn check_direction(&self, i: usize) -> Result<()> {
        if i < self.n() {
            Ok(())
        } else {
            Err(Error::BadDirection {
                direction: i,
                n: self.n(),
            })
        }
    }

    /// Canonicalized image under the projection `pi_i` omitting direction `i`.
    pub fn project(&self, i: usize) -> Result<PointSet> {
        if self.n() < 2 {
            return Err(Error::BadDirection {
                direction: i,
                n: self.n(),
            });
        }
        self.check_direction(i)?;
        let image = self.project_raw(i);
        if image.is_empty() {
            return Ok(PointSet::empty(self.n() - 1));
        }
        Ok(canonicalize_points(
            self.n() - 1,
            image.iter().map(|p| p.0.as_slice()),
        ))
    }

    /// Image under `pi_i` in the original level labels, without relabeling.
    pub(crate) fn project_raw(&self, i: usize) -> BTreeSet<GridPoint> {
        self.points.iter().map(|p| p.without(i)).collect()
    }

    /// Subset of points satisfying `keep`, on the same grid.
    pub fn filter(&self, mut keep: impl FnMut(&GridPoint) -> bool) -> PointSet {
        PointSet {
            dims: self.dims.clone(),
            points: self.points.iter().filter(|p| keep(p)).cloned().collect(),
        }
    }

    /// Applies a direction permutation and per-direction level permutations.
    ///
    /// Direction `i` moves to position `direction_perm[i]`, and level `j` of
    /// direction `i` becomes `level_perms[i][j - 1]`.
    pub fn relabel(&self, direction_perm: &[usize], level_perms: &[Vec<u32>]) -> Result<PointSet> {
        let n = self.n();
        if direction_perm.len() != n || level_perms.len() != n || !is_permutation_0(direction_perm) {
            return Err(Error::BadPermutation);
        }
        for (perm, &r) in level_perms.iter().zip(&self.dims) {
            if perm.len() != r as usize || !is_permutation_1(perm) {
                return Err(Error::BadPermutation);
            }
        }
        let mut dims = alloc::vec![0u32; n];
        for i in 0..n {
            dims[direction_perm[i]] = self.dims[i];
        }
        let points = self.points.iter().map(|p| {
            let mut coords = alloc::vec![0u32; n];
            for i in 0..n {
                coords[direction_perm[i]] = level_perms[i][(p.0[i] - 1) as usize];
            }
            GridPoint(coords)
        });
        PointSet::new(dims, points)
    }
}

fn is_permutation_0(perm: &[usize]) -> bool {
    let seen: BTreeSet<usize> = perm.iter().copied().collect();
    seen.len() == perm.len() && perm.iter().all(|&k| k < perm.len())
}

fn is_permutation_1(perm: &[u32]) -> bool {
    let seen: BTreeSet<u32> = perm.iter().copied().collect();
    seen.len() == perm.len() && perm.iter().all(|&k| k >= 1 && k as usize <= perm.len())
}

/// Per-direction relabeling from raw values to canonical levels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelMap {
    /// `values[i][j - 1]` is the raw value carried by canonical level `j`.
    values: Vec<Vec<i64>>,
}

impl LevelMap {
    pub fn to_level(&self, i: usize, raw: i64) -> Option<u32> {
        self.values
            .get(i)?
            .binary_search(&raw)
            .ok()
            .map(|k| k as u32 + 1)
    }

    pub fn to_raw(&self, i: usize, level: u32) -> Option<i64> {
        self.values.get(i)?.get(level.checked_sub(1)? as usize).copied()
    }

    pub fn point_to_raw(&self, p: &GridPoint) -> Option<Vec<i64>> {
        p.coords()
            .iter()
            .enumerate()
            .map(|(i, &l)| self.to_raw(i, l))
            .collect()
    }
}

/// Canonical point set from raw integer tuples.
///
/// Duplicates merge and the distinct values in each direction are relabeled
/// `1..=r_i` in increasing order.
pub fn canonicalize(raw: &[Vec<i64>]) -> Result<PointSet> {
    canonicalize_with_map(raw).map(|(set, _)| set)
}

/// [`canonicalize`], also returning the relabeling.
pub fn canonicalize_with_map(raw: &[Vec<i64>]) -> Result<(PointSet, LevelMap)> {
    let first = raw.first().ok_or(Error::EmptyConfiguration)?;
    let n = first.len();
    if n == 0 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: 0,
        });
    }
    if let Some(bad) = raw.iter().find(|t| t.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: bad.len(),
        });
    }
    let values: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let distinct: BTreeSet<i64> = raw.iter().map(|t| t[i]).collect();
            distinct.into_iter().collect()
        })
        .collect();
    let map = LevelMap { values };
    let dims = map.values.iter().map(|v| v.len() as u32).collect();
    let points = raw
        .iter()
        .map(|t| {
            GridPoint(
                t.iter()
                    .enumerate()
                    .map(|(i, &v)| map.to_level(i, v).expect("value was collected"))
                    .collect(),
            )
        })
        .collect();
    Ok((PointSet { dims, points }, map))
}

fn canonicalize_points<'a>(n: usize, pts: impl Iterator<Item = &'a [u32]> + Clone) -> PointSet {
    let values: Vec<Vec<u32>> = (0..n)
        .map(|i| {
            let distinct: BTreeSet<u32> = pts.clone().map(|t| t[i]).collect();
            distinct.into_iter().collect()
        })
        .collect();
    let dims = values.iter().map(|v| v.len() as u32).collect();
    let points = pts
        .map(|t| {
            GridPoint(
                t.iter()
                    .enumerate()
                    .map(|(i, v)| values[i].binary_search(v).expect("collected") as u32 + 1)
                    .collect(),
            )
        })
        .collect();
    PointSet { dims, points }
}
