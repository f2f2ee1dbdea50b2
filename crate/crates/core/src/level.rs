//! Level-set decompositions, the inclusion property, and the derived sets
//! used when peeling levels off an ACM configuration.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::grid::{GridPoint, PointSet};
use crate::star::is_acm;

/// One `i`-level set: the points of `X` on the hyperplane `A_{i,level}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Level {
    pub index: u32,
    pub points: PointSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelDecomposition {
    pub direction: usize,
    /// Nonempty levels in increasing index order. Each `points` keeps the
    /// grid of the parent configuration.
    pub levels: Vec<Level>,
}

impl LevelDecomposition {
    pub fn sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.points.len()).collect()
    }
}

pub fn level_sets(x: &PointSet, i: usize) -> Result<LevelDecomposition> {
    x.check_direction(i)?;
    let indices: BTreeSet<u32> = x.iter().map(|p| p.coords()[i]).collect();
    let levels = indices
        .into_iter()
        .map(|j| Level {
            index: j,
            points: x.filter(|p| p.coords()[i] == j),
        })
        .collect();
    Ok(LevelDecomposition {
        direction: i,
        levels,
    })
}

/// True iff the projected `i`-level sets form a chain under inclusion and
/// each is ACM in `(P^1)^{n-1}`.
pub fn inclusion_property(x: &PointSet, i: usize) -> Result<bool> {
    if x.n() < 2 {
        return Err(Error::BadDirection {
            direction: i,
            n: x.n(),
        });
    }
    let decomposition = level_sets(x, i)?;
    // compared in the parent's labels; relabeling each shadow separately
    // would break the inclusion test
    let mut shadows: Vec<BTreeSet<GridPoint>> = decomposition
        .levels
        .iter()
        .map(|l| l.points.project_raw(i))
        .collect();
    shadows.sort_by_key(BTreeSet::len);
    if !shadows.windows(2).all(|w| w[0].is_subset(&w[1])) {
        return Ok(false);
    }
    Ok(decomposition
        .levels
        .iter()
        .all(|l| l.points.project(i).map(|s| is_acm(&s)).unwrap_or(false)))
}

fn nonempty_level(x: &PointSet, i: usize, j: u32) -> Result<()> {
    x.check_direction(i)?;
    if x.iter().any(|p| p.coords()[i] == j) {
        Ok(())
    } else {
        Err(Error::BadLevel {
            direction: i,
            level: j,
        })
    }
}

/// `X` minus its `j`-th `i`-level set, canonicalized.
pub fn remove_level(x: &PointSet, i: usize, j: u32) -> Result<PointSet> {
    nonempty_level(x, i, j)?;
    let rest = x.filter(|p| p.coords()[i] != j);
    if rest.is_empty() {
        return Err(Error::WouldBeEmpty);
    }
    Ok(rest.canonical())
}

/// Union of the given `i`-levels of `X`, canonicalized (empty if none match).
pub fn union_of_levels(x: &PointSet, i: usize, levels: &[u32]) -> Result<PointSet> {
    x.check_direction(i)?;
    Ok(x.filter(|p| levels.contains(&p.coords()[i])).canonical())
}

/// Points of the other `i`-levels lying over the shadow `pi_i(X_j)`.
///
/// This is `pi_i^{-1}(pi_i(X_j))` intersected with `X \ X_j`; it may be empty.
pub fn interface_set(x: &PointSet, i: usize, j: u32) -> Result<PointSet> {
    nonempty_level(x, i, j)?;
    let shadow = x.filter(|p| p.coords()[i] == j).project_raw(i);
    let over = x.filter(|p| p.coords()[i] != j && shadow.contains(&p.without(i)));
    Ok(over.canonical())
}

/// Largest number of points of `X` on a single grid hyperplane.
pub fn max_level_size(x: &PointSet) -> usize {
    (0..x.n())
        .filter_map(|i| level_sets(x, i).ok())
        .flat_map(|d| d.sizes())
        .max()
        .unwrap_or(0)
}
