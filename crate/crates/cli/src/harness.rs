//! Exhaustive and seeded-random cross-validation over subsets of a grid.
//!
//! Every nonempty subset is identified by a bitmask over the grid cells in
//! lexicographic order (bit `k` is the `k`-th cell, last coordinate fastest).
//! For each subset the harness records the `(star_n)` verdict, the Reisner
//! verdict and the inclusion verdicts, and checks the structural statements
//! that must hold for ACM sets.

use std::io::Write;

use acmpts_core::level::{inclusion_property, interface_set, level_sets, remove_level, union_of_levels};
use acmpts_core::reisner::reisner_check;
use acmpts_core::star::{find_path, is_acm, is_valid_path};
use acmpts_core::{GridPoint, PointSet};
use anyhow::{bail, Result};
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Largest grid enumerated exhaustively.
pub const EXHAUSTIVE_LIMIT: usize = 27;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationRecord {
    pub id: u64,
    pub size: usize,
    pub star: bool,
    pub reisner: bool,
    pub inclusion: Vec<bool>,
    /// `star == reisner`.
    pub agree: bool,
    /// Level sets, complements, unions of levels and interface sets of an
    /// ACM set are ACM; inclusion implies ACM; for `n = 2` inclusion in some
    /// direction is equivalent to ACM.
    pub structure_ok: bool,
    /// Every pair of points of an ACM set is joined by a valid path.
    pub paths_ok: bool,
    pub euler_ok: bool,
}

impl EnumerationRecord {
    pub fn passed(&self) -> bool {
        self.agree && self.structure_ok && self.paths_ok && self.euler_ok
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationReport {
    pub dims: Vec<u32>,
    pub records: Vec<EnumerationRecord>,
}

impl EnumerationReport {
    pub fn agreements(&self) -> usize {
        self.records.iter().filter(|r| r.agree).count()
    }

    pub fn acm_count(&self) -> usize {
        self.records.iter().filter(|r| r.star).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &EnumerationRecord> + '_ {
        self.records.iter().filter(|r| !r.passed())
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(EnumerationRecord::passed)
    }

    pub fn summary(&self) -> String {
        let dims: Vec<String> = self.dims.iter().map(ToString::to_string).collect();
        let total = self.records.len();
        let failed = self.failures().count();
        format!(
            "grid {}: {} records, {} ACM; star/Reisner agreement {}/{}; {}",
            dims.join("x"),
            total,
            self.acm_count(),
            self.agreements(),
            total,
            if failed == 0 {
                "all checks passed".to_string()
            } else {
                format!("{failed} records FAILED")
            }
        )
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let mut header = vec!["id".to_string(), "size".into(), "star".into(), "reisner".into()];
        header.extend((1..=self.dims.len()).map(|i| format!("inclusion_{i}")));
        header.extend(["agree", "structure_ok", "paths_ok", "euler_ok"].map(String::from));
        w.write_record(&header)?;
        for r in &self.records {
            let mut row = vec![
                r.id.to_string(),
                r.size.to_string(),
                r.star.to_string(),
                r.reisner.to_string(),
            ];
            row.extend(r.inclusion.iter().map(ToString::to_string));
            row.extend([r.agree, r.structure_ok, r.paths_ok, r.euler_ok].map(|b| b.to_string()));
            w.write_record(&row)?;
        }
        w.flush()?;
        Ok(())
    }
}

fn grid_cells(dims: &[u32]) -> Result<Vec<GridPoint>> {
    if dims.is_empty() || dims.contains(&0) {
        bail!("grid sides must be positive");
    }
    let cells: Vec<GridPoint> = PointSet::new(dims.to_vec(), [])
        .map_err(anyhow::Error::msg)?
        .grid_points()
        .collect();
    if cells.len() > 63 {
        bail!("grid has {} cells; at most 63 are supported", cells.len());
    }
    Ok(cells)
}

/// The canonicalized subset encoded by `id`.
pub fn subset(dims: &[u32], cells: &[GridPoint], id: u64) -> PointSet {
    let chosen = cells
        .iter()
        .enumerate()
        .filter(|(k, _)| id >> k & 1 == 1)
        .map(|(_, p)| p.clone());
    PointSet::new(dims.to_vec(), chosen)
        .expect("cells lie in the grid")
        .canonical()
}

pub fn evaluate(id: u64, x: &PointSet) -> EnumerationRecord {
    let star = is_acm(x);
    let oracle = reisner_check(x).expect("desk-scale grid");
    let n = x.n();
    let inclusion: Vec<bool> = if n >= 2 {
        (0..n)
            .map(|i| inclusion_property(x, i).expect("valid direction"))
            .collect()
    } else {
        Vec::new()
    };
    let mut structure_ok = true;
    if inclusion.iter().any(|&b| b) && !star {
        structure_ok = false;
    }
    if n == 2 && inclusion.iter().any(|&b| b) != star {
        structure_ok = false;
    }
    if star {
        structure_ok &= acm_pieces_are_acm(x);
    }
    let paths_ok = !star || all_pairs_have_paths(x);
    EnumerationRecord {
        id,
        size: x.len(),
        star,
        reisner: oracle.cm,
        inclusion,
        agree: star == oracle.cm,
        structure_ok,
        paths_ok,
        euler_ok: oracle.euler_consistent,
    }
}

fn acm_pieces_are_acm(x: &PointSet) -> bool {
    (0..x.n()).all(|i| {
        let levels = level_sets(x, i).expect("valid direction");
        let indices: Vec<u32> = levels.levels.iter().map(|l| l.index).collect();
        let each = levels.levels.iter().all(|l| {
            is_acm(&l.points.canonical())
                && is_acm(&interface_set(x, i, l.index).expect("nonempty level"))
                && (indices.len() < 2 || is_acm(&remove_level(x, i, l.index).expect("two levels")))
        });
        let unions = (1u32..1 << indices.len()).all(|mask| {
            let chosen: Vec<u32> = indices
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &j)| j)
                .collect();
            is_acm(&union_of_levels(x, i, &chosen).expect("valid direction"))
        });
        each && unions
    })
}

fn all_pairs_have_paths(x: &PointSet) -> bool {
    let s = x.n();
    let pts: Vec<&GridPoint> = x.iter().collect();
    pts.iter().enumerate().all(|(a, p)| {
        pts[a..].iter().all(|q| {
            find_path(x, p, q, s)
                .map(|path| is_valid_path(x, p, q, &path))
                .unwrap_or(false)
        })
    })
}

/// Every nonempty subset of the grid.
pub fn enumerate_exhaustive(dims: &[u32]) -> Result<EnumerationReport> {
    let cells = grid_cells(dims)?;
    if cells.len() > EXHAUSTIVE_LIMIT {
        bail!(
            "exhaustive enumeration needs at most {EXHAUSTIVE_LIMIT} grid cells, got {}",
            cells.len()
        );
    }
    let records = (1u64..1 << cells.len())
        .map(|id| evaluate(id, &subset(dims, &cells, id)))
        .collect();
    Ok(EnumerationReport {
        dims: dims.to_vec(),
        records,
    })
}

/// `samples` nonempty subsets from a seeded ChaCha8 stream.
///
/// The subset size is drawn uniformly from `1..=cells` and then a uniform
/// subset of that size, so small (frequently ACM) sets are well represented.
pub fn enumerate_random(dims: &[u32], samples: usize, seed: u64) -> Result<EnumerationReport> {
    let cells = grid_cells(dims)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let records = (0..samples)
        .map(|_| {
            let size = rng.gen_range(1..=cells.len());
            let id = index::sample(&mut rng, cells.len(), size)
                .iter()
                .fold(0u64, |acc, k| acc | 1 << k);
            evaluate(id, &subset(dims, &cells, id))
        })
        .collect();
    Ok(EnumerationReport {
        dims: dims.to_vec(),
        records,
    })
}
