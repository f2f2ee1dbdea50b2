//! Stanley–Reisner oracle for the ACM property.
//!
//! The configuration ideal `J` of `X` is squarefree, so it is the
//! Stanley–Reisner ideal of the complex whose facets are the complements of
//! the point primes: for each point `p`, all grid variables except the
//! `a_{i,p_i}`. Cohen–Macaulayness is decided by Reisner's criterion over
//! the rationals: every link `lk(sigma)` must have vanishing reduced
//! homology below its top dimension.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::grid::PointSet;
use crate::linalg;
use crate::monomial::GridVariable;

/// Faces are bitmasks over the vertex list.
pub type Face = u64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<GridVariable>,
    /// Inclusion-maximal faces, sorted.
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Complex generated by `facets` (vertex index lists); non-maximal
    /// entries are dropped. No facets at all gives the void complex.
    pub fn from_facets(vertices: Vec<GridVariable>, facets: &[Vec<usize>]) -> Result<Self> {
        if vertices.len() > 64 {
            return Err(Error::ComplexTooLarge {
                vertices: vertices.len(),
            });
        }
        let masks = facets
            .iter()
            .map(|f| {
                f.iter().try_fold(0u64, |acc, &v| {
                    if v < vertices.len() {
                        Ok(acc | 1 << v)
                    } else {
                        Err(Error::FaceNotInComplex)
                    }
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SimplicialComplex {
            vertices,
            facets: maximal(masks),
        })
    }

    pub fn vertices(&self) -> &[GridVariable] {
        &self.vertices
    }

    pub fn facet_masks(&self) -> &[Face] {
        &self.facets
    }

    /// Facets as vertex lists.
    pub fn facets(&self) -> Vec<Vec<GridVariable>> {
        self.facets.iter().map(|&f| self.face_vertices(f)).collect()
    }

    pub fn face_vertices(&self, face: Face) -> Vec<GridVariable> {
        (0..self.vertices.len())
            .filter(|&v| face >> v & 1 == 1)
            .map(|v| self.vertices[v])
            .collect()
    }

    pub fn face_from_vertices(&self, vars: &[GridVariable]) -> Option<Face> {
        vars.iter().try_fold(0u64, |acc, var| {
            let k = self.vertices.iter().position(|v| v == var)?;
            Some(acc | 1 << k)
        })
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains_face(&self, face: Face) -> bool {
        self.facets.iter().any(|&f| f & face == face)
    }

    /// Dimension (largest face size minus one); `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.facets
            .iter()
            .map(|f| f.count_ones() as isize - 1)
            .max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets
            .windows(2)
            .all(|w| w[0].count_ones() == w[1].count_ones())
    }

    /// Every face, the empty face included.
    pub fn faces(&self) -> BTreeSet<Face> {
        let mut all = BTreeSet::new();
        for &facet in &self.facets {
            let mut sub = facet;
            loop {
                all.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & facet;
            }
        }
        all
    }

    /// `f_k` indexed by face size `k = 0, 1, ...`.
    pub fn face_counts(&self) -> Vec<usize> {
        let faces = self.faces();
        let top = faces.iter().map(|f| f.count_ones() as usize).max();
        let mut counts = alloc::vec![0; top.map_or(0, |t| t + 1)];
        for f in faces {
            counts[f.count_ones() as usize] += 1;
        }
        counts
    }

    /// `lk(sigma) = {tau : tau ∩ sigma = ∅, tau ∪ sigma ∈ Δ}`, on the same
    /// vertex list.
    pub fn link(&self, sigma: Face) -> Result<SimplicialComplex> {
        if !self.contains_face(sigma) {
            return Err(Error::FaceNotInComplex);
        }
        let facets = self
            .facets
            .iter()
            .filter(|&&f| f & sigma == sigma)
            .map(|&f| f & !sigma)
            .collect();
        Ok(SimplicialComplex {
            vertices: self.vertices.clone(),
            facets: maximal(facets),
        })
    }
}

fn maximal(mut masks: Vec<Face>) -> Vec<Face> {
    masks.sort_by_key(|m| core::cmp::Reverse(m.count_ones()));
    masks.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(masks.len());
    for m in masks {
        if !kept.iter().any(|&k| k & m == m) {
            kept.push(m);
        }
    }
    kept.sort_unstable();
    kept
}

/// The complex whose Stanley–Reisner ideal is the configuration ideal of `x`.
///
/// Vertices are the grid variables of `x.dims()` in `(direction, level)`
/// order; unused levels become cone points.
pub fn sr_complex(x: &PointSet) -> Result<SimplicialComplex> {
    let vertices: Vec<GridVariable> = x
        .dims()
        .iter()
        .enumerate()
        .flat_map(|(i, &r)| (1..=r).map(move |j| GridVariable::new(i, j)))
        .collect();
    if vertices.len() > 64 {
        return Err(Error::ComplexTooLarge {
            vertices: vertices.len(),
        });
    }
    let all: Face = if vertices.len() == 64 {
        u64::MAX
    } else {
        (1u64 << vertices.len()) - 1
    };
    let offsets: Vec<usize> = x
        .dims()
        .iter()
        .scan(0usize, |acc, &r| {
            let start = *acc;
            *acc += r as usize;
            Some(start)
        })
        .collect();
    let facets = x
        .iter()
        .map(|p| {
            let removed = p
                .coords()
                .iter()
                .zip(&offsets)
                .fold(0u64, |acc, (&j, &off)| acc | 1 << (off + j as usize - 1));
            all & !removed
        })
        .collect();
    Ok(SimplicialComplex {
        vertices,
        facets: maximal(facets),
    })
}

/// Reduced Betti numbers over the rationals together with the face counts
/// they were computed from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyProfile {
    /// `ranks[k]` is the rank of `H~_{k-1}`, so index 0 is degree -1.
    pub ranks: Vec<usize>,
    pub face_counts: Vec<usize>,
}

impl HomologyProfile {
    /// Rank of `H~_degree` (zero outside the computed range).
    pub fn rank(&self, degree: isize) -> usize {
        usize::try_from(degree + 1)
            .ok()
            .and_then(|k| self.ranks.get(k).copied())
            .unwrap_or(0)
    }

    /// `sum (-1)^i rank H~_i`.
    pub fn euler_from_homology(&self) -> i64 {
        alternating(&self.ranks)
    }

    /// `sum (-1)^i f_i` over faces of dimension `i >= -1`.
    pub fn euler_from_faces(&self) -> i64 {
        alternating(&self.face_counts)
    }

    pub fn is_euler_consistent(&self) -> bool {
        self.euler_from_homology() == self.euler_from_faces()
    }
}

fn alternating(by_size: &[usize]) -> i64 {
    by_size
        .iter()
        .enumerate()
        .map(|(k, &c)| if k % 2 == 1 { c as i64 } else { -(c as i64) })
        .sum()
}

/// Reduced homology via exact ranks of the simplicial boundary maps,
/// including the augmentation `C_0 -> C_{-1}`.
pub fn homology(complex: &SimplicialComplex) -> HomologyProfile {
    let faces = complex.faces();
    let top = faces.iter().map(|f| f.count_ones() as usize).max();
    let Some(top) = top else {
        return HomologyProfile {
            ranks: Vec::new(),
            face_counts: Vec::new(),
        };
    };
    let mut by_size: Vec<Vec<Face>> = alloc::vec![Vec::new(); top + 1];
    for f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    // boundary_rank[k] = rank of the map from size-k faces to size-(k-1) faces
    let mut boundary_rank = alloc::vec![0usize; top + 2];
    for k in 1..=top {
        boundary_rank[k] = boundary_matrix_rank(&by_size[k - 1], &by_size[k]);
    }
    let ranks = (0..=top)
        .map(|k| by_size[k].len() - boundary_rank[k] - boundary_rank[k + 1])
        .collect();
    let profile = HomologyProfile {
        ranks,
        face_counts: by_size.iter().map(Vec::len).collect(),
    };
    debug_assert!(profile.is_euler_consistent());
    profile
}

fn boundary_matrix_rank(lower: &[Face], upper: &[Face]) -> usize {
    if lower.is_empty() || upper.is_empty() {
        return 0;
    }
    // lower is sorted, so positions are found by binary search
    let mut rows = alloc::vec![alloc::vec![0i64; upper.len()]; lower.len()];
    for (c, &face) in upper.iter().enumerate() {
        let mut sign = 1;
        let mut rest = face;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest &= rest - 1;
            let r = lower.binary_search(&(face & !bit)).expect("boundary face exists");
            rows[r][c] = sign;
            sign = -sign;
        }
    }
    linalg::rank_i64(&rows)
}

/// A link violating Reisner's criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkFailure {
    pub face: Vec<GridVariable>,
    pub degree: isize,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReisnerReport {
    pub cm: bool,
    pub pure: bool,
    /// First failing link, faces taken by size then vertex order.
    pub failure: Option<LinkFailure>,
    pub links_examined: usize,
    /// Every computed homology profile satisfied the Euler relation.
    pub euler_consistent: bool,
}

/// Reisner's criterion applied to `sr_complex(x)`.
pub fn reisner_check(x: &PointSet) -> Result<ReisnerReport> {
    let complex = sr_complex(x)?;
    let mut report = ReisnerReport {
        cm: true,
        pure: complex.is_pure(),
        failure: None,
        links_examined: 0,
        euler_consistent: true,
    };
    if complex.is_void() {
        // the empty configuration counts as ACM
        return Ok(report);
    }
    // the whole complex is the link of the empty face
    let whole = homology(&complex);
    report.euler_consistent = whole.is_euler_consistent();
    if !report.pure {
        report.cm = false;
        return Ok(report);
    }
    let mut faces: Vec<Face> = complex.faces().into_iter().collect();
    faces.sort_by_key(|&f| (f.count_ones(), core::cmp::Reverse(f.reverse_bits())));
    for sigma in faces {
        let link = complex.link(sigma)?;
        let top = link.dimension().expect("link of a face is not void");
        let h = if sigma == 0 { whole.clone() } else { homology(&link) };
        report.links_examined += 1;
        report.euler_consistent &= h.is_euler_consistent();
        if let Some(degree) = (-1..top).find(|&d| h.rank(d) != 0) {
            report.cm = false;
            report.failure = Some(LinkFailure {
                face: complex.face_vertices(sigma),
                degree,
                rank: h.rank(degree),
            });
            break;
        }
    }
    Ok(report)
}

/// True iff the Stanley–Reisner model of `x` is Cohen–Macaulay over `Q`.
pub fn is_cm(x: &PointSet) -> bool {
    reisner_check(x)
        .map(|r| r.cm)
        .expect("configuration fits the face encoding")
}
