//! Liaison addition and the layer (basic double link) construction.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::grid::{GridPoint, MultiDegree, PointSet};
use crate::hilbert::{delta_table, hilbert_table, HilbertTable};

/// `F = prod_{j in support} A_{direction, j}`, of multidegree
/// `|support| * e_direction`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectionForm {
    pub direction: usize,
    pub support: BTreeSet<u32>,
}

impl DirectionForm {
    pub fn new(direction: usize, support: impl IntoIterator<Item = u32>) -> Self {
        DirectionForm {
            direction,
            support: support.into_iter().collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.support.len()
    }

    pub fn multidegree(&self, n: usize) -> MultiDegree {
        MultiDegree::unit(n, self.direction, self.support.len() as i64)
    }

    fn vanishes_at(&self, p: &GridPoint) -> bool {
        self.support.contains(&p.coords()[self.direction])
    }
}

/// Summands `V_1, ..., V_n` (in common grid coordinates) and one form per
/// summand; form `k` must vanish on every summand except `V_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiaisonInput {
    pub n: usize,
    pub summands: Vec<Vec<GridPoint>>,
    pub forms: Vec<DirectionForm>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Provenance {
    Summand(usize),
    /// A point of the complete intersection cut out by the forms.
    Box,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiaisonOutcome {
    /// `Z` in the input coordinates, on the smallest grid containing them.
    pub embedded: PointSet,
    /// Where each point of `embedded` came from; summands win over the box.
    pub provenance: BTreeMap<GridPoint, Provenance>,
}

impl LiaisonOutcome {
    pub fn canonical(&self) -> PointSet {
        self.embedded.canonical()
    }

    pub fn count(&self, origin: Provenance) -> usize {
        self.provenance.values().filter(|&&p| p == origin).count()
    }
}

impl LiaisonInput {
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        if self.forms.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: self.forms.len(),
            });
        }
        if self.summands.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: self.summands.len(),
            });
        }
        let directions: BTreeSet<usize> = self.forms.iter().map(|f| f.direction).collect();
        if directions.len() != n || directions.iter().any(|&d| d >= n) {
            return Err(Error::FormsNotRegular);
        }
        for form in &self.forms {
            if form.support.is_empty() || form.support.contains(&0) {
                return Err(Error::BadLevel {
                    direction: form.direction,
                    level: 0,
                });
            }
        }
        for summand in &self.summands {
            if summand.is_empty() {
                return Err(Error::EmptyConfiguration);
            }
            for p in summand {
                if p.dim() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        found: p.dim(),
                    });
                }
                if p.coords().contains(&0) {
                    return Err(Error::PointOutOfGrid);
                }
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if self.summands[a].iter().any(|p| self.summands[b].contains(p)) {
                    return Err(Error::OverlappingSummands { first: a, second: b });
                }
            }
        }
        for (k, form) in self.forms.iter().enumerate() {
            for (j, summand) in self.summands.iter().enumerate() {
                if j != k && !summand.iter().all(|p| form.vanishes_at(p)) {
                    return Err(Error::VanishingConditionViolated { form: k, summand: j });
                }
            }
            if self.summands[k].iter().any(|p| form.vanishes_at(p)) {
                return Err(Error::ReducednessGuardViolated { form: k });
            }
        }
        Ok(())
    }

    /// Points of the complete intersection `V` of the forms.
    pub fn box_points(&self) -> Vec<GridPoint> {
        let mut by_direction: Vec<&BTreeSet<u32>> = Vec::with_capacity(self.n);
        for d in 0..self.n {
            let form = self
                .forms
                .iter()
                .find(|f| f.direction == d)
                .expect("validated: one form per direction");
            by_direction.push(&form.support);
        }
        let mut points: Vec<Vec<u32>> = alloc::vec![Vec::new()];
        for support in by_direction {
            points = points
                .into_iter()
                .flat_map(|prefix| {
                    support.iter().map(move |&c| {
                        let mut next = prefix.clone();
                        next.push(c);
                        next
                    })
                })
                .collect();
        }
        points.into_iter().map(GridPoint::new).collect()
    }

    /// Smallest grid holding every summand point and the box.
    fn ambient_dims(&self) -> Vec<u32> {
        let mut dims = alloc::vec![1u32; self.n];
        for p in self.summands.iter().flatten() {
            for (d, &c) in dims.iter_mut().zip(p.coords()) {
                *d = (*d).max(c);
            }
        }
        for f in &self.forms {
            if let Some(&top) = f.support.iter().next_back() {
                dims[f.direction] = dims[f.direction].max(top);
            }
        }
        dims
    }

    /// Default verification box `(sum D_i) * (1, ..., 1)`.
    pub fn default_box(&self) -> MultiDegree {
        let total: usize = self.forms.iter().map(DirectionForm::degree).sum();
        MultiDegree::new(alloc::vec![total as i64; self.n])
    }
}

/// `Z = V_1 ∪ ... ∪ V_n ∪ V` with `V` the complete intersection of the forms.
pub fn liaison_addition(input: &LiaisonInput) -> Result<LiaisonOutcome> {
    input.validate()?;
    let mut provenance = BTreeMap::new();
    for p in input.box_points() {
        provenance.insert(p, Provenance::Box);
    }
    for (k, summand) in input.summands.iter().enumerate() {
        for p in summand {
            provenance.insert(p.clone(), Provenance::Summand(k));
        }
    }
    let embedded = PointSet::new(input.ambient_dims(), provenance.keys().cloned())?;
    Ok(LiaisonOutcome {
        embedded,
        provenance,
    })
}

fn shifted_or_zero(table: &HilbertTable, t: &MultiDegree, shift: &MultiDegree) -> usize {
    let s = t.sub(shift);
    if s.is_nonnegative() {
        table.get(s.entries()).expect("shifted degree stays in box")
    } else {
        0
    }
}

/// Checks `h_Z(t) = h_V(t) + sum_k h_{V_k}(t - d_k)` for all `0 <= t <= upper`.
pub fn verify_hf_additivity(input: &LiaisonInput, z: &PointSet, upper: &MultiDegree) -> Result<bool> {
    input.validate()?;
    let dims = input.ambient_dims();
    let hz = hilbert_table(z, upper)?;
    let hv = hilbert_table(&PointSet::new(dims.clone(), input.box_points())?, upper)?;
    let summands = input
        .summands
        .iter()
        .map(|s| hilbert_table(&PointSet::new(dims.clone(), s.iter().cloned())?, upper))
        .collect::<Result<Vec<_>>>()?;
    let shifts: Vec<MultiDegree> = input.forms.iter().map(|f| f.multidegree(input.n)).collect();
    Ok(upper.box_iter().all(|t| {
        let rhs = hv.get(t.entries()).expect("in box")
            + summands
                .iter()
                .zip(&shifts)
                .map(|(h, d)| shifted_or_zero(h, &t, d))
                .sum::<usize>();
        hz.get(t.entries()) == Some(rhs)
    }))
}

/// First-difference form of [`verify_hf_additivity`]:
/// `Delta h_Z(t) = Delta h_V(t) + sum_k Delta h_{V_k}(t - d_k)`.
pub fn verify_delta_additivity(
    input: &LiaisonInput,
    z: &PointSet,
    upper: &MultiDegree,
) -> Result<bool> {
    input.validate()?;
    let dims = input.ambient_dims();
    let dz = delta_table(z, upper)?;
    let dv = delta_table(&PointSet::new(dims.clone(), input.box_points())?, upper)?;
    let summands = input
        .summands
        .iter()
        .map(|s| delta_table(&PointSet::new(dims.clone(), s.iter().cloned())?, upper))
        .collect::<Result<Vec<_>>>()?;
    let shifts: Vec<MultiDegree> = input.forms.iter().map(|f| f.multidegree(input.n)).collect();
    Ok(upper.box_iter().all(|t| {
        let rhs = dv.get(t.entries()).expect("in box")
            + summands
                .iter()
                .zip(&shifts)
                .map(|(d, shift)| {
                    let s = t.sub(shift);
                    if s.is_nonnegative() {
                        d.get(s.entries()).expect("in box")
                    } else {
                        0
                    }
                })
                .sum::<i64>();
        dz.get(t.entries()) == Some(rhs)
    }))
}

/// Where the new hyperplane of [`add_layer`] goes among the existing levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LayerPosition {
    /// New level `r_i + 1`.
    #[default]
    After,
    /// New level 1; existing levels shift up by one.
    Before,
}

/// `X ∪ ({c} x pi_i(X))` for a hyperplane `A_{i,c}` missing `X`.
pub fn add_layer(x: &PointSet, i: usize, position: LayerPosition) -> Result<PointSet> {
    if x.n() < 2 {
        return Err(Error::BadDirection {
            direction: i,
            n: x.n(),
        });
    }
    x.check_direction(i)?;
    if x.is_empty() {
        return Err(Error::EmptyConfiguration);
    }
    let r = x.dims()[i];
    let (existing, fresh): (Vec<GridPoint>, u32) = match position {
        LayerPosition::After => (x.iter().cloned().collect(), r + 1),
        LayerPosition::Before => (
            x.iter()
                .map(|p| p.with_coordinate(i, p.coords()[i] + 1))
                .collect(),
            1,
        ),
    };
    let layer: Vec<GridPoint> = x
        .project_raw(i)
        .into_iter()
        .map(|q| q.with_inserted(i, fresh))
        .collect();
    let mut dims = x.dims().to_vec();
    dims[i] += 1;
    Ok(PointSet::new(dims, existing.into_iter().chain(layer))?.canonical())
}

/// Checks `h_Z(t) = h_L(t) + h_X(t - e_i)` on `0 <= t <= upper`, where
/// `Z = add_layer(X, i)` and `L` is the new layer.
pub fn verify_layer_additivity(x: &PointSet, i: usize, upper: &MultiDegree) -> Result<bool> {
    let z = add_layer(x, i, LayerPosition::After)?;
    let fresh = z.dims()[i];
    let layer = z.filter(|p| p.coords()[i] == fresh);
    let hz = hilbert_table(&z, upper)?;
    let hl = hilbert_table(&layer, upper)?;
    let hx = hilbert_table(x, upper)?;
    let shift = MultiDegree::unit(x.n(), i, 1);
    Ok(upper.box_iter().all(|t| {
        hz.get(t.entries()).expect("in box")
            == hl.get(t.entries()).expect("in box") + shifted_or_zero(&hx, &t, &shift)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::canonicalize;
    use crate::samples;
    use crate::star::is_acm;
    use alloc::vec;

    fn gp(c: &[u32]) -> GridPoint {
        GridPoint::new(c.to_vec())
    }

    pub(crate) fn eleven_input() -> LiaisonInput {
        LiaisonInput {
            n: 3,
            summands: vec![vec![gp(&[1, 1, 1])], vec![gp(&[2, 2, 2])], vec![gp(&[3, 3, 3])]],
            forms: vec![
                DirectionForm::new(0, [2, 3]),
                DirectionForm::new(1, [1, 3]),
                DirectionForm::new(2, [1, 2]),
            ],
        }
    }

    fn plane_input(first_support: u32) -> LiaisonInput {
        LiaisonInput {
            n: 2,
            summands: vec![vec![gp(&[1, 1])], vec![gp(&[2, 2])]],
            forms: vec![
                DirectionForm::new(0, [first_support]),
                DirectionForm::new(1, [1]),
            ],
        }
    }

    #[test]
    fn eleven_points_from_three_summands() {
        let out = liaison_addition(&eleven_input()).unwrap();
        assert_eq!(out.embedded.len(), 11);
        assert_eq!(out.count(Provenance::Box), 8);
        assert_eq!(out.canonical(), samples::eleven_point_liaison());
        assert!(verify_hf_additivity(&eleven_input(), &out.embedded, &MultiDegree::new(vec![3, 3, 3])).unwrap());
        assert!(is_acm(&out.canonical()));
    }

    #[test]
    fn three_points_in_the_plane() {
        let input = plane_input(2);
        let out = liaison_addition(&input).unwrap();
        let expected = canonicalize(&[vec![1, 1], vec![2, 2], vec![2, 1]]).unwrap();
        assert_eq!(out.canonical(), expected);
        let t = MultiDegree::new(vec![2, 2]);
        assert!(verify_hf_additivity(&input, &out.embedded, &t).unwrap());
        assert!(verify_delta_additivity(&input, &out.embedded, &t).unwrap());
    }

    #[test]
    fn hypothesis_violations() {
        assert_eq!(
            liaison_addition(&plane_input(1)),
            Err(Error::VanishingConditionViolated { form: 0, summand: 1 })
        );
        let mut guard = plane_input(2);
        guard.forms[0] = DirectionForm::new(0, [1, 2]);
        assert_eq!(liaison_addition(&guard), Err(Error::ReducednessGuardViolated { form: 0 }));

        let mut same_direction = plane_input(2);
        same_direction.forms[1] = DirectionForm::new(0, [1]);
        assert_eq!(liaison_addition(&same_direction), Err(Error::FormsNotRegular));
    }

    #[test]
    fn overlapping_summands_rejected() {
        let input = LiaisonInput {
            n: 2,
            summands: vec![vec![gp(&[1, 2])], vec![gp(&[2, 1]), gp(&[1, 2])]],
            forms: vec![DirectionForm::new(0, [1, 2]), DirectionForm::new(1, [2])],
        };
        assert_eq!(
            liaison_addition(&input),
            Err(Error::OverlappingSummands { first: 0, second: 1 })
        );
    }

    #[test]
    fn perturbed_union_breaks_additivity() {
        let input = eleven_input();
        let out = liaison_addition(&input).unwrap();
        let missing = gp(&[2, 1, 1]);
        let perturbed = out.embedded.filter(|p| *p != missing);
        assert!(!verify_hf_additivity(&input, &perturbed, &MultiDegree::new(vec![3, 3, 3])).unwrap());
    }

    #[test]
    fn layer_examples() {
        let one = canonicalize(&[vec![1, 1]]).unwrap();
        assert_eq!(
            add_layer(&one, 0, LayerPosition::After).unwrap(),
            canonicalize(&[vec![1, 1], vec![2, 1]]).unwrap()
        );

        let three = canonicalize(&[vec![1, 1], vec![2, 2], vec![2, 1]]).unwrap();
        let z = add_layer(&three, 0, LayerPosition::After).unwrap();
        assert_eq!(z.len(), 5);
        assert!(z.contains(&gp(&[3, 1])) && z.contains(&gp(&[3, 2])));

        let six = samples::six_point_cube();
        assert_eq!(add_layer(&six, 0, LayerPosition::After).unwrap().len(), 10);
        assert_eq!(add_layer(&six, 0, LayerPosition::Before).unwrap().len(), 10);

        assert!(add_layer(&canonicalize(&[vec![1]]).unwrap(), 0, LayerPosition::After).is_err());
    }

    #[test]
    fn layer_hilbert_relation() {
        let three = canonicalize(&[vec![1, 1], vec![2, 2], vec![2, 1]]).unwrap();
        for i in 0..2 {
            assert!(verify_layer_additivity(&three, i, &MultiDegree::new(vec![3, 3])).unwrap());
        }
        assert!(verify_layer_additivity(&samples::six_point_cube(), 2, &MultiDegree::new(vec![2, 2, 2])).unwrap());
    }
}
