//! Monomial ideals in the grid variables `a_{i,j}` (one variable per grid
//! hyperplane). A point `P_u` corresponds to the prime `(a_{1,u_1}, ...,
//! a_{n,u_n})`, and a configuration to the intersection of its primes.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::grid::{GridPoint, PointSet};
use crate::star::hamming_distance;

/// The variable `a_{direction, level}` (direction 0-based, level 1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridVariable {
    pub direction: usize,
    pub level: u32,
}

impl GridVariable {
    pub fn new(direction: usize, level: u32) -> Self {
        GridVariable { direction, level }
    }
}

impl fmt::Display for GridVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a_{{{},{}}}", self.direction + 1, self.level)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(BTreeMap<GridVariable, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn var(v: GridVariable) -> Self {
        Monomial(BTreeMap::from([(v, 1)]))
    }

    pub fn from_vars(vars: impl IntoIterator<Item = GridVariable>) -> Self {
        let mut m = Monomial::one();
        for v in vars {
            *m.0.entry(v).or_insert(0) += 1;
        }
        m
    }

    pub fn exponent(&self, v: &GridVariable) -> u32 {
        self.0.get(v).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = &GridVariable> + '_ {
        self.0.keys()
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    /// Degree in the variables of each direction `0..n`.
    pub fn multidegree(&self, n: usize) -> Vec<u32> {
        let mut deg = alloc::vec![0; n];
        for (v, &e) in &self.0 {
            deg[v.direction] += e;
        }
        deg
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.values().all(|&e| e == 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|(v, &e)| other.exponent(v) >= e)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (v, &e) in &other.0 {
            let slot = out.entry(*v).or_insert(0);
            *slot = (*slot).max(e);
        }
        Monomial(out)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, &e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{v}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// An ideal stored by its minimal generators, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Ideal generated by `gens`; non-minimal generators are dropped.
    pub fn from_generators(gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut gens: Vec<Monomial> = gens.into_iter().collect();
        gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            // sorted by degree, so only earlier generators can divide g
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        minimal.sort();
        MonomialIdeal { generators: minimal }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    /// Membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// `I ∩ J`, generated by the pairwise least common multiples.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        MonomialIdeal::from_generators(
            self.generators
                .iter()
                .flat_map(|a| other.generators.iter().map(move |b| a.lcm(b))),
        )
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

/// `(a_{1,p_1}, ..., a_{n,p_n})`.
pub fn point_prime(p: &GridPoint) -> MonomialIdeal {
    MonomialIdeal::from_generators(
        p.coords()
            .iter()
            .enumerate()
            .map(|(i, &j)| Monomial::var(GridVariable::new(i, j))),
    )
}

pub fn intersect(a: &MonomialIdeal, b: &MonomialIdeal) -> MonomialIdeal {
    a.intersect(b)
}

/// Intersection of the point primes of `X`: the squarefree model `J` of `I_X`.
pub fn configuration_ideal(x: &PointSet) -> MonomialIdeal {
    let mut points = x.iter();
    let Some(first) = points.next() else {
        return MonomialIdeal::from_generators([Monomial::one()]);
    };
    points.fold(point_prime(first), |acc, p| acc.intersect(&point_prime(p)))
}

pub fn contains(ideal: &MonomialIdeal, m: &Monomial) -> bool {
    ideal.contains(m)
}

/// Generators of `Y_{P,Q}`: `a_{i,P_i}` where `P_i = Q_i`, else
/// `a_{i,P_i} a_{i,Q_i}`.
pub fn ci_generators(p: &GridPoint, q: &GridPoint) -> Result<Vec<Monomial>> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: q.dim(),
        });
    }
    Ok(p.coords()
        .iter()
        .zip(q.coords())
        .enumerate()
        .map(|(i, (&a, &b))| {
            if a == b {
                Monomial::var(GridVariable::new(i, a))
            } else {
                Monomial::from_vars([GridVariable::new(i, a), GridVariable::new(i, b)])
            }
        })
        .collect())
}

/// Number of degree-2 generators of `Y_{P,Q}`; equals `d(P,Q)`.
pub fn ci_quadric_count(p: &GridPoint, q: &GridPoint) -> Result<usize> {
    debug_assert_eq!(
        ci_generators(p, q).map(|g| g.iter().filter(|m| m.degree() == 2).count()),
        hamming_distance(p, q)
    );
    hamming_distance(p, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::canonicalize;
    use crate::samples;
    use alloc::vec;

    fn a(i: usize, j: u32) -> GridVariable {
        GridVariable::new(i - 1, j)
    }

    fn m(vars: &[(usize, u32)]) -> Monomial {
        Monomial::from_vars(vars.iter().map(|&(i, j)| a(i, j)))
    }

    #[test]
    fn point_primes() {
        let p = point_prime(&GridPoint::from([1, 2, 1]));
        assert_eq!(p.generators(), &[m(&[(1, 1)]), m(&[(2, 2)]), m(&[(3, 1)])]);
        assert_eq!(point_prime(&GridPoint::from([5])).generators(), &[m(&[(1, 5)])]);
        assert_eq!(
            point_prime(&GridPoint::from([2, 2])).generators(),
            &[m(&[(1, 2)]), m(&[(2, 2)])]
        );
    }

    #[test]
    fn intersections() {
        let p = point_prime(&GridPoint::from([1, 1, 1]));
        let q = point_prime(&GridPoint::from([2, 2, 2]));
        let pq = intersect(&p, &q);
        assert_eq!(pq.generators().len(), 9);
        assert!(pq.generators().iter().all(|g| g.degree() == 2));
        assert!(pq.contains(&m(&[(1, 1), (3, 2)])));
        assert_eq!(intersect(&p, &p), p);

        let r = intersect(
            &point_prime(&GridPoint::from([1, 1])),
            &point_prime(&GridPoint::from([2, 1])),
        );
        let mut expected = vec![m(&[(2, 1)]), m(&[(1, 1), (1, 2)])];
        expected.sort();
        assert_eq!(r.generators(), expected.as_slice());
    }

    #[test]
    fn configuration_ideals() {
        let one = canonicalize(&[vec![1, 1, 1]]).unwrap();
        assert_eq!(configuration_ideal(&one), point_prime(&GridPoint::from([1, 1, 1])));

        let grid = canonicalize(&[vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]).unwrap();
        let mut expected = vec![m(&[(1, 1), (1, 2)]), m(&[(2, 1), (2, 2)])];
        expected.sort();
        assert_eq!(configuration_ideal(&grid).generators(), expected.as_slice());

        let six = configuration_ideal(&samples::six_point_cube());
        assert!(six.generators().iter().all(|g| g.is_squarefree() && g.degree() <= 3));
        // m lies in J iff every point of X has some a_{i,p_i} dividing m
        assert!(six.contains(&m(&[(1, 1), (1, 2)])));
        assert!(six.contains(&m(&[(1, 1), (2, 1), (3, 1)])));
        assert!(!six.contains(&m(&[(1, 1), (2, 1)])));
    }

    #[test]
    fn membership() {
        let i = MonomialIdeal::from_generators([m(&[(1, 1)])]);
        assert!(contains(&i, &m(&[(1, 1), (2, 1)])));
        let j = MonomialIdeal::from_generators([m(&[(1, 1), (1, 2)])]);
        assert!(!contains(&j, &m(&[(1, 1)])));
    }

    #[test]
    fn complete_intersection_generators() {
        let g = ci_generators(&GridPoint::from([1, 1, 2]), &GridPoint::from([1, 2, 1])).unwrap();
        assert_eq!(g, vec![m(&[(1, 1)]), m(&[(2, 1), (2, 2)]), m(&[(3, 1), (3, 2)])]);
        let g = ci_generators(&GridPoint::from([1, 1, 1]), &GridPoint::from([2, 2, 2])).unwrap();
        assert_eq!(g.iter().filter(|m| m.degree() == 2).count(), 3);
        let p = GridPoint::from([2, 1]);
        assert_eq!(
            MonomialIdeal::from_generators(ci_generators(&p, &p).unwrap()),
            point_prime(&p)
        );
        assert!(ci_generators(&p, &GridPoint::from([1])).is_err());
    }

    #[test]
    fn minimalization_drops_multiples() {
        let i = MonomialIdeal::from_generators([m(&[(1, 1), (2, 1)]), m(&[(1, 1)]), m(&[(1, 1)])]);
        assert_eq!(i.generators(), &[m(&[(1, 1)])]);
    }
}
