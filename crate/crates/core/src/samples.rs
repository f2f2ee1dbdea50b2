//! Reference configurations in `(P^1)^3`.

use alloc::vec::Vec;

use crate::grid::{canonicalize, PointSet};

fn build(points: &[[i64; 3]]) -> PointSet {
    let raw: Vec<Vec<i64>> = points.iter().map(|p| p.to_vec()).collect();
    canonicalize(&raw).expect("reference data is well formed")
}

/// Liaison addition of `(1,1,1)`, `(2,2,2)`, `(3,3,3)` with forms supported
/// on `{2,3}`, `{1,3}`, `{1,2}`: three summands plus the 8 points of
/// `{2,3} x {1,3} x {1,2}`. ACM without the inclusion property.
pub fn eleven_point_liaison() -> PointSet {
    build(&ELEVEN_POINTS)
}

pub const ELEVEN_POINTS: [[i64; 3]; 11] = [
    [1, 1, 1],
    [2, 2, 2],
    [3, 3, 3],
    [2, 1, 1],
    [2, 1, 2],
    [2, 3, 1],
    [2, 3, 2],
    [3, 1, 1],
    [3, 1, 2],
    [3, 3, 1],
    [3, 3, 2],
];

/// [`eleven_point_liaison`] with `(2,2,2)` moved to `(3,2,2)` in the third
/// level of direction 1. Same Hilbert function, but with the inclusion
/// property.
pub fn moved_point_variant() -> PointSet {
    let mut pts = ELEVEN_POINTS;
    pts[1] = [3, 2, 2];
    build(&pts)
}

/// `{1,2}^3` minus the antipodal corners `(1,1,1)` and `(2,2,2)`: satisfies
/// `(star_2)` but not `(star_3)`.
pub fn six_point_cube() -> PointSet {
    build(&[
        [1, 1, 2],
        [1, 2, 1],
        [1, 2, 2],
        [2, 1, 1],
        [2, 1, 2],
        [2, 2, 1],
    ])
}

/// Twelve points on a `4 x 3 x 3` grid with 1-level sets of sizes 1, 1, 4, 6
/// whose projections form a chain; the 2- and 3-level sets do not.
pub fn twelve_point_chain() -> PointSet {
    build(&TWELVE_POINTS)
}

pub const TWELVE_POINTS: [[i64; 3]; 12] = [
    [1, 1, 3],
    [2, 1, 3],
    [3, 1, 2],
    [3, 1, 3],
    [3, 3, 2],
    [3, 3, 3],
    [4, 1, 2],
    [4, 1, 3],
    [4, 2, 2],
    [4, 3, 1],
    [4, 3, 2],
    [4, 3, 3],
];
