//! Decision procedures for arithmetically Cohen–Macaulay (ACM) finite point
//! configurations in `(P^1)^n`.
//!
//! Points are handled purely combinatorially: a point is the tuple of grid
//! hyperplane levels it lies on. On top of that model the crate provides
//!
//! - the `(star_s)` criterion with witness extraction and path lemmas ([`star`]),
//! - level-set decompositions and the inclusion property ([`level`]),
//! - exact multigraded Hilbert functions and first differences ([`hilbert`]),
//! - squarefree monomial ideals in the grid variables ([`monomial`]),
//! - an independent Stanley–Reisner/Reisner-criterion oracle ([`reisner`]),
//! - liaison addition and the layer construction ([`construct`]).
//!
//! Directions are 0-based `usize` indices throughout the API; levels are the
//! 1-based hyperplane indices stored in each [`GridPoint`].

#![no_std]

extern crate alloc;

pub mod construct;
pub mod error;
pub mod grid;
pub mod hilbert;
pub mod level;
pub mod linalg;
pub mod monomial;
pub mod reisner;
pub mod samples;
pub mod star;

pub use error::{Error, Result};
pub use grid::{canonicalize, GridPoint, MultiDegree, PointSet};
