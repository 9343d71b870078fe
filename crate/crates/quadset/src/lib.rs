//! Finite set-theoretic solutions of the Yang-Baxter equation and the
//! algebraic objects they generate.
//!
//! The crate is organized around [`qset::QuadraticSet`], a finite set with a
//! bijection of its square. From there:
//!
//! - [`qset`] evaluates the pointwise properties (nondegeneracy,
//!   involutivity, the braid conditions, cyclic conditions, and friends);
//! - [`orbits`] enumerates orbits of words under the adjacent-pair maps,
//!   which count the graded dimensions of the associated quadratic algebra;
//! - [`algebra`] builds the reduced binomial presentation, its dual, exact
//!   low-degree dimensions, and degree-bounded noncommutative Groebner bases;
//! - [`racks`] covers self-distributive solutions (racks and quandles);
//! - [`monoid`] verifies the matched-pair structure, bounded cancellativity
//!   and power identities of the associated graded monoid;
//! - [`extensions`] builds two-part extensions and checks twisted-union and
//!   mixed braid conditions for split solutions;
//! - [`search`] enumerates and classifies small solutions up to isomorphism;
//! - [`solfile`] is the on-disk JSON format used by the command-line tool.

pub mod algebra;
pub mod extensions;
pub mod fixtures;
pub mod monoid;
pub mod orbits;
pub mod perm;
pub mod qset;
pub mod racks;
pub mod search;
pub mod solfile;

pub use perm::Permutation;
pub use qset::{check_conditions, PropertyReport, QuadraticSet};
