//! Exact homological invariants of bound quiver algebras and their idempotent
//! corner algebras.
//!
//! The crate builds a finite-dimensional basic algebra `A = kQ/I` from a
//! quiver with length-homogeneous relations, computes minimal projective
//! resolutions, Ext tables, projective/injective/global dimensions, the
//! corner algebra `G = (1-e)A(1-e)` with its reduction functor, and verifies
//! a family of homological bounds on fixtures and on seeded random algebras.
//!
//! Path composition is right to left: in the word `d*g`, the arrow `g` is
//! applied first. This matches the convention in which `e_i A` is spanned by
//! the paths ending at vertex `i`.

pub mod algebra;
pub mod cli;
pub mod corner;
pub mod dsl;
pub mod error;
pub mod field;
pub mod groebner;
pub mod homology;
pub mod matrix;
pub mod module;
pub mod quiver;
pub mod skewgroup;
pub mod verify;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
