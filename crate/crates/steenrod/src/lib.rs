//! Exact mod-2 machinery for cup-i products on simplicial cochains.
//!
//! The crate computes with normalized chains and cochains of finite simplicial
//! complexes over the two-element field, entirely with exact set arithmetic:
//!
//! - [`f2`]: sparse vectors, matrices, rank/kernel/image and quotient bases over F₂.
//! - [`simplicial`]: the simplex category's generators, standard simplices, finite
//!   complexes, boundary/coboundary, and transport along simplicial maps.
//! - [`cupi`]: cup-i products built from partitioned composite face maps, together
//!   with the [`cupi::DiagonalFamily`] trait shared by every construction.
//! - [`classic`]: Steenrod's original cup-i construction from the Alexander-Whitney
//!   diagonal and the join map.
//! - [`checks`]: exhaustive desk-scale verification of the structural properties a
//!   cup-i construction must satisfy (chain map, non-degeneracy, freeness,
//!   naturality) and elementwise comparison of two constructions.
//! - [`cohomology`]: mod-2 cohomology of finite complexes, the cup product on
//!   classes, and Steenrod square matrices.
//!
//! Everything is deterministic: all iteration runs over ordered sets, so equal
//! inputs produce byte-identical serialized outputs.

pub mod checks;
pub mod classic;
pub mod cohomology;
pub mod cupi;
pub mod f2;
pub mod simplicial;

pub use cupi::DiagonalFamily;
pub use f2::F2Vector;
pub use simplicial::{Chain, Cochain, Simplex, SimplicialComplex};
