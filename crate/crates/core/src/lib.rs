//! Exact representation-theoretic engine for equivariant embeddings of real
//! and complex flag manifolds.
//!
//! Everything in this crate is exact integer or rational arithmetic and runs
//! without `std`; it only needs a global allocator. Floating-point sampling,
//! caching, report serialization and the command-line front end live in the
//! companion `flagdim` crate.
//!
//! Layout:
//!
//! * [`rootsys`]: root systems of type A, B, D in the usual orthonormal
//!   coordinates, and validated dominant weights.
//! * [`weyldim`]: per-family product formulas and the generic Weyl formula.
//! * [`multiplicity`]: Freudenthal weight-multiplicity tables.
//! * [`fixedpoints`]: dimension of the subspace fixed by the diagonal subgroup.
//! * [`classify`]: bounded enumeration of dominant weights and the
//!   candidate / theorem-level checks built on it.
//! * [`isospectral`]: the isospectral matrix models, exact stabilizer and orbit
//!   dimensions, and harmonic polynomials in three variables.
#![no_std]

extern crate alloc;

pub mod classify;
mod error;
pub mod fixedpoints;
pub mod isospectral;
pub mod linalg;
pub mod multiplicity;
pub mod rootsys;
pub mod weyldim;

pub use error::{Error, Result};
pub use rootsys::{DominantWeight, Family, RootSystem};
pub use weyldim::RepDimension;
