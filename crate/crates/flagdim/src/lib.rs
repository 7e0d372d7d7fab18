//! Std companion to `flagdim-core`: memoized dimensions, seeded numerical
//! checks of the isospectral embedding, report serialization and the
//! `flagdim` command line.

pub mod cache;
pub mod cli;
pub mod numeric;
pub mod report;

pub use flagdim_core as core;
