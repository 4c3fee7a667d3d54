//! orbitlab: nilpotent-orbit invariants, admissible levels, and W-algebra
//! data for the simple Lie algebras.
//!
//! The library computes, with exact rational arithmetic throughout:
//!
//! * root systems in Bourbaki coordinates with their Coxeter-type constants
//!   ([`rootsys`]);
//! * nilpotent orbits — partition-classified for the classical types,
//!   a finite catalog with weighted Dynkin data for the exceptional ones —
//!   together with heights, centralizer dimensions, and the distinguished
//!   orbits `O_q` attached to a positive integer `q` ([`orbits`],
//!   [`partitions`]);
//! * admissible levels `k = −h∨ + p/q` and their classification
//!   ([`admissible`]);
//! * the exceptional-pair test for `(q, f)` ([`exceptional`]);
//! * central charges of the associated W-algebras, as exact rationals and as
//!   rational functions of `(p, q)` ([`wchar`], [`charpoly`]);
//! * truncated characters as `q`-series with rational exponents ([`qseries`],
//!   [`wchar`]).

pub mod admissible;
pub mod charpoly;
pub mod cli;
pub mod exceptional;
pub mod matrix;
pub mod orbits;
pub mod output;
pub mod partitions;
pub mod qseries;
pub mod rat;
pub mod rootsys;
pub mod tables;
pub mod wchar;

use thiserror::Error as ThisError;

/// Crate-wide error type.
#[derive(Debug, ThisError)]
pub enum Error {
    #[error("invalid simple type: {0}")]
    InvalidType(String),
    #[error("vector of dimension {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("not a root: {0}")]
    NotARoot(String),
    #[error("invalid partition for this type: {0}")]
    InvalidPartition(String),
    #[error("unknown orbit label: {0}")]
    UnknownOrbit(String),
    #[error("invalid level: {0}")]
    InvalidLevel(String),
    #[error("{0}")]
    Parse(String),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}
