//! Information-symbol locally repairable codes with availability.
//!
//! Finite-field and matrix arithmetic, the two incidence-matrix
//! constructions, locality certificates, exact minimum distance, bound
//! calculators, puncturing, and a shard-store repair simulator.

pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod distance;
pub mod field;
pub mod lrc;
pub mod matrix;
pub mod par;
pub mod puncture;
pub mod repair;

pub use field::{Elem, FieldSpec};
pub use lrc::{check_islrc, IslrcCertificate, StandardParityCheck};
pub use matrix::GfMatrix;
pub use par::Exec;
