//! d-complete posets: structure detection, diagonals, hook vectors and a
//! toggle-based RSK bijection, with exact rational arithmetic throughout.

pub mod analysis;
pub mod catalog;
pub mod classical;
pub mod diagonals;
pub mod dstructure;
pub mod error;
pub mod extensions;
pub mod format;
pub mod generators;
pub mod hooks;
pub mod poset;
pub mod rational;
pub mod report;
pub mod rsk;
pub mod suite;
pub mod verify;

pub use analysis::Analysis;
pub use diagonals::{compute_diagonals, DiagonalId, DiagonalPartition};
pub use dstructure::{check_d_complete, find_d_intervals, AxiomReport, DInterval, DStructure};
pub use error::{Error, Result};
pub use hooks::{hook_polynomial_eval, hook_vectors, HookVector, RationalPoint};
pub use poset::{Element, ElementSet, LinearExtension, Poset};
pub use rational::Rational;
pub use report::OracleReport;
pub use rsk::{inverse_rsk, rsk, stable_insertion_order, Filling, InsertionOrder};
