//! Finite lattices with negations: construction, exhaustive law checking and
//! classification into the hierarchy of logics.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod formula;
pub mod fuzzy;
pub mod logic;
pub mod order;
pub mod quantum;
pub mod rational;
pub mod report;
pub mod residuation;

pub use error::{Error, Result};
pub use order::{FiniteLattice, FinitePoset};
pub use report::{PropertyReport, Verdict, Witness};
