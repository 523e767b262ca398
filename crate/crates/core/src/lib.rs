//! Nuclei, Elser numbers and nucleus complexes of small multigraphs.

pub mod cli;
pub mod complex;
pub mod error;
pub mod graph;
pub mod nucleus;
pub mod recurrence;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
