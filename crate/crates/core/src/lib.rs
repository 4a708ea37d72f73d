//! Spectral radius, toughness, and hamiltonicity toolkit for small graphs.
//!
//! The crate builds the extremal families `K_s v (K_a u ...)`, `M_n`, and
//! friends, computes adjacency spectra with an in-crate symmetric
//! eigensolver, handles equitable partitions and their quotient matrices,
//! decides exact toughness and hamiltonicity, and runs verification
//! harnesses over exhaustive or randomized graph streams.

pub mod enumerate;
mod error;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod partitions;
pub mod spectral;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
pub use family::{construct, FamilySpec};
pub use graph::Graph;
pub use graph6::{parse_graph6, write_graph6, Graph6Reader};
