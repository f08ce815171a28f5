//! Edge-density bounds for H-free graphs with large minimum degree:
//! exact rational evaluation of the bound curves, chromatic-threshold
//! classification, Zykov symmetrization, tightness constructions, and
//! exhaustive finite verification oracles.

pub mod bounds;
pub mod cliques;
pub mod coloring;
pub mod constructions;
pub mod cycles;
pub mod edgelist;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod matching;
pub mod oracle;
pub mod subiso;
pub mod threshold;
pub mod zykov;

pub use error::{GraphError, Result};
pub use graph::Graph;
