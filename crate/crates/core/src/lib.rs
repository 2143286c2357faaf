//! Exact global defensive alliance numbers of lexicographic products of paths
//! and cycles.

pub mod cli;
pub mod closed_form;
pub mod engine;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod parts;
pub mod report;
pub mod result;
pub mod verify;
pub mod witness;

pub use error::{Error, Result};
pub use graph::{ComboKind, FactorKind, FactorSpec, ProductSpec, VertexId};
pub use oracle::ValueTable;
pub use parts::PartSequence;
pub use result::{GammaResult, Method};
pub use verify::ColumnSet;
