pub mod canon;
pub mod cli;
pub mod decomposition;
pub mod divisibility;
pub mod error;
pub mod formats;
pub mod graph;
pub mod harness;
pub mod oracles;
pub mod patterns;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
