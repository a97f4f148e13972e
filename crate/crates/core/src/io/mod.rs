//! Serialization, instance generation and reporting.

pub mod dot;
pub mod generate;
pub mod json;
pub mod plan;

pub use dot::to_dot;
pub use generate::{generate, GenSpec, Topology};
pub use json::{graph_from_json, graph_to_json, read_graph, write_graph, FamilySpec};
pub use plan::{plan, Plan, Role};

use thiserror::Error;

use crate::families::FamilyError;
use crate::graph::GraphError;
use crate::rational::ParseRationalError;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    File {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Number(#[from] ParseRationalError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("bad spec: {0}")]
    BadSpec(String),
}
