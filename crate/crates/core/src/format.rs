//! Text formats: graph6 and the JSON documents exchanged by the CLI.

mod graph6;
pub mod json;

pub use graph6::{emit_graph6, parse_graph6};
pub use json::read_graph;
