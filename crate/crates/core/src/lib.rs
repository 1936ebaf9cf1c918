//! Matching book embeddings of bipartite cubic planar graphs.

pub mod coloring;
pub mod conflict;
pub mod decomposition;
pub mod embedding;
pub mod error;
pub mod format;
pub mod generate;
pub mod graph;
pub mod planar;
pub mod render;
pub mod verify;

pub use coloring::{EdgeColor, EdgeColoring, FaceColor, FaceColoring};
pub use decomposition::{ternary_decompose, DecompositionTree, JoinRecord, Ladder, LeafKind};
pub use embedding::{embed, BookEmbedding, SpineOrder};
pub use error::{Error, Result};
pub use graph::{edge, Bipartition, Edge, Graph, Side};
pub use planar::{planar_embedding, DualGraph, Face, PlanarEmbedding};
pub use verify::{check_structure, mbt_oracle, verify_matching_book_embedding, Mbt, Violation};
