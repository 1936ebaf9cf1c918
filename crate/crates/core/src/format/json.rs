//! JSON documents for graphs, embeddings, colorings and decomposition trees.

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::coloring::{EdgeColoring, FaceColoring};
use crate::decomposition::DecompositionTree;
use crate::embedding::{BookEmbedding, SpineOrder};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Debug, Deserialize)]
struct EmbeddingDoc {
    spine: Vec<usize>,
    pages: Map<String, Value>,
}

pub fn graph_to_json(g: &Graph) -> Value {
    json!({ "n": g.n(), "edges": g.edges() })
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    let doc: GraphDoc = serde_json::from_str(text)?;
    Graph::from_edge_list(doc.n, doc.edges)
}

pub fn edge_key((u, v): Edge) -> String {
    format!("{u}-{v}")
}

pub fn parse_edge_key(key: &str) -> Result<Edge> {
    let bad = || Error::Contract(format!("edge key {key:?} is not of the form \"u-v\""));
    let (a, b) = key.split_once('-').ok_or_else(bad)?;
    let u = a.trim().parse().map_err(|_| bad())?;
    let v = b.trim().parse().map_err(|_| bad())?;
    Ok(crate::graph::edge(u, v))
}

pub fn embedding_to_json(be: &BookEmbedding) -> Value {
    let pages: Map<String, Value> = be
        .pages()
        .iter()
        .map(|&(e, p)| (edge_key(e), Value::from(p)))
        .collect();
    json!({ "spine": be.spine.as_slice(), "pages": pages })
}

pub fn embedding_from_json(text: &str) -> Result<BookEmbedding> {
    let doc: EmbeddingDoc = serde_json::from_str(text)?;
    let pages = doc
        .pages
        .iter()
        .map(|(k, v)| {
            let page = v
                .as_u64()
                .ok_or_else(|| Error::Contract(format!("page of {k} is not a non-negative integer")))?;
            Ok((parse_edge_key(k)?, page as usize))
        })
        .collect::<Result<Vec<_>>>()?;
    BookEmbedding::new(SpineOrder::new(doc.spine)?, pages)
}

/// `{"faces": {"id": "E1"}, "edges": {"u-v": "E1+E2"}}`.
pub fn coloring_to_json(fc: &FaceColoring, ec: &EdgeColoring) -> Value {
    let faces: Map<String, Value> = fc
        .color
        .iter()
        .enumerate()
        .map(|(f, c)| (f.to_string(), Value::from(c.to_string())))
        .collect();
    let edges: Map<String, Value> = ec
        .iter()
        .map(|(e, c)| (edge_key(e), Value::from(c.to_string())))
        .collect();
    json!({ "faces": faces, "edges": edges })
}

pub fn decomposition_to_json(tree: &DecompositionTree) -> Value {
    match tree {
        DecompositionTree::Leaf(leaf) => json!({
            "type": "leaf",
            "kind": leaf.kind,
            "depth": leaf.depth,
            "order": leaf.graph.n(),
            "labels": leaf.labels,
            "graph": graph_to_json(&leaf.graph),
        }),
        DecompositionTree::Join(join) => {
            let r = &join.record;
            json!({
                "type": "join",
                "depth": join.depth,
                "order": join.order,
                "u": r.u,
                "v": r.v,
                "m": r.m,
                "n": r.n,
                "k": r.k(),
                "ladder": r.ladder,
                "left": decomposition_to_json(&join.left),
                "right": decomposition_to_json(&join.right),
            })
        }
    }
}

/// Reads a graph as JSON when the text starts with `{`, else as graph6
/// from the first non-empty line.
pub fn read_graph(text: &str) -> Result<Graph> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        return graph_from_json(trimmed);
    }
    let line = trimmed.lines().next().unwrap_or("");
    super::parse_graph6(line)
}
