//! Ground truth for matching book embeddings: a verifier and an exhaustive
//! oracle for the matching book thickness of small graphs.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::conflict::{span, spans_cross, Coloring, ConflictGraph};
use crate::embedding::{embed, BookEmbedding, SpineOrder};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Largest order the oracle accepts unless told otherwise.
pub const DEFAULT_ORACLE_LIMIT: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    /// Two edges on one page whose endpoints interleave along the spine.
    Crossing {
        page: usize,
        first: Edge,
        second: Edge,
    },
    /// A vertex with more than one edge on a page.
    MatchingDegree {
        vertex: usize,
        page: usize,
        edges: Vec<Edge>,
    },
    /// An edge placed on a page index outside the allowed range.
    PageBound { edge: Edge, page: usize },
}

/// Whether two edges cross on the spine. Edges sharing an endpoint never
/// cross; the matching rule handles them.
pub fn edges_cross(spine: &SpineOrder, e1: Edge, e2: Edge) -> bool {
    let pos = spine.positions();
    let (a, b) = span(&pos, e1);
    let (c, d) = span(&pos, e2);
    spans_cross(a, b, c, d)
}

/// Lists every violation of `be` as a matching book embedding of `g` in at
/// most `pages` pages. An empty list means the embedding is valid.
pub fn verify_matching_book_embedding(
    g: &Graph,
    be: &BookEmbedding,
    pages: usize,
) -> Result<Vec<Violation>> {
    be.spine.require_bijection(g)?;
    for &e in g.edges() {
        if be.page(e.0, e.1).is_none() {
            return Err(Error::Contract(format!("edge {e:?} has no page")));
        }
    }
    if let Some(&(e, _)) = be.pages().iter().find(|&&((u, v), _)| !g.has_edge(u, v)) {
        return Err(Error::Contract(format!("page assigned to non-edge {e:?}")));
    }

    let pos = be.spine.positions();
    let mut violations = Vec::new();
    let mut by_page: Vec<Vec<Edge>> = Vec::new();
    for &(e, p) in be.pages() {
        if p >= pages {
            violations.push(Violation::PageBound { edge: e, page: p });
        }
        if by_page.len() <= p {
            by_page.resize(p + 1, Vec::new());
        }
        by_page[p].push(e);
    }
    for (page, edges) in by_page.iter().enumerate() {
        let mut at_vertex: Vec<Vec<Edge>> = vec![Vec::new(); g.n()];
        for &e in edges {
            at_vertex[e.0].push(e);
            at_vertex[e.1].push(e);
        }
        for (vertex, incident) in at_vertex.into_iter().enumerate() {
            if incident.len() > 1 {
                violations.push(Violation::MatchingDegree {
                    vertex,
                    page,
                    edges: incident,
                });
            }
        }
        for (i, &e1) in edges.iter().enumerate() {
            let (a, b) = span(&pos, e1);
            for &e2 in &edges[i + 1..] {
                let (c, d) = span(&pos, e2);
                if spans_cross(a, b, c, d) {
                    violations.push(Violation::Crossing {
                        page,
                        first: e1,
                        second: e2,
                    });
                }
            }
        }
    }
    Ok(violations)
}

/// Convenience wrapper: valid iff no violations.
pub fn is_valid_embedding(g: &Graph, be: &BookEmbedding, pages: usize) -> bool {
    matches!(verify_matching_book_embedding(g, be, pages), Ok(v) if v.is_empty())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mbt {
    Exact(usize),
    ExceedsBound,
}

/// Exact matching book thickness with the default size limit.
pub fn mbt_oracle(g: &Graph, page_bound: usize) -> Result<Mbt> {
    mbt_oracle_with_limit(g, page_bound, DEFAULT_ORACLE_LIMIT)
}

/// Exact matching book thickness by enumerating spine orders.
///
/// Vertex 0 is pinned to the first position and of each mirror pair only
/// the order whose second vertex is smaller than its last is visited, so
/// `(n-1)!/2` orders are examined. Each order's conflict graph is colored
/// exactly. Returns [`Mbt::ExceedsBound`] when no order fits in
/// `page_bound` pages.
pub fn mbt_oracle_with_limit(g: &Graph, page_bound: usize, limit: usize) -> Result<Mbt> {
    let n = g.n();
    if n > limit {
        return Err(Error::OracleLimit { n, limit });
    }
    if g.edge_count() == 0 {
        return Ok(Mbt::Exact(0));
    }
    let lower = g.max_degree();
    let cap = page_bound.min(64);
    if lower > cap {
        return Ok(Mbt::ExceedsBound);
    }
    // best holds the smallest page count found so far, cap + 1 if none
    let best = AtomicUsize::new(cap + 1);
    if n <= 3 {
        let order: Vec<usize> = (0..n).collect();
        try_order(g, &order, lower, &best);
    } else {
        (1..n).into_par_iter().for_each(|second| {
            let mut order = vec![0, second];
            let mut used = vec![false; n];
            used[0] = true;
            used[second] = true;
            permute(g, &mut order, &mut used, lower, &best);
        });
    }
    let found = best.load(Ordering::SeqCst);
    Ok(if found > cap {
        Mbt::ExceedsBound
    } else {
        Mbt::Exact(found)
    })
}

fn permute(g: &Graph, order: &mut Vec<usize>, used: &mut [bool], lower: usize, best: &AtomicUsize) {
    if best.load(Ordering::Relaxed) <= lower {
        return;
    }
    let n = g.n();
    if order.len() == n {
        if order[n - 1] > order[1] {
            try_order(g, order, lower, best);
        }
        return;
    }
    for v in 1..n {
        if used[v] {
            continue;
        }
        used[v] = true;
        order.push(v);
        permute(g, order, used, lower, best);
        order.pop();
        used[v] = false;
    }
}

fn try_order(g: &Graph, order: &[usize], lower: usize, best: &AtomicUsize) {
    let current = best.load(Ordering::Relaxed);
    if current <= lower {
        return;
    }
    let spine = SpineOrder::new(order.to_vec()).expect("permutation");
    let cg = ConflictGraph::new(g, &spine);
    if let Some(k) = cg.chromatic_number_in(lower, current) {
        best.fetch_min(k, Ordering::SeqCst);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Witness {
    Oracle,
    Pipeline,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub max_degree: usize,
    pub pages: usize,
    pub witness: Witness,
    pub dispersable: bool,
}

/// Compares the best page count found against the maximum degree: by the
/// oracle when the graph is small enough, otherwise by the constructive
/// pipeline (bipartite cubic planar inputs only).
pub fn dispersability_check(g: &Graph) -> Result<Verdict> {
    let max_degree = g.max_degree();
    let (pages, witness) = if g.n() <= DEFAULT_ORACLE_LIMIT {
        match mbt_oracle(g, g.edge_count().max(1))? {
            Mbt::Exact(p) => (p, Witness::Oracle),
            Mbt::ExceedsBound => return Err(Error::Internal("oracle exceeded |E| pages".into())),
        }
    } else {
        let be = embed(g)?;
        (be.page_count(), Witness::Pipeline)
    };
    Ok(Verdict {
        max_degree,
        pages,
        witness,
        dispersable: pages == max_degree,
    })
}

/// Structural predicates of a graph, as printed by `bcpbook check`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub n: usize,
    pub edges: usize,
    pub connected: bool,
    pub cubic: bool,
    pub bipartite: bool,
    pub planar: bool,
    pub edge_connectivity: usize,
    pub vertex_connectivity: usize,
    pub bcp: bool,
}

pub fn check_structure(g: &Graph) -> Result<StructureReport> {
    let connected = g.is_connected();
    let cubic = g.is_cubic();
    let bipartite = g.is_bipartite();
    let planar = crate::planar::is_planar(g);
    Ok(StructureReport {
        n: g.n(),
        edges: g.edge_count(),
        connected,
        cubic,
        bipartite,
        planar,
        edge_connectivity: g.edge_connectivity()?,
        vertex_connectivity: g.vertex_connectivity()?,
        bcp: connected && cubic && bipartite && planar,
    })
}

/// Recolors the conflict graph of `spine` with at most `pages` colors,
/// keeping any precolored edges.
pub fn exact_pages(
    g: &Graph,
    spine: &SpineOrder,
    pages: usize,
    fixed: &[Option<usize>],
    budget: u64,
) -> Coloring {
    ConflictGraph::new(g, spine).color(pages, fixed, budget)
}
