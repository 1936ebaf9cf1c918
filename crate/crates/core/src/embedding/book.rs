use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};

/// Vertex order along the spine; `order[i]` sits at position `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpineOrder {
    order: Vec<usize>,
}

impl SpineOrder {
    /// Wraps a sequence of distinct vertices.
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(order.len());
        if let Some(&dup) = order.iter().find(|&&v| !seen.insert(v)) {
            return Err(Error::Contract(format!("vertex {dup} repeated on the spine")));
        }
        Ok(Self { order })
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Checks the order is a permutation of the vertices of `g`.
    pub fn require_bijection(&self, g: &Graph) -> Result<()> {
        if self.order.len() != g.n() || self.order.iter().any(|&v| v >= g.n()) {
            return Err(Error::Contract(format!(
                "spine of length {} is not a permutation of {} vertices",
                self.order.len(),
                g.n()
            )));
        }
        Ok(())
    }

    /// `pos[v]` for every vertex id up to the largest one on the spine;
    /// absent ids map to `usize::MAX`.
    pub fn positions(&self) -> Vec<usize> {
        let size = self.order.iter().max().map_or(0, |&m| m + 1);
        let mut pos = vec![usize::MAX; size];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.order.iter().position(|&w| w == v)
    }

    /// Cyclic rotation: `rotate([a,b,c], 1) == [b,c,a]`.
    pub fn rotate(&self, steps: usize) -> Self {
        let mut order = self.order.clone();
        if !order.is_empty() {
            let k = steps % order.len();
            order.rotate_left(k);
        }
        Self { order }
    }

    pub fn reversed(&self) -> Self {
        let mut order = self.order.clone();
        order.reverse();
        Self { order }
    }

    /// Rotation that puts `v` at the last position.
    pub fn ending_with(&self, v: usize) -> Option<Self> {
        self.position(v).map(|i| self.rotate(i + 1))
    }

    /// Rotation that puts `v` at the first position.
    pub fn starting_with(&self, v: usize) -> Option<Self> {
        self.position(v).map(|i| self.rotate(i))
    }

    /// Relabels vertices through `map[v]`.
    pub fn mapped(&self, map: &[usize]) -> Self {
        Self {
            order: self.order.iter().map(|&v| map[v]).collect(),
        }
    }
}

/// A spine order plus a page index per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BookEmbedding {
    pub spine: SpineOrder,
    pages: Vec<(Edge, usize)>,
}

impl BookEmbedding {
    /// Builds an embedding from `(edge, page)` pairs; duplicate edges are
    /// rejected.
    pub fn new<I: IntoIterator<Item = (Edge, usize)>>(spine: SpineOrder, pages: I) -> Result<Self> {
        let mut pages: Vec<(Edge, usize)> =
            pages.into_iter().map(|((u, v), p)| (edge(u, v), p)).collect();
        pages.sort_unstable();
        if let Some(w) = pages.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::Contract(format!("edge {:?} assigned twice", w[0].0)));
        }
        Ok(Self { spine, pages })
    }

    pub fn page(&self, u: usize, v: usize) -> Option<usize> {
        let e = edge(u, v);
        self.pages
            .binary_search_by_key(&e, |&(f, _)| f)
            .ok()
            .map(|i| self.pages[i].1)
    }

    pub fn pages(&self) -> &[(Edge, usize)] {
        &self.pages
    }

    /// Number of distinct pages carrying at least one edge.
    pub fn page_count(&self) -> usize {
        let mut used: Vec<usize> = self.pages.iter().map(|&(_, p)| p).collect();
        used.sort_unstable();
        used.dedup();
        used.len()
    }

    /// The graph spelled out by the spine and the paged edges.
    pub fn graph(&self) -> Result<Graph> {
        let n = self.spine.as_slice().iter().max().map_or(0, |&m| m + 1);
        Graph::from_edge_list(n, self.pages.iter().map(|&(e, _)| e))
    }

    pub fn with_spine(&self, spine: SpineOrder) -> Self {
        Self {
            spine,
            pages: self.pages.clone(),
        }
    }

    /// Relabels pages through `perm[page]`.
    pub fn with_pages_permuted(&self, perm: &[usize]) -> Self {
        Self {
            spine: self.spine.clone(),
            pages: self.pages.iter().map(|&(e, p)| (e, perm[p])).collect(),
        }
    }
}
