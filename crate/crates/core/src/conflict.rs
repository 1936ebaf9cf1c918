//! Exact coloring of the conflict graph of a spine order.
//!
//! Vertices of the conflict graph are the edges of the input graph; two of
//! them conflict when they share an endpoint or cross on the spine. Proper
//! colorings are exactly matching book embeddings on that spine, one page
//! per color.

use crate::embedding::SpineOrder;
use crate::graph::{Edge, Graph};

/// True iff spans `(a,b)` and `(c,d)` (each sorted) strictly interleave.
#[inline]
pub(crate) fn spans_cross(a: usize, b: usize, c: usize, d: usize) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

#[inline]
pub(crate) fn span(pos: &[usize], (u, v): Edge) -> (usize, usize) {
    let (p, q) = (pos[u], pos[v]);
    if p < q {
        (p, q)
    } else {
        (q, p)
    }
}

#[derive(Clone, Debug)]
pub struct ConflictGraph {
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

/// Result of a bounded coloring search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coloring {
    Found(Vec<usize>),
    Impossible,
    BudgetExceeded,
}

impl ConflictGraph {
    pub fn new(g: &Graph, spine: &SpineOrder) -> Self {
        let pos = spine.positions();
        let edges = g.edges().to_vec();
        let spans: Vec<(usize, usize)> = edges.iter().map(|&e| span(&pos, e)).collect();
        let m = edges.len();
        let mut adj = vec![Vec::new(); m];
        for i in 0..m {
            for j in i + 1..m {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                let touch = a == c || a == d || b == c || b == d;
                let (p, q) = spans[i];
                let (r, s) = spans[j];
                if touch || spans_cross(p, q, r, s) {
                    adj[i].push(j);
                    adj[j].push(i);
                }
            }
        }
        Self { edges, adj }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Searches for a proper coloring with at most `k` colors (`k ≤ 64`)
    /// extending the precolored entries of `fixed`, visiting at most
    /// `budget` search nodes.
    pub fn color(&self, k: usize, fixed: &[Option<usize>], budget: u64) -> Coloring {
        assert!(k <= 64, "at most 64 colors");
        let m = self.edges.len();
        if m == 0 {
            return Coloring::Found(Vec::new());
        }
        if k == 0 {
            return Coloring::Impossible;
        }
        let full: u64 = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        let mut state = State {
            domain: vec![full; m],
            color: vec![usize::MAX; m],
            nodes: 0,
            budget,
            symmetric: fixed.iter().all(Option::is_none),
        };
        for (i, f) in fixed.iter().enumerate() {
            if let Some(c) = *f {
                if c >= k || !state.set(&self.adj, i, c) {
                    return Coloring::Impossible;
                }
            }
        }
        match state.search(&self.adj, 0) {
            Some(true) => Coloring::Found(state.color),
            Some(false) => Coloring::Impossible,
            None => Coloring::BudgetExceeded,
        }
    }

    /// Smallest `k` in `lower..upper` admitting a proper coloring, with no
    /// node budget.
    pub fn chromatic_number_in(&self, lower: usize, upper: usize) -> Option<usize> {
        (lower..upper).find(|&k| matches!(self.color(k, &[], u64::MAX), Coloring::Found(_)))
    }
}

struct State {
    domain: Vec<u64>,
    color: Vec<usize>,
    nodes: u64,
    budget: u64,
    symmetric: bool,
}

impl State {
    fn set(&mut self, adj: &[Vec<usize>], v: usize, c: usize) -> bool {
        if self.domain[v] & (1 << c) == 0 {
            return false;
        }
        self.color[v] = c;
        self.domain[v] = 1 << c;
        adj[v].iter().all(|&w| {
            if self.color[w] == usize::MAX {
                self.domain[w] &= !(1u64 << c);
                self.domain[w] != 0
            } else {
                self.color[w] != c
            }
        })
    }

    /// `Some(found)` when the subtree was exhausted or solved, `None` when
    /// the node budget ran out.
    fn search(&mut self, adj: &[Vec<usize>], used: usize) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        // DSatur: smallest domain, then most neighbors
        let pick = (0..self.color.len())
            .filter(|&v| self.color[v] == usize::MAX)
            .min_by_key(|&v| (self.domain[v].count_ones(), usize::MAX - adj[v].len()));
        let Some(v) = pick else {
            return Some(true);
        };
        let mut options = self.domain[v];
        if self.symmetric && used < 64 {
            // unused colors are interchangeable: try only the first of them
            options &= (1u64 << (used + 1)) - 1;
        }
        while options != 0 {
            let c = options.trailing_zeros() as usize;
            options &= options - 1;
            let saved_domain = self.domain.clone();
            let saved_color = self.color.clone();
            if self.set(adj, v, c) {
                match self.search(adj, used.max(c + 1)) {
                    Some(true) => return Some(true),
                    None => return None,
                    Some(false) => {}
                }
            }
            self.domain = saved_domain;
            self.color = saved_color;
        }
        Some(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interleaving_spans() {
        assert!(spans_cross(0, 2, 1, 3));
        assert!(spans_cross(1, 3, 0, 2));
        assert!(!spans_cross(0, 3, 1, 2));
        assert!(!spans_cross(0, 1, 2, 3));
        assert!(!spans_cross(0, 2, 2, 3));
    }

    #[test]
    fn cycle_on_its_own_order_needs_two_pages() {
        let c4 = Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let cg = ConflictGraph::new(&c4, &SpineOrder::new(vec![0, 1, 2, 3]).unwrap());
        assert_eq!(cg.chromatic_number_in(1, 5), Some(2));
        // on 0,2,1,3 the edges (0,1) and (2,3) cross, closing a triangle
        let cg = ConflictGraph::new(&c4, &SpineOrder::new(vec![0, 2, 1, 3]).unwrap());
        assert_eq!(cg.chromatic_number_in(1, 5), Some(3));
    }

    #[test]
    fn precolored_entries_are_respected() {
        let path = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        let cg = ConflictGraph::new(&path, &SpineOrder::new(vec![0, 1, 2]).unwrap());
        match cg.color(2, &[Some(1), None], 1000) {
            Coloring::Found(c) => assert_eq!(c, vec![1, 0]),
            other => panic!("{other:?}"),
        }
        assert_eq!(cg.color(2, &[Some(1), Some(1)], 1000), Coloring::Impossible);
        assert_eq!(cg.color(1, &[], 1000), Coloring::Impossible);
    }

    #[test]
    fn budget_is_reported() {
        let k4 = Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let cg = ConflictGraph::new(&k4, &SpineOrder::new(vec![0, 1, 2, 3]).unwrap());
        assert_eq!(cg.color(3, &[], 1), Coloring::BudgetExceeded);
    }
}
