//! Simple undirected graphs with dense vertex ids, structural predicates and
//! brute-force connectivity.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An undirected edge, always stored as `(min, max)`.
pub type Edge = (usize, usize);

/// Normalizes an unordered vertex pair to `(min, max)`.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Simple undirected graph on vertices `0..n`.
///
/// Edges are kept sorted and deduplicated; adjacency lists are sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from vertex pairs. Duplicate pairs collapse into one
    /// edge; loops and out-of-range endpoints are rejected.
    pub fn from_edge_list<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut edges = Vec::new();
        for (u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            edges.push(edge(u, v));
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self { n, edges, adj })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Index of an edge in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&edge(u, v)).ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_cubic(&self) -> bool {
        self.n > 0 && self.adj.iter().all(|a| a.len() == 3)
    }

    /// Returns the first vertex whose degree is not 3.
    pub fn require_cubic(&self) -> Result<()> {
        match self.adj.iter().position(|a| a.len() != 3) {
            Some(vertex) => Err(Error::NotCubic {
                vertex,
                degree: self.adj[vertex].len(),
            }),
            None if self.n == 0 => Err(Error::NotCubic {
                vertex: 0,
                degree: 0,
            }),
            None => Ok(()),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.reach(0, &[], &[]) == self.n
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Number of vertices reachable from `start`, ignoring the edges at the
    /// given indices and the flagged vertices.
    fn reach(&self, start: usize, skip_edges: &[usize], skip_vertex: &[bool]) -> usize {
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if seen[w] || skip_vertex.get(w).copied().unwrap_or(false) {
                    continue;
                }
                if !skip_edges.is_empty() {
                    let idx = self.edge_index(u, w).expect("adjacent");
                    if skip_edges.contains(&idx) {
                        continue;
                    }
                }
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
        count
    }

    /// Connected components as a per-vertex component id, ignoring the edges
    /// at the given indices.
    pub fn components_without(&self, skip_edges: &[usize]) -> (usize, Vec<usize>) {
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if comp[w] != usize::MAX {
                        continue;
                    }
                    let idx = self.edge_index(u, w).expect("adjacent");
                    if skip_edges.contains(&idx) {
                        continue;
                    }
                    comp[w] = count;
                    queue.push_back(w);
                }
            }
            count += 1;
        }
        (count, comp)
    }

    /// Proper 2-coloring by breadth-first traversal.
    pub fn bipartition(&self) -> Result<Bipartition> {
        let mut side: Vec<Option<Side>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(Side::A);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].expect("colored");
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(su.other());
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return Err(Error::NotBipartite(w)),
                        Some(_) => {}
                    }
                }
            }
        }
        Ok(Bipartition {
            side: side.into_iter().map(|s| s.expect("colored")).collect(),
        })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_ok()
    }

    /// Edge connectivity by exhaustive search over edge subsets of size
    /// below the minimum degree; since κ′ ≤ δ, δ is returned when no smaller
    /// cut exists. Intended for graphs of maximum degree at most 3, where at
    /// most pairs are enumerated.
    pub fn edge_connectivity(&self) -> Result<usize> {
        self.require_connected()?;
        if self.n <= 1 {
            return Ok(0);
        }
        let delta = self.min_degree();
        let m = self.edges.len();
        let mut chosen = Vec::new();
        for k in 1..delta {
            if any_subset(m, k, &mut chosen, &mut |set| self.reach(0, set, &[]) < self.n) {
                return Ok(k);
            }
        }
        Ok(delta)
    }

    /// Vertex connectivity by exhaustive search over vertex subsets of size
    /// below the minimum degree (κ ≤ δ holds for every graph).
    pub fn vertex_connectivity(&self) -> Result<usize> {
        self.require_connected()?;
        if self.n <= 1 {
            return Ok(0);
        }
        let delta = self.min_degree();
        let mut chosen = Vec::new();
        let mut removed = vec![false; self.n];
        for k in 1..delta {
            let disconnects = any_subset(self.n, k, &mut chosen, &mut |set| {
                if set.len() + 2 > self.n {
                    return false;
                }
                removed.iter_mut().for_each(|r| *r = false);
                for &v in set {
                    removed[v] = true;
                }
                let start = (0..self.n).find(|&v| !removed[v]).expect("vertex left");
                self.reach(start, &[], &removed) < self.n - set.len()
            });
            if disconnects {
                return Ok(k);
            }
        }
        Ok(delta)
    }

    /// All bridges, by brute force.
    pub fn bridges(&self) -> Vec<Edge> {
        (0..self.edges.len())
            .filter(|&i| self.reach(0, &[i], &[]) < self.n)
            .map(|i| self.edges[i])
            .collect()
    }

    /// Returns a copy with one more edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        Self::from_edge_list(self.n, self.edges.iter().copied().chain([(u, v)]))
    }

    /// Returns a copy without the listed edges (absent ones are ignored).
    pub fn without_edges(&self, removed: &[Edge]) -> Self {
        let removed: Vec<Edge> = removed.iter().map(|&(u, v)| edge(u, v)).collect();
        Self::from_edge_list(
            self.n,
            self.edges.iter().copied().filter(|e| !removed.contains(e)),
        )
        .expect("subgraph of a valid graph")
    }

    /// Induced subgraph on `vertices`, relabeled densely in the given order.
    /// Returns the subgraph together with the local → original labels.
    pub fn induced(&self, vertices: &[usize]) -> (Self, Vec<usize>) {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let pairs = self
            .edges
            .iter()
            .filter(|&&(u, v)| local[u] != usize::MAX && local[v] != usize::MAX)
            .map(|&(u, v)| (local[u], local[v]));
        let g = Self::from_edge_list(vertices.len(), pairs).expect("induced subgraph");
        (g, vertices.to_vec())
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::Contract(format!(
                "permutation of length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        Self::from_edge_list(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }
}

/// Enumerates `k`-subsets of `0..m` in lexicographic order until `pred`
/// returns true.
fn any_subset(
    m: usize,
    k: usize,
    chosen: &mut Vec<usize>,
    pred: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    fn go(
        start: usize,
        m: usize,
        k: usize,
        chosen: &mut Vec<usize>,
        pred: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if chosen.len() == k {
            return pred(chosen);
        }
        for i in start..m {
            if m - i < k - chosen.len() {
                break;
            }
            chosen.push(i);
            let hit = go(i + 1, m, k, chosen, pred);
            chosen.pop();
            if hit {
                return true;
            }
        }
        false
    }
    chosen.clear();
    go(0, m, k, chosen, pred)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Self {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub side: Vec<Side>,
}

impl Bipartition {
    pub fn part_sizes(&self) -> (usize, usize) {
        let a = self.side.iter().filter(|&&s| s == Side::A).count();
        (a, self.side.len() - a)
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.side.len() == g.n() && g.edges().iter().all(|&(u, v)| self.side[u] != self.side[v])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cube() -> Graph {
        // vertices are 3-bit coordinates, edges flip one bit
        let pairs = (0..8usize)
            .flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b))))
            .filter(|&(u, v)| u < v);
        Graph::from_edge_list(8, pairs).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn k33() -> Graph {
        Graph::from_edge_list(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap()
    }

    #[test]
    fn edge_list_construction() {
        let g = Graph::from_edge_list(2, [(0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        let g = Graph::from_edge_list(3, [(1, 0), (0, 1), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert!(matches!(
            Graph::from_edge_list(3, [(0, 0)]),
            Err(Error::LoopEdge(0))
        ));
        assert!(matches!(
            Graph::from_edge_list(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn cube_is_cubic() {
        let q3 = cube();
        assert_eq!(q3.edge_count(), 12);
        assert!((0..8).all(|v| q3.degree(v) == 3));
        assert!(q3.is_cubic());
        assert!(!cycle(4).is_cubic());
        assert!(!Graph::from_edge_list(2, [(0, 1)]).unwrap().is_cubic());
    }

    #[test]
    fn bipartitions() {
        let b = cycle(6).bipartition().unwrap();
        assert!((0..6).all(|i| b.side[i] != b.side[(i + 1) % 6]));
        assert!(matches!(cycle(5).bipartition(), Err(Error::NotBipartite(_))));
        let q3 = cube();
        let b = q3.bipartition().unwrap();
        assert_eq!(b.part_sizes(), (4, 4));
        // parts are the coordinate parity classes
        for v in 0..8usize {
            assert_eq!(b.side[v] == b.side[0], v.count_ones() % 2 == 0);
        }
    }

    #[test]
    fn connectivity_examples() {
        let q3 = cube();
        assert_eq!(q3.edge_connectivity().unwrap(), 3);
        assert_eq!(q3.vertex_connectivity().unwrap(), 3);
        assert_eq!(k33().vertex_connectivity().unwrap(), 3);
        let path = Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(path.edge_connectivity().unwrap(), 1);
        assert_eq!(path.bridges().len(), 3);
        let split = Graph::from_edge_list(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(split.edge_connectivity(), Err(Error::Disconnected)));
        assert!(matches!(split.vertex_connectivity(), Err(Error::Disconnected)));
    }

    #[test]
    fn two_cubes_joined_directly() {
        // cube minus (0,1) and a shifted cube minus (8,9), rewired 0-8, 1-9
        let q3 = cube();
        let mut pairs: Vec<Edge> = q3.edges().iter().copied().filter(|&e| e != (0, 1)).collect();
        pairs.extend(
            q3.edges()
                .iter()
                .filter(|&&e| e != (0, 1))
                .map(|&(u, v)| (u + 8, v + 8)),
        );
        pairs.extend([(0, 8), (1, 9)]);
        let g = Graph::from_edge_list(16, pairs).unwrap();
        assert!(g.is_cubic());
        assert_eq!(g.edge_connectivity().unwrap(), 2);
        assert_eq!(g.vertex_connectivity().unwrap(), 2);
        assert!(g.bridges().is_empty());
    }

    #[test]
    fn complete_graph_connectivity() {
        let k4 = Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.vertex_connectivity().unwrap(), 3);
        assert_eq!(k4.edge_connectivity().unwrap(), 3);
    }

    fn arb_connected_graph() -> impl Strategy<Value = Graph> {
        // random spanning tree plus extra edges, maximum degree 3
        (2usize..9)
            .prop_flat_map(|n| {
                (
                    Just(n),
                    proptest::collection::vec(any::<prop::sample::Index>(), n - 1),
                    proptest::collection::vec((0..n, 0..n), 0..12),
                )
            })
            .prop_map(|(n, parents, extra)| {
                let mut deg = vec![0usize; n];
                let mut pairs = Vec::new();
                for v in 1..n {
                    let mut p = parents[v - 1].index(v);
                    while deg[p] >= 3 {
                        p = (p + 1) % v;
                    }
                    deg[p] += 1;
                    deg[v] += 1;
                    pairs.push((p, v));
                }
                for (u, v) in extra {
                    if u != v && deg[u] < 3 && deg[v] < 3 && !pairs.contains(&edge(u, v)) && !pairs.contains(&(v.max(u), v.min(u))) {
                        deg[u] += 1;
                        deg[v] += 1;
                        pairs.push(edge(u, v));
                    }
                }
                Graph::from_edge_list(n, pairs).unwrap()
            })
    }

    proptest! {
        #[test]
        fn whitney_inequality(g in arb_connected_graph()) {
            let kappa = g.vertex_connectivity().unwrap();
            let lambda = g.edge_connectivity().unwrap();
            prop_assert!(kappa <= lambda);
            prop_assert!(lambda <= g.min_degree());
        }
    }
}
