//! Hamiltonian cycles by depth-first backtracking.
//!
//! The path grows from vertex 0. A branch is cut when some unvisited vertex
//! is left with fewer than two usable neighbors, or when the unvisited
//! vertices are no longer reachable from the path end. Neighbors with the
//! fewest remaining options are tried first.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::SpineOrder;

/// Default cap on visited search nodes.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchEnd {
    /// The callback asked to stop.
    Stopped,
    /// Every Hamiltonian cycle was reported.
    Exhausted,
    BudgetExceeded,
}

/// Some Hamiltonian cycle as a spine order, `None` if there is none.
pub fn hamiltonian_order(g: &Graph) -> Result<Option<SpineOrder>> {
    hamiltonian_order_with_budget(g, DEFAULT_NODE_BUDGET)
}

pub fn hamiltonian_order_with_budget(g: &Graph, budget: u64) -> Result<Option<SpineOrder>> {
    let mut found = None;
    let end = for_each_hamiltonian_cycle(g, budget, |cycle| {
        found = Some(cycle.to_vec());
        ControlFlow::Break(())
    });
    match end {
        SearchEnd::BudgetExceeded => Err(Error::HamiltonianBudget { budget }),
        _ => Ok(found.map(|c| SpineOrder::new(c).expect("cycle visits each vertex once"))),
    }
}

/// Calls `visit` with each Hamiltonian cycle (as a vertex sequence starting
/// at 0; each cycle is met once per direction) until it breaks, the search
/// space is exhausted, or `budget` nodes were expanded.
pub fn for_each_hamiltonian_cycle<F>(g: &Graph, budget: u64, mut visit: F) -> SearchEnd
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = g.n();
    if n < 3 || !g.is_connected() || g.min_degree() < 2 {
        return SearchEnd::Exhausted;
    }
    if let Ok(bp) = g.bipartition() {
        let (a, b) = bp.part_sizes();
        if a != b {
            return SearchEnd::Exhausted;
        }
    }
    let mut search = Search {
        g,
        visited: vec![false; n],
        path: Vec::with_capacity(n),
        nodes: 0,
        budget,
        seen: vec![0; n],
        stamp: 0,
        queue: Vec::with_capacity(n),
    };
    search.visited[0] = true;
    search.path.push(0);
    search.extend(&mut visit)
}

struct Search<'a> {
    g: &'a Graph,
    visited: Vec<bool>,
    path: Vec<usize>,
    nodes: u64,
    budget: u64,
    seen: Vec<u32>,
    stamp: u32,
    queue: Vec<usize>,
}

impl Search<'_> {
    fn extend<F>(&mut self, visit: &mut F) -> SearchEnd
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        self.nodes += 1;
        if self.nodes > self.budget {
            return SearchEnd::BudgetExceeded;
        }
        let end = *self.path.last().expect("non-empty path");
        if self.path.len() == self.g.n() {
            if self.g.has_edge(end, self.path[0]) && visit(&self.path).is_break() {
                return SearchEnd::Stopped;
            }
            return SearchEnd::Exhausted;
        }
        let mut next: Vec<(usize, usize)> = self
            .g
            .neighbors(end)
            .iter()
            .filter(|&&w| !self.visited[w])
            .map(|&w| (self.options(w, end), w))
            .collect();
        next.sort_unstable();
        for (_, w) in next {
            self.visited[w] = true;
            self.path.push(w);
            if self.feasible(end, w) {
                match self.extend(visit) {
                    SearchEnd::Exhausted => {}
                    other => {
                        self.path.pop();
                        self.visited[w] = false;
                        return other;
                    }
                }
            }
            self.path.pop();
            self.visited[w] = false;
        }
        SearchEnd::Exhausted
    }

    /// Neighbors through which `z` could still be entered or left.
    fn options(&self, z: usize, end: usize) -> usize {
        let start = self.path[0];
        self.g
            .neighbors(z)
            .iter()
            .filter(|&&y| !self.visited[y] || y == end || y == start)
            .count()
    }

    fn feasible(&mut self, old_end: usize, end: usize) -> bool {
        let n = self.g.n();
        let start = self.path[0];
        let remaining = n - self.path.len();
        if remaining == 0 {
            return true;
        }
        // vertices next to the old end lost it as an exit
        for &z in self.g.neighbors(old_end) {
            if !self.visited[z] && self.options(z, end) < 2 {
                return false;
            }
        }
        if !self
            .g
            .neighbors(start)
            .iter()
            .any(|&y| !self.visited[y])
        {
            return false;
        }
        // unvisited vertices must hang together off the path end
        self.stamp += 1;
        let stamp = self.stamp;
        self.queue.clear();
        self.queue.push(end);
        self.seen[end] = stamp;
        let mut reached = 0;
        let mut i = 0;
        while i < self.queue.len() {
            let u = self.queue[i];
            i += 1;
            for &w in self.g.neighbors(u) {
                if !self.visited[w] && self.seen[w] != stamp {
                    self.seen[w] = stamp;
                    reached += 1;
                    self.queue.push(w);
                }
            }
        }
        reached == remaining
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn cube() -> Graph {
        let pairs = (0..8usize)
            .flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b))))
            .filter(|&(u, v)| u < v);
        Graph::from_edge_list(8, pairs).unwrap()
    }

    fn is_ham_cycle(g: &Graph, order: &[usize]) -> bool {
        let n = g.n();
        let mut sorted = order.to_vec();
        sorted.sort_unstable();
        sorted == (0..n).collect::<Vec<_>>()
            && (0..n).all(|i| g.has_edge(order[i], order[(i + 1) % n]))
    }

    #[test]
    fn cycle_is_its_own_order() {
        let c6 = cycle(6);
        let order = hamiltonian_order(&c6).unwrap().unwrap();
        assert!(is_ham_cycle(&c6, order.as_slice()));
    }

    #[test]
    fn cube_is_hamiltonian() {
        let q3 = cube();
        let order = hamiltonian_order(&q3).unwrap().unwrap();
        assert_eq!(order.len(), 8);
        assert!(is_ham_cycle(&q3, order.as_slice()));
    }

    #[test]
    fn disconnected_union_of_cycles_has_none() {
        let g = Graph::from_edge_list(8, (0..4).flat_map(|i| [(i, (i + 1) % 4), (4 + i, 4 + (i + 1) % 4)]))
            .unwrap();
        assert_eq!(hamiltonian_order(&g).unwrap(), None);
    }

    #[test]
    fn petersen_is_not_hamiltonian() {
        let mut pairs = Vec::new();
        for i in 0..5 {
            pairs.push((i, (i + 1) % 5));
            pairs.push((5 + i, 5 + (i + 2) % 5));
            pairs.push((i, 5 + i));
        }
        let g = Graph::from_edge_list(10, pairs).unwrap();
        assert_eq!(hamiltonian_order(&g).unwrap(), None);
    }

    #[test]
    fn unbalanced_bipartite_graph_has_none() {
        // K2,3
        let g = Graph::from_edge_list(5, (0..2).flat_map(|a| (2..5).map(move |b| (a, b)))).unwrap();
        assert_eq!(hamiltonian_order(&g).unwrap(), None);
    }

    #[test]
    fn cube_cycle_count() {
        // Q3 has 6 Hamiltonian cycles, each seen in both directions
        let mut count = 0;
        let end = for_each_hamiltonian_cycle(&cube(), DEFAULT_NODE_BUDGET, |c| {
            assert!(is_ham_cycle(&cube(), c));
            count += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(end, SearchEnd::Exhausted);
        assert_eq!(count, 12);
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            hamiltonian_order_with_budget(&cube(), 2),
            Err(Error::HamiltonianBudget { budget: 2 })
        ));
    }
}
