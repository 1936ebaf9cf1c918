//! Face 3-colorings of bipartite cubic plane graphs and the edge colorings
//! they induce.
//!
//! The face-adjacency structure is colored directly by backtracking with
//! unit propagation. For a BCP graph a proper 3-coloring always exists, so
//! running out of candidates means the input was not a BCP embedding.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};
use crate::planar::PlanarEmbedding;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FaceColor {
    E1,
    E2,
    E3,
}

impl FaceColor {
    pub const ALL: [FaceColor; 3] = [FaceColor::E1, FaceColor::E2, FaceColor::E3];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Self {
        Self::ALL[i]
    }
}

impl fmt::Display for FaceColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E{}", self.index() + 1)
    }
}

/// Edge labels are unordered pairs of face colors. The index of a label is
/// also the page it is drawn on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeColor {
    E1E2,
    E1E3,
    E2E3,
}

impl EdgeColor {
    pub const ALL: [EdgeColor; 3] = [EdgeColor::E1E2, EdgeColor::E1E3, EdgeColor::E2E3];

    /// The label of an edge between faces of colors `a` and `b`.
    pub fn between(a: FaceColor, b: FaceColor) -> Option<Self> {
        use FaceColor::*;
        match (a.min(b), a.max(b)) {
            (E1, E2) => Some(EdgeColor::E1E2),
            (E1, E3) => Some(EdgeColor::E1E3),
            (E2, E3) => Some(EdgeColor::E2E3),
            _ => None,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Self {
        Self::ALL[i]
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "E1+E2" => Some(EdgeColor::E1E2),
            "E1+E3" => Some(EdgeColor::E1E3),
            "E2+E3" => Some(EdgeColor::E2E3),
            _ => None,
        }
    }
}

impl fmt::Display for EdgeColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeColor::E1E2 => "E1+E2",
            EdgeColor::E1E3 => "E1+E3",
            EdgeColor::E2E3 => "E2+E3",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceColoring {
    pub color: Vec<FaceColor>,
}

impl FaceColoring {
    /// Relabels faces through a permutation of the three colors.
    pub fn permuted(&self, perm: [FaceColor; 3]) -> Self {
        Self {
            color: self.color.iter().map(|c| perm[c.index()]).collect(),
        }
    }

    pub fn is_proper(&self, emb: &PlanarEmbedding) -> bool {
        emb.graph().edges().iter().all(|&e| {
            let (f, g) = emb.edge_faces(e);
            self.color[f] != self.color[g]
        })
    }
}

/// Per-edge labels over a sorted edge list.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeColoring {
    edges: Vec<Edge>,
    color: Vec<EdgeColor>,
}

impl EdgeColoring {
    /// Builds a coloring from `(edge, label)` pairs; later pairs win.
    pub fn from_pairs<I: IntoIterator<Item = (Edge, EdgeColor)>>(pairs: I) -> Self {
        let mut all: Vec<(Edge, EdgeColor)> =
            pairs.into_iter().map(|((u, v), c)| (edge(u, v), c)).collect();
        all.sort_by_key(|&(e, _)| e);
        let mut edges: Vec<Edge> = Vec::with_capacity(all.len());
        let mut color: Vec<EdgeColor> = Vec::with_capacity(all.len());
        for (e, c) in all {
            if edges.last() == Some(&e) {
                *color.last_mut().expect("paired") = c;
            } else {
                edges.push(e);
                color.push(c);
            }
        }
        Self { edges, color }
    }

    pub fn get(&self, u: usize, v: usize) -> Option<EdgeColor> {
        self.edges
            .binary_search(&edge(u, v))
            .ok()
            .map(|i| self.color[i])
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, EdgeColor)> + '_ {
        self.edges.iter().copied().zip(self.color.iter().copied())
    }

    /// Relabels through a permutation of the three edge labels.
    pub fn permuted(&self, perm: [EdgeColor; 3]) -> Self {
        Self {
            edges: self.edges.clone(),
            color: self.color.iter().map(|c| perm[c.index()]).collect(),
        }
    }

    /// The edges carrying each label.
    pub fn classes(&self) -> [Vec<Edge>; 3] {
        let mut out: [Vec<Edge>; 3] = Default::default();
        for (e, c) in self.iter() {
            out[c.index()].push(e);
        }
        out
    }
}

/// Proper 3-coloring of the faces of a plane graph.
///
/// The face of largest degree (lowest id on ties) is fixed to `E1` and its
/// lowest-indexed neighbor to `E2`, which pins the label gauge.
pub fn three_face_coloring(emb: &PlanarEmbedding) -> Result<FaceColoring> {
    let face_count = emb.faces().len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); face_count];
    for &e in emb.graph().edges() {
        let (f, g) = emb.edge_faces(e);
        if f == g {
            return Err(Error::NotBcpEmbedding(format!(
                "edge {e:?} has the same face on both sides"
            )));
        }
        adj[f].push(g);
        adj[g].push(f);
    }
    for list in &mut adj {
        list.sort_unstable();
        list.dedup();
    }
    let degree: Vec<usize> = emb.faces().iter().map(|f| f.len()).collect();

    let mut domains = vec![FULL; face_count];
    if face_count > 0 {
        let first = (0..face_count)
            .max_by(|&a, &b| degree[a].cmp(&degree[b]).then(b.cmp(&a)))
            .expect("faces");
        let mut ok = assign(&adj, &mut domains, first, 0);
        if ok {
            if let Some(&second) = adj[first].first() {
                ok = domains[second] & bit(1) != 0 && assign(&adj, &mut domains, second, 1);
            }
        }
        if !ok || !search(&adj, &degree, &mut domains) {
            return Err(Error::NotBcpEmbedding(
                "faces admit no proper 3-coloring".into(),
            ));
        }
    }
    Ok(FaceColoring {
        color: domains
            .iter()
            .map(|d| FaceColor::from_index(d.trailing_zeros() as usize))
            .collect(),
    })
}

const FULL: u8 = 0b111;

#[inline]
fn bit(c: usize) -> u8 {
    1 << c
}

/// Fixes `f` to color `c` and propagates forced colors.
fn assign(adj: &[Vec<usize>], domains: &mut [u8], f: usize, c: usize) -> bool {
    let mut queue = vec![(f, c)];
    while let Some((f, c)) = queue.pop() {
        if domains[f] & bit(c) == 0 {
            return false;
        }
        domains[f] = bit(c);
        for &g in &adj[f] {
            if domains[g] & bit(c) == 0 {
                continue;
            }
            domains[g] &= !bit(c);
            match domains[g].count_ones() {
                0 => return false,
                1 => queue.push((g, domains[g].trailing_zeros() as usize)),
                _ => {}
            }
        }
    }
    true
}

fn search(adj: &[Vec<usize>], degree: &[usize], domains: &mut Vec<u8>) -> bool {
    // most constrained open face, then larger degree, then lower id
    let pick = (0..domains.len())
        .filter(|&f| domains[f].count_ones() > 1)
        .min_by(|&a, &b| {
            domains[a]
                .count_ones()
                .cmp(&domains[b].count_ones())
                .then(degree[b].cmp(&degree[a]))
                .then(a.cmp(&b))
        });
    let Some(f) = pick else {
        return true;
    };
    for c in 0..3 {
        if domains[f] & bit(c) == 0 {
            continue;
        }
        let mut trial = domains.clone();
        if assign(adj, &mut trial, f, c) && search(adj, degree, &mut trial) {
            *domains = trial;
            return true;
        }
    }
    false
}

/// Labels each edge with the pair of colors of its two faces and checks the
/// result is a proper edge coloring.
pub fn induced_edge_coloring(emb: &PlanarEmbedding, fc: &FaceColoring) -> Result<EdgeColoring> {
    let mut pairs = Vec::with_capacity(emb.graph().edge_count());
    for &e in emb.graph().edges() {
        let (f, g) = emb.edge_faces(e);
        let (a, b) = (fc.color[f], fc.color[g]);
        let label = EdgeColor::between(a, b).ok_or(Error::InvalidFaceColoring {
            edge: e,
            color: a.to_string(),
        })?;
        pairs.push((e, label));
    }
    let ec = EdgeColoring::from_pairs(pairs);
    if !verify_edge_coloring(emb.graph(), &ec) {
        return Err(Error::Internal(
            "induced edge coloring is not proper".into(),
        ));
    }
    Ok(ec)
}

/// True iff every edge is labeled and no two edges at a vertex share a
/// label.
pub fn verify_edge_coloring(g: &Graph, ec: &EdgeColoring) -> bool {
    (0..g.n()).all(|v| {
        let mut seen = 0u8;
        g.neighbors(v).iter().all(|&w| match ec.get(v, w) {
            Some(c) => {
                let b = bit(c.index());
                let fresh = seen & b == 0;
                seen |= b;
                fresh
            }
            None => false,
        })
    })
}

/// Whether `edges` covers every vertex of `g` exactly once.
pub fn is_perfect_matching(g: &Graph, edges: &[Edge]) -> bool {
    let mut hit = vec![0u8; g.n()];
    for &(u, v) in edges {
        if !g.has_edge(u, v) {
            return false;
        }
        hit[u] += 1;
        hit[v] += 1;
    }
    hit.iter().all(|&h| h == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::planar_embedding;

    fn cube() -> Graph {
        let pairs = (0..8usize)
            .flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b))))
            .filter(|&(u, v)| u < v);
        Graph::from_edge_list(8, pairs).unwrap()
    }

    fn prism(m: usize) -> Graph {
        let mut pairs = Vec::new();
        for i in 0..m {
            pairs.push((i, (i + 1) % m));
            pairs.push((m + i, m + (i + 1) % m));
            pairs.push((i, m + i));
        }
        Graph::from_edge_list(2 * m, pairs).unwrap()
    }

    #[test]
    fn cube_opposite_faces_share_colors() {
        let emb = planar_embedding(&cube()).unwrap();
        let fc = three_face_coloring(&emb).unwrap();
        assert!(fc.is_proper(&emb));
        let dual = emb.dual();
        for f in 0..6 {
            let opposite = (0..6).find(|&g| g != f && !dual.adjacent(f, g)).unwrap();
            assert_eq!(fc.color[f], fc.color[opposite]);
        }
    }

    #[test]
    fn cube_edge_coloring_is_one_factorization() {
        let g = cube();
        let emb = planar_embedding(&g).unwrap();
        let fc = three_face_coloring(&emb).unwrap();
        let ec = induced_edge_coloring(&emb, &fc).unwrap();
        for v in 0..8 {
            let mut labels: Vec<EdgeColor> =
                g.neighbors(v).iter().map(|&w| ec.get(v, w).unwrap()).collect();
            labels.sort();
            assert_eq!(labels, EdgeColor::ALL.to_vec());
        }
    }

    #[test]
    fn prism_classes_are_perfect_matchings() {
        let g = prism(6);
        let emb = planar_embedding(&g).unwrap();
        let fc = three_face_coloring(&emb).unwrap();
        assert!(fc.is_proper(&emb));
        let ec = induced_edge_coloring(&emb, &fc).unwrap();
        for class in ec.classes() {
            assert_eq!(class.len(), 6);
            assert!(is_perfect_matching(&g, &class));
        }
    }

    #[test]
    fn k4_has_no_three_face_coloring() {
        let k4 = Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let emb = planar_embedding(&k4).unwrap();
        assert!(matches!(
            three_face_coloring(&emb),
            Err(Error::NotBcpEmbedding(_))
        ));
    }

    #[test]
    fn label_of_adjacent_face_pair() {
        assert_eq!(
            EdgeColor::between(FaceColor::E1, FaceColor::E2),
            Some(EdgeColor::E1E2)
        );
        assert_eq!(
            EdgeColor::between(FaceColor::E3, FaceColor::E1),
            Some(EdgeColor::E1E3)
        );
        assert_eq!(EdgeColor::between(FaceColor::E2, FaceColor::E2), None);
        assert_eq!(EdgeColor::E1E2.to_string(), "E1+E2");
        assert_eq!(EdgeColor::parse("E2+E3"), Some(EdgeColor::E2E3));
    }

    #[test]
    fn improper_face_coloring_is_reported() {
        let emb = planar_embedding(&cube()).unwrap();
        let flat = FaceColoring {
            color: vec![FaceColor::E1; emb.faces().len()],
        };
        assert!(matches!(
            induced_edge_coloring(&emb, &flat),
            Err(Error::InvalidFaceColoring { .. })
        ));
    }

    #[test]
    fn verify_edge_coloring_cases() {
        let empty = Graph::empty(0);
        assert!(verify_edge_coloring(&empty, &EdgeColoring::from_pairs([])));
        let path = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        let clash = EdgeColoring::from_pairs([((0, 1), EdgeColor::E1E2), ((1, 2), EdgeColor::E1E2)]);
        assert!(!verify_edge_coloring(&path, &clash));
        let fine = EdgeColoring::from_pairs([((0, 1), EdgeColor::E1E2), ((2, 1), EdgeColor::E2E3)]);
        assert!(verify_edge_coloring(&path, &fine));
        let partial = EdgeColoring::from_pairs([((0, 1), EdgeColor::E1E2)]);
        assert!(!verify_edge_coloring(&path, &partial));
    }

    #[test]
    fn recoloring_permutes_edge_labels() {
        let emb = planar_embedding(&prism(8)).unwrap();
        let fc = three_face_coloring(&emb).unwrap();
        let base = induced_edge_coloring(&emb, &fc).unwrap();
        use FaceColor::*;
        let perms = [
            [E1, E2, E3],
            [E1, E3, E2],
            [E2, E1, E3],
            [E2, E3, E1],
            [E3, E1, E2],
            [E3, E2, E1],
        ];
        for perm in perms {
            let ec = induced_edge_coloring(&emb, &fc.permuted(perm)).unwrap();
            for ((e, before), (_, after)) in base.iter().zip(ec.iter()) {
                let (f, g) = emb.edge_faces(e);
                let expected =
                    EdgeColor::between(perm[fc.color[f].index()], perm[fc.color[g].index()]);
                assert_eq!(Some(after), expected);
                // the induced map on pairs is a bijection
                let image = EdgeColor::ALL
                    .iter()
                    .filter(|&&c| {
                        base.iter().any(|(e2, c2)| c2 == before && ec.get(e2.0, e2.1) == Some(c))
                    })
                    .count();
                assert_eq!(image, 1);
            }
        }
    }
}
