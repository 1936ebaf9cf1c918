//! Ladder decomposition of 2-connected bipartite cubic planar graphs.
//!
//! A cubic graph with a 2-edge-cut splits as `M(G_L, T_k, G_R)`: two sides
//! joined through a ladder `T_k` at attach vertices `u, v` (left) and
//! `m, n` (right). Adding the edges `(u,v)` and `(m,n)` back to the sides
//! yields two smaller BCP graphs, and repeating this on every side of order
//! at least [`LARGE_ORDER_MIN`] gives a tree whose leaves are small or
//! 3-connected.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};
use crate::planar::is_planar;

/// Largest order handled directly by a Hamiltonian spine.
pub const SMALL_ORDER_MAX: usize = 24;
/// Smallest order that gets decomposed when 2-connected.
pub const LARGE_ORDER_MIN: usize = 26;

/// Ladder `T_k`: rails `x_1..x_k`, `y_1..y_k` with rungs `x_i y_i`.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct Ladder {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

impl Ladder {
    pub fn k(&self) -> usize {
        self.x.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.x.iter().chain(self.y.iter()).copied()
    }

    pub fn rungs(&self) -> Vec<Edge> {
        self.x.iter().zip(&self.y).map(|(&a, &b)| edge(a, b)).collect()
    }

    /// Rail edges between rung `i` and `i + 1` (0-based), x-rail first.
    pub fn rails(&self, i: usize) -> [Edge; 2] {
        [
            edge(self.x[i], self.x[i + 1]),
            edge(self.y[i], self.y[i + 1]),
        ]
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut out = self.rungs();
        for i in 0..self.k().saturating_sub(1) {
            out.extend(self.rails(i));
        }
        out
    }
}

/// How two sides are wired through a ladder.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JoinRecord {
    pub u: usize,
    pub v: usize,
    pub m: usize,
    pub n: usize,
    pub ladder: Ladder,
}

impl JoinRecord {
    pub fn k(&self) -> usize {
        self.ladder.k()
    }

    /// `(u,x_1), (v,y_1)` on the left; for `k = 0` the direct `(u,m), (v,n)`.
    pub fn left_connectors(&self) -> [Edge; 2] {
        match self.k() {
            0 => [edge(self.u, self.m), edge(self.v, self.n)],
            _ => [
                edge(self.u, self.ladder.x[0]),
                edge(self.v, self.ladder.y[0]),
            ],
        }
    }

    /// `(m,x_k), (n,y_k)`; for `k = 0` the same as the left connectors.
    pub fn right_connectors(&self) -> [Edge; 2] {
        match self.k() {
            0 => self.left_connectors(),
            k => [
                edge(self.m, self.ladder.x[k - 1]),
                edge(self.n, self.ladder.y[k - 1]),
            ],
        }
    }

    pub fn connectors(&self) -> Vec<Edge> {
        let mut out = self.left_connectors().to_vec();
        if self.k() > 0 {
            out.extend(self.right_connectors());
        }
        out
    }

    fn relabeled(&self, map: &[usize]) -> Self {
        Self {
            u: map[self.u],
            v: map[self.v],
            m: map[self.m],
            n: map[self.n],
            ladder: Ladder {
                x: self.ladder.x.iter().map(|&a| map[a]).collect(),
                y: self.ladder.y.iter().map(|&a| map[a]).collect(),
            },
        }
    }
}

/// A 2-edge-cut `{(a1,b1), (a2,b2)}` with `a1, a2` on the left side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoEdgeCut {
    pub left_ends: [usize; 2],
    pub right_ends: [usize; 2],
    /// Membership of each vertex in the left component.
    pub in_left: Vec<bool>,
}

impl TwoEdgeCut {
    pub fn edges(&self) -> [Edge; 2] {
        [
            edge(self.left_ends[0], self.right_ends[0]),
            edge(self.left_ends[1], self.right_ends[1]),
        ]
    }

    fn sizes(&self) -> (usize, usize) {
        let left = self.in_left.iter().filter(|&&b| b).count();
        (left, self.in_left.len() - left)
    }
}

/// Every 2-edge-cut of a connected cubic graph, most balanced first (ties
/// by lexicographic edge pair). The left side is the one holding vertex 0.
/// A bridge makes the input invalid.
pub fn two_edge_cuts(g: &Graph) -> Result<Vec<TwoEdgeCut>> {
    g.require_connected()?;
    if let Some(&b) = g.bridges().first() {
        return Err(Error::Bridge(b));
    }
    let m = g.edge_count();
    let mut cuts = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let (count, comp) = g.components_without(&[i, j]);
            if count < 2 {
                continue;
            }
            let in_left: Vec<bool> = comp.iter().map(|&c| c == comp[0]).collect();
            let mut left_ends = [0; 2];
            let mut right_ends = [0; 2];
            for (slot, idx) in [i, j].into_iter().enumerate() {
                let (a, b) = g.edges()[idx];
                let (l, r) = if in_left[a] { (a, b) } else { (b, a) };
                left_ends[slot] = l;
                right_ends[slot] = r;
            }
            cuts.push(TwoEdgeCut {
                left_ends,
                right_ends,
                in_left,
            });
        }
    }
    cuts.sort_by_key(|c| {
        let (l, r) = c.sizes();
        (l.max(r), c.edges())
    });
    Ok(cuts)
}

/// The preferred 2-edge-cut, or `None` when the graph is 3-edge-connected.
pub fn find_two_edge_cut(g: &Graph) -> Result<Option<TwoEdgeCut>> {
    Ok(two_edge_cuts(g)?.into_iter().next())
}

/// The two sides of a join (relabeled densely) and the join record in the
/// vertex ids of the input graph.
#[derive(Clone, Debug)]
pub struct Extraction {
    pub left: Graph,
    pub left_labels: Vec<usize>,
    pub right: Graph,
    pub right_labels: Vec<usize>,
    pub record: JoinRecord,
}

impl Extraction {
    /// `u, v` in the local ids of the left side.
    pub fn left_attach(&self) -> (usize, usize) {
        (
            local(&self.left_labels, self.record.u),
            local(&self.left_labels, self.record.v),
        )
    }

    /// `m, n` in the local ids of the right side.
    pub fn right_attach(&self) -> (usize, usize) {
        (
            local(&self.right_labels, self.record.m),
            local(&self.right_labels, self.record.n),
        )
    }
}

fn local(labels: &[usize], v: usize) -> usize {
    labels.iter().position(|&w| w == v).expect("attach vertex on its side")
}

/// Peels the maximal ladder through a 2-edge-cut of a cubic graph.
///
/// While the two attach vertices on a side are adjacent they form a rung;
/// the walk moves on to their third neighbors. The ladder is recovered in
/// full wherever along it the cut lies.
pub fn extract_ladder(g: &Graph, cut: &TwoEdgeCut) -> Result<Extraction> {
    g.require_cubic()?;
    let (lx, ly, u, v) = peel(g, cut.left_ends, cut.right_ends, &cut.in_left, true)?;
    let (rx, ry, m, n) = peel(g, cut.right_ends, cut.left_ends, &cut.in_left, false)?;

    let x: Vec<usize> = lx.iter().rev().chain(rx.iter()).copied().collect();
    let y: Vec<usize> = ly.iter().rev().chain(ry.iter()).copied().collect();
    let mut on_ladder = vec![false; g.n()];
    for &w in x.iter().chain(y.iter()) {
        on_ladder[w] = true;
    }
    let left_vertices: Vec<usize> = (0..g.n())
        .filter(|&w| cut.in_left[w] && !on_ladder[w])
        .collect();
    let right_vertices: Vec<usize> = (0..g.n())
        .filter(|&w| !cut.in_left[w] && !on_ladder[w])
        .collect();
    let (left, left_labels) = g.induced(&left_vertices);
    let (right, right_labels) = g.induced(&right_vertices);
    Ok(Extraction {
        left,
        left_labels,
        right,
        right_labels,
        record: JoinRecord {
            u,
            v,
            m,
            n,
            ladder: Ladder { x, y },
        },
    })
}

type Peeled = (Vec<usize>, Vec<usize>, usize, usize);

fn peel(
    g: &Graph,
    ends: [usize; 2],
    across: [usize; 2],
    in_left: &[bool],
    left: bool,
) -> Result<Peeled> {
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    let (mut cur, mut prev) = (ends, across);
    if cur[0] == cur[1] {
        return Err(Error::InvalidDecomposition(format!(
            "cut edges share the endpoint {}",
            cur[0]
        )));
    }
    while g.has_edge(cur[0], cur[1]) {
        let third = |a: usize, rung: usize, back: usize| {
            g.neighbors(a)
                .iter()
                .copied()
                .find(|&w| w != rung && w != back)
                .expect("cubic")
        };
        let next = [third(cur[0], cur[1], prev[0]), third(cur[1], cur[0], prev[1])];
        if next[0] == next[1] || next.iter().any(|&w| in_left[w] != left) || xs.len() > g.n() {
            return Err(Error::InvalidDecomposition(
                "ladder does not terminate inside its side".into(),
            ));
        }
        xs.push(cur[0]);
        ys.push(cur[1]);
        prev = cur;
        cur = next;
    }
    Ok((xs, ys, cur[0], cur[1]))
}

/// `side + (a, b)`; the attach vertices must be non-adjacent.
pub fn augment(side: &Graph, a: usize, b: usize) -> Result<Graph> {
    if a == b || side.has_edge(a, b) {
        return Err(Error::InvalidDecomposition(format!(
            "attach vertices {a} and {b} are adjacent; extend the ladder first"
        )));
    }
    side.with_edge(a, b)
}

/// Checks a graph is a 2-connected bipartite cubic planar graph.
pub fn check_two_connected_bcp(g: &Graph) -> Result<()> {
    g.require_connected()?;
    g.require_cubic()?;
    g.bipartition()?;
    if g.vertex_connectivity()? < 2 {
        return Err(Error::InvalidDecomposition("side is not 2-connected".into()));
    }
    if !is_planar(g) {
        return Err(Error::NonPlanar);
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LeafKind {
    SmallBcp,
    ThreeConnectedBcp,
}

#[derive(Clone, Debug)]
pub struct Leaf {
    /// Leaf graph over local ids.
    pub graph: Graph,
    /// Local id → vertex id of the decomposed graph.
    pub labels: Vec<usize>,
    pub kind: LeafKind,
    pub depth: usize,
}

#[derive(Clone, Debug)]
pub struct JoinNode {
    /// In vertex ids of the decomposed graph.
    pub record: JoinRecord,
    pub left: DecompositionTree,
    pub right: DecompositionTree,
    pub depth: usize,
    /// Order of the graph at this node.
    pub order: usize,
}

#[derive(Clone, Debug)]
pub enum DecompositionTree {
    Leaf(Leaf),
    Join(Box<JoinNode>),
}

impl DecompositionTree {
    pub fn depth(&self) -> usize {
        match self {
            Self::Leaf(l) => l.depth,
            Self::Join(j) => j.depth,
        }
    }

    /// Maximum leaf depth.
    pub fn height(&self) -> usize {
        match self {
            Self::Leaf(l) => l.depth,
            Self::Join(j) => j.left.height().max(j.right.height()),
        }
    }

    pub fn leaves(&self) -> Vec<&Leaf> {
        match self {
            Self::Leaf(l) => vec![l],
            Self::Join(j) => {
                let mut out = j.left.leaves();
                out.extend(j.right.leaves());
                out
            }
        }
    }

    pub fn join_count(&self) -> usize {
        match self {
            Self::Leaf(_) => 0,
            Self::Join(j) => 1 + j.left.join_count() + j.right.join_count(),
        }
    }

    /// Edge set of the graph this node stands for: child edges minus the
    /// augmenting edges, plus ladder and connectors.
    pub fn reassemble(&self) -> Vec<Edge> {
        let mut out = match self {
            Self::Leaf(l) => l
                .graph
                .edges()
                .iter()
                .map(|&(a, b)| edge(l.labels[a], l.labels[b]))
                .collect::<Vec<_>>(),
            Self::Join(j) => {
                let rec = &j.record;
                let (uv, mn) = (edge(rec.u, rec.v), edge(rec.m, rec.n));
                let mut out: Vec<Edge> =
                    j.left.reassemble().into_iter().filter(|&e| e != uv).collect();
                out.extend(j.right.reassemble().into_iter().filter(|&e| e != mn));
                out.extend(rec.ladder.edges());
                out.extend(rec.connectors());
                out
            }
        };
        out.sort_unstable();
        out
    }

    /// Vertex ids covered by this node.
    pub fn vertices(&self) -> Vec<usize> {
        let mut out = match self {
            Self::Leaf(l) => l.labels.clone(),
            Self::Join(j) => {
                let mut out = j.left.vertices();
                out.extend(j.right.vertices());
                out.extend(j.record.ladder.vertices());
                out
            }
        };
        out.sort_unstable();
        out
    }
}

/// Decomposes a connected BCP graph with the default order threshold.
pub fn ternary_decompose(g: &Graph) -> Result<DecompositionTree> {
    ternary_decompose_with(g, LARGE_ORDER_MIN)
}

/// Decomposes while a node has order at least `min_order` and a 2-edge-cut.
pub fn ternary_decompose_with(g: &Graph, min_order: usize) -> Result<DecompositionTree> {
    crate::embedding::require_bcp(g)?;
    let labels: Vec<usize> = (0..g.n()).collect();
    decompose_node(g.clone(), labels, 0, min_order)
}

fn decompose_node(
    g: Graph,
    labels: Vec<usize>,
    depth: usize,
    min_order: usize,
) -> Result<DecompositionTree> {
    let order = g.n();
    let lambda = g.edge_connectivity()?;
    if order < min_order || lambda != 2 {
        let kind = if lambda >= 3 && order >= LARGE_ORDER_MIN {
            LeafKind::ThreeConnectedBcp
        } else {
            LeafKind::SmallBcp
        };
        return Ok(DecompositionTree::Leaf(Leaf {
            graph: g,
            labels,
            kind,
            depth,
        }));
    }
    let mut last_err = None;
    for cut in two_edge_cuts(&g)? {
        match split(&g, &cut) {
            Ok((ext, left, right)) => {
                let map_left: Vec<usize> = ext.left_labels.iter().map(|&w| labels[w]).collect();
                let map_right: Vec<usize> = ext.right_labels.iter().map(|&w| labels[w]).collect();
                let (l, r) = rayon::join(
                    || decompose_node(left, map_left, depth + 1, min_order),
                    || decompose_node(right, map_right, depth + 1, min_order),
                );
                return Ok(DecompositionTree::Join(Box::new(JoinNode {
                    record: ext.record.relabeled(&labels),
                    left: l?,
                    right: r?,
                    depth,
                    order,
                })));
            }
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err.unwrap_or_else(|| Error::InvalidDecomposition("no usable 2-edge-cut".into())))
}

/// Extracts the join at `cut` and builds both augmented sides, checking
/// each is a 2-connected BCP graph.
fn split(g: &Graph, cut: &TwoEdgeCut) -> Result<(Extraction, Graph, Graph)> {
    let ext = extract_ladder(g, cut)?;
    let (u, v) = ext.left_attach();
    let (m, n) = ext.right_attach();
    let left = augment(&ext.left, u, v)?;
    let right = augment(&ext.right, m, n)?;
    check_two_connected_bcp(&left)?;
    check_two_connected_bcp(&right)?;
    Ok((ext, left, right))
}
