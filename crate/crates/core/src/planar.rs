//! Planar embeddings as rotation systems.
//!
//! Each biconnected block is embedded by path addition: start from a cycle,
//! then repeatedly compute the fragments of the remaining graph, place the
//! most constrained one into an admissible face and split that face along a
//! path through the fragment. A fragment with no admissible face proves
//! non-planarity. Blocks are glued at cut vertices by concatenating their
//! rotations, and every result is checked against Euler's formula.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};

/// A directed edge `(tail, head)`.
pub type Dart = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    /// Boundary walk; the head of each dart is the tail of the next.
    pub boundary: Vec<Dart>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    /// Vertices in walk order.
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.boundary.iter().map(|&(u, _)| u)
    }
}

/// A rotation system over a connected graph together with its faces.
///
/// Face walks follow the rule: after arriving along `(u, v)`, leave `v`
/// towards the successor of `u` in the rotation at `v`.
#[derive(Clone, Debug)]
pub struct PlanarEmbedding {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    faces: Vec<Face>,
    dart_face: HashMap<Dart, usize>,
}

impl PlanarEmbedding {
    /// Validates a rotation system and traces its faces. Fails unless the
    /// rotation lists are permutations of the neighborhoods and the face
    /// count satisfies Euler's formula for a connected plane graph.
    pub fn from_rotation(graph: Graph, rotation: Vec<Vec<usize>>) -> Result<Self> {
        graph.require_connected()?;
        if rotation.len() != graph.n() {
            return Err(Error::Contract("rotation system size mismatch".into()));
        }
        for (v, rot) in rotation.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            if sorted != graph.neighbors(v) {
                return Err(Error::Contract(format!(
                    "rotation at {v} is not a permutation of its neighbors"
                )));
            }
        }
        let (faces, dart_face) = trace_faces(&graph, &rotation);
        let v = graph.n() as i64;
        let e = graph.edge_count() as i64;
        let f = faces.len() as i64;
        if v - e + f != 2 {
            return Err(Error::NonPlanar);
        }
        Ok(Self {
            graph,
            rotation,
            faces,
            dart_face,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// The face to the walk-side of a dart.
    pub fn face_of(&self, dart: Dart) -> Option<usize> {
        self.dart_face.get(&dart).copied()
    }

    /// The two faces incident to an edge, as `(face of (u,v), face of (v,u))`.
    pub fn edge_faces(&self, e: Edge) -> (usize, usize) {
        (self.dart_face[&(e.0, e.1)], self.dart_face[&(e.1, e.0)])
    }

    pub fn dual(&self) -> DualGraph {
        let edges = self
            .graph
            .edges()
            .iter()
            .map(|&e| self.edge_faces(e))
            .collect();
        let around_vertex = (0..self.graph.n())
            .map(|v| {
                self.rotation[v]
                    .iter()
                    .map(|&w| self.graph.edge_index(v, w).expect("edge"))
                    .collect()
            })
            .collect();
        DualGraph {
            face_count: self.faces.len(),
            edges,
            around_vertex,
        }
    }
}

fn trace_faces(graph: &Graph, rotation: &[Vec<usize>]) -> (Vec<Face>, HashMap<Dart, usize>) {
    let mut dart_face = HashMap::with_capacity(2 * graph.edge_count());
    let mut faces = Vec::new();
    if graph.edge_count() == 0 {
        // a lone vertex bounds one face
        faces.push(Face {
            id: 0,
            boundary: Vec::new(),
        });
        return (faces, dart_face);
    }
    for &(a, b) in graph.edges() {
        for start in [(a, b), (b, a)] {
            if dart_face.contains_key(&start) {
                continue;
            }
            let id = faces.len();
            let mut boundary = Vec::new();
            let mut dart = start;
            loop {
                dart_face.insert(dart, id);
                boundary.push(dart);
                let (u, v) = dart;
                let rot = &rotation[v];
                let i = rot.iter().position(|&w| w == u).expect("rotation");
                dart = (v, rot[(i + 1) % rot.len()]);
                if dart == start {
                    break;
                }
            }
            faces.push(Face { id, boundary });
        }
    }
    (faces, dart_face)
}

/// Dual multigraph: one vertex per face, one edge per primal edge.
#[derive(Clone, Debug)]
pub struct DualGraph {
    pub face_count: usize,
    /// Indexed like the primal edge list; parallel edges are kept.
    pub edges: Vec<(usize, usize)>,
    /// Dual faces: the primal edges around each primal vertex, in rotation
    /// order.
    pub around_vertex: Vec<Vec<usize>>,
}

impl DualGraph {
    pub fn degree(&self, face: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == face) + usize::from(b == face))
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.face_count];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// Lengths of the dual faces, one per primal vertex.
    pub fn face_lengths(&self) -> Vec<usize> {
        self.around_vertex.iter().map(Vec::len).collect()
    }

    /// Whether two faces share at least one primal edge.
    pub fn adjacent(&self, f: usize, g: usize) -> bool {
        self.edges
            .iter()
            .any(|&(a, b)| (a, b) == (f, g) || (a, b) == (g, f))
    }
}

/// Computes a planar embedding of a connected graph, or reports
/// [`Error::NonPlanar`].
pub fn planar_embedding(g: &Graph) -> Result<PlanarEmbedding> {
    g.require_connected()?;
    let mut rotation = vec![Vec::new(); g.n()];
    for block in biconnected_blocks(g) {
        let mut verts: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        verts.sort_unstable();
        verts.dedup();
        let mut local = HashMap::new();
        for (i, &v) in verts.iter().enumerate() {
            local.insert(v, i);
        }
        let sub = Graph::from_edge_list(
            verts.len(),
            block.iter().map(|&(u, v)| (local[&u], local[&v])),
        )
        .expect("block");
        let block_rotation = embed_biconnected(&sub)?;
        for (i, rot) in block_rotation.into_iter().enumerate() {
            rotation[verts[i]].extend(rot.into_iter().map(|w| verts[w]));
        }
    }
    PlanarEmbedding::from_rotation(g.clone(), rotation).map_err(|e| match e {
        Error::NonPlanar => Error::Internal("block gluing violated Euler's formula".into()),
        other => other,
    })
}

pub fn is_planar(g: &Graph) -> bool {
    planar_embedding(g).is_ok()
}

/// Edge sets of the biconnected blocks (bridges form single-edge blocks).
fn biconnected_blocks(g: &Graph) -> Vec<Vec<Edge>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<Edge> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, next neighbor index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
            if let Some(&w) = g.neighbors(v).get(*next) {
                *next += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push(edge(v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(edge(v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        let target = edge(parent, v);
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == target {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

/// Path-addition embedding of a biconnected graph (or a single edge).
/// Returns the rotation at each vertex.
fn embed_biconnected(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    if g.edge_count() == 1 {
        let (u, v) = g.edges()[0];
        let mut rot = vec![Vec::new(); n];
        rot[u].push(v);
        rot[v].push(u);
        return Ok(rot);
    }
    if g.edge_count() > 3 * n - 6 {
        return Err(Error::NonPlanar);
    }

    let cycle = find_cycle(g).ok_or_else(|| Error::Internal("block without a cycle".into()))?;
    let mut placed_vertex = vec![false; n];
    let mut placed_edge = vec![false; g.edge_count()];
    let mut placed_edges = 0;
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        placed_vertex[a] = true;
        placed_edge[g.edge_index(a, b).expect("cycle edge")] = true;
        placed_edges += 1;
    }
    let mut reversed = cycle.clone();
    reversed.reverse();
    let mut faces: Vec<Vec<usize>> = vec![cycle, reversed];

    while placed_edges < g.edge_count() {
        let fragments = fragments(g, &placed_vertex, &placed_edge);
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, face)| frag.attachments.iter().all(|a| face.contains(a)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return Err(Error::NonPlanar),
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("at least one fragment");
        let path = fragment_path(g, &fragments[fi], &placed_vertex);
        for w in path.windows(2) {
            placed_edge[g.edge_index(w[0], w[1]).expect("path edge")] = true;
            placed_edges += 1;
        }
        for &v in &path {
            placed_vertex[v] = true;
        }
        let face = faces.swap_remove(face_idx);
        let (first, second) = split_face(&face, &path);
        faces.push(first);
        faces.push(second);
    }
    rotation_from_faces(g, &faces)
}

/// A simple cycle found by depth-first search.
fn find_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let start = (0..n).find(|&v| g.degree(v) > 0)?;
    depth[start] = 0;
    let mut stack = vec![(start, 0usize)];
    while let Some(&mut (v, ref mut next)) = stack.last_mut() {
        if let Some(&w) = g.neighbors(v).get(*next) {
            *next += 1;
            if w == parent[v] {
                continue;
            }
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                stack.push((w, 0));
            } else if depth[w] < depth[v] {
                let mut cycle = vec![v];
                let mut x = v;
                while x != w {
                    x = parent[x];
                    cycle.push(x);
                }
                return Some(cycle);
            }
        } else {
            stack.pop();
        }
    }
    None
}

struct Fragment {
    attachments: Vec<usize>,
    /// Unplaced vertices of the fragment; empty for a single chord.
    interior: Vec<usize>,
    chord: Option<Edge>,
}

fn fragments(g: &Graph, placed_vertex: &[bool], placed_edge: &[bool]) -> Vec<Fragment> {
    let mut out = Vec::new();
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if !placed_edge[i] && placed_vertex[u] && placed_vertex[v] {
            out.push(Fragment {
                attachments: vec![u, v],
                interior: Vec::new(),
                chord: Some((u, v)),
            });
        }
    }
    let mut seen = vec![false; g.n()];
    for s in 0..g.n() {
        if placed_vertex[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut interior = vec![s];
        let mut attachments = Vec::new();
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if placed_vertex[w] {
                    if !attachments.contains(&w) {
                        attachments.push(w);
                    }
                } else if !seen[w] {
                    seen[w] = true;
                    interior.push(w);
                    queue.push_back(w);
                }
            }
        }
        attachments.sort_unstable();
        out.push(Fragment {
            attachments,
            interior,
            chord: None,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(g: &Graph, frag: &Fragment, placed_vertex: &[bool]) -> Vec<usize> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let start = frag.attachments[0];
    let mut prev: HashMap<usize, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for &w in g.neighbors(start) {
        if !placed_vertex[w] && frag.interior.contains(&w) && !prev.contains_key(&w) {
            prev.insert(w, start);
            queue.push_back(w);
        }
    }
    while let Some(u) = queue.pop_front() {
        if let Some(&end) = g
            .neighbors(u)
            .iter()
            .find(|&&w| placed_vertex[w] && w != start)
        {
            let mut path = vec![end, u];
            let mut x = u;
            while let Some(&p) = prev.get(&x) {
                path.push(p);
                x = p;
                if p == start {
                    break;
                }
            }
            path.reverse();
            return path;
        }
        for &w in g.neighbors(u) {
            if !placed_vertex[w] && !prev.contains_key(&w) {
                prev.insert(w, u);
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragments of a biconnected graph have two attachments")
}

/// Splits a directed face cycle along a path between two of its vertices,
/// keeping every dart in exactly one face.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let a = path[0];
    let b = *path.last().expect("path");
    let len = face.len();
    let i = face.iter().position(|&x| x == a).expect("attachment on face");
    let j = face.iter().position(|&x| x == b).expect("attachment on face");
    let arc = |from: usize, to: usize| {
        let mut out = Vec::new();
        let mut k = from;
        loop {
            out.push(face[k]);
            if k == to {
                break;
            }
            k = (k + 1) % len;
        }
        out
    };
    let inner = &path[1..path.len() - 1];
    // a → … → b along the face, back to a through the path
    let mut first = arc(i, j);
    first.extend(inner.iter().rev());
    // b → … → a along the face, back to b through the path
    let mut second = arc(j, i);
    second.extend(inner.iter());
    (first, second)
}

fn rotation_from_faces(g: &Graph, faces: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    // succ[v][u] = w whenever some face walks u → v → w
    let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); g.n()];
    for face in faces {
        let len = face.len();
        for i in 0..len {
            let u = face[(i + len - 1) % len];
            let v = face[i];
            let w = face[(i + 1) % len];
            if succ[v].insert(u, w).is_some() {
                return Err(Error::Internal(format!("dart ({u},{v}) in two faces")));
            }
        }
    }
    let mut rotation = Vec::with_capacity(g.n());
    for (v, map) in succ.iter().enumerate() {
        let deg = g.degree(v);
        if deg == 0 {
            rotation.push(Vec::new());
            continue;
        }
        let mut rot = Vec::with_capacity(deg);
        let first = g.neighbors(v)[0];
        let mut u = first;
        loop {
            rot.push(u);
            u = *map
                .get(&u)
                .ok_or_else(|| Error::Internal(format!("corner missing at {v}")))?;
            if u == first {
                break;
            }
            if rot.len() > deg {
                return Err(Error::Internal(format!("rotation at {v} does not close")));
            }
        }
        if rot.len() != deg {
            return Err(Error::Internal(format!("rotation at {v} is not a single cycle")));
        }
        rotation.push(rot);
    }
    Ok(rotation)
}
