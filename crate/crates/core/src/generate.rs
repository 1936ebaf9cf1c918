//! Generators for bipartite cubic planar graphs and the test corpus.

use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};
use crate::planar::is_planar;

/// Prism `C_m x K2`: outer cycle `0..m`, inner cycle `m..2m`, spokes
/// `(i, m+i)`. Bipartite exactly when `m` is even.
pub fn gen_prism(m: usize) -> Result<Graph> {
    if m < 4 || m % 2 == 1 {
        return Err(Error::Generator(format!(
            "prism needs an even cycle length >= 4, got {m}"
        )));
    }
    let mut pairs = Vec::with_capacity(3 * m);
    for i in 0..m {
        let j = (i + 1) % m;
        pairs.extend([(i, j), (m + i, m + j), (i, m + i)]);
    }
    Graph::from_edge_list(2 * m, pairs)
}

/// The 3-cube, which is the 4-prism.
pub fn gen_cube() -> Graph {
    gen_prism(4).expect("valid size")
}

/// Ladder `T_k` alone: `x_i = 2(i-1)`, `y_i = 2(i-1)+1`.
pub fn gen_ladder(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::Generator("ladder needs k >= 1".into()));
    }
    let mut pairs = Vec::with_capacity(3 * k);
    for i in 0..k {
        pairs.push((2 * i, 2 * i + 1));
        if i + 1 < k {
            pairs.extend([(2 * i, 2 * i + 2), (2 * i + 1, 2 * i + 3)]);
        }
    }
    Graph::from_edge_list(2 * k, pairs)
}

/// `M(left - e_left, T_k, right - e_right)`.
///
/// Vertices keep their ids in `left`, the ladder follows (`x_i`, `y_i`
/// interleaved) and `right` is shifted past it. With `e_left = (u,v)` and
/// `e_right = (m,n)` the connectors are `(u,x_1), (v,y_1), (m,x_k), (n,y_k)`,
/// or `(u,m), (v,n)` for `k = 0`.
pub fn gen_join(left: &Graph, e_left: Edge, right: &Graph, e_right: Edge, k: usize) -> Result<Graph> {
    for (g, (a, b), side) in [(left, e_left, "left"), (right, e_right, "right")] {
        crate::embedding::require_bcp(g)
            .map_err(|e| Error::Generator(format!("{side} graph is not a BCP graph: {e}")))?;
        if !g.has_edge(a, b) {
            return Err(Error::Generator(format!("({a},{b}) is not an edge of the {side} graph")));
        }
    }
    let nl = left.n();
    let off = nl + 2 * k;
    let (u, v) = e_left;
    let (m, n) = (e_right.0 + off, e_right.1 + off);
    let x = |i: usize| nl + 2 * i;
    let y = |i: usize| nl + 2 * i + 1;

    let mut pairs: Vec<Edge> = left.edges().iter().copied().filter(|&e| e != edge(u, v)).collect();
    pairs.extend(
        right
            .edges()
            .iter()
            .filter(|&&e| e != edge(e_right.0, e_right.1))
            .map(|&(a, b)| (a + off, b + off)),
    );
    if k == 0 {
        pairs.extend([(u, m), (v, n)]);
    } else {
        for i in 0..k {
            pairs.push((x(i), y(i)));
            if i + 1 < k {
                pairs.extend([(x(i), x(i + 1)), (y(i), y(i + 1))]);
            }
        }
        pairs.extend([(u, x(0)), (v, y(0)), (m, x(k - 1)), (n, y(k - 1))]);
    }
    let g = Graph::from_edge_list(off + right.n(), pairs)?;
    if g.bipartition().is_err() {
        return Err(Error::Generator(
            "connectors join vertices of the same bipartition class".into(),
        ));
    }
    if !is_planar(&g) {
        return Err(Error::NonPlanar);
    }
    if g.edge_connectivity()? != 2 {
        return Err(Error::Internal("join is not exactly 2-edge-connected".into()));
    }
    Ok(g)
}

/// Prisms of the given sizes joined left to right through ladders of the
/// given lengths. Without a seed each join uses the outer edge `(0,1)` of
/// the incoming prism and `(2,3)` of the previous one; a seed picks the
/// edge on the accumulated side at random among the previous prism's edges.
pub fn gen_chain(prisms: &[usize], ladders: &[usize], seed: Option<u64>) -> Result<Graph> {
    if prisms.is_empty() || ladders.len() + 1 != prisms.len() {
        return Err(Error::Generator(format!(
            "a chain of {} prisms needs {} ladder lengths, got {}",
            prisms.len(),
            prisms.len().saturating_sub(1),
            ladders.len()
        )));
    }
    let mut rng = seed.map(ChaCha8Rng::seed_from_u64);
    let mut acc = gen_prism(prisms[0])?;
    let mut last_offset = 0;
    let mut last_size = prisms[0];
    for (&m, &k) in prisms[1..].iter().zip(ladders) {
        let next = gen_prism(m)?;
        let e_acc = match rng.as_mut() {
            None => (last_offset + 2, last_offset + 3),
            Some(rng) => {
                let range = last_offset..last_offset + 2 * last_size;
                let candidates: Vec<Edge> = acc
                    .edges()
                    .iter()
                    .copied()
                    .filter(|&(a, b)| range.contains(&a) && range.contains(&b))
                    .collect();
                *candidates.choose(rng).expect("prism keeps edges")
            }
        };
        last_offset = acc.n() + 2 * k;
        last_size = m;
        acc = gen_join(&acc, e_acc, &next, (0, 1), k)?;
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Prism,
    Join,
    Chain,
}

#[derive(Clone, Debug)]
pub struct CorpusGraph {
    pub name: String,
    pub family: Family,
    pub graph: Graph,
}

/// The fixed corpus of BCP graphs used by the acceptance suite.
pub fn corpus() -> Vec<CorpusGraph> {
    let mut out = Vec::new();
    for m in [4, 6, 8, 10, 12] {
        out.push(CorpusGraph {
            name: format!("prism-{m}"),
            family: Family::Prism,
            graph: gen_prism(m).expect("valid prism"),
        });
    }
    let pairs: [((usize, usize), &[usize]); 6] = [
        ((4, 4), &[0, 1, 2, 3]),
        ((6, 6), &[0, 1, 2, 3]),
        ((8, 10), &[0, 1, 2, 3]),
        ((12, 12), &[0, 1, 2, 3]),
        ((4, 6), &[0, 1, 2, 3]),
        ((6, 10), &[1, 2]),
    ];
    for ((a, b), ks) in pairs {
        for &k in ks {
            let g = gen_join(
                &gen_prism(a).expect("valid prism"),
                (0, 1),
                &gen_prism(b).expect("valid prism"),
                (0, 1),
                k,
            )
            .expect("valid join");
            out.push(CorpusGraph {
                name: format!("join-{a}-{b}-k{k}"),
                family: Family::Join,
                graph: g,
            });
        }
    }
    let chains: [(&[usize], &[usize]); 6] = [
        (&[8, 8, 8], &[2, 1]),
        (&[8, 6, 6], &[0, 1]),
        (&[8, 8, 8], &[0, 0]),
        (&[10, 10, 8], &[1, 1]),
        (&[6, 6, 6], &[2, 3]),
        (&[4, 4, 4, 4, 4], &[2, 1, 2, 1]),
    ];
    for (prisms, ladders) in chains {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(".");
        out.push(CorpusGraph {
            name: format!("chain-{}-k{}", join(prisms), join(ladders)),
            family: Family::Chain,
            graph: gen_chain(prisms, ladders, None).expect("valid chain"),
        });
    }
    out
}
