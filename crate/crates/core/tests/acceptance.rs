//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bcp_book::coloring::{induced_edge_coloring, is_perfect_matching, three_face_coloring, verify_edge_coloring};
use bcp_book::conflict::{Coloring, ConflictGraph};
use bcp_book::decomposition::{check_two_connected_bcp, ternary_decompose, LARGE_ORDER_MIN, SMALL_ORDER_MAX};
use bcp_book::embedding::ladder::ladder_layout;
use bcp_book::generate::{corpus, CorpusGraph, Family};
use bcp_book::verify::{is_valid_embedding, mbt_oracle};
use bcp_book::{embed, planar_embedding, verify_matching_book_embedding, BookEmbedding, Graph, Mbt, SpineOrder};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn(&[CorpusGraph]) -> Outcome);

fn main() -> ExitCode {
    let corpus = corpus();
    let criteria: [Criterion; 7] = [
        ("3-page embeddings of the corpus", embeddings),
        ("oracle agrees on small graphs", oracle),
        ("face and edge colorings", colorings),
        ("connectivity", connectivity),
        ("decomposition round-trip", decomposition),
        ("rotation and reflection invariance", rotations),
        ("ladder layouts with connector stubs", ladders),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check(&corpus);
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}; {secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({detail}; {secs:.2}s)", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn embeddings(corpus: &[CorpusGraph]) -> Outcome {
    let chains = corpus.iter().filter(|c| c.family == Family::Chain);
    if corpus.len() < 30 || chains.clone().count() < 5 || !chains.clone().any(|c| c.graph.n() == 54) {
        return Err("corpus shape".into());
    }
    let mut slowest = Duration::ZERO;
    for c in corpus {
        let start = Instant::now();
        let be = embed(&c.graph).map_err(|e| format!("{}: {e}", c.name))?;
        let violations = verify_matching_book_embedding(&c.graph, &be, 3).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        slowest = slowest.max(elapsed);
        if !violations.is_empty() {
            return Err(format!("{}: {} violations", c.name, violations.len()));
        }
        if be.page_count() != 3 {
            return Err(format!("{}: {} pages", c.name, be.page_count()));
        }
        if elapsed > Duration::from_secs(5) {
            return Err(format!("{}: {:.2}s", c.name, elapsed.as_secs_f64()));
        }
    }
    Ok(format!("{} graphs, slowest {:.3}s", corpus.len(), slowest.as_secs_f64()))
}

fn oracle(corpus: &[CorpusGraph]) -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for c in corpus.iter().filter(|c| c.graph.n() <= 10) {
        let exact = mbt_oracle(&c.graph, 4).map_err(|e| e.to_string())?;
        let pipeline = embed(&c.graph).map_err(|e| e.to_string())?.page_count();
        if exact != Mbt::Exact(pipeline) || exact != Mbt::Exact(3) {
            return Err(format!("{}: oracle {exact:?}, pipeline {pipeline}", c.name));
        }
        checked += 1;
    }
    let cycle = |n: usize| Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap();
    let fixed = [
        ("C4", cycle(4), 2),
        ("C6", cycle(6), 2),
        ("K2", Graph::from_edge_list(2, [(0, 1)]).unwrap(), 1),
        ("K1,3", Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3)]).unwrap(), 3),
    ];
    for (name, g, want) in fixed {
        let got = mbt_oracle(&g, 4).map_err(|e| e.to_string())?;
        if got != Mbt::Exact(want) {
            return Err(format!("{name}: {got:?}, expected {want}"));
        }
    }
    if start.elapsed() > Duration::from_secs(60) {
        return Err("over 60s".into());
    }
    Ok(format!("{checked} corpus graphs plus 4 fixed values"))
}

fn colorings(corpus: &[CorpusGraph]) -> Outcome {
    for c in corpus {
        let start = Instant::now();
        let g = &c.graph;
        let emb = planar_embedding(g).map_err(|e| format!("{}: {e}", c.name))?;
        let fc = three_face_coloring(&emb).map_err(|e| format!("{}: {e}", c.name))?;
        if !fc.is_proper(&emb) {
            return Err(format!("{}: improper face coloring", c.name));
        }
        let ec = induced_edge_coloring(&emb, &fc).map_err(|e| format!("{}: {e}", c.name))?;
        if !verify_edge_coloring(g, &ec) {
            return Err(format!("{}: improper edge coloring", c.name));
        }
        for class in ec.classes() {
            if class.len() != g.n() / 2 || !is_perfect_matching(g, &class) {
                return Err(format!("{}: class of size {} is not a perfect matching", c.name, class.len()));
            }
        }
        if start.elapsed() > Duration::from_secs(1) {
            return Err(format!("{}: over 1s", c.name));
        }
    }
    Ok(format!("{} graphs", corpus.len()))
}

fn connectivity(corpus: &[CorpusGraph]) -> Outcome {
    for c in corpus {
        let g = &c.graph;
        let kappa = g.vertex_connectivity().map_err(|e| e.to_string())?;
        let lambda = g.edge_connectivity().map_err(|e| e.to_string())?;
        if kappa != lambda || !(2..=3).contains(&kappa) || g.n() % 2 != 0 {
            return Err(format!("{}: kappa {kappa}, kappa' {lambda}, n {}", c.name, g.n()));
        }
        if c.family != Family::Prism && kappa != 2 {
            return Err(format!("{}: join-generated graph has kappa {kappa}", c.name));
        }
    }
    Ok(format!("{} graphs", corpus.len()))
}

fn decomposition(corpus: &[CorpusGraph]) -> Outcome {
    let mut checked = 0;
    let mut leaves = 0;
    for c in corpus {
        let g = &c.graph;
        if g.n() < LARGE_ORDER_MIN || g.vertex_connectivity().map_err(|e| e.to_string())? != 2 {
            continue;
        }
        let tree = ternary_decompose(g).map_err(|e| format!("{}: {e}", c.name))?;
        for leaf in tree.leaves() {
            let h = &leaf.graph;
            check_two_connected_bcp(h).map_err(|e| format!("{}: leaf {e}", c.name))?;
            let kappa = h.vertex_connectivity().map_err(|e| e.to_string())?;
            let small = h.n() <= SMALL_ORDER_MAX;
            let large = kappa == 3 && h.n() >= LARGE_ORDER_MIN;
            if !(small || large) {
                return Err(format!("{}: leaf of order {} with kappa {kappa}", c.name, h.n()));
            }
            leaves += 1;
        }
        if tree.reassemble() != g.edges() {
            return Err(format!("{}: reassembly differs", c.name));
        }
        checked += 1;
    }
    Ok(format!("{checked} graphs, {leaves} leaves"))
}

/// A valid embedding different from the pipeline's: a random spine paged
/// exactly when that succeeds, else the pipeline's embedding under a random
/// page relabeling, rotation and reflection.
fn mutate(g: &Graph, base: &BookEmbedding, rng: &mut ChaCha8Rng) -> BookEmbedding {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(rng);
    let spine = SpineOrder::new(order).unwrap();
    if let Coloring::Found(colors) = ConflictGraph::new(g, &spine).color(3, &[], 20_000) {
        return BookEmbedding::new(spine, g.edges().iter().copied().zip(colors)).unwrap();
    }
    let mut perm = [0, 1, 2];
    perm.shuffle(rng);
    let mut spine = base.spine.rotate(rng.random_range(0..g.n()));
    if rng.random_bool(0.5) {
        spine = spine.reversed();
    }
    base.with_pages_permuted(&perm).with_spine(spine)
}

fn rotations(corpus: &[CorpusGraph]) -> Outcome {
    let small: Vec<&CorpusGraph> = corpus.iter().filter(|c| c.graph.n() <= 12).collect();
    if small.is_empty() {
        return Err("no corpus graph with at most 12 vertices".into());
    }
    let bases: Vec<BookEmbedding> = small.iter().map(|c| embed(&c.graph).unwrap()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut spines = 0;
    for i in 0..200 {
        let which = i % small.len();
        let g = &small[which].graph;
        let be = mutate(g, &bases[which], &mut rng);
        if !is_valid_embedding(g, &be, 3) {
            return Err(format!("mutation {i} is not valid to begin with"));
        }
        for steps in 0..g.n() {
            let rotated = be.with_spine(be.spine.rotate(steps));
            let reflected = be.with_spine(rotated.spine.reversed());
            if !is_valid_embedding(g, &rotated, 3) || !is_valid_embedding(g, &reflected, 3) {
                return Err(format!("mutation {i} ({}) breaks at rotation {steps}", small[which].name));
            }
            spines += 2;
        }
    }
    Ok(format!("200 embeddings, {spines} spines"))
}

fn ladders(_: &[CorpusGraph]) -> Outcome {
    for k in 1..=10 {
        let (g, be) = ladder_layout(k).map_err(|e| e.to_string())?;
        let violations = verify_matching_book_embedding(&g, &be, 3).map_err(|e| e.to_string())?;
        if !violations.is_empty() {
            return Err(format!("k = {k}: {violations:?}"));
        }
    }
    Ok("k = 1..10".into())
}
