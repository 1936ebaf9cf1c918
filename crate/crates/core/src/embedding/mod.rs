//! 3-page matching book embeddings of bipartite cubic planar graphs.
//!
//! Small or 3-connected graphs are laid out along a Hamiltonian cycle with
//! pages taken from the edge coloring induced by a face 3-coloring. Larger
//! 2-connected graphs are split along ladders, embedded piecewise and
//! spliced back together.

mod book;
pub mod hamiltonian;
pub mod ladder;

use std::ops::ControlFlow;

pub use book::{BookEmbedding, SpineOrder};
pub use hamiltonian::hamiltonian_order;

use crate::coloring::{induced_edge_coloring, three_face_coloring, EdgeColoring};
use crate::conflict::{Coloring, ConflictGraph};
use crate::decomposition::{ternary_decompose_with, DecompositionTree, LARGE_ORDER_MIN};
use crate::error::{Error, Result};
use crate::graph::{edge, Graph};
use crate::planar::{is_planar, planar_embedding};
use crate::verify::is_valid_embedding;

use hamiltonian::{for_each_hamiltonian_cycle, DEFAULT_NODE_BUDGET};

/// Node budget for the exact page recoloring of a single spine.
pub const RECOLOR_BUDGET: u64 = 200_000;
/// Hamiltonian cycles tried per leaf before giving up.
pub const MAX_LEAF_CYCLES: usize = 5_000;

/// Fails unless `g` is connected, cubic, bipartite and planar.
pub fn require_bcp(g: &Graph) -> Result<()> {
    g.require_connected()?;
    g.require_cubic()?;
    g.bipartition()?;
    if !is_planar(g) {
        return Err(Error::NonPlanar);
    }
    Ok(())
}

/// A 3-page matching book embedding of a connected BCP graph.
pub fn embed(g: &Graph) -> Result<BookEmbedding> {
    require_bcp(g)?;
    let two_connected_only = g.edge_connectivity()? == 2;
    if g.n() >= LARGE_ORDER_MIN && two_connected_only {
        return embed_decomposed(g, LARGE_ORDER_MIN);
    }
    match embed_leaf(g) {
        Err(Error::SubHamiltonianUnsupported { .. }) if two_connected_only => embed_decomposed(g, 0),
        other => other,
    }
}

fn embed_decomposed(g: &Graph, min_order: usize) -> Result<BookEmbedding> {
    let tree = ternary_decompose_with(g, min_order)?;
    let be = assemble(&tree)?;
    finish(g, be)
}

/// Embeds every leaf and splices the joins bottom-up. The result is in the
/// vertex ids of the decomposed graph and is not verified.
pub fn assemble(tree: &DecompositionTree) -> Result<BookEmbedding> {
    match tree {
        DecompositionTree::Leaf(leaf) => {
            let local = embed_leaf(&leaf.graph)?;
            let spine = local.spine.mapped(&leaf.labels);
            let pages = local
                .pages()
                .iter()
                .map(|&((a, b), p)| (edge(leaf.labels[a], leaf.labels[b]), p));
            BookEmbedding::new(spine, pages)
        }
        DecompositionTree::Join(join) => {
            let (left, right) = rayon::join(|| assemble(&join.left), || assemble(&join.right));
            ladder::splice(&left?, &right?, &join.record)
        }
    }
}

/// Checks an assembled embedding, recoloring its spine exactly if the
/// constructed pages are off.
fn finish(g: &Graph, be: BookEmbedding) -> Result<BookEmbedding> {
    if is_valid_embedding(g, &be, 3) {
        return Ok(be);
    }
    recolor(g, &be.spine).ok_or_else(|| {
        Error::Internal("assembled spine admits no 3-page assignment within budget".into())
    })
}

fn recolor(g: &Graph, spine: &SpineOrder) -> Option<BookEmbedding> {
    match ConflictGraph::new(g, spine).color(3, &[], RECOLOR_BUDGET) {
        Coloring::Found(colors) => {
            let pages = g.edges().iter().copied().zip(colors);
            BookEmbedding::new(spine.clone(), pages).ok()
        }
        _ => None,
    }
}

/// Pages an edge coloring on a fixed spine: color index as page when that
/// is already valid, otherwise an exact 3-coloring of the conflict graph.
///
/// When neither works the graph is re-validated: a non-BCP input is
/// reported as such, anything else as an internal error.
pub fn assign_pages(g: &Graph, spine: &SpineOrder, ec: &EdgeColoring) -> Result<BookEmbedding> {
    spine.require_bijection(g)?;
    if let Some(be) = try_assign(g, spine, ec)? {
        return Ok(be);
    }
    require_bcp(g)?;
    Err(Error::Internal(
        "spine admits no 3-page matching assignment within budget".into(),
    ))
}

fn try_assign(g: &Graph, spine: &SpineOrder, ec: &EdgeColoring) -> Result<Option<BookEmbedding>> {
    let pages = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            ec.get(u, v)
                .map(|c| (edge(u, v), c.index()))
                .ok_or_else(|| Error::Contract(format!("edge ({u},{v}) has no color")))
        })
        .collect::<Result<Vec<_>>>()?;
    let be = BookEmbedding::new(spine.clone(), pages)?;
    if is_valid_embedding(g, &be, 3) {
        return Ok(Some(be));
    }
    Ok(recolor(g, spine))
}

/// Cyclic rotation of a spine by `steps` positions.
pub fn rotate_order(s: &SpineOrder, steps: usize) -> SpineOrder {
    s.rotate(steps)
}

pub fn reverse_order(s: &SpineOrder) -> SpineOrder {
    s.reversed()
}

/// Lays a BCP graph out along a Hamiltonian cycle.
///
/// Cycles are tried in search order; the first whose induced edge coloring
/// is a valid page assignment, or whose conflict graph is exactly
/// 3-colorable, wins.
pub fn embed_leaf(g: &Graph) -> Result<BookEmbedding> {
    let planar = planar_embedding(g)?;
    let fc = three_face_coloring(&planar)?;
    let ec = induced_edge_coloring(&planar, &fc)?;
    let mut found = None;
    let mut tried = 0;
    for_each_hamiltonian_cycle(g, DEFAULT_NODE_BUDGET, |cycle| {
        tried += 1;
        let spine = SpineOrder::new(cycle.to_vec()).expect("cycle is a permutation");
        if let Ok(Some(be)) = try_assign(g, &spine, &ec) {
            found = Some(be);
            return ControlFlow::Break(());
        }
        if tried >= MAX_LEAF_CYCLES {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found.ok_or(Error::SubHamiltonianUnsupported {
        n: g.n(),
        budget: DEFAULT_NODE_BUDGET,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{gen_join, gen_prism};
    use crate::verify::verify_matching_book_embedding;

    fn check(g: &Graph) {
        let be = embed(g).unwrap();
        let v = verify_matching_book_embedding(g, &be, 3).unwrap();
        assert!(v.is_empty(), "{v:?}");
        assert_eq!(be.page_count(), 3);
    }

    #[test]
    fn prisms_embed() {
        for m in [4, 6, 8, 10, 12, 14] {
            check(&gen_prism(m).unwrap());
        }
    }

    #[test]
    fn joins_embed_for_every_parity() {
        let c8 = gen_prism(8).unwrap();
        for k in 0..=3 {
            check(&gen_join(&c8, (0, 1), &c8, (2, 3), k).unwrap());
        }
    }

    #[test]
    fn rejects_non_bcp() {
        let k4 = Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(matches!(embed(&k4), Err(Error::NotBipartite(_))));
        let c6 = Graph::from_edge_list(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert!(matches!(embed(&c6), Err(Error::NotCubic { .. })));
    }

    #[test]
    fn rotations_of_a_cube_embedding_stay_valid() {
        let q3 = gen_prism(4).unwrap();
        let be = embed(&q3).unwrap();
        for steps in 0..8 {
            let rotated = be.with_spine(rotate_order(&be.spine, steps));
            assert!(is_valid_embedding(&q3, &rotated, 3), "rotation {steps}");
            let reflected = be.with_spine(reverse_order(&rotated.spine));
            assert!(is_valid_embedding(&q3, &reflected, 3));
        }
        assert_eq!(
            rotate_order(&SpineOrder::new(vec![0, 1, 2]).unwrap(), 1).as_slice(),
            &[1, 2, 0]
        );
    }

    #[test]
    fn even_cycle_on_its_own_spine_uses_two_pages() {
        use crate::coloring::EdgeColor;
        let c6 = Graph::from_edge_list(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let ec = EdgeColoring::from_pairs(c6.edges().iter().map(|&(u, v)| {
            let c = if u.min(v) % 2 == 0 && (u, v) != (0, 5) { EdgeColor::E1E2 } else { EdgeColor::E1E3 };
            ((u, v), c)
        }));
        let be = assign_pages(&c6, &SpineOrder::new((0..6).collect()).unwrap(), &ec).unwrap();
        assert_eq!(be.page_count(), 2);
        assert!(is_valid_embedding(&c6, &be, 2));
    }

    #[test]
    fn assign_pages_requires_full_coloring() {
        let q3 = gen_prism(4).unwrap();
        let spine = SpineOrder::new((0..8).collect()).unwrap();
        assert!(matches!(
            assign_pages(&q3, &spine, &EdgeColoring::default()),
            Err(Error::Contract(_))
        ));
    }
}
