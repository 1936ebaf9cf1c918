//! Spine layout of a ladder and the join of two embedded sides through it.
//!
//! The ladder is laid out rung by rung, alternating which rail comes first
//! so that consecutive rungs sit next to each other. Rungs go on the
//! `E2+E3` page, rails alternate between `E1+E2` and `E1+E3`, and the side
//! embeddings are recolored so their augmenting edges land on the page of
//! the connectors that replace them.

use crate::decomposition::{JoinRecord, Ladder};
use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};

use super::{BookEmbedding, SpineOrder};

// page index = edge color index
const PAGE_A: usize = 0; // E1+E2
const PAGE_B: usize = 2; // E2+E3
const PAGE_C: usize = 1; // E1+E3

/// Page of the rail pair between rung `i` and `i + 1` (1-based), which is
/// also the page of the right connectors when `i = k`.
pub fn rail_page(i: usize) -> usize {
    if i.is_multiple_of(2) {
        PAGE_A
    } else {
        PAGE_C
    }
}

/// Spine order of the ladder: `y1 x1 x2 y2 y3 x3 ...`.
pub fn ladder_sequence(ladder: &Ladder) -> Vec<usize> {
    let mut out = Vec::with_capacity(2 * ladder.k());
    for (i, (&x, &y)) in ladder.x.iter().zip(&ladder.y).enumerate() {
        if i % 2 == 0 {
            out.extend([y, x]);
        } else {
            out.extend([x, y]);
        }
    }
    out
}

/// [`ladder_sequence`] for the standalone ladder of
/// [`gen_ladder`](crate::generate::gen_ladder); empty for `k = 0`.
pub fn ladder_order(k: usize) -> SpineOrder {
    let ladder = Ladder {
        x: (0..k).map(|i| 2 * i).collect(),
        y: (0..k).map(|i| 2 * i + 1).collect(),
    };
    SpineOrder::new(ladder_sequence(&ladder)).expect("distinct ladder vertices")
}

/// Pages of ladder and connector edges for a join.
pub fn ladder_pages(rec: &JoinRecord) -> Vec<(Edge, usize)> {
    let k = rec.k();
    let mut out: Vec<(Edge, usize)> = rec.left_connectors().iter().map(|&e| (e, PAGE_A)).collect();
    out.extend(rec.ladder.rungs().into_iter().map(|e| (e, PAGE_B)));
    for i in 1..k {
        out.extend(rec.ladder.rails(i - 1).into_iter().map(|e| (e, rail_page(i))));
    }
    if k > 0 {
        out.extend(rec.right_connectors().iter().map(|&e| (e, rail_page(k))));
    }
    out
}

fn swap_perm(a: usize, b: usize) -> [usize; 3] {
    let mut perm = [0, 1, 2];
    perm.swap(a, b);
    perm
}

/// The left attach vertex that ends the left block and the right attach
/// vertex that starts the right block.
///
/// With a ladder, `v` sits next to `y_1`, and the right block starts with
/// `n` next to `y_k` for even `k` or `m` next to `x_k` for odd `k`. Without
/// one, `u` sits next to `m`.
fn junction(rec: &JoinRecord) -> (usize, usize) {
    match rec.k() {
        0 => (rec.u, rec.m),
        k if k % 2 == 0 => (rec.v, rec.n),
        _ => (rec.v, rec.m),
    }
}

/// Combines child orders of `G_L + uv` and `G_R + mn` with the ladder
/// sequence, rotating the children so the junction vertices meet.
pub fn splice_order(
    left: &SpineOrder,
    ladder: &SpineOrder,
    right: &SpineOrder,
    rec: &JoinRecord,
) -> Result<SpineOrder> {
    let (end, start) = junction(rec);
    let left = left
        .ending_with(end)
        .ok_or_else(|| Error::Contract(format!("attach vertex {end} missing from left order")))?;
    let right = right
        .starting_with(start)
        .ok_or_else(|| Error::Contract(format!("attach vertex {start} missing from right order")))?;
    let mut spine = left.into_vec();
    spine.extend_from_slice(ladder.as_slice());
    spine.extend(right.into_vec());
    SpineOrder::new(spine)
}

/// Joins embeddings of the augmented sides `G_L + uv` and `G_R + mn` into
/// an embedding of the joined graph. Each side's labels are permuted so
/// its augmenting edge carries the page of the connectors replacing it.
pub fn splice(left: &BookEmbedding, right: &BookEmbedding, rec: &JoinRecord) -> Result<BookEmbedding> {
    let missing = |side: &str, a: usize, b: usize| {
        Error::Contract(format!("{side} embedding lacks the augmenting edge ({a},{b})"))
    };
    let pl = left.page(rec.u, rec.v).ok_or_else(|| missing("left", rec.u, rec.v))?;
    let pr = right.page(rec.m, rec.n).ok_or_else(|| missing("right", rec.m, rec.n))?;
    if pl > 2 || pr > 2 {
        return Err(Error::Contract("side embedding uses more than three pages".into()));
    }
    let left = left.with_pages_permuted(&swap_perm(pl, PAGE_A));
    let right = right.with_pages_permuted(&swap_perm(pr, rail_page(rec.k())));
    let ladder = SpineOrder::new(ladder_sequence(&rec.ladder))?;
    let spine = splice_order(&left.spine, &ladder, &right.spine, rec)?;

    let (uv, mn) = (edge(rec.u, rec.v), edge(rec.m, rec.n));
    let mut pages: Vec<(Edge, usize)> = left
        .pages()
        .iter()
        .chain(right.pages())
        .filter(|&&(e, _)| e != uv && e != mn)
        .copied()
        .collect();
    pages.extend(ladder_pages(rec));
    BookEmbedding::new(spine, pages)
}

/// A ladder `T_k` with four pendant connector stubs, laid out as in a join.
///
/// Ladder vertices are `x_i = 2(i-1)`, `y_i = 2(i-1)+1`; the stubs are
/// `u = 2k`, `v = 2k+1`, `m = 2k+2`, `n = 2k+3`.
pub fn ladder_layout(k: usize) -> Result<(Graph, BookEmbedding)> {
    if k == 0 {
        return Err(Error::Generator("ladder layout needs k >= 1".into()));
    }
    let ladder = Ladder {
        x: (0..k).map(|i| 2 * i).collect(),
        y: (0..k).map(|i| 2 * i + 1).collect(),
    };
    let rec = JoinRecord {
        u: 2 * k,
        v: 2 * k + 1,
        m: 2 * k + 2,
        n: 2 * k + 3,
        ladder,
    };
    let pages = ladder_pages(&rec);
    let g = Graph::from_edge_list(2 * k + 4, pages.iter().map(|&(e, _)| e))?;
    let (near, far) = if k.is_multiple_of(2) { (rec.n, rec.m) } else { (rec.m, rec.n) };
    let mut spine = vec![rec.u, rec.v];
    spine.extend(ladder_sequence(&rec.ladder));
    spine.extend([near, far]);
    Ok((g, BookEmbedding::new(SpineOrder::new(spine)?, pages)?))
}
