//! SVG arc diagrams of book embeddings.
//!
//! Vertices sit on a horizontal spine in spine order and every edge is a
//! semicircle between its endpoints. Even pages are drawn above the spine,
//! odd pages below, each in its own palette color.

use std::fmt::Write;

use crate::embedding::BookEmbedding;

pub const PALETTE: [&str; 3] = ["#d62728", "#1f77b4", "#2ca02c"];

const STEP: f64 = 40.0;
const MARGIN: f64 = 30.0;

pub fn render_svg(be: &BookEmbedding) -> String {
    let order = be.spine.as_slice();
    let pos = be.spine.positions();
    let n = order.len();
    let half = STEP * n.saturating_sub(1) as f64 / 2.0 + MARGIN;
    let width = 2.0 * MARGIN + STEP * n.saturating_sub(1) as f64;
    let height = 2.0 * half;
    let x = |v: usize| MARGIN + STEP * pos[v] as f64;
    let y = half;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        svg,
        r#"  <line x1="{MARGIN}" y1="{y}" x2="{}" y2="{y}" stroke="black" stroke-width="1"/>"#,
        width - MARGIN
    );
    for &((u, v), page) in be.pages() {
        let (a, b) = if x(u) < x(v) { (x(u), x(v)) } else { (x(v), x(u)) };
        let r = (b - a) / 2.0;
        // sweep 1 bulges upward when drawn left to right
        let sweep = if page % 2 == 0 { 1 } else { 0 };
        let color = PALETTE[page % PALETTE.len()];
        let _ = writeln!(
            svg,
            r#"  <path d="M {a} {y} A {r} {r} 0 0 {sweep} {b} {y}" fill="none" stroke="{color}" stroke-width="1.5" data-edge="{u}-{v}" data-page="{page}"/>"#
        );
    }
    for &v in order {
        let cx = x(v);
        let _ = writeln!(svg, r#"  <circle cx="{cx}" cy="{y}" r="4" fill="black"/>"#);
        let _ = writeln!(
            svg,
            r#"  <text x="{cx}" y="{}" font-size="10" text-anchor="middle">{v}</text>"#,
            y + 14.0
        );
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::SpineOrder;

    #[test]
    fn arcs_and_vertices() {
        let be = BookEmbedding::new(
            SpineOrder::new(vec![0, 1, 2]).unwrap(),
            [((0, 1), 0), ((1, 2), 1), ((0, 2), 2)],
        )
        .unwrap();
        let svg = render_svg(&be);
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("<path").count(), 3);
        assert_eq!(svg.matches("<circle").count(), 3);
        assert!(svg.contains(PALETTE[1]));
        assert!(svg.contains(r#"data-edge="0-2" data-page="2""#));
    }
}
