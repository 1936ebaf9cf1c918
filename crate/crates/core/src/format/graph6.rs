//! The graph6 text encoding of simple undirected graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;
/// Largest order written with the 4-byte size form.
const MAX_ORDER: usize = 258_047;

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_ORDER, "graph6 orders above {MAX_ORDER} are not supported");
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|b| b as u8 + BIAS));
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(chunk + BIAS);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses one graph6 line; an optional `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn parse_graph6(s: &str) -> Result<Graph> {
    let (skip, body) = match s.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, s),
    };
    let bytes = body.trim_end().as_bytes();
    let err = |at: usize, message: &str| Error::Graph6 {
        offset: skip + at,
        message: message.to_string(),
    };
    if let Some(at) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(at, "byte outside the graph6 range 63..=126"));
    }
    let six = |at: usize| (bytes[at] - BIAS) as usize;
    let (n, start) = match bytes.first() {
        None => return Err(err(0, "empty input")),
        Some(126) => {
            if bytes.get(1) == Some(&126) {
                return Err(err(1, "orders above 258047 are not supported"));
            }
            if bytes.len() < 4 {
                return Err(err(bytes.len(), "truncated order field"));
            }
            ((six(1) << 12) | (six(2) << 6) | six(3), 4)
        }
        Some(_) => (six(0), 1),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = start + bits.div_ceil(6);
    if bytes.len() < expected {
        return Err(err(bytes.len(), &format!("truncated: expected {expected} bytes")));
    }
    if bytes.len() > expected {
        return Err(err(expected, "trailing bytes after the adjacency field"));
    }
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = six(start + k / 6);
            if (byte >> (5 - k % 6)) & 1 == 1 {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 && six(expected - 1) & ((1 << (6 - bits % 6)) - 1) != 0 {
        return Err(err(expected - 1, "nonzero padding bits"));
    }
    Graph::from_edge_list(n, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{corpus, gen_prism};

    #[test]
    fn k4_by_hand() {
        // 'C' = 67 → n = 4; '~' = 126 → 63 = 0b111111, all six pairs present
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(k4.n(), 4);
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(emit_graph6(&k4), "C~");
    }

    #[test]
    fn path_by_hand() {
        // P3 as 0-1-2: bits (0,1)=1 (0,2)=0 (1,2)=1 → 101000 = 40 → 'g'
        let g = parse_graph6("Bg").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn header_and_newline() {
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap().edge_count(), 6);
    }

    #[test]
    fn errors_carry_offsets() {
        match parse_graph6("G") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        match parse_graph6("C~~") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        match parse_graph6("C\u{1}") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("~?").is_err());
    }

    #[test]
    fn long_form_order() {
        let g = gen_prism(32).unwrap();
        let s = emit_graph6(&g);
        assert!(s.starts_with("~?@?"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn corpus_round_trips() {
        for c in corpus() {
            assert_eq!(parse_graph6(&emit_graph6(&c.graph)).unwrap(), c.graph, "{}", c.name);
        }
    }
}
