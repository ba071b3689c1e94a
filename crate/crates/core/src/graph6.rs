//! graph6 short form (orders 0..=62), bit-compatible with nauty's `geng`
//! and `showg`.
//!
//! Layout: one header byte `63 + n`, then the upper triangle of the
//! adjacency matrix in column order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`),
//! packed six bits per byte, most significant bit first, each byte offset
//! by 63 and the final byte zero-padded.

use thiserror::Error;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_GRAPH6_ORDER: usize = 62;
const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty line")]
    Empty,
    #[error("malformed header byte {0:#04x}")]
    BadHeader(u8),
    #[error("orders above {MAX_GRAPH6_ORDER} are not supported")]
    UnsupportedOrder,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable graph6 range")]
    BadByte { offset: usize, byte: u8 },
    #[error("edge payload truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{0} trailing bytes after the edge payload")]
    TrailingData(usize),
    #[error("padding bits in the final byte are not zero")]
    NonZeroPadding,
}

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 line. Trailing line terminators and a leading
/// `>>graph6<<` marker are ignored.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (&head, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if head == b'~' {
        return Err(Graph6Error::UnsupportedOrder.into());
    }
    if !(63..=125).contains(&head) {
        return Err(Graph6Error::BadHeader(head).into());
    }
    let n = (head - 63) as usize;
    let expected = payload_len(n);
    if body.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: body.len() }.into());
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData(body.len() - expected).into());
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadByte { offset: i + 1, byte: b }.into());
        }
    }

    let mut g = Graph::empty(n)?;
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    while k < expected * 6 {
        if bit(k) {
            return Err(Graph6Error::NonZeroPadding.into());
        }
        k += 1;
    }
    Ok(g)
}

/// Encodes `g` without a trailing newline.
pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::OrderTooLarge { order: n, max: MAX_GRAPH6_ORDER });
    }
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(63 + n as u8);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent reference encoder: builds the full bit string first,
    /// then packs it, straight from the format description.
    fn reference_encode(n: usize, edges: &[(usize, usize)]) -> String {
        let mut bitstring = Vec::new();
        for j in 1..n {
            for i in 0..j {
                bitstring.push(edges.contains(&(i, j)) || edges.contains(&(j, i)));
            }
        }
        while bitstring.len() % 6 != 0 {
            bitstring.push(false);
        }
        let mut s = String::new();
        s.push((63 + n as u8) as char);
        for c in bitstring.chunks(6) {
            let v = c.iter().fold(0u8, |acc, &b| acc * 2 + b as u8);
            s.push((v + 63) as char);
        }
        s
    }

    #[test]
    fn small_known_strings() {
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
        assert_eq!(emit_graph6(&k1).unwrap(), "@");

        let k2 = parse_graph6("A_").unwrap();
        assert!(k2.has_edge(0, 1));
        assert_eq!(reference_encode(2, &[(0, 1)]), "A_");
        assert_eq!(emit_graph6(&Graph::empty(2).unwrap()).unwrap(), "A?");
        assert_eq!(reference_encode(2, &[]), "A?");

        let g = parse_graph6("DQc").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(emit_graph6(&g).unwrap(), "DQc");
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
    }

    #[test]
    fn tolerates_header_and_newline() {
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap(), parse_graph6("A_").unwrap());
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty.into()));
        assert_eq!(parse_graph6("!"), Err(Graph6Error::BadHeader(b'!').into()));
        assert_eq!(parse_graph6("D"), Err(Graph6Error::Truncated { expected: 2, found: 0 }.into()));
        assert_eq!(parse_graph6("A_?"), Err(Graph6Error::TrailingData(1).into()));
        assert_eq!(parse_graph6("A`"), Err(Graph6Error::NonZeroPadding.into()));
        assert_eq!(parse_graph6("~?@?"), Err(Graph6Error::UnsupportedOrder.into()));
        assert!(matches!(parse_graph6("D Q"), Err(Error::Graph6(_))));
    }

    #[test]
    fn emit_rejects_large_orders() {
        let g = Graph::empty(63).unwrap();
        assert!(emit_graph6(&g).is_err());
    }

    #[test]
    fn all_labeled_graphs_up_to_four_round_trip() {
        let mut total = 0;
        for n in 0..=4usize {
            let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            for mask in 0u32..1 << pairs.len() {
                let edges: Vec<_> =
                    pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                let s = emit_graph6(&g).unwrap();
                assert_eq!(s, reference_encode(n, &edges));
                assert_eq!(parse_graph6(&s).unwrap(), g);
                if n == 4 {
                    total += 1;
                }
            }
        }
        assert_eq!(total, 64);
    }

    proptest! {
        #[test]
        fn random_graphs_round_trip(n in 0usize..=62, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut g = Graph::empty(n).unwrap();
            for j in 1..n {
                for i in 0..j {
                    if rng.gen_bool(0.4) {
                        g.add_edge(i, j).unwrap();
                    }
                }
            }
            let s = emit_graph6(&g).unwrap();
            prop_assert_eq!(parse_graph6(&s).unwrap(), g);
            prop_assert_eq!(parse_graph6(&s).map(|h| emit_graph6(&h).unwrap()).unwrap(), s);
        }
    }
}
