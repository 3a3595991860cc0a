//! The graph6 text encoding.
//!
//! A line is a length field followed by the upper triangle of the adjacency
//! matrix in column order `(0,1), (0,2), (1,2), (0,3), ...`, packed six bits
//! per character (most significant first, zero padded) and offset by 63.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order whose length field is a single character.
pub const SHORT_FORM_MAX: usize = 62;

/// Header some tools put in front of graph6 files.
pub const HEADER: &str = ">>graph6<<";

fn bad(position: usize, reason: &'static str) -> Error {
    Error::Graph6 { position, reason }
}

/// Parses one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` header are ignored.
pub fn parse(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(bad(pos, "character outside the range 63..=126"));
    }
    let (order, body_start) = parse_length(bytes)?;
    let bits = order * order.saturating_sub(1) / 2;
    let body = &bytes[body_start..];
    if body.len() != bits.div_ceil(6) {
        return Err(bad(body_start, "edge data length does not match the order"));
    }

    let mut g = Graph::empty(order);
    let mut k = 0;
    for j in 1..order {
        for i in 0..j {
            let ch = body[k / 6] - 63;
            if ch & (1 << (5 - k % 6)) != 0 {
                g.add_edge_unchecked(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[body.len() - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(bad(body_start + body.len() - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

fn parse_length(bytes: &[u8]) -> Result<(usize, usize)> {
    let value = |range: core::ops::Range<usize>| -> Result<usize> {
        if bytes.len() < range.end {
            return Err(bad(bytes.len(), "truncated length field"));
        }
        Ok(bytes[range].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
    };
    match bytes {
        [] => Err(bad(0, "empty input")),
        [126, 126, ..] => {
            let n = value(2..8)?;
            if n < 258_048 {
                return Err(bad(0, "non-minimal length field"));
            }
            Ok((n, 8))
        }
        [126, ..] => {
            let n = value(1..4)?;
            if n <= SHORT_FORM_MAX {
                return Err(bad(0, "non-minimal length field"));
            }
            Ok((n, 4))
        }
        [b, ..] => Ok(((b - 63) as usize, 1)),
    }
}

/// Encodes `g` as a graph6 line (without newline). Only the single-character
/// length field is produced, so the order must not exceed 62.
pub fn write(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > SHORT_FORM_MAX {
        return Err(Error::OrderTooLarge { order: n, limit: SHORT_FORM_MAX });
    }
    Ok(String::from_utf8(encode_bytes(g)).expect("graph6 is ASCII"))
}

pub(crate) fn encode_bytes(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + bits.div_ceil(6));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(63 + acc);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push(63 + (acc << (6 - k % 6)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_graph, path_graph};
    use alloc::vec;

    #[test]
    fn small_examples() {
        assert_eq!(parse("Bw").unwrap(), complete_graph(3));
        assert_eq!(parse("Bg").unwrap(), path_graph(3));
        assert_eq!(write(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(write(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(parse("?").unwrap().order(), 0);
    }

    #[test]
    fn header_and_whitespace() {
        assert_eq!(parse(">>graph6<<Bw\n").unwrap(), complete_graph(3));
    }

    #[test]
    fn petgraph_reference_string() {
        // A-C, A-E, B-D, D-E on five vertices
        let g = Graph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write(&g).unwrap(), "DQc");
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(parse(""), Err(Error::Graph6 { .. })));
        assert!(matches!(parse("B w"), Err(Error::Graph6 { position: 1, .. })));
        assert!(matches!(parse("Bww"), Err(Error::Graph6 { .. })));
        // K_3 with a padding bit set: 111001
        assert!(matches!(parse("Bx"), Err(Error::Graph6 { reason: "nonzero padding bits", .. })));
        assert!(matches!(parse("~??"), Err(Error::Graph6 { .. })));
        assert!(matches!(parse("~??@"), Err(Error::Graph6 { reason: "non-minimal length field", .. })));
    }

    #[test]
    fn long_length_field() {
        // order 63, no edges: '~' then 63 in 18 bits
        let mut line = vec![126u8, 63, 63, 63 + 63];
        line.extend(core::iter::repeat_n(63u8, (63 * 62 / 2usize).div_ceil(6)));
        let text = core::str::from_utf8(&line).unwrap();
        let g = parse(text).unwrap();
        assert_eq!((g.order(), g.size()), (63, 0));
        assert!(matches!(write(&g), Err(Error::OrderTooLarge { .. })));
    }
}
