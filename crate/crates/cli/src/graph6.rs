//! The graph6 text format for undirected graphs.

use thiserror::Error;
use wrdom_core::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {offset}: {byte:#04x} is outside the graph6 range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("graph6 string ends after {found} bytes, expected {expected}")]
    Truncated { expected: usize, found: usize },
    #[error("byte {offset}: unexpected data after the adjacency bits")]
    TrailingData { offset: usize },
    #[error("byte {offset}: padding bits are not zero")]
    NonZeroPadding { offset: usize },
    #[error("graph has {n} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices { n: usize },
}

fn sixbits(bytes: &[u8], offset: usize) -> Result<u8, Graph6Error> {
    let byte = bytes[offset];
    if !(63..=126).contains(&byte) {
        return Err(Graph6Error::BadByte { offset, byte });
    }
    Ok(byte - 63)
}

/// Parses one graph6 line; a leading `>>graph6<<` header is accepted.
pub fn parse(line: &str) -> Result<Graph, Graph6Error> {
    let skip = if line.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = line.as_bytes();
    let body = &bytes[skip..];
    if body.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let at = |i: usize| i + skip;
    let (n, mut pos) = if body[0] != 126 {
        (sixbits(bytes, at(0))? as usize, 1)
    } else if body.len() > 1 && body[1] == 126 {
        // Eight-byte form; anything it can express beyond 258047 is over the cap anyway.
        if body.len() < 8 {
            return Err(Graph6Error::Truncated { expected: 8, found: body.len() });
        }
        let mut n = 0usize;
        for i in 2..8 {
            n = n << 6 | sixbits(bytes, at(i))? as usize;
        }
        (n, 8)
    } else {
        if body.len() < 4 {
            return Err(Graph6Error::Truncated { expected: 4, found: body.len() });
        }
        let mut n = 0usize;
        for i in 1..4 {
            n = n << 6 | sixbits(bytes, at(i))? as usize;
        }
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooManyVertices { n });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if body.len() < pos + needed {
        return Err(Graph6Error::Truncated { expected: pos + needed, found: body.len() });
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = sixbits(bytes, at(pos + k / 6))?;
            if chunk >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = pos + needed - 1;
        let pad = 6 - bits % 6;
        if sixbits(bytes, at(last))? & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding { offset: at(last) });
        }
    }
    pos += needed;
    if body.len() > pos {
        return Err(Graph6Error::TrailingData { offset: at(pos) });
    }
    Ok(Graph::from_adjacency(adj).expect("graph6 bits describe a simple graph"))
}

/// Writes `g` in graph6 without a header.
pub fn write(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) as u8 & 63, (n >> 6) as u8 & 63, n as u8 & 63].map(|b| b + 63));
    }
    let mut chunk = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | u8::from(g.has_edge(i, j));
            k += 1;
            if k % 6 == 0 {
                out.push(chunk + 63);
                chunk = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((chunk << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use wrdom_core::FamilySpec;

    #[test]
    fn known_strings() {
        assert_eq!(write(&Graph::empty(1).unwrap()), "@");
        assert_eq!(write(&Graph::empty(0).unwrap()), "?");
        let p4 = Graph::generate(FamilySpec::Path(4)).unwrap();
        assert_eq!(write(&p4), "Ch");
        let k4 = Graph::generate(FamilySpec::Complete(4)).unwrap();
        assert_eq!(write(&k4), "C~");
        let g = parse("D?{").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(write(&g), "D?{");
    }

    #[test]
    fn header_and_large_orders() {
        let p4 = Graph::generate(FamilySpec::Path(4)).unwrap();
        assert_eq!(parse(">>graph6<<Ch").unwrap(), p4);
        let c64 = Graph::generate(FamilySpec::Cycle(64)).unwrap();
        let text = write(&c64);
        assert!(text.starts_with('~'));
        assert_eq!(parse(&text).unwrap(), c64);
    }

    #[test]
    fn errors() {
        assert_eq!(parse(""), Err(Graph6Error::Empty));
        assert_eq!(parse("C"), Err(Graph6Error::Truncated { expected: 2, found: 1 }));
        assert_eq!(parse("C h"), Err(Graph6Error::BadByte { offset: 1, byte: b' ' }));
        assert_eq!(parse("Chh"), Err(Graph6Error::TrailingData { offset: 2 }));
        assert_eq!(parse("Bx"), Err(Graph6Error::NonZeroPadding { offset: 1 }));
        assert!(matches!(parse("~?@@"), Err(Graph6Error::TooManyVertices { n: 65 })));
    }
}
