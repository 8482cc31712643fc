//! graph6 encoding: a size prefix followed by the upper triangle of the
//! adjacency matrix in column order, packed six bits per printable byte.

use std::io::BufRead;

use thiserror::Error;

use crate::graph::{Graph, GraphBuilder, GraphError};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("truncated size prefix")]
    TruncatedSize,
    #[error("expected {expected} adjacency bytes, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("padding bits in the last byte must be zero")]
    NonZeroPadding,
    #[error("sparse6 and digraph6 inputs are not supported")]
    UnsupportedVariant,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("line {line}: {error}")]
    AtLine {
        line: usize,
        error: Box<Graph6Error>,
    },
    #[error("i/o error: {0}")]
    Io(String),
}

fn encode_size(n: usize, out: &mut String) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
}

/// Encodes `g` as a graph6 string (no header, no newline).
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

fn sixbits(bytes: &[u8], offset: usize) -> Result<Vec<u8>, Graph6Error> {
    bytes
        .iter()
        .enumerate()
        .map(|(i, &b)| {
            if (63..=126).contains(&b) {
                Ok(b - 63)
            } else {
                Err(Graph6Error::InvalidByte {
                    offset: offset + i,
                    byte: b,
                })
            }
        })
        .collect()
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn decode(s: &str) -> Result<Graph, Graph6Error> {
    let s = s.trim_end();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if bytes[0] == b':' || bytes[0] == b'&' {
        return Err(Graph6Error::UnsupportedVariant);
    }
    let (n, body_start) = if bytes[0] != b'~' {
        (sixbits(&bytes[..1], 0)?[0] as usize, 1)
    } else if bytes.get(1) != Some(&b'~') {
        let digits = bytes.get(1..4).ok_or(Graph6Error::TruncatedSize)?;
        let d = sixbits(digits, 1)?;
        (d.iter().fold(0usize, |acc, &x| (acc << 6) | x as usize), 4)
    } else {
        let digits = bytes.get(2..8).ok_or(Graph6Error::TruncatedSize)?;
        let d = sixbits(digits, 2)?;
        (d.iter().fold(0usize, |acc, &x| (acc << 6) | x as usize), 8)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() != expected {
        return Err(Graph6Error::WrongLength {
            expected,
            found: body.len(),
        });
    }
    let body = sixbits(body, body_start)?;
    let pad = expected * 6 - bits;
    if pad > 0 && body[expected - 1] & ((1u8 << pad) - 1) != 0 {
        return Err(Graph6Error::NonZeroPadding);
    }
    let mut b = GraphBuilder::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if body[k / 6] >> (5 - k % 6) & 1 == 1 {
                b.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(b.build())
}

/// Reads every non-blank line of a graph6 corpus; errors carry 1-based line numbers.
pub fn read_all<R: BufRead>(reader: R) -> Result<Vec<(usize, Graph)>, Graph6Error> {
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Graph6Error::Io(e.to_string()))?;
        if line.trim().is_empty() {
            continue;
        }
        let g = decode(&line).map_err(|e| Graph6Error::AtLine {
            line: idx + 1,
            error: Box::new(e),
        })?;
        out.push((idx + 1, g));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        // 0-2, 0-4, 1-3, 3-4
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
        assert_eq!(decode("DQc").unwrap(), g);
        assert_eq!(encode(&Graph::complete(4).unwrap()), "C~");
        assert_eq!(encode(&Graph::edgeless(1).unwrap()), "@");
        assert_eq!(encode(&Graph::edgeless(0).unwrap()), "?");
        assert_eq!(
            decode(">>graph6<<C~\n").unwrap(),
            Graph::complete(4).unwrap()
        );
    }

    #[test]
    fn long_size_prefix() {
        let g = Graph::cycle(100).unwrap();
        let s = encode(&g);
        assert!(s.starts_with("~?@c"));
        assert_eq!(decode(&s).unwrap(), g);
        let big = Graph::path(300).unwrap();
        assert_eq!(decode(&encode(&big)).unwrap(), big);
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert!(matches!(
            decode("C~~"),
            Err(Graph6Error::WrongLength { .. })
        ));
        assert!(matches!(decode("C!"), Err(Graph6Error::InvalidByte { .. })));
        // K_3 needs 3 bits; setting a padding bit must fail.
        assert_eq!(decode("Bw"), Ok(Graph::complete(3).unwrap()));
        assert_eq!(decode("Bx"), Err(Graph6Error::NonZeroPadding));
        assert_eq!(decode(":Fa@x^"), Err(Graph6Error::UnsupportedVariant));
        assert!(matches!(decode("~?"), Err(Graph6Error::TruncatedSize)));
    }

    #[test]
    fn corpus_reading_reports_lines() {
        let text = "C~\n\nBw\nC!\n";
        let err = read_all(text.as_bytes()).unwrap_err();
        assert!(matches!(err, Graph6Error::AtLine { line: 4, .. }));
        let ok = read_all("C~\n\nBw\n".as_bytes()).unwrap();
        assert_eq!(ok.iter().map(|(l, _)| *l).collect::<Vec<_>>(), vec![1, 3]);
    }
}
