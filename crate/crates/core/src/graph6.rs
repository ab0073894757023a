//! graph6 encoding and decoding.
//!
//! A graph6 line is the vertex count followed by the upper triangle of the
//! adjacency matrix in column order (0,1), (0,2), (1,2), (0,3), …, packed
//! big-endian into 6-bit groups, each group printed as its value + 63. The
//! count itself is one byte n + 63 for n ≤ 62, or '~' followed by three
//! 6-bit bytes for larger n (capped here at 64 vertices). Every decode error
//! reports the byte offset at which the line went wrong.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const BIAS: u8 = 63;
const LONG_FORM: u8 = 126; // '~'

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Encodes a graph as a graph6 line (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(LONG_FORM);
        out.push(((n >> 12) & 0x3f) as u8 + BIAS);
        out.push(((n >> 6) & 0x3f) as u8 + BIAS);
        out.push((n & 0x3f) as u8 + BIAS);
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + BIAS);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 line. A trailing `\n` or `\r\n` is tolerated; all byte
/// offsets in errors refer to the line without it.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(err(0, "empty line"));
    }
    let check = |off: usize| -> Result<u8> {
        let b = bytes[off];
        if !(BIAS..=LONG_FORM).contains(&b) {
            return Err(err(off, format!("byte 0x{b:02x} outside graph6 range 63..=126")));
        }
        Ok(b - BIAS)
    };

    // Vertex count.
    let (n, header_len) = if bytes[0] == LONG_FORM {
        if bytes.len() < 4 {
            return Err(err(bytes.len(), "truncated vertex count"));
        }
        if bytes[1] == LONG_FORM {
            // The 8-byte form encodes n ≥ 258048, far past our capacity.
            return Err(err(1, "vertex count form exceeds supported range"));
        }
        let n = (check(1)? as usize) << 12 | (check(2)? as usize) << 6 | check(3)? as usize;
        (n, 4)
    } else {
        (check(0)? as usize, 1)
    };
    if n > MAX_VERTICES {
        let off = if header_len == 1 { 0 } else { 1 };
        return Err(err(off, format!("{n} vertices exceeds the {MAX_VERTICES}-vertex limit")));
    }

    // A byte outside the printable code range is reported at its own
    // offset before any length bookkeeping.
    for off in header_len..bytes.len() {
        check(off)?;
    }

    // Body length.
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let expected = header_len + nbytes;
    if bytes.len() < expected {
        return Err(err(
            bytes.len(),
            format!("line truncated: expected {expected} bytes, got {}", bytes.len()),
        ));
    }
    if bytes.len() > expected {
        return Err(err(expected, "trailing data after adjacency bits"));
    }

    // Adjacency bits in column order.
    let mut g = Graph::new(n);
    let mut bit_index = 0usize;
    let mut pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    for off in header_len..expected {
        let group = check(off)?;
        for shift in (0..6).rev() {
            let bit = group >> shift & 1;
            if bit_index < nbits {
                let (i, j) = pairs.next().expect("pair per bit");
                if bit == 1 {
                    g.add_edge(i, j);
                }
            } else if bit == 1 {
                return Err(err(off, "nonzero padding bits"));
            }
            bit_index += 1;
        }
    }
    g.debug_validate();
    Ok(g)
}

/// Parses a stream of graph6 lines, one graph per line, skipping blank lines.
/// Errors are annotated with the 1-based line number.
pub fn graph6_lines<R: std::io::BufRead>(reader: R) -> impl Iterator<Item = Result<Graph>> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(idx, line)| match line {
            Err(e) => Some(Err(Error::arg(format!("line {}: read error: {e}", idx + 1)))),
            Ok(l) if l.trim().is_empty() => None,
            Ok(l) => Some(parse_graph6(&l).map_err(|e| match e {
                Error::Graph6 { offset, reason } => Error::Graph6 {
                    offset,
                    reason: format!("line {}: {reason}", idx + 1),
                },
                other => other,
            })),
        })
}
