//! The graph6 text format used by nauty/geng and most small-graph corpora.
//!
//! Layout: a size header `N(n)` followed by the upper triangle of the
//! adjacency matrix, read column by column (`x(0,1), x(0,2), x(1,2),
//! x(0,3), ...`), packed six bits per byte, most significant bit first,
//! each byte offset by 63.

use thiserror::Error;

use super::{Graph, GraphBuilder};

const BIAS: u8 = 63;
const MAX_PRINTABLE: u8 = 126;
const HEADER: &[u8] = b">>graph6<<";
/// Largest order accepted by the decoder.
pub const MAX_ORDER: usize = 1 << 18;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("malformed size header at byte {offset}: {reason}")]
    MalformedHeader { offset: usize, reason: &'static str },
    #[error("truncated body: expected {expected} bytes after the header, found {found} (input ends at byte {offset})")]
    TruncatedBody {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("non-printable byte {byte:#04x} at byte {offset}")]
    NonPrintableByte { offset: usize, byte: u8 },
    #[error("unexpected trailing data at byte {offset}")]
    TrailingBytes { offset: usize },
    #[error("graph order {0} exceeds the supported maximum")]
    TooLarge(usize),
}

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n < 63 {
        out.push(n as u8 + BIAS);
    } else if n < 258_048 {
        out.push(MAX_PRINTABLE);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.push(MAX_PRINTABLE);
        out.push(MAX_PRINTABLE);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(8 + bits.div_ceil(6));
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn sextet(bytes: &[u8], offset: usize) -> Result<usize, Graph6Error> {
    let byte = bytes[offset];
    if !(BIAS..=MAX_PRINTABLE).contains(&byte) {
        return Err(Graph6Error::NonPrintableByte { offset, byte });
    }
    Ok(usize::from(byte - BIAS))
}

fn read_size(bytes: &[u8], start: usize) -> Result<(usize, usize), Graph6Error> {
    let header = |reason| Graph6Error::MalformedHeader { offset: start, reason };
    let first = *bytes.get(start).ok_or_else(|| header("empty input"))?;
    if first != MAX_PRINTABLE {
        return Ok((sextet(bytes, start)?, start + 1));
    }
    let (start_digits, ndigits) = if bytes.get(start + 1) == Some(&MAX_PRINTABLE) {
        (start + 2, 6)
    } else {
        (start + 1, 3)
    };
    if bytes.len() < start_digits + ndigits {
        return Err(Graph6Error::MalformedHeader {
            offset: bytes.len(),
            reason: "size header cut short",
        });
    }
    let mut n = 0usize;
    for off in start_digits..start_digits + ndigits {
        n = (n << 6) | sextet(bytes, off)?;
    }
    Ok((n, start_digits + ndigits))
}

/// Decodes one graph6 record. A leading `>>graph6<<` header and one
/// trailing newline are accepted; padding bits are ignored.
pub fn decode_graph6(input: &[u8]) -> Result<Graph, Graph6Error> {
    let mut bytes = input;
    if let Some(stripped) = bytes.strip_suffix(b"\n") {
        bytes = stripped.strip_suffix(b"\r").unwrap_or(stripped);
    }
    let start = if bytes.starts_with(HEADER) { HEADER.len() } else { 0 };
    let (n, body) = read_size(bytes, start)?;
    if n > MAX_ORDER {
        return Err(Graph6Error::TooLarge(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let found = bytes.len() - body;
    if found < expected {
        // report the first bad byte before complaining about length
        for off in body..bytes.len() {
            sextet(bytes, off)?;
        }
        return Err(Graph6Error::TruncatedBody {
            offset: bytes.len(),
            expected,
            found,
        });
    }
    if found > expected {
        return Err(Graph6Error::TrailingBytes { offset: body + expected });
    }
    let mut b = GraphBuilder::new(n);
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            if k >= bits {
                break 'outer;
            }
            let off = body + k / 6;
            let value = sextet(bytes, off)?;
            if (value >> (5 - k % 6)) & 1 == 1 {
                b.add_edge(i, j);
            }
            k += 1;
        }
    }
    // validate padding bytes for printability even if no bits are read from them
    for off in body..body + expected {
        sextet(bytes, off)?;
    }
    Ok(b.build())
}
