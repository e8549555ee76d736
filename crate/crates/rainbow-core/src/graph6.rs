//! graph6 encoding and decoding (standard short form, printable ASCII).
//!
//! The order header is a single byte `n + 63` for `n <= 62`; the upper
//! triangle of the adjacency matrix follows column by column, packed
//! big-endian into 6-bit groups, each offset by 63. Only the short form is
//! supported; the multi-byte long forms are rejected with a clear error.

use crate::graph::{Graph, MAX_VERTICES};
use alloc::string::String;
use alloc::vec;
use core::fmt;

/// Errors from graph6 decoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Graph6Error {
    Empty,
    /// Header byte 126 starts a long form (n > 62), which is not supported.
    LongFormUnsupported,
    /// A byte outside the printable range 63..=126.
    ByteOutOfRange {
        pos: usize,
        byte: u8,
    },
    /// The decoded order does not fit the desk-scale graph cap.
    OrderOverCap {
        n: usize,
    },
    OrderZero,
    /// Fewer data bytes than the order requires.
    Truncated {
        expected: usize,
        got: usize,
    },
    /// More data bytes than the order requires.
    TrailingBytes {
        expected: usize,
        got: usize,
    },
    /// Padding bits after the upper triangle must be zero.
    TrailingBitsNonzero,
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::Empty => write!(f, "empty graph6 line"),
            Graph6Error::LongFormUnsupported => {
                write!(f, "graph6 long form (n > 62) is not supported")
            }
            Graph6Error::ByteOutOfRange { pos, byte } => {
                write!(
                    f,
                    "byte {byte} at position {pos} outside graph6 range 63..=126"
                )
            }
            Graph6Error::OrderOverCap { n } => {
                write!(
                    f,
                    "graph6 order {n} exceeds the cap of {MAX_VERTICES} vertices"
                )
            }
            Graph6Error::OrderZero => write!(f, "graph6 order 0 is not supported"),
            Graph6Error::Truncated { expected, got } => {
                write!(
                    f,
                    "graph6 line truncated: expected {expected} data bytes, got {got}"
                )
            }
            Graph6Error::TrailingBytes { expected, got } => {
                write!(
                    f,
                    "graph6 line has extra data: expected {expected} data bytes, got {got}"
                )
            }
            Graph6Error::TrailingBitsNonzero => write!(f, "nonzero padding bits in graph6 data"),
        }
    }
}

impl core::error::Error for Graph6Error {}

/// Encodes a graph as a standard-form graph6 line (no newline).
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::with_capacity(1 + (n * (n - 1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc: u8 = 0;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        acc <<= 6 - nbits;
        out.push((acc + 63) as char);
    }
    out
}

/// Decodes one graph6 line (leading/trailing ASCII whitespace tolerated).
pub fn decode(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.trim().as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let header = bytes[0];
    if header == 126 {
        return Err(Graph6Error::LongFormUnsupported);
    }
    if !(63..=126).contains(&header) {
        return Err(Graph6Error::ByteOutOfRange {
            pos: 0,
            byte: header,
        });
    }
    let n = (header - 63) as usize;
    if n == 0 {
        return Err(Graph6Error::OrderZero);
    }
    if n > MAX_VERTICES {
        return Err(Graph6Error::OrderOverCap { n });
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    let data = &bytes[1..];
    if data.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            got: data.len(),
        });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingBytes {
            expected,
            got: data.len(),
        });
    }
    let mut adj = vec![0u32; n];
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[bit / 6];
            if !(63..=126).contains(&byte) {
                return Err(Graph6Error::ByteOutOfRange {
                    pos: 1 + bit / 6,
                    byte,
                });
            }
            let val = byte - 63;
            if val >> (5 - bit % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    // Padding bits beyond the triangle must be zero.
    if !nbits.is_multiple_of(6) {
        let last = data[expected - 1];
        if !(63..=126).contains(&last) {
            return Err(Graph6Error::ByteOutOfRange {
                pos: expected,
                byte: last,
            });
        }
        let pad = 6 - nbits % 6;
        if (last - 63) & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::TrailingBitsNonzero);
        }
    }
    Ok(Graph::from_adjacency(n, adj))
}
