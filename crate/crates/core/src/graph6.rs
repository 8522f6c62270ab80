//! graph6 encoding and decoding.
//!
//! The format packs the upper triangle of the adjacency matrix in column-major
//! order, x(0,1), x(0,2), x(1,2), x(0,3), ..., into big-endian 6-bit groups,
//! each emitted as the ASCII byte `value + 63`. The vertex count is a single
//! byte `n + 63` for `n <= 62`, or `'~'` followed by three bytes holding an
//! 18-bit big-endian count. An optional `>>graph6<<` header is tolerated.

use crate::graph::{Graph, GraphError, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

/// Errors from graph6 decoding.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("malformed size: {0}")]
    MalformedSize(String),
    #[error("vertex count {0} exceeds the supported maximum {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("payload too short: need {need} characters, got {got}")]
    PayloadTooShort { need: usize, got: usize },
    #[error("payload too long: need {need} characters, got {got}")]
    PayloadTooLong { need: usize, got: usize },
    #[error("byte {0:#04x} at position {1} outside the graph6 range 63..=126")]
    ByteOutOfRange(u8, usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Decodes one graph6 record. A leading `>>graph6<<` header is stripped;
/// surrounding whitespace is ignored.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let text = line.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::ByteOutOfRange(b, i));
        }
    }

    let (n, payload) = if bytes[0] == b'~' {
        if bytes.len() < 4 {
            return Err(Graph6Error::MalformedSize(
                "multi-byte size needs 3 bytes after '~'".into(),
            ));
        }
        if bytes[1] == b'~' {
            return Err(Graph6Error::MalformedSize(
                "8-byte size encoding implies n > 258047, unsupported".into(),
            ));
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };

    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    if n < 2 {
        return Err(Graph6Error::MalformedSize(format!(
            "vertex count {n} below the supported minimum 2"
        )));
    }

    let nbits = n * (n - 1) / 2;
    let need = nbits.div_ceil(6);
    if payload.len() < need {
        return Err(Graph6Error::PayloadTooShort {
            need,
            got: payload.len(),
        });
    }
    if payload.len() > need {
        return Err(Graph6Error::PayloadTooLong {
            need,
            got: payload.len(),
        });
    }

    let mut g = Graph::empty(n)?;
    let mut idx = 0usize; // bit cursor over the packed upper triangle
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = payload[idx / 6] - 63;
            let bit = (byte >> (5 - idx % 6)) & 1;
            if bit != 0 {
                g.add_edge(i, j)?;
            }
            idx += 1;
            if idx == nbits {
                break 'outer;
            }
        }
    }
    Ok(g)
}

/// Encodes a graph as one graph6 record (no header, no newline).
pub fn serialize_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        // 18-bit size form covers 63 <= n <= 64 here
        out.push(b'~');
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut nacc = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nacc += 1;
            if nacc == 6 {
                out.push(acc + 63);
                acc = 0;
                nacc = 0;
            }
        }
    }
    if nacc > 0 {
        out.push((acc << (6 - nacc)) + 63);
    }
    String::from_utf8(out).unwrap()
}
