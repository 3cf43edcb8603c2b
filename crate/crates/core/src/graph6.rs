//! graph6 encoding (McKay). Bytes are in `63..=126`; the order is one byte
//! `n + 63` for `n <= 62`, else `126` followed by three bytes of 6 bits each.
//! The upper triangle follows column by column (`x(0,1), x(0,2), x(1,2), ...`),
//! six bits per byte, most significant first, zero-padded.

use crate::graph::{Graph, GraphError};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Parses one graph6 line. An optional `>>graph6<<` prefix and a trailing
/// line terminator are accepted; anything else outside the encoding is an error.
pub fn parse(text: &str) -> Result<Graph, GraphError> {
    let mut bytes = text.as_bytes();
    let mut base = 0;
    if let Some(rest) = text.strip_prefix(HEADER) {
        bytes = rest.as_bytes();
        base = HEADER.len();
    }
    while let [head @ .., b'\n' | b'\r'] = bytes {
        bytes = head;
    }
    if bytes.is_empty() {
        return Err(err(base, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(err(base + i, format!("byte 0x{b:02x} outside 63..=126")));
        }
    }

    let (n, body_start) = if bytes[0] != 126 {
        ((bytes[0] - BIAS) as usize, 1)
    } else {
        if bytes.len() < 4 {
            return Err(err(base + bytes.len(), "truncated order field"));
        }
        if bytes[1] == 126 {
            return Err(err(base + 1, "orders above 258047 are not supported"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(err(base, format!("order {n} exceeds {MAX_VERTICES}")));
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() < nbytes {
        return Err(err(
            base + bytes.len(),
            format!("expected {nbytes} data bytes, found {}", body.len()),
        ));
    }
    if body.len() > nbytes {
        return Err(err(
            base + body_start + nbytes,
            "trailing bytes after graph data",
        ));
    }

    let bit = |k: usize| -> bool {
        let byte = body[k / 6] - BIAS;
        (byte >> (5 - k % 6)) & 1 == 1
    };
    for k in nbits..nbytes * 6 {
        if bit(k) {
            return Err(err(base + body_start + k / 6, "nonzero padding bits"));
        }
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    Graph::from_adjacency(adj)
}

/// Encodes `g` as a graph6 string without header or newline.
pub fn emit(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::with_capacity(4 + n * n / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
