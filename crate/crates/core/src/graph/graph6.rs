//! graph6 interchange format, short form only.
//!
//! One size byte `n + 63`, then the upper triangle of the adjacency matrix
//! column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`) packed into 6-bit
//! groups, each written as `value + 63`, last group zero-padded.

use super::{pair_count, Graph};
use crate::error::{Error, Result};

/// Largest order expressible with a single size byte.
pub const MAX_GRAPH6_ORDER: usize = 62;

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_GRAPH6_ORDER, "graph6 short form supports n <= 62");
    let mut out = Vec::with_capacity(1 + pair_count(n).div_ceil(6));
    out.push((n + 63) as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 string. Trailing whitespace is ignored.
pub fn graph6_decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end().as_bytes();
    let Some(&size) = bytes.first() else {
        return Err(Error::parse(0, "empty graph6 string"));
    };
    if size == 126 {
        return Err(Error::parse(0, "long-form graph6 (n > 62) is not supported"));
    }
    if !(63..126).contains(&size) {
        return Err(Error::parse(0, format!("invalid size byte {size}")));
    }
    let n = (size - 63) as usize;
    if n == 0 {
        return Err(Error::parse(0, "graph order must be at least 1"));
    }
    let bits = pair_count(n);
    let expected = 1 + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(Error::parse(
            bytes.len().min(expected),
            format!("expected {expected} bytes for n = {n}, found {}", bytes.len()),
        ));
    }
    for (offset, &b) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(offset, format!("byte {b} outside the graph6 range")));
        }
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let group = bytes[1 + k / 6] - 63;
            if (group >> (5 - k % 6)) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if !bits.is_multiple_of(6) {
        let last = bytes[expected - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::parse(expected - 1, "non-zero padding bits"));
        }
    }
    Graph::from_adjacency(adj)
}
