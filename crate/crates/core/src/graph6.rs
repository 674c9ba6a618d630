//! Short-form graph6 codec.
//!
//! Layout: header byte `chr(n+63)` for `1 <= n <= 62`, then the upper
//! triangle in colex order x(0,1), x(0,2), x(1,2), x(0,3), ... packed
//! MSB-first into 6-bit groups, zero-padded, each group stored as
//! `chr(value+63)`. Long-form headers (`~`) are rejected; parsing is strict
//! about body length and padding so that decode∘encode is the identity.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count representable in short-form graph6.
pub const MAX_GRAPH6_VERTICES: usize = 62;

/// Encode a labeled graph as short-form graph6.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.vertex_count();
    if n > MAX_GRAPH6_VERTICES {
        return Err(Error::OrderOutOfRange(n, "1..=62"));
    }
    let mut out = Vec::with_capacity(1 + (n * (n - 1) / 2).div_ceil(6));
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Decode a short-form graph6 string.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let (&header, body) = bytes.split_first().ok_or(Error::Graph6Length {
        expected: 1,
        got: 0,
    })?;
    if header == 126 {
        // 126 introduces the multi-byte order forms; out of scope here.
        return Err(Error::Graph6Header(header));
    }
    if !(63..126).contains(&header) {
        return Err(Error::Graph6Header(header));
    }
    let n = (header - 63) as usize;
    if n == 0 {
        return Err(Error::OrderOutOfRange(n, "1..=62"));
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6Length {
            expected,
            got: body.len(),
        });
    }
    let mut g = Graph::empty(n)?;
    let mut t = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = body[t / 6];
            if !(63..=126).contains(&byte) {
                return Err(Error::Graph6Body(byte));
            }
            let bit = (byte - 63) >> (5 - (t % 6)) & 1;
            if bit == 1 {
                g.add_edge(i, j);
            }
            t += 1;
            if t == nbits {
                break 'outer;
            }
        }
    }
    // Trailing pad bits must be zero.
    if !nbits.is_multiple_of(6) {
        let last = body[expected - 1];
        if !(63..=126).contains(&last) {
            return Err(Error::Graph6Body(last));
        }
        let pad = 6 - nbits % 6;
        if (last - 63) & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6Padding);
        }
    }
    // Also validate bytes that only carried padding-free data for range.
    if let Some(&bad) = body.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Error::Graph6Body(bad));
    }
    Ok(g)
}
