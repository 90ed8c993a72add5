//! graph6 encoding (header-free), as used by nauty's `geng`/`showg`.
//!
//! The order is written as one byte `n + 63` for `n ≤ 62`, as `126` plus
//! three 6-bit groups for `n ≤ 258047`, and as `126 126` plus six groups
//! beyond that. The upper triangle follows column by column
//! (`x(0,1) x(0,2) x(1,2) x(0,3) …`), packed six bits per byte, big-endian,
//! zero padded, each byte offset by 63.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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

fn encode_order(n: usize, out: &mut Vec<u8>) {
    let groups = |count: usize, out: &mut Vec<u8>| {
        for k in (0..count).rev() {
            out.push(((n >> (6 * k)) & 0x3f) as u8 + 63);
        }
    };
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        groups(3, out);
    } else {
        out.push(126);
        out.push(126);
        groups(6, out);
    }
}

pub fn decode(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b} outside 63..=126")));
    }
    let (n, body) = decode_order(bytes)?;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let pairs = n * (n - 1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!("expected {expected} data bytes for n = {n}, got {}", body.len())));
    }
    let bit = |idx: usize| (body[idx / 6] - 63) >> (5 - idx % 6) & 1 == 1;
    if (pairs..expected * 6).any(bit) {
        return Err(Error::Graph6("non-zero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(idx) {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::new(n, edges)
}

fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let value = |groups: &[u8]| groups.iter().fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
    match bytes {
        [] => Err(Error::Graph6("empty string".into())),
        [126, 126, rest @ ..] if rest.len() >= 6 => Ok((value(&rest[..6]), &rest[6..])),
        [126, rest @ ..] if rest.len() >= 3 && rest[0] != 126 => Ok((value(&rest[..3]), &rest[3..])),
        [126, ..] => Err(Error::Graph6("truncated order field".into())),
        [first, rest @ ..] => Ok((usize::from(first - 63), rest)),
    }
}
