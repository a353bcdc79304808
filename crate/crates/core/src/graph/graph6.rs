//! Header-less graph6 encoding.
//!
//! A graph on `n < 63` vertices is written as the byte `n + 63` followed by the
//! upper adjacency triangle: pairs `(i, j)` with `i < j`, ordered by `j` and then
//! `i`, packed six bits per byte (most significant first), zero padded, and each
//! byte offset by 63.

use thiserror::Error;

use super::{Graph, VertexSet, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed graph6 length prefix")]
    BadLength,
    #[error("byte {byte} at offset {offset} outside the graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("graph6 body has {found} bytes, expected {expected} for {n} vertices")]
    WrongLength {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("nonzero padding bits in final graph6 byte")]
    NonzeroPadding,
    #[error("graph order {n} exceeds the supported maximum of {MAX_ORDER}")]
    TooLarge { n: usize },
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let &first = bytes.first().ok_or(Graph6Error::Empty)?;
    if let Some((offset, &byte)) = bytes
        .iter()
        .enumerate()
        .find(|(_, &b)| !(63..=126).contains(&b))
    {
        return Err(Graph6Error::InvalidByte { offset, byte });
    }
    if first == 126 {
        // n >= 63 uses a 126-prefixed multi-byte size field
        let width = if bytes.get(1) == Some(&126) { 6 } else { 3 };
        let skip = if width == 6 { 2 } else { 1 };
        let field = bytes
            .get(skip..skip + width)
            .ok_or(Graph6Error::BadLength)?;
        let n = field
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        return Err(Graph6Error::TooLarge { n });
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(Graph6Error::BadLength);
    }
    if n > MAX_ORDER {
        return Err(Graph6Error::TooLarge { n });
    }
    let body = &bytes[1..];
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::WrongLength {
            n,
            expected,
            found: body.len(),
        });
    }
    let mut adj = [VertexSet::EMPTY; MAX_ORDER];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let last = body[body.len() - 1] - 63;
        if last & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(Graph::from_rows(n, &adj))
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        let row = g.neighbors(j);
        for i in 0..j {
            acc = acc << 1 | row.contains(i) as u8;
            k += 1;
            if k.is_multiple_of(6) {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
