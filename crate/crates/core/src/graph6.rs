//! graph6 short-form codec (n <= 62, one graph per line).
//!
//! Bit order follows the format definition: the upper triangle is read
//! column by column, i.e. (0,1), (0,2), (1,2), (0,3), ..., packed six bits
//! per printable character `b + 63`, most significant bit first.

use crate::error::{GraphError, Result};
use crate::graph::Graph;

pub const MAX_SHORT_N: usize = 62;

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::Graph6("empty line".into()));
    }
    if bytes[0] == 126 {
        return Err(GraphError::Graph6("long-form length header not supported (n > 62)".into()));
    }
    if !(63..=125).contains(&bytes[0]) {
        return Err(GraphError::Graph6(format!("malformed length header byte {}", bytes[0])));
    }
    let n = (bytes[0] - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nchars = nbits.div_ceil(6);
    if bytes.len() < 1 + nchars {
        return Err(GraphError::Graph6(format!(
            "truncated: need {} data characters for n={}, got {}",
            nchars,
            n,
            bytes.len() - 1
        )));
    }
    if bytes.len() > 1 + nchars {
        return Err(GraphError::Graph6("trailing garbage after graph data".into()));
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = bytes[1 + bit / 6];
            if !(63..=126).contains(&byte) {
                return Err(GraphError::Graph6(format!("bad character {:?}", byte as char)));
            }
            let b = byte - 63;
            if b >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(u, v);
            }
            bit += 1;
            if bit == nbits {
                break 'outer;
            }
        }
    }
    // padding bits in the final character must be valid characters too
    for &byte in &bytes[1..] {
        if !(63..=126).contains(&byte) {
            return Err(GraphError::Graph6(format!("bad character {:?}", byte as char)));
        }
    }
    Ok(g)
}

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_SHORT_N {
        return Err(GraphError::TooLarge { n, cap: MAX_SHORT_N });
    }
    let mut out = vec![63 + n as u8];
    let mut acc: u8 = 0;
    let mut used = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    Ok(String::from_utf8(out).unwrap())
}
