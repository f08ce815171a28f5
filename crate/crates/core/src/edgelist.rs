//! Edge-list text format: first line "n m", then m lines "u v" with
//! 0 <= u < v < n, whitespace-separated, LF line endings.

use crate::error::{GraphError, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| GraphError::EdgeList("missing header line".into()))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| GraphError::EdgeList(format!("bad header {header:?}")))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| GraphError::EdgeList(format!("bad header {header:?}")))?;
    if it.next().is_some() {
        return Err(GraphError::EdgeList(format!("extra tokens in header {header:?}")));
    }
    let mut g = Graph::empty(n);
    let mut seen = 0usize;
    for line in lines {
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::EdgeList(format!("bad edge line {line:?}")))?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::EdgeList(format!("bad edge line {line:?}")))?;
        if it.next().is_some() {
            return Err(GraphError::EdgeList(format!("extra tokens in edge line {line:?}")));
        }
        if u >= v {
            return Err(GraphError::EdgeList(format!("edge {u} {v} violates u < v")));
        }
        if v >= n {
            return Err(GraphError::VertexOutOfRange(v, n));
        }
        g.add_edge(u, v);
        seen += 1;
    }
    if seen != m {
        return Err(GraphError::EdgeList(format!("header declares {m} edges, found {seen}")));
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let g = Graph::petersen();
        let text = write_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3 1\n1 0\n").is_err()); // u >= v
        assert!(parse_edge_list("3 2\n0 1\n").is_err()); // edge count mismatch
        assert!(parse_edge_list("3 1\n0 5\n").is_err()); // out of range
        assert!(parse_edge_list("3 x\n").is_err());
    }
}
