//! Bipartite maximum matching (augmenting paths) and Hall deficiency.

use crate::error::{GraphError, Result};
use crate::graph::Graph;

pub const HALL_SIDE_CAP: usize = 25;

/// Validates that (x, y) is a bipartition of B: the sides are disjoint,
/// cover V(B), and carry no internal edges.
fn validate_sides(b: &Graph, x: &[usize], y: &[usize]) -> Result<()> {
    let n = b.n();
    let mut side = vec![u8::MAX; n];
    for &v in x {
        if v >= n {
            return Err(GraphError::VertexOutOfRange(v, n));
        }
        if side[v] != u8::MAX {
            return Err(GraphError::NotDistinct(v));
        }
        side[v] = 0;
    }
    for &v in y {
        if v >= n {
            return Err(GraphError::VertexOutOfRange(v, n));
        }
        if side[v] != u8::MAX {
            return Err(GraphError::OverlappingSets(v));
        }
        side[v] = 1;
    }
    if side.iter().any(|&s| s == u8::MAX) {
        return Err(GraphError::NotBipartite("X and Y do not cover V(B)".into()));
    }
    for (u, v) in b.edges() {
        if side[u] == side[v] {
            return Err(GraphError::NotBipartite(format!("edge {u}-{v} lies within one side")));
        }
    }
    Ok(())
}

/// Maximum matching size via Kuhn's augmenting-path algorithm.
pub fn matching_number(b: &Graph, x: &[usize], y: &[usize]) -> Result<usize> {
    validate_sides(b, x, y)?;
    let mut match_y: Vec<Option<usize>> = vec![None; y.len()];
    let y_index: std::collections::HashMap<usize, usize> =
        y.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    fn try_augment(
        b: &Graph,
        x_v: usize,
        y: &[usize],
        y_index: &std::collections::HashMap<usize, usize>,
        match_y: &mut [Option<usize>],
        visited: &mut [bool],
    ) -> bool {
        for u in b.neighbors(x_v) {
            let yi = y_index[&u];
            if visited[yi] {
                continue;
            }
            visited[yi] = true;
            if match_y[yi].is_none()
                || try_augment(b, match_y[yi].unwrap(), y, y_index, match_y, visited)
            {
                match_y[yi] = Some(x_v);
                return true;
            }
        }
        false
    }
    let mut size = 0;
    for &x_v in x {
        let mut visited = vec![false; y.len()];
        if try_augment(b, x_v, y, &y_index, &mut match_y, &mut visited) {
            size += 1;
        }
    }
    Ok(size)
}

/// max over S ⊆ X of |S| - |N(S)|, by subset enumeration.
/// By the deficiency form of Hall's theorem the matching number is
/// |X| - deficiency; the two routes are cross-checked exhaustively in tests.
pub fn hall_deficiency(b: &Graph, x: &[usize]) -> Result<usize> {
    if x.len() > HALL_SIDE_CAP {
        return Err(GraphError::TooLarge { n: x.len(), cap: HALL_SIDE_CAP });
    }
    for &v in x {
        if v >= b.n() {
            return Err(GraphError::VertexOutOfRange(v, b.n()));
        }
    }
    let words = if b.n() == 0 { 1 } else { b.row(0).len() };
    let mut best = 0usize;
    for mask in 0u32..(1u32 << x.len()) {
        let mut nbhd = vec![0u64; words];
        let mut size = 0usize;
        for (i, &v) in x.iter().enumerate() {
            if mask >> i & 1 == 1 {
                size += 1;
                for (w, r) in nbhd.iter_mut().zip(b.row(v)) {
                    *w |= r;
                }
            }
        }
        let nsize: usize = nbhd.iter().map(|w| w.count_ones() as usize).sum();
        best = best.max(size.saturating_sub(nsize));
    }
    Ok(best)
}
