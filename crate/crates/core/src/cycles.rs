//! Girth, forest tests, and exhaustive simple-cycle enumeration.

use crate::error::{GraphError, Result};
use crate::graph::Graph;
use std::collections::VecDeque;

/// Length of a shortest cycle, or None for a forest.
/// Per-vertex BFS; minimizing over all roots gives the exact girth.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    for root in 0..n {
        let mut depth = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        depth[root] = 0;
        let mut q = VecDeque::from([root]);
        while let Some(v) = q.pop_front() {
            for u in g.neighbors(v) {
                if depth[u] == usize::MAX {
                    depth[u] = depth[v] + 1;
                    parent[u] = v;
                    q.push_back(u);
                } else if u != parent[v] {
                    let cand = depth[u] + depth[v] + 1;
                    if best.map_or(true, |b| cand < b) {
                        best = Some(cand);
                    }
                }
            }
        }
    }
    best
}

pub fn is_forest(g: &Graph) -> bool {
    // a graph is a forest iff e = n - number of components
    let comps = g.connected_components();
    g.edge_count() == g.n() - comps.len()
}

pub const CYCLE_ENUM_VERTEX_CAP: usize = 12;
pub const CYCLE_CAP: usize = 1_000_000;

/// All simple cycles, each reported once in canonical rotation: the cycle
/// starts at its smallest vertex, and of the two traversal directions the
/// one whose second vertex is smaller than its last is chosen.
pub fn all_cycles_capped(g: &Graph, cap: usize) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    if n > CYCLE_ENUM_VERTEX_CAP {
        return Err(GraphError::TooLarge { n, cap: CYCLE_ENUM_VERTEX_CAP });
    }
    let mut out = Vec::new();
    let mut path = Vec::new();
    let mut on_path = vec![false; n];
    fn dfs(
        g: &Graph,
        start: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> Result<()> {
        let v = *path.last().unwrap();
        for u in g.neighbors(v) {
            if u == start && path.len() >= 3 && path[1] < *path.last().unwrap() {
                if out.len() >= cap {
                    return Err(GraphError::CycleCapExceeded(cap));
                }
                out.push(path.clone());
            } else if u > start && !on_path[u] {
                path.push(u);
                on_path[u] = true;
                dfs(g, start, path, on_path, out, cap)?;
                on_path[u] = false;
                path.pop();
            }
        }
        Ok(())
    }
    for start in 0..n {
        path.push(start);
        on_path[start] = true;
        dfs(g, start, &mut path, &mut on_path, &mut out, cap)?;
        on_path[start] = false;
        path.pop();
    }
    Ok(out)
}

pub fn all_cycles(g: &Graph) -> Result<Vec<Vec<usize>>> {
    all_cycles_capped(g, CYCLE_CAP)
}

/// All odd simple cycles, as canonical vertex sequences.
pub fn odd_cycles(g: &Graph) -> Result<Vec<Vec<usize>>> {
    Ok(all_cycles(g)?.into_iter().filter(|c| c.len() % 2 == 1).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&Graph::cycle(5)), Some(5));
        assert_eq!(girth(&Graph::path(6)), None);
        assert_eq!(girth(&Graph::petersen()), Some(5));
        assert_eq!(girth(&Graph::complete(4)), Some(3));
        assert_eq!(girth(&Graph::turan(2, 6)), Some(4));
        assert_eq!(girth(&Graph::grotzsch()), Some(4));
    }

    #[test]
    fn forest_tests() {
        assert!(is_forest(&Graph::path(4)));
        assert!(is_forest(&Graph::empty(5)));
        assert!(!is_forest(&Graph::cycle(3)));
        // girth is None exactly on forests, n <= 6 exhaustive
        for n in 1..=6 {
            for g in crate::graph::enumerate_labeled_graphs(n).unwrap() {
                assert_eq!(girth(&g).is_none(), is_forest(&g));
            }
        }
    }

    #[test]
    fn cycles_of_c5_and_k4() {
        let c5 = odd_cycles(&Graph::cycle(5)).unwrap();
        assert_eq!(c5.len(), 1);
        assert_eq!(c5[0].len(), 5);
        let k4 = odd_cycles(&Graph::complete(4)).unwrap();
        assert_eq!(k4.len(), 4); // C(4,3) triangles, no 5-cycles on 4 vertices
        assert!(k4.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn cycle_counts_k5() {
        // K5: C(5,3) triangles + C(5,4)*3 four-cycles + 4!/2 five-cycles
        let all = all_cycles(&Graph::complete(5)).unwrap();
        assert_eq!(all.len(), 10 + 15 + 12);
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(
            all_cycles_capped(&Graph::complete(8), 5),
            Err(GraphError::CycleCapExceeded(5))
        ));
    }
}
