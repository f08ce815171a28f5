//! Non-induced subgraph containment by backtracking with degree pruning.

use crate::error::{GraphError, Result};
use crate::graph::Graph;

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

/// True iff `g` has a (not necessarily induced) subgraph isomorphic to `h`.
pub fn contains_subgraph(h: &Graph, g: &Graph) -> Result<bool> {
    contains_subgraph_budgeted(h, g, DEFAULT_NODE_BUDGET)
}

pub fn contains_subgraph_budgeted(h: &Graph, g: &Graph, budget: u64) -> Result<bool> {
    let hn = h.n();
    let gn = g.n();
    if hn == 0 {
        return Ok(true);
    }
    if hn > gn {
        return Ok(false);
    }
    // order H vertices so each (after the first) touches an earlier one when
    // possible; within that, prefer high degree
    let mut order: Vec<usize> = Vec::with_capacity(hn);
    let mut placed = vec![false; hn];
    while order.len() < hn {
        let next = (0..hn)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let back = h.neighbors(v).filter(|&u| placed[u]).count();
                (back, h.degree(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let mut map = vec![usize::MAX; hn];
    let mut used = vec![false; gn];
    let mut nodes = 0u64;

    fn rec(
        h: &Graph,
        g: &Graph,
        order: &[usize],
        idx: usize,
        map: &mut [usize],
        used: &mut [bool],
        nodes: &mut u64,
        budget: u64,
    ) -> Result<bool> {
        if idx == order.len() {
            return Ok(true);
        }
        let v = order[idx];
        let anchors: Vec<usize> =
            h.neighbors(v).filter(|&u| map[u] != usize::MAX).map(|u| map[u]).collect();
        // candidates: common g-neighbors of all already-mapped h-neighbors
        let cand: Vec<usize> = if let Some((&first, rest)) = anchors.split_first() {
            g.neighbors(first)
                .filter(|&w| !used[w] && rest.iter().all(|&a| g.has_edge(a, w)))
                .collect()
        } else {
            (0..g.n()).filter(|&w| !used[w]).collect()
        };
        for w in cand {
            *nodes += 1;
            if *nodes > budget {
                return Err(GraphError::BudgetExceeded(budget));
            }
            if g.degree(w) < h.degree(v) {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if rec(h, g, order, idx + 1, map, used, nodes, budget)? {
                return Ok(true);
            }
            used[w] = false;
            map[v] = usize::MAX;
        }
        Ok(false)
    }
    rec(h, g, &order, 0, &mut map, &mut used, &mut nodes, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_cases() {
        assert!(!contains_subgraph(&Graph::complete(3), &Graph::cycle(5)).unwrap());
        assert!(contains_subgraph(&Graph::complete(3), &Graph::complete(4)).unwrap());
    }

    #[test]
    fn c5_in_petersen() {
        assert!(contains_subgraph(&Graph::cycle(5), &Graph::petersen()).unwrap());
        assert!(!contains_subgraph(&Graph::cycle(3), &Graph::petersen()).unwrap());
        assert!(!contains_subgraph(&Graph::cycle(4), &Graph::petersen()).unwrap());
    }

    #[test]
    fn non_induced_semantics() {
        // P3 is a (non-induced) subgraph of K3
        assert!(contains_subgraph(&Graph::path(3), &Graph::complete(3)).unwrap());
    }

    #[test]
    fn budget_exceeded() {
        let h = Graph::complete(5);
        let g = Graph::turan(4, 40);
        assert!(matches!(contains_subgraph_budgeted(&h, &g, 10), Err(GraphError::BudgetExceeded(10))));
    }

    #[test]
    fn agrees_with_clique_search_exhaustive() {
        use crate::cliques::has_clique;
        for g in crate::graph::enumerate_labeled_graphs(5).unwrap() {
            for k in 2..=4usize {
                assert_eq!(
                    contains_subgraph(&Graph::complete(k), &g).unwrap(),
                    has_clique(&g, k)
                );
            }
        }
    }
}
