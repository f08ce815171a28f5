//! Exact chromatic number by backtracking with a clique lower bound and a
//! greedy upper bound, plus enumeration of proper colorings.

use crate::cliques::clique_number;
use crate::error::{GraphError, Result};
use crate::graph::Graph;

pub const CHROMATIC_CAP: usize = 16;

/// Greedy coloring on descending degree order; returns the number of colors.
pub fn greedy_chromatic_upper(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut color = vec![usize::MAX; n];
    let mut used = 0;
    for &v in &order {
        let mut forbidden = vec![false; used + 1];
        for u in g.neighbors(v) {
            if color[u] != usize::MAX && color[u] < forbidden.len() {
                forbidden[color[u]] = true;
            }
        }
        let c = forbidden.iter().position(|&b| !b).unwrap();
        color[v] = c;
        used = used.max(c + 1);
    }
    used
}

fn colorable(g: &Graph, order: &[usize], k: usize) -> bool {
    fn rec(g: &Graph, order: &[usize], k: usize, idx: usize, max_used: usize, color: &mut [usize]) -> bool {
        if idx == order.len() {
            return true;
        }
        let v = order[idx];
        // at most one fresh color; breaks color-permutation symmetry
        for c in 0..k.min(max_used + 1) {
            let clash = g.neighbors(v).any(|u| color[u] == c);
            if !clash {
                color[v] = c;
                if rec(g, order, k, idx + 1, max_used.max(c + 1), color) {
                    return true;
                }
                color[v] = usize::MAX;
            }
        }
        false
    }
    let mut color = vec![usize::MAX; g.n()];
    rec(g, order, k, 0, 0, &mut color)
}

pub fn chromatic_number_capped(g: &Graph, cap: usize) -> Result<usize> {
    let n = g.n();
    if n > cap {
        return Err(GraphError::TooLarge { n, cap });
    }
    if n == 0 {
        return Ok(0);
    }
    let lower = clique_number(g);
    let upper = greedy_chromatic_upper(g);
    if lower == upper {
        return Ok(lower);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    for k in lower..upper {
        if colorable(g, &order, k) {
            return Ok(k);
        }
    }
    Ok(upper)
}

pub fn chromatic_number(g: &Graph) -> Result<usize> {
    chromatic_number_capped(g, CHROMATIC_CAP)
}

/// All proper colorings of `g` with exactly `r` colors, in canonical form:
/// color classes are introduced in vertex order (vertex 0 has color 0, and a
/// vertex may use at most one color beyond those already used). Each
/// coloring is reported as a vector of `r` color classes. Since colorings
/// are canonical, each partition into classes appears exactly once.
pub fn proper_colorings(g: &Graph, r: usize) -> Vec<Vec<Vec<usize>>> {
    let n = g.n();
    let mut out = Vec::new();
    let mut color = vec![usize::MAX; n];
    fn rec(g: &Graph, r: usize, v: usize, max_used: usize, color: &mut [usize], out: &mut Vec<Vec<Vec<usize>>>) {
        let n = g.n();
        if v == n {
            if max_used == r {
                let mut classes = vec![Vec::new(); r];
                for (u, &c) in color.iter().enumerate() {
                    classes[c].push(u);
                }
                out.push(classes);
            }
            return;
        }
        for c in 0..r.min(max_used + 1) {
            let clash = g.neighbors(v).any(|u| u < v && color[u] == c);
            if !clash {
                color[v] = c;
                rec(g, r, v + 1, max_used.max(c + 1), color, out);
                color[v] = usize::MAX;
            }
        }
    }
    rec(g, r, 0, 0, &mut color, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chi_examples() {
        assert_eq!(chromatic_number(&Graph::cycle(5)).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::turan(4, 8)).unwrap(), 4);
        assert_eq!(chromatic_number(&Graph::grotzsch()).unwrap(), 4);
        assert_eq!(chromatic_number(&Graph::petersen()).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::empty(5)).unwrap(), 1);
        assert_eq!(chromatic_number(&Graph::empty(0)).unwrap(), 0);
    }

    #[test]
    fn cap_enforced() {
        let g = Graph::empty(17);
        assert!(chromatic_number(&g).is_err());
        assert_eq!(chromatic_number_capped(&g, 20).unwrap(), 1);
    }

    #[test]
    fn turan_chi_and_omega() {
        use crate::cliques::clique_number;
        for n in 1..=12usize {
            for r in 1..=n {
                let g = Graph::turan(r, n);
                assert_eq!(chromatic_number(&g).unwrap(), r);
                assert_eq!(clique_number(&g), r);
            }
        }
    }

    #[test]
    fn colorings_of_k3() {
        // unique partition into 3 singleton classes
        assert_eq!(proper_colorings(&Graph::complete(3), 3).len(), 1);
        // C5 has 5 proper 3-colorings up to color names (Stirling-style count)
        let c5 = proper_colorings(&Graph::cycle(5), 3);
        assert_eq!(c5.len(), 5);
    }
}
