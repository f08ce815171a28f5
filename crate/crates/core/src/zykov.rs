//! Zykov symmetrization: the degree-then-label order, single steps,
//! twin classes, the iterative procedure Z(G|A), and the (X,Y,r)-free
//! predicate.

use crate::error::{GraphError, Result};
use crate::graph::Graph;

/// How degrees feeding the order are evaluated during merging: on the
/// current, partially symmetrized graph (default), or frozen on the input.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeMode {
    Current,
    Frozen,
}

/// i precedes j iff d(i) < d(j), or d(i) = d(j) and i < j.
pub fn precedes(degrees: &[usize], i: usize, j: usize) -> bool {
    (degrees[i], i) < (degrees[j], j)
}

/// Vertices sorted ascending by the order above.
pub fn vertex_order(g: &Graph) -> Vec<usize> {
    let degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (degrees[v], v));
    order
}

/// Z_{u,v}: delete all edges at u and connect u to exactly N(v).
pub fn zykov_step(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    if u >= g.n() {
        return Err(GraphError::VertexOutOfRange(u, g.n()));
    }
    if v >= g.n() {
        return Err(GraphError::VertexOutOfRange(v, g.n()));
    }
    if u == v {
        return Err(GraphError::NotDistinct(u));
    }
    if g.has_edge(u, v) {
        return Err(GraphError::Adjacent(u, v));
    }
    let mut z = g.clone();
    z.copy_neighborhood(u, v);
    Ok(z)
}

/// Disjoint classes of equal-neighborhood vertices within a designated set,
/// each indexed (and led) by its smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinClassPartition {
    classes: Vec<Vec<usize>>,
}

impl TwinClassPartition {
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Index vertex (smallest label) of each class.
    pub fn indices(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }
}

pub fn twin_classes(g: &Graph, a: &[usize]) -> Result<TwinClassPartition> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut sorted: Vec<usize> = a.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for &v in &sorted {
        if v >= g.n() {
            return Err(GraphError::VertexOutOfRange(v, g.n()));
        }
        match classes.iter_mut().find(|c| g.row(c[0]) == g.row(v)) {
            Some(c) => c.push(v),
            None => classes.push(vec![v]),
        }
    }
    // ascending class indices; members are already ascending
    classes.sort_by_key(|c| c[0]);
    Ok(TwinClassPartition { classes })
}

/// Z(G|A): repeatedly merge the non-adjacent pair of twin classes with
/// minimal index sum, absorbing the order-smaller class into the larger.
pub fn symmetrize(g: &Graph, a: &[usize], mode: DegreeMode) -> Result<Graph> {
    let mut z = g.clone();
    let frozen: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut classes = twin_classes(&z, a)?.classes;
    loop {
        // non-adjacent class pairs, by index-vertex adjacency (members of a
        // class are mutual twins, so this equals member-level non-adjacency)
        let mut pick: Option<(usize, usize)> = None;
        for ci in 0..classes.len() {
            for cj in (ci + 1)..classes.len() {
                let (k, j) = (classes[ci][0], classes[cj][0]);
                if !z.has_edge(k, j) {
                    let better = match pick {
                        None => true,
                        Some((pk, pj)) => (k + j, k) < (pk + pj, pk),
                    };
                    if better {
                        pick = Some((k, j));
                    }
                }
            }
        }
        let Some((k, j)) = pick else { break };
        let ci = classes.iter().position(|c| c[0] == k).unwrap();
        let cj = classes.iter().position(|c| c[0] == j).unwrap();
        let degrees = match mode {
            DegreeMode::Current => (0..z.n()).map(|v| z.degree(v)).collect(),
            DegreeMode::Frozen => frozen.clone(),
        };
        // if j precedes k, merge A(j) into A(k); otherwise merge A(k) into A(j)
        let (absorbed, absorbing) = if precedes(&degrees, j, k) { (cj, ci) } else { (ci, cj) };
        let rep = classes[absorbing][0];
        let moved = classes[absorbed].clone();
        for &u in &moved {
            z.copy_neighborhood(u, rep);
        }
        let mut merged = classes[absorbing].clone();
        merged.extend_from_slice(&moved);
        merged.sort_unstable();
        let (lo, hi) = (absorbed.min(absorbing), absorbed.max(absorbing));
        classes.remove(hi);
        classes.remove(lo);
        classes.push(merged);
        classes.sort_by_key(|c| c[0]);
    }
    Ok(z)
}

/// True iff no r-clique has exactly one vertex in X and r-1 vertices in Y.
pub fn is_xyr_free(g: &Graph, x: &[usize], y: &[usize], r: usize) -> Result<bool> {
    let mut in_x = vec![false; g.n()];
    for &v in x {
        if v >= g.n() {
            return Err(GraphError::VertexOutOfRange(v, g.n()));
        }
        in_x[v] = true;
    }
    for &v in y {
        if v >= g.n() {
            return Err(GraphError::VertexOutOfRange(v, g.n()));
        }
        if in_x[v] {
            return Err(GraphError::OverlappingSets(v));
        }
    }
    if r == 0 {
        return Ok(true);
    }
    for &xv in x {
        // (r-1)-clique within N(xv) ∩ Y completes an (X,Y,r)-clique
        let cand: Vec<usize> = y.iter().copied().filter(|&yv| g.has_edge(xv, yv)).collect();
        let sub = g.induced(&cand)?;
        if crate::cliques::has_clique(&sub, r - 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_examples() {
        // star K_{1,3}, center 0: leaves first, then the center
        assert_eq!(vertex_order(&Graph::star(3)), vec![1, 2, 3, 0]);
        assert_eq!(vertex_order(&Graph::empty(3)), vec![0, 1, 2]);
        assert_eq!(vertex_order(&Graph::complete(3)), vec![0, 1, 2]);
    }

    #[test]
    fn step_examples() {
        // edge {0,1} plus isolated 2; making 2 a twin of 1 gives it N(1) = {0}
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let z = zykov_step(&g, 2, 1).unwrap();
        assert_eq!(z.edges(), vec![(0, 1), (0, 2)]);
        assert_eq!(z.edge_count(), 2);

        let e2 = Graph::empty(2);
        assert_eq!(zykov_step(&e2, 0, 1).unwrap(), e2);

        // path 0-1-2: endpoints already twins
        let p3 = Graph::path(3);
        assert_eq!(zykov_step(&p3, 0, 2).unwrap(), p3);

        assert!(zykov_step(&p3, 0, 1).is_err()); // adjacent
        assert!(zykov_step(&p3, 1, 1).is_err());
    }

    #[test]
    fn twin_class_examples() {
        let c4 = Graph::cycle(4);
        let p = twin_classes(&c4, &[0, 1, 2, 3]).unwrap();
        assert_eq!(p.classes(), &[vec![0, 2], vec![1, 3]]);

        let k3 = Graph::complete(3);
        assert_eq!(twin_classes(&k3, &[0, 1, 2]).unwrap().classes().len(), 3);

        let e3 = Graph::empty(3);
        assert_eq!(twin_classes(&e3, &[0, 1, 2]).unwrap().classes().len(), 1);
    }

    #[test]
    fn symmetrize_hand_trace() {
        // G = edge {0,1} + isolated 2, A = {1,2}: classes A(1), A(2) are
        // non-adjacent; d(2)=0 < d(1)=1 so 2 precedes 1 and A(2) is absorbed
        // into A(1): vertex 2 becomes a twin of 1, gaining the edge {0,2}.
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let z = symmetrize(&g, &[1, 2], DegreeMode::Current).unwrap();
        assert_eq!(z.edges(), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn symmetrize_trivial_cases() {
        let e3 = Graph::empty(3);
        let z = symmetrize(&e3, &[0, 1, 2], DegreeMode::Current).unwrap();
        assert_eq!(z.edge_count(), 0);

        // K_{2,2}, A = one side: single twin class, nothing to merge
        let k22 = Graph::turan(2, 4);
        let z = symmetrize(&k22, &[0, 1], DegreeMode::Current).unwrap();
        assert_eq!(z, k22);
    }

    #[test]
    fn frozen_mode_can_decrease_edges() {
        // edges {0,3},{1,2},{3,4}, A = {1,2,3,4}: the first merge makes 1 a
        // twin of 3, which empties N(2); frozen degrees then direct the pair
        // (1,2) to absorb into 2, wiping the class's edges. Edge monotonicity
        // is guaranteed only when degrees track the current graph.
        let g = Graph::from_edges(5, &[(0, 3), (1, 2), (3, 4)]).unwrap();
        let a = [1, 2, 3, 4];
        let cur = symmetrize(&g, &a, DegreeMode::Current).unwrap();
        assert!(cur.edge_count() >= g.edge_count());
        let froz = symmetrize(&g, &a, DegreeMode::Frozen).unwrap();
        assert!(froz.edge_count() < g.edge_count());
    }

    #[test]
    fn xyr_free_examples() {
        let k4 = Graph::complete(4);
        assert!(!is_xyr_free(&k4, &[0], &[1, 2, 3], 4).unwrap());
        assert!(is_xyr_free(&Graph::cycle(5), &[0], &[2, 3], 3).unwrap());
        assert!(is_xyr_free(&k4, &[0, 1], &[2, 3], 4).unwrap());
        assert!(is_xyr_free(&k4, &[0], &[1, 2, 3], 5).unwrap());
        assert!(is_xyr_free(&k4, &[0, 1], &[1, 2], 3).is_err()); // overlap
    }

    #[test]
    fn nonadjacent_vertices_share_neighborhood_after() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..300 {
            let n = rng.gen_range(1..=8);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.5) {
                        g.add_edge(u, v);
                    }
                }
            }
            let a: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.6)).collect();
            for mode in [DegreeMode::Current, DegreeMode::Frozen] {
                let z = symmetrize(&g, &a, mode).unwrap();
                if mode == DegreeMode::Current {
                    assert!(z.edge_count() >= g.edge_count());
                }
                for (i, &u) in a.iter().enumerate() {
                    for &v in &a[i + 1..] {
                        if !z.has_edge(u, v) {
                            assert_eq!(z.row(u), z.row(v), "mode {mode:?} g {g:?} a {a:?}");
                        }
                    }
                }
                // idempotence on the same A
                assert_eq!(symmetrize(&z, &a, mode).unwrap(), z);
            }
        }
    }
}
