//! Exact clique search: maximum clique via branch and bound with a greedy
//! coloring bound, k-clique counting, and the K_p-independence number.

use crate::error::{GraphError, Result};
use crate::graph::Graph;

fn full_set(n: usize, words: usize) -> Vec<u64> {
    let mut s = vec![u64::MAX; words];
    let tail = n % 64;
    if tail != 0 {
        s[words - 1] = (1u64 << tail) - 1;
    }
    if n == 0 {
        s.fill(0);
    }
    s
}

fn set_iter(s: &[u64]) -> impl Iterator<Item = usize> + '_ {
    s.iter().enumerate().flat_map(|(w, &bits)| {
        let mut b = bits;
        std::iter::from_fn(move || {
            if b == 0 {
                None
            } else {
                let i = b.trailing_zeros() as usize;
                b &= b - 1;
                Some(w * 64 + i)
            }
        })
    })
}

#[inline]
fn set_remove(s: &mut [u64], v: usize) {
    s[v / 64] &= !(1 << (v % 64));
}

#[inline]
fn intersect(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn is_empty(s: &[u64]) -> bool {
    s.iter().all(|&w| w == 0)
}

fn first_set(s: &[u64]) -> Option<usize> {
    s.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
}

/// Greedy coloring of the candidate set; returns (vertex, color) sorted by
/// ascending color. Color + 1 bounds the largest clique inside the set.
fn color_sort(g: &Graph, cand: &[u64]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut uncolored = cand.to_vec();
    let mut color = 0usize;
    while !is_empty(&uncolored) {
        let mut avail = uncolored.clone();
        while let Some(v) = first_set(&avail) {
            out.push((v, color));
            set_remove(&mut uncolored, v);
            set_remove(&mut avail, v);
            for (w, row) in avail.iter_mut().zip(g.row(v)) {
                *w &= !row;
            }
        }
        color += 1;
    }
    out
}

fn expand(g: &Graph, size: usize, cand: Vec<u64>, best: &mut usize, stop_at: usize) {
    if *best >= stop_at {
        return;
    }
    let order = color_sort(g, &cand);
    let mut cand = cand;
    for &(v, color) in order.iter().rev() {
        if size + color + 1 <= *best {
            return;
        }
        let next = intersect(&cand, g.row(v));
        if size + 1 > *best {
            *best = size + 1;
        }
        if !is_empty(&next) {
            expand(g, size + 1, next, best, stop_at);
        }
        if *best >= stop_at {
            return;
        }
        set_remove(&mut cand, v);
    }
}

/// Clique number, stopping early once `stop_at` is reached (if given).
pub fn clique_number_bounded(g: &Graph, stop_at: Option<usize>) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let words = g.row(0).len();
    let mut best = 0;
    expand(g, 0, full_set(n, words), &mut best, stop_at.unwrap_or(usize::MAX));
    best
}

pub fn clique_number(g: &Graph) -> usize {
    clique_number_bounded(g, None)
}

pub fn has_clique(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    clique_number_bounded(g, Some(k)) >= k
}

/// Number of k-cliques, counted over vertex subsets.
pub fn count_cliques(g: &Graph, k: usize) -> u64 {
    if k == 0 {
        return 1;
    }
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let words = g.row(0).len();
    fn rec(g: &Graph, cand: &[u64], depth: usize, min_v: usize) -> u64 {
        if depth == 0 {
            return 1;
        }
        let mut total = 0;
        for v in set_iter(cand) {
            if v < min_v {
                continue;
            }
            let next = intersect(cand, g.row(v));
            total += rec(g, &next, depth - 1, v + 1);
        }
        total
    }
    rec(g, &full_set(n, words), k, 0)
}

pub const KP_CAP: usize = 20;

/// K_p-independence number: the largest |S| with G[S] containing no K_p.
/// alpha(G) is the p = 2 case.
pub fn kp_independence(g: &Graph, p: usize) -> Result<usize> {
    if p < 2 {
        return Err(GraphError::InvalidParameter("kp_independence needs p >= 2".into()));
    }
    let n = g.n();
    if n > KP_CAP {
        return Err(GraphError::TooLarge { n, cap: KP_CAP });
    }
    let rows: Vec<u64> = (0..n).map(|v| g.row(v)[0]).collect();

    // does `mask` contain a clique of size k?
    fn mask_has_clique(rows: &[u64], mask: u64, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        if (mask.count_ones() as usize) < k {
            return false;
        }
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if mask_has_clique(rows, m & rows[v], k - 1) {
                return true;
            }
        }
        false
    }

    fn rec(rows: &[u64], n: usize, p: usize, idx: usize, chosen: u64, best: &mut usize) {
        let size = chosen.count_ones() as usize;
        if size + (n - idx) <= *best {
            return;
        }
        if idx == n {
            *best = (*best).max(size);
            return;
        }
        let v = idx;
        // include v unless it completes a K_p
        if !mask_has_clique(rows, chosen & rows[v], p - 1) {
            rec(rows, n, p, idx + 1, chosen | (1 << v), best);
        }
        rec(rows, n, p, idx + 1, chosen, best);
    }

    let mut best = 0;
    rec(&rows, n, p, 0, 0, &mut best);
    Ok(best)
}
