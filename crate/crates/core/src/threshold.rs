//! The chromatic-threshold trichotomy: decomposition family, near-acyclicity,
//! r-near-acyclicity, and the classifier with machine-checkable witnesses.

use crate::coloring::{chromatic_number_capped, proper_colorings};
use crate::cycles::{all_cycles, is_forest};
use crate::error::{GraphError, Result};
use crate::graph::{are_isomorphic, Graph};
use crate::bounds::{rat, Rat};

pub const CLASSIFIER_CAP: usize = 12;

/// M(H): bipartite graphs obtained by deleting r-2 color classes in some
/// proper r-coloring of H, deduplicated up to isomorphism.
pub fn decomposition_family(h: &Graph) -> Result<Vec<Graph>> {
    let n = h.n();
    if n > CLASSIFIER_CAP {
        return Err(GraphError::TooLarge { n, cap: CLASSIFIER_CAP });
    }
    let r = chromatic_number_capped(h, CLASSIFIER_CAP)?;
    if r < 3 {
        return Err(GraphError::InvalidParameter(format!(
            "decomposition family needs chi(H) >= 3, got {r}"
        )));
    }
    let mut family: Vec<Graph> = Vec::new();
    for classes in proper_colorings(h, r) {
        // keep every pair of classes; delete the other r-2
        for i in 0..r {
            for j in (i + 1)..r {
                let mut kept: Vec<usize> = classes[i].iter().chain(&classes[j]).copied().collect();
                kept.sort_unstable();
                let member = h.induced(&kept)?;
                if !family.iter().any(|m| are_isomorphic(m, &member)) {
                    family.push(member);
                }
            }
        }
    }
    Ok(family)
}

/// Witness for near-acyclicity: S independent, V \ S inducing a forest, and
/// every odd cycle of H meeting S in at least two vertices.
#[derive(Clone, Debug)]
pub struct NearAcyclicWitness {
    pub independent_set: Vec<usize>,
    pub forest_part: Vec<usize>,
}

fn independent_sets(h: &Graph) -> Vec<Vec<usize>> {
    let n = h.n();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let s: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let independent =
            s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| !h.has_edge(u, v)));
        if independent {
            out.push(s);
        }
    }
    out
}

pub fn is_near_acyclic(h: &Graph) -> Result<Option<NearAcyclicWitness>> {
    let n = h.n();
    if n > CLASSIFIER_CAP {
        return Err(GraphError::TooLarge { n, cap: CLASSIFIER_CAP });
    }
    let chi = chromatic_number_capped(h, CLASSIFIER_CAP)?;
    if chi != 3 {
        return Err(GraphError::InvalidParameter(format!(
            "near-acyclicity is defined for chi(H) = 3, got {chi}"
        )));
    }
    let odd: Vec<Vec<usize>> =
        all_cycles(h)?.into_iter().filter(|c| c.len() % 2 == 1).collect();
    for s in independent_sets(h) {
        let forest_part: Vec<usize> = (0..n).filter(|v| !s.contains(v)).collect();
        if !is_forest(&h.induced(&forest_part)?) {
            continue;
        }
        let ok = odd.iter().all(|cycle| cycle.iter().filter(|v| s.contains(v)).count() >= 2);
        if ok {
            return Ok(Some(NearAcyclicWitness { independent_set: s, forest_part }));
        }
    }
    Ok(None)
}

/// Witness for r-near-acyclicity: the deleted independent sets in order,
/// plus the near-acyclic witness of what remains.
#[derive(Clone, Debug)]
pub struct RNearAcyclicWitness {
    pub deleted_sets: Vec<Vec<usize>>,
    pub remainder: NearAcyclicWitness,
}

/// Deleting r-3 independent sets (sequentially, possibly empty) is
/// equivalent to deleting one set D with chi(H[D]) <= r-3: deletion cannot
/// create edges, so a set independent at its own step is independent in H,
/// and the union of the deleted sets is properly (r-3)-colored by them.
pub fn is_r_near_acyclic(h: &Graph, r: usize) -> Result<Option<RNearAcyclicWitness>> {
    let n = h.n();
    if n > CLASSIFIER_CAP {
        return Err(GraphError::TooLarge { n, cap: CLASSIFIER_CAP });
    }
    let chi = chromatic_number_capped(h, CLASSIFIER_CAP)?;
    if chi != r || r < 3 {
        return Err(GraphError::InvalidParameter(format!(
            "r-near-acyclicity needs chi(H) = r >= 3, got chi = {chi}, r = {r}"
        )));
    }
    for mask in 0u32..(1u32 << n) {
        let d: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let deleted = h.induced(&d)?;
        if chromatic_number_capped(&deleted, CLASSIFIER_CAP)? > r - 3 {
            continue;
        }
        let survivors: Vec<usize> = (0..n).filter(|v| !d.contains(v)).collect();
        let rest = h.induced(&survivors)?;
        if chromatic_number_capped(&rest, CLASSIFIER_CAP)? != 3 {
            continue;
        }
        if let Some(w) = is_near_acyclic(&rest)? {
            // lift the witness back to H's labels
            let lift = |idx: &[usize]| idx.iter().map(|&i| survivors[i]).collect::<Vec<_>>();
            let remainder = NearAcyclicWitness {
                independent_set: lift(&w.independent_set),
                forest_part: lift(&w.forest_part),
            };
            // split D into r-3 independent sets via a proper coloring
            let mut deleted_sets: Vec<Vec<usize>> = vec![Vec::new(); r - 3];
            if !d.is_empty() {
                let chi_d = chromatic_number_capped(&deleted, CLASSIFIER_CAP)?;
                let classes = proper_colorings(&deleted, chi_d)
                    .into_iter()
                    .next()
                    .expect("chi(H[D]) colorings exist");
                for (slot, class) in deleted_sets.iter_mut().zip(classes) {
                    *slot = class.iter().map(|&i| d[i]).collect();
                }
            }
            return Ok(Some(RNearAcyclicWitness { deleted_sets, remainder }));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug)]
pub enum ThresholdWitness {
    /// the near-acyclic remainder after deleting r-3 independent sets
    RNearAcyclic(RNearAcyclicWitness),
    /// a forest member of the decomposition family
    ForestInFamily(Graph),
    /// no forest in the decomposition family
    NoForest,
}

#[derive(Clone, Debug)]
pub struct ThresholdClass {
    pub r: usize,
    pub value: Rat,
    pub witness: ThresholdWitness,
}

/// The trichotomy value of the chromatic threshold with a witness:
/// (r-3)/(r-2) iff H is r-near-acyclic, else (2r-5)/(2r-3) iff M(H)
/// contains a forest, else (r-2)/(r-1).
pub fn chromatic_threshold(h: &Graph) -> Result<ThresholdClass> {
    let r = chromatic_number_capped(h, CLASSIFIER_CAP)?;
    if r < 3 {
        return Err(GraphError::InvalidParameter(format!(
            "the trichotomy presupposes chi(H) >= 3, got {r}"
        )));
    }
    let ri = r as i64;
    if let Some(w) = is_r_near_acyclic(h, r)? {
        return Ok(ThresholdClass {
            r,
            value: rat(ri - 3, ri - 2),
            witness: ThresholdWitness::RNearAcyclic(w),
        });
    }
    let family = decomposition_family(h)?;
    if let Some(forest) = family.into_iter().find(is_forest) {
        return Ok(ThresholdClass {
            r,
            value: rat(2 * ri - 5, 2 * ri - 3),
            witness: ThresholdWitness::ForestInFamily(forest),
        });
    }
    Ok(ThresholdClass { r, value: rat(ri - 2, ri - 1), witness: ThresholdWitness::NoForest })
}

/// Re-verifies a witness against H by independent checks; used by tests and
/// the oracle reports.
pub fn verify_witness(h: &Graph, class: &ThresholdClass) -> Result<bool> {
    match &class.witness {
        ThresholdWitness::RNearAcyclic(w) => {
            let mut remaining: Vec<usize> = (0..h.n()).collect();
            for set in &w.deleted_sets {
                let indep = set
                    .iter()
                    .enumerate()
                    .all(|(i, &u)| set[i + 1..].iter().all(|&v| !h.has_edge(u, v)));
                if !indep {
                    return Ok(false);
                }
                remaining.retain(|v| !set.contains(v));
            }
            let mut claimed: Vec<usize> =
                w.remainder.independent_set.iter().chain(&w.remainder.forest_part).copied().collect();
            claimed.sort_unstable();
            if claimed != remaining {
                return Ok(false);
            }
            let rest = h.induced(&remaining)?;
            let s_local: Vec<usize> = w
                .remainder
                .independent_set
                .iter()
                .map(|v| remaining.binary_search(v).unwrap())
                .collect();
            let indep = s_local
                .iter()
                .enumerate()
                .all(|(i, &u)| s_local[i + 1..].iter().all(|&v| !rest.has_edge(u, v)));
            let forest_local: Vec<usize> = w
                .remainder
                .forest_part
                .iter()
                .map(|v| remaining.binary_search(v).unwrap())
                .collect();
            let forest_ok = is_forest(&rest.induced(&forest_local)?);
            let odd = all_cycles(&rest)?;
            let cycles_ok = odd
                .iter()
                .filter(|c| c.len() % 2 == 1)
                .all(|c| c.iter().filter(|v| s_local.contains(v)).count() >= 2);
            Ok(indep && forest_ok && cycles_ok)
        }
        ThresholdWitness::ForestInFamily(forest) => {
            if !is_forest(forest) {
                return Ok(false);
            }
            let family = decomposition_family(h)?;
            Ok(family.iter().any(|m| are_isomorphic(m, forest)))
        }
        ThresholdWitness::NoForest => {
            let family = decomposition_family(h)?;
            Ok(!family.iter().any(|m| is_forest(m)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::chromatic_number;

    #[test]
    fn family_of_cliques() {
        let m = decomposition_family(&Graph::complete(3)).unwrap();
        assert_eq!(m.len(), 1);
        assert!(are_isomorphic(&m[0], &Graph::complete(2)));
        let m = decomposition_family(&Graph::complete(4)).unwrap();
        assert_eq!(m.len(), 1);
        assert!(are_isomorphic(&m[0], &Graph::complete(2)));
    }

    #[test]
    fn family_of_c5_contains_path_forest() {
        let m = decomposition_family(&Graph::cycle(5)).unwrap();
        assert!(m.iter().any(|g| is_forest(g)));
        // every member is bipartite
        for g in &m {
            assert!(chromatic_number(g).unwrap() <= 2);
        }
    }

    #[test]
    fn near_acyclic_cases() {
        assert!(is_near_acyclic(&Graph::cycle(5)).unwrap().is_some());
        assert!(is_near_acyclic(&Graph::complete(3)).unwrap().is_none());
        assert!(is_near_acyclic(&Graph::cycle(7)).unwrap().is_some());
        assert!(is_near_acyclic(&Graph::turan(2, 4)).is_err()); // chi = 2
    }

    #[test]
    fn r_near_acyclic_cases() {
        assert!(is_r_near_acyclic(&Graph::cycle(5), 3).unwrap().is_some());
        assert!(is_r_near_acyclic(&Graph::complete(4), 4).unwrap().is_none());
        let wheel = Graph::cycle(5).join(&Graph::complete(1)); // C5 + apex
        assert!(is_r_near_acyclic(&wheel, 4).unwrap().is_some());
        assert!(is_r_near_acyclic(&Graph::complete(4), 3).is_err()); // chi mismatch
    }

    #[test]
    fn classifier_ground_truth() {
        let cases: Vec<(Graph, Rat)> = vec![
            (Graph::complete(3), rat(1, 3)),
            (Graph::cycle(5), rat(0, 1)),
            (Graph::complete(4), rat(3, 5)),
            (Graph::cycle(5).join(&Graph::complete(1)), rat(1, 2)),
            (Graph::petersen(), rat(0, 1)), // 3-chromatic with independent-set structure
        ];
        for (h, expected) in cases {
            let class = chromatic_threshold(&h).unwrap();
            assert_eq!(class.value, expected, "{h:?}");
            assert!(verify_witness(&h, &class).unwrap(), "{h:?}");
        }
    }

    #[test]
    fn value_is_always_a_trichotomy_rational() {
        for h in crate::graph::enumerate_labeled_graphs(5).unwrap() {
            let chi = chromatic_number(&h).unwrap();
            if chi < 3 {
                continue;
            }
            let c = chromatic_threshold(&h).unwrap();
            let ri = chi as i64;
            let allowed = [rat(ri - 3, ri - 2), rat(2 * ri - 5, 2 * ri - 3), rat(ri - 2, ri - 1)];
            assert!(allowed.contains(&c.value));
            assert!(verify_witness(&h, &c).unwrap());
        }
    }
}
