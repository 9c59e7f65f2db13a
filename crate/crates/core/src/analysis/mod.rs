//! Structural properties of target graphs.

mod bounds;
mod symmetry;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::{self, SignedAdjacency};
use crate::sgraph::{Sign, SignedGraph};

pub use bounds::{bounds_table, Bound, BoundsRow};
pub use symmetry::{
    automorphisms, canonical_form, canonical_labeling, find_automorphism_mapping, find_isomorphism, is_antiautomorphic,
    is_kn_transitive, AutomorphismGroup, CanonicalForm, DEFAULT_AUTOMORPHISM_LIMIT, DEFAULT_VERTEX_LIMIT,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("clique size k = {k} exceeds the order {n}")]
    KTooLarge { k: usize, n: usize },
    #[error("clique size must be at least 1")]
    KZero,
    #[error("graph is not complete")]
    NotComplete,
    #[error("graph has {n} vertices, above the limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("more than {limit} automorphisms")]
    TooManyAutomorphisms { limit: usize },
    #[error("transitivity is only checked for tuples of length 1 to 3, got {0}")]
    UnsupportedTupleLength(usize),
}

/// Signs prescribed on the edges from a common neighbor to a clique.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SignVector(pub Vec<Sign>);

impl SignVector {
    /// Bit `i` of `mask` set means entry `i` is negative.
    pub fn from_mask(mask: usize, k: usize) -> SignVector {
        SignVector((0..k).map(|i| if mask >> i & 1 == 1 { Sign::Neg } else { Sign::Pos }).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    None,
    /// A clique and sign vector with the fewest realizing common neighbors.
    Clique {
        vertices: Vec<usize>,
        signs: SignVector,
        common_neighbors: usize,
    },
    /// A non-adjacent pair violating a clique characterization.
    Pair {
        u: usize,
        v: usize,
    },
    /// Ordered pair and prescribed signs with too few realizing vertices.
    SignedPair {
        u: usize,
        v: usize,
        s1: Sign,
        s2: Sign,
        found: Vec<usize>,
    },
    /// Two sign-compatible tuples in different automorphism orbits.
    Tuples {
        first: Vec<usize>,
        unreachable: Vec<usize>,
        orbit: usize,
        class: usize,
    },
    /// A map realizing the property.
    Map {
        map: Vec<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub kind: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub witness: Witness,
}

impl PropertyReport {
    fn new(kind: &str, holds: bool, witness: Witness) -> PropertyReport {
        PropertyReport { kind: kind.to_string(), holds, k: None, n: None, witness }
    }
}

/// Minimizing configuration of the clique scan.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Minimum {
    count: usize,
    clique: Vec<usize>,
    mask: usize,
}

/// Depth-first scan of all `k`-cliques `v_1 < ... < v_k`, keeping for each
/// partial sign vector the set of vertices realizing it.
fn scan_cliques(adj: &SignedAdjacency, n: usize, k: usize, root: usize) -> Option<Minimum> {
    let w = adj.words;
    // layer d holds 2^d bitsets of w words each
    let mut layers: Vec<Vec<u64>> = (0..=k).map(|d| vec![0u64; (1 << d) * w]).collect();
    layers[0].iter_mut().for_each(|x| *x = !0);
    let mut clique = Vec::with_capacity(k);
    let mut best: Option<Minimum> = None;
    extend(adj, n, k, root, &mut layers, &mut clique, &mut best);
    best
}

fn extend(
    adj: &SignedAdjacency,
    n: usize,
    k: usize,
    v: usize,
    layers: &mut [Vec<u64>],
    clique: &mut Vec<usize>,
    best: &mut Option<Minimum>,
) {
    let w = adj.words;
    let d = clique.len();
    {
        let (lo, hi) = layers.split_at_mut(d + 1);
        let prev = &lo[d];
        let next = &mut hi[0];
        for mask in 0..1usize << d {
            let src = &prev[mask * w..(mask + 1) * w];
            for (bit, s) in [(0usize, Sign::Pos), (1, Sign::Neg)] {
                let dst = &mut next[(mask | bit << d) * w..((mask | bit << d) + 1) * w];
                dst.copy_from_slice(src);
                bits::and_assign(dst, adj.row(v, s));
            }
        }
    }
    clique.push(v);
    if d + 1 == k {
        let layer = &layers[k];
        for mask in 0..1usize << k {
            let count = bits::count(&layer[mask * w..(mask + 1) * w]);
            let cand = Minimum { count, clique: clique.clone(), mask };
            if best.as_ref().is_none_or(|b| cand < *b) {
                *best = Some(cand);
            }
        }
    } else {
        // common neighborhood of the clique so far, restricted to larger indices
        let mut common = vec![0u64; w];
        for mask in 0..1usize << (d + 1) {
            for (c, x) in common.iter_mut().zip(&layers[d + 1][mask * w..(mask + 1) * w]) {
                *c |= x;
            }
        }
        let next: Vec<usize> = bits::iter(&common).filter(|&u| u > v && u < n).collect();
        for u in next {
            extend(adj, n, k, u, layers, clique, best);
        }
    }
    clique.pop();
}

fn minimum_over_cliques(g: &SignedGraph, k: usize) -> Result<Option<Minimum>, AnalysisError> {
    if k == 0 {
        return Err(AnalysisError::KZero);
    }
    if k > g.order() {
        return Err(AnalysisError::KTooLarge { k, n: g.order() });
    }
    let adj = SignedAdjacency::new(g);
    let n = g.order();
    Ok((0..n).into_par_iter().filter_map(|root| scan_cliques(&adj, n, k, root)).min())
}

/// Property `P_{k,n}`: every `k`-clique and every sign vector is realized by
/// at least `n` common neighbors.
pub fn check_p_kn(g: &SignedGraph, k: usize, n: usize) -> Result<PropertyReport, AnalysisError> {
    let min = minimum_over_cliques(g, k)?;
    let (holds, witness) = match min {
        None => (true, Witness::None),
        Some(m) => (
            m.count >= n,
            Witness::Clique { vertices: m.clique, signs: SignVector::from_mask(m.mask, k), common_neighbors: m.count },
        ),
    };
    let mut report = PropertyReport::new("P_kn", holds, witness);
    report.k = Some(k);
    report.n = Some(n);
    Ok(report)
}

/// Largest `n` with `P_{k,n}`; `None` when `g` has no `k`-clique, in which
/// case the property holds for every `n`.
pub fn max_p_n(g: &SignedGraph, k: usize) -> Result<Option<usize>, AnalysisError> {
    Ok(minimum_over_cliques(g, k)?.map(|m| m.count))
}

/// Vertices `w` with `s(uw) = s1` and `s(vw) = s2`.
pub fn common_signed_neighbors(g: &SignedGraph, u: usize, v: usize, s1: Sign, s2: Sign) -> Vec<usize> {
    (0..g.order()).filter(|&w| w != u && w != v && g.sign(u, w) == Some(s1) && g.sign(v, w) == Some(s2)).collect()
}

/// Property `P*_{2,2}` of complete graphs: for every ordered pair `(u, v)`
/// and signs `(s1, s2)` not both equal to `s(uv)`, two vertices realize
/// the signs.
pub fn check_p22_star(g: &SignedGraph) -> Result<PropertyReport, AnalysisError> {
    if !g.is_complete() {
        return Err(AnalysisError::NotComplete);
    }
    let n = g.order();
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let suv = g.sign(u, v).expect("complete");
            for s1 in [Sign::Pos, Sign::Neg] {
                for s2 in [Sign::Pos, Sign::Neg] {
                    if s1 == suv && s2 == suv {
                        continue;
                    }
                    let found = common_signed_neighbors(g, u, v, s1, s2);
                    if found.len() < 2 {
                        let w = Witness::SignedPair { u, v, s1, s2, found };
                        return Ok(PropertyReport::new("P22_star", false, w));
                    }
                }
            }
        }
    }
    Ok(PropertyReport::new("P22_star", true, Witness::None))
}

fn first_bad_pair(g: &SignedGraph, ok: impl Fn(usize, usize) -> bool) -> Option<(usize, usize)> {
    let n = g.order();
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).find(|&(u, v)| !g.has_edge(u, v) && !ok(u, v))
}

/// Every non-adjacent pair is joined by a path `u w v` with `s(uw) != s(wv)`.
pub fn is_2ec_clique(g: &SignedGraph) -> PropertyReport {
    let bad = first_bad_pair(g, |u, v| g.neighbors(u).iter().any(|&(w, s)| g.sign(v, w).is_some_and(|t| t != s)));
    match bad {
        None => PropertyReport::new("2ec_clique", true, Witness::None),
        Some((u, v)) => PropertyReport::new("2ec_clique", false, Witness::Pair { u, v }),
    }
}

/// Every non-adjacent pair lies on an unbalanced 4-cycle, i.e. two common
/// neighbors whose 2-paths have different sign products.
pub fn is_signed_clique(g: &SignedGraph) -> PropertyReport {
    let bad = first_bad_pair(g, |u, v| {
        let mut products = g.neighbors(u).iter().filter_map(|&(w, s)| g.sign(v, w).map(|t| s * t));
        match products.next() {
            None => false,
            Some(first) => products.any(|p| p != first),
        }
    });
    match bad {
        None => PropertyReport::new("signed_clique", true, Witness::None),
        Some((u, v)) => PropertyReport::new("signed_clique", false, Witness::Pair { u, v }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_gadget, build_sp, GadgetId};
    use Sign::{Neg, Pos};

    #[test]
    fn sp5_min_counts() {
        let sp5 = build_sp(5).unwrap().graph;
        assert_eq!(max_p_n(&sp5, 1).unwrap(), Some(2));
        assert!(check_p_kn(&sp5, 1, 2).unwrap().holds);
        let r = check_p_kn(&sp5, 1, 3).unwrap();
        assert!(!r.holds);
        assert!(matches!(r.witness, Witness::Clique { common_neighbors: 2, .. }));
    }

    #[test]
    fn zero_witnesses_always_suffice() {
        let g = SignedGraph::cycle(&[Pos, Neg, Pos]);
        assert!(check_p_kn(&g, 2, 0).unwrap().holds);
        assert_eq!(check_p_kn(&g, 4, 0).unwrap_err(), AnalysisError::KTooLarge { k: 4, n: 3 });
    }

    #[test]
    fn no_cliques_means_vacuous() {
        let g = SignedGraph::empty(4);
        assert_eq!(max_p_n(&g, 2).unwrap(), None);
        assert!(check_p_kn(&g, 2, 100).unwrap().holds);
    }

    #[test]
    fn sp9_p22_star_holds_sp5_fails() {
        assert!(check_p22_star(&build_sp(9).unwrap().graph).unwrap().holds);
        assert!(!check_p22_star(&build_sp(5).unwrap().graph).unwrap().holds);
        let k4 = SignedGraph::complete_with(4, |_, _| Pos);
        assert!(!check_p22_star(&k4).unwrap().holds);
        assert_eq!(check_p22_star(&SignedGraph::empty(3)).unwrap_err(), AnalysisError::NotComplete);
    }

    #[test]
    fn clique_characterizations() {
        let k3 = SignedGraph::complete_with(3, |_, _| Pos);
        assert!(is_2ec_clique(&k3).holds);
        let alt6 = SignedGraph::cycle(&[Pos, Neg, Pos, Neg, Pos, Neg]);
        let r = is_2ec_clique(&alt6);
        assert!(!r.holds);
        assert!(matches!(r.witness, Witness::Pair { .. }));
        assert!(is_signed_clique(&SignedGraph::cycle(&[Neg, Pos, Pos, Pos])).holds);
        assert!(!is_signed_clique(&SignedGraph::cycle(&[Pos; 4])).holds);
        assert!(is_signed_clique(&build_gadget(GadgetId::Clique6).graph).holds);
    }
}
