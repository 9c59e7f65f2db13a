//! Generation of small graphs up to isomorphism, and random graphs.

use std::collections::{BTreeMap, HashSet};
use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use crate::analysis::{canonical_form, CanonicalForm};
use crate::sgraph::{Sign, SignedGraph};

const CACHED: usize = 8;

fn cache<F>(cells: &'static [OnceLock<Vec<SignedGraph>>; CACHED], n: usize, build: F) -> Vec<SignedGraph>
where
    F: FnOnce() -> Vec<SignedGraph>,
{
    if n < CACHED {
        cells[n].get_or_init(build).clone()
    } else {
        build()
    }
}

/// Keep the first graph of each key, in key order.
fn dedup_by<K: Ord + Send>(graphs: Vec<SignedGraph>, key: impl Fn(&SignedGraph) -> K + Sync) -> Vec<SignedGraph> {
    let keyed: Vec<(K, SignedGraph)> = graphs.into_par_iter().map(|g| (key(&g), g)).collect();
    let mut unique = BTreeMap::new();
    for (k, g) in keyed {
        unique.entry(k).or_insert(g);
    }
    unique.into_values().collect()
}

fn extend_with_vertex(g: &SignedGraph, edges: &[(usize, Sign)]) -> SignedGraph {
    let mut h = g.clone();
    let v = h.add_vertex();
    for &(u, s) in edges {
        h.insert_edge(v, u, s).expect("fresh vertex");
    }
    h
}

/// Complete 2-edge-colored graphs on `n` vertices, one per isomorphism class.
pub fn complete_targets_2ec(n: usize) -> Vec<SignedGraph> {
    static CELLS: [OnceLock<Vec<SignedGraph>>; CACHED] = [const { OnceLock::new() }; CACHED];
    cache(&CELLS, n, || {
        if n == 0 {
            return vec![SignedGraph::empty(0)];
        }
        let mut grown = Vec::new();
        for t in complete_targets_2ec(n - 1) {
            for mask in 0..1usize << (n - 1) {
                let edges: Vec<(usize, Sign)> =
                    (0..n - 1).map(|u| (u, if mask >> u & 1 == 1 { Sign::Neg } else { Sign::Pos })).collect();
                grown.push(extend_with_vertex(&t, &edges));
            }
        }
        dedup_by(grown, canonical_form)
    })
}

/// Invariant of a complete graph under switching and relabeling: switch
/// each vertex in turn to have only positive edges, keep the least form.
fn switching_class_key(g: &SignedGraph) -> CanonicalForm {
    (0..g.order())
        .map(|pivot| {
            let flipped = SignedGraph::complete_with(g.order(), |u, v| {
                let s = g.sign(u, v).expect("complete");
                let flip =
                    |w: usize| if w != pivot && g.sign(pivot, w) == Some(Sign::Neg) { Sign::Neg } else { Sign::Pos };
                s * flip(u) * flip(v)
            });
            canonical_form(&flipped)
        })
        .min()
        .unwrap_or_else(|| canonical_form(g))
}

/// Complete signed graphs on `n` vertices, one per class under switching
/// and isomorphism. Every class has a member with an all-positive vertex.
pub fn complete_targets_signed(n: usize) -> Vec<SignedGraph> {
    static CELLS: [OnceLock<Vec<SignedGraph>>; CACHED] = [const { OnceLock::new() }; CACHED];
    cache(&CELLS, n, || {
        if n <= 1 {
            return vec![SignedGraph::empty(n)];
        }
        let grown: Vec<SignedGraph> = complete_targets_2ec(n - 1)
            .iter()
            .map(|t| extend_with_vertex(t, &(0..n - 1).map(|u| (u, Sign::Pos)).collect::<Vec<_>>()))
            .collect();
        dedup_by(grown, switching_class_key)
    })
}

fn subsets_up_to_three(items: &[usize], allow_empty: bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if allow_empty {
        out.push(Vec::new());
    }
    for (i, &a) in items.iter().enumerate() {
        out.push(vec![a]);
        for (j, &b) in items.iter().enumerate().skip(i + 1) {
            out.push(vec![a, b]);
            for &c in &items[j + 1..] {
                out.push(vec![a, b, c]);
            }
        }
    }
    out
}

/// Connected graphs of maximum degree at most 3 on `n` vertices, one per
/// isomorphism class, all edges positive.
pub fn connected_subcubic(n: usize) -> Vec<SignedGraph> {
    static CELLS: [OnceLock<Vec<SignedGraph>>; CACHED] = [const { OnceLock::new() }; CACHED];
    static NINE: OnceLock<Vec<SignedGraph>> = OnceLock::new();
    let build = || {
        if n <= 1 {
            return vec![SignedGraph::empty(n)];
        }
        // every connected graph has a vertex whose removal keeps it connected
        let grown: Vec<SignedGraph> = connected_subcubic(n - 1)
            .par_iter()
            .flat_map_iter(|g| {
                let free: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) < 3).collect();
                subsets_up_to_three(&free, false)
                    .into_iter()
                    .map(|s| extend_with_vertex(g, &s.iter().map(|&u| (u, Sign::Pos)).collect::<Vec<_>>()))
                    .collect::<Vec<_>>()
            })
            .collect();
        dedup_by(grown, canonical_form)
    };
    if n == 9 {
        NINE.get_or_init(build).clone()
    } else {
        cache(&CELLS, n, build)
    }
}

/// All graphs of maximum degree at most 3 on `n` vertices up to
/// isomorphism, built as multisets of connected ones.
pub fn subcubic_graphs(n: usize) -> Vec<SignedGraph> {
    fn go(remaining: usize, max_part: (usize, usize), acc: SignedGraph, out: &mut Vec<SignedGraph>) {
        if remaining == 0 {
            out.push(acc);
            return;
        }
        // parts in non-increasing (order, index) sequence
        for size in (1..=remaining.min(max_part.0)).rev() {
            let comps = connected_subcubic(size);
            let limit = if size == max_part.0 { max_part.1 + 1 } else { comps.len() };
            for (i, c) in comps.iter().enumerate().take(limit) {
                go(remaining - size, (size, i), acc.disjoint_union(c), out);
            }
        }
    }
    let mut out = Vec::new();
    go(n, (n, usize::MAX - 1), SignedGraph::empty(0), &mut out);
    out
}

/// Apply signs to the edges of `g` in `edges()` order: bit `i` of `mask`
/// set makes edge `i` negative.
pub fn with_signature(g: &SignedGraph, mask: u64) -> SignedGraph {
    let edges: Vec<(usize, usize, Sign)> = g
        .edges()
        .enumerate()
        .map(|(i, (u, v, _))| (u, v, if mask >> i & 1 == 1 { Sign::Neg } else { Sign::Pos }))
        .collect();
    SignedGraph::from_edges(g.order(), edges).expect("same underlying graph")
}

/// Independent uniform signs on every edge.
pub fn random_signature<R: Rng + ?Sized>(g: &SignedGraph, rng: &mut R) -> SignedGraph {
    let edges: Vec<(usize, usize, Sign)> =
        g.edges().map(|(u, v, _)| (u, v, if rng.gen() { Sign::Neg } else { Sign::Pos })).collect();
    SignedGraph::from_edges(g.order(), edges).expect("same underlying graph")
}

/// Random graph on `n` vertices: each pair is an edge with probability
/// `density`, with a uniform sign.
pub fn random_graph<R: Rng + ?Sized>(n: usize, density: f64, rng: &mut R) -> SignedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push((u, v, if rng.gen() { Sign::Pos } else { Sign::Neg }));
            }
        }
    }
    SignedGraph::from_edges(n, edges).expect("pairs are distinct")
}

/// Random connected simple cubic graph on `n` vertices (`n` even, at least
/// 4) from the configuration model with rejection; all edges positive.
pub fn random_connected_cubic<R: Rng + ?Sized>(n: usize, rng: &mut R) -> SignedGraph {
    assert!(n >= 4 && n.is_multiple_of(2), "cubic graphs need an even order of at least 4");
    loop {
        let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
        points.shuffle(rng);
        let mut seen = HashSet::new();
        let simple = points.chunks(2).all(|pair| {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            u != v && seen.insert((u, v))
        });
        if !simple {
            continue;
        }
        let g = SignedGraph::from_edges(n, seen.into_iter().map(|(u, v)| (u, v, Sign::Pos))).expect("checked simple");
        if g.is_connected() {
            return g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn complete_target_counts() {
        // graphs up to isomorphism on n vertices (positive edges = graph edges)
        let counts: Vec<usize> = (0..=5).map(|n| complete_targets_2ec(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34]);
    }

    #[test]
    fn signed_target_counts() {
        // switching classes of complete graphs (two-graphs)
        let counts: Vec<usize> = (1..=6).map(|n| complete_targets_signed(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 7, 16]);
    }

    #[test]
    fn subcubic_counts() {
        // connected graphs with maximum degree at most 3
        let counts: Vec<usize> = (1..=6).map(|n| connected_subcubic(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 10, 29]);
        assert_eq!(subcubic_graphs(3).len(), 4);
        assert_eq!(subcubic_graphs(4).len(), 11);
    }

    #[test]
    fn random_cubic_is_cubic() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [4, 10, 24] {
            let g = random_connected_cubic(n, &mut rng);
            assert!((0..n).all(|v| g.degree(v) == 3));
            assert!(g.is_connected());
        }
    }

    #[test]
    fn signature_mask() {
        let g = SignedGraph::cycle(&[Sign::Pos; 3]);
        let s = with_signature(&g, 0b101);
        assert_eq!(s.edges().filter(|e| e.2 == Sign::Neg).count(), 2);
    }
}
