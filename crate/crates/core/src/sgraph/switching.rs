use serde::{Deserialize, Serialize};

use super::{GraphError, Sign, SignedGraph, SwitchSet};

/// Reverse the sign of every edge with exactly one endpoint in `set`.
pub fn switch(g: &SignedGraph, set: &SwitchSet) -> Result<SignedGraph, GraphError> {
    for &v in set.members() {
        g.check_vertex(v)?;
    }
    Ok(switch_by_mask(g, &set.mask(g.order())))
}

pub(crate) fn switch_by_mask(g: &SignedGraph, mask: &[bool]) -> SignedGraph {
    let mut out = g.clone();
    for (u, row) in out.adj.iter_mut().enumerate() {
        for (v, s) in row.iter_mut() {
            if mask[u] != mask[*v] {
                *s = -*s;
            }
        }
    }
    out
}

/// Whether the closed walk through `cycle` has an even number of negative
/// edges. The walk closes from the last vertex back to the first; a
/// sequence whose last entry repeats the first is taken as already closed.
pub fn is_balanced_cycle(g: &SignedGraph, cycle: &[usize]) -> Result<bool, GraphError> {
    let closed = cycle.len() > 1 && cycle.first() == cycle.last();
    let steps = if closed { cycle.len() - 1 } else { cycle.len() };
    let mut negatives = 0usize;
    for i in 0..steps {
        let u = cycle[i];
        let v = if closed { cycle[i + 1] } else { cycle[(i + 1) % cycle.len()] };
        g.check_vertex(u)?;
        g.check_vertex(v)?;
        match g.sign(u, v) {
            Some(Sign::Neg) => negatives += 1,
            Some(Sign::Pos) => {}
            None => return Err(GraphError::NotAnEdge(u, v)),
        }
    }
    Ok(negatives.is_multiple_of(2))
}

/// Switching-invariant signature of a signed graph.
///
/// Each component is rooted at its smallest vertex and spanned by a
/// breadth-first tree visiting neighbors in ascending order. Switching so
/// that every tree edge is positive is unique once the root is fixed; the
/// signs left on the co-tree edges then determine the switching class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CanonicalSwitchForm {
    pub order: usize,
    pub underlying: Vec<(usize, usize)>,
    pub canonical_signs: Vec<(usize, usize, Sign)>,
    pub component_roots: Vec<usize>,
}

struct SpanningForest {
    roots: Vec<usize>,
    /// tree edges as (parent, child)
    tree: Vec<(usize, usize)>,
    /// vertices switched to make every tree edge positive
    switched: Vec<bool>,
}

fn bfs_forest(g: &SignedGraph) -> SpanningForest {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut switched = vec![false; n];
    let mut roots = Vec::new();
    let mut tree = Vec::new();
    let mut queue = Vec::with_capacity(n);
    for root in 0..n {
        if seen[root] {
            continue;
        }
        roots.push(root);
        seen[root] = true;
        queue.clear();
        queue.push(root);
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            for &(w, s) in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    switched[w] = switched[v] ^ (s == Sign::Neg);
                    tree.push((v.min(w), v.max(w)));
                    queue.push(w);
                }
            }
        }
    }
    tree.sort_unstable();
    SpanningForest { roots, tree, switched }
}

/// The switch set that makes every BFS-tree edge positive. Never contains
/// a component root.
pub(crate) fn tree_switch_set(g: &SignedGraph) -> SwitchSet {
    let forest = bfs_forest(g);
    SwitchSet::new((0..g.order()).filter(|&v| forest.switched[v]))
}

pub fn canonical_switch_form(g: &SignedGraph) -> CanonicalSwitchForm {
    let forest = bfs_forest(g);
    let normal = switch_by_mask(g, &forest.switched);
    let canonical_signs = normal.edges().filter(|&(u, v, _)| forest.tree.binary_search(&(u, v)).is_err()).collect();
    CanonicalSwitchForm {
        order: g.order(),
        underlying: g.underlying_edges(),
        canonical_signs,
        component_roots: forest.roots,
    }
}

/// A switch set turning `g1` into `g2`, if the two are switching
/// equivalent. The witness never contains a component root.
pub fn switch_equivalent(g1: &SignedGraph, g2: &SignedGraph) -> Option<SwitchSet> {
    if !g1.same_underlying(g2) {
        return None;
    }
    if canonical_switch_form(g1) != canonical_switch_form(g2) {
        return None;
    }
    let s1 = tree_switch_set(g1);
    let s2 = tree_switch_set(g2);
    Some(s1.symmetric_difference(&s2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Neg, Pos};

    fn c4(signs: [Sign; 4]) -> SignedGraph {
        SignedGraph::cycle(&signs)
    }

    #[test]
    fn empty_switch_is_identity() {
        let g = c4([Pos, Neg, Pos, Pos]);
        assert_eq!(switch(&g, &SwitchSet::empty()).unwrap(), g);
    }

    #[test]
    fn switching_one_vertex_of_positive_c4() {
        let g = c4([Pos; 4]);
        let h = switch(&g, &SwitchSet::new([0])).unwrap();
        let negatives: Vec<_> = h.edges().filter(|e| e.2 == Neg).map(|(u, v, _)| (u, v)).collect();
        assert_eq!(negatives, vec![(0, 1), (0, 3)]);
        assert!(h.same_underlying(&g));
    }

    #[test]
    fn switch_rejects_out_of_range() {
        let g = c4([Pos; 4]);
        assert!(matches!(switch(&g, &SwitchSet::new([7])), Err(GraphError::VertexOutOfRange { vertex: 7, .. })));
    }

    #[test]
    fn cycle_balance() {
        assert!(is_balanced_cycle(&c4([Pos; 4]), &[0, 1, 2, 3]).unwrap());
        assert!(!is_balanced_cycle(&c4([Pos, Pos, Neg, Pos]), &[0, 1, 2, 3]).unwrap());
        let alt6 = SignedGraph::cycle(&[Pos, Neg, Pos, Neg, Pos, Neg]);
        assert!(!is_balanced_cycle(&alt6, &[0, 1, 2, 3, 4, 5]).unwrap());
        assert!(!is_balanced_cycle(&alt6, &[0, 1, 2, 3, 4, 5, 0]).unwrap());
        assert_eq!(is_balanced_cycle(&alt6, &[0, 2, 3]), Err(GraphError::NotAnEdge(0, 2)));
    }

    #[test]
    fn canonical_form_of_negative_path() {
        let p = SignedGraph::path(&[Neg, Neg]);
        let form = canonical_switch_form(&p);
        assert!(form.canonical_signs.is_empty());
        assert_eq!(form.component_roots, vec![0]);
        let s = tree_switch_set(&p);
        let normal = switch(&p, &s).unwrap();
        assert!(normal.edges().all(|e| e.2 == Pos));
    }

    #[test]
    fn canonical_form_of_c4() {
        let unbalanced = canonical_switch_form(&c4([Neg, Pos, Pos, Pos]));
        assert_eq!(unbalanced.canonical_signs.len(), 1);
        assert_eq!(unbalanced.canonical_signs[0].2, Neg);
        let balanced = canonical_switch_form(&c4([Neg, Neg, Pos, Pos]));
        assert_eq!(balanced.canonical_signs[0].2, Pos);
    }

    #[test]
    fn positive_and_negative_c6_are_equivalent() {
        let a = SignedGraph::cycle(&[Pos; 6]);
        let b = SignedGraph::cycle(&[Neg; 6]);
        let w = switch_equivalent(&a, &b).expect("both balanced");
        assert_eq!(switch(&a, &w).unwrap(), b);
        assert!(!w.contains(0));
    }

    #[test]
    fn balance_separates_c4s() {
        assert_eq!(switch_equivalent(&c4([Pos; 4]), &c4([Neg, Pos, Pos, Pos])), None);
        let other = SignedGraph::path(&[Pos, Pos, Pos]);
        assert_eq!(switch_equivalent(&c4([Pos; 4]), &other), None);
    }
}
