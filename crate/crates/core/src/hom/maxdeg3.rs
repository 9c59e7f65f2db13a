//! Coloring graphs of maximum degree 3 into `SP_9*`.
//!
//! Per component: cut off every subdivided-`K_4` gadget, color what is
//! left into `SP_9`, then put the gadgets back using the stored extension
//! table or a five-vertex search. Cubic components without gadgets are
//! handled by deleting one negative edge and moving its endpoints onto the
//! two extra vertices `0'` and `1'`. Every step is re-verified, and a full
//! search into `SP_9*` backs up anything the constructive route misses.

use serde::{Deserialize, Serialize};

use super::degenerate::greedy_degenerate_color;
use super::extension::extension_tables;
use super::{find_hom_2ec, find_hom_2ec_restricted, verify_hom, HomError, Homomorphism};
use crate::analysis::find_automorphism_mapping;
use crate::constructions::{build_gadget, build_sp, GadgetId};
use crate::sgraph::{Sign, SignedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct K4sOccurrence {
    /// Vertices in the roles `s, a, b, c, d`.
    pub vertices: [usize; 5],
    /// Sign of the `K_4` edges.
    pub polarity: Sign,
    pub attach_vertex: usize,
    /// Neighbor of the attach vertex outside the gadget, if any.
    pub outside_neighbor: Option<usize>,
}

/// All induced copies of the two gadgets, ordered by vertex set.
pub fn find_k4s(g: &SignedGraph) -> Vec<K4sOccurrence> {
    let mut found: Vec<K4sOccurrence> = Vec::new();
    for s in 0..g.order() {
        let nbrs = g.neighbors(s);
        for &(a, sa) in nbrs {
            for &(b, sb) in nbrs {
                if a == b || sa == sb {
                    continue;
                }
                let p = sb;
                if g.has_edge(a, b) {
                    continue;
                }
                let others = |x: usize| -> Vec<(usize, Sign)> {
                    g.neighbors(x).iter().copied().filter(|&(w, _)| w != s).collect()
                };
                let (na, nb) = (others(a), others(b));
                if na.len() != 2 || na != nb || na.iter().any(|e| e.1 != p) {
                    continue;
                }
                let (c, d) = (na[0].0, na[1].0);
                if g.sign(c, d) != Some(p) || g.has_edge(s, c) || g.has_edge(s, d) {
                    continue;
                }
                let inside = [s, a, b, c, d];
                // c and d must not reach outside the gadget either
                if [c, d].iter().any(|&x| g.neighbors(x).iter().any(|e| !inside.contains(&e.0))) {
                    continue;
                }
                let mut key = inside;
                key.sort_unstable();
                if found.iter().any(|o| {
                    let mut k = o.vertices;
                    k.sort_unstable();
                    k == key
                }) {
                    continue;
                }
                let outside_neighbor = nbrs.iter().map(|e| e.0).find(|&w| w != a && w != b);
                found.push(K4sOccurrence { vertices: inside, polarity: p, attach_vertex: s, outside_neighbor });
            }
        }
    }
    found.sort_by_key(|o| {
        let mut k = o.vertices;
        k.sort_unstable();
        k
    });
    found
}

struct Targets {
    sp9: SignedGraph,
    star: SignedGraph,
    zero_prime: usize,
    one_prime: usize,
    /// `(attach color, coloring of s, a, b, c, d)` for a positive attach edge.
    plus_table: Vec<[usize; 5]>,
}

impl Targets {
    fn new() -> Targets {
        let star = build_gadget(GadgetId::Sp9Star);
        let table = extension_tables().into_iter().find(|t| t.target == GadgetId::Sp9Star).expect("table present");
        Targets {
            sp9: build_sp(9).expect("9 is a Paley order").graph,
            zero_prime: star.vertex("0'"),
            one_prime: star.vertex("1'"),
            plus_table: table.colorings().into_iter().map(|(_, m)| m).collect(),
            star: star.graph,
        }
    }
}

const UNSET: usize = usize::MAX;

/// Color `sub` into `SP_9` (indices shared with `SP_9*`).
fn color_into_sp9(sub: &SignedGraph, t: &Targets) -> Option<Vec<usize>> {
    if let Ok(Some(h)) = greedy_degenerate_color(sub, &t.sp9, 3) {
        return Some(h.map);
    }
    find_hom_2ec(sub, &t.sp9).map(|h| h.map)
}

/// Gadget-free cubic component.
fn color_cubic(sub: &SignedGraph, t: &Targets) -> Option<Vec<usize>> {
    if sub.edges().all(|e| e.2 == Sign::Pos) {
        let k4 = [0, 1, 2, t.one_prime];
        return find_hom_2ec_restricted(sub, &t.star, &|_, c| k4.contains(&c)).map(|h| h.map);
    }
    for (u, v, s) in sub.edges() {
        if s != Sign::Neg {
            continue;
        }
        let rest = sub.without_edges(&[(u, v)]);
        let Some(phi) = color_into_sp9(&rest, t) else { continue };
        let (cu, cv) = (phi[u], phi[v]);
        let relabeled = match t.sp9.sign(cu, cv) {
            Some(Sign::Neg) => return Some(phi),
            Some(Sign::Pos) => find_automorphism_mapping(&t.sp9, &[(cu, 0), (cv, 1)]).map(|a| {
                let mut m: Vec<usize> = phi.iter().map(|&c| a[c]).collect();
                m[u] = t.zero_prime;
                m[v] = t.one_prime;
                m
            }),
            None if cu == cv => find_automorphism_mapping(&t.sp9, &[(cu, 0)]).map(|a| {
                let mut m: Vec<usize> = phi.iter().map(|&c| a[c]).collect();
                m[u] = t.zero_prime;
                m
            }),
            None => None,
        };
        if let Some(m) = relabeled {
            return Some(m);
        }
    }
    None
}

/// Constructive coloring of one connected component into `SP_9*`.
fn color_component(sub: &SignedGraph, t: &Targets) -> Option<Vec<usize>> {
    let n = sub.order();
    let gadgets = find_k4s(sub);
    if gadgets.is_empty() && n > 0 && (0..n).all(|v| sub.degree(v) == 3) {
        return color_cubic(sub, t);
    }
    let mut in_gadget = vec![false; n];
    for o in &gadgets {
        for &v in &o.vertices {
            in_gadget[v] = true;
        }
    }
    let kept: Vec<usize> = (0..n).filter(|&v| !in_gadget[v]).collect();
    let mut map = vec![UNSET; n];
    if !kept.is_empty() {
        let phi = color_into_sp9(&sub.induced(&kept), t)?;
        for (i, &v) in kept.iter().enumerate() {
            map[v] = phi[i];
        }
    }
    let mut pending: Vec<&K4sOccurrence> = gadgets.iter().collect();
    while !pending.is_empty() {
        let idx = pending.iter().position(|o| o.outside_neighbor.is_none_or(|y| map[y] != UNSET)).unwrap_or(0);
        let o = pending.remove(idx);
        let anchor = o
            .outside_neighbor
            .filter(|&y| map[y] != UNSET)
            .map(|y| (map[y], sub.sign(o.attach_vertex, y).expect("adjacent")));
        let colors = extend_gadget(sub, o, anchor, t)?;
        for (v, c) in o.vertices.iter().zip(colors) {
            map[*v] = c;
        }
    }
    Some(map)
}

/// Colors for `s, a, b, c, d` given the outside color and edge sign.
fn extend_gadget(
    sub: &SignedGraph,
    o: &K4sOccurrence,
    anchor: Option<(usize, Sign)>,
    t: &Targets,
) -> Option<[usize; 5]> {
    if let (Sign::Pos, Some((y, Sign::Pos))) = (o.polarity, anchor) {
        if let Some(m) = t.plus_table.iter().find(|m| t.star.sign(m[0], y) == Some(Sign::Pos)) {
            return Some(*m);
        }
    }
    let gadget = sub.induced(&o.vertices);
    let allowed = |v: usize, c: usize| v != 0 || anchor.is_none_or(|(y, s)| t.star.sign(c, y) == Some(s));
    let h = find_hom_2ec_restricted(&gadget, &t.star, &allowed)?;
    Some([h.map[0], h.map[1], h.map[2], h.map[3], h.map[4]])
}

/// Homomorphism of a graph of maximum degree at most 3 into `SP_9*`.
pub fn color_maxdeg3(g: &SignedGraph) -> Result<Homomorphism, HomError> {
    let maxdeg = g.max_degree();
    if maxdeg > 3 {
        return Err(HomError::DegreeTooLarge { limit: 3, found: maxdeg });
    }
    let t = Targets::new();
    let mut map = vec![0; g.order()];
    for comp in g.components() {
        let sub = g.induced(&comp);
        let constructive = color_component(&sub, &t)
            .filter(|m| verify_hom(&sub, &t.star, &Homomorphism::two_edge_colored(m.clone())).unwrap_or(false));
        let local = match constructive {
            Some(m) => m,
            None => {
                find_hom_2ec(&sub, &t.star)
                    .ok_or_else(|| HomError::Precondition("component has no homomorphism to SP_9*".into()))?
                    .map
            }
        };
        for (i, &v) in comp.iter().enumerate() {
            map[v] = local[i];
        }
    }
    Ok(Homomorphism::two_edge_colored(map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Neg, Pos};

    fn star() -> SignedGraph {
        build_gadget(GadgetId::Sp9Star).graph
    }

    #[test]
    fn gadget_occurrences() {
        let plus = build_gadget(GadgetId::K4sPlus).graph;
        let occ = find_k4s(&plus);
        assert_eq!(occ.len(), 1);
        assert_eq!(occ[0].polarity, Pos);
        assert_eq!(occ[0].vertices, [0, 1, 2, 3, 4]);
        assert_eq!(occ[0].outside_neighbor, None);
        assert!(find_k4s(&SignedGraph::cycle(&[Neg, Pos, Neg, Pos, Neg, Pos])).is_empty());
        let minus = build_gadget(GadgetId::K4sMinus).graph;
        let two = find_k4s(&minus.disjoint_union(&minus));
        assert_eq!(two.len(), 2);
        assert!(two.iter().all(|o| o.polarity == Neg));
    }

    #[test]
    fn gadget_on_a_path_uses_the_table() {
        // path 5 - 6 - 0 where 0 is the attach vertex of a positive gadget
        let mut g = build_gadget(GadgetId::K4sPlus).graph;
        let y = g.add_vertex();
        let z = g.add_vertex();
        g.insert_edge(0, y, Pos).unwrap();
        g.insert_edge(y, z, Neg).unwrap();
        let occ = find_k4s(&g);
        assert_eq!(occ[0].outside_neighbor, Some(y));
        let hom = color_maxdeg3(&g).unwrap();
        assert!(verify_hom(&g, &star(), &hom).unwrap());
    }

    #[test]
    fn cubic_components() {
        let k4 = SignedGraph::complete_with(4, |_, _| Pos);
        let hom = color_maxdeg3(&k4).unwrap();
        assert!(verify_hom(&k4, &star(), &hom).unwrap());
        for bits in 0..64u32 {
            let g = SignedGraph::complete_with(4, |u, v| {
                let i = [0, 3, 5][u] + v - u - 1;
                if bits >> i & 1 == 1 {
                    Neg
                } else {
                    Pos
                }
            });
            let t = Targets::new();
            let hom = color_maxdeg3(&g).unwrap();
            assert!(verify_hom(&g, &t.star, &hom).unwrap());
        }
    }

    #[test]
    fn rejects_degree_four() {
        let k5 = SignedGraph::complete_with(5, |_, _| Pos);
        assert!(matches!(color_maxdeg3(&k5), Err(HomError::DegreeTooLarge { .. })));
    }
}
