//! Greedy coloring of degenerate graphs into targets with property `P_{k,n}`.
//!
//! Vertices are colored in reverse elimination order. A new vertex `u`
//! whose colored neighbors demand contradictory colors is handled by
//! recoloring its majority-sign neighbors away from the minority colors;
//! the property guarantees enough room for each recoloring.

use serde::{Deserialize, Serialize};

use super::{HomError, Homomorphism};
use crate::analysis::max_p_n;
use crate::sgraph::{Sign, SignedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegeneracyOrder {
    /// Vertices in elimination order.
    pub order: Vec<usize>,
    pub degeneracy: usize,
}

/// Repeatedly remove a vertex of minimum remaining degree, lowest index first.
pub fn degeneracy_order(g: &SignedGraph) -> DegeneracyOrder {
    let n = g.order();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut degeneracy = 0;
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (degree[v], v)).expect("vertices remain");
        degeneracy = degeneracy.max(degree[v]);
        removed[v] = true;
        order.push(v);
        for &(w, _) in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
            }
        }
    }
    DegeneracyOrder { order, degeneracy }
}

/// Each target vertex's class under the antitwin relation, or `None` when
/// some non-adjacent pair is not an antitwin pair.
fn antitwin_classes(t: &SignedGraph) -> Option<Vec<usize>> {
    let n = t.order();
    let mut rep: Vec<usize> = (0..n).collect();
    for u in 0..n {
        for v in u + 1..n {
            if t.has_edge(u, v) {
                continue;
            }
            let anti = (0..n).filter(|&w| w != u && w != v).all(|w| match (t.sign(u, w), t.sign(v, w)) {
                (None, None) => true,
                (Some(a), Some(b)) => a == -b,
                _ => false,
            });
            if !anti {
                return None;
            }
            rep[v] = rep[v].min(rep[u]);
        }
    }
    Some(rep)
}

fn realizers<'a>(t: &'a SignedGraph, demands: &'a [(usize, Sign)]) -> impl Iterator<Item = usize> + 'a {
    (0..t.order()).filter(move |&w| demands.iter().all(|&(c, s)| t.sign(c, w) == Some(s)))
}

/// Color `g` into `t` following the degeneracy order.
///
/// Requires every non-adjacent pair of `t` to be an antitwin pair (true for
/// complete targets), maximum degree of `g` at most `k`, degeneracy `d` at
/// most `k - 1`, and in `t` the properties `P_{j,1}` for `j <= d` and
/// `P_{j, d/2 + 1}` for `j < k` (only `P_{1,1}` when `d <= 1`). Returns
/// `Ok(None)` if the greedy gets stuck, which the conditions rule out for
/// complete targets.
pub fn greedy_degenerate_color(g: &SignedGraph, t: &SignedGraph, k: usize) -> Result<Option<Homomorphism>, HomError> {
    let rep = antitwin_classes(t)
        .ok_or_else(|| HomError::Precondition("target has a non-adjacent pair that is not an antitwin pair".into()))?;
    let maxdeg = g.max_degree();
    if maxdeg > k {
        return Err(HomError::DegreeTooLarge { limit: k, found: maxdeg });
    }
    let elim = degeneracy_order(g);
    let d = elim.degeneracy;
    if d + 1 > k.max(1) {
        return Err(HomError::Precondition(format!("graph is {}-degenerate, need at most {}", d, k.saturating_sub(1))));
    }
    let mut needs: Vec<(usize, usize)> = (1..=d.max(1)).map(|j| (j, 1)).collect();
    if d >= 2 {
        needs.extend((1..k).map(|j| (j, d / 2 + 1)));
    }
    for (j, n) in needs {
        if j > t.order() {
            return Err(HomError::Precondition(format!("target has fewer than {} vertices", j)));
        }
        let ok = max_p_n(t, j).map_err(|e| HomError::Precondition(e.to_string()))?.is_none_or(|m| m >= n);
        if !ok {
            return Err(HomError::Precondition(format!("target lacks property P_{{{},{}}}", j, n)));
        }
    }
    if g.order() > 0 && t.order() == 0 {
        return Err(HomError::Precondition("empty target".into()));
    }

    const UNSET: usize = usize::MAX;
    let mut color = vec![UNSET; g.order()];
    let demands_of = |color: &[usize], v: usize, skip: usize| -> Vec<(usize, Sign)> {
        g.neighbors(v).iter().filter(|&&(w, _)| w != skip && color[w] != UNSET).map(|&(w, s)| (color[w], s)).collect()
    };
    for &u in elim.order.iter().rev() {
        let demands = demands_of(&color, u, UNSET);
        if let Some(c) = realizers(t, &demands).next() {
            color[u] = c;
            continue;
        }
        let colored: Vec<(usize, Sign)> = g.neighbors(u).iter().copied().filter(|&(w, _)| color[w] != UNSET).collect();
        let negatives = colored.iter().filter(|e| e.1 == Sign::Neg).count();
        let minority_sign = if negatives * 2 <= colored.len() { Sign::Neg } else { Sign::Pos };
        let minority: Vec<usize> = colored.iter().filter(|e| e.1 == minority_sign).map(|e| color[e.0]).collect();
        let majority: Vec<usize> = colored.iter().filter(|e| e.1 != minority_sign).map(|e| e.0).collect();
        for (i, &v) in majority.iter().enumerate() {
            let clashes = |c: usize, color: &[usize]| {
                minority.iter().any(|&m| rep[m] == rep[c])
                    || majority.iter().enumerate().any(|(j, &x)| j != i && color[x] != c && rep[color[x]] == rep[c])
            };
            if !clashes(color[v], &color) {
                continue;
            }
            let own = demands_of(&color, v, u);
            let fresh = realizers(t, &own).find(|&c| !clashes(c, &color));
            match fresh {
                Some(c) => color[v] = c,
                None => return Ok(None),
            }
        }
        let demands = demands_of(&color, u, UNSET);
        let chosen = realizers(t, &demands).next();
        match chosen {
            Some(c) => color[u] = c,
            None => return Ok(None),
        }
    }
    Ok(Some(Homomorphism::two_edge_colored(color)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_sp, build_tr};
    use crate::hom::verify_hom;
    use Sign::{Neg, Pos};

    #[test]
    fn elimination_order() {
        let path = SignedGraph::path(&[Pos, Neg, Pos]);
        let d = degeneracy_order(&path);
        assert_eq!(d.order, vec![0, 1, 2, 3]);
        assert_eq!(d.degeneracy, 1);
        let k4 = SignedGraph::complete_with(4, |_, _| Pos);
        assert_eq!(degeneracy_order(&k4).degeneracy, 3);
    }

    #[test]
    fn tree_into_sp9() {
        let tree =
            SignedGraph::from_edges(7, [(0, 1, Pos), (0, 2, Neg), (0, 3, Neg), (1, 4, Pos), (1, 5, Neg), (2, 6, Pos)])
                .unwrap();
        let sp9 = build_sp(9).unwrap().graph;
        let hom = greedy_degenerate_color(&tree, &sp9, 3).unwrap().unwrap();
        assert!(verify_hom(&tree, &sp9, &hom).unwrap());
    }

    #[test]
    fn rejects_violations() {
        let sp9 = build_sp(9).unwrap().graph;
        let k4 = SignedGraph::complete_with(4, |_, _| Pos);
        assert!(matches!(greedy_degenerate_color(&k4, &sp9, 2), Err(HomError::DegreeTooLarge { .. })));
        assert!(matches!(greedy_degenerate_color(&k4, &sp9, 3), Err(HomError::Precondition(_))));
        let sb_like = SignedGraph::path(&[Pos, Pos]);
        assert!(matches!(greedy_degenerate_color(&sb_like, &sb_like, 2), Err(HomError::Precondition(_))));
    }

    #[test]
    fn antitwinned_target() {
        let tr = build_tr(13).unwrap().graph;
        let k4 = SignedGraph::complete_with(4, |u, v| if (u + v) % 2 == 0 { Pos } else { Neg });
        let hom = greedy_degenerate_color(&k4, &tr, 4).unwrap().unwrap();
        assert!(verify_hom(&k4, &tr, &hom).unwrap());
    }
}
