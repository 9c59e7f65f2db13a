//! Exhaustive reference implementations, exponential on purpose.
//!
//! Only for cross-checking the fast searches on small inputs.

use crate::sgraph::{switch, SignedGraph, SwitchSet};

/// Whether any of the `|V(h)|^|V(g)|` vertex maps is a homomorphism.
pub fn brute_force_hom(g: &SignedGraph, h: &SignedGraph) -> bool {
    let (n, m) = (g.order(), h.order());
    if n == 0 {
        return true;
    }
    if m == 0 {
        return false;
    }
    let mut map = vec![0usize; n];
    loop {
        if g.edges().all(|(u, v, s)| h.sign(map[u], map[v]) == Some(s)) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            map[i] += 1;
            if map[i] < m {
                break;
            }
            map[i] = 0;
            i += 1;
        }
    }
}

/// Whether some of the `2^n` switch sets turns `g1` into `g2`.
///
/// # Panics
/// If `g1` has more than 30 vertices.
pub fn brute_force_switch_equivalent(g1: &SignedGraph, g2: &SignedGraph) -> bool {
    let n = g1.order();
    assert!(n <= 30, "brute force over 2^{} switch sets", n);
    (0u32..1 << n).any(|mask| {
        let set = SwitchSet::new((0..n).filter(|&v| mask >> v & 1 == 1));
        switch(g1, &set).is_ok_and(|s| s == *g2)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sgraph::Sign::{Neg, Pos};

    #[test]
    fn tiny_cases() {
        let c4 = SignedGraph::cycle(&[Neg; 4]);
        assert!(brute_force_hom(&c4, &SignedGraph::path(&[Neg])));
        assert!(!brute_force_hom(&SignedGraph::cycle(&[Pos; 3]), &SignedGraph::path(&[Pos])));
        assert!(brute_force_switch_equivalent(&c4, &SignedGraph::cycle(&[Pos; 4])));
        assert!(!brute_force_switch_equivalent(&SignedGraph::cycle(&[Neg, Pos, Pos]), &SignedGraph::cycle(&[Pos; 3])));
    }
}
