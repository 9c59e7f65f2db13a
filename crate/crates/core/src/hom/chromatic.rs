//! Exact chromatic numbers by trying every complete target of each order.
//!
//! Adding edges to a target never loses homomorphisms, so complete targets
//! suffice; they are enumerated up to isomorphism (and switching, for
//! signed graphs). A failed order is recorded with its candidate count as
//! a certificate for the lower bound.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{find_hom, Homomorphism, Mode};
use crate::enumerate::{complete_targets_2ec, complete_targets_signed};
use crate::sgraph::SignedGraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderLog {
    pub order: usize,
    /// Number of non-equivalent complete targets tried.
    pub candidates: usize,
    pub all_failed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChromaticResult {
    pub value: usize,
    pub target: SignedGraph,
    pub homomorphism: Homomorphism,
    /// One entry per order below `value` (from 1), each exhaustively failed.
    pub per_order_log: Vec<OrderLog>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("no target on at most {max_order} vertices; the chromatic number exceeds {max_order}")]
pub struct ChromaticError {
    pub max_order: usize,
    pub per_order_log: Vec<OrderLog>,
}

fn chromatic(g: &SignedGraph, max_order: usize, mode: Mode) -> Result<ChromaticResult, ChromaticError> {
    let mut log = Vec::new();
    let start = if g.order() == 0 { 0 } else { 1 };
    for order in start..=max_order {
        let targets = match mode {
            Mode::TwoEdgeColored => complete_targets_2ec(order),
            Mode::Signed => complete_targets_signed(order),
        };
        // first success in enumeration order, independent of scheduling
        let hit = targets.par_iter().position_first(|t| find_hom(g, t, mode).is_some());
        match hit {
            Some(i) => {
                let target = targets[i].clone();
                let homomorphism = find_hom(g, &target, mode).expect("found before");
                return Ok(ChromaticResult { value: order, target, homomorphism, per_order_log: log });
            }
            None => log.push(OrderLog { order, candidates: targets.len(), all_failed: true }),
        }
    }
    Err(ChromaticError { max_order, per_order_log: log })
}

/// Smallest order of a 2-edge-colored target for `g`, searching up to `max_order`.
pub fn chromatic_2ec(g: &SignedGraph, max_order: usize) -> Result<ChromaticResult, ChromaticError> {
    chromatic(g, max_order, Mode::TwoEdgeColored)
}

/// Smallest order of a signed target for `g`, searching up to `max_order`.
pub fn chromatic_signed(g: &SignedGraph, max_order: usize) -> Result<ChromaticResult, ChromaticError> {
    chromatic(g, max_order, Mode::Signed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::verify_hom;
    use crate::sgraph::Sign::{Neg, Pos};

    #[test]
    fn small_values() {
        assert_eq!(chromatic_2ec(&SignedGraph::empty(0), 3).unwrap().value, 0);
        assert_eq!(chromatic_2ec(&SignedGraph::empty(4), 3).unwrap().value, 1);
        assert_eq!(chromatic_signed(&SignedGraph::empty(1), 3).unwrap().value, 1);
        let edge = SignedGraph::path(&[Pos]);
        assert_eq!(chromatic_2ec(&edge, 3).unwrap().value, 2);
        let two = edge.disjoint_union(&SignedGraph::path(&[Neg]));
        let r = chromatic_2ec(&two, 4).unwrap();
        assert_eq!(r.value, 3);
        assert_eq!(r.per_order_log.len(), 2);
        assert!(verify_hom(&two, &r.target, &r.homomorphism).unwrap());
    }

    #[test]
    fn signed_values() {
        assert_eq!(chromatic_signed(&SignedGraph::path(&[Neg, Pos, Neg]), 4).unwrap().value, 2);
        let r = chromatic_signed(&SignedGraph::cycle(&[Neg, Pos, Pos, Pos]), 5).unwrap();
        assert_eq!(r.value, 4);
        assert!(verify_hom(&SignedGraph::cycle(&[Neg, Pos, Pos, Pos]), &r.target, &r.homomorphism).unwrap());
    }

    #[test]
    fn bound_too_small() {
        let e = chromatic_2ec(&SignedGraph::cycle(&[Pos; 3]), 2).unwrap_err();
        assert_eq!(e.per_order_log.len(), 2);
    }
}
