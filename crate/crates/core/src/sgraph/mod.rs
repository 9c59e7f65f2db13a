//! Signed graph data model.
//!
//! A [`SignedGraph`] is a simple graph on dense vertex indices `0..n` where
//! every edge carries a [`Sign`]. The same object is used for both the
//! 2-edge-colored and the signed semantics; the two only differ in how
//! homomorphisms are defined (see [`crate::hom`]).

mod io;
mod switching;

pub use io::{export_dot, export_dot_labeled, read_sg, write_sg, ParseError};
pub use switching::{canonical_switch_form, is_balanced_cycle, switch, switch_equivalent, CanonicalSwitchForm};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Edge sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Pos,
    #[serde(rename = "-")]
    Neg,
}

impl Sign {
    pub fn from_i8(v: i8) -> Option<Sign> {
        match v {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn is_pos(self) -> bool {
        self == Sign::Pos
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }

    /// Product of two signs.
    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        self.times(rhs)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),
}

/// A simple graph whose edges carry a sign.
///
/// Neighbor lists are kept sorted by vertex index, which makes every
/// traversal order in the crate deterministic.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SignedGraph {
    n: usize,
    adj: Vec<Vec<(usize, Sign)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

impl PartialEq for SignedGraph {
    // names are metadata
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for SignedGraph {}

impl SignedGraph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> SignedGraph {
        SignedGraph { n, adj: vec![Vec::new(); n], name: None }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<SignedGraph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        let mut g = SignedGraph::empty(n);
        for (u, v, s) in edges {
            g.insert_edge(u, v, s)?;
        }
        Ok(g)
    }

    /// Complete graph from a closure giving the sign of each pair `u < v`.
    pub fn complete_with<F: FnMut(usize, usize) -> Sign>(n: usize, mut sign: F) -> SignedGraph {
        let mut g = SignedGraph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.push_edge_unchecked(u, v, sign(u, v));
            }
        }
        g
    }

    /// Cycle `0-1-...-(L-1)-0` where edge `{i, i+1 mod L}` has sign `signs[i]`.
    pub fn cycle(signs: &[Sign]) -> SignedGraph {
        let len = signs.len();
        assert!(len >= 3, "a cycle needs at least 3 vertices");
        let mut g = SignedGraph::empty(len);
        for (i, &s) in signs.iter().enumerate() {
            g.insert_edge(i, (i + 1) % len, s).expect("cycle edges are distinct");
        }
        g
    }

    /// Path `0-1-...-L` where edge `{i, i+1}` has sign `signs[i]`.
    pub fn path(signs: &[Sign]) -> SignedGraph {
        let mut g = SignedGraph::empty(signs.len() + 1);
        for (i, &s) in signs.iter().enumerate() {
            g.push_edge_unchecked(i, i + 1, s);
        }
        g
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize, s: Sign) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if self.sign(u, v).is_some() {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.push_edge_unchecked(u, v, s);
        Ok(())
    }

    fn push_edge_unchecked(&mut self, u: usize, v: usize, s: Sign) {
        let pos = self.adj[u].partition_point(|&(w, _)| w < v);
        self.adj[u].insert(pos, (v, s));
        let pos = self.adj[v].partition_point(|&(w, _)| w < u);
        self.adj[v].insert(pos, (u, s));
    }

    pub(crate) fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.n += 1;
        self.n - 1
    }

    pub fn with_name(mut self, name: impl Into<String>) -> SignedGraph {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Sign of `{u, v}`, or `None` when the pair is not an edge.
    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        let row = self.adj.get(u)?;
        row.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| row[i].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.sign(u, v).is_some()
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, Sign)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn signed_degree(&self, v: usize) -> (usize, usize) {
        let pos = self.adj[v].iter().filter(|(_, s)| s.is_pos()).count();
        (pos, self.adj[v].len() - pos)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// All edges as `(u, v, sign)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Sign)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&&(v, _)| u < v).map(move |&(v, s)| (u, v, s)))
    }

    pub fn is_complete(&self) -> bool {
        self.adj.iter().all(|row| row.len() + 1 == self.n)
    }

    /// Same underlying graph with every sign reversed.
    pub fn negated(&self) -> SignedGraph {
        SignedGraph {
            n: self.n,
            adj: self.adj.iter().map(|row| row.iter().map(|&(v, s)| (v, -s)).collect()).collect(),
            name: None,
        }
    }

    /// Underlying edge set, signs dropped.
    pub fn underlying_edges(&self) -> Vec<(usize, usize)> {
        self.edges().map(|(u, v, _)| (u, v)).collect()
    }

    pub fn same_underlying(&self, other: &SignedGraph) -> bool {
        self.n == other.n
            && self
                .adj
                .iter()
                .zip(&other.adj)
                .all(|(a, b)| a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.0 == y.0))
    }

    /// Induced subgraph on `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> SignedGraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = SignedGraph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &(w, s) in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    g.push_edge_unchecked(i, j, s);
                }
            }
        }
        g
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> SignedGraph {
        assert_eq!(perm.len(), self.n);
        let mut g = SignedGraph::empty(self.n);
        for (u, v, s) in self.edges() {
            g.push_edge_unchecked(perm[u], perm[v], s);
        }
        g
    }

    /// Graph without the listed edges.
    pub fn without_edges(&self, removed: &[(usize, usize)]) -> SignedGraph {
        let mut g = SignedGraph::empty(self.n);
        for (u, v, s) in self.edges() {
            if !removed.iter().any(|&(a, b)| (a == u && b == v) || (a == v && b == u)) {
                g.push_edge_unchecked(u, v, s);
            }
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &SignedGraph) -> SignedGraph {
        let shift = self.n;
        let mut g = self.clone();
        g.name = None;
        for _ in 0..other.n {
            g.add_vertex();
        }
        for (u, v, s) in other.edges() {
            g.push_edge_unchecked(u + shift, v + shift, s);
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for &(w, _) in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }
}

/// A set of vertices to switch.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SwitchSet(Vec<usize>);

impl SwitchSet {
    pub fn new<I: IntoIterator<Item = usize>>(members: I) -> SwitchSet {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        SwitchSet(v)
    }

    pub fn empty() -> SwitchSet {
        SwitchSet(Vec::new())
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symmetric_difference(&self, other: &SwitchSet) -> SwitchSet {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            match (self.0.get(i), other.0.get(j)) {
                (Some(a), Some(b)) if a == b => {
                    i += 1;
                    j += 1;
                }
                (Some(a), Some(b)) if a < b => {
                    out.push(*a);
                    i += 1;
                }
                (Some(_), Some(b)) => {
                    out.push(*b);
                    j += 1;
                }
                (Some(a), None) => {
                    out.push(*a);
                    i += 1;
                }
                (None, Some(b)) => {
                    out.push(*b);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        SwitchSet(out)
    }

    /// Membership as a boolean mask over `0..n`.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &v in &self.0 {
            if v < n {
                m[v] = true;
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Neg, Pos};

    #[test]
    fn sign_negation_is_involution() {
        for s in [Pos, Neg] {
            assert_eq!(-(-s), s);
            assert_ne!(-s, s);
        }
        assert_eq!(Neg * Neg, Pos);
        assert_eq!(Sign::from_i8(-1), Some(Neg));
        assert_eq!(Sign::from_i8(0), None);
    }

    #[test]
    fn rejects_loops_duplicates_and_range() {
        assert_eq!(SignedGraph::from_edges(3, [(1, 1, Pos)]), Err(GraphError::Loop(1)));
        assert_eq!(SignedGraph::from_edges(3, [(0, 1, Pos), (1, 0, Neg)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(SignedGraph::from_edges(3, [(0, 3, Pos)]), Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 }));
    }

    #[test]
    fn adjacency_is_symmetric() {
        let g = SignedGraph::from_edges(4, [(2, 0, Neg), (0, 1, Pos), (3, 2, Pos)]).unwrap();
        for (u, v, s) in g.edges() {
            assert_eq!(g.sign(v, u), Some(s));
        }
        assert_eq!(g.neighbors(0), &[(1, Pos), (2, Neg)]);
        assert_eq!(g.signed_degree(2), (1, 1));
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn components_and_union() {
        let a = SignedGraph::path(&[Pos]);
        let b = SignedGraph::path(&[Neg, Neg]);
        let u = a.disjoint_union(&b);
        assert_eq!(u.components(), vec![vec![0, 1], vec![2, 3, 4]]);
        assert!(!u.is_connected());
        assert_eq!(u.sign(3, 4), Some(Neg));
    }

    #[test]
    fn symmetric_difference_of_switch_sets() {
        let a = SwitchSet::new([0, 2, 5]);
        let b = SwitchSet::new([2, 3]);
        assert_eq!(a.symmetric_difference(&b), SwitchSet::new([0, 3, 5]));
    }
}
