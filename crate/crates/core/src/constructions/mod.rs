//! Target graphs: signed Paley graphs, antitwinned doubles, the "+2"
//! extension, the regular clique families and a small gadget catalog.

mod catalog;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{Field, FieldError};
use crate::sgraph::{GraphError, Sign, SignedGraph};

pub use catalog::{build_gadget, GadgetId, UnknownGadget, SB_IN_TARGET6, SP5_IN_TARGET6};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("q = {0} is not congruent to 1 mod 4")]
    NotOneModFour(u64),
    #[error("{x} and {y} are not joined by a positive edge")]
    NotPositiveEdge { x: usize, y: usize },
    #[error("k = {k} is below the minimum {min}")]
    KTooSmall { k: usize, min: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A graph together with a human-readable name for every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledTarget {
    pub graph: SignedGraph,
    pub labels: Vec<String>,
}

impl LabeledTarget {
    pub fn new(graph: SignedGraph, labels: Vec<String>) -> LabeledTarget {
        debug_assert_eq!(graph.order(), labels.len());
        LabeledTarget { graph, labels }
    }

    /// Vertices labeled `0..n`.
    pub fn unlabeled(graph: SignedGraph) -> LabeledTarget {
        let labels = (0..graph.order()).map(|v| v.to_string()).collect();
        LabeledTarget { graph, labels }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Index of `label`; panics when absent. Meant for hard-coded tables.
    pub fn vertex(&self, label: &str) -> usize {
        self.index_of(label).unwrap_or_else(|| panic!("no vertex labeled {:?}", label))
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }
}

fn paley_field(q: u64) -> Result<Field, ConstructionError> {
    let field = Field::new(q)?;
    if q % 4 != 1 {
        return Err(ConstructionError::NotOneModFour(q));
    }
    Ok(field)
}

/// Signed Paley graph: complete on GF(q), `uv` positive iff `u - v` is a square.
pub fn build_sp(q: u64) -> Result<LabeledTarget, ConstructionError> {
    let field = paley_field(q)?;
    let n = field.order();
    let elems: Vec<_> = field.elements().collect();
    let g = SignedGraph::complete_with(n, |u, v| {
        if field.is_square(&field.sub(&elems[u], &elems[v])) {
            Sign::Pos
        } else {
            Sign::Neg
        }
    })
    .with_name(format!("SP_{}", q));
    let labels = elems.iter().map(|e| e.to_string()).collect();
    Ok(LabeledTarget::new(g, labels))
}

/// Antitwinned double. Copy `+1` of vertex `v` is `v`, copy `-1` is `v + n`;
/// `u^i v^j` has sign `i * j * s(uv)`.
pub fn build_rho(t: &LabeledTarget) -> LabeledTarget {
    let g = &t.graph;
    let n = g.order();
    let mut edges = Vec::with_capacity(4 * g.edge_count());
    for (u, v, s) in g.edges() {
        edges.push((u, v, s));
        edges.push((u + n, v + n, s));
        edges.push((u, v + n, -s));
        edges.push((u + n, v, -s));
    }
    let mut rho = SignedGraph::from_edges(2 * n, edges).expect("doubling preserves simplicity");
    if let Some(name) = g.name() {
        rho = rho.with_name(format!("rho({})", name));
    }
    let labels =
        t.labels.iter().map(|l| format!("{}^+", l)).chain(t.labels.iter().map(|l| format!("{}^-", l))).collect();
    LabeledTarget::new(rho, labels)
}

/// `SP_q` plus a vertex `inf` joined positively to everything.
pub fn build_sp_plus(q: u64) -> Result<LabeledTarget, ConstructionError> {
    let sp = build_sp(q)?;
    let mut g = sp.graph.clone();
    let inf = g.add_vertex();
    for v in 0..inf {
        g.insert_edge(inf, v, Sign::Pos)?;
    }
    let mut labels = sp.labels;
    labels.push("inf".to_string());
    Ok(LabeledTarget::new(g.with_name(format!("SP_{}^+", q)), labels))
}

/// Tromp-Paley graph `rho(SP_q^+)`, on `2(q + 1)` vertices.
pub fn build_tr(q: u64) -> Result<LabeledTarget, ConstructionError> {
    let mut tr = build_rho(&build_sp_plus(q)?);
    tr.graph = tr.graph.with_name(format!("TR(SP_{})", q));
    Ok(tr)
}

/// Add `x'` and `y'` copying the neighborhoods of the positive edge `xy`,
/// with `x'y'` negative, `xx'` negative and `yy'` positive.
pub fn build_plus2(t: &LabeledTarget, x: usize, y: usize) -> Result<LabeledTarget, ConstructionError> {
    let g = &t.graph;
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if g.sign(x, y) != Some(Sign::Pos) {
        return Err(ConstructionError::NotPositiveEdge { x, y });
    }
    let mut out = g.clone();
    let xp = out.add_vertex();
    let yp = out.add_vertex();
    for &(w, s) in g.neighbors(x) {
        out.insert_edge(xp, w, s)?;
    }
    for &(w, s) in g.neighbors(y) {
        out.insert_edge(yp, w, s)?;
    }
    out.insert_edge(xp, yp, Sign::Neg)?;
    out.insert_edge(x, xp, Sign::Neg)?;
    out.insert_edge(y, yp, Sign::Pos)?;
    if let Some(name) = g.name() {
        out = out.with_name(format!("{}*", name));
    }
    let mut labels = t.labels.clone();
    labels.push(format!("{}'", t.labels[x]));
    labels.push(format!("{}'", t.labels[y]));
    Ok(LabeledTarget::new(out, labels))
}

/// Insert every rule-generated edge, checking that both endpoints agree on
/// the sign.
fn circulant(n: usize, rule: impl Fn(usize) -> Vec<(usize, Sign)>) -> SignedGraph {
    let mut signs: Vec<Vec<Option<Sign>>> = vec![vec![None; n]; n];
    for u in 0..n {
        for (v, s) in rule(u) {
            let v = v % n;
            match signs[u][v] {
                Some(prev) => assert_eq!(prev, s, "rules disagree on {}-{}", u, v),
                None => {
                    signs[u][v] = Some(s);
                }
            }
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            match (signs[u][v], signs[v][u]) {
                (Some(a), Some(b)) => {
                    assert_eq!(a, b, "endpoints disagree on the sign of {}-{}", u, v);
                    edges.push((u, v, a));
                }
                (None, None) => {}
                _ => panic!("edge {}-{} generated from one endpoint only", u, v),
            }
        }
    }
    SignedGraph::from_edges(n, edges).expect("circulant rules give a simple graph")
}

/// k-regular 2-edge-colored clique on `4(k - 1)` vertices.
pub fn build_2ec_clique(k: usize) -> Result<SignedGraph, ConstructionError> {
    if k < 3 {
        return Err(ConstructionError::KTooSmall { k, min: 3 });
    }
    let n = 4 * (k - 1);
    let g = circulant(n, |u| {
        // the antipodal edge is positive between even vertices, negative between odd ones
        let mut out = vec![(u + 2 * (k - 1), if u % 2 == 0 { Sign::Pos } else { Sign::Neg })];
        if u % 2 == 0 {
            out.extend((0..=k - 3).map(|i| (u + 2 * i + 1, Sign::Pos)));
            out.push((u + n - 1, Sign::Neg));
        } else {
            out.extend((0..=k - 3).map(|i| (u + n - (2 * i + 1), Sign::Pos)));
            out.push((u + 1, Sign::Neg));
        }
        out
    });
    Ok(g.with_name(format!("clique2ec_{}", k)))
}

/// k-regular signed clique on `2(k + 1)` vertices.
pub fn build_signed_clique(k: usize) -> Result<SignedGraph, ConstructionError> {
    if k < 4 {
        return Err(ConstructionError::KTooSmall { k, min: 4 });
    }
    let n = 2 * (k + 1);
    let g = circulant(n, |u| {
        let flip = if u % 2 == 0 { Sign::Pos } else { Sign::Neg };
        let mut out = vec![(u + 1, flip), (u + n - 1, -flip)];
        out.extend((0..=k - 3).map(|i| (u + 4 + 2 * i, flip)));
        out
    });
    Ok(g.with_name(format!("cliquesigned_{}", k)))
}
