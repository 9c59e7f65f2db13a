//! Homomorphisms of 2-edge-colored and signed graphs: verification, exact
//! search, chromatic numbers and the constructive colorings for small
//! maximum degree.

mod chromatic;
mod degenerate;
mod extension;
mod maxdeg2;
mod maxdeg3;
pub(crate) mod search;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::{build_rho, LabeledTarget};
use crate::sgraph::{switch, GraphError, SignedGraph, SwitchSet};

pub use chromatic::{chromatic_2ec, chromatic_signed, ChromaticError, ChromaticResult, OrderLog};
pub use degenerate::{degeneracy_order, greedy_degenerate_color, DegeneracyOrder};
pub use extension::{extension_tables, ExtensionEntry, ExtensionTable, TableCheck};
pub use maxdeg2::{color_maxdeg2, MaxDeg2Coloring, MaxDeg2Target};
pub use maxdeg3::{color_maxdeg3, find_k4s, K4sOccurrence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    #[serde(rename = "2ec")]
    TwoEdgeColored,
    #[serde(rename = "signed")]
    Signed,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::TwoEdgeColored => "2ec",
            Mode::Signed => "signed",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "2ec" => Ok(Mode::TwoEdgeColored),
            "signed" => Ok(Mode::Signed),
            other => Err(format!("unknown mode {:?}, expected 2ec or signed", other)),
        }
    }
}

/// A vertex map `g -> h`; in signed mode `switch_witness` is the set of
/// source vertices to switch first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Homomorphism {
    pub mode: Mode,
    pub map: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub switch_witness: Option<SwitchSet>,
}

impl Homomorphism {
    pub fn two_edge_colored(map: Vec<usize>) -> Homomorphism {
        Homomorphism { mode: Mode::TwoEdgeColored, map, switch_witness: None }
    }

    pub fn signed(map: Vec<usize>, witness: SwitchSet) -> Homomorphism {
        Homomorphism { mode: Mode::Signed, map, switch_witness: Some(witness) }
    }

    /// Number of distinct target vertices used.
    pub fn colors_used(&self) -> usize {
        let mut m = self.map.clone();
        m.sort_unstable();
        m.dedup();
        m.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error("map has length {got}, source has {expected} vertices")]
    MapLength { expected: usize, got: usize },
    #[error("vertex {vertex} is mapped to {image}, target has {n} vertices")]
    ImageOutOfRange { vertex: usize, image: usize, n: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("maximum degree {found} exceeds {limit}")]
    DegreeTooLarge { limit: usize, found: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// Re-check a homomorphism without searching.
pub fn verify_hom(g: &SignedGraph, h: &SignedGraph, hom: &Homomorphism) -> Result<bool, HomError> {
    if hom.map.len() != g.order() {
        return Err(HomError::MapLength { expected: g.order(), got: hom.map.len() });
    }
    if let Some((vertex, &image)) = hom.map.iter().enumerate().find(|(_, &c)| c >= h.order()) {
        return Err(HomError::ImageOutOfRange { vertex, image, n: h.order() });
    }
    let source = match (hom.mode, &hom.switch_witness) {
        (Mode::Signed, Some(w)) => switch(g, w)?,
        _ => g.clone(),
    };
    let ok = source.edges().all(|(u, v, s)| h.sign(hom.map[u], hom.map[v]) == Some(s));
    Ok(ok)
}

/// Exact 2-edge-colored homomorphism search; components are solved
/// independently.
pub fn find_hom_2ec(g: &SignedGraph, h: &SignedGraph) -> Option<Homomorphism> {
    find_hom_2ec_restricted(g, h, &|_, _| true)
}

/// As [`find_hom_2ec`], with `allowed(v, c)` limiting the image of `v`.
pub fn find_hom_2ec_restricted(
    g: &SignedGraph,
    h: &SignedGraph,
    allowed: &dyn Fn(usize, usize) -> bool,
) -> Option<Homomorphism> {
    let mut map = vec![0usize; g.order()];
    for comp in g.components() {
        let sub = g.induced(&comp);
        let local = |v: usize, c: usize| allowed(comp[v], c);
        let m = search::first_solution(&sub, h, false, Some(&local))?;
        for (i, &v) in comp.iter().enumerate() {
            map[v] = m[i];
        }
    }
    Some(Homomorphism::two_edge_colored(map))
}

/// Injective sign-preserving map of `g` into `h` (a subgraph embedding).
pub fn find_embedding(g: &SignedGraph, h: &SignedGraph) -> Option<Vec<usize>> {
    if g.order() > h.order() {
        return None;
    }
    search::first_solution(g, h, true, None)
}

/// Signed homomorphism search through the antitwinned double of `h`:
/// vertices landing in the `-1` copy form the switch witness.
pub fn find_hom_signed(g: &SignedGraph, h: &SignedGraph) -> Option<Homomorphism> {
    let rho = build_rho(&LabeledTarget::unlabeled(h.clone()));
    let n = h.order();
    let hom = find_hom_2ec(g, &rho.graph)?;
    let witness = SwitchSet::new((0..g.order()).filter(|&v| hom.map[v] >= n));
    let map = hom.map.iter().map(|&c| c % n).collect();
    Some(Homomorphism::signed(map, witness))
}

/// Dispatch on `mode`.
pub fn find_hom(g: &SignedGraph, h: &SignedGraph, mode: Mode) -> Option<Homomorphism> {
    match mode {
        Mode::TwoEdgeColored => find_hom_2ec(g, h),
        Mode::Signed => find_hom_signed(g, h),
    }
}
