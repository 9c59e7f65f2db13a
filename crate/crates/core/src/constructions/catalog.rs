//! Hard-coded small graphs, transcribed from drawings with the convention
//! solid = positive, dashed = negative. `docs/gadgets.md` records the
//! transcription.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{build_plus2, build_sp, LabeledTarget};
use crate::sgraph::{Sign, SignedGraph};

use Sign::{Neg, Pos};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum GadgetId {
    /// Signed butterfly: a positive and a negative triangle sharing vertex 0.
    Sb,
    /// Alternating 4-cycle inside `SP_5` on `{1, 2, 3, 4}`; colors every path.
    Path4,
    /// The only 5-vertex completion of `SB` containing an alternating `C_4`.
    Candidate5,
    /// `K_6` minus an edge, containing both `SP_5` and `SB`.
    Target6,
    /// Four-vertex target for signed graphs of maximum degree 2.
    SignedT,
    K4sPlus,
    K4sMinus,
    /// Cubic signed clique on six vertices.
    Clique6,
    Sp9Star,
    Sp9Dagger,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown gadget {0:?}")]
pub struct UnknownGadget(pub String);

impl GadgetId {
    pub const ALL: [GadgetId; 10] = [
        GadgetId::Sb,
        GadgetId::Path4,
        GadgetId::Candidate5,
        GadgetId::Target6,
        GadgetId::SignedT,
        GadgetId::K4sPlus,
        GadgetId::K4sMinus,
        GadgetId::Clique6,
        GadgetId::Sp9Star,
        GadgetId::Sp9Dagger,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GadgetId::Sb => "SB",
            GadgetId::Path4 => "PATH4",
            GadgetId::Candidate5 => "CANDIDATE5",
            GadgetId::Target6 => "TARGET6",
            GadgetId::SignedT => "SIGNED_T",
            GadgetId::K4sPlus => "K4S_PLUS",
            GadgetId::K4sMinus => "K4S_MINUS",
            GadgetId::Clique6 => "CLIQUE6",
            GadgetId::Sp9Star => "SP9_STAR",
            GadgetId::Sp9Dagger => "SP9_DAGGER",
        }
    }
}

impl fmt::Display for GadgetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GadgetId {
    type Err = UnknownGadget;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let wanted = s.trim().to_ascii_uppercase().replace('-', "_");
        GadgetId::ALL.into_iter().find(|id| id.name() == wanted).ok_or_else(|| UnknownGadget(s.to_string()))
    }
}

/// `SP_5` vertex `i` sits at `TARGET6` vertex `SP5_IN_TARGET6[i]`.
pub const SP5_IN_TARGET6: [usize; 5] = [0, 2, 1, 5, 3];
/// `SB` vertex `i` sits at `TARGET6` vertex `SB_IN_TARGET6[i]`.
pub const SB_IN_TARGET6: [usize; 5] = [4, 0, 2, 1, 3];

fn graph(n: usize, pos: &[(usize, usize)], neg: &[(usize, usize)]) -> SignedGraph {
    let edges = pos.iter().map(|&(u, v)| (u, v, Pos)).chain(neg.iter().map(|&(u, v)| (u, v, Neg)));
    SignedGraph::from_edges(n, edges).expect("catalog graphs are simple")
}

fn labeled(g: SignedGraph, labels: &[&str]) -> LabeledTarget {
    LabeledTarget::new(g, labels.iter().map(|l| l.to_string()).collect())
}

/// Pattern vertices: `s` subdivides the edge `ab`; `c`, `d` complete the K_4.
fn k4s(polarity: Sign) -> SignedGraph {
    let p = polarity;
    let edges = [(0, 1, -p), (0, 2, p), (1, 3, p), (1, 4, p), (2, 3, p), (2, 4, p), (3, 4, p)];
    SignedGraph::from_edges(5, edges).expect("K4s is simple")
}

pub fn build_gadget(id: GadgetId) -> LabeledTarget {
    let target = match id {
        GadgetId::Sb => LabeledTarget::unlabeled(graph(5, &[(0, 1), (0, 2), (1, 2)], &[(0, 3), (0, 4), (3, 4)])),
        // labels name the SP_5 vertices
        GadgetId::Path4 => labeled(graph(4, &[(0, 1), (2, 3)], &[(0, 2), (1, 3)]), &["1", "2", "3", "4"]),
        GadgetId::Candidate5 => labeled(
            graph(5, &[(0, 4), (0, 1), (4, 1), (4, 2), (1, 3)], &[(0, 3), (0, 2), (2, 3), (4, 3), (2, 1)]),
            &["1", "2", "3", "4", "5"],
        ),
        GadgetId::Target6 => LabeledTarget::unlabeled(graph(
            6,
            &[(4, 0), (4, 2), (0, 2), (0, 3), (2, 1), (3, 5), (1, 5)],
            &[(4, 3), (4, 1), (0, 1), (2, 3), (0, 5), (2, 5), (1, 3)],
        )),
        GadgetId::SignedT => labeled(graph(4, &[(0, 1), (1, 2), (0, 3), (0, 2)], &[(2, 3)]), &["1", "2", "3", "4"]),
        GadgetId::K4sPlus => labeled(k4s(Pos), &["s", "a", "b", "c", "d"]),
        GadgetId::K4sMinus => labeled(k4s(Neg), &["s", "a", "b", "c", "d"]),
        GadgetId::Clique6 => labeled(
            graph(6, &[(0, 4), (0, 5), (1, 3), (1, 5), (2, 3), (2, 4)], &[(0, 3), (1, 4), (2, 5)]),
            &["1", "2", "3", "4", "5", "6"],
        ),
        GadgetId::Sp9Star => {
            let sp9 = build_sp(9).expect("9 is a prime power congruent to 1 mod 4");
            build_plus2(&sp9, 0, 1).expect("0 and 1 differ by a square")
        }
        GadgetId::Sp9Dagger => {
            let sp9 = build_sp(9).expect("9 is a prime power congruent to 1 mod 4");
            let mut g = sp9.graph.clone();
            let z = g.add_vertex();
            for label in ["0", "1", "2"] {
                g.insert_edge(z, sp9.vertex(label), Pos).expect("fresh vertex");
            }
            for label in ["2x", "2x+1", "2x+2"] {
                g.insert_edge(z, sp9.vertex(label), Neg).expect("fresh vertex");
            }
            let mut labels = sp9.labels;
            labels.push("z".to_string());
            LabeledTarget::new(g, labels)
        }
    };
    let LabeledTarget { graph, labels } = target;
    LabeledTarget::new(graph.with_name(id.name()), labels)
}
