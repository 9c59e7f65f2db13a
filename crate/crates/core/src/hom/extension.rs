//! Stored colorings of the subdivided-`K_4` gadgets into the 11-vertex
//! targets, keyed by the color of the attach vertex.
//!
//! An entry lists the admissible colors of the attach vertex `s` and one
//! coloring of `a, b, c, d`. A table is *valid* when every entry is a
//! homomorphism of the gadget, and *covers* a sign `σ` when every vertex of
//! `SP_9` is a `σ`-neighbor of some admissible attach color, so that any
//! outside neighbor color can be met.

use serde::{Deserialize, Serialize};

use crate::constructions::{build_gadget, build_sp, GadgetId, LabeledTarget};
use crate::sgraph::Sign;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionEntry {
    pub attach: Vec<String>,
    /// Colors of `a, b, c, d`.
    pub rest: [String; 4],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionTable {
    pub name: String,
    pub gadget: GadgetId,
    pub target: GadgetId,
    /// Signs of the outside edge at `s` the table claims to handle.
    pub attach_signs: Vec<Sign>,
    pub entries: Vec<ExtensionEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableCheck {
    pub name: String,
    pub valid: bool,
    /// `(entry, attach color, gadget edge)` for each broken edge.
    pub broken_edges: Vec<(usize, String, String)>,
    pub covered: bool,
    /// `(sign, SP_9 vertex)` pairs not reachable from any attach color.
    pub uncovered: Vec<(Sign, String)>,
}

fn entry(attach: &[&str], rest: [&str; 4]) -> ExtensionEntry {
    ExtensionEntry { attach: attach.iter().map(|s| s.to_string()).collect(), rest: rest.map(str::to_string) }
}

/// The three published tables, transcribed as drawn except for one
/// evident typo in the first (see `docs/gadgets.md`).
pub fn extension_tables() -> Vec<ExtensionTable> {
    vec![
        ExtensionTable {
            name: "K4S_PLUS->SP9_STAR".into(),
            gadget: GadgetId::K4sPlus,
            target: GadgetId::Sp9Star,
            attach_signs: vec![Sign::Pos],
            entries: vec![
                entry(&["x"], ["1", "x+1", "1'", "2x+1"]),
                entry(&["x+2"], ["1", "x+1", "1'", "2x+1"]),
                entry(&["2x"], ["1", "2x+1", "1'", "x+1"]),
                entry(&["x+1"], ["2", "1", "0", "1'"]),
            ],
        },
        ExtensionTable {
            name: "K4S_PLUS->SP9_DAGGER".into(),
            gadget: GadgetId::K4sPlus,
            target: GadgetId::Sp9Dagger,
            attach_signs: vec![Sign::Pos, Sign::Neg],
            entries: vec![
                entry(&["x", "2x"], ["1", "0", "2", "z"]),
                entry(&["x+1", "2x+1"], ["0", "1", "2", "z"]),
                entry(&["x+2"], ["0", "2", "1", "z"]),
            ],
        },
        ExtensionTable {
            name: "K4S_MINUS->SP9_DAGGER".into(),
            gadget: GadgetId::K4sMinus,
            target: GadgetId::Sp9Dagger,
            attach_signs: vec![Sign::Pos, Sign::Neg],
            entries: vec![
                entry(&["0", "x"], ["2x", "2x+1", "2x+2", "z"]),
                entry(&["1", "x+1"], ["2x+1", "2x", "2x+2", "z"]),
                entry(&["x+2"], ["2x+2", "2x", "2x+1", "z"]),
            ],
        },
    ]
}

impl ExtensionTable {
    /// Gadget colorings as target vertex indices, one per admissible attach color.
    pub fn colorings(&self) -> Vec<(usize, [usize; 5])> {
        let target = build_gadget(self.target);
        let mut out = Vec::new();
        for (i, e) in self.entries.iter().enumerate() {
            let rest = e.rest.clone().map(|l| target.vertex(&l));
            for a in &e.attach {
                out.push((i, [target.vertex(a), rest[0], rest[1], rest[2], rest[3]]));
            }
        }
        out
    }

    pub fn check(&self) -> TableCheck {
        let gadget = build_gadget(self.gadget);
        let target: LabeledTarget = build_gadget(self.target);
        let mut broken_edges = Vec::new();
        for (i, map) in self.colorings() {
            for (u, v, s) in gadget.graph.edges() {
                if target.graph.sign(map[u], map[v]) != Some(s) {
                    broken_edges.push((
                        i,
                        target.label(map[0]).to_string(),
                        format!("{}{} ({})", gadget.label(u), gadget.label(v), s),
                    ));
                }
            }
        }
        let sp9 = build_sp(9).expect("9 is a Paley order");
        let mut uncovered = Vec::new();
        for &sigma in &self.attach_signs {
            for y in 0..sp9.graph.order() {
                let y_in_target = target.vertex(sp9.label(y));
                let reached = self.entries.iter().flat_map(|e| &e.attach).any(|a| {
                    let c = target.vertex(a);
                    target.graph.sign(c, y_in_target) == Some(sigma)
                });
                if !reached {
                    uncovered.push((sigma, sp9.label(y).to_string()));
                }
            }
        }
        TableCheck {
            name: self.name.clone(),
            valid: broken_edges.is_empty(),
            broken_edges,
            covered: uncovered.is_empty(),
            uncovered,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plus_tables_hold() {
        let tables = extension_tables();
        for t in &tables[..2] {
            let c = t.check();
            assert!(c.valid, "{:?}", c);
            assert!(c.covered, "{:?}", c);
        }
    }

    #[test]
    fn minus_dagger_table_is_broken() {
        let c = extension_tables()[2].check();
        assert!(!c.valid);
        assert!(!c.broken_edges.is_empty());
    }
}
