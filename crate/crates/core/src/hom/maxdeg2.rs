//! Search-free colorings of graphs with maximum degree 2.
//!
//! Each component is a path or a cycle and is colored by a fixed rule:
//! paths walk around an alternating 4-cycle; cycles with a vertex seeing
//! one sign twice are anchored at `0` of `SP_5`; alternating cycles follow
//! a period-4 pattern; monochromatic odd cycles use a triangle of `SB`.
//! Signed graphs are first switched so that at most one edge is negative.

use serde::{Deserialize, Serialize};

use super::{HomError, Homomorphism, Mode};
use crate::constructions::{build_gadget, build_sp, GadgetId, SB_IN_TARGET6, SP5_IN_TARGET6};
use crate::sgraph::{Sign, SignedGraph, SwitchSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum MaxDeg2Target {
    Sp5,
    Sb,
    Target6,
    SignedT,
}

impl MaxDeg2Target {
    pub fn graph(self) -> SignedGraph {
        match self {
            MaxDeg2Target::Sp5 => build_sp(5).expect("5 is a Paley order").graph,
            MaxDeg2Target::Sb => build_gadget(GadgetId::Sb).graph,
            MaxDeg2Target::Target6 => build_gadget(GadgetId::Target6).graph,
            MaxDeg2Target::SignedT => build_gadget(GadgetId::SignedT).graph,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxDeg2Coloring {
    pub hom: Homomorphism,
    pub target: MaxDeg2Target,
}

/// Alternating 4-cycle `PATH4` inside `SP_5`.
const PATH4_IN_SP5: [usize; 4] = [1, 2, 4, 0];

/// A component walked in order; `closed` when the last vertex is adjacent
/// to the first.
struct Walk {
    vertices: Vec<usize>,
    /// `signs[i]` is the sign of `vertices[i] vertices[i+1]`, cyclically.
    signs: Vec<Sign>,
    closed: bool,
}

fn walk(g: &SignedGraph, comp: &[usize]) -> Walk {
    let start = comp.iter().copied().find(|&v| g.degree(v) < 2).unwrap_or(comp[0]);
    let mut vertices = vec![start];
    let mut signs = Vec::new();
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g.neighbors(cur).iter().find(|&&(w, _)| w != prev && !(w == start && vertices.len() < 3));
        match next {
            Some(&(w, s)) if w == start => {
                signs.push(s);
                return Walk { vertices, signs, closed: true };
            }
            Some(&(w, s)) => {
                signs.push(s);
                vertices.push(w);
                prev = cur;
                cur = w;
            }
            None => return Walk { vertices, signs, closed: false },
        }
    }
}

fn rotated(w: &Walk, by: usize) -> (Vec<usize>, Vec<Sign>) {
    let l = w.vertices.len();
    ((0..l).map(|i| w.vertices[(i + by) % l]).collect(), (0..l).map(|i| w.signs[(i + by) % l]).collect())
}

/// Colors of a path in `SP_5` following the edge signs.
fn color_path_sp5(signs: &[Sign], sp5: &SignedGraph, path4: &SignedGraph) -> Vec<usize> {
    let mut c = 0;
    let mut out = vec![PATH4_IN_SP5[c]];
    for &s in signs {
        c = path4.neighbors(c).iter().find(|e| e.1 == s).expect("both signs at every vertex").0;
        out.push(PATH4_IN_SP5[c]);
    }
    debug_assert!(out.windows(2).zip(signs).all(|(p, &s)| sp5.sign(p[0], p[1]) == Some(s)));
    out
}

/// Cycle whose vertex 0 sees sign `signs[0]` on both sides: color it 0 and
/// fill the rest by dynamic programming along the cycle.
fn color_anchored_cycle(signs: &[Sign], sp5: &SignedGraph) -> Option<Vec<usize>> {
    let l = signs.len();
    let s = signs[0];
    let allowed_end = |c: usize| sp5.sign(0, c) == Some(s);
    // reach[i][c]: predecessor color when vertex i gets color c
    let mut reach = vec![[None::<usize>; 5]; l];
    for c in 0..5 {
        if allowed_end(c) {
            reach[1][c] = Some(0);
        }
    }
    for i in 2..l {
        for c in 0..5 {
            reach[i][c] = (0..5).find(|&p| reach[i - 1][p].is_some() && sp5.sign(p, c) == Some(signs[i - 1]));
        }
    }
    let mut c = (0..5).find(|&c| reach[l - 1][c].is_some() && allowed_end(c))?;
    let mut out = vec![0; l];
    for i in (1..l).rev() {
        out[i] = c;
        c = reach[i][c].expect("reachable");
    }
    Some(out)
}

/// Alternating cycle with a negative first edge.
fn alternating_pattern(l: usize) -> Vec<usize> {
    (0..l)
        .map(|i| match (i, i % 4) {
            (0, _) => 0,
            (1, _) => 2,
            (_, 2) => 3,
            (_, 3) => 1,
            (_, 0) => 2,
            _ => 4,
        })
        .collect()
}

/// Color one connected 2-edge-colored component, returning the target and
/// the colors of the walk's vertices.
fn color_component_2ec(w: &Walk) -> Result<(MaxDeg2Target, Vec<usize>, Vec<usize>), HomError> {
    let sp5 = build_sp(5).expect("5 is a Paley order").graph;
    let path4 = build_gadget(GadgetId::Path4).graph;
    if !w.closed {
        let signs = &w.signs[..w.vertices.len() - 1];
        return Ok((MaxDeg2Target::Sp5, w.vertices.clone(), color_path_sp5(signs, &sp5, &path4)));
    }
    let l = w.vertices.len();
    let mono = w.signs.iter().all(|&s| s == w.signs[0]);
    if mono && l % 2 == 1 {
        let tri = if w.signs[0] == Sign::Pos { [0, 1, 2] } else { [0, 3, 4] };
        let colors = (0..l).map(|i| if i == l - 1 { tri[2] } else { tri[i % 2] }).collect();
        return Ok((MaxDeg2Target::Sb, w.vertices.clone(), colors));
    }
    // a vertex with two edges of the same sign
    if let Some(i) = (0..l).find(|&i| w.signs[i] == w.signs[(i + l - 1) % l]) {
        let (vs, signs) = rotated(w, i);
        let colors = color_anchored_cycle(&signs, &sp5)
            .ok_or_else(|| HomError::Precondition("no anchored coloring of the cycle".into()))?;
        return Ok((MaxDeg2Target::Sp5, vs, colors));
    }
    let i = (0..l).find(|&i| w.signs[i] == Sign::Neg).expect("alternating cycle has a negative edge");
    let (vs, _) = rotated(w, i);
    Ok((MaxDeg2Target::Sp5, vs, alternating_pattern(l)))
}

/// Switch so that every walk edge except possibly the closing one is
/// positive; returns the vertices to switch and whether the cycle is unbalanced.
fn straighten(w: &Walk) -> (Vec<usize>, bool) {
    let mut sigma = Sign::Pos;
    let mut switched = Vec::new();
    for (i, &v) in w.vertices.iter().enumerate() {
        if sigma == Sign::Neg {
            switched.push(v);
        }
        if i + 1 < w.vertices.len() {
            sigma = sigma * w.signs[i];
        }
    }
    let unbalanced = w.closed && sigma * w.signs[w.vertices.len() - 1] == Sign::Neg;
    (switched, unbalanced)
}

/// Colors in `SIGNED_T` (labels 1..4 at indices 0..3) for a straightened walk.
fn color_component_signed(w: &Walk, unbalanced: bool) -> Vec<usize> {
    let l = w.vertices.len();
    match (w.closed, unbalanced) {
        (false, _) => (0..l).map(|i| i % 2).collect(),
        (true, false) if l.is_multiple_of(2) => (0..l).map(|i| i % 2).collect(),
        (true, false) => (0..l).map(|i| if i == l - 1 { 2 } else { i % 2 }).collect(),
        // closing edge v_{l-1} v_0 is the negative edge 3-4; walk 4, 1, ..., 3
        (true, true) if l % 2 == 1 => (0..l)
            .map(|i| {
                if i == l - 1 {
                    2
                } else if i % 2 == 0 {
                    3
                } else {
                    0
                }
            })
            .collect(),
        (true, true) => (0..l)
            .map(|i| match l - 1 - i {
                0 => 2,
                1 => 1,
                _ if i % 2 == 0 => 3,
                _ => 0,
            })
            .collect(),
    }
}

/// Color a graph of maximum degree at most 2 without search.
pub fn color_maxdeg2(g: &SignedGraph, mode: Mode) -> Result<MaxDeg2Coloring, HomError> {
    let maxdeg = g.max_degree();
    if maxdeg > 2 {
        return Err(HomError::DegreeTooLarge { limit: 2, found: maxdeg });
    }
    let comps = g.components();
    let mut map = vec![0; g.order()];
    match mode {
        Mode::Signed => {
            let mut witness = Vec::new();
            for comp in &comps {
                let w = walk(g, comp);
                let (switched, unbalanced) = straighten(&w);
                witness.extend(switched);
                for (v, c) in w.vertices.iter().zip(color_component_signed(&w, unbalanced)) {
                    map[*v] = c;
                }
            }
            let hom = Homomorphism::signed(map, SwitchSet::new(witness));
            Ok(MaxDeg2Coloring { hom, target: MaxDeg2Target::SignedT })
        }
        Mode::TwoEdgeColored => {
            let colored: Vec<_> =
                comps.iter().map(|comp| color_component_2ec(&walk(g, comp))).collect::<Result<_, _>>()?;
            let single = colored.len() == 1;
            for (target, vs, colors) in &colored {
                for (v, &c) in vs.iter().zip(colors) {
                    map[*v] = match (single, target) {
                        (true, _) => c,
                        (false, MaxDeg2Target::Sb) => SB_IN_TARGET6[c],
                        (false, _) => SP5_IN_TARGET6[c],
                    };
                }
            }
            let target = match colored.first() {
                Some((t, _, _)) if single => *t,
                None => MaxDeg2Target::Sp5,
                _ => MaxDeg2Target::Target6,
            };
            Ok(MaxDeg2Coloring { hom: Homomorphism::two_edge_colored(map), target })
        }
    }
}
