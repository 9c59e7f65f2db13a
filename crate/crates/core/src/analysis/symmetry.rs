//! Automorphisms, isomorphisms and canonical labeling.
//!
//! Everything rests on equitable refinement of a vertex coloring by the
//! number of positive and negative neighbors in each color class. Canonical
//! labeling explores the whole individualization–refinement tree, which is
//! fine at the orders handled here.

use std::collections::{BTreeMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::{AnalysisError, PropertyReport, Witness};
use crate::hom::search::{apply_restriction, Engine, Flow};
use crate::sgraph::{Sign, SignedGraph};

pub const DEFAULT_VERTEX_LIMIT: usize = 30;
pub const DEFAULT_AUTOMORPHISM_LIMIT: usize = 1_000_000;

/// A vertex's color and its (neighbor color, sign, count) profile.
type Signature = (usize, Vec<(usize, u8, usize)>);

/// Refine `colors` until equitable. Colors are renumbered `0..` by sorted
/// signature, so the result is isomorphism-invariant.
fn refine(g: &SignedGraph, colors: &mut [usize]) {
    let n = g.order();
    let mut classes = count_classes(colors);
    loop {
        let sigs: Vec<Signature> = (0..n)
            .map(|v| {
                let mut counts: BTreeMap<(usize, u8), usize> = BTreeMap::new();
                for &(w, s) in g.neighbors(v) {
                    *counts.entry((colors[w], s.is_pos() as u8)).or_default() += 1;
                }
                (colors[v], counts.into_iter().map(|((c, s), k)| (c, s, k)).collect())
            })
            .collect();
        let mut sorted: Vec<_> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        for v in 0..n {
            colors[v] = sorted.binary_search(&&sigs[v]).expect("present");
        }
        let now = sorted.len();
        if now == classes {
            return;
        }
        classes = now;
    }
}

fn count_classes(colors: &[usize]) -> usize {
    colors.iter().collect::<HashSet<_>>().len()
}

/// Equitable partition of the vertices, as a color per vertex.
pub(crate) fn equitable_colors(g: &SignedGraph) -> Vec<usize> {
    let mut colors = vec![0; g.order()];
    refine(g, &mut colors);
    colors
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub order: usize,
    /// Upper triangle of the relabeled adjacency matrix: 0 none, 1 positive, 2 negative.
    pub code: Vec<u8>,
}

fn code_of(g: &SignedGraph, position: &[usize]) -> Vec<u8> {
    let n = g.order();
    let mut at = vec![0; n];
    for v in 0..n {
        at[position[v]] = v;
    }
    let mut code = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            code.push(match g.sign(at[i], at[j]) {
                None => 0,
                Some(Sign::Pos) => 1,
                Some(Sign::Neg) => 2,
            });
        }
    }
    code
}

fn explore(g: &SignedGraph, colors: Vec<usize>, best: &mut Option<(Vec<u8>, Vec<usize>)>) {
    let n = g.order();
    let mut sizes = vec![0usize; n];
    for &c in &colors {
        sizes[c] += 1;
    }
    // first smallest non-singleton cell
    let target = (0..n).filter(|&c| sizes[c] > 1).min_by_key(|&c| (sizes[c], c));
    match target {
        None => {
            let code = code_of(g, &colors);
            if best.as_ref().is_none_or(|(b, _)| code < *b) {
                *best = Some((code, colors));
            }
        }
        Some(cell) => {
            for v in (0..n).filter(|&v| colors[v] == cell) {
                // individualized vertex sorts before the rest of its cell
                let mut next: Vec<usize> = colors.iter().map(|&c| 2 * c + 1).collect();
                next[v] = 2 * cell;
                refine(g, &mut next);
                explore(g, next, best);
            }
        }
    }
}

/// Relabeling `v -> position[v]` giving the minimal code over all leaves
/// of the search tree.
pub fn canonical_labeling(g: &SignedGraph) -> Vec<usize> {
    canonical(g).1
}

pub fn canonical_form(g: &SignedGraph) -> CanonicalForm {
    let (code, _) = canonical(g);
    CanonicalForm { order: g.order(), code }
}

fn canonical(g: &SignedGraph) -> (Vec<u8>, Vec<usize>) {
    if g.order() == 0 {
        return (Vec::new(), Vec::new());
    }
    let mut best = None;
    explore(g, equitable_colors(g), &mut best);
    best.expect("at least one leaf")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomorphismGroup {
    pub order: usize,
    pub generators: Vec<Vec<usize>>,
    /// Every element, identity first.
    #[serde(skip)]
    pub elements: Vec<Vec<usize>>,
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    // first a, then b
    a.iter().map(|&x| b[x]).collect()
}

fn closure(generators: &[Vec<usize>], n: usize) -> HashSet<Vec<usize>> {
    let id: Vec<usize> = (0..n).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for gen in generators {
            let y = compose(&x, gen);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Injective sign-preserving maps `g -> h` with equal edge counts, i.e.
/// isomorphisms; `allowed` further restricts images.
fn isomorphisms(
    g: &SignedGraph,
    h: &SignedGraph,
    allowed: &dyn Fn(usize, usize) -> bool,
    visit: &mut dyn FnMut(&[usize]) -> Flow,
) {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return;
    }
    let engine = Engine::new(g, h, true);
    let mut doms = engine.default_domains(h);
    let same_degree = |v: usize, c: usize| g.signed_degree(v) == h.signed_degree(c) && allowed(v, c);
    apply_restriction(&mut doms, engine.words(), g.order(), h.order(), &same_degree);
    engine.run(doms, visit);
}

fn check_size(g: &SignedGraph, limit: usize) -> Result<(), AnalysisError> {
    if g.order() > limit {
        return Err(AnalysisError::TooLarge { n: g.order(), limit });
    }
    Ok(())
}

/// All automorphisms of `g` (at most `max_elements`), with a generating set.
pub fn automorphisms(
    g: &SignedGraph,
    vertex_limit: usize,
    max_elements: usize,
) -> Result<AutomorphismGroup, AnalysisError> {
    check_size(g, vertex_limit)?;
    let n = g.order();
    let colors = equitable_colors(g);
    let mut elements = Vec::new();
    let mut overflow = false;
    isomorphisms(g, g, &|v, c| colors[v] == colors[c], &mut |m| {
        if elements.len() == max_elements {
            overflow = true;
            return Flow::Stop;
        }
        elements.push(m.to_vec());
        Flow::Continue
    });
    if overflow {
        return Err(AnalysisError::TooManyAutomorphisms { limit: max_elements });
    }
    debug_assert!(elements.iter().all(|a| g.edges().all(|(u, v, s)| g.sign(a[u], a[v]) == Some(s))));
    let id: Vec<usize> = (0..n).collect();
    elements.sort();
    if let Some(pos) = elements.iter().position(|e| *e == id) {
        let e = elements.remove(pos);
        elements.insert(0, e);
    }
    let mut generators: Vec<Vec<usize>> = Vec::new();
    let mut generated = closure(&generators, n);
    for e in &elements {
        if !generated.contains(e) {
            generators.push(e.clone());
            generated = closure(&generators, n);
        }
    }
    Ok(AutomorphismGroup { order: elements.len(), generators, elements })
}

/// An automorphism sending each `from` to its `to`, if one exists.
pub fn find_automorphism_mapping(g: &SignedGraph, pairs: &[(usize, usize)]) -> Option<Vec<usize>> {
    let colors = equitable_colors(g);
    let mut found = None;
    isomorphisms(g, g, &|v, c| colors[v] == colors[c] && pairs.iter().all(|&(a, b)| a != v || b == c), &mut |m| {
        found = Some(m.to_vec());
        Flow::Stop
    });
    found
}

/// An isomorphism `g -> h` as a vertex map, if one exists.
pub fn find_isomorphism(g: &SignedGraph, h: &SignedGraph) -> Option<Vec<usize>> {
    let mut found = None;
    isomorphisms(g, h, &|_, _| true, &mut |m| {
        found = Some(m.to_vec());
        Flow::Stop
    });
    found
}

/// Sign-compatible ordered cliques of size `n`, grouped by sign pattern.
fn tuple_classes(g: &SignedGraph, n: usize) -> BTreeMap<Vec<Sign>, Vec<Vec<usize>>> {
    let order = g.order();
    let mut classes: BTreeMap<Vec<Sign>, Vec<Vec<usize>>> = BTreeMap::new();
    match n {
        1 => {
            classes.insert(Vec::new(), (0..order).map(|v| vec![v]).collect());
        }
        2 => {
            for u in 0..order {
                for &(v, s) in g.neighbors(u) {
                    classes.entry(vec![s]).or_default().push(vec![u, v]);
                }
            }
        }
        _ => {
            for u in 0..order {
                for &(v, s) in g.neighbors(u) {
                    for &(w, t) in g.neighbors(u) {
                        if w == v {
                            continue;
                        }
                        if let Some(r) = g.sign(v, w) {
                            classes.entry(vec![s, t, r]).or_default().push(vec![u, v, w]);
                        }
                    }
                }
            }
        }
    }
    classes
}

/// `K_n`-transitivity: the automorphism group is transitive on ordered
/// `n`-cliques with the same sign pattern.
pub fn is_kn_transitive(g: &SignedGraph, n: usize) -> Result<PropertyReport, AnalysisError> {
    if !(1..=3).contains(&n) {
        return Err(AnalysisError::UnsupportedTupleLength(n));
    }
    let group = automorphisms(g, DEFAULT_VERTEX_LIMIT, DEFAULT_AUTOMORPHISM_LIMIT)?;
    let mut report = PropertyReport::new("Kn_transitive", true, Witness::None);
    report.n = Some(n);
    for tuples in tuple_classes(g, n).values() {
        let first = &tuples[0];
        let orbit: HashSet<Vec<usize>> = group.elements.iter().map(|a| first.iter().map(|&v| a[v]).collect()).collect();
        if orbit.len() < tuples.len() {
            let unreachable = tuples.iter().find(|t| !orbit.contains(*t)).expect("orbit is smaller").clone();
            report.holds = false;
            report.witness =
                Witness::Tuples { first: first.clone(), unreachable, orbit: orbit.len(), class: tuples.len() };
            break;
        }
    }
    Ok(report)
}

/// `g` is isomorphic to its negation.
pub fn is_antiautomorphic(g: &SignedGraph) -> Result<PropertyReport, AnalysisError> {
    check_size(g, DEFAULT_VERTEX_LIMIT)?;
    Ok(match find_isomorphism(g, &g.negated()) {
        Some(map) => PropertyReport::new("antiautomorphic", true, Witness::Map { map }),
        None => PropertyReport::new("antiautomorphic", false, Witness::None),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_gadget, build_sp, GadgetId};
    use Sign::{Neg, Pos};

    fn auts(g: &SignedGraph) -> AutomorphismGroup {
        automorphisms(g, DEFAULT_VERTEX_LIMIT, DEFAULT_AUTOMORPHISM_LIMIT).unwrap()
    }

    #[test]
    fn small_groups() {
        assert_eq!(auts(&SignedGraph::complete_with(3, |_, _| Pos)).order, 6);
        let two_edges = SignedGraph::path(&[Pos]).disjoint_union(&SignedGraph::path(&[Neg]));
        assert_eq!(auts(&two_edges).order, 4);
        let sp5 = build_sp(5).unwrap().graph;
        let group = auts(&sp5);
        assert_eq!(group.order, 10);
        // every element is t -> a t + b with a a square
        for e in &group.elements {
            let b = e[0];
            let a = (e[1] + 5 - b) % 5;
            assert!(a == 1 || a == 4);
            assert!((0..5).all(|t| e[t] == (a * t + b) % 5));
        }
        assert_eq!(closure(&group.generators, 5).len(), 10);
    }

    #[test]
    fn canonical_form_is_invariant() {
        let g = build_gadget(GadgetId::Candidate5).graph;
        let perm = [3, 0, 4, 1, 2];
        assert_eq!(canonical_form(&g), canonical_form(&g.permuted(&perm)));
        let p = SignedGraph::path(&[Pos, Pos, Neg]);
        assert_ne!(canonical_form(&p), canonical_form(&p.negated()));
        let lab = canonical_labeling(&g);
        assert_eq!(code_of(&g, &lab), canonical_form(&g).code);
    }

    #[test]
    fn transitivity_examples() {
        let sp5 = build_sp(5).unwrap().graph;
        assert!(is_kn_transitive(&sp5, 1).unwrap().holds);
        assert!(is_kn_transitive(&sp5, 2).unwrap().holds);
        let sb = build_gadget(GadgetId::Sb).graph;
        let r = is_kn_transitive(&sb, 1).unwrap();
        assert!(!r.holds);
        assert!(matches!(r.witness, Witness::Tuples { .. }));
    }

    #[test]
    fn antiautomorphism_examples() {
        assert!(is_antiautomorphic(&SignedGraph::cycle(&[Pos, Neg, Pos, Neg])).unwrap().holds);
        assert!(!is_antiautomorphic(&SignedGraph::complete_with(3, |_, _| Pos)).unwrap().holds);
        assert!(is_antiautomorphic(&build_sp(9).unwrap().graph).unwrap().holds);
    }

    #[test]
    fn mapping_automorphism() {
        let sp9 = build_sp(9).unwrap();
        let (x, y) = (sp9.vertex("x"), sp9.vertex("2x"));
        let a = find_automorphism_mapping(&sp9.graph, &[(x, 0), (y, 1)]).unwrap();
        assert_eq!((a[x], a[y]), (0, 1));
        // a negative pair cannot go to a positive one
        assert!(find_automorphism_mapping(&sp9.graph, &[(0, 0), (sp9.vertex("x+1"), 1)]).is_none());
    }

    #[test]
    fn size_limit() {
        let big = SignedGraph::empty(31);
        assert!(matches!(automorphisms(&big, DEFAULT_VERTEX_LIMIT, 10), Err(AnalysisError::TooLarge { .. })));
    }
}
