//! Backtracking with forward checking over per-vertex candidate bitsets.
//!
//! Vertices are chosen dynamically: most already-colored neighbors first,
//! then larger degree, then smaller index. Candidates are tried in
//! ascending index order, so the first solution found is deterministic.

use crate::bits::{self, SignedAdjacency};
use crate::sgraph::SignedGraph;

pub(crate) struct Engine<'a> {
    g: &'a SignedGraph,
    adj: SignedAdjacency,
    injective: bool,
}

/// Outcome of a visit callback: keep enumerating or stop.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Flow {
    Continue,
    Stop,
}

struct State<'v> {
    map: Vec<usize>,
    colored_nbrs: Vec<usize>,
    /// one domain snapshot per depth, each `n * words` long
    stack: Vec<Vec<u64>>,
    nodes: u64,
    visit: &'v mut dyn FnMut(&[usize]) -> Flow,
}

const UNSET: usize = usize::MAX;

impl<'a> Engine<'a> {
    pub fn new(g: &'a SignedGraph, h: &SignedGraph, injective: bool) -> Engine<'a> {
        Engine { g, adj: SignedAdjacency::new(h), injective }
    }

    pub fn words(&self) -> usize {
        self.adj.words
    }

    /// Domains allowing every target vertex whose signed degrees can absorb
    /// the source vertex's edges.
    pub fn default_domains(&self, h: &SignedGraph) -> Vec<u64> {
        let w = self.adj.words;
        let n = self.g.order();
        let mut doms = vec![0u64; n * w];
        for v in 0..n {
            let (p, q) = self.g.signed_degree(v);
            for c in 0..h.order() {
                let (hp, hq) = h.signed_degree(c);
                // a non-injective map can send several neighbors to one color,
                // so only the existence of each sign is necessary
                let ok = if self.injective { hp >= p && hq >= q } else { (p == 0 || hp > 0) && (q == 0 || hq > 0) };
                if ok {
                    doms[v * w + c / 64] |= 1 << (c % 64);
                }
            }
        }
        doms
    }

    /// Enumerate solutions, calling `visit` on each full map. Returns the
    /// number of search nodes expanded.
    pub fn run(&self, domains: Vec<u64>, visit: &mut dyn FnMut(&[usize]) -> Flow) -> u64 {
        let n = self.g.order();
        let w = self.adj.words;
        debug_assert_eq!(domains.len(), n * w);
        if n == 0 {
            visit(&[]);
            return 0;
        }
        if (0..n).any(|v| bits::is_empty(&domains[v * w..(v + 1) * w])) {
            return 0;
        }
        let mut stack = vec![domains];
        stack.resize(n + 1, vec![0u64; n * w]);
        let mut state = State { map: vec![UNSET; n], colored_nbrs: vec![0; n], stack, nodes: 0, visit };
        self.descend(&mut state, 0);
        state.nodes
    }

    fn pick(&self, st: &State) -> usize {
        let mut best = UNSET;
        for v in 0..self.g.order() {
            if st.map[v] != UNSET {
                continue;
            }
            if best == UNSET || (st.colored_nbrs[v], self.g.degree(v)) > (st.colored_nbrs[best], self.g.degree(best)) {
                best = v;
            }
        }
        best
    }

    /// Returns true when the caller asked to stop.
    fn descend(&self, st: &mut State, depth: usize) -> bool {
        let n = self.g.order();
        if depth == n {
            return (st.visit)(&st.map) == Flow::Stop;
        }
        st.nodes += 1;
        let w = self.adj.words;
        let v = self.pick(st);
        let candidates: Vec<usize> = bits::iter(&st.stack[depth][v * w..(v + 1) * w]).collect();
        for c in candidates {
            let (cur, next) = st.stack.split_at_mut(depth + 1);
            let next = &mut next[0];
            next.copy_from_slice(&cur[depth]);
            let mut dead = false;
            for &(u, s) in self.g.neighbors(v) {
                if st.map[u] != UNSET {
                    continue;
                }
                let dom = &mut next[u * w..(u + 1) * w];
                bits::and_assign(dom, self.adj.row(c, s));
                if bits::is_empty(dom) {
                    dead = true;
                    break;
                }
            }
            if !dead && self.injective {
                for u in 0..n {
                    if u != v && st.map[u] == UNSET {
                        let dom = &mut next[u * w..(u + 1) * w];
                        dom[c / 64] &= !(1 << (c % 64));
                        if bits::is_empty(dom) {
                            dead = true;
                            break;
                        }
                    }
                }
            }
            if dead {
                continue;
            }
            st.map[v] = c;
            for &(u, _) in self.g.neighbors(v) {
                st.colored_nbrs[u] += 1;
            }
            let stop = self.descend(st, depth + 1);
            for &(u, _) in self.g.neighbors(v) {
                st.colored_nbrs[u] -= 1;
            }
            st.map[v] = UNSET;
            if stop {
                return true;
            }
        }
        false
    }
}

/// First map found from `g` to `h` under the given domains, or `None`.
pub(crate) fn first_solution(
    g: &SignedGraph,
    h: &SignedGraph,
    injective: bool,
    restrict: Option<&dyn Fn(usize, usize) -> bool>,
) -> Option<Vec<usize>> {
    let engine = Engine::new(g, h, injective);
    let mut doms = engine.default_domains(h);
    if let Some(allowed) = restrict {
        apply_restriction(&mut doms, engine.words(), g.order(), h.order(), allowed);
    }
    let mut found = None;
    engine.run(doms, &mut |m| {
        found = Some(m.to_vec());
        Flow::Stop
    });
    found
}

pub(crate) fn apply_restriction(
    doms: &mut [u64],
    words: usize,
    n: usize,
    nh: usize,
    allowed: &dyn Fn(usize, usize) -> bool,
) {
    for v in 0..n {
        for c in 0..nh {
            if !allowed(v, c) {
                doms[v * words + c / 64] &= !(1 << (c % 64));
            }
        }
    }
}
