//! Machine-checked claims about small signed and 2-edge-colored graphs.
//!
//! Each claim is a deterministic function of a [`Context`]; the same seed
//! and flags give the same outcome. Claims are grouped into numbered
//! criteria; a criterion passes when all of its claims pass.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use sghom::analysis::{
    bounds_table, check_p22_star, check_p_kn, common_signed_neighbors, is_2ec_clique, is_antiautomorphic,
    is_kn_transitive, is_signed_clique,
};
use sghom::constructions::{
    build_2ec_clique, build_gadget, build_rho, build_signed_clique, build_sp, build_tr, GadgetId, LabeledTarget,
};
use sghom::enumerate::{
    connected_subcubic, random_connected_cubic, random_graph, random_signature, subcubic_graphs, with_signature,
};
use sghom::hom::{
    chromatic_2ec, chromatic_signed, color_maxdeg2, color_maxdeg3, degeneracy_order, extension_tables, find_embedding,
    find_hom_2ec, find_hom_signed, find_k4s, verify_hom, MaxDeg2Target, Mode,
};
use sghom::reference::{brute_force_hom, brute_force_switch_equivalent};
use sghom::sgraph::{canonical_switch_form, switch, switch_equivalent, write_sg, Sign, SignedGraph, SwitchSet};

use Sign::{Neg, Pos};

/// Inputs shared by all claims.
#[derive(Debug, Clone, Default)]
pub struct Context {
    /// Seed for every randomized sample.
    pub seed: u64,
    /// Strip every edge at vertex 0 of this catalog graph before use, to
    /// check that the harness notices.
    pub corrupt: Option<GadgetId>,
}

impl Context {
    pub fn new(seed: u64) -> Context {
        Context { seed, corrupt: None }
    }

    fn gadget(&self, id: GadgetId) -> LabeledTarget {
        let mut t = build_gadget(id);
        if self.corrupt == Some(id) {
            let edges = t.graph.edges().filter(|&(u, v, _)| u != 0 && v != 0);
            t.graph = SignedGraph::from_edges(t.graph.order(), edges.collect::<Vec<_>>()).expect("subset of edges");
        }
        t
    }

    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }
}

/// Why a claim did not hold, with an optional machine-readable witness.
#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub message: String,
    pub witness: Option<Value>,
}

impl Failure {
    fn new(message: impl Into<String>) -> Failure {
        Failure { message: message.into(), witness: None }
    }

    fn graph(message: impl Into<String>, g: &SignedGraph) -> Failure {
        Failure { message: message.into(), witness: Some(json!({ "graph": write_sg(g) })) }
    }
}

impl From<String> for Failure {
    fn from(message: String) -> Failure {
        Failure::new(message)
    }
}

pub type Outcome = Result<String, Failure>;

#[derive(Debug, Clone, Copy)]
pub struct Claim {
    /// Stable identifier, sorted by criterion.
    pub id: &'static str,
    pub criterion: u32,
    pub statement: &'static str,
    /// Only run with `--heavy`.
    pub heavy: bool,
    /// Expected to fail: the stored data is known to be wrong.
    pub known_failure: bool,
    pub check: fn(&Context) -> Outcome,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), Failure> {
    if cond {
        Ok(())
    } else {
        Err(Failure::new(msg()))
    }
}

fn ensure_graph(cond: bool, g: &SignedGraph, msg: impl FnOnce() -> String) -> Result<(), Failure> {
    if cond {
        Ok(())
    } else {
        Err(Failure::graph(msg(), g))
    }
}

fn alternating_cycle(len: usize) -> SignedGraph {
    let signs: Vec<Sign> = (0..len).map(|i| if i % 2 == 0 { Neg } else { Pos }).collect();
    SignedGraph::cycle(&signs)
}

fn signs_of(mask: u32, len: usize) -> Vec<Sign> {
    (0..len).map(|i| if mask >> i & 1 == 1 { Neg } else { Pos }).collect()
}

fn sp(q: u64) -> SignedGraph {
    build_sp(q).expect("valid prime power").graph
}

fn tr(q: u64) -> SignedGraph {
    build_tr(q).expect("valid prime power").graph
}

/// First failure among `graphs`, in input order.
fn first_failure<F>(graphs: &[SignedGraph], ok: F) -> Option<&SignedGraph>
where
    F: Fn(&SignedGraph) -> bool + Sync,
{
    graphs.par_iter().position_first(|g| !ok(g)).map(|i| &graphs[i])
}

fn alt_c6_chi2(_: &Context) -> Outcome {
    let c6 = alternating_cycle(6);
    let r = chromatic_2ec(&c6, 5).map_err(|e| e.to_string())?;
    ensure(r.value == 5, || format!("chromatic number {}", r.value))?;
    ensure(verify_hom(&c6, &r.target, &r.homomorphism).unwrap_or(false), || "witness does not verify".into())?;
    let orders: Vec<usize> = r.per_order_log.iter().map(|l| l.order).collect();
    ensure(orders == [1, 2, 3, 4] && r.per_order_log.iter().all(|l| l.all_failed), || {
        format!("failure log {:?}", r.per_order_log)
    })?;
    let tried: Vec<usize> = r.per_order_log.iter().map(|l| l.candidates).collect();
    Ok(format!("value 5; orders 1-4 exhausted over {:?} complete targets", tried))
}

fn alt_c6_not_into_candidate5(ctx: &Context) -> Outcome {
    let cand = ctx.gadget(GadgetId::Candidate5).graph;
    match find_hom_2ec(&alternating_cycle(6), &cand) {
        None => Ok("no homomorphism".into()),
        Some(h) => Err(Failure { message: "alternating C6 maps to CANDIDATE5".into(), witness: Some(json!(h)) }),
    }
}

fn small_cliques_into_candidate5(ctx: &Context) -> Outcome {
    let cand = ctx.gadget(GadgetId::Candidate5).graph;
    let cliques = [
        ("positive triangle", SignedGraph::cycle(&[Pos; 3])),
        ("negative triangle", SignedGraph::cycle(&[Neg; 3])),
        ("alternating C4", alternating_cycle(4)),
    ];
    let mut found = Vec::new();
    for (name, k) in &cliques {
        ensure(is_2ec_clique(k).holds, || format!("{} is not a clique", name))?;
        let e = find_embedding(k, &cand).ok_or_else(|| Failure::graph(format!("{} does not embed", name), k))?;
        found.push(format!("{} at {:?}", name, e));
    }
    Ok(found.join(", "))
}

fn target6_colors_cycles_and_paths(ctx: &Context) -> Outcome {
    let t6 = ctx.gadget(GadgetId::Target6).graph;
    let mut count = 0usize;
    for len in 1..=12usize {
        let mut graphs: Vec<SignedGraph> = (0u32..1 << len).map(|m| SignedGraph::path(&signs_of(m, len))).collect();
        if len >= 3 {
            graphs.extend((0u32..1 << len).map(|m| SignedGraph::cycle(&signs_of(m, len))));
        }
        let bad =
            first_failure(&graphs, |g| find_hom_2ec(g, &t6).is_some_and(|h| verify_hom(g, &t6, &h).unwrap_or(false)));
        if let Some(g) = bad {
            return Err(Failure::graph("not colored by TARGET6", g));
        }
        count += graphs.len();
    }
    Ok(format!("{} paths and cycles of length at most 12 colored", count))
}

fn connected_maxdeg2(_: &Context) -> Outcome {
    let (mut sp5, mut sb) = (0usize, 0usize);
    for len in 3..=12usize {
        for mask in 0u32..1 << len {
            let g = SignedGraph::cycle(&signs_of(mask, len));
            let c = color_maxdeg2(&g, Mode::TwoEdgeColored).map_err(|e| Failure::graph(e.to_string(), &g))?;
            match c.target {
                MaxDeg2Target::Sp5 => sp5 += 1,
                MaxDeg2Target::Sb => sb += 1,
                other => return Err(Failure::graph(format!("used {:?}", other), &g)),
            }
            ensure_graph(verify_hom(&g, &c.target.graph(), &c.hom).unwrap_or(false), &g, || "does not verify".into())?;
        }
    }
    Ok(format!("{} cycles into SP_5 and {} into SB, all verified", sp5, sb))
}

fn signed_cycles_into_signed_t(ctx: &Context) -> Outcome {
    let t = ctx.gadget(GadgetId::SignedT).graph;
    let mut classes = 0;
    for len in 3..=12usize {
        let mut seen = HashSet::new();
        for mask in 0u32..1 << len {
            let g = SignedGraph::cycle(&signs_of(mask, len));
            let c = color_maxdeg2(&g, Mode::Signed).map_err(|e| Failure::graph(e.to_string(), &g))?;
            ensure_graph(c.target == MaxDeg2Target::SignedT, &g, || format!("used {:?}", c.target))?;
            ensure_graph(verify_hom(&g, &t, &c.hom).unwrap_or(false), &g, || "does not verify into SIGNED_T".into())?;
            seen.insert(canonical_switch_form(&g).canonical_signs);
        }
        // balanced and unbalanced
        ensure(seen.len() == 2, || format!("length {} has {} switching classes", len, seen.len()))?;
        classes += seen.len();
    }
    Ok(format!("all signatures of lengths 3-12 ({} switching classes) colored", classes))
}

fn unbalanced_c4_chis(_: &Context) -> Outcome {
    let c4 = SignedGraph::cycle(&[Neg, Pos, Pos, Pos]);
    let r = chromatic_signed(&c4, 5).map_err(|e| e.to_string())?;
    ensure(r.value == 4, || format!("signed chromatic number {}", r.value))?;
    Ok("value 4".into())
}

fn paley_clique_extension(_: &Context) -> Outcome {
    let mut checks: Vec<(String, SignedGraph, usize, usize)> = Vec::new();
    for q in [5u64, 9, 13] {
        let qs = q as usize;
        let g = sp(q);
        let rho = build_rho(&build_sp(q).expect("valid")).graph;
        checks.push((format!("SP_{}", q), g.clone(), 1, (qs - 1) / 2));
        checks.push((format!("SP_{}", q), g, 2, (qs - 5) / 4));
        checks.push((format!("rho(SP_{})", q), rho.clone(), 1, qs - 1));
        checks.push((format!("rho(SP_{})", q), rho.clone(), 2, (qs - 3) / 2));
        checks.push((format!("rho(SP_{})", q), rho, 3, qs.saturating_sub(9) / 4));
    }
    for q in [5u64, 13] {
        let qs = q as usize;
        let t = tr(q);
        checks.push((format!("TR(SP_{})", q), t.clone(), 1, qs));
        checks.push((format!("TR(SP_{})", q), t.clone(), 2, (qs - 1) / 2));
        checks.push((format!("TR(SP_{})", q), t, 3, (qs - 5) / 4));
    }
    checks.push(("TR(SP_13)".into(), tr(13), 3, 2));
    for (name, g, k, n) in &checks {
        let r = check_p_kn(g, *k, *n).map_err(|e| e.to_string())?;
        if !r.holds {
            return Err(Failure {
                message: format!("{} lacks P_{{{},{}}}", name, k, n),
                witness: Some(json!(r.witness)),
            });
        }
    }
    Ok(format!("{} inequalities hold", checks.len()))
}

fn tr53_p44(_: &Context) -> Outcome {
    let r = check_p_kn(&tr(53), 4, 4).map_err(|e| e.to_string())?;
    if r.holds {
        Ok("TR(SP_53) has P_{4,4}".into())
    } else {
        Err(Failure { message: "TR(SP_53) lacks P_{4,4}".into(), witness: Some(json!(r.witness)) })
    }
}

fn sp9_properties(_: &Context) -> Outcome {
    let t = build_sp(9).expect("valid");
    let g = &t.graph;
    ensure(check_p_kn(g, 1, 4).map_err(|e| e.to_string())?.holds, || "no P_{1,4}".into())?;
    ensure(check_p_kn(g, 2, 1).map_err(|e| e.to_string())?.holds, || "no P_{2,1}".into())?;
    ensure(check_p22_star(g).map_err(|e| e.to_string())?.holds, || "no P*_{2,2}".into())?;
    let (u, v) = (t.vertex("0"), t.vertex("1"));
    ensure(g.sign(u, v) == Some(Pos), || "01 is not positive".into())?;
    for (s1, s2, witnesses) in [(Neg, Neg, ["x+2", "2x+2"]), (Pos, Neg, ["x", "2x"])] {
        let common = common_signed_neighbors(g, u, v, s1, s2);
        for w in witnesses {
            ensure(common.contains(&t.vertex(w)), || format!("{} is not a ({}, {}) common neighbor", w, s1, s2))?;
        }
    }
    Ok("P_{1,4}, P_{2,1}, P*_{2,2}; for (0, 1): {x+2, 2x+2} negative to both, {x, 2x} positive then negative".into())
}

fn clique_constructions(_: &Context) -> Outcome {
    for k in 3..=8usize {
        let g = build_2ec_clique(k).map_err(|e| e.to_string())?;
        ensure_graph(g.order() == 4 * (k - 1), &g, || format!("2-edge-colored k={}: order {}", k, g.order()))?;
        ensure_graph((0..g.order()).all(|v| g.degree(v) == k), &g, || format!("2-edge-colored k={}: not regular", k))?;
        ensure_graph(is_2ec_clique(&g).holds, &g, || format!("2-edge-colored k={}: not a clique", k))?;
    }
    for k in 4..=8usize {
        let g = build_signed_clique(k).map_err(|e| e.to_string())?;
        ensure_graph(g.order() == 2 * (k + 1), &g, || format!("signed k={}: order {}", k, g.order()))?;
        ensure_graph((0..g.order()).all(|v| g.degree(v) == k), &g, || format!("signed k={}: not regular", k))?;
        ensure_graph(is_signed_clique(&g).holds, &g, || format!("signed k={}: not a clique", k))?;
    }
    Ok("2-edge-colored k=3..8 and signed k=4..8: regular, right order, cliques".into())
}

fn clique6_chis(ctx: &Context) -> Outcome {
    let g = ctx.gadget(GadgetId::Clique6).graph;
    ensure_graph(is_signed_clique(&g).holds, &g, || "CLIQUE6 is not a signed clique".into())?;
    let r = chromatic_signed(&g, 6).map_err(|e| e.to_string())?;
    ensure(r.value == 6, || format!("signed chromatic number {}", r.value))?;
    let five = r.per_order_log.iter().find(|l| l.order == 5).filter(|l| l.all_failed);
    let five = five.ok_or_else(|| format!("no exhaustive order-5 failure in {:?}", r.per_order_log))?;
    Ok(format!("value 6; all {} signed targets of order 5 fail", five.candidates))
}

fn symmetric(graphs: &[(&str, SignedGraph)]) -> Outcome {
    for (name, g) in graphs {
        for n in [1, 2] {
            let r = is_kn_transitive(g, n).map_err(|e| e.to_string())?;
            if !r.holds {
                return Err(Failure {
                    message: format!("{} is not K_{}-transitive", name, n),
                    witness: Some(json!(r.witness)),
                });
            }
        }
        let r = is_antiautomorphic(g).map_err(|e| e.to_string())?;
        ensure(r.holds, || format!("{} is not antiautomorphic", name))?;
    }
    let names: Vec<&str> = graphs.iter().map(|g| g.0).collect();
    Ok(format!("{}: vertex- and edge-transitive, antiautomorphic", names.join(", ")))
}

fn paley_symmetry(_: &Context) -> Outcome {
    symmetric(&[("SP_5", sp(5)), ("SP_9", sp(9)), ("SP_13", sp(13)), ("TR(SP_5)", tr(5))])
}

fn larger_symmetry(_: &Context) -> Outcome {
    symmetric(&[("SP_17", sp(17)), ("SP_25", sp(25)), ("SP_29", sp(29)), ("TR(SP_13)", tr(13))])
}

fn into_sp9_star(graphs: &[SignedGraph], star: &SignedGraph) -> Result<(), Failure> {
    let bad = first_failure(graphs, |g| color_maxdeg3(g).is_ok_and(|h| verify_hom(g, star, &h).unwrap_or(false)));
    match bad {
        Some(g) => Err(Failure::graph("no certified coloring into SP_9*", g)),
        None => Ok(()),
    }
}

fn maxdeg3_exhaustive(ctx: &Context) -> Outcome {
    let star = ctx.gadget(GadgetId::Sp9Star).graph;
    let underlying: Vec<SignedGraph> = (1..=8).flat_map(subcubic_graphs).collect();
    let mut rng = ctx.rng(11);
    let graphs: Vec<SignedGraph> =
        underlying.iter().flat_map(|g| (0..10).map(|_| random_signature(g, &mut rng)).collect::<Vec<_>>()).collect();
    into_sp9_star(&graphs, &star)?;
    Ok(format!("{} graphs on at most 8 vertices, 10 signatures each", underlying.len()))
}

fn maxdeg3_random_cubic(ctx: &Context) -> Outcome {
    let star = ctx.gadget(GadgetId::Sp9Star).graph;
    let mut rng = ctx.rng(12);
    let graphs: Vec<SignedGraph> = (0..500)
        .map(|_| {
            let n = 2 * rng.gen_range(2..=12);
            let g = random_connected_cubic(n, &mut rng);
            random_signature(&g, &mut rng)
        })
        .collect();
    into_sp9_star(&graphs, &star)?;
    Ok("500 connected cubic graphs on 4-24 vertices".into())
}

/// Components map independently, so connected underlying graphs suffice.
/// Negating every sign preserves the answer because `SP_9` is
/// antiautomorphic, so the last edge stays positive. Switching does not
/// preserve 2-edge-colored homomorphisms, so nothing else is quotiented.
fn two_degenerate_into_sp9(_: &Context) -> Outcome {
    let sp9 = sp(9);
    let graphs: Vec<SignedGraph> =
        (1..=9).flat_map(connected_subcubic).filter(|g| degeneracy_order(g).degeneracy <= 2).collect();
    let results: Vec<Result<(usize, usize), SignedGraph>> = graphs
        .par_iter()
        .map(|g| {
            let (mut checked, mut excluded) = (0, 0);
            for mask in 0..1u64 << g.edge_count().saturating_sub(1) {
                let s = with_signature(g, mask);
                if !find_k4s(&s).is_empty() {
                    excluded += 1;
                } else if find_hom_2ec(&s, &sp9).is_none() {
                    return Err(s);
                } else {
                    checked += 1;
                }
            }
            Ok((checked, excluded))
        })
        .collect();
    let (mut checked, mut excluded) = (0, 0);
    for r in results {
        let (c, e) = r.map_err(|g| Failure::graph("no homomorphism to SP_9", &g))?;
        checked += c;
        excluded += e;
    }
    Ok(format!(
        "{} underlying graphs; {} signatures map to SP_9, {} with a subdivided K_4 excluded",
        graphs.len(),
        checked,
        excluded
    ))
}

fn extension_table(ctx: &Context, name: &str) -> Outcome {
    let table = extension_tables().into_iter().find(|t| t.name == name).expect("known table");
    let mut check = table.check();
    if ctx.corrupt == Some(table.target) || ctx.corrupt == Some(table.gadget) {
        // re-check the stored colorings against the corrupted graphs
        let gadget = ctx.gadget(table.gadget).graph;
        let target = ctx.gadget(table.target).graph;
        let broken = table
            .colorings()
            .into_iter()
            .any(|(_, c)| gadget.edges().any(|(u, v, s)| target.sign(c[u], c[v]) != Some(s)));
        check.valid &= !broken;
    }
    if check.valid && check.covered {
        Ok(format!("{} entries valid, every attach neighbor covered", table.entries.len()))
    } else {
        Err(Failure {
            message: format!("valid={} covered={}", check.valid, check.covered),
            witness: Some(json!({ "broken_edges": check.broken_edges, "uncovered": check.uncovered })),
        })
    }
}

fn k4s_plus_star(ctx: &Context) -> Outcome {
    extension_table(ctx, "K4S_PLUS->SP9_STAR")
}

fn k4s_plus_dagger(ctx: &Context) -> Outcome {
    extension_table(ctx, "K4S_PLUS->SP9_DAGGER")
}

fn k4s_minus_dagger(ctx: &Context) -> Outcome {
    extension_table(ctx, "K4S_MINUS->SP9_DAGGER")
}

fn sample(rng: &mut ChaCha8Rng, n: std::ops::RangeInclusive<usize>, density: f64) -> SignedGraph {
    let n = rng.gen_range(n);
    random_graph(n, density, rng)
}

fn oracle_hom(ctx: &Context) -> Outcome {
    let mut rng = ctx.rng(14);
    for _ in 0..200 {
        let g = sample(&mut rng, 1..=6, 0.5);
        let h = sample(&mut rng, 1..=5, 0.7);
        if find_hom_2ec(&g, &h).is_some() != brute_force_hom(&g, &h) {
            return Err(Failure {
                message: "search disagrees with brute force".into(),
                witness: Some(json!({ "g": write_sg(&g), "h": write_sg(&h) })),
            });
        }
    }
    Ok("200 instances agree".into())
}

fn oracle_signed(ctx: &Context) -> Outcome {
    let mut rng = ctx.rng(15);
    for _ in 0..200 {
        let g = sample(&mut rng, 1..=6, 0.5);
        let h = sample(&mut rng, 1..=4, 0.7);
        let rho = build_rho(&LabeledTarget::unlabeled(h.clone())).graph;
        if find_hom_signed(&g, &h).is_some() != find_hom_2ec(&g, &rho).is_some() {
            return Err(Failure {
                message: "signed search disagrees with the double cover".into(),
                witness: Some(json!({ "g": write_sg(&g), "h": write_sg(&h) })),
            });
        }
    }
    Ok("200 instances agree".into())
}

fn oracle_switching(ctx: &Context) -> Outcome {
    let mut rng = ctx.rng(16);
    for round in 0..200 {
        let n = rng.gen_range(1..=10);
        let g1 = random_graph(n, 0.4, &mut rng);
        // half genuine switches, half random re-signings
        let g2 = if round % 2 == 0 {
            switch(&g1, &SwitchSet::new((0..n).filter(|_| rng.gen()))).expect("in range")
        } else {
            let edges: Vec<_> = g1.edges().map(|(u, v, s)| (u, v, if rng.gen_bool(0.2) { -s } else { s })).collect();
            SignedGraph::from_edges(n, edges).expect("same pairs")
        };
        if switch_equivalent(&g1, &g2).is_some() != brute_force_switch_equivalent(&g1, &g2) {
            return Err(Failure {
                message: "switching test disagrees with brute force".into(),
                witness: Some(json!({ "g1": write_sg(&g1), "g2": write_sg(&g2) })),
            });
        }
    }
    Ok("200 instances agree".into())
}

fn bounds_cells(_: &Context) -> Outcome {
    // (k, chi2, chi2 connected, chis, chis connected), each (lower, upper)
    type B = (u64, u64);
    let expected: [(u32, B, B, B, B); 12] = [
        (1, (3, 3), (2, 2), (2, 2), (2, 2)),
        (2, (6, 6), (5, 5), (4, 4), (4, 4)),
        (3, (8, 11), (8, 10), (6, 7), (6, 6)),
        (4, (12, 30), (12, 30), (10, 16), (10, 16)),
        (5, (16, 110), (16, 110), (12, 56), (12, 56)),
        (6, (20, 4608), (20, 1602), (14, 4608), (14, 1602)),
        (7, (24, 12544), (24, 4610), (16, 12544), (16, 4610)),
        (8, (28, 32768), (28, 12546), (18, 32768), (18, 12546)),
        (9, (32, 82944), (32, 32770), (12, 82944), (12, 32770)),
        (10, (36, 204800), (36, 82946), (16, 204800), (16, 82946)),
        (11, (46, 495616), (46, 204802), (23, 495616), (23, 204802)),
        (12, (64, 1179648), (64, 495618), (32, 1179648), (32, 495618)),
    ];
    for (k, a, b, c, d) in expected {
        let row = bounds_table(k);
        let got = [row.chi2, row.chi2_connected, row.chis, row.chis_connected].map(|x| (x.lower, x.upper));
        ensure(got == [a, b, c, d], || format!("k={}: got {:?}", k, got))?;
    }
    for (k, cell) in [(4, "12 ≤ χ₂(D₄) ≤ 30"), (5, "16 ≤ χ₂(D₅) ≤ 110"), (2, "χ₂(D₂) = 6")] {
        let got = bounds_table(k).cells()[0].clone();
        ensure(got == cell, || format!("k={}: rendered {:?}", k, got))?;
    }
    Ok("48 cells for k = 1..12 match".into())
}

const fn claim(id: &'static str, criterion: u32, statement: &'static str, check: fn(&Context) -> Outcome) -> Claim {
    Claim { id, criterion, statement, heavy: false, known_failure: false, check }
}

/// Every claim, sorted by id.
pub fn claims() -> Vec<Claim> {
    let mut all = vec![
        claim("01.alt-c6.chi2-is-5", 1, "the alternating 6-cycle needs exactly 5 colors", alt_c6_chi2),
        claim(
            "02.alt-c6.not-into-candidate5",
            2,
            "the alternating 6-cycle does not map to CANDIDATE5",
            alt_c6_not_into_candidate5,
        ),
        claim(
            "02.small-cliques.embed-in-candidate5",
            2,
            "both monochromatic triangles and the alternating 4-cycle embed in CANDIDATE5",
            small_cliques_into_candidate5,
        ),
        claim(
            "03.target6.colors-paths-and-cycles",
            3,
            "TARGET6 colors every path and cycle of length at most 12",
            target6_colors_cycles_and_paths,
        ),
        claim(
            "04.connected-maxdeg2.into-sp5-or-sb",
            4,
            "every 2-edge-colored cycle of length 3-12 maps to SP_5 or SB",
            connected_maxdeg2,
        ),
        claim(
            "05.signed-cycles.into-signed-t",
            5,
            "SIGNED_T colors every signed cycle of length 3-12",
            signed_cycles_into_signed_t,
        ),
        claim(
            "05.unbalanced-c4.chis-is-4",
            5,
            "the unbalanced 4-cycle has signed chromatic number 4",
            unbalanced_c4_chis,
        ),
        claim(
            "06.paley-family.clique-extension",
            6,
            "SP_q, rho(SP_q) and TR(SP_q) have the stated P_{k,n} properties",
            paley_clique_extension,
        ),
        Claim { heavy: true, ..claim("06.tr-sp53.p44", 6, "TR(SP_53) has P_{4,4}", tr53_p44) },
        claim("07.sp9.properties", 7, "SP_9 has P_{1,4}, P_{2,1} and P*_{2,2}", sp9_properties),
        claim(
            "08.clique-constructions",
            8,
            "the regular clique families are regular cliques of the stated order",
            clique_constructions,
        ),
        claim("09.clique6.chis-is-6", 9, "CLIQUE6 is a signed clique with signed chromatic number 6", clique6_chis),
        claim(
            "10.paley-family.symmetric",
            10,
            "SP_5, SP_9, SP_13 and TR(SP_5) are vertex- and edge-transitive and antiautomorphic",
            paley_symmetry,
        ),
        Claim {
            heavy: true,
            ..claim(
                "10.larger.symmetric",
                10,
                "SP_17, SP_25, SP_29 and TR(SP_13) are vertex- and edge-transitive and antiautomorphic",
                larger_symmetry,
            )
        },
        claim(
            "11.maxdeg3.exhaustive-into-sp9-star",
            11,
            "graphs of maximum degree 3 on at most 8 vertices map to SP_9*",
            maxdeg3_exhaustive,
        ),
        claim(
            "11.maxdeg3.random-cubic-into-sp9-star",
            11,
            "random connected cubic graphs map to SP_9*",
            maxdeg3_random_cubic,
        ),
        claim(
            "12.two-degenerate.into-sp9",
            12,
            "2-degenerate subcubic graphs on at most 9 vertices without a subdivided K_4 map to SP_9",
            two_degenerate_into_sp9,
        ),
        claim(
            "13.k4s-plus.sp9-star-table",
            13,
            "the K4S_PLUS extension table into SP_9* is valid and covering",
            k4s_plus_star,
        ),
        claim(
            "13.k4s-plus.sp9-dagger-table",
            13,
            "the K4S_PLUS extension table into SP_9^dagger is valid and covering",
            k4s_plus_dagger,
        ),
        Claim {
            known_failure: true,
            ..claim(
                "13.k4s-minus.sp9-dagger-table",
                13,
                "the K4S_MINUS extension table into SP_9^dagger is valid and covering",
                k4s_minus_dagger,
            )
        },
        claim("14.oracle.hom", 14, "homomorphism search agrees with brute force", oracle_hom),
        claim(
            "14.oracle.signed-via-double",
            14,
            "signed search agrees with 2-edge-colored search into the double",
            oracle_signed,
        ),
        claim("14.oracle.switching", 14, "switching equivalence agrees with brute force", oracle_switching),
        claim("15.bounds-table", 15, "the bounds table reproduces every cell for k = 1..12", bounds_cells),
    ];
    all.sort_by_key(|c| c.id);
    all
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Outcome of one claim.
#[derive(Debug, Clone)]
pub struct ClaimRun {
    pub claim: Claim,
    pub status: Status,
    pub detail: String,
    pub witness: Option<Value>,
    pub elapsed_ms: u128,
}

/// Run `claims` in parallel; the result follows the input order.
pub fn run(claims: &[Claim], ctx: &Context, heavy: bool) -> Vec<ClaimRun> {
    claims
        .par_iter()
        .map(|&claim| {
            if claim.heavy && !heavy {
                return ClaimRun {
                    claim,
                    status: Status::Skipped,
                    detail: "needs --heavy".into(),
                    witness: None,
                    elapsed_ms: 0,
                };
            }
            let start = std::time::Instant::now();
            let outcome = (claim.check)(ctx);
            let elapsed_ms = start.elapsed().as_millis();
            match outcome {
                Ok(detail) => ClaimRun { claim, status: Status::Pass, detail, witness: None, elapsed_ms },
                Err(f) => ClaimRun { claim, status: Status::Fail, detail: f.message, witness: f.witness, elapsed_ms },
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_numbered() {
        let all = claims();
        let ids: HashSet<&str> = all.iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), all.len());
        for c in &all {
            assert_eq!(c.id[..2].parse::<u32>().unwrap(), c.criterion, "{}", c.id);
        }
        let criteria: HashSet<u32> = all.iter().map(|c| c.criterion).collect();
        assert_eq!(criteria.len(), 15);
    }

    #[test]
    fn corruption_is_noticed() {
        let ctx = Context { seed: 0, corrupt: Some(GadgetId::Candidate5) };
        assert!(small_cliques_into_candidate5(&ctx).is_err() || alt_c6_not_into_candidate5(&ctx).is_err());
        let ctx = Context { seed: 0, corrupt: Some(GadgetId::Sp9Star) };
        assert!(k4s_plus_star(&ctx).is_err());
    }

    #[test]
    fn skipped_without_heavy() {
        let heavy: Vec<Claim> = claims().into_iter().filter(|c| c.heavy).collect();
        let runs = run(&heavy, &Context::new(0), false);
        assert!(runs.iter().all(|r| r.status == Status::Skipped));
    }
}
