use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context as _, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use sghom::analysis::{
    automorphisms, check_p22_star, check_p_kn, is_2ec_clique, is_antiautomorphic, is_kn_transitive, is_signed_clique,
    max_p_n, PropertyReport, DEFAULT_AUTOMORPHISM_LIMIT, DEFAULT_VERTEX_LIMIT,
};
use sghom::constructions::{
    build_2ec_clique, build_gadget, build_plus2, build_rho, build_signed_clique, build_sp, build_tr, GadgetId,
    LabeledTarget,
};
use sghom::hom::{
    chromatic_2ec, chromatic_signed, color_maxdeg2, color_maxdeg3, find_embedding, find_hom, greedy_degenerate_color,
    Homomorphism,
};
use sghom::sgraph::{export_dot_labeled, read_sg, switch, switch_equivalent, write_sg, SignedGraph, SwitchSet};
use sghom::Mode;
use sghom_cli::report::Report;
use sghom_cli::verify::{self, Context};

/// Caps the number of worker threads.
const THREADS_VAR: &str = "SGHOM_THREADS";

#[derive(Parser)]
#[command(name = "sghom", version, about = "Homomorphisms of signed and 2-edge-colored graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a target graph or catalog gadget as .sg
    Construct {
        #[command(subcommand)]
        what: Construct,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check a structural property; exit 0 if it holds, 1 if not
    Check {
        #[command(subcommand)]
        what: Check,
    },
    /// Search for a homomorphism g -> t; exit 0 if found, 1 if none
    Hom {
        #[arg(short, long)]
        g: PathBuf,
        #[arg(short, long)]
        t: PathBuf,
        #[arg(long, default_value = "2ec")]
        mode: Mode,
        /// Require an injective map (2-edge-colored only)
        #[arg(long)]
        injective: bool,
    },
    /// Exact chromatic number by trying every complete target
    Chromatic {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, default_value = "2ec")]
        mode: Mode,
        /// Largest target order to try
        #[arg(long, default_value_t = 6)]
        max: usize,
    },
    /// Switch a signed graph at a vertex set, or test switching equivalence
    Switch {
        #[arg(short, long)]
        input: PathBuf,
        /// Comma-separated vertices to switch
        #[arg(long, value_delimiter = ',', conflicts_with = "with")]
        set: Vec<usize>,
        /// Report whether INPUT switches to this graph, and how
        #[arg(long)]
        with: Option<PathBuf>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Color with one of the constructive algorithms
    Color {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        algorithm: Algorithm,
        #[arg(long, default_value = "2ec")]
        mode: Mode,
        /// Target for the degenerate greedy
        #[arg(short, long, required_if_eq("algorithm", "greedy"))]
        target: Option<PathBuf>,
        /// Degree bound for the degenerate greedy
        #[arg(long, required_if_eq("algorithm", "greedy"))]
        k: Option<usize>,
    },
    /// Run every machine-checkable claim and report; exit 1 on any failure
    VerifyPaper {
        /// Include the long-running claims
        #[arg(long)]
        heavy: bool,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Directory for report.jsonl, summary.txt and failure witnesses
        #[arg(long)]
        out: Option<PathBuf>,
        /// Only claims whose id starts with this prefix
        #[arg(long)]
        only: Option<String>,
        /// Deliberately corrupt a catalog graph (harness self-test)
        #[arg(long, hide = true)]
        corrupt: Option<GadgetId>,
    },
}

#[derive(Args)]
struct OutputArgs {
    /// Write the .sg here instead of stdout
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    /// Also write a DOT rendering
    #[arg(long, global = true)]
    dot: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Construct {
    /// Signed Paley graph on GF(q)
    Sp {
        #[arg(long)]
        q: u64,
    },
    /// Antitwinned double of a graph
    Rho {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Antitwinned double of SP_q
    Tr {
        #[arg(long)]
        q: u64,
    },
    /// Add antitwin copies x', y' of two adjacent vertices
    Plus2 {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        x: usize,
        #[arg(long)]
        y: usize,
    },
    /// k-regular 2-edge-colored clique
    Clique2ec {
        #[arg(long)]
        k: usize,
    },
    /// k-regular signed clique
    Cliquesigned {
        #[arg(long)]
        k: usize,
    },
    /// A graph from the catalog, e.g. SP9_STAR
    Gadget {
        #[arg(long)]
        name: GadgetId,
    },
}

#[derive(Subcommand)]
enum Check {
    /// Property P_{k,n}; without --n, report the largest n
    Property {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Property P*_{2,2} of a complete graph
    P22Star {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Whether the graph is a clique in the given sense
    Clique {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, default_value = "2ec")]
        mode: Mode,
    },
    /// Transitivity on ordered n-cliques (1 = vertices, 2 = edges)
    Transitive {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Existence of a sign-swapping automorphism
    Antiautomorphic {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Automorphism group order and generators
    Automorphisms {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Every property above that applies
    All {
        #[arg(short, long)]
        input: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Algorithm {
    /// Maximum degree 2, into SP_5/SB/TARGET6 or SIGNED_T
    Maxdeg2,
    /// Maximum degree 3, into SP_9*
    Maxdeg3,
    /// Degenerate greedy into --target
    Greedy,
}

fn read_graph(path: &Path) -> Result<SignedGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    read_sg(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

fn status(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn write_output(t: &LabeledTarget, out: &OutputArgs) -> Result<()> {
    let mut text = write_sg(&t.graph);
    if t.labels.iter().enumerate().any(|(v, l)| *l != v.to_string()) {
        for (v, l) in t.labels.iter().enumerate() {
            text.push_str(&format!("# label {} {}\n", v, l));
        }
    }
    let g = &t.graph;
    let negative = g.edges().filter(|e| !e.2.is_pos()).count();
    let summary = format!(
        "{} vertices, {} edges ({} positive, {} negative)",
        g.order(),
        g.edge_count(),
        g.edge_count() - negative,
        negative
    );
    match &out.output {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
            println!("{}: {}", path.display(), summary);
        }
        None => {
            print!("{}", text);
            eprintln!("{}", summary);
        }
    }
    if let Some(path) = &out.dot {
        fs::write(path, export_dot_labeled(g, Some(&t.labels)))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn construct(what: Construct, out: &OutputArgs) -> Result<ExitCode> {
    let target = match what {
        Construct::Sp { q } => build_sp(q)?,
        Construct::Rho { input } => build_rho(&LabeledTarget::unlabeled(read_graph(&input)?)),
        Construct::Tr { q } => build_tr(q)?,
        Construct::Plus2 { input, x, y } => build_plus2(&LabeledTarget::unlabeled(read_graph(&input)?), x, y)?,
        Construct::Clique2ec { k } => LabeledTarget::unlabeled(build_2ec_clique(k)?),
        Construct::Cliquesigned { k } => LabeledTarget::unlabeled(build_signed_clique(k)?),
        Construct::Gadget { name } => build_gadget(name),
    };
    write_output(&target, out)?;
    Ok(ExitCode::SUCCESS)
}

fn report(r: PropertyReport) -> Result<bool> {
    emit(&r)?;
    Ok(r.holds)
}

fn check(what: Check) -> Result<ExitCode> {
    let holds = match what {
        Check::Property { input, k, n } => {
            let g = read_graph(&input)?;
            match n {
                Some(n) => report(check_p_kn(&g, k, n)?)?,
                None => {
                    let max = max_p_n(&g, k)?;
                    emit(&json!({ "kind": "max_p_n", "k": k, "max_n": max }))?;
                    true
                }
            }
        }
        Check::P22Star { input } => report(check_p22_star(&read_graph(&input)?)?)?,
        Check::Clique { input, mode } => {
            let g = read_graph(&input)?;
            report(match mode {
                Mode::TwoEdgeColored => is_2ec_clique(&g),
                Mode::Signed => is_signed_clique(&g),
            })?
        }
        Check::Transitive { input, n } => report(is_kn_transitive(&read_graph(&input)?, n)?)?,
        Check::Antiautomorphic { input } => report(is_antiautomorphic(&read_graph(&input)?)?)?,
        Check::Automorphisms { input } => {
            let group = automorphisms(&read_graph(&input)?, DEFAULT_VERTEX_LIMIT, DEFAULT_AUTOMORPHISM_LIMIT)?;
            emit(&group)?;
            true
        }
        Check::All { input } => {
            let g = read_graph(&input)?;
            let mut all = true;
            for k in 1..=3.min(g.order()) {
                emit(&json!({ "kind": "max_p_n", "k": k, "max_n": max_p_n(&g, k)? }))?;
            }
            if g.is_complete() {
                all &= report(check_p22_star(&g)?)?;
            }
            all &= report(is_2ec_clique(&g))?;
            all &= report(is_signed_clique(&g))?;
            if g.order() <= DEFAULT_VERTEX_LIMIT {
                for n in 1..=2 {
                    all &= report(is_kn_transitive(&g, n)?)?;
                }
                all &= report(is_antiautomorphic(&g)?)?;
            }
            all
        }
    };
    Ok(status(holds))
}

fn hom(g: &Path, t: &Path, mode: Mode, injective: bool) -> Result<ExitCode> {
    let (g, t) = (read_graph(g)?, read_graph(t)?);
    let found: Option<Homomorphism> = if injective {
        if mode != Mode::TwoEdgeColored {
            bail!("--injective is only supported with --mode 2ec");
        }
        find_embedding(&g, &t).map(Homomorphism::two_edge_colored)
    } else {
        find_hom(&g, &t, mode)
    };
    emit(&json!({ "found": found.is_some(), "mode": mode, "homomorphism": found }))?;
    Ok(status(found.is_some()))
}

fn chromatic(input: &Path, mode: Mode, max: usize) -> Result<ExitCode> {
    let g = read_graph(input)?;
    let result = match mode {
        Mode::TwoEdgeColored => chromatic_2ec(&g, max),
        Mode::Signed => chromatic_signed(&g, max),
    };
    match result {
        Ok(r) => {
            emit(&json!({
                "value": r.value,
                "mode": mode,
                "target": write_sg(&r.target),
                "homomorphism": r.homomorphism,
                "per_order_log": r.per_order_log,
            }))?;
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => {
            emit(&json!({ "value": null, "mode": mode, "exceeds": e.max_order, "per_order_log": e.per_order_log }))?;
            Ok(ExitCode::from(1))
        }
    }
}

fn switch_cmd(input: &Path, set: Vec<usize>, with: Option<PathBuf>, out: &OutputArgs) -> Result<ExitCode> {
    let g = read_graph(input)?;
    match with {
        Some(other) => {
            let h = read_graph(&other)?;
            let witness = switch_equivalent(&g, &h);
            emit(&json!({ "equivalent": witness.is_some(), "switch_set": witness }))?;
            Ok(status(witness.is_some()))
        }
        None => {
            let switched = switch(&g, &SwitchSet::new(set))?;
            write_output(&LabeledTarget::unlabeled(switched), out)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn color(
    input: &Path,
    algorithm: Algorithm,
    mode: Mode,
    target: Option<PathBuf>,
    k: Option<usize>,
) -> Result<ExitCode> {
    let g = read_graph(input)?;
    match algorithm {
        Algorithm::Maxdeg2 => {
            let c = color_maxdeg2(&g, mode)?;
            emit(&json!({ "target": format!("{:?}", c.target), "homomorphism": c.hom }))?;
            Ok(ExitCode::SUCCESS)
        }
        Algorithm::Maxdeg3 => {
            if mode != Mode::TwoEdgeColored {
                bail!("the maximum degree 3 coloring is for 2-edge-colored graphs");
            }
            let hom = color_maxdeg3(&g)?;
            emit(&json!({ "target": GadgetId::Sp9Star, "homomorphism": hom }))?;
            Ok(ExitCode::SUCCESS)
        }
        Algorithm::Greedy => {
            let (target, k) = (target.expect("required by clap"), k.expect("required by clap"));
            let t = read_graph(&target)?;
            let hom = greedy_degenerate_color(&g, &t, k)?;
            emit(&json!({ "found": hom.is_some(), "homomorphism": hom }))?;
            Ok(status(hom.is_some()))
        }
    }
}

fn verify_paper(
    heavy: bool,
    seed: u64,
    out: Option<PathBuf>,
    only: Option<String>,
    corrupt: Option<GadgetId>,
) -> Result<ExitCode> {
    let ctx = Context { seed, corrupt };
    let claims: Vec<_> =
        verify::claims().into_iter().filter(|c| only.as_deref().is_none_or(|p| c.id.starts_with(p))).collect();
    if claims.is_empty() {
        bail!("no claim id starts with {:?}", only.unwrap_or_default());
    }
    let runs = verify::run(&claims, &ctx, heavy);
    let witness_dir = out.as_ref().map(|d| d.join("witnesses"));
    let report = Report::new(runs, witness_dir.as_deref())?;
    let lines = report.to_json_lines();
    let summary = report.summary();
    print!("{}", lines);
    eprint!("{}", summary);
    if let Some(dir) = &out {
        fs::create_dir_all(dir)?;
        fs::write(dir.join("report.jsonl"), &lines)?;
        fs::write(dir.join("summary.txt"), &summary)?;
    }
    Ok(status(report.failures() == 0))
}

fn configure_threads() -> Result<()> {
    if let Ok(value) = std::env::var(THREADS_VAR) {
        let n: usize = value.parse().with_context(|| format!("{} must be a positive integer", THREADS_VAR))?;
        rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global()?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    configure_threads()?;
    match cli.command {
        Command::Construct { what, out } => construct(what, &out),
        Command::Check { what } => check(what),
        Command::Hom { g, t, mode, injective } => hom(&g, &t, mode, injective),
        Command::Chromatic { input, mode, max } => chromatic(&input, mode, max),
        Command::Switch { input, set, with, out } => switch_cmd(&input, set, with, &out),
        Command::Color { input, algorithm, mode, target, k } => color(&input, algorithm, mode, target, k),
        Command::VerifyPaper { heavy, seed, out, only, corrupt } => verify_paper(heavy, seed, out, only, corrupt),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(2)
        }
    }
}
