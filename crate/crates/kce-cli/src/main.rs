//! Command-line front end for the kce library.
//!
//! File conventions: graphs are PACE-style `.gr`, orderings and colourings
//! are one line of 1-based ids, tree decompositions are PACE `.td`, and
//! betweenness instances are JSON (`{"universe": n, "triples": [[a,b,c]]}`,
//! 0-based). Everything printed or written is 1-based except betweenness
//! instance JSON, which keeps its own 0-based convention.
//!
//! Exit codes: 0 = positive answer (is k-C-E / ordering or clique found),
//! 1 = negative answer with certificate printed, 2 = input error,
//! 3 = search budget exhausted.

use std::fmt::Display;
use std::fs::File;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kce::gadgets::{forbidden_gadget, gamma_canonical_sequence, gamma_gadget};
use kce::io::{self as kio, ParseError};
use kce::reductions::{
    betweenness_ordering_lift, betweenness_to_find, clique_to_find, multicolored_strip,
    noclique_ordering, threecol_ordering_lift, threecol_to_find, BetweennessReduction,
    CliqueFindReduction, ThreeColReduction,
};
use kce::solvers::{
    brute_betweenness, brute_k_coloring, find_disjoint_triple, find_ordering_exact,
    max_clique_exact, max_clique_via_ordering, SearchOutcome, DEFAULT_SEARCH_BUDGET,
};
use kce::treewidth::{exact_treewidth, verify_via_decomposition, TreeDecomposition};
use kce::verify::{estimate_ordered_fraction, verify_pairwise};
use kce::{Coloring, Graph, VertexOrdering};

const EXIT_YES: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "kce",
    version,
    about = "Verify, search, and reduce k-clique-extendible vertex orderings",
    after_help = "Exit codes: 0 positive answer, 1 negative answer, \
                  2 input error, 3 budget exhausted.\n\
                  Set KCE_LOG=debug for diagnostics."
)]
struct Cli {
    /// Worker threads for parallel sections (0 = all cores).
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Print results as one JSON object on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether an ordering of a graph is k-clique-extendible.
    Verify(VerifyArgs),
    /// Search for a k-clique-extendible ordering.
    Find(FindArgs),
    /// Maximum clique of a graph with a verified k-C-E ordering.
    Maxclique(MaxcliqueArgs),
    /// Emit a gadget graph with a role-label sidecar.
    Gadget(GadgetArgs),
    /// Translate an instance of another problem into an ordering instance.
    Reduce(ReduceArgs),
    /// Compute an exact tree decomposition.
    Decomp(DecompArgs),
    /// Estimate how often an induced K-minus is ordered under random
    /// orderings.
    Estimate(EstimateArgs),
    /// Small brute-force oracles.
    #[command(subcommand)]
    Oracle(OracleCmd),
}

#[derive(Args)]
struct VerifyArgs {
    /// Clique parameter (k >= 2).
    #[arg(short, long)]
    k: usize,
    /// Graph file (.gr).
    graph: PathBuf,
    /// Ordering file (one line, 1-based ids).
    ordering: PathBuf,
    /// Verify through this tree decomposition (.td) instead of the pair
    /// scan.
    #[arg(long)]
    td: Option<PathBuf>,
}

#[derive(Args)]
struct FindArgs {
    /// Clique parameter (k >= 2).
    #[arg(short, long)]
    k: usize,
    /// Graph file (.gr).
    graph: PathBuf,
    /// Search-node budget.
    #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
    budget: u64,
    /// Also write the found ordering to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MaxcliqueArgs {
    /// Clique parameter (k >= 2).
    #[arg(short, long)]
    k: usize,
    /// Ordering file; must be a k-C-E ordering of the graph.
    #[arg(long)]
    ordering: PathBuf,
    /// Graph file (.gr).
    graph: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum GadgetKind {
    /// Forbidden gadget: no ordering is k-C-E.
    #[value(name = "F", alias = "f")]
    F,
    /// Endpoint-forcing gadget: k-C-E orderings exist, all with v1 and v2
    /// as the clique endpoints.
    #[value(name = "Gamma", alias = "gamma")]
    Gamma,
}

#[derive(Args)]
struct GadgetArgs {
    /// Which gadget to build.
    kind: GadgetKind,
    /// Gadget parameter (F: k >= 2, Gamma: k >= 3).
    #[arg(short, long)]
    k: usize,
    /// Output prefix; writes <prefix>.gr and <prefix>.json
    /// (default F<k> / Gamma<k>).
    #[arg(long)]
    out: Option<String>,
    /// Also write the canonical k-C-E ordering (Gamma only) to
    /// <prefix>.ord.
    #[arg(long)]
    ordering: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReduceFrom {
    /// k-clique decision; input .gr, requires --k.
    Clique,
    /// Betweenness; input instance JSON, requires --k >= 4.
    Betweenness,
    /// Graph 3-colouring; input .gr.
    #[value(name = "3col")]
    ThreeCol,
    /// Multicoloured clique; input .gr, requires --classes.
    Multicolored,
}

#[derive(Args)]
struct ReduceArgs {
    /// Source problem.
    #[arg(long, value_enum)]
    from: ReduceFrom,
    /// Instance file (.gr, or JSON for betweenness).
    input: PathBuf,
    /// Clique parameter for clique (k >= 2) and betweenness (k >= 4)
    /// reductions.
    #[arg(short, long)]
    k: Option<usize>,
    /// Class-per-vertex file for --from multicolored (one line, 1-based
    /// labels).
    #[arg(long)]
    classes: Option<PathBuf>,
    /// Certificate to lift into an ordering of the output graph, written to
    /// <prefix>.ord: a satisfying order of the universe (betweenness) or a
    /// proper 3-colouring (3col).
    #[arg(long)]
    lift: Option<PathBuf>,
    /// Output prefix; writes <prefix>.gr and <prefix>.trace.json
    /// (default "<input stem>-<from>").
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct DecompArgs {
    /// Graph file (.gr), at most 20 vertices.
    graph: PathBuf,
    /// Write the decomposition here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EstimateArgs {
    /// Clique parameter (k >= 2).
    #[arg(short, long)]
    k: usize,
    /// Graph file (.gr); must contain an induced K-minus on k+1 vertices.
    graph: PathBuf,
    /// Number of random orderings to sample.
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    /// Seed; same seed and flags give byte-identical output.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Exact maximum clique by branch and bound (n <= 20).
    Clique {
        graph: PathBuf,
        /// Exit 0 iff a clique of this size exists.
        #[arg(short, long)]
        k: Option<usize>,
    },
    /// Exhaustive betweenness solver (universe <= 10), instance JSON input.
    Betweenness { instance: PathBuf },
    /// Exhaustive proper 3-colouring (n <= 15).
    #[command(name = "3col")]
    ThreeCol { graph: PathBuf },
    /// Find a disjoint triple of edges in an ordering.
    Triple { graph: PathBuf, ordering: PathBuf },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("KCE_LOG")).init();
    let cli = Cli::parse();
    configure_threads(cli.threads);
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

#[cfg(feature = "parallel")]
fn configure_threads(threads: usize) {
    // threads == 0 keeps rayon's default (all cores).
    if threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            log::warn!("thread pool already configured: {e}");
        }
    }
}

#[cfg(not(feature = "parallel"))]
fn configure_threads(threads: usize) {
    if threads != 1 {
        log::warn!("built without the parallel feature; --threads ignored");
    }
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Verify(a) => cmd_verify(cli, a),
        Command::Find(a) => cmd_find(cli, a),
        Command::Maxclique(a) => cmd_maxclique(cli, a),
        Command::Gadget(a) => cmd_gadget(cli, a),
        Command::Reduce(a) => cmd_reduce(cli, a),
        Command::Decomp(a) => cmd_decomp(cli, a),
        Command::Estimate(a) => cmd_estimate(cli, a),
        Command::Oracle(a) => cmd_oracle(cli, a),
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    kio::read_gr(BufReader::new(file)).map_err(|e| in_file(path, e))
}

fn read_ordering_file(path: &Path, n: usize) -> Result<VertexOrdering> {
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    kio::read_ordering(BufReader::new(file), n).map_err(|e| in_file(path, e))
}

fn read_coloring_file(path: &Path, n: usize) -> Result<Coloring> {
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    kio::read_coloring(BufReader::new(file), n).map_err(|e| in_file(path, e))
}

fn read_td_file(path: &Path) -> Result<(TreeDecomposition, usize)> {
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    kio::read_td(BufReader::new(file)).map_err(|e| in_file(path, e))
}

fn in_file(path: &Path, e: ParseError) -> anyhow::Error {
    anyhow!("{}: {e}", path.display())
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    let mut f =
        File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
    f.write_all(contents.as_bytes())
        .with_context(|| format!("cannot write {}", path.display()))
}

fn ones<'a, I: IntoIterator<Item = &'a usize>>(ids: I) -> Vec<usize> {
    ids.into_iter().map(|&v| v + 1).collect()
}

fn id_line<'a, I: IntoIterator<Item = &'a usize>>(ids: I) -> String {
    ones(ids)
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn emit(cli: &Cli, value: Value, human: impl Display) {
    if cli.json {
        println!("{value}");
    } else {
        let text = human.to_string();
        if !text.is_empty() {
            println!("{text}");
        }
    }
}

fn cmd_verify(cli: &Cli, a: &VerifyArgs) -> Result<u8> {
    let g = read_graph(&a.graph)?;
    let phi = read_ordering_file(&a.ordering, g.n())?;
    let witness = match &a.td {
        Some(td_path) => {
            let (td, n) = read_td_file(td_path)?;
            if n != g.n() {
                bail!(
                    "{}: decomposition declares {} vertices, graph has {}",
                    td_path.display(),
                    n,
                    g.n()
                );
            }
            verify_via_decomposition(&g, a.k, &phi, &td)?
        }
        None => verify_pairwise(&g, a.k, &phi)?,
    };
    match witness {
        None => {
            emit(
                cli,
                json!({"kce": true, "k": a.k}),
                format!("ordering is {}-clique-extendible", a.k),
            );
            Ok(EXIT_YES)
        }
        Some(w) => {
            emit(
                cli,
                json!({"kce": false, "k": a.k, "witness": ones(&w.vertices)}),
                id_line(&w.vertices),
            );
            Ok(EXIT_NO)
        }
    }
}

fn cmd_find(cli: &Cli, a: &FindArgs) -> Result<u8> {
    let g = read_graph(&a.graph)?;
    match find_ordering_exact(&g, a.k, a.budget)? {
        SearchOutcome::Found { ordering, nodes } => {
            if let Some(out) = &a.out {
                write_file(out, &kio::ordering_to_string(&ordering))?;
            }
            emit(
                cli,
                json!({
                    "found": true,
                    "ordering": ones(ordering.sequence()),
                    "nodes": nodes,
                }),
                id_line(ordering.sequence()),
            );
            Ok(EXIT_YES)
        }
        SearchOutcome::Exhausted { nodes } => {
            emit(
                cli,
                json!({"found": false, "exhausted": true, "nodes": nodes}),
                format!(
                    "no {}-clique-extendible ordering exists (search exhausted, {nodes} nodes)",
                    a.k
                ),
            );
            Ok(EXIT_NO)
        }
        SearchOutcome::BudgetExceeded { nodes } => {
            emit(
                cli,
                json!({"found": false, "exhausted": false, "nodes": nodes}),
                format!("budget of {nodes} nodes exhausted before a conclusion"),
            );
            Ok(EXIT_BUDGET)
        }
    }
}

fn cmd_maxclique(cli: &Cli, a: &MaxcliqueArgs) -> Result<u8> {
    let g = read_graph(&a.graph)?;
    let phi = read_ordering_file(&a.ordering, g.n())?;
    let (size, clique) = max_clique_via_ordering(&g, a.k, &phi)?;
    emit(
        cli,
        json!({"size": size, "clique": ones(&clique)}),
        format!("{size}\n{}", id_line(&clique)).trim_end(),
    );
    Ok(EXIT_YES)
}

fn cmd_gadget(cli: &Cli, a: &GadgetArgs) -> Result<u8> {
    let (g, labels, name) = match a.kind {
        GadgetKind::F => {
            let (g, labels) = forbidden_gadget(a.k)?;
            (g, labels, format!("F{}", a.k))
        }
        GadgetKind::Gamma => {
            let (g, labels) = gamma_gadget(a.k)?;
            (g, labels, format!("Gamma{}", a.k))
        }
    };
    let prefix = a.out.clone().unwrap_or(name);
    let gr_path = format!("{prefix}.gr");
    let labels_path = format!("{prefix}.json");
    write_file(Path::new(&gr_path), &kio::gr_to_string(&g))?;
    write_file(
        Path::new(&labels_path),
        &format!("{:#}\n", kio::labels_to_json(&labels)),
    )?;
    let mut ord_path: Option<String> = None;
    if a.ordering {
        if matches!(a.kind, GadgetKind::F) {
            bail!("the forbidden gadget has no k-C-E ordering to emit");
        }
        let seq = gamma_canonical_sequence(&labels)?;
        let phi = VertexOrdering::from_sequence(seq)?;
        let path = format!("{prefix}.ord");
        write_file(Path::new(&path), &kio::ordering_to_string(&phi))?;
        ord_path = Some(path);
    }
    emit(
        cli,
        json!({
            "graph": gr_path,
            "labels": labels_path,
            "ordering": ord_path,
            "n": g.n(),
            "m": g.edge_count(),
        }),
        {
            let mut lines = vec![format!("wrote {gr_path} ({} vertices, {} edges)", g.n(), g.edge_count())];
            lines.push(format!("wrote {labels_path}"));
            if let Some(p) = &ord_path {
                lines.push(format!("wrote {p}"));
            }
            lines.join("\n")
        },
    );
    Ok(EXIT_YES)
}

fn require_k(a: &ReduceArgs) -> Result<usize> {
    a.k.ok_or_else(|| anyhow!("--from {} requires --k", from_name(a.from)))
}

fn from_name(f: ReduceFrom) -> &'static str {
    match f {
        ReduceFrom::Clique => "clique",
        ReduceFrom::Betweenness => "betweenness",
        ReduceFrom::ThreeCol => "3col",
        ReduceFrom::Multicolored => "multicolored",
    }
}

fn output_prefix(a: &ReduceArgs) -> String {
    a.out.clone().unwrap_or_else(|| {
        let stem = a
            .input
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "instance".to_string());
        format!("{stem}-{}", from_name(a.from))
    })
}

fn clique_trace(out: &CliqueFindReduction) -> Value {
    let pairs: serde_json::Map<String, Value> = out
        .pair_vertices
        .iter()
        .map(|(&(i, j), &v)| (format!("{i},{j}"), json!(v + 1)))
        .collect();
    json!({
        "reduction": "clique_to_find",
        "k": out.k,
        "source_vertices": ones(&out.source_vertices),
        "clique_vertices": ones(&out.clique_vertices),
        "pair_vertices": pairs,
    })
}

fn betweenness_trace(out: &BetweennessReduction) -> Value {
    let gadgets: Vec<Value> = out
        .triples
        .iter()
        .zip(&out.gadgets)
        .map(|(&(x, y, z), labels)| {
            json!({
                "triple": [x + 1, y + 1, z + 1],
                "labels": kio::labels_to_json(labels),
            })
        })
        .collect();
    json!({
        "reduction": "betweenness_to_find",
        "k": out.k,
        "universe_vertices": ones(&(0..out.universe).collect::<Vec<_>>()),
        "gadgets": gadgets,
    })
}

fn threecol_trace(out: &ThreeColReduction) -> Value {
    let items: Vec<Value> = out
        .edge_items
        .iter()
        .map(|it| {
            json!({
                "edge": [it.edge.0 + 1, it.edge.1 + 1],
                "f": ones(&it.f),
                "t": ones(&it.t),
            })
        })
        .collect();
    json!({
        "reduction": "threecol_to_find",
        "k": out.k,
        "source_vertices": ones(&(0..out.source.n()).collect::<Vec<_>>()),
        "blocks": {
            "a": ones(&out.a),
            "b": ones(&out.b),
            "c": ones(&out.c),
            "d": ones(&out.d),
        },
        "edge_items": items,
    })
}

fn cmd_reduce(cli: &Cli, a: &ReduceArgs) -> Result<u8> {
    let prefix = output_prefix(a);
    let gr_path = format!("{prefix}.gr");
    let trace_path = format!("{prefix}.trace.json");
    let ord_path = format!("{prefix}.ord");
    let mut wrote_ord = false;

    let (graph, trace) = match a.from {
        ReduceFrom::Clique => {
            let k = require_k(a)?;
            let g = read_graph(&a.input)?;
            let out = clique_to_find(&g, k)?;
            // The certificate direction needs no input: the block ordering
            // is k-C-E exactly when the source has no k-clique.
            write_file(
                Path::new(&ord_path),
                &kio::ordering_to_string(&noclique_ordering(&out)),
            )?;
            wrote_ord = true;
            if a.lift.is_some() {
                bail!("--from clique emits its ordering unconditionally; --lift takes no file");
            }
            (out.graph.clone(), clique_trace(&out))
        }
        ReduceFrom::Betweenness => {
            let k = require_k(a)?;
            let file = File::open(&a.input)
                .with_context(|| format!("cannot open {}", a.input.display()))?;
            let inst =
                kio::read_betweenness_json(BufReader::new(file)).map_err(|e| in_file(&a.input, e))?;
            let out = betweenness_to_find(&inst, k)?;
            if let Some(cert) = &a.lift {
                let psi = read_ordering_file(cert, out.universe)?;
                let phi = betweenness_ordering_lift(&out, psi.sequence())?;
                write_file(Path::new(&ord_path), &kio::ordering_to_string(&phi))?;
                wrote_ord = true;
            }
            (out.graph.clone(), betweenness_trace(&out))
        }
        ReduceFrom::ThreeCol => {
            let g = read_graph(&a.input)?;
            let out = threecol_to_find(&g)?;
            if let Some(cert) = &a.lift {
                let col = read_coloring_file(cert, g.n())?;
                let phi = threecol_ordering_lift(&out, &col)?;
                write_file(Path::new(&ord_path), &kio::ordering_to_string(&phi))?;
                wrote_ord = true;
            }
            (out.graph.clone(), threecol_trace(&out))
        }
        ReduceFrom::Multicolored => {
            let g = read_graph(&a.input)?;
            let classes_path = a
                .classes
                .as_ref()
                .ok_or_else(|| anyhow!("--from multicolored requires --classes"))?;
            let col = read_coloring_file(classes_path, g.n())?;
            let classes = col.classes();
            let (stripped, phi) = multicolored_strip(&g, &classes)?;
            write_file(Path::new(&ord_path), &kio::ordering_to_string(&phi))?;
            wrote_ord = true;
            let trace = json!({
                "reduction": "multicolored_strip",
                "k": classes.len(),
                "classes": classes.iter().map(|c| ones(c)).collect::<Vec<_>>(),
            });
            (stripped, trace)
        }
    };

    write_file(Path::new(&gr_path), &kio::gr_to_string(&graph))?;
    write_file(Path::new(&trace_path), &format!("{trace:#}\n"))?;
    emit(
        cli,
        json!({
            "graph": gr_path,
            "trace": trace_path,
            "ordering": wrote_ord.then_some(&ord_path),
            "n": graph.n(),
            "m": graph.edge_count(),
        }),
        {
            let mut lines = vec![format!(
                "wrote {gr_path} ({} vertices, {} edges)",
                graph.n(),
                graph.edge_count()
            )];
            lines.push(format!("wrote {trace_path}"));
            if wrote_ord {
                lines.push(format!("wrote {ord_path}"));
            }
            lines.join("\n")
        },
    );
    Ok(EXIT_YES)
}

fn cmd_decomp(cli: &Cli, a: &DecompArgs) -> Result<u8> {
    let g = read_graph(&a.graph)?;
    let (width, td) = exact_treewidth(&g)?;
    let text = kio::td_to_string(&td, g.n());
    if let Some(out) = &a.out {
        write_file(out, &text)?;
    }
    if cli.json {
        let mut v = json!({
            "width": width,
            "bags": td.n_bags(),
            "out": a.out.as_ref().map(|p| p.display().to_string()),
        });
        if a.out.is_none() {
            v["td"] = json!(text);
        }
        println!("{v}");
    } else {
        println!("treewidth {width}");
        match &a.out {
            Some(out) => println!("wrote {}", out.display()),
            None => print!("{text}"),
        }
    }
    Ok(EXIT_YES)
}

fn cmd_estimate(cli: &Cli, a: &EstimateArgs) -> Result<u8> {
    let g = read_graph(&a.graph)?;
    let est = estimate_ordered_fraction(&g, a.k, a.trials, a.seed)?;
    emit(
        cli,
        json!({
            "fraction": est.mean_fraction,
            "subgraphs": est.subgraph_count,
            "trials": est.trials,
            "seed": a.seed,
        }),
        format!(
            "ordered fraction {:.6} ({} induced K-minus across {} trials)",
            est.mean_fraction, est.subgraph_count, est.trials
        ),
    );
    Ok(EXIT_YES)
}

fn cmd_oracle(cli: &Cli, cmd: &OracleCmd) -> Result<u8> {
    match cmd {
        OracleCmd::Clique { graph, k } => {
            let g = read_graph(graph)?;
            let (size, clique) = max_clique_exact(&g)?;
            let hit = k.map_or(true, |k| size >= k);
            emit(
                cli,
                json!({"size": size, "clique": ones(&clique), "k": k}),
                format!("{size}\n{}", id_line(&clique)).trim_end(),
            );
            Ok(if hit { EXIT_YES } else { EXIT_NO })
        }
        OracleCmd::Betweenness { instance } => {
            let file = File::open(instance)
                .with_context(|| format!("cannot open {}", instance.display()))?;
            let inst =
                kio::read_betweenness_json(BufReader::new(file)).map_err(|e| in_file(instance, e))?;
            match brute_betweenness(&inst)? {
                Some(order) => {
                    emit(
                        cli,
                        json!({"satisfiable": true, "order": ones(&order)}),
                        id_line(&order),
                    );
                    Ok(EXIT_YES)
                }
                None => {
                    emit(cli, json!({"satisfiable": false}), "unsatisfiable");
                    Ok(EXIT_NO)
                }
            }
        }
        OracleCmd::ThreeCol { graph } => {
            let g = read_graph(graph)?;
            match brute_k_coloring(&g, 3)? {
                Some(col) => {
                    emit(
                        cli,
                        json!({
                            "colorable": true,
                            "classes": col
                                .class_indices()
                                .iter()
                                .map(|&c| c + 1)
                                .collect::<Vec<_>>(),
                        }),
                        kio::coloring_to_string(&col).trim_end(),
                    );
                    Ok(EXIT_YES)
                }
                None => {
                    emit(cli, json!({"colorable": false}), "not 3-colourable");
                    Ok(EXIT_NO)
                }
            }
        }
        OracleCmd::Triple { graph, ordering } => {
            let g = read_graph(graph)?;
            let phi = read_ordering_file(ordering, g.n())?;
            match find_disjoint_triple(&g, &phi)? {
                Some(edges) => {
                    let flat: Vec<Vec<usize>> =
                        edges.iter().map(|&(u, v)| vec![u + 1, v + 1]).collect();
                    emit(
                        cli,
                        json!({"triple": flat}),
                        edges
                            .iter()
                            .map(|&(u, v)| format!("{} {}", u + 1, v + 1))
                            .collect::<Vec<_>>()
                            .join("  "),
                    );
                    Ok(EXIT_YES)
                }
                None => {
                    emit(cli, json!({"triple": null}), "no disjoint triple");
                    Ok(EXIT_NO)
                }
            }
        }
    }
}
