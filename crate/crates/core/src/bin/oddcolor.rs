//! Command-line front end: instance generation, the coloring algorithms
//! with built-in re-verification, independent checking, exact solvers, and
//! the two exact-scan experiment drivers.
//!
//! Exit codes: 0 success, 1 verification failure (a bug signal), 2 usage,
//! parse, or budget problems.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use oddcolor::chord::{generate_gn, ChordDiagram};
use oddcolor::exact::{
    exact_chi_io, exact_chi_o, exact_fundcut_min, is_odd_coloring, is_one_sided_odd,
    problem51_scan, problem52_scan, SearchBudget,
};
use oddcolor::fundcut::{
    circle98, fund_cut_color_with, verify_fundcut_coloring, StarForestMethod,
};
use oddcolor::gen::{random_bipartite, random_planar_2ec, scan_instance};
use oddcolor::graph::{BipartiteGraph, Graph};
use oddcolor::io::{
    parse_edge_colors, parse_edge_ids, parse_embedding, parse_graph, parse_multigraph,
    parse_vertex_colors, write_edge_result, write_embedding, write_graph, write_scan_report,
    write_vertex_result,
};
use oddcolor::ncomplexity::{eta, eta_sampled};
use oddcolor::odd_color::{greedy_proper_color, improper_odd_color, one_sided_odd_color,
    product_odd_color};
use oddcolor::{Error, Result};

#[derive(Parser)]
#[command(name = "oddcolor", version, about = "Odd colorings, fundamental graphs, and fundamental-cut edge colorings")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// RNG seed for anything randomized
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Write results here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Node budget for exact searches
    #[arg(long, global = true)]
    budget_nodes: Option<u64>,

    /// Time budget (seconds) for exact searches
    #[arg(long, global = true)]
    budget_seconds: Option<f64>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate instance files
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Run a coloring algorithm and re-verify its output
    Color {
        #[command(subcommand)]
        algorithm: ColorCmd,
    },
    /// Check a coloring against the independent verifier
    Check {
        /// Graph (or multigraph, with --tree) file
        graph: PathBuf,
        /// Vertex colors, one per vertex in id order
        #[arg(long, conflicts_with_all = ["tree", "edge_colors"])]
        colors: Option<PathBuf>,
        /// Skip the properness requirement
        #[arg(long)]
        improper: bool,
        /// Spanning tree edge ids (switches to fundamental-cut checking)
        #[arg(long, requires = "edge_colors")]
        tree: Option<PathBuf>,
        /// `edge color` lines for the non-tree edges
        #[arg(long, requires = "tree")]
        edge_colors: Option<PathBuf>,
    },
    /// Exact minima by budgeted exhaustive search
    Exact {
        #[command(subcommand)]
        what: ExactCmd,
    },
    /// Neighborhood complexity of a graph
    Eta {
        graph: PathBuf,
        /// Window size m
        #[arg(long)]
        m: usize,
        /// Sample windows instead of enumerating all of them
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Odd chromatic number of fundamental graphs over a seeded small corpus
    Scan51 {
        #[arg(long, default_value_t = 12)]
        count: usize,
    },
    /// Minimum fundamental-cut palette over the same corpus
    Scan52 {
        #[arg(long, default_value_t = 12)]
        count: usize,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// The circle graph G_n: one chord per unordered pair from n clusters
    Gn { n: usize },
    /// Random 2-edge-connected planar embedding (stacked triangulation
    /// minus a few edges)
    Planar {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        deletions: usize,
    },
    /// Intersection graph of a chord diagram
    Chord {
        /// Double-occurrence word: digits, or comma/space-separated labels
        #[arg(long)]
        word: String,
    },
    /// Random bipartite graph; X side is 0..nx
    RandomBipartite {
        #[arg(long)]
        nx: usize,
        #[arg(long)]
        ny: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
    },
}

#[derive(Subcommand)]
enum ColorCmd {
    /// Odd coloring, properness not required
    ImproperOdd { graph: PathBuf },
    /// Color the Y side so every X vertex sees an odd color; X is 0..nx
    OneSided {
        graph: PathBuf,
        #[arg(long)]
        nx: usize,
    },
    /// Proper odd coloring as (greedy proper) × (improper odd)
    Product { graph: PathBuf },
    /// Edge coloring odd on every fundamental cut
    Fundcut {
        graph: PathBuf,
        #[arg(long)]
        tree: PathBuf,
        /// Star-forest method: treewidth2 or generic
        #[arg(long)]
        method: Option<String>,
    },
    /// Proper odd coloring of the fundamental graph of an embedded graph,
    /// 98 colors or fewer
    Circle98 {
        embedding: PathBuf,
        #[arg(long)]
        tree: PathBuf,
    },
}

#[derive(Subcommand)]
enum ExactCmd {
    /// Proper odd chromatic number
    ChiO { graph: PathBuf },
    /// Improper odd chromatic number
    ChiIo { graph: PathBuf },
    /// Minimum palette for a fundamental-cut-odd edge coloring
    FundcutMin {
        graph: PathBuf,
        #[arg(long)]
        tree: PathBuf,
    },
}

fn main() {
    let cli = Cli::parse();
    let budget = budget_of(&cli);
    let out = cli.out.clone();
    match run(cli, budget) {
        Ok(Outcome { text, code }) => {
            if let Some(path) = out {
                if let Err(e) = std::fs::write(&path, &text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    std::process::exit(2);
                }
            } else {
                print!("{text}");
            }
            std::process::exit(code);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(match e {
                Error::Internal(_) => 1,
                _ => 2,
            });
        }
    }
}

struct Outcome {
    text: String,
    code: i32,
}

fn ok(text: String) -> Result<Outcome> {
    Ok(Outcome { text, code: 0 })
}

fn budget_of(cli: &Cli) -> SearchBudget {
    let mut b = SearchBudget::default();
    if let Some(n) = cli.budget_nodes {
        b.max_nodes = n;
    }
    if let Some(s) = cli.budget_seconds {
        b.max_seconds = s;
    }
    b
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| {
        Error::Parse(format!("cannot read {}: {e}", path.display()))
    })
}

/// Commands that only need the graph also take embedding files; the
/// rotation lines are parsed (and validated) but dropped.
fn multigraph_or_embedding(text: &str) -> Result<oddcolor::graph::Multigraph> {
    match parse_multigraph(text) {
        Ok(g) => Ok(g),
        Err(first) => parse_embedding(text)
            .map(|emb| emb.graph().clone())
            .map_err(|_| first),
    }
}

fn run(cli: Cli, budget: SearchBudget) -> Result<Outcome> {
    match cli.command {
        Cmd::Gen { kind } => gen(kind, cli.seed),
        Cmd::Color { algorithm } => color(algorithm, cli.seed),
        Cmd::Check { graph, colors, improper, tree, edge_colors } => {
            check(&graph, colors.as_deref(), improper, tree.as_deref(), edge_colors.as_deref())
        }
        Cmd::Exact { what } => exact(what, budget),
        Cmd::Eta { graph, m, samples } => {
            let g = parse_graph(&read(&graph)?)?;
            match samples {
                None => ok(format!("eta({m}) = {}\n", eta(&g, m)?)),
                Some(s) => ok(format!(
                    "eta({m}) >= {} (sampled, {s} windows)\n",
                    eta_sampled(&g, m, s, cli.seed)?
                )),
            }
        }
        Cmd::Scan51 { count } => {
            let corpus = scan_corpus(count, cli.seed)?;
            ok(write_scan_report(&problem51_scan(&corpus, budget)?))
        }
        Cmd::Scan52 { count } => {
            let corpus = scan_corpus(count, cli.seed)?;
            ok(write_scan_report(&problem52_scan(&corpus, budget)?))
        }
    }
}

fn scan_corpus(count: usize, seed: u64) -> Result<Vec<(String, oddcolor::graph::Multigraph, Vec<usize>)>> {
    (0..count).map(|i| scan_instance(i, seed)).collect()
}

fn gen(kind: GenKind, seed: u64) -> Result<Outcome> {
    match kind {
        GenKind::Gn { n } => {
            let inst = generate_gn(n)?;
            ok(write_graph(inst.graph()))
        }
        GenKind::Planar { n, deletions } => {
            let emb = random_planar_2ec(n, deletions, seed)?;
            ok(write_embedding(&emb))
        }
        GenKind::Chord { word } => {
            let cd = parse_word_flag(&word)?;
            ok(write_graph(&cd.intersection_graph()))
        }
        GenKind::RandomBipartite { nx, ny, p } => {
            let bip = random_bipartite(nx, ny, p, seed)?;
            let mut text = format!("# bipartite, X = 0..{nx}\n");
            text.push_str(&write_graph(bip.graph()));
            ok(text)
        }
    }
}

fn parse_word_flag(word: &str) -> Result<ChordDiagram> {
    let labels: Vec<usize> = if word.chars().all(|c| c.is_ascii_digit()) {
        word.chars().map(|c| c.to_digit(10).unwrap() as usize).collect()
    } else {
        word.split([',', ' '])
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Parse(format!("bad chord label `{t}`")))
            })
            .collect::<Result<_>>()?
    };
    ChordDiagram::from_word(&labels)
}

fn bipartite_of(g: Graph, nx: usize) -> Result<BipartiteGraph> {
    if nx == 0 || nx >= g.n() {
        return Err(Error::InvalidInput(format!(
            "--nx {nx} must split the {} vertices into two nonempty sides",
            g.n()
        )));
    }
    let in_x: Vec<bool> = (0..g.n()).map(|v| v < nx).collect();
    BipartiteGraph::new(g, &in_x)
}

fn color(alg: ColorCmd, _seed: u64) -> Result<Outcome> {
    match alg {
        ColorCmd::ImproperOdd { graph } => {
            let g = parse_graph(&read(&graph)?)?;
            let res = improper_odd_color(&g)?;
            let (valid, fail) = is_odd_coloring(&g, &res.colors, false)?;
            verdict(write_vertex_result(&res), valid, fail)
        }
        ColorCmd::OneSided { graph, nx } => {
            let g = parse_graph(&read(&graph)?)?;
            let bip = bipartite_of(g, nx)?;
            let res = one_sided_odd_color(&bip)?;
            let (valid, fail) = is_one_sided_odd(&bip, &res.colors)?;
            verdict(write_vertex_result(&res), valid, fail)
        }
        ColorCmd::Product { graph } => {
            let g = parse_graph(&read(&graph)?)?;
            let proper = greedy_proper_color(&g);
            let improper = improper_odd_color(&g)?;
            let res = product_odd_color(&g, &proper, &improper.colors)?;
            let (valid, fail) = is_odd_coloring(&g, &res.colors, true)?;
            verdict(write_vertex_result(&res), valid, fail)
        }
        ColorCmd::Fundcut { graph, tree, method } => {
            let g = multigraph_or_embedding(&read(&graph)?)?;
            let t = parse_edge_ids(&read(&tree)?)?;
            let method = match method.as_deref() {
                None => None,
                Some("treewidth2") => Some(StarForestMethod::Treewidth2),
                Some("generic") => Some(StarForestMethod::Generic),
                Some(other) => {
                    return Err(Error::InvalidInput(format!(
                        "unknown method `{other}` (expected treewidth2 or generic)"
                    )))
                }
            };
            let res = fund_cut_color_with(&g, &t, method)?;
            let (valid, fail) = verify_fundcut_coloring(&g, &t, &res.colors)?;
            verdict(write_edge_result(&res), valid, fail)
        }
        ColorCmd::Circle98 { embedding, tree } => {
            let emb = parse_embedding(&read(&embedding)?)?;
            let t = parse_edge_ids(&read(&tree)?)?;
            let (fund, res) = circle98(&emb, &t)?;
            let (valid, fail) = is_odd_coloring(fund.bipartite().graph(), &res.colors, true)?;
            verdict(write_vertex_result(&res), valid, fail)
        }
    }
}

fn verdict(text: String, valid: bool, fail: Option<usize>) -> Result<Outcome> {
    if valid {
        ok(text)
    } else {
        Ok(Outcome {
            text: format!("verification failed at {}\n", fail.unwrap()),
            code: 1,
        })
    }
}

fn check(
    graph: &Path,
    colors: Option<&Path>,
    improper: bool,
    tree: Option<&Path>,
    edge_colors: Option<&Path>,
) -> Result<Outcome> {
    if let (Some(tree), Some(edge_colors)) = (tree, edge_colors) {
        let g = multigraph_or_embedding(&read(graph)?)?;
        let t = parse_edge_ids(&read(tree)?)?;
        let ec = parse_edge_colors(&read(edge_colors)?)?;
        let (valid, fail) = verify_fundcut_coloring(&g, &t, &ec)?;
        return if valid {
            ok("valid\n".into())
        } else {
            Ok(Outcome {
                text: format!("invalid at tree edge {}\n", fail.unwrap()),
                code: 1,
            })
        };
    }
    let Some(colors) = colors else {
        return Err(Error::InvalidInput(
            "check needs --colors, or --tree with --edge-colors".into(),
        ));
    };
    let g = parse_graph(&read(graph)?)?;
    let cols = parse_vertex_colors(&read(colors)?)?;
    let (valid, fail) = is_odd_coloring(&g, &cols, !improper)?;
    if valid {
        ok("valid\n".into())
    } else {
        Ok(Outcome {
            text: format!("invalid at vertex {}\n", fail.unwrap()),
            code: 1,
        })
    }
}

fn exact(what: ExactCmd, budget: SearchBudget) -> Result<Outcome> {
    match what {
        ExactCmd::ChiO { graph } => {
            let g = parse_graph(&read(&graph)?)?;
            let r = exact_chi_o(&g, budget)?;
            ok(format!(
                "chi_o = {} (nodes={}, seconds={:.3})\ncolors: {}\n",
                r.value,
                r.nodes,
                r.seconds,
                join(&r.certificate)
            ))
        }
        ExactCmd::ChiIo { graph } => {
            let g = parse_graph(&read(&graph)?)?;
            let r = exact_chi_io(&g, budget)?;
            ok(format!(
                "chi_io = {} (nodes={}, seconds={:.3})\ncolors: {}\n",
                r.value,
                r.nodes,
                r.seconds,
                join(&r.certificate)
            ))
        }
        ExactCmd::FundcutMin { graph, tree } => {
            let g = multigraph_or_embedding(&read(&graph)?)?;
            let t = parse_edge_ids(&read(&tree)?)?;
            let r = exact_fundcut_min(&g, &t, budget)?;
            ok(format!(
                "fundcut_min = {} (nodes={}, seconds={:.3})\n",
                r.value, r.nodes, r.seconds
            ))
        }
    }
}

fn join(colors: &[u32]) -> String {
    colors.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}
