//! Batch command line for the plane-graph engine.
//!
//! Exit codes: 0 = decided/constructed, 1 = none exists, 2 = search budget
//! exceeded, 3 = input error.  All outputs are line-oriented text; graphs
//! travel in the `.pg` format.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use barnette::atrails::{self, TrailMode};
use barnette::face_trees::{self, FaceTree, HamCycleWithSides, TreeMode};
use barnette::oracle::{self, Outcome, SearchBudget};
use barnette::plane_graph::{
    face_coloring, parse_plane_graph, radial_graph, validate, write_plane_graph, EdgeId,
    FaceColoring, FaceId, PlaneGraph, Property,
};
use barnette::reductions;
use barnette::stpp::{self, StppInstance};
use barnette::transforms;

const EXIT_NONE: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_INPUT: u8 = 3;

#[derive(Parser)]
#[command(name = "barnette", version, about = "Plane-graph hamiltonicity machinery")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args, Clone)]
struct BudgetArgs {
    /// Node cap for exhaustive searches.
    #[arg(long, global = true, default_value_t = 200_000_000)]
    budget_nodes: u64,
    /// Time cap (seconds) for exhaustive searches.
    #[arg(long, global = true, default_value_t = 300)]
    budget_seconds: u64,
    /// Parallelise over multiple input files.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
}

impl BudgetArgs {
    fn budget(&self) -> SearchBudget {
        SearchBudget {
            node_cap: self.budget_nodes,
            time_cap: Duration::from_secs(self.budget_seconds),
            ..SearchBudget::default()
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum HcMode {
    First,
    Count,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum AtrailMode {
    First,
    All,
    NonseparatingFirst,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaceTreeMode {
    Spanning,
    Quasi,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    FourForm,
    FaceTreeCycle,
    Leapfrog,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFamily {
    Cube,
    EvenPrism,
    LeapfrogTower,
    Catalog,
}

#[derive(Subcommand)]
enum Command {
    /// Check structural properties of plane graphs.
    Validate {
        files: Vec<PathBuf>,
        /// Comma-separated: cubic, bipartite, eulerian, or "3-connected".
        #[arg(long, default_value = "cubic,bipartite,eulerian,3-connected")]
        props: String,
    },
    /// List the faces of a plane graph.
    Faces { file: PathBuf },
    /// Dual graph with correspondence maps.
    Dual {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Radial (vertex-face incidence) graph.
    Radial {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Proper face coloring with 2 or 3 colors.
    ColorFaces {
        file: PathBuf,
        #[arg(short)]
        k: u8,
    },
    /// Contract a facial 2-factor.
    Contract {
        file: PathBuf,
        /// Comma-separated face ids of the factor.
        #[arg(long)]
        faces: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Leapfrog extension of a cubic plane graph.
    Leapfrog {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Expand every vertex into a facial cycle.
    Expand {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Exhaustive hamiltonian cycle search.
    FindHc {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = HcMode::First)]
        mode: HcMode,
        /// Comma-separated forced edge ids (canonical dart index).
        #[arg(long)]
        forced: Option<String>,
        #[arg(long)]
        forbidden: Option<String>,
    },
    /// Exhaustive A-trail search.
    FindAtrail {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = AtrailMode::First)]
        mode: AtrailMode,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Search for a (quasi) spanning tree of faces.
    FindFacetree {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = FaceTreeMode::Spanning)]
        mode: FaceTreeMode,
        /// Comma-separated candidate face ids; omit for all bounded faces.
        #[arg(long)]
        candidates: Option<String>,
    },
    /// Solve a spanning tree parity instance.
    StppSolve { file: PathBuf },
    /// Degree-4/6 decision pipeline for a hamiltonian cycle of the standard
    /// side shape.
    DecideCr2 {
        file: PathBuf,
        /// Write the cycle and side table here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build the radial-digon instance from a source graph and an edge.
    ReduceTh4 {
        file: PathBuf,
        /// Canonical dart index of the edge to delete.
        #[arg(long)]
        edge: usize,
        #[arg(short, long, default_value = "th4")]
        output_prefix: String,
    },
    /// Octagon contraction of the radial-digon instance.
    ReduceCor3 {
        file: PathBuf,
        #[arg(long)]
        edge: usize,
        #[arg(short, long, default_value = "cor3")]
        output_prefix: String,
    },
    /// Digon subdivision of the radial-digon instance.
    ReduceCor4 {
        file: PathBuf,
        #[arg(long)]
        edge: usize,
        #[arg(short, long, default_value = "cor4")]
        output_prefix: String,
    },
    /// Split along 2-edge-cuts into 3-edge-connected blocks with forced edges.
    #[command(name = "decompose-2cuts")]
    Decompose2cuts {
        file: PathBuf,
        #[arg(short, long, default_value = "block")]
        output_prefix: String,
    },
    /// Cross-verify the equivalence suites on a graph.
    VerifyEquiv {
        file: PathBuf,
        #[arg(long, value_enum)]
        suite: Suite,
    },
    /// Generate fixture families or ingest a catalog directory.
    Gen {
        #[arg(long, value_enum)]
        family: GenFamily,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        depth: Option<usize>,
        /// Catalog directory of .pg files.
        #[arg(long)]
        dir: Option<PathBuf>,
        #[arg(short, long, default_value = "gen")]
        output_prefix: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn read_graph(path: &Path) -> Result<PlaneGraph, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_plane_graph(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_out(path: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, content).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn parse_id_list(text: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse::<usize>().map_err(|e| format!("bad id '{s}': {e}")))
        .collect()
}

fn run(cli: Cli) -> Result<u8, String> {
    let budget = cli.budget.budget();
    match cli.command {
        Command::Validate { files, props } => cmd_validate(files, &props, cli.budget.jobs),
        Command::Faces { file } => {
            let g = read_graph(&file)?;
            for f in g.faces() {
                let darts: Vec<String> = f.boundary.iter().map(|d| d.to_string()).collect();
                let outer = if f.id == g.outer_face() { " outer" } else { "" };
                println!("face {}: length {}{} darts {}", f.id, f.len(), outer, darts.join(" "));
            }
            Ok(0)
        }
        Command::Dual { file, output, map } => {
            let g = read_graph(&file)?;
            let d = barnette::plane_graph::dual(&g).map_err(|e| e.to_string())?;
            write_out(&output, &write_plane_graph(&d.graph))?;
            let mut lines = String::new();
            for (f, v) in d.vertex_of_face.iter().enumerate() {
                lines.push_str(&format!("face {f}: vertex {v}\n"));
            }
            for (v, f) in d.face_of_vertex.iter().enumerate() {
                lines.push_str(&format!("vertex {v}: face {f}\n"));
            }
            for e in g.edges() {
                let (de, _) = g.edge_darts(e);
                let dual_edge = d.graph.edge_of(d.dart_map[de.0]);
                lines.push_str(&format!("edge {e}: edge {dual_edge}\n"));
            }
            write_out(&map, &lines)?;
            Ok(0)
        }
        Command::Radial { file, output, map } => {
            let g = read_graph(&file)?;
            let r = radial_graph(&g).map_err(|e| e.to_string())?;
            write_out(&output, &write_plane_graph(&r.graph))?;
            let mut lines = String::new();
            for (i, label) in r.labels.iter().enumerate() {
                lines.push_str(&format!("node {i}: {label}\n"));
            }
            write_out(&map, &lines)?;
            Ok(0)
        }
        Command::ColorFaces { file, k } => {
            let g = read_graph(&file)?;
            let c = face_coloring(&g, k).map_err(|e| e.to_string())?;
            for f in g.faces() {
                println!("face {}: color {}", f.id, c.color(f.id));
            }
            Ok(0)
        }
        Command::Contract { file, faces, output, map } => {
            let g = read_graph(&file)?;
            let ids: BTreeSet<FaceId> = parse_id_list(&faces)?.into_iter().map(FaceId).collect();
            let rg = transforms::contract_facial_factor(&g, &ids).map_err(|e| e.to_string())?;
            write_out(&output, &write_plane_graph(&rg.h))?;
            let mut lines = String::new();
            for (w, f) in rg.vertex_map.iter().enumerate() {
                lines.push_str(&format!("vertex {w}: face {f}\n"));
            }
            for (d, sd) in rg.dart_map.iter().enumerate() {
                lines.push_str(&format!("dart {d}: dart {sd}\n"));
            }
            for (hf, sf) in rg.face_map.iter().enumerate() {
                lines.push_str(&format!("face {hf}: face {sf}\n"));
            }
            write_out(&map, &lines)?;
            Ok(0)
        }
        Command::Leapfrog { file, output, map } => {
            let g = read_graph(&file)?;
            let lf = transforms::leapfrog(&g).map_err(|e| e.to_string())?;
            write_out(&output, &write_plane_graph(&lf.graph))?;
            let mut lines = String::new();
            for (v, h) in lf.hexagon.iter().enumerate() {
                lines.push_str(&format!("hexagon {v}: face {h}\n"));
            }
            for (f, i) in lf.face_map.iter().enumerate() {
                lines.push_str(&format!("face {f}: face {i}\n"));
            }
            write_out(&map, &lines)?;
            Ok(0)
        }
        Command::Expand { file, output, map } => {
            let g = read_graph(&file)?;
            let ex = transforms::vertex_expand(&g).map_err(|e| e.to_string())?;
            write_out(&output, &write_plane_graph(&ex.graph))?;
            let mut lines = String::new();
            for (w, cyc) in ex.cycle_vertices.iter().enumerate() {
                let vs: Vec<String> = cyc.iter().map(|v| v.to_string()).collect();
                lines.push_str(&format!("cycle {w}: vertices {}\n", vs.join(" ")));
            }
            for (w, f) in ex.cycle_face.iter().enumerate() {
                lines.push_str(&format!("cycle {w}: face {f}\n"));
            }
            write_out(&map, &lines)?;
            Ok(0)
        }
        Command::FindHc { file, mode, forced, forbidden } => {
            let g = read_graph(&file)?;
            let forced: BTreeSet<EdgeId> = match forced {
                Some(t) => parse_id_list(&t)?.into_iter().map(EdgeId).collect(),
                None => BTreeSet::new(),
            };
            let forbidden: BTreeSet<EdgeId> = match forbidden {
                Some(t) => parse_id_list(&t)?.into_iter().map(EdgeId).collect(),
                None => BTreeSet::new(),
            };
            let limit = match mode {
                HcMode::First => Some(1),
                _ => None,
            };
            match oracle::find_hc(&g, &forced, &forbidden, limit, &budget) {
                Outcome::OverBudget { explored } => {
                    eprintln!("budget exceeded after {explored} nodes");
                    Ok(EXIT_BUDGET)
                }
                Outcome::Complete(cycles) => {
                    match mode {
                        HcMode::Count => println!("count: {}", cycles.len()),
                        _ => {
                            for c in &cycles {
                                let vs: Vec<String> =
                                    c.vertices.iter().map(|v| v.to_string()).collect();
                                println!("cycle: {}", vs.join(" "));
                            }
                        }
                    }
                    Ok(if cycles.is_empty() { EXIT_NONE } else { 0 })
                }
            }
        }
        Command::FindAtrail { file, mode, limit } => {
            let g = read_graph(&file)?;
            let mode = match mode {
                AtrailMode::First => TrailMode::First,
                AtrailMode::All => TrailMode::All,
                AtrailMode::NonseparatingFirst => TrailMode::NonseparatingFirst,
            };
            match atrails::find_a_trails(&g, mode, limit, &budget).map_err(|e| e.to_string())? {
                Outcome::OverBudget { explored } => {
                    eprintln!("budget exceeded after {explored} nodes");
                    Ok(EXIT_BUDGET)
                }
                Outcome::Complete(trails) => {
                    for t in &trails {
                        let ds: Vec<String> = t.darts.iter().map(|d| d.to_string()).collect();
                        println!("trail: {}", ds.join(" "));
                    }
                    Ok(if trails.is_empty() { EXIT_NONE } else { 0 })
                }
            }
        }
        Command::FindFacetree { file, mode, candidates } => {
            let g = read_graph(&file)?;
            let cands: BTreeSet<FaceId> = match candidates {
                Some(t) => parse_id_list(&t)?.into_iter().map(FaceId).collect(),
                None => g.faces().iter().map(|f| f.id).collect(),
            };
            let mode = match mode {
                FaceTreeMode::Spanning => TreeMode::Spanning,
                FaceTreeMode::Quasi => TreeMode::Quasi,
            };
            match face_trees::find_face_tree(&g, &cands, mode, true) {
                Some(ft) => {
                    print_face_tree(&ft);
                    Ok(0)
                }
                None => Ok(EXIT_NONE),
            }
        }
        Command::StppSolve { file } => {
            let text =
                std::fs::read_to_string(&file).map_err(|e| format!("{}: {e}", file.display()))?;
            let inst = parse_stpp(&text)?;
            match stpp::solve_stpp(&inst).map_err(|e| e.to_string())? {
                Some(sol) => {
                    let es: Vec<String> = sol.tree.iter().map(|e| e.to_string()).collect();
                    println!("tree: {}", es.join(" "));
                    Ok(0)
                }
                None => {
                    println!("unsatisfiable");
                    Ok(EXIT_NONE)
                }
            }
        }
        Command::DecideCr2 { file, output } => {
            let g = read_graph(&file)?;
            let (coloring, _) = cr2_coloring(&g)?;
            match stpp::decide_cr2(&g, &coloring).map_err(|e| e.to_string())? {
                Some(c) => {
                    write_out(&output, &cycle_with_sides_text(&g, &c))?;
                    Ok(0)
                }
                None => Ok(EXIT_NONE),
            }
        }
        Command::ReduceTh4 { file, edge, output_prefix } => {
            let g0 = read_graph(&file)?;
            let a = reductions::build_radial_digon_instance(&g0, EdgeId(edge)).map_err(|e| e.to_string())?;
            std::fs::write(format!("{output_prefix}.h.pg"), write_plane_graph(&a.h))
                .map_err(|e| e.to_string())?;
            std::fs::write(format!("{output_prefix}.g.pg"), write_plane_graph(a.g()))
                .map_err(|e| e.to_string())?;
            let mut lines = String::new();
            lines.push_str(&format!("endpoint u: {}\n", a.endpoints.0));
            lines.push_str(&format!("endpoint v: {}\n", a.endpoints.1));
            for (e, q) in &a.quad_of_edge {
                let (x, y) = a.g0p.endpoints(*e);
                lines.push_str(&format!("quad {q}: edge {e} endpoints {x} {y}\n"));
            }
            std::fs::write(format!("{output_prefix}.map"), lines).map_err(|e| e.to_string())?;
            println!(
                "h: V={} E={} digons={} quads={}",
                a.h.vertex_count(),
                a.h.edge_count(),
                a.digon_faces().len(),
                a.quad_faces().len()
            );
            println!("g: V={} E={}", a.g().vertex_count(), a.g().edge_count());
            Ok(0)
        }
        Command::ReduceCor3 { file, edge, output_prefix } => {
            let g0 = read_graph(&file)?;
            let a = reductions::build_radial_digon_instance(&g0, EdgeId(edge)).map_err(|e| e.to_string())?;
            let c = reductions::build_octagon_contraction(&a).map_err(|e| e.to_string())?;
            std::fs::write(format!("{output_prefix}.hp.pg"), write_plane_graph(c.hp()))
                .map_err(|e| e.to_string())?;
            let mut lines = String::new();
            for (q, w) in &c.hp_vertex_of_quad {
                lines.push_str(&format!("quad {q}: vertex {w}\n"));
            }
            std::fs::write(format!("{output_prefix}.map"), lines).map_err(|e| e.to_string())?;
            println!("hp: V={} E={}", c.hp().vertex_count(), c.hp().edge_count());
            Ok(0)
        }
        Command::ReduceCor4 { file, edge, output_prefix } => {
            let g0 = read_graph(&file)?;
            let a = reductions::build_radial_digon_instance(&g0, EdgeId(edge)).map_err(|e| e.to_string())?;
            let c = reductions::build_digon_subdivision(&a).map_err(|e| e.to_string())?;
            std::fs::write(format!("{output_prefix}.h0.pg"), write_plane_graph(&c.h0))
                .map_err(|e| e.to_string())?;
            let mut lines = String::new();
            for s in &c.subdivisions {
                lines.push_str(&format!(
                    "digon {}: a {} b {} new-digon {} triangles {} {}\n",
                    s.digon, s.a, s.b, s.new_digon, s.triangles[0], s.triangles[1]
                ));
            }
            std::fs::write(format!("{output_prefix}.map"), lines).map_err(|e| e.to_string())?;
            println!("h0: V={} E={}", c.h0.vertex_count(), c.h0.edge_count());
            Ok(0)
        }
        Command::Decompose2cuts { file, output_prefix } => {
            let g = read_graph(&file)?;
            let d = transforms::decompose_2cuts(&g).map_err(|e| e.to_string())?;
            for (i, comp) in d.components.iter().enumerate() {
                std::fs::write(
                    format!("{output_prefix}{i}.pg"),
                    write_plane_graph(&comp.graph),
                )
                .map_err(|e| e.to_string())?;
                let forced: Vec<String> = comp.forced.iter().map(|e| e.to_string()).collect();
                println!(
                    "component {i}: V={} forced {}",
                    comp.graph.vertex_count(),
                    forced.join(" ")
                );
            }
            Ok(0)
        }
        Command::VerifyEquiv { file, suite } => cmd_verify_equiv(&file, suite, &budget),
        Command::Gen { family, k, depth, dir, output_prefix } => {
            cmd_gen(family, k, depth, dir, &output_prefix)
        }
    }
}

fn cmd_validate(files: Vec<PathBuf>, props: &str, jobs: usize) -> Result<u8, String> {
    let mut wanted = Vec::new();
    for token in props.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        let p = match token {
            "cubic" => Property::Cubic,
            "bipartite" => Property::Bipartite,
            "eulerian" => Property::Eulerian,
            other => match other.strip_suffix("-connected").or(other.strip_suffix("_connected")) {
                Some(k) => Property::KConnected(
                    k.parse().map_err(|e| format!("bad connectivity '{other}': {e}"))?,
                ),
                None => return Err(format!("unknown property '{other}'")),
            },
        };
        wanted.push(p);
    }
    let run_one = |file: &PathBuf| -> Result<String, String> {
        let g = read_graph(file)?;
        let report = validate(&g, &wanted);
        let body: Vec<String> = report
            .entries
            .iter()
            .map(|(p, ok)| format!("{p}={ok}"))
            .collect();
        Ok(format!("{}: {}", file.display(), body.join(" ")))
    };
    let results: Vec<Result<String, String>> = if jobs <= 1 || files.len() <= 1 {
        files.iter().map(run_one).collect()
    } else {
        // Chunked workers; results keep input order.
        std::thread::scope(|scope| {
            let chunk = files.len().div_ceil(jobs);
            let handles: Vec<_> = files
                .chunks(chunk)
                .map(|chunk| scope.spawn(move || chunk.iter().map(run_one).collect::<Vec<_>>()))
                .collect();
            handles.into_iter().flat_map(|h| h.join().unwrap()).collect()
        })
    };
    for r in results {
        println!("{}", r?);
    }
    Ok(0)
}

fn print_face_tree(ft: &FaceTree) {
    let fs: Vec<String> = ft.faces.iter().map(|f| f.to_string()).collect();
    let ps: Vec<String> = ft.proper.iter().map(|v| v.to_string()).collect();
    println!("faces: {}", fs.join(" "));
    println!("proper: {}", ps.join(" "));
}

fn cycle_with_sides_text(g: &PlaneGraph, c: &HamCycleWithSides) -> String {
    let es: Vec<String> = c
        .cycle
        .iter()
        .map(|&e| {
            let (u, v) = g.endpoints(e);
            format!("{u}-{v}")
        })
        .collect();
    let mut out = format!("cycle: {}\n", es.join(" "));
    for f in g.faces() {
        let side = if c.is_inside(f.id) { "inside" } else { "outside" };
        out.push_str(&format!("face {}: {}\n", f.id, side));
    }
    out
}

/// A 3-face-coloring with the outer face colored 3 and, among the two
/// remaining labelings, one whose 1-faces are all quadrilaterals or hexagons
/// (the first such labeling in class order).
fn cr2_coloring(g: &PlaneGraph) -> Result<(FaceColoring, u8), String> {
    let base = face_coloring(g, 3).map_err(|e| e.to_string())?;
    let fixed = base.swapped_to(g.outer_face(), 3);
    for one in 1..=2u8 {
        let mut perm: Vec<u8> = vec![0, 1, 2, 3];
        perm[one as usize] = 1;
        perm[(3 - one) as usize] = 2;
        let candidate = fixed.permuted(&perm);
        let ok = candidate
            .class(1)
            .iter()
            .all(|&f| matches!(g.face(f).len(), 4 | 6));
        if ok {
            return Ok((candidate, one));
        }
    }
    Err("no labeling makes every 1-face a quadrilateral or hexagon".into())
}

fn parse_stpp(text: &str) -> Result<StppInstance, String> {
    let mut vertex_count = None;
    let mut edges = Vec::new();
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut words = line.split_whitespace();
        let head = words.next().unwrap();
        let rest: Vec<usize> = words
            .map(|w| w.parse().map_err(|e| format!("line {}: {e}", idx + 1)))
            .collect::<Result<_, _>>()?;
        match (head, rest.as_slice()) {
            ("vertices", [n]) => vertex_count = Some(*n),
            ("edge", [u, v]) => edges.push((*u, *v)),
            ("pair", [a, b]) => pairs.push((*a, *b)),
            _ => {
                return Err(format!(
                    "line {}: expected 'vertices n', 'edge u v' or 'pair a b'",
                    idx + 1
                ))
            }
        }
    }
    let vertex_count = vertex_count.ok_or("missing 'vertices' line")?;
    let inst = StppInstance { vertex_count, edges, pairs };
    inst.validate().map_err(|e| e.to_string())?;
    Ok(inst)
}

fn cmd_verify_equiv(file: &Path, suite: Suite, budget: &SearchBudget) -> Result<u8, String> {
    let g = read_graph(file)?;
    let mut all_ok = true;
    let mut check = |name: &str, ok: bool| {
        println!("{name}: {}", if ok { "PASS" } else { "FAIL" });
        all_ok &= ok;
    };
    match suite {
        Suite::FourForm => {
            let coloring = match cr2_coloring(&g) {
                Ok((c, _)) => c,
                Err(_) => face_coloring(&g, 3)
                    .map_err(|e| e.to_string())?
                    .swapped_to(g.outer_face(), 3),
            };
            let ctx = face_trees::four_form_context(&g, &coloring).map_err(|e| e.to_string())?;
            match face_trees::four_form_counts(&ctx, budget).map_err(|e| e.to_string())? {
                Outcome::OverBudget { explored } => {
                    eprintln!("budget exceeded after {explored} nodes");
                    return Ok(EXIT_BUDGET);
                }
                Outcome::Complete([i, ii, iii, iv]) => {
                    println!("form-i count: {i}");
                    println!("form-ii count: {ii}");
                    println!("form-iii count: {iii}");
                    println!("form-iv count: {iv}");
                    let e = i > 0;
                    check(
                        "existence agreement",
                        (ii > 0) == e && (iii > 0) == e && (iv > 0) == e,
                    );
                }
            }
        }
        Suite::FaceTreeCycle => {
            let coloring = face_coloring(&g, 3).map_err(|e| e.to_string())?;
            let fixed = coloring.swapped_to(g.outer_face(), 3);
            let factor = fixed.class(1);
            let rg = transforms::contract_facial_factor(&g, &factor).map_err(|e| e.to_string())?;
            let bounded: BTreeSet<FaceId> = rg
                .h
                .faces()
                .iter()
                .map(|f| f.id)
                .filter(|&f| f != rg.h.outer_face())
                .collect();
            let trees = match oracle::enumerate_face_trees_bruteforce(
                &rg.h,
                &bounded,
                TreeMode::Quasi,
                budget,
            ) {
                Outcome::Complete(t) => t,
                Outcome::OverBudget { explored } => {
                    eprintln!("budget exceeded after {explored} nodes");
                    return Ok(EXIT_BUDGET);
                }
            };
            let cycles =
                match oracle::find_hc(&g, &BTreeSet::new(), &BTreeSet::new(), None, budget) {
                    Outcome::Complete(c) => c,
                    Outcome::OverBudget { explored } => {
                        eprintln!("budget exceeded after {explored} nodes");
                        return Ok(EXIT_BUDGET);
                    }
                };
            let constrained: Vec<HamCycleWithSides> = cycles
                .into_iter()
                .filter_map(|c| HamCycleWithSides::from_edges(&g, c.edges).ok())
                .filter(|c| face_trees::hamiltonian_to_qstf(&rg, c).is_ok())
                .collect();
            println!("face trees: {}", trees.len());
            println!("constrained cycles: {}", constrained.len());
            check("bijection counts", trees.len() == constrained.len());
            let mut inverse_ok = true;
            for ft in &trees {
                match face_trees::qstf_to_hamiltonian(&rg, ft) {
                    Ok(c) => match face_trees::hamiltonian_to_qstf(&rg, &c) {
                        Ok(back) => inverse_ok &= back == *ft,
                        Err(_) => inverse_ok = false,
                    },
                    Err(_) => inverse_ok = false,
                }
            }
            check("mutually inverse", inverse_ok);
        }
        Suite::Leapfrog => {
            check("dual identity", face_trees::lf_identity_check(&g).is_ok());
            let ctx = face_trees::leapfrog_context(&g).map_err(|e| e.to_string())?;
            let cycles =
                match oracle::find_hc(&g, &BTreeSet::new(), &BTreeSet::new(), None, budget) {
                    Outcome::Complete(c) => c,
                    Outcome::OverBudget { explored } => {
                        eprintln!("budget exceeded after {explored} nodes");
                        return Ok(EXIT_BUDGET);
                    }
                };
            let mut roundtrip_ok = true;
            for c in &cycles {
                match face_trees::hc_lift_leapfrog(&ctx, &c.edges) {
                    Ok(lifted) => match face_trees::hc_project_leapfrog(&ctx, &lifted) {
                        Ok(back) => roundtrip_ok &= back == c.edges,
                        Err(_) => roundtrip_ok = false,
                    },
                    Err(_) => roundtrip_ok = false,
                }
            }
            check("lift/project roundtrip", roundtrip_ok);
        }
    }
    Ok(if all_ok { 0 } else { EXIT_NONE })
}

fn cmd_gen(
    family: GenFamily,
    k: Option<usize>,
    depth: Option<usize>,
    dir: Option<PathBuf>,
    prefix: &str,
) -> Result<u8, String> {
    match family {
        GenFamily::Catalog => {
            let dir = dir.ok_or("catalog needs --dir")?;
            let mut entries: Vec<PathBuf> = std::fs::read_dir(&dir)
                .map_err(|e| format!("{}: {e}", dir.display()))?
                .filter_map(|e| e.ok())
                .map(|e| e.path())
                .filter(|p| p.extension().map(|x| x == "pg").unwrap_or(false))
                .collect();
            entries.sort();
            let mut flagged = 0usize;
            for path in entries {
                match read_graph(&path) {
                    Ok(g) => {
                        let ok = oracle::check_barnette(&g).all_hold();
                        if !ok {
                            flagged += 1;
                        }
                        println!("{}: V={} barnette={}", path.display(), g.vertex_count(), ok);
                    }
                    Err(e) => {
                        flagged += 1;
                        println!("{}: invalid ({e})", path.display());
                    }
                }
            }
            Ok(if flagged == 0 { 0 } else { EXIT_NONE })
        }
        other => {
            let fam = match other {
                GenFamily::Cube => oracle::Family::Cube,
                GenFamily::EvenPrism => {
                    oracle::Family::EvenPrism(k.ok_or("even-prism needs --k")?)
                }
                GenFamily::LeapfrogTower => oracle::Family::LeapfrogTower {
                    depth: depth.ok_or("leapfrog-tower needs --depth")?,
                },
                GenFamily::Catalog => unreachable!(),
            };
            let graphs = oracle::generate(&fam).map_err(|e| e.to_string())?;
            for (i, g) in graphs.iter().enumerate() {
                let path = format!("{prefix}{i}.pg");
                std::fs::write(&path, write_plane_graph(g)).map_err(|e| e.to_string())?;
                println!(
                    "{path}: V={} E={} F={}",
                    g.vertex_count(),
                    g.edge_count(),
                    g.face_count()
                );
            }
            Ok(0)
        }
    }
}
