//! Command-line front end. Reports are `key=value` lines unless `--pretty`.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::census::{
    dominance_lower_bound, enumerate_flat_knots, seifert_tait_check, series_count, series_count_strict,
};
use crate::codec::{census_csv, parse_gauss, parse_graph_json, serialize_gauss, ParsedGraph};
use crate::diagram::KnotDiagram;
use crate::fixtures::default_fixtures;
use crate::graph::{blocks_and_cut_vertices, planar_embedding, MultiGraph, PlaneGraph};
use crate::seifert::{canonical_genus, is_flat, seifert_graph, splice_all};
use crate::synthesis::{graph_to_link, trivalent_to_flat_knot, Orientation};
use crate::tait::{checkerboard, tait_graphs};
use crate::verify::{run_suite, SUITES};
use crate::wicks::{diagram_to_word, equivalence_classes, find_bieulerian, is_wicks, word_to_surface, CyclicWord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "knotforge", version, about = "Seifert and Tait graphs, flat knots and their census")]
pub struct Cli {
    /// Aligned human-readable output.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report on one signed Gauss code.
    Analyze { code: String },
    /// Run a named check suite over the fixture corpus.
    Verify {
        suite: String,
        /// Largest crossing count taken from the corpus.
        #[arg(long, default_value_t = 9)]
        max: usize,
    },
    /// Cyclic word tools.
    Wicks {
        #[command(subcommand)]
        action: WicksAction,
    },
    /// Build a knot from a graph JSON file.
    Synth(SynthArgs),
    /// Write the census CSV.
    Census(CensusArgs),
    /// Size of an n-crossing series over d classes.
    SeriesCount {
        n: usize,
        d: usize,
        /// Keep every class nonempty above a generator of this size.
        #[arg(long)]
        strict: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum WicksAction {
    Check { word: String },
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// One letter per vertex, `a` anticlockwise or `c` clockwise. Without it
    /// the graph must be trivalent with a bieulerian path.
    #[arg(long)]
    pub orient: Option<String>,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[arg(long, default_value_t = 6)]
    pub vmax: usize,
    #[arg(long, default_value_t = 12)]
    pub nmax: usize,
    /// Number of deficient series; prints the dominance bound per genus.
    #[arg(long)]
    pub c: Option<u64>,
    /// Count only series members with every class nonempty.
    #[arg(long)]
    pub strict: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    pretty: bool,
    pairs: Vec<(String, String)>,
}

impl Report {
    fn new(pretty: bool) -> Self {
        Report { pretty, pairs: Vec::new() }
    }

    fn put(&mut self, key: &str, value: impl ToString) {
        self.pairs.push((key.to_string(), value.to_string()));
    }

    fn render(&self) -> String {
        let width = self.pairs.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        self.pairs
            .iter()
            .map(|(k, v)| if self.pretty { format!("{k:<width$}  {v}\n") } else { format!("{k}={v}\n") })
            .collect()
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn usage_error(msg: impl ToString) -> Outcome {
    Outcome { status: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {}\n", msg.to_string()) }
}

fn failure(msg: impl ToString) -> Outcome {
    Outcome { status: EXIT_FAILED, stdout: String::new(), stderr: format!("error: {}\n", msg.to_string()) }
}

fn put_graph(r: &mut Report, prefix: &str, g: &MultiGraph) {
    let block = blocks_and_cut_vertices(g).map(|b| b.is_block()).unwrap_or(false);
    r.put(&format!("{prefix}.v"), g.vertex_count());
    r.put(&format!("{prefix}.e"), g.edge_count());
    r.put(&format!("{prefix}.bipartite"), yes(g.is_bipartite()));
    r.put(&format!("{prefix}.block"), yes(block));
}

/// Parse `argv` (program name first) and run it.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { status: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome { status: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Analyze { code } => analyze(code, cli.pretty),
        Command::Verify { suite, max } => verify(suite, *max, cli.pretty),
        Command::Wicks { action: WicksAction::Check { word } } => wicks_check(word, cli.pretty),
        Command::Synth(args) => synth(args, cli.pretty),
        Command::Census(args) => census(args),
        Command::SeriesCount { n, d, strict } => {
            if *d == 0 {
                return usage_error("d must be at least 1");
            }
            let count = match strict {
                Some(n0) => series_count_strict(*n, *n0, *d),
                None => series_count(*n, *d),
            };
            let mut r = Report::new(cli.pretty);
            r.put("count", count);
            Outcome { status: EXIT_OK, stdout: r.render(), stderr: String::new() }
        }
    }
}

fn analyze(code: &str, pretty: bool) -> Outcome {
    let code = match parse_gauss(code) {
        Ok(c) => c,
        Err(e) => return usage_error(e),
    };
    let d = match KnotDiagram::from_gauss(&code) {
        Ok(d) => d,
        Err(e) => return usage_error(e),
    };
    let mut r = Report::new(pretty);
    r.put("code", serialize_gauss(d.code()));
    r.put("n", d.crossing_count());
    r.put("s", splice_all(&d).circle_count());
    match canonical_genus(&d) {
        Ok(g) => r.put("g", g),
        Err(e) => r.put("g", format!("error: {e}")),
    }
    r.put("flat", yes(is_flat(&d)));
    r.put("alternating", yes(d.is_alternating()));
    r.put("reduced", yes(d.is_reduced()));
    put_graph(&mut r, "seifert", &seifert_graph(&d));
    let pair = tait_graphs(&d, &checkerboard(&d));
    put_graph(&mut r, "tait", pair.t.plane.graph());
    put_graph(&mut r, "tait_star", pair.t_star.plane.graph());
    r.put("seifert_tait", yes(seifert_tait_check(&d)));
    let word = diagram_to_word(&d).canonical();
    r.put("word", &word);
    r.put("wicks", is_wicks(&word));
    r.put("classes", equivalence_classes(&word).len());
    Outcome { status: EXIT_OK, stdout: r.render(), stderr: String::new() }
}

fn verify(suite: &str, max: usize, pretty: bool) -> Outcome {
    let fixtures = match default_fixtures() {
        Ok(f) => f,
        Err(e) => return usage_error(e),
    };
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    let mut r = Report::new(pretty);
    let mut all_pass = true;
    for name in names {
        let Some(results) = run_suite(name, &fixtures, max) else {
            return usage_error(format!("unknown suite {name}; expected one of {} or all", SUITES.join(", ")));
        };
        let passed = results.iter().filter(|c| c.pass).count();
        for c in &results {
            let verdict = if c.pass { "pass" } else { "fail" };
            let value = if c.detail.is_empty() { verdict.to_string() } else { format!("{verdict} {}", c.detail) };
            r.put(&format!("{name}.{}", c.subject), value);
        }
        r.put(name, format!("{passed}/{} pass", results.len()));
        all_pass &= passed == results.len();
    }
    Outcome { status: if all_pass { EXIT_OK } else { EXIT_FAILED }, stdout: r.render(), stderr: String::new() }
}

fn wicks_check(text: &str, pretty: bool) -> Outcome {
    let word = match CyclicWord::parse(text) {
        Ok(w) => w,
        Err(e) => return usage_error(e),
    };
    let verdict = is_wicks(&word);
    let mut r = Report::new(pretty);
    r.put("word", &word);
    r.put("verdict", &verdict);
    match word_to_surface(&word) {
        Ok((_, sum)) => {
            r.put("v", sum.v);
            r.put("e", sum.e);
            r.put("euler", sum.euler);
            r.put("genus", sum.genus);
            r.put("orientable", yes(sum.orientable));
        }
        Err(e) => r.put("surface", format!("error: {e}")),
    }
    Outcome {
        status: if verdict.is_valid() { EXIT_OK } else { EXIT_FAILED },
        stdout: r.render(),
        stderr: String::new(),
    }
}

fn synth(args: &SynthArgs, pretty: bool) -> Outcome {
    let text = match std::fs::read_to_string(&args.graph) {
        Ok(t) => t,
        Err(e) => return usage_error(format!("cannot read {}: {e}", args.graph.display())),
    };
    let plane: PlaneGraph = match parse_graph_json(&text) {
        Ok(ParsedGraph::Plane(p)) => p,
        Ok(ParsedGraph::Abstract(g)) => {
            if g.degrees().iter().any(|&k| k > 3) {
                return failure("graph has no rotation and a vertex of degree above 3");
            }
            match planar_embedding(&g) {
                Some(p) => p,
                None => return failure("graph is not planar"),
            }
        }
        Err(e) => return usage_error(e),
    };
    let result = match &args.orient {
        Some(letters) => {
            let orient: Result<Vec<Orientation>, char> = letters
                .chars()
                .map(|c| match c {
                    'a' => Ok(Orientation::Anticlockwise),
                    'c' => Ok(Orientation::Clockwise),
                    other => Err(other),
                })
                .collect();
            match orient {
                Ok(o) => graph_to_link(&plane, &o),
                Err(c) => return usage_error(format!("orientation letter {c:?} is neither a nor c")),
            }
        }
        None => match find_bieulerian(plane.graph()) {
            Some(path) => trivalent_to_flat_knot(&plane, &path),
            None => return failure("graph has no bieulerian path"),
        },
    };
    match result {
        Ok(d) => {
            let mut r = Report::new(pretty);
            r.put("code", serialize_gauss(d.code()));
            r.put("n", d.crossing_count());
            r.put("flat", yes(is_flat(&d)));
            r.put("alternating", yes(d.is_alternating()));
            if let Ok(g) = canonical_genus(&d) {
                r.put("g", g);
            }
            Outcome { status: EXIT_OK, stdout: r.render(), stderr: String::new() }
        }
        Err(e) => failure(e),
    }
}

fn census(args: &CensusArgs) -> Outcome {
    let records = match enumerate_flat_knots(args.vmax) {
        Ok(r) => r,
        Err(e) => return usage_error(e),
    };
    let rows: Vec<_> = records.iter().flat_map(|r| r.rows(args.nmax, args.strict)).collect();
    let csv = census_csv(&rows);
    let mut stderr = String::new();
    if let Some(c) = args.c {
        let mut genera: Vec<usize> = records.iter().map(|r| r.genus).filter(|&g| g > 1).collect();
        genera.sort_unstable();
        genera.dedup();
        for g in genera {
            match dominance_lower_bound(args.nmax as u64, g as u64, c) {
                Ok(b) => stderr.push_str(&format!("dominance g={g} n={} c={c} bound={b}\n", args.nmax)),
                Err(e) => return usage_error(e),
            }
        }
    }
    match &args.out {
        Some(path) => match std::fs::write(path, &csv) {
            Ok(()) => Outcome { status: EXIT_OK, stdout: String::new(), stderr },
            Err(e) => failure(format!("cannot write {}: {e}", path.display())),
        },
        None => Outcome { status: EXIT_OK, stdout: csv, stderr },
    }
}
