//! Command-line front end. Everything lives here so the binary is a one-line
//! shim and the whole interface can be driven from tests.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::Path;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::divisibility::{color_by_division, divide_weighted, line_graph_division, perfect_division};
use crate::error::{Error, Result};
use crate::formats::{emit_graph6, parse_dimacs, parse_edgelist, parse_graph6_lines};
use crate::graph::Graph;
use crate::harness::{enumerate_up_to, random_gnp, resolve_checks, run_check, Corpus, Probability};
use crate::oracles::{
    exact_coloring, find_odd_antihole, find_odd_hole, max_clique, WeightFn,
};
use crate::patterns::{classify, find_pattern};

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL: &str = "forkfree";

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "forkfree", version, about = "Perfect divisibility and chi-bounds for fork-free graphs")]
struct Cli {
    /// Include wall-clock timings (output is then no longer byte-reproducible).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Input {
    /// Input file, or `-` for stdin.
    input: String,
    /// Input format; inferred from the extension when omitted (stdin defaults to g6).
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    G6,
    Dimacs,
    Edges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleKind {
    Chi,
    Omega,
    Alpha,
    Perfect,
    OddHole,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Find an induced copy of a named pattern.
    Detect {
        #[arg(long)]
        pattern: String,
        #[command(flatten)]
        input: Input,
    },
    /// Membership in every (fork, F) class and the applicable chi-bounds.
    Classify {
        #[command(flatten)]
        input: Input,
    },
    /// A perfect division, or a weighted one with --weights.
    Divide {
        #[command(flatten)]
        input: Input,
        /// File of whitespace-separated nonnegative vertex weights.
        #[arg(long)]
        weights: Option<String>,
    },
    /// Colour by repeated perfect division.
    Color {
        #[command(flatten)]
        input: Input,
    },
    /// Exact invariants.
    Oracle {
        #[arg(value_enum)]
        kind: OracleKind,
        #[command(flatten)]
        input: Input,
    },
    /// Emit graphs as graph6, one per line.
    Gen {
        /// All non-isomorphic graphs on 1..=N vertices.
        #[arg(long, value_name = "N", conflicts_with = "gnp", required_unless_present = "gnp")]
        all: Option<usize>,
        /// One G(n, p) sample; p as `a/b` or a decimal.
        #[arg(long, num_args = 3, value_names = ["N", "P", "SEED"])]
        gnp: Option<Vec<String>>,
    },
    /// Run structural checks over a corpus; exits 1 when a counterexample is found.
    Verify {
        /// Check id (T1, T1-contra, T2..T10, chi-audit) or `all`.
        #[arg(long)]
        check: String,
        /// graph6 corpus file, or `-` for stdin.
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        corpus: Option<String>,
        /// All non-isomorphic graphs on 1..=N vertices.
        #[arg(long, value_name = "N")]
        all: Option<usize>,
    },
    /// The line graph, optionally with its spanning-tree division.
    Linegraph {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        divide: bool,
    },
}

#[derive(Serialize)]
struct Envelope<'a> {
    schema_version: u32,
    tool: &'static str,
    tool_version: &'static str,
    command: &'a [String],
    input_digest: String,
    results: Vec<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<u64>,
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

/// Runs the tool on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = stdout.write_all(rendered.as_bytes());
                EXIT_OK
            } else {
                let _ = stderr.write_all(rendered.as_bytes());
                EXIT_USAGE
            };
        }
    };
    let echo: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let mut io = Io { stdin, stdout };
    match dispatch(&cli, &echo, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                Error::Invariant { certificate, .. } => {
                    let _ = writeln!(stderr, "certificate: {certificate}");
                    EXIT_COUNTEREXAMPLE
                }
                _ => EXIT_USAGE,
            }
        }
    }
}

fn read_source(path: &str, io: &mut Io) -> Result<Vec<u8>> {
    let mut buf = Vec::new();
    if path == "-" {
        io.stdin.read_to_end(&mut buf).map_err(|e| io_error(path, e))?;
    } else {
        buf = std::fs::read(path).map_err(|e| io_error(path, e))?;
    }
    Ok(buf)
}

fn io_error(path: &str, e: std::io::Error) -> Error {
    Error::InvalidArgument(format!("cannot read `{path}`: {e}"))
}

fn infer_format(path: &str) -> Result<Format> {
    if path == "-" {
        return Ok(Format::G6);
    }
    let ext = Path::new(path).extension().and_then(|e| e.to_str()).unwrap_or("");
    match ext.to_ascii_lowercase().as_str() {
        "g6" | "graph6" => Ok(Format::G6),
        "dimacs" | "col" | "dim" => Ok(Format::Dimacs),
        "edges" | "el" | "txt" => Ok(Format::Edges),
        _ => Err(Error::InvalidArgument(format!(
            "cannot infer the format of `{path}`; pass --format g6|dimacs|edges"
        ))),
    }
}

fn load(input: &Input, io: &mut Io) -> Result<(Vec<u8>, Vec<Graph>)> {
    let bytes = read_source(&input.input, io)?;
    let format = match input.format {
        Some(f) => f,
        None => infer_format(&input.input)?,
    };
    let text = std::str::from_utf8(&bytes)
        .map_err(|_| Error::InvalidArgument(format!("`{}` is not UTF-8 text", input.input)))?;
    let graphs = match format {
        Format::G6 => parse_graph6_lines(text)?,
        Format::Dimacs => vec![parse_dimacs(text)?],
        Format::Edges => vec![parse_edgelist(text)?],
    };
    Ok((bytes, graphs))
}

fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn per_graph(graphs: &[Graph], mut f: impl FnMut(&Graph) -> Result<Value>) -> Result<Vec<Value>> {
    graphs
        .iter()
        .enumerate()
        .map(|(index, g)| {
            Ok(json!({
                "index": index,
                "graph6": emit_graph6(g)?,
                "result": f(g)?,
            }))
        })
        .collect()
}

fn to_value(x: impl Serialize) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn emit(io: &mut Io, envelope: &Envelope) -> Result<()> {
    let mut text = serde_json::to_string_pretty(envelope).expect("envelope serializes");
    text.push('\n');
    io.stdout
        .write_all(text.as_bytes())
        .map_err(|e| Error::InvalidArgument(format!("cannot write output: {e}")))
}

fn dispatch(cli: &Cli, echo: &[String], io: &mut Io) -> Result<i32> {
    let start = Instant::now();
    let mut code = EXIT_OK;
    let (input_bytes, results): (Vec<u8>, Vec<Value>) = match &cli.command {
        Command::Gen { all, gnp } => return generate(*all, gnp.as_deref(), io),
        Command::Detect { pattern, input } => {
            crate::patterns::pattern(pattern)?;
            let (bytes, graphs) = load(input, io)?;
            (bytes, per_graph(&graphs, |g| Ok(to_value(find_pattern(g, pattern)?)))?)
        }
        Command::Classify { input } => {
            let (bytes, graphs) = load(input, io)?;
            (bytes, per_graph(&graphs, |g| Ok(to_value(classify(g))))?)
        }
        Command::Divide { input, weights } => {
            let (mut bytes, graphs) = load(input, io)?;
            let weights = match weights {
                Some(path) => {
                    let raw = read_source(path, io)?;
                    bytes.extend_from_slice(&raw);
                    Some(parse_weights(&raw)?)
                }
                None => None,
            };
            let results = per_graph(&graphs, |g| {
                let division = match &weights {
                    Some(w) => divide_weighted(g, &WeightFn::new(g, w.clone())?)?,
                    None => perfect_division(g)?,
                };
                Ok(json!({ "divisible": division.is_some(), "division": division }))
            })?;
            (bytes, results)
        }
        Command::Color { input } => {
            let (bytes, graphs) = load(input, io)?;
            (bytes, per_graph(&graphs, |g| Ok(to_value(color_by_division(g)?)))?)
        }
        Command::Oracle { kind, input } => {
            let (bytes, graphs) = load(input, io)?;
            (bytes, per_graph(&graphs, |g| oracle(*kind, g))?)
        }
        Command::Linegraph { input, divide } => {
            let (bytes, graphs) = load(input, io)?;
            (bytes, per_graph(&graphs, |g| linegraph(g, *divide))?)
        }
        Command::Verify { check, corpus, all } => {
            let checks = resolve_checks(check)?;
            let (bytes, corpus) = match (corpus, all) {
                (Some(path), _) => {
                    let bytes = read_source(path, io)?;
                    let text = std::str::from_utf8(&bytes)
                        .map_err(|_| Error::InvalidArgument(format!("`{path}` is not UTF-8 text")))?;
                    let graphs = parse_graph6_lines(text)?;
                    (bytes.clone(), Corpus::new(format!("graph6 file {path} ({} graphs)", graphs.len()), graphs))
                }
                (None, Some(n)) => {
                    let corpus = Corpus::all_up_to(*n)?;
                    let mut listing = String::new();
                    for g in &corpus.graphs {
                        listing.push_str(&emit_graph6(g)?);
                        listing.push('\n');
                    }
                    (listing.into_bytes(), corpus)
                }
                (None, None) => return Err(Error::InvalidArgument("verify needs --corpus or --all".into())),
            };
            let mut results = Vec::new();
            for c in checks {
                let mut report = run_check(c, &corpus);
                if !cli.timing {
                    report.wall_time_ms = None;
                }
                if !report.passed {
                    code = EXIT_COUNTEREXAMPLE;
                }
                results.push(to_value(report));
            }
            (bytes, results)
        }
    };
    let envelope = Envelope {
        schema_version: SCHEMA_VERSION,
        tool: TOOL,
        tool_version: env!("CARGO_PKG_VERSION"),
        command: echo,
        input_digest: digest(&input_bytes),
        results,
        timing_ms: cli.timing.then(|| start.elapsed().as_millis() as u64),
    };
    emit(io, &envelope)?;
    Ok(code)
}

fn parse_weights(raw: &[u8]) -> Result<Vec<u64>> {
    let text = std::str::from_utf8(raw).map_err(|_| Error::InvalidArgument("weights file is not UTF-8".into()))?;
    text.split_whitespace()
        .map(|t| t.parse().map_err(|_| Error::InvalidArgument(format!("bad weight `{t}`"))))
        .collect()
}

fn oracle(kind: OracleKind, g: &Graph) -> Result<Value> {
    Ok(match kind {
        OracleKind::Chi => {
            let c = exact_coloring(g)?;
            json!({ "value": c.palette, "coloring": c.colors })
        }
        OracleKind::Omega => {
            let k = max_clique(g);
            json!({ "value": k.len(), "witness": k })
        }
        OracleKind::Alpha => {
            let s = max_clique(&g.complement());
            json!({ "value": s.len(), "witness": s })
        }
        OracleKind::Perfect => {
            let hole = find_odd_hole(g)?;
            let antihole = if hole.is_none() { find_odd_antihole(g)? } else { None };
            json!({ "value": hole.is_none() && antihole.is_none(), "odd_hole": hole, "odd_antihole": antihole })
        }
        OracleKind::OddHole => json!({ "witness": find_odd_hole(g)? }),
    })
}

/// Line graph plus, with `divide`, one spanning-tree division per component
/// that has an edge. Divisions are reported as edge lists of the input graph.
fn linegraph(g: &Graph, divide: bool) -> Result<Value> {
    let (l, edges) = g.line_graph()?;
    let mut out = json!({ "line_graph": emit_graph6(&l)?, "edges": edges });
    if divide {
        let mut parts = Vec::new();
        for comp in g.components() {
            let (h, map) = g.induced(comp)?;
            if h.edge_count() == 0 {
                continue;
            }
            let d = line_graph_division(&h)?;
            let lift = |e: &(usize, usize)| (map[e.0], map[e.1]);
            let side = |s: crate::graph::VertexSet| -> Vec<(usize, usize)> { s.iter().map(|i| lift(&d.edges[i])).collect() };
            parts.push(json!({
                "component": comp,
                "tree_edges": d.tree_edges.iter().map(lift).collect::<Vec<_>>(),
                "perfect_edges": side(d.division.a),
                "rest_edges": side(d.division.b),
                "certificate": d.division.certificate,
            }));
        }
        out["divisions"] = Value::Array(parts);
    }
    Ok(out)
}

fn generate(all: Option<usize>, gnp: Option<&[String]>, io: &mut Io) -> Result<i32> {
    let graphs = match (all, gnp) {
        (Some(n), _) => enumerate_up_to(n)?,
        (None, Some([n, p, seed])) => {
            let n: usize = n.parse().map_err(|_| Error::InvalidArgument(format!("bad vertex count `{n}`")))?;
            let p: Probability = p.parse()?;
            let seed: u64 = seed.parse().map_err(|_| Error::InvalidArgument(format!("bad seed `{seed}`")))?;
            vec![random_gnp(n, p, seed)?]
        }
        _ => return Err(Error::InvalidArgument("gen needs --all N or --gnp N P SEED".into())),
    };
    let mut text = String::new();
    for g in &graphs {
        text.push_str(&emit_graph6(g)?);
        text.push('\n');
    }
    io.stdout
        .write_all(text.as_bytes())
        .map_err(|e| Error::InvalidArgument(format!("cannot write output: {e}")))?;
    Ok(EXIT_OK)
}
