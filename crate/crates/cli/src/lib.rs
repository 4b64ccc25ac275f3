//! `cconv` command-line front end. Exit codes: 0 affirmative, 1 negative,
//! 2 usage or input error.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cconv_core::graph::{parse_document, GraphDocument, DEFAULT_ENUMERATION_LIMIT};
use cconv_core::homomorphism::DEFAULT_TOURNAMENT_LIMIT;
use cconv_core::reduction::{DEFAULT_EXHAUSTIVE_EDGE_LIMIT, DEFAULT_NAE_LIMIT};
use cconv_core::{
    admits_improper, build_gadget, colouring_from_assignment, convex_hull, decode_assignment,
    deficient_edge, nae_solve, orientation_from_assignment, oriented_chromatic_number, parse_nae,
    search_cc, simple_chromatic_number, verify_suite, Assignment, CcSearch, HomMap, MixedGraph,
    NaeInstance, Outcome, ParsedGraph, Property, SimpleGraph, Strategy, Variant, VerifyConfig,
    VerifyHooks, VertexSet,
};

#[derive(Parser, Debug)]
#[command(
    name = "cconv",
    version,
    about = "Convexity and improper homomorphisms of oriented and 2-edge-coloured graphs"
)]
struct Cli {
    #[command(flatten)]
    output: OutputArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Plain,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum VariantArg {
    #[value(name = "2ec")]
    Coloured,
    #[value(name = "orient")]
    Oriented,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Coloured => Variant::Coloured,
            VariantArg::Oriented => Variant::Oriented,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the hull layers of a vertex set.
    Hull {
        /// Graph file, or `-` for stdin.
        file: String,
        /// Vertices of the starting set.
        #[arg(required = true)]
        vertices: Vec<usize>,
    },
    /// Decide complete convexity.
    Check { file: String },
    /// Print an improper homomorphism (quotient target plus `map` lines).
    Witness { file: String },
    /// Oriented chromatic number with a witness colouring.
    Chromatic { file: String },
    /// Simple chromatic number with a witness colouring.
    SimpleChromatic { file: String },
    /// Build the gadget graph of an NAE instance.
    Reduce {
        file: String,
        #[arg(long, value_enum)]
        variant: VariantArg,
    },
    /// Encode a satisfying assignment as a colouring or orientation of the gadget.
    Encode {
        file: String,
        #[arg(long, value_enum)]
        variant: VariantArg,
        /// Bit string, variable 1 first.
        #[arg(long)]
        assign: Assignment,
    },
    /// Read the assignment off a complete convex gadget colouring/orientation.
    Decode {
        /// NAE instance file.
        instance: String,
        /// Coloured or oriented gadget graph file.
        graph: String,
    },
    /// Brute-force not-all-equal satisfiability.
    SolveNae { file: String },
    /// Look for a complete convex colouring/orientation of a graph.
    SearchCc {
        file: String,
        #[arg(long, value_enum)]
        variant: VariantArg,
        /// Scan every completion of a fixed first edge.
        #[arg(long, conflicts_with = "budget", required_unless_present = "budget")]
        exhaustive: bool,
        /// Depth-first search with this many nodes.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Run the verification harness.
    Verify {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run a single property.
        #[arg(long)]
        only: Option<Property>,
        /// Random graphs drawn beyond the exhaustive range.
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long)]
        threads: Option<usize>,
    },
}

/// What a command produced.
struct Answer {
    code: i32,
    text: String,
    result: Value,
    witness: Value,
    instances: Value,
    seed: Value,
}

impl Answer {
    fn new(code: i32, text: String, result: impl Into<Value>) -> Self {
        Answer {
            code,
            text,
            result: result.into(),
            witness: Value::Null,
            instances: Value::Null,
            seed: Value::Null,
        }
    }

    fn witness(mut self, w: impl Into<Value>) -> Self {
        self.witness = w.into();
        self
    }
}

/// Runs `cconv` with `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(rendered.as_bytes());
            return if code == 0 { 0 } else { 2 };
        }
    };
    let json = cli.output.json || cli.output.format == Format::Json;
    let name = command_name(&cli.command);
    match execute(cli.command, stdin) {
        Ok(answer) => {
            let out = if json {
                let envelope = json!({
                    "command": name,
                    "result": answer.result,
                    "witness": answer.witness,
                    "instances": answer.instances,
                    "seed": answer.seed,
                });
                format!("{envelope}\n")
            } else {
                answer.text
            };
            if stdout.write_all(out.as_bytes()).is_err() {
                return 2;
            }
            answer.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            2
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Hull { .. } => "hull",
        Command::Check { .. } => "check",
        Command::Witness { .. } => "witness",
        Command::Chromatic { .. } => "chromatic",
        Command::SimpleChromatic { .. } => "simple-chromatic",
        Command::Reduce { .. } => "reduce",
        Command::Encode { .. } => "encode",
        Command::Decode { .. } => "decode",
        Command::SolveNae { .. } => "solve-nae",
        Command::SearchCc { .. } => "search-cc",
        Command::Verify { .. } => "verify",
    }
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn read_document(path: &str, stdin: &mut dyn Read) -> Result<GraphDocument> {
    parse_document(&read_input(path, stdin)?).with_context(|| format!("parsing {path}"))
}

fn read_mixed(path: &str, stdin: &mut dyn Read) -> Result<MixedGraph> {
    match read_document(path, stdin)?.graph {
        ParsedGraph::Mixed(g) => Ok(g),
        ParsedGraph::Simple(_) => {
            bail!("{path}: expected an oriented or 2ec graph, found `kind graph`")
        }
    }
}

fn read_nae(path: &str, stdin: &mut dyn Read) -> Result<NaeInstance> {
    parse_nae(&read_input(path, stdin)?).with_context(|| format!("parsing {path}"))
}

fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(0) => bail!("--threads must be at least 1"),
        Some(k) => Ok(rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()?
            .install(f)),
    }
}

fn map_lines(h: &HomMap) -> String {
    h.image()
        .iter()
        .enumerate()
        .map(|(v, c)| format!("map {v} {c}\n"))
        .collect()
}

fn map_json(h: &HomMap) -> Value {
    json!(h.image())
}

fn labelled(graph: &str, roles: &[cconv_core::Role]) -> String {
    let mut out = String::from(graph);
    for (v, role) in roles.iter().enumerate() {
        let _ = writeln!(out, "# label {v} {role}");
    }
    out
}

fn chromatic(file: &str, stdin: &mut dyn Read, simple: bool) -> Result<Answer> {
    let MixedGraph::Oriented(g) = read_mixed(file, stdin)? else {
        bail!("{file}: chromatic numbers are defined here for oriented graphs");
    };
    let limit = DEFAULT_TOURNAMENT_LIMIT.min(DEFAULT_ENUMERATION_LIMIT);
    let (k, h) = if simple {
        simple_chromatic_number(&g, limit)?
    } else {
        oriented_chromatic_number(&g, limit)?
    };
    let text = format!("chi = {k}\n{}", map_lines(&h));
    Ok(Answer::new(0, text, k).witness(map_json(&h)))
}

fn execute(command: Command, stdin: &mut dyn Read) -> Result<Answer> {
    match command {
        Command::Hull { file, vertices } => {
            let g = read_mixed(&file, stdin)?;
            let s = VertexSet::try_from_vertices(g.n(), vertices.iter().copied()).map_err(|v| {
                anyhow!("vertex {v} out of range for a graph on {} vertices", g.n())
            })?;
            let trace = convex_hull(&g, &s)?;
            let mut text = String::new();
            let mut layers = Vec::new();
            for (i, layer) in trace.layers().iter().enumerate() {
                let vs = layer.to_vec();
                let list: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(text, "layer {i}: {}", list.join(" "));
                layers.push(json!(vs));
            }
            Ok(Answer::new(0, text, json!(trace.hull().to_vec())).witness(layers))
        }
        Command::Check { file } => {
            let g = read_mixed(&file, stdin)?;
            Ok(match deficient_edge(&g)? {
                None => Answer::new(0, "complete-convex: yes\n".into(), true),
                Some(((u, v), hull)) => Answer::new(
                    1,
                    format!("complete-convex: no (edge {u} {v}: hull = {hull})\n"),
                    false,
                )
                .witness(json!({ "edge": [u, v], "hull": hull.to_vec() })),
            })
        }
        Command::Witness { file } => {
            let g = read_mixed(&file, stdin)?;
            Ok(match admits_improper(&g)? {
                None => Answer::new(
                    1,
                    "no improper homomorphism (graph is complete convex)\n".into(),
                    false,
                ),
                Some((target, h)) => {
                    let text = format!("{}{}", target.graph(), map_lines(&h));
                    Answer::new(0, text, true).witness(
                        json!({ "target": target.graph().to_string(), "map": map_json(&h) }),
                    )
                }
            })
        }
        Command::Chromatic { file } => chromatic(&file, stdin, false),
        Command::SimpleChromatic { file } => chromatic(&file, stdin, true),
        Command::Reduce { file, variant } => {
            let y = read_nae(&file, stdin)?;
            let gadget = build_gadget(&y, variant.into());
            let text = labelled(&gadget.graph().to_string(), gadget.roles());
            Ok(Answer::new(
                0,
                text.clone(),
                json!({
                    "vertices": gadget.graph().n(),
                    "edges": gadget.graph().edge_count(),
                }),
            )
            .witness(text))
        }
        Command::Encode {
            file,
            variant,
            assign,
        } => {
            let y = read_nae(&file, stdin)?;
            let variant = Variant::from(variant);
            let gadget = build_gadget(&y, variant);
            let graph = match variant {
                Variant::Coloured => colouring_from_assignment(&y, &assign)?.to_string(),
                Variant::Oriented => orientation_from_assignment(&y, &assign)?.to_string(),
            };
            let text = labelled(&graph, gadget.roles());
            Ok(Answer::new(0, text.clone(), true).witness(text))
        }
        Command::Decode { instance, graph } => {
            let y = read_nae(&instance, stdin)?;
            let doc = read_document(&graph, stdin)?;
            let ParsedGraph::Mixed(g) = doc.graph else {
                bail!("{graph}: expected an oriented or 2ec gadget graph");
            };
            let variant = match g {
                MixedGraph::Oriented(_) => Variant::Oriented,
                MixedGraph::Coloured(_) => Variant::Coloured,
            };
            let gadget = build_gadget(&y, variant);
            gadget.check_labels(&doc.labels)?;
            let s = decode_assignment(&g, &gadget)?;
            let sat = y.is_satisfied_by(&s);
            let text = format!(
                "assignment: {s}\nnae-satisfying: {}\n",
                if sat { "yes" } else { "no" }
            );
            Ok(Answer::new(if sat { 0 } else { 1 }, text, s.to_string()))
        }
        Command::SolveNae { file } => {
            let y = read_nae(&file, stdin)?;
            Ok(match nae_solve(&y, DEFAULT_NAE_LIMIT)? {
                Some(s) => Answer::new(0, format!("satisfiable: {s}\n"), s.to_string()),
                None => Answer::new(1, "unsatisfiable\n".into(), false),
            })
        }
        Command::SearchCc {
            file,
            variant,
            exhaustive,
            budget,
            threads,
        } => {
            let g: SimpleGraph = match read_document(&file, stdin)?.graph {
                ParsedGraph::Simple(g) => g,
                ParsedGraph::Mixed(g) => g.underlying(),
            };
            let strategy = match (exhaustive, budget) {
                (true, _) => Strategy::Exhaustive,
                (false, Some(b)) => Strategy::Budgeted(b),
                (false, None) => bail!("one of --exhaustive or --budget is required"),
            };
            let found = with_threads(threads, || {
                search_cc(&g, variant.into(), strategy, DEFAULT_EXHAUSTIVE_EDGE_LIMIT)
            })?;
            Ok(match found {
                Ok(CcSearch::Found(h)) => {
                    Answer::new(0, format!("found\n{h}"), "found").witness(h.to_string())
                }
                Ok(CcSearch::CertifiedNone) => {
                    Answer::new(1, "certified-none\n".into(), "certified-none")
                }
                Ok(CcSearch::Indeterminate) => Answer::new(
                    1,
                    "indeterminate (budgeted search found none; absence is not certified)\n".into(),
                    "indeterminate",
                ),
                Err(e) => bail!("{e}"),
            })
        }
        Command::Verify {
            max_n,
            seed,
            only,
            samples,
            threads,
        } => {
            if !(2..=cconv_core::verify::MAX_VERIFY_N).contains(&max_n) {
                bail!(
                    "--max-n must be between 2 and {}",
                    cconv_core::verify::MAX_VERIFY_N
                );
            }
            let config = VerifyConfig {
                only,
                random_samples: samples,
                ..VerifyConfig::new(max_n, seed)
            };
            let report = with_threads(threads, || verify_suite(&config, VerifyHooks::default()))?;
            let dir: PathBuf = std::env::temp_dir();
            let lines = report.render(&dir)?;
            let mut text = String::new();
            for line in &lines {
                let _ = writeln!(text, "{line}");
            }
            let instances: serde_json::Map<String, Value> = report
                .results
                .iter()
                .map(|r| (r.property.id().to_string(), json!(r.instances)))
                .collect();
            let failures: serde_json::Map<String, Value> = report
                .results
                .iter()
                .zip(&lines)
                .filter(|(r, _)| r.outcome != Outcome::Pass)
                .map(|(r, line)| {
                    let path = line.split_once("counterexample=").map_or("", |(_, p)| p);
                    (r.property.id().to_string(), json!(path))
                })
                .collect();
            let passed = report.passed();
            let mut answer = Answer::new(
                if passed { 0 } else { 1 },
                text,
                if passed { "pass" } else { "fail" },
            );
            answer.witness = Value::Object(failures);
            answer.instances = Value::Object(instances);
            answer.seed = json!(report.seed);
            Ok(answer)
        }
    }
}
