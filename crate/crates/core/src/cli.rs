//! Command-line front end. `run` is the whole program minus process exit, so
//! it can be driven from tests.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::classifier::{classify_genus, constructive_embedding, genus_class_from_graph, GenusClass};
use crate::graph::{build_cayley, to_dot, to_json_document, CayleyGraph, Girth, GraphError};
use crate::parser::parse_ring_spec;
use crate::ring::{build_ring, FiniteRing};
use crate::topology::{GenusCertificate, DEFAULT_GENUS_BUDGET};
use crate::verifier::{run_suite, seeded_genus};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_INDETERMINATE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "invcayley", version, about = "Involutory Cayley graphs of finite commutative rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Emit Graphviz DOT (export only).
    #[arg(long, global = true, conflicts_with = "json")]
    pub dot: bool,
    /// Step budget for the genus and isomorphism searches.
    #[arg(long, global = true, default_value_t = DEFAULT_GENUS_BUDGET)]
    pub budget: u64,
    /// Largest ring order enumerated by `verify`.
    #[arg(long, global = true, default_value_t = 16)]
    pub max_order: usize,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ring and graph invariants with the genus verdict.
    Analyze { spec: String },
    /// Genus class and the clause that decides it.
    Classify { spec: String },
    /// Genus by search, seeded with a construction when one applies.
    Genus { spec: String },
    /// Explicit genus-1 rotation system.
    Embed { spec: String },
    /// The graph as DOT or JSON adjacency.
    Export { spec: String },
    /// Theorem checks over the catalog.
    Verify,
}

#[derive(Debug, Serialize)]
pub struct AnalyzeReport {
    pub order: usize,
    pub characteristic: usize,
    pub local_factor_orders: Vec<usize>,
    pub involutions: Vec<String>,
    pub degree: Option<usize>,
    pub connected: bool,
    pub components: usize,
    pub bipartite: bool,
    pub girth: Girth,
    pub genus_class: GenusClass,
    pub evidence: AnalyzeEvidence,
}

#[derive(Debug, Serialize)]
pub struct AnalyzeEvidence {
    pub ring_clause: String,
    pub graph_clause: String,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, code)) => match emit(&cli, &text, stdout) {
            Ok(()) => code,
            Err(Failure(msg)) => {
                let _ = writeln!(stderr, "error: {msg}");
                EXIT_ERROR
            }
        },
        Err(Failure(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_ERROR
        }
    }
}

fn emit(cli: &Cli, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn load(spec: &str) -> Result<(FiniteRing, CayleyGraph), Failure> {
    let parsed = parse_ring_spec(spec).map_err(|e| Failure(format!("cannot parse ring spec {spec:?}: {e}")))?;
    let ring = build_ring(&parsed)?;
    let graph = build_cayley(&ring);
    Ok((ring, graph))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

fn execute(cli: &Cli) -> Result<(String, i32), Failure> {
    match &cli.command {
        Command::Analyze { spec } => {
            let (ring, graph) = load(spec)?;
            let report = analyze(&ring, &graph)?;
            let text = if cli.json {
                json(&report)
            } else {
                let girth = match report.girth {
                    Girth::Finite(k) => k.to_string(),
                    Girth::Infinite => "infinite".into(),
                };
                format!(
                    "order: {}\ncharacteristic: {}\nlocal factor orders: {:?}\ninvolutions: {}\ndegree: {}\nconnected: {} ({} components)\nbipartite: {}\ngirth: {}\ngenus class: {}\nevidence: {}; {}\n",
                    report.order,
                    report.characteristic,
                    report.local_factor_orders,
                    report.involutions.join(", "),
                    report.degree.map_or("irregular".into(), |d| d.to_string()),
                    report.connected,
                    report.components,
                    report.bipartite,
                    girth,
                    report.genus_class,
                    report.evidence.ring_clause,
                    report.evidence.graph_clause,
                )
            };
            Ok((text, EXIT_OK))
        }
        Command::Classify { spec } => {
            let (ring, _) = load(spec)?;
            let verdict = classify_genus(&ring.local_decomposition());
            let text = if cli.json { json(&verdict) } else { format!("{} ({})\n", verdict.class, verdict.clause) };
            Ok((text, EXIT_OK))
        }
        Command::Genus { spec } => {
            let (ring, graph) = load(spec)?;
            let cert = seeded_genus(&ring, &graph, cli.budget);
            let code = if cert.exact_genus().is_some() { EXIT_OK } else { EXIT_INDETERMINATE };
            let text = if cli.json {
                json(&cert)
            } else {
                match &cert {
                    GenusCertificate::Embedding(e) => {
                        format!("genus {} (exact; embedding with {} faces)\n", e.genus, e.face_count())
                    }
                    GenusCertificate::Bounds { low, high } => {
                        format!("genus between {low} and {high} (budget exhausted)\n")
                    }
                    other => format!("{other:?}\n"),
                }
            };
            Ok((text, code))
        }
        Command::Embed { spec } => {
            let (ring, _) = load(spec)?;
            let c = constructive_embedding(&ring).ok_or_else(|| Failure("no constructive embedding; use genus".into()))?;
            let text = if cli.json {
                json(&c.embedding)
            } else {
                let mut s = format!("{}: {} faces, genus {}\n", c.family, c.embedding.face_count(), c.embedding.genus);
                for (v, order) in c.embedding.rotation.iter().enumerate() {
                    let names: Vec<String> = order.iter().map(|&w| ring.label(w as usize)).collect();
                    s.push_str(&format!("{}: {}\n", ring.label(v), names.join(" ")));
                }
                s
            };
            Ok((text, EXIT_OK))
        }
        Command::Export { spec } => {
            let (_, graph) = load(spec)?;
            let text = if cli.json {
                let mut s = serde_json::to_string(&to_json_document(&graph)).expect("serializable");
                s.push('\n');
                s
            } else {
                to_dot(&graph, &format!("Gamma({spec})"))
            };
            Ok((text, EXIT_OK))
        }
        Command::Verify => {
            if cli.max_order < 2 {
                return Err(Failure("--max-order must be at least 2".into()));
            }
            let report = run_suite(cli.max_order, cli.budget);
            let code = if report.failure_count() > 0 {
                EXIT_ERROR
            } else if report.skip_count() > 0 {
                EXIT_INDETERMINATE
            } else {
                EXIT_OK
            };
            let text = if cli.json {
                let mut s = report.to_json();
                s.push('\n');
                s
            } else {
                let mut s = format!("catalog {} up to order {}: {} rings\n", report.catalog_version, report.max_order, report.rings);
                for t in &report.theorems {
                    s.push_str(&format!(
                        "{:<13} checked {:>4}  failures {}  skipped {}\n",
                        t.id.name(),
                        t.checked,
                        t.failures.len(),
                        t.skipped.len()
                    ));
                    for f in &t.failures {
                        s.push_str(&format!("  FAIL {}: expected {}, observed {}\n", f.spec, f.expected, f.observed));
                    }
                    for k in &t.skipped {
                        s.push_str(&format!("  SKIP {}: {}\n", k.spec, k.reason));
                    }
                }
                s
            };
            Ok((text, code))
        }
    }
}

/// Invariants and genus verdict of `ring`, whose graph is `graph`.
pub fn analyze(ring: &FiniteRing, graph: &CayleyGraph) -> Result<AnalyzeReport, GraphError> {
    let d = ring.local_decomposition();
    let verdict = classify_genus(&d);
    let graph_verdict = genus_class_from_graph(graph)?;
    let components = graph.connected_components().len();
    Ok(AnalyzeReport {
        order: ring.order(),
        characteristic: ring.characteristic(),
        local_factor_orders: d.factor_orders(),
        involutions: ring.involutions().into_iter().map(|u| ring.label(u)).collect(),
        degree: graph.is_regular(),
        connected: components == 1,
        components,
        bipartite: graph.is_bipartite(),
        girth: graph.girth(),
        genus_class: verdict.class,
        evidence: AnalyzeEvidence { ring_clause: verdict.clause, graph_clause: graph_verdict.clause },
    })
}
