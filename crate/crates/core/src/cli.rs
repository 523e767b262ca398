//! Command-line front end.
//!
//! Exit status: 0 on success, 2 for bad arguments or unreadable graphs, 3 when
//! a computation rejects its input, 4 when a verification check fails.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::complex::{build_complex, euler_char, homology_ranks_with, ComplexKind, RankMethod};
use crate::error::Error;
use crate::graph::{parse_graph, spanning_tree, EdgeSet, Multigraph, VertexSet};
use crate::nucleus::{elser_brute, elser_from_w, enumerate_nuclei, w_polynomial, ElserVector};
use crate::recurrence::{build_rdct, els0_from_rdct, elser_via_euler, euler_dc, MinorJson};
use crate::structure::{ear_decomposition, euler_vanishes, predict_sign_profile, realize_tree_minor};
use crate::verify::{cycle_bound, fixture, fixture_checks, sweep, verify_graph, verify_graph_timed, SweepOptions};

pub const SCHEMA: &str = "nucleus-lab/1";

const EXIT_ARGS: i32 = 2;
const EXIT_DOMAIN: i32 = 3;
const EXIT_CHECK: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "nucleus-lab", version, about = "Elser numbers and nucleus complexes of small multigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct GraphArg {
    /// Graph file, inline edge list ("0 1;1 2;2 0"), or a name: K<n>, C<n>, P<n>, S<n>, <c>K2, G1..G4
    #[arg(long, short = 'g')]
    graph: String,
}

#[derive(Args, Debug, Clone, Copy)]
struct Format {
    /// JSON output
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Plain-text output
    #[arg(long)]
    text: bool,
}

impl Format {
    fn json_or(self, default_json: bool) -> bool {
        if self.json {
            true
        } else if self.text {
            false
        } else {
            default_json
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
enum Method {
    Brute,
    Euler,
    W,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Elser numbers els_k for a range of k
    Els {
        #[command(flatten)]
        graph: GraphArg,
        /// k or an inclusive range a..b
        #[arg(long, default_value = "0..4", value_parser = parse_range)]
        k: (u32, u32),
        #[arg(long, value_enum, default_value = "brute")]
        method: Method,
        #[command(flatten)]
        format: Format,
    },
    /// List every nucleus
    Nuclei {
        #[command(flatten)]
        graph: GraphArg,
        /// Also print the nucleus polynomial W(G, y)
        #[arg(long)]
        w: bool,
        #[command(flatten)]
        format: Format,
    },
    /// The U-nucleus complex
    Complex {
        #[command(flatten)]
        graph: GraphArg,
        /// Comma-separated vertex ids
        #[arg(long = "U", value_parser = parse_vertices, default_value = "")]
        u: VertexSet,
        /// Only the reduced Euler characteristic
        #[arg(long)]
        euler: bool,
        /// Compute the Euler characteristic by deletion-contraction
        #[arg(long, requires = "euler")]
        recursive: bool,
        #[command(flatten)]
        format: Format,
    },
    /// Reduced rational homology of the U-nucleus complex
    Homology {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long = "U", value_parser = parse_vertices, default_value = "")]
        u: VertexSet,
        /// Skip the modular shortcut and eliminate over the integers
        #[arg(long)]
        exact: bool,
        #[command(flatten)]
        format: Format,
    },
    /// Restricted deletion/contraction tree
    Rdct {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long = "U", value_parser = parse_vertices, default_value = "")]
        u: VertexSet,
        #[command(flatten)]
        format: Format,
    },
    /// Ear decomposition, or a legal move order for a tree minor
    Ears {
        #[command(flatten)]
        graph: GraphArg,
        /// Spanning tree edge ids (default: breadth-first tree)
        #[arg(long, value_parser = parse_edges)]
        tree: Option<EdgeSet>,
        /// Edges to contract; with --delete, realizes G / C \ D
        #[arg(long, value_parser = parse_edges, requires = "delete")]
        contract: Option<EdgeSet>,
        /// Edges to delete
        #[arg(long, value_parser = parse_edges, requires = "contract")]
        delete: Option<EdgeSet>,
        #[command(flatten)]
        format: Format,
    },
    /// Predicted signs of els_k, and vanishing of chi for a given U
    Predict {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long = "U", value_parser = parse_vertices)]
        u: Option<VertexSet>,
        /// Largest k to tabulate
        #[arg(long, default_value_t = 6)]
        k: u32,
        #[command(flatten)]
        format: Format,
    },
    /// Run every applicable check on one graph
    Verify {
        #[arg(long, short = 'g', required_unless_present = "fixtures")]
        graph: Option<String>,
        /// Largest k (a range a..b uses b)
        #[arg(long, default_value = "4", value_parser = parse_range)]
        k: (u32, u32),
        /// Include wall-clock time
        #[arg(long)]
        timing: bool,
        /// Run the fixture pins and the cycle bound instead
        #[arg(long, conflicts_with = "graph")]
        fixtures: bool,
        #[command(flatten)]
        format: Format,
    },
    /// Verify every connected graph up to a given order
    Sweep {
        /// Largest vertex count
        #[arg(long, default_value_t = 5)]
        n: u32,
        /// Largest k (a range a..b uses b)
        #[arg(long, default_value = "4", value_parser = parse_range)]
        k: (u32, u32),
        /// One graph per isomorphism class
        #[arg(long)]
        dedup: bool,
        /// Homology of every U-nucleus complex of the 2-connected graphs
        #[arg(long)]
        homology: bool,
        /// Seeded random multigraphs to add
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = SweepOptions::default().seed)]
        seed: u64,
        #[arg(long)]
        threads: Option<usize>,
        /// Refuse families larger than this
        #[arg(long, default_value_t = SweepOptions::default().max_graphs)]
        max_graphs: u64,
        #[command(flatten)]
        format: Format,
    },
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let num = |x: &str| x.trim().parse::<u32>().map_err(|_| format!("'{x}' is not a nonnegative integer"));
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(format!("empty range {s}"));
            }
            Ok((a, b))
        }
        None => {
            let k = num(s)?;
            Ok((k, k))
        }
    }
}

fn parse_ids(s: &str) -> Result<u64, String> {
    let mut bits = 0u64;
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let id: u32 = part.parse().map_err(|_| format!("'{part}' is not a nonnegative integer"))?;
        if id >= 64 {
            return Err(format!("id {id} out of range (ids must be below 64)"));
        }
        bits |= 1 << id;
    }
    Ok(bits)
}

fn parse_vertices(s: &str) -> Result<VertexSet, String> {
    parse_ids(s).map(VertexSet)
}

fn parse_edges(s: &str) -> Result<EdgeSet, String> {
    parse_ids(s).map(EdgeSet)
}

/// Named families: `K<n>`, `C<n>`, `P<n>`, `S<n>` (star with n leaves),
/// `<c>K2`, and the fixtures `G1`..`G4`.
fn named_graph(name: &str) -> Option<Multigraph> {
    if let Some(g) = fixture(name) {
        return Some(g);
    }
    if let Some(c) = name.strip_suffix("K2").and_then(|c| c.parse::<u32>().ok()) {
        return (1..64).contains(&c).then(|| Multigraph::parallel_k2(c));
    }
    let (head, tail) = name.split_at(1.min(name.len()));
    let n: u32 = tail.parse().ok()?;
    match head {
        "K" if (1..=11).contains(&n) => Some(Multigraph::complete(n)),
        "C" if (3..=63).contains(&n) => Some(Multigraph::cycle(n)),
        "P" if (1..=63).contains(&n) => Some(Multigraph::path(n)),
        "S" if (1..=62).contains(&n) => Some(Multigraph::star(n)),
        _ => None,
    }
}

enum Failure {
    Args(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn load_graph(spec: &str) -> Result<Multigraph, Failure> {
    if let Some(g) = named_graph(spec) {
        return Ok(g);
    }
    let text = if Path::new(spec).is_file() {
        std::fs::read_to_string(spec).map_err(|e| Failure::Args(format!("cannot read {spec}: {e}")))?
    } else if spec.chars().any(|c| c.is_ascii_digit()) && (spec.contains(' ') || spec.contains('{')) {
        spec.replace(';', "\n")
    } else {
        return Err(Failure::Args(format!("'{spec}' is not a file, an inline edge list or a known graph name")));
    };
    parse_graph(&text).map_err(|e| Failure::Args(format!("{spec}: {e}")))
}

fn envelope(command: &str, graph: Option<&Multigraph>, body: Value) -> Value {
    let mut out = json!({ "schema": SCHEMA, "command": command });
    if let Some(g) = graph {
        out["graph"] = serde_json::to_value(MinorJson::from(g)).expect("serializable");
    }
    if let Value::Object(map) = body {
        for (k, v) in map {
            out[k] = v;
        }
    }
    out
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

/// Output text and whether a check failed.
struct Rendered {
    text: String,
    failed: bool,
}

impl Rendered {
    fn ok(text: String) -> Self {
        Rendered { text, failed: false }
    }
}

fn render(json: bool, value: Value, text: impl FnOnce() -> String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(&value).expect("serializable");
        s.push('\n');
        s
    } else {
        text()
    }
}

fn execute(command: Command) -> Result<Rendered, Failure> {
    match command {
        Command::Els { graph, k: (lo, hi), method, format } => {
            let g = load_graph(&graph.graph)?;
            g.require_connected()?;
            if g.vertex_count() < 2 {
                return Err(Error::SingleVertex.into());
            }
            let w = if method == Method::W { Some(w_polynomial(&g)?) } else { None };
            let mut values = std::collections::BTreeMap::new();
            for k in lo..=hi {
                let v: BigInt = match method {
                    Method::Brute => elser_brute(&g, k)?,
                    Method::Euler => elser_via_euler(&g, k)?,
                    Method::W => elser_from_w(w.as_ref().expect("computed"), k),
                };
                values.insert(k, v);
            }
            let vector = ElserVector { values };
            let value = envelope("els", Some(&g), to_value(&vector));
            Ok(Rendered::ok(render(format.json_or(false), value, || {
                vector.values.iter().map(|(k, v)| format!("els_{k} = {v}\n")).collect()
            })))
        }
        Command::Nuclei { graph, w, format } => {
            let g = load_graph(&graph.graph)?;
            let nuclei = enumerate_nuclei(&g)?;
            let poly = if w { Some(w_polynomial(&g)?) } else { None };
            let mut body = json!({ "count": nuclei.len(), "nuclei": to_value(&nuclei) });
            if let Some(p) = &poly {
                body["W"] = json!(p.to_string());
            }
            let value = envelope("nuclei", Some(&g), body);
            Ok(Rendered::ok(render(format.json_or(false), value, || {
                let mut out: String =
                    nuclei.iter().map(|n| format!("edges {} vertices {}\n", n.edges, n.vertices)).collect();
                out.push_str(&format!("{} nuclei\n", nuclei.len()));
                if let Some(p) = &poly {
                    out.push_str(&format!("W = {p}\n"));
                }
                out
            })))
        }
        Command::Complex { graph, u, euler, recursive, format } => {
            let g = load_graph(&graph.graph)?;
            if euler {
                let chi = if recursive { euler_dc(&g, u)? } else { euler_char(&build_complex(&g, u)?) };
                let value = envelope("complex", Some(&g), json!({ "U": to_value(&u), "euler": chi }));
                return Ok(Rendered::ok(render(format.json_or(false), value, || format!("chi = {chi}\n"))));
            }
            let c = build_complex(&g, u)?;
            let chi = euler_char(&c);
            let value = envelope(
                "complex",
                Some(&g),
                json!({ "U": to_value(&u), "complex": to_value(&c), "dimension": c.dimension(), "euler": chi }),
            );
            Ok(Rendered::ok(render(format.json_or(false), value, || {
                let mut out = String::new();
                match &c.kind {
                    ComplexKind::SpherePair(n) => {
                        out.push_str(&format!(
                            "two {}-cells glued along the boundary of a simplex on {}\n",
                            n - 1,
                            c.ground
                        ));
                    }
                    ComplexKind::Simplicial(_) => {
                        let facets: Vec<String> = c.maximal_faces().iter().map(|f| f.to_string()).collect();
                        out.push_str(&format!("facets: {}\n", facets.join(" ")));
                    }
                }
                out.push_str(&format!("faces: {}\ndimension: {}\nchi = {chi}\n", c.face_count(), c.dimension()));
                out
            })))
        }
        Command::Homology { graph, u, exact, format } => {
            let g = load_graph(&graph.graph)?;
            let c = build_complex(&g, u)?;
            let method = if exact { RankMethod::Exact } else { RankMethod::Certified };
            let h = homology_ranks_with(&c, method)?;
            let value = envelope(
                "homology",
                Some(&g),
                json!({ "U": to_value(&u), "ranks": to_value(&h.ranks), "euler": euler_char(&c) }),
            );
            Ok(Rendered::ok(render(format.json_or(false), value, || {
                if h.ranks.is_empty() {
                    "acyclic\n".to_string()
                } else {
                    h.ranks.iter().map(|(d, r)| format!("H_{d} = Q^{r}\n")).collect()
                }
            })))
        }
        Command::Rdct { graph, u, format } => {
            let g = load_graph(&graph.graph)?;
            let tree = build_rdct(&g, u)?;
            let leaves = tree.leaves();
            let tree_leaves = tree.tree_leaves().len();
            let chi = tree.euler_from_leaves();
            let els0 = els0_from_rdct(&tree);
            let value = envelope(
                "rdct",
                Some(&g),
                json!({
                    "U": to_value(&u),
                    "tree": to_value(&tree),
                    "leaves": leaves.len(),
                    "tree_leaves": tree_leaves,
                    "euler": chi,
                    "els0": els0.to_string(),
                }),
            );
            Ok(Rendered::ok(render(format.json_or(false), value, || {
                let mut out = tree.outline();
                out.push_str(&format!(
                    "{} leaves ({tree_leaves} trees), chi = {chi}, -(K_2 leaves) = {els0}\n",
                    leaves.len()
                ));
                out
            })))
        }
        Command::Ears { graph, tree, contract, delete, format } => {
            let g = load_graph(&graph.graph)?;
            if let (Some(c), Some(d)) = (contract, delete) {
                let moves = realize_tree_minor(&g, c, d)?;
                let value = envelope("ears", Some(&g), json!({ "C": to_value(&c), "D": to_value(&d), "moves": to_value(&moves) }));
                return Ok(Rendered::ok(render(format.json_or(false), value, || {
                    moves
                        .iter()
                        .map(|m| match m {
                            crate::structure::MinorMove::Contract(e) => format!("contract {e}\n"),
                            crate::structure::MinorMove::Delete(e) => format!("delete {e}\n"),
                        })
                        .collect()
                })));
            }
            let t = match tree {
                Some(t) => t,
                None => spanning_tree(&g)?,
            };
            let d = ear_decomposition(&g, t)?;
            let value = envelope("ears", Some(&g), to_value(&d));
            Ok(Rendered::ok(render(format.json_or(false), value, || {
                let mut out = format!("tree {}\n", d.tree);
                for (i, ear) in d.ears.iter().enumerate() {
                    let path: Vec<String> = ear.vertices.iter().map(|v| v.to_string()).collect();
                    let edges: Vec<String> = ear.edges.iter().map(|e| e.to_string()).collect();
                    out.push_str(&format!("R{}: {} (edges {})\n", i + 1, path.join("-"), edges.join(",")));
                }
                out
            })))
        }
        Command::Predict { graph, u, k, format } => {
            let g = load_graph(&graph.graph)?;
            let profile = predict_sign_profile(&g)?;
            let signs: Vec<(u32, &str)> = (0..=k)
                .map(|k| {
                    let s = match profile.sign(k) {
                        std::cmp::Ordering::Less => "-",
                        std::cmp::Ordering::Equal => "0",
                        std::cmp::Ordering::Greater => "+",
                    };
                    (k, s)
                })
                .collect();
            let vanishes = u.map(|u| euler_vanishes(&g, u)).transpose()?;
            let mut body = json!({
                "profile": to_value(&profile),
                "signs": signs.iter().map(|(k, s)| (k.to_string(), json!(s))).collect::<serde_json::Map<_, _>>(),
            });
            if let (Some(u), Some(v)) = (u, vanishes) {
                body["U"] = to_value(&u);
                body["euler_vanishes"] = json!(v);
            }
            let value = envelope("predict", Some(&g), body);
            Ok(Rendered::ok(render(format.json_or(false), value, || {
                let mut out = format!(
                    "2-connected: {}\nleaf blocks: {}\nthreshold: {}\n",
                    profile.two_connected, profile.leaf_blocks, profile.threshold
                );
                let row: Vec<String> = signs.iter().map(|(k, s)| format!("{k}:{s}")).collect();
                out.push_str(&format!("signs: {}\n", row.join(" ")));
                if let (Some(u), Some(v)) = (u, vanishes) {
                    out.push_str(&format!("chi vanishes at U={u}: {v}\n"));
                }
                out
            })))
        }
        Command::Verify { graph, k: (_, kmax), timing, fixtures, format } => {
            if fixtures {
                let mut records = fixture_checks(kmax)?;
                records.push(cycle_bound(7, kmax.min(5))?);
                let failed = records.iter().any(|r| !r.passed);
                let value = envelope("verify", None, json!({ "checks": to_value(&records) }));
                let text = render(format.json_or(false), value, || {
                    records
                        .iter()
                        .map(|r| {
                            let status = if r.passed { "PASS" } else { "FAIL" };
                            format!("{status}  {:<24} {:>7}  {}\n", r.check.name(), r.instances, r.statement)
                        })
                        .collect()
                });
                return Ok(Rendered { text, failed });
            }
            let g = load_graph(graph.as_deref().expect("required by clap"))?;
            let report = if timing { verify_graph_timed(&g, kmax)? } else { verify_graph(&g, kmax)? };
            let failed = !report.passed();
            let mut body = to_value(&report);
            body["passed"] = json!(!failed);
            let value = envelope("verify", None, body);
            Ok(Rendered { text: render(format.json_or(false), value, || report.to_text()), failed })
        }
        Command::Sweep { n, k: (_, kmax), dedup, homology, samples, seed, threads, max_graphs, format } => {
            let opts = SweepOptions {
                nmax: n,
                kmax,
                dedup,
                multigraph_samples: samples,
                seed,
                homology,
                threads,
                max_graphs,
            };
            let summary = sweep(&opts)?;
            let failed = summary.failures > 0;
            let value = envelope("sweep", None, json!({ "options": to_value(&opts), "summary": to_value(&summary) }));
            Ok(Rendered { text: render(format.json_or(true), value, || summary.to_text()), failed })
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the exit
/// status. Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ARGS } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command) {
        Ok(r) => {
            let _ = out.write_all(r.text.as_bytes());
            if r.failed {
                let _ = writeln!(err, "error: verification failed");
                EXIT_CHECK
            } else {
                0
            }
        }
        Err(Failure::Args(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ARGS
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("nucleus-lab").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn els_text_and_json() {
        let (code, out, _) = call(&["els", "--graph", "0 1", "--k", "0..3"]);
        assert_eq!(code, 0);
        assert_eq!(out, "els_0 = -1\nels_1 = 0\nels_2 = 2\nels_3 = 6\n");
        let (_, json, _) = call(&["els", "--graph", "K2", "--k", "0..3", "--json"]);
        let v: Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["els"]["3"], "6");
        for m in ["euler", "w"] {
            let (_, other, _) = call(&["els", "--graph", "C4", "--k", "0..4", "--method", m]);
            assert_eq!(other, call(&["els", "--graph", "C4", "--k", "0..4"]).1);
        }
    }

    #[test]
    fn complex_euler() {
        let (code, out, _) = call(&["complex", "--graph", "0 1;1 2;2 0", "--U", "1,2", "--euler"]);
        assert_eq!((code, out.as_str()), (0, "chi = 1\n"));
        let (_, rec, _) = call(&["complex", "--graph", "K3", "--U", "1,2", "--euler", "--recursive"]);
        assert_eq!(rec, "chi = 1\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["els", "--graph", "0 1", "--bogus"]).0, EXIT_ARGS);
        assert_eq!(call(&["els", "--graph", "no-such-file.txt"]).0, EXIT_ARGS);
        assert_eq!(call(&["els", "--graph", "0 1", "--k", "3..1"]).0, EXIT_ARGS);
        assert_eq!(call(&["els", "--graph", "0 1", "--json", "--text"]).0, EXIT_ARGS);
        assert_eq!(call(&["els", "--graph", "P1"]).0, EXIT_DOMAIN);
        assert_eq!(call(&["complex", "--graph", "K3", "--U", "7"]).0, EXIT_DOMAIN);
        assert_eq!(call(&["ears", "--graph", "P3"]).0, EXIT_DOMAIN);
        assert_eq!(call(&["sweep", "--n", "7", "--homology"]).0, EXIT_DOMAIN);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn sweep_defaults_to_json() {
        let (code, out, _) = call(&["sweep", "--n", "4", "--k", "3", "--dedup"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["summary"]["failures"], 0);
        assert_eq!(v["summary"]["graphs_by_order"]["4"], 6);
        let (_, text, _) = call(&["sweep", "--n", "4", "--k", "3", "--dedup", "--text", "--threads", "2"]);
        assert!(text.contains("failures 0"));
    }

    #[test]
    fn every_verb_runs() {
        for args in [
            vec!["nuclei", "--graph", "2K2", "--w"],
            vec!["complex", "--graph", "3K2"],
            vec!["homology", "--graph", "K4", "--U", "0,1"],
            vec!["rdct", "--graph", "C4"],
            vec!["ears", "--graph", "K4"],
            vec!["ears", "--graph", "K4", "--contract", "1", "--delete", "3,4,5"],
            vec!["predict", "--graph", "P4", "--U", "1"],
            vec!["verify", "--graph", "G1", "--k", "3"],
            vec!["verify", "--fixtures", "--k", "5"],
        ] {
            let (code, text, err) = call(&args);
            assert_eq!(code, 0, "{args:?}: {err}");
            let mut json_args = args.clone();
            json_args.push("--json");
            let (code, json, _) = call(&json_args);
            assert_eq!(code, 0);
            assert!(!text.is_empty());
            let v: Value = serde_json::from_str(&json).unwrap();
            assert_eq!(v["schema"], SCHEMA, "{args:?}");
        }
    }

    #[test]
    fn identical_invocations_identical_output() {
        let a = call(&["sweep", "--n", "4", "--samples", "5"]);
        let b = call(&["sweep", "--n", "4", "--samples", "5", "--threads", "3"]);
        assert_eq!(a, b);
    }
}
