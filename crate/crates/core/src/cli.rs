//! The `forestpoly` command line.
//!
//! Every argument that names an input accepts either inline JSON or a file
//! path; text starting with `{` or `[` is treated as inline JSON. Output is
//! JSON or canonical polynomial text. Exit codes: 0 when every check
//! passes, 1 on a failed verification, 2 on usage or input errors.

use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::bijection::{self, PairAFile, PairBFile, WeightSequence};
use crate::forest::{enumerate_rooted_trees, f_poly, t_poly, RootedTree};
use crate::graph::Graph;
use crate::oracle;
use crate::prufer;
use crate::reciprocity::ReciprocityReport;

/// Largest `n` the exhaustive subcommands accept without `--force`.
pub const SAFE_N: usize = 7;

#[derive(Parser, Debug)]
#[command(name = "forestpoly", version, about = "Spanning rooted forest polynomials and reciprocity checks")]
struct Cli {
    /// Allow exhaustive subcommands on graphs with more than 7 vertices.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print f_G, or its value at a point.
    Poly {
        graph: String,
        /// Comma-separated integers v0,v1,...,vn.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        at: Option<Vec<i64>>,
    },
    /// Print the spanning tree polynomial t_G.
    Tpoly { graph: String },
    /// Verify reciprocity for one graph or for every graph on k vertices.
    Reciprocity {
        #[arg(required_unless_present = "all_n", conflicts_with = "all_n")]
        graph: Option<String>,
        #[arg(long, value_name = "K")]
        all_n: Option<usize>,
    },
    /// Apply phi to an A pair.
    Encode { pair_a: String },
    /// Apply psi to a B pair.
    Decode { pair_b: String },
    /// Check psi(phi(a)) = a and phi(psi(b)) = b over all pairs of a graph.
    Roundtrip {
        #[arg(long)]
        graph: String,
    },
    /// Largest-leaf Prüfer coding of rooted trees.
    Prufer {
        #[command(subcommand)]
        action: PruferAction,
    },
    /// Compare enumeration against the Kirchhoff determinant.
    Count { graph: String },
    /// Stream A and/or B pairs as JSON lines, then their cardinalities.
    EnumeratePairs {
        graph: String,
        #[arg(long, value_enum)]
        side: Option<Side>,
    },
}

#[derive(Subcommand, Debug)]
enum PruferAction {
    Encode { tree: String },
    Decode {
        seq: String,
        /// Vertex count; defaults to the sequence length plus one.
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Side {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(format!("json: {e}"))
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = std::result::Result<bool, Failure>;

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {}", msg.replace('\n', " "));
            2
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn load(arg: &str) -> std::result::Result<String, Failure> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(Path::new(arg))
        .map_err(|e| Failure::Usage(format!("cannot read {arg}: {e}")))
}

fn load_graph(arg: &str, force: bool) -> std::result::Result<Graph, Failure> {
    let g = Graph::from_json(&load(arg)?)?;
    check_size(g.n(), force)?;
    Ok(g)
}

fn check_size(n: usize, force: bool) -> std::result::Result<(), Failure> {
    if n > SAFE_N && !force {
        return Err(Failure::Usage(format!(
            "n = {n} exceeds {SAFE_N}; exhaustive work grows like (n+1)^(n-1), pass --force to proceed"
        )));
    }
    Ok(())
}

fn number(v: &BigInt) -> Value {
    match v.to_u64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

fn emit(out: &mut dyn Write, v: &impl serde::Serialize) -> std::result::Result<(), Failure> {
    writeln!(out, "{}", serde_json::to_string(v)?)?;
    Ok(())
}

fn execute(cli: Cli, out: &mut dyn Write) -> Outcome {
    let force = cli.force;
    match cli.command {
        Command::Poly { graph, at } => {
            let g = load_graph(&graph, force)?;
            let f = f_poly(&g);
            match at {
                Some(point) => writeln!(out, "{}", f.evaluate(&point)?)?,
                None => writeln!(out, "{f}")?,
            }
            Ok(true)
        }
        Command::Tpoly { graph } => {
            let g = load_graph(&graph, force)?;
            writeln!(out, "{}", t_poly(&g)?)?;
            Ok(true)
        }
        Command::Reciprocity { graph, all_n } => {
            let report = match (graph, all_n) {
                (_, Some(k)) => {
                    if k < 1 {
                        return Err(Failure::Usage("--all-n needs at least one vertex".into()));
                    }
                    check_size(k, force)?;
                    ReciprocityReport::exhaustive(k)
                }
                (Some(graph), None) => ReciprocityReport::for_graph(&load_graph(&graph, force)?),
                (None, None) => unreachable!("clap requires one of the two"),
            };
            emit(out, &report)?;
            Ok(report.all_pass)
        }
        Command::Encode { pair_a } => {
            let file: PairAFile = serde_json::from_str(&load(&pair_a)?)?;
            let (g, a) = file.into_pair()?;
            let b = bijection::phi(&g, &a)?;
            emit(out, &PairBFile::new(&g, &b))?;
            Ok(true)
        }
        Command::Decode { pair_b } => {
            let file: PairBFile = serde_json::from_str(&load(&pair_b)?)?;
            let (g, b) = file.into_pair()?;
            let a = bijection::psi(&g, &b)?;
            emit(out, &PairAFile::new(&g, &a))?;
            Ok(true)
        }
        Command::Roundtrip { graph } => {
            let g = load_graph(&graph, force)?;
            let mut a_count = 0usize;
            let mut a_ok = true;
            for a in bijection::enumerate_a(&g) {
                a_count += 1;
                let back = bijection::phi(&g, &a).and_then(|b| bijection::psi(&g, &b));
                a_ok &= matches!(back, Ok(ref x) if *x == a);
            }
            let mut b_count = 0usize;
            let mut b_ok = true;
            for b in bijection::enumerate_b(&g) {
                b_count += 1;
                let back = bijection::psi(&g, &b).and_then(|a| bijection::phi(&g, &a));
                b_ok &= matches!(back, Ok(ref x) if *x == b);
            }
            let all_pass = a_ok && b_ok && a_count == b_count;
            emit(
                out,
                &json!({
                    "n": g.n(),
                    "a_count": a_count,
                    "b_count": b_count,
                    "a_to_b_to_a": a_ok,
                    "b_to_a_to_b": b_ok,
                    "all_pass": all_pass,
                }),
            )?;
            Ok(all_pass)
        }
        Command::Prufer { action } => match action {
            PruferAction::Encode { tree } => {
                let t = RootedTree::from_json(&load(&tree)?)?;
                emit(out, &prufer::encode(&t))?;
                Ok(true)
            }
            PruferAction::Decode { seq, n } => {
                let code: WeightSequence = serde_json::from_str(&load(&seq)?)?;
                let n = n.unwrap_or(code.len() + 1);
                writeln!(out, "{}", prufer::decode(&code, n)?.to_json())?;
                Ok(true)
            }
        },
        Command::Count { graph } => {
            let g = load_graph(&graph, force)?;
            let enumerated = BigInt::from(enumerate_rooted_trees(&g).count());
            let kirchhoff = oracle::extended_tree_count(&g);
            let charpoly = oracle::forest_charpoly_check(&g);
            let all_pass = enumerated == kirchhoff && charpoly;
            emit(
                out,
                &json!({
                    "n": g.n(),
                    "enumeration": number(&enumerated),
                    "kirchhoff": number(&kirchhoff),
                    "charpoly_check": charpoly,
                    "all_pass": all_pass,
                }),
            )?;
            Ok(all_pass)
        }
        Command::EnumeratePairs { graph, side } => {
            let g = load_graph(&graph, force)?;
            let mut counts = serde_json::Map::new();
            if side != Some(Side::B) {
                let mut count = 0usize;
                for a in bijection::enumerate_a(&g) {
                    emit(out, &PairAFile::new(&g, &a))?;
                    count += 1;
                }
                counts.insert("A".into(), json!(count));
            }
            if side != Some(Side::A) {
                let mut count = 0usize;
                for b in bijection::enumerate_b(&g) {
                    emit(out, &PairBFile::new(&g, &b))?;
                    count += 1;
                }
                counts.insert("B".into(), json!(count));
            }
            emit(out, &Value::Object(counts))?;
            Ok(true)
        }
    }
}
