//! Library side of the `dpx` command: argument types and one function per subcommand.
//!
//! Every command writes to the given sink and returns a [`Failure`] carrying the exit code.

pub mod spec;

use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use defperm::combinatorics::OrderedPartition;
use defperm::geometry::{big_json, Limits, Oracle};
use defperm::lattice::{Bound, VertexEquivalence};
use defperm::tables::{self, Family, Table};
use defperm::{bitrees, painted, subset, trees, Error};
use serde_json::{json, Value};

pub use spec::PolytopeSpec;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Parser, Debug)]
#[command(name = "dpx", version, about = "Deformed permutahedra, shuffles, multiplihedra and biassociahedra")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// f-vector, empty face first.
    Fvector { spec: String },
    /// Vertices, in order of first appearance along lexicographic permutations.
    Vertices {
        spec: String,
        /// Also report how many permutations reach each vertex.
        #[arg(long)]
        fibers: bool,
    },
    /// Facet inequalities `Σ_{i∈S} x_i ≥ b`.
    Facets { spec: String },
    /// One JSON object per line.
    Enum {
        #[arg(value_enum)]
        model: Model,
        /// `m n` for painted trees and bitrees, `n` otherwise.
        params: Vec<usize>,
        /// Keep only objects of this rank (face dimension).
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Counting tables as CSV: rows m, columns n.
    Tables {
        /// Table name; all twelve when omitted.
        #[arg(long)]
        family: Option<String>,
        /// Largest m + n printed.
        #[arg(long, default_value_t = 9)]
        max: usize,
        /// Recompute the cells by enumeration and report mismatches.
        #[arg(long)]
        verify: bool,
        /// Largest m + n recomputed under --verify.
        #[arg(long, default_value_t = 6)]
        verify_max: usize,
    },
    /// Structural checks with a witness on failure.
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        spec: String,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    PaintedTrees,
    Bitrees,
    BinaryTrees,
    SchroderTrees,
    OrderedPartitions,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    /// The rotation order is a lattice.
    Lattice,
    /// Every vertex fiber is an interval of the weak order.
    Interval,
    /// The vertex fibers form a lattice congruence of the weak order.
    Congruence,
    /// Every vertex has degree equal to the dimension.
    Simple,
}

/// A failed command and its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    pub fn mismatch(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TooLarge { .. } => 3,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: 2, message: e.to_string() }
    }
}

pub type Outcome = std::result::Result<(), Failure>;

pub fn run(cli: &Cli, out: &mut dyn Write) -> Outcome {
    if let Some(k) = cli.global.jobs {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build_global();
    }
    let limits = Limits::from_env();
    let format = cli.global.format;
    match &cli.command {
        Command::Fvector { spec } => cmd_fvector(spec, format, &limits, out),
        Command::Vertices { spec, fibers } => cmd_vertices(spec, *fibers, format, &limits, out),
        Command::Facets { spec } => cmd_facets(spec, format, &limits, out),
        Command::Enum { model, params, rank } => cmd_enum(*model, params, *rank, &limits, out),
        Command::Tables { family, max, verify, verify_max } => {
            cmd_tables(family.as_deref(), *max, *verify, *verify_max, &limits, out)
        }
        Command::Check { kind, spec } => cmd_check(*kind, spec, format, &limits, out),
    }
}

fn oracle_for(text: &str, limits: &Limits) -> Result<(PolytopeSpec, Oracle), Failure> {
    let spec = PolytopeSpec::parse(text)?;
    limits.check(spec.n())?;
    let oracle = Oracle::new(&spec.build()?, limits)?;
    Ok((spec, oracle))
}

fn schema(name: &str) -> String {
    format!("dpx/{name}/v{SCHEMA_VERSION}")
}

fn emit_json(out: &mut dyn Write, v: &Value) -> Outcome {
    writeln!(out, "{}", serde_json::to_string(v).expect("json"))?;
    Ok(())
}

pub fn cmd_fvector(text: &str, format: Format, limits: &Limits, out: &mut dyn Write) -> Outcome {
    let (spec, oracle) = oracle_for(text, limits)?;
    let f = oracle.f_vector().with_empty_face();
    match format {
        Format::Json => emit_json(
            out,
            &json!({"schema": schema("fvector"), "spec": spec.to_string(), "n": spec.n(), "dim": oracle.dim(), "fvector": f}),
        ),
        Format::Text => {
            let items: Vec<String> = f.iter().map(u64::to_string).collect();
            writeln!(out, "{}", items.join(","))?;
            Ok(())
        }
    }
}

pub fn cmd_vertices(text: &str, fibers: bool, format: Format, limits: &Limits, out: &mut dyn Write) -> Outcome {
    let (spec, oracle) = oracle_for(text, limits)?;
    let sizes: Vec<usize> = oracle.fibers().iter().map(Vec::len).collect();
    match format {
        Format::Json => {
            let vertices: Vec<Value> = oracle
                .vertices()
                .iter()
                .zip(&sizes)
                .map(|(v, &k)| {
                    let x: Vec<Value> = v.iter().map(big_json).collect();
                    if fibers {
                        json!({"x": x, "fiber": k})
                    } else {
                        json!({"x": x})
                    }
                })
                .collect();
            emit_json(out, &json!({"schema": schema("vertices"), "spec": spec.to_string(), "n": spec.n(), "vertices": vertices}))
        }
        Format::Text => {
            let cells: Vec<Vec<String>> =
                oracle.vertices().iter().map(|v| v.iter().map(|x| x.to_string()).collect()).collect();
            let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
            for (row, k) in cells.iter().zip(&sizes) {
                let mut line: String = row.iter().map(|c| format!("{c:>width$}")).collect::<Vec<_>>().join(" ");
                if fibers {
                    let _ = write!(line, "  fiber {k}");
                }
                writeln!(out, "{}", line.trim_end())?;
            }
            Ok(())
        }
    }
}

pub fn cmd_facets(text: &str, format: Format, limits: &Limits, out: &mut dyn Write) -> Outcome {
    let (spec, oracle) = oracle_for(text, limits)?;
    let facets = oracle.facets();
    match format {
        Format::Json => {
            let items: Vec<Value> = facets
                .iter()
                .map(|f| json!({"S": subset::elements(f.support).map(|i| i + 1).collect::<Vec<_>>(), "b": big_json(&f.bound)}))
                .collect();
            emit_json(out, &json!({"schema": schema("facets"), "spec": spec.to_string(), "n": spec.n(), "facets": items}))
        }
        Format::Text => {
            let lhs: Vec<String> = facets
                .iter()
                .map(|f| subset::elements(f.support).map(|i| format!("x{}", i + 1)).collect::<Vec<_>>().join(" + "))
                .collect();
            let width = lhs.iter().map(String::len).max().unwrap_or(0);
            for (l, f) in lhs.iter().zip(&facets) {
                writeln!(out, "{l:<width$} >= {}", f.bound)?;
            }
            Ok(())
        }
    }
}

fn partition_json(mu: &OrderedPartition) -> Value {
    json!(mu.parts().iter().map(|&p| subset::elements(p).map(|i| i + 1).collect::<Vec<_>>()).collect::<Vec<_>>())
}

pub fn cmd_enum(model: Model, params: &[usize], rank: Option<usize>, limits: &Limits, out: &mut dyn Write) -> Outcome {
    let want = match model {
        Model::PaintedTrees | Model::Bitrees => 2,
        _ => 1,
    };
    if params.len() != want {
        return Err(Failure::usage(format!("{model:?} takes {want} size parameter(s)")));
    }
    limits.check(params.iter().sum())?;
    let keep = |r: usize| rank.is_none_or(|k| k == r);
    let items: Vec<Value> = match model {
        Model::PaintedTrees => painted::enumerate(params[0], params[1], rank).iter().map(|t| t.to_json()).collect(),
        Model::Bitrees => bitrees::enumerate(params[0], params[1], rank).iter().map(|t| t.to_json()).collect(),
        Model::BinaryTrees => {
            if keep(0) {
                trees::enumerate_binary(params[0]).iter().map(|t| t.to_json()).collect()
            } else {
                Vec::new()
            }
        }
        Model::SchroderTrees => trees::enumerate_schroder(params[0])
            .iter()
            .filter(|t| keep(trees::schroder_rank(t)))
            .map(|t| t.to_json())
            .collect(),
        Model::OrderedPartitions => {
            let n = params[0];
            OrderedPartition::enumerate(n)
                .iter()
                .filter(|mu| keep(n - mu.num_parts()))
                .map(partition_json)
                .collect()
        }
    };
    for v in &items {
        writeln!(out, "{}", serde_json::to_string(v).expect("json"))?;
    }
    Ok(())
}

pub fn cmd_tables(
    family: Option<&str>,
    max: usize,
    verify: bool,
    verify_max: usize,
    limits: &Limits,
    out: &mut dyn Write,
) -> Outcome {
    let families: Vec<Family> = match family {
        Some(name) => vec![name.parse::<Family>()?],
        None => Family::ALL.to_vec(),
    };
    let mut mismatches = Vec::new();
    for (k, &f) in families.iter().enumerate() {
        if families.len() > 1 {
            if k > 0 {
                writeln!(out)?;
            }
            writeln!(out, "# {f}")?;
        }
        write!(out, "{}", Table::compute(f, max).to_csv())?;
        if verify {
            mismatches.extend(tables::verify(f, verify_max.min(max), limits)?);
        }
    }
    if mismatches.is_empty() {
        Ok(())
    } else {
        let lines: Vec<String> = mismatches.iter().map(|m| m.to_string()).collect();
        Err(Failure::mismatch(lines.join("\n")))
    }
}

fn coords(oracle: &Oracle, v: usize) -> String {
    let xs: Vec<String> = oracle.vertices()[v].iter().map(|x| x.to_string()).collect();
    format!("({})", xs.join(","))
}

fn coords_json(oracle: &Oracle, v: usize) -> Value {
    json!(oracle.vertices()[v].iter().map(big_json).collect::<Vec<_>>())
}

pub fn cmd_check(kind: CheckKind, text: &str, format: Format, limits: &Limits, out: &mut dyn Write) -> Outcome {
    let (spec, oracle) = oracle_for(text, limits)?;
    let (verdict, witness_text, witness): (bool, Vec<String>, Value) = match kind {
        CheckKind::Lattice => match oracle.rotation_poset().lattice_witness() {
            None => (true, Vec::new(), Value::Null),
            Some(w) => {
                let what = match w.missing {
                    Bound::Join => "join",
                    Bound::Meet => "meet",
                };
                let bounds: Vec<String> = w.extremal_bounds.iter().map(|&v| coords(&oracle, v)).collect();
                (
                    false,
                    vec![
                        format!("no {what}: {} and {}", coords(&oracle, w.a), coords(&oracle, w.b)),
                        format!("{} bounds: {}", if w.missing == Bound::Join { "minimal upper" } else { "maximal lower" }, bounds.join(" ")),
                    ],
                    json!({
                        "missing": what,
                        "pair": [coords_json(&oracle, w.a), coords_json(&oracle, w.b)],
                        "bounds": w.extremal_bounds.iter().map(|&v| coords_json(&oracle, v)).collect::<Vec<_>>(),
                    }),
                )
            }
        },
        CheckKind::Interval | CheckKind::Congruence => {
            let eq = VertexEquivalence::from_oracle(&oracle)?;
            let bad = eq.classes().iter().position(|c| !eq.is_weak_interval(c));
            match (kind, bad) {
                (_, Some(v)) => (
                    false,
                    vec![format!("fiber of {} is not a weak order interval", coords(&oracle, v))],
                    json!({"reason": "fiber not an interval", "vertex": coords_json(&oracle, v)}),
                ),
                (CheckKind::Interval, None) => (true, Vec::new(), Value::Null),
                _ => {
                    if eq.congruence_property() {
                        (true, Vec::new(), Value::Null)
                    } else {
                        (
                            false,
                            vec!["projections to fiber minima or maxima do not preserve the weak order".to_string()],
                            json!({"reason": "projection not order preserving"}),
                        )
                    }
                }
            }
        }
        CheckKind::Simple => {
            let mut degree = vec![0usize; oracle.vertices().len()];
            for f in oracle.faces().iter().filter(|f| f.dim == 1) {
                for v in f.vertices.ones() {
                    degree[v] += 1;
                }
            }
            let d = oracle.dim();
            match degree.iter().position(|&k| k != d) {
                None => (true, Vec::new(), Value::Null),
                Some(v) => (
                    false,
                    vec![format!("vertex {} has degree {} in dimension {d}", coords(&oracle, v), degree[v])],
                    json!({"vertex": coords_json(&oracle, v), "degree": degree[v], "dim": d}),
                ),
            }
        }
    };
    match format {
        Format::Json => emit_json(
            out,
            &json!({
                "schema": schema("check"),
                "kind": format!("{kind:?}").to_lowercase(),
                "spec": spec.to_string(),
                "verdict": verdict,
                "witness": witness,
            }),
        ),
        Format::Text => {
            writeln!(out, "{verdict}")?;
            for line in witness_text {
                writeln!(out, "{line}")?;
            }
            Ok(())
        }
    }
}
