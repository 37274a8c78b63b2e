//! `domrec`: domination parameters, optimal sets, reconfiguration graphs
//! and realizability constructions from the command line.
//!
//! Exit codes: 0 ok, 1 other failure (including a failed verification),
//! 2 parse error, 3 unknown variant or no construction, 4 undefined or
//! infinite parameter, 5 bad host, 6 parameter mismatch.

mod input;

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use domrec_core::constructions::{
    construct_connelly_with_pendants, construct_id, construct_locating, construct_upper, multiply, ConstructionKind,
};
use domrec_core::reconfig::{
    analyze, build_k_dominating_graph, build_variant_graph, frozen_vertices, stuck_vertices, AdjacencyModel,
    ReconfigGraph,
};
use domrec_core::solvers::{bb_optimal, parameter};
use domrec_core::verify::verify_realizability;
use domrec_core::{DomVariant, Error, Graph, VertexSet};

use input::{load_graph, Format};

/// Failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }

    pub fn parse(message: impl Into<String>) -> Self {
        Failure::new(2, message)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ParameterUndefinedOrInfinite { .. } => 4,
            Error::NoConstructionForVariant(_) => 3,
            Error::EmptyHost => 5,
            Error::ParameterMismatch { .. } => 6,
            Error::MalformedHeader
            | Error::TruncatedBody { .. }
            | Error::TrailingData
            | Error::InvalidCharacter(_)
            | Error::NonCanonicalPadding
            | Error::EdgeListSyntax(_) => 2,
            _ => 1,
        };
        Failure::new(code, e.to_string())
    }
}

#[derive(Parser)]
#[command(name = "domrec", version, about = "Domination parameters and their reconfiguration graphs")]
struct Cli {
    /// Worker threads for the solvers (default: all cores).
    #[arg(long, global = true, env = "DOMREC_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Graph file, `-` for standard input, or a name (K4-e, C5, P3, 2K1, c, bull, z).
    #[arg(long, short)]
    input: String,
    #[arg(long, value_enum, default_value = "auto")]
    format: Format,
    /// JSON sidecar mapping labels to vertex indices.
    #[arg(long)]
    labels: Option<PathBuf>,
}

impl InputArgs {
    fn load(&self) -> Result<Graph, Failure> {
        load_graph(&self.input, self.format, self.labels.as_deref())
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Slide,
    Jump,
}

impl From<Model> for AdjacencyModel {
    fn from(m: Model) -> Self {
        match m {
            Model::Slide => AdjacencyModel::Slide,
            Model::Jump => AdjacencyModel::Jump,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RgraphOut {
    Dot,
    G6,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphOut {
    G6,
    Dot,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Connelly,
    Id,
    Locating,
    Upper,
}

#[derive(Subcommand)]
enum Command {
    /// Print a parameter value.
    Param {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        variant: String,
    },
    /// List every optimal set.
    Sets {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        variant: String,
        #[arg(long)]
        json: bool,
    },
    /// Emit a reconfiguration graph (`--variant k-dom --k N` for D_k).
    Rgraph {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        variant: String,
        #[arg(long, value_enum, default_value = "slide")]
        model: Model,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value = "dot")]
        out: RgraphOut,
    },
    /// Build a realizability construction for a host graph.
    Construct {
        #[arg(long, value_enum)]
        target: Target,
        /// Host graph: file, `-` or name.
        #[arg(long)]
        h: String,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
        /// Extra gadget copies (extra pendants on c for connelly).
        #[arg(long, default_value_t = 0)]
        extra: usize,
        #[arg(long, value_enum, default_value = "g6")]
        out: GraphOut,
        /// Write the label → index sidecar JSON here.
        #[arg(long)]
        labels: Option<PathBuf>,
    },
    /// Build, solve and compare the construction for a variant with H.
    Verify {
        #[arg(long)]
        h: String,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
        #[arg(long)]
        variant: String,
        #[arg(long, value_enum, default_value = "slide")]
        model: Model,
    },
    /// Connectivity, diameters and stuck/frozen vertices of a reconfiguration graph.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        variant: String,
        #[arg(long, value_enum, default_value = "slide")]
        model: Model,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        stuck: bool,
        #[arg(long)]
        frozen: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads.filter(|&t| t > 0) {
        // only fails if a pool already exists, which cannot happen here
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("domrec: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn variant(name: &str) -> Result<DomVariant, Failure> {
    name.parse()
        .map_err(|_| Failure::new(3, format!("unknown variant '{name}'")))
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Param { input, variant: v } => {
            let v = variant(&v)?;
            let g = input.load()?;
            Ok(format!("{}\n", parameter(&g, v)))
        }
        Command::Sets { input, variant: v, json } => {
            let v = variant(&v)?;
            let g = input.load()?;
            let opt = bb_optimal(&g, v);
            if json {
                let sets: Vec<_> = opt.family.iter().map(|s| set_json(&g, s)).collect();
                let doc = json!({ "variant": v, "value": opt.value, "sets": sets });
                return Ok(format!("{}\n", pretty(&doc)));
            }
            Ok(opt
                .family
                .iter()
                .map(|s| s.iter().map(|v| g.label(v)).collect::<Vec<_>>().join(",") + "\n")
                .collect())
        }
        Command::Rgraph {
            input,
            variant: v,
            model,
            k,
            out,
        } => {
            let g = input.load()?;
            let r = reconfig_graph(&g, &v, model, k)?;
            match out {
                RgraphOut::Dot => Ok(r.to_dot()),
                RgraphOut::Json => Ok(format!("{}\n", pretty(&r.to_json()))),
                RgraphOut::G6 => Ok(format!("{}\n", r.to_graph()?.to_graph6()?)),
            }
        }
        Command::Construct {
            target,
            h,
            format,
            extra,
            out,
            labels,
        } => {
            let host = load_graph(&h, format, None)?;
            let c = match target {
                Target::Connelly => construct_connelly_with_pendants(&host, 2 + extra)?,
                Target::Id => construct_id(&host)?,
                Target::Locating => construct_locating(&host, false)?,
                Target::Upper => construct_upper(&host)?,
            };
            let c = if extra > 0 && c.kind != ConstructionKind::Connelly {
                multiply(&c, extra)?
            } else {
                c
            };
            if let Some(path) = labels {
                let map: BTreeMap<String, usize> = c.label_map();
                fs::write(&path, pretty(&json!(map)) + "\n")
                    .map_err(|e| Failure::new(1, format!("writing {}: {e}", path.display())))?;
            }
            Ok(match out {
                GraphOut::G6 => format!("{}\n", c.graph.to_graph6()?),
                GraphOut::Dot => c.graph.to_dot(),
                GraphOut::Edges => c.graph.to_edge_list(),
            })
        }
        Command::Verify { h, format, variant: v, model } => {
            let v = variant(&v)?;
            let host = load_graph(&h, format, None)?;
            let report = verify_realizability(&host, v, model.into())?;
            let text = format!("{}\n", pretty(&json!(report)));
            if report.isomorphic {
                Ok(text)
            } else {
                print!("{text}");
                Err(Failure::new(1, "variant graph is not isomorphic to H"))
            }
        }
        Command::Analyze {
            input,
            variant: v,
            model,
            k,
            stuck,
            frozen,
        } => {
            let g = input.load()?;
            let r = reconfig_graph(&g, &v, model, k)?;
            let a = analyze(&r);
            let mut doc = json!({
                "model": r.model,
                "nodes": a.nodes,
                "edges": a.edges,
                "components": a.component_count,
                "component_sizes": a.component_sizes,
                "diameters": a.diameters,
                "connected": a.is_connected(),
            });
            let node_sets = |f: &dyn Fn(usize) -> VertexSet| -> serde_json::Value {
                (0..r.node_count())
                    .map(|i| json!({ "node": g.format_set(r.node(i)), "vertices": g.format_set(f(i)) }))
                    .collect()
            };
            if stuck {
                doc["stuck"] = node_sets(&|i| stuck_vertices(&r, i));
            }
            if frozen {
                let map = frozen_vertices(&r);
                doc["frozen"] = node_sets(&|i| map[&i]);
            }
            Ok(format!("{}\n", pretty(&doc)))
        }
    }
}

/// The variant graph, or `D_k` for `--variant k-dom`.
fn reconfig_graph(g: &Graph, name: &str, model: Model, k: Option<usize>) -> Result<ReconfigGraph, Failure> {
    if name == "k-dom" {
        let k = k.ok_or_else(|| Failure::parse("--variant k-dom needs --k"))?;
        return Ok(build_k_dominating_graph(g, k));
    }
    if k.is_some() {
        return Err(Failure::parse("--k is only meaningful with --variant k-dom"));
    }
    Ok(build_variant_graph(g, variant(name)?, model.into())?)
}

fn set_json(g: &Graph, s: VertexSet) -> serde_json::Value {
    json!({
        "vertices": s.to_vec(),
        "labels": s.iter().map(|v| g.label(v)).collect::<Vec<_>>(),
    })
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}
