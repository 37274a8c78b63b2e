use std::collections::BTreeMap;
use std::fs;
use std::io::Read;
use std::path::Path;

use domrec_core::constructions::{make_gadget, GadgetKind};
use domrec_core::Graph;

use crate::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Auto,
    G6,
    Edges,
}

/// Reads a graph from a file, `-` (standard input), or a name such as
/// `K4-e`, `C5`, `2K1` or a gadget (`c`, `bull`, `z`).
pub fn load_graph(spec: &str, format: Format, labels: Option<&Path>) -> Result<Graph, Failure> {
    let text = if spec == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::parse(format!("reading standard input: {e}")))?;
        Some(buf)
    } else if Path::new(spec).is_file() {
        Some(fs::read_to_string(spec).map_err(|e| Failure::parse(format!("reading {spec}: {e}")))?)
    } else {
        None
    };
    let graph = match text {
        Some(text) => parse(&text, format)?,
        None => named(spec).ok_or_else(|| Failure::parse(format!("no file or known graph named '{spec}'")))?,
    };
    match labels {
        Some(path) => apply_labels(graph, path),
        None => Ok(graph),
    }
}

fn named(spec: &str) -> Option<Graph> {
    Graph::named(spec).or_else(|| GadgetKind::from_name(spec).map(|k| make_gadget(k).graph))
}

fn parse(text: &str, format: Format) -> Result<Graph, Failure> {
    let format = match format {
        Format::Auto => detect(text),
        f => f,
    };
    let parsed = match format {
        Format::Edges => Graph::parse_edge_list(text),
        _ => Graph::parse_graph6(text.trim()),
    };
    parsed.map_err(|e| Failure::parse(e.to_string()))
}

/// graph6 never uses digits, so a leading number means an edge list.
fn detect(text: &str) -> Format {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if first.parse::<usize>().is_ok() {
        Format::Edges
    } else {
        Format::G6
    }
}

/// Applies a `{"label": index}` sidecar.
fn apply_labels(graph: Graph, path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::parse(format!("reading {}: {e}", path.display())))?;
    let map: BTreeMap<String, usize> =
        serde_json::from_str(&text).map_err(|e| Failure::parse(format!("label sidecar: {e}")))?;
    let mut labels: Vec<Option<String>> = vec![None; graph.n()];
    for (label, v) in map {
        let slot = labels
            .get_mut(v)
            .ok_or_else(|| Failure::parse(format!("label '{label}' names vertex {v} of {}", graph.n())))?;
        *slot = Some(label);
    }
    let labels = labels
        .into_iter()
        .enumerate()
        .map(|(v, l)| l.unwrap_or_else(|| v.to_string()))
        .collect();
    graph.with_labels(labels).map_err(|e| Failure::parse(e.to_string()))
}
