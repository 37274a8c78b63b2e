//! Reconfiguration graphs over families of vertex sets.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{escape_dot, Graph, VertexSet};
use crate::solvers::{bb_optimal, for_each_subset_of_size, ParamValue, SetFamily};
use crate::variants::{is_dominating, DomVariant};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AdjacencyModel {
    /// Swap one member for an adjacent non-member.
    Slide,
    /// Swap one member for any non-member.
    Jump,
    /// Add or remove a single vertex (k-dominating graphs only).
    AddRemove,
}

impl fmt::Display for AdjacencyModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AdjacencyModel::Slide => "slide",
            AdjacencyModel::Jump => "jump",
            AdjacencyModel::AddRemove => "add-remove",
        })
    }
}

impl FromStr for AdjacencyModel {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "slide" => Ok(AdjacencyModel::Slide),
            "jump" => Ok(AdjacencyModel::Jump),
            "add-remove" | "addremove" => Ok(AdjacencyModel::AddRemove),
            _ => Err(format!("unknown adjacency model '{s}'")),
        }
    }
}

/// True iff `t` is `s` with one member slid along an edge of `g`.
pub fn adjacent_slide(g: &Graph, s: VertexSet, t: VertexSet) -> Result<bool> {
    if s.len() != t.len() {
        return Err(Error::CardinalityMismatch(s.len(), t.len()));
    }
    Ok(slide_step(g, s, t))
}

/// True iff `t` is `s` with one member replaced.
pub fn adjacent_jump(s: VertexSet, t: VertexSet) -> Result<bool> {
    if s.len() != t.len() {
        return Err(Error::CardinalityMismatch(s.len(), t.len()));
    }
    Ok((s ^ t).len() == 2)
}

fn slide_step(g: &Graph, s: VertexSet, t: VertexSet) -> bool {
    let diff = s ^ t;
    if diff.len() != 2 {
        return false;
    }
    let u = diff.first().unwrap();
    let v = diff.last().unwrap();
    g.has_edge(u, v)
}

fn adjacent(g: &Graph, model: AdjacencyModel, s: VertexSet, t: VertexSet) -> bool {
    let diff = (s ^ t).len();
    match model {
        AdjacencyModel::Slide => diff == 2 && s.len() == t.len() && slide_step(g, s, t),
        AdjacencyModel::Jump => diff == 2 && s.len() == t.len(),
        AdjacencyModel::AddRemove => diff == 1,
    }
}

#[derive(Clone, Debug)]
pub struct ReconfigGraph {
    pub base: Graph,
    pub nodes: SetFamily,
    /// Pairs `(i, j)` of node indices with `i < j`, in lexicographic order.
    pub edges: Vec<(usize, usize)>,
    pub model: AdjacencyModel,
}

impl ReconfigGraph {
    /// Connects every adjacent pair of `nodes`.
    pub fn new(base: &Graph, nodes: SetFamily, model: AdjacencyModel) -> Self {
        let sets = nodes.sets();
        let edges: Vec<(usize, usize)> = (0..sets.len())
            .into_par_iter()
            .flat_map_iter(|i| {
                (i + 1..sets.len())
                    .filter(move |&j| adjacent(base, model, sets[i], sets[j]))
                    .map(move |j| (i, j))
            })
            .collect();
        ReconfigGraph {
            base: base.clone(),
            nodes,
            edges,
            model,
        }
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn node(&self, i: usize) -> VertexSet {
        self.nodes.sets()[i]
    }

    pub fn index_of(&self, s: VertexSet) -> Option<usize> {
        self.nodes.position(s)
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.node_count()];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    /// The reconfiguration graph itself as a [`Graph`], node `i` labeled by
    /// its vertex set. Fails above [`crate::graph::MAX_VERTICES`] nodes.
    pub fn to_graph(&self) -> Result<Graph> {
        let labels = self.nodes.iter().map(|s| self.base.format_set(s)).collect();
        Graph::from_edge_list(self.node_count(), &self.edges, Some(labels))
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph R {\n");
        for (i, s) in self.nodes.iter().enumerate() {
            out.push_str(&format!("  {i} [label=\"{}\"];\n", escape_dot(&self.base.format_set(s))));
        }
        for &(i, j) in &self.edges {
            out.push_str(&format!("  {i} -- {j};\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "model": self.model,
            "nodes": self.nodes.iter().map(|s| self.base.format_set(s)).collect::<Vec<_>>(),
            "node_vertices": self.nodes.iter().map(|s| s.to_vec()).collect::<Vec<_>>(),
            "edges": self.edges,
        })
    }
}

/// Reconfiguration graph on every optimal set of `variant`.
pub fn build_variant_graph(g: &Graph, variant: DomVariant, model: AdjacencyModel) -> Result<ReconfigGraph> {
    if model == AdjacencyModel::AddRemove {
        return Err(Error::UnsupportedModel(model));
    }
    let opt = bb_optimal(g, variant);
    match opt.value {
        ParamValue::Finite(_) => Ok(ReconfigGraph::new(g, opt.family, model)),
        value => Err(Error::ParameterUndefinedOrInfinite {
            variant,
            value: value.to_string(),
        }),
    }
}

/// `D_k(G)`: dominating sets of cardinality at most `k`, adjacent when they
/// differ in one vertex. `k` is capped at `n`.
pub fn build_k_dominating_graph(g: &Graph, k: usize) -> ReconfigGraph {
    let n = g.n();
    let mut sets = Vec::new();
    for size in 0..=k.min(n) {
        for_each_subset_of_size(n, size, |s| {
            if is_dominating(g, s) {
                sets.push(s);
            }
        });
    }
    ReconfigGraph::new(g, SetFamily::new(sets), AdjacencyModel::AddRemove)
}

/// Members of node `i` that every neighboring node also contains.
pub fn stuck_vertices(r: &ReconfigGraph, node: usize) -> VertexSet {
    let s = r.node(node);
    r.edges
        .iter()
        .filter_map(|&(i, j)| match (i == node, j == node) {
            (true, _) => Some(j),
            (_, true) => Some(i),
            _ => None,
        })
        .fold(s, |acc, m| acc & r.node(m))
}

/// Connected components as sorted node-index lists, ordered by first node.
pub fn components(r: &ReconfigGraph) -> Vec<Vec<usize>> {
    let adj = r.adjacency();
    let mut seen = vec![false; r.node_count()];
    let mut out = Vec::new();
    for start in 0..r.node_count() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// For each node, the base vertices lying in every set of its component.
pub fn frozen_vertices(r: &ReconfigGraph) -> BTreeMap<usize, VertexSet> {
    let mut out = BTreeMap::new();
    for comp in components(r) {
        let common = comp.iter().fold(r.base.vertices(), |acc, &i| acc & r.node(i));
        for i in comp {
            out.insert(i, common);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Analysis {
    pub nodes: usize,
    pub edges: usize,
    pub component_count: usize,
    pub component_sizes: Vec<usize>,
    pub diameters: Vec<usize>,
}

impl Analysis {
    pub fn is_connected(&self) -> bool {
        self.component_count <= 1
    }
}

/// Component count, sizes and diameters, by breadth-first search.
pub fn analyze(r: &ReconfigGraph) -> Analysis {
    let adj = r.adjacency();
    let comps = components(r);
    let diameters = comps
        .par_iter()
        .map(|comp| comp.iter().map(|&s| eccentricity(&adj, s)).max().unwrap_or(0))
        .collect();
    Analysis {
        nodes: r.node_count(),
        edges: r.edges.len(),
        component_count: comps.len(),
        component_sizes: comps.iter().map(Vec::len).collect(),
        diameters,
    }
}

fn eccentricity(adj: &[Vec<usize>], start: usize) -> usize {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[start] = 0;
    let mut queue = VecDeque::from([start]);
    let mut far = 0;
    while let Some(u) = queue.pop_front() {
        far = far.max(dist[u]);
        for &w in &adj[u] {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    far
}
