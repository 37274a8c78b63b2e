//! End-to-end realizability checks: build the construction for a host `H`,
//! solve it, build the variant graph and compare it with `H`.

mod iso;

use std::fmt;

use serde::Serialize;

use crate::constructions::{construct_connelly, construct_id, construct_locating, construct_upper, Construction};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reconfig::{AdjacencyModel, ReconfigGraph};
use crate::solvers::{bb_optimal, ParamValue};
use crate::variants::DomVariant;

pub use iso::{are_isomorphic, find_induced, is_isomorphism, ISOMORPHISM_SOFT_LIMIT};

/// The construction that realizes `variant`, if there is one.
pub fn construction_for(h: &Graph, variant: DomVariant) -> Result<Construction> {
    match variant {
        DomVariant::Gamma | DomVariant::Ir | DomVariant::Total | DomVariant::Paired | DomVariant::Connected => {
            construct_connelly(h)
        }
        DomVariant::IdCode => construct_id(h),
        DomVariant::LocDom => construct_locating(h, false),
        DomVariant::LocTotal => construct_locating(h, true),
        DomVariant::UpperGamma => construct_upper(h),
        other => Err(Error::NoConstructionForVariant(other)),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub edges: usize,
}

impl From<&Graph> for GraphSummary {
    fn from(g: &Graph) -> Self {
        GraphSummary {
            n: g.n(),
            edges: g.edge_count(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub variant: DomVariant,
    pub model: AdjacencyModel,
    pub host: GraphSummary,
    pub constructed: GraphSummary,
    pub value: ParamValue,
    pub set_count: usize,
    /// Optimal sets rendered with the construction's labels.
    pub sets: Vec<String>,
    /// Whether the optimal family is exactly `{S_1, ..., S_n}`.
    pub family_matches: bool,
    pub isomorphic: bool,
    /// `witness[i]` is the variant-graph node matched with host vertex `i`.
    pub witness: Option<Vec<usize>>,
    /// Whether the witness sends each host vertex to the set containing it.
    pub witness_natural: bool,
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "variant      {}", self.variant)?;
        writeln!(f, "model        {}", self.model)?;
        writeln!(f, "host         n={} m={}", self.host.n, self.host.edges)?;
        writeln!(f, "constructed  n={} m={}", self.constructed.n, self.constructed.edges)?;
        writeln!(f, "value        {}", self.value)?;
        writeln!(f, "sets         {}", self.set_count)?;
        writeln!(f, "family       {}", if self.family_matches { "as expected" } else { "differs" })?;
        write!(f, "isomorphic   {}", self.isomorphic)
    }
}

/// Builds the construction for `variant` on `h`, solves it and checks that
/// the variant graph is isomorphic to `h`.
///
/// Fails with [`Error::ParameterMismatch`] when the computed optimum differs
/// from the construction's closed form.
pub fn verify_realizability(h: &Graph, variant: DomVariant, model: AdjacencyModel) -> Result<Report> {
    let c = construction_for(h, variant)?;
    verify_construction(&c, variant, model)
}

/// [`verify_realizability`] for an already built construction (for example
/// one grown by [`crate::constructions::multiply`]).
pub fn verify_construction(c: &Construction, variant: DomVariant, model: AdjacencyModel) -> Result<Report> {
    let h = c.host();
    let g = &c.graph;
    let opt = bb_optimal(g, variant);
    let expected = c.closed_form_value();
    if opt.value != ParamValue::Finite(expected) {
        return Err(Error::ParameterMismatch {
            variant,
            expected,
            found: opt.value.to_string(),
        });
    }
    let mut expected_family = c.expected_family();
    expected_family.sort_unstable();
    let family_matches = opt.family.sets() == expected_family.as_slice();
    let r = ReconfigGraph::new(g, opt.family.clone(), model);

    let (witness, witness_natural) = match natural_witness(c, &r) {
        Some(w) => (Some(w), true),
        None => (
            r.to_graph().ok().and_then(|rg| are_isomorphic(&h, &rg.without_labels())),
            false,
        ),
    };
    Ok(Report {
        variant,
        model,
        host: (&h).into(),
        constructed: g.into(),
        value: opt.value,
        set_count: opt.family.len(),
        sets: opt.family.iter().map(|s| g.format_set(s)).collect(),
        family_matches,
        isomorphic: witness.is_some(),
        witness,
        witness_natural,
    })
}

/// Maps host vertex `i` to the unique node containing it, when that map is
/// an isomorphism.
fn natural_witness(c: &Construction, r: &ReconfigGraph) -> Option<Vec<usize>> {
    let n = c.host_order;
    if r.node_count() != n {
        return None;
    }
    let host_set = c.host().vertices();
    let mut map = vec![usize::MAX; n];
    for (i, s) in r.nodes.iter().enumerate() {
        let inside = s & host_set;
        if inside.len() != 1 {
            return None;
        }
        map[inside.first()?] = i;
    }
    let rg = r.to_graph().ok()?.without_labels();
    is_isomorphism(&c.host(), &rg, &map).then_some(map)
}

/// The graphs no jump-model γ-graph contains as an induced subgraph:
/// K_{3,2}, P3 ∨ K2 and (K2 ∪ K1) ∨ 2K1.
pub fn forbidden_jump_subgraphs() -> Vec<(&'static str, Graph)> {
    let k2 = Graph::complete(2);
    vec![
        ("K3,2", join(&Graph::empty(3), &Graph::empty(2))),
        ("P3+K2", join(&Graph::path(3), &k2)),
        ("(K2uK1)+2K1", join(&k2.disjoint_union(&Graph::empty(1)), &Graph::empty(2))),
    ]
}

/// First forbidden pattern found in `g`, with its embedding.
pub fn find_forbidden(g: &Graph) -> Option<(&'static str, Vec<usize>)> {
    forbidden_jump_subgraphs()
        .into_iter()
        .find_map(|(name, p)| find_induced(g, &p).map(|m| (name, m)))
}

fn join(a: &Graph, b: &Graph) -> Graph {
    let mut g = a.disjoint_union(b);
    for u in 0..a.n() {
        for v in 0..b.n() {
            g = g.with_edge(u, a.n() + v).expect("join endpoints are in range");
        }
    }
    g
}
