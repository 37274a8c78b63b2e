//! Gadgets and the realizability constructions built from them.
//!
//! Numbering is fixed and part of the output contract:
//!
//! * Connelly: `v1..vn`, then `a`, `b`, `c`, `c1`, `c2` (further pendants
//!   `c3`, ... when requested).
//! * Identifying codes: `v1..vn`; for each `i` the C gadgets `C_i` and
//!   `C*_i` (7 vertices each, in gadget order `x1..x4, y1..y3`); then `a`,
//!   `b`, `C_a`, `C_b`.
//! * Locating domination: as above with bulls (`x1..x3, y1, y2`).
//! * Upper domination: `v1..vn`; `Z_1..Z_n` (gadget order `z, x1..x3,
//!   y1..y3`); then `Z*`.
//!
//! [`multiply`] appends further gadget copies after everything else.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GadgetKind {
    /// C4 with pendants on three of its vertices.
    CGadget,
    /// Triangle with pendants on two of its vertices.
    Bull,
    /// Two triangles joined by a perfect matching plus a vertex `z` on the
    /// x-triangle.
    ZGadget,
}

impl GadgetKind {
    pub fn from_name(name: &str) -> Option<Self> {
        match name.to_ascii_lowercase().as_str() {
            "c" | "c-gadget" | "cgadget" => Some(GadgetKind::CGadget),
            "bull" => Some(GadgetKind::Bull),
            "z" | "z-gadget" | "zgadget" => Some(GadgetKind::ZGadget),
            _ => None,
        }
    }

    fn layout(self) -> GadgetLayout {
        match self {
            GadgetKind::CGadget => GadgetLayout {
                labels: &["x1", "x2", "x3", "x4", "y1", "y2", "y3"],
                edges: &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5), (2, 6)],
                attachment: 0,
                forced: &[0, 1, 2],
            },
            GadgetKind::Bull => GadgetLayout {
                labels: &["x1", "x2", "x3", "y1", "y2"],
                edges: &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)],
                attachment: 0,
                forced: &[0, 1],
            },
            GadgetKind::ZGadget => GadgetLayout {
                labels: &["z", "x1", "x2", "x3", "y1", "y2", "y3"],
                edges: &[
                    (0, 1),
                    (0, 2),
                    (0, 3),
                    (1, 2),
                    (2, 3),
                    (1, 3),
                    (4, 5),
                    (5, 6),
                    (4, 6),
                    (1, 4),
                    (2, 5),
                    (3, 6),
                ],
                attachment: 1,
                forced: &[1, 2, 3],
            },
        }
    }
}

struct GadgetLayout {
    labels: &'static [&'static str],
    edges: &'static [(usize, usize)],
    attachment: usize,
    /// Members every optimal set of a construction takes from this gadget.
    forced: &'static [usize],
}

#[derive(Clone, Debug)]
pub struct Gadget {
    pub kind: GadgetKind,
    pub graph: Graph,
    pub attachment: usize,
}

pub fn make_gadget(kind: GadgetKind) -> Gadget {
    let layout = kind.layout();
    let labels = layout.labels.iter().map(|s| s.to_string()).collect();
    Gadget {
        kind,
        graph: Graph::from_edge_list(layout.labels.len(), layout.edges, Some(labels))
            .expect("gadget layouts are valid"),
        attachment: layout.attachment,
    }
}

/// Disjoint union of `g` and the gadget plus the edge `host`–attachment.
/// An unlabeled `g` gets labels `v1..vn`; clashing gadget labels are primed.
pub fn attach(g: &Graph, gadget: &Gadget, host: usize) -> Result<Graph> {
    g.check_vertex(host)?;
    let mut labels: Vec<String> = match g.labels() {
        Some(l) => l.to_vec(),
        None => (1..=g.n()).map(|i| format!("v{i}")).collect(),
    };
    for v in 0..gadget.graph.n() {
        let mut l = gadget.graph.label(v);
        while labels.contains(&l) {
            l.push('\'');
        }
        labels.push(l);
    }
    let offset = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.extend(gadget.graph.edges().map(|(u, v)| (u + offset, v + offset)));
    edges.push((host, offset + gadget.attachment));
    Graph::from_edge_list(offset + gadget.graph.n(), &edges, Some(labels))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ConstructionKind {
    /// Host plus `a`, `b`, `c` joined to every host vertex and pendants on
    /// `c`; serves γ, ir, γ_t, γ_pr and γ_c.
    Connelly,
    /// Two C gadgets per host vertex, `a`, `b` and their C gadgets; γ^ID.
    Id,
    /// The same shape with bulls; γ_L and γ_t^L.
    Locating,
    /// One Z gadget per host vertex plus `Z*`; Γ.
    Upper,
}

impl ConstructionKind {
    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "connelly" => Some(ConstructionKind::Connelly),
            "id" => Some(ConstructionKind::Id),
            "locating" => Some(ConstructionKind::Locating),
            "upper" => Some(ConstructionKind::Upper),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Construction {
    pub kind: ConstructionKind,
    /// Host vertices occupy `0..host_order`.
    pub host_order: usize,
    pub graph: Graph,
    /// Vertices shared by every expected optimal set (`{c}` for Connelly,
    /// the forced gadget vertices otherwise).
    pub forced: VertexSet,
    host_edges: Vec<(usize, usize)>,
    /// Gadget copies per host vertex (Id, Locating), pendants on `c`
    /// (Connelly), or Z copies on the first host vertex (Upper).
    copies: usize,
}

impl Construction {
    /// `forced ∪ {v_i}` for each host vertex, in host order.
    pub fn expected_family(&self) -> Vec<VertexSet> {
        (0..self.host_order).map(|i| self.forced.with(i)).collect()
    }

    /// Cardinality of every expected optimal set.
    pub fn closed_form_value(&self) -> usize {
        self.forced.len() + 1
    }

    pub fn host(&self) -> Graph {
        Graph::from_edge_list(self.host_order, &self.host_edges, None).expect("host edges are valid")
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.graph.index_of(label)
    }

    /// Label → vertex index, for the JSON sidecar.
    pub fn label_map(&self) -> BTreeMap<String, usize> {
        (0..self.graph.n()).map(|v| (self.graph.label(v), v)).collect()
    }
}

/// Labeled graph under construction.
struct Builder {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
    forced: VertexSet,
}

impl Builder {
    fn with_host(h: &Graph) -> Result<Self> {
        if h.n() == 0 {
            return Err(Error::EmptyHost);
        }
        Ok(Builder {
            labels: (1..=h.n()).map(|i| format!("v{i}")).collect(),
            edges: h.edges().collect(),
            forced: VertexSet::EMPTY,
        })
    }

    fn from_construction(c: &Construction) -> Self {
        Builder {
            labels: (0..c.graph.n()).map(|v| c.graph.label(v)).collect(),
            edges: c.graph.edges().collect(),
            forced: c.forced,
        }
    }

    fn vertex(&mut self, label: impl Into<String>) -> usize {
        self.labels.push(label.into());
        self.labels.len() - 1
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    /// Appends a gadget copy and joins `host` to its attachment vertex (or
    /// to `join_at` when given). Returns the index of the gadget's first
    /// vertex.
    fn gadget(
        &mut self,
        kind: GadgetKind,
        marker: &str,
        tag: Option<&str>,
        host: usize,
        join_at: Option<usize>,
    ) -> usize {
        let layout = kind.layout();
        let base = self.labels.len();
        for l in layout.labels {
            self.vertex(copy_label(l, marker, tag));
        }
        for &(u, v) in layout.edges {
            self.edge(base + u, base + v);
        }
        self.edge(host, base + join_at.unwrap_or(layout.attachment));
        for &f in layout.forced {
            self.forced.insert(base + f);
        }
        base
    }

    fn finish(
        self,
        kind: ConstructionKind,
        host_order: usize,
        host_edges: Vec<(usize, usize)>,
        copies: usize,
    ) -> Result<Construction> {
        let graph = Graph::from_edge_list(self.labels.len(), &self.edges, Some(self.labels))?;
        Ok(Construction {
            kind,
            host_order,
            graph,
            forced: self.forced,
            host_edges,
            copies,
        })
    }
}

/// `x3` with marker `*` and tag `2` becomes `x*_{2,3}`; `z` becomes `z*_2`;
/// without a tag, `x*_3` and `z*`.
fn copy_label(base: &str, marker: &str, tag: Option<&str>) -> String {
    let (letter, index) = base.split_at(1);
    match (tag, index.is_empty()) {
        (Some(t), false) => format!("{letter}{marker}_{{{t},{index}}}"),
        (Some(t), true) => format!("{letter}{marker}_{t}"),
        (None, false) => format!("{letter}{marker}_{index}"),
        (None, true) => format!("{letter}{marker}"),
    }
}

/// Marker for the `copy`-th gadget hung on one vertex (0-based).
fn copy_marker(copy: usize) -> String {
    match copy {
        0 => String::new(),
        1 => "*".into(),
        m => format!("^{}", m + 1),
    }
}

/// Host `H`, then `a`, `b`, `c` each joined to every host vertex, then two
/// pendants on `c`.
pub fn construct_connelly(h: &Graph) -> Result<Construction> {
    construct_connelly_with_pendants(h, 2)
}

/// [`construct_connelly`] with `pendants >= 2` pendant vertices on `c`.
pub fn construct_connelly_with_pendants(h: &Graph, pendants: usize) -> Result<Construction> {
    let mut b = Builder::with_host(h)?;
    let n = h.n();
    let a = b.vertex("a");
    let bv = b.vertex("b");
    let c = b.vertex("c");
    for v in 0..n {
        b.edge(a, v);
        b.edge(bv, v);
        b.edge(c, v);
    }
    for p in 1..=pendants.max(2) {
        let cp = b.vertex(format!("c{p}"));
        b.edge(c, cp);
    }
    b.forced.insert(c);
    b.finish(ConstructionKind::Connelly, n, h.edges().collect(), pendants.max(2))
}

fn construct_twin_gadgets(h: &Graph, kind: GadgetKind, ck: ConstructionKind) -> Result<Construction> {
    let mut b = Builder::with_host(h)?;
    let n = h.n();
    for v in 0..n {
        let tag = (v + 1).to_string();
        b.gadget(kind, "", Some(&tag), v, None);
        b.gadget(kind, "*", Some(&tag), v, None);
    }
    let a = b.vertex("a");
    let bv = b.vertex("b");
    for v in 0..n {
        b.edge(a, v);
        b.edge(bv, v);
    }
    b.gadget(kind, "", Some("a"), a, None);
    b.gadget(kind, "", Some("b"), bv, None);
    b.finish(ck, n, h.edges().collect(), 2)
}

/// Identifying-code construction on `15n + 16` vertices.
pub fn construct_id(h: &Graph) -> Result<Construction> {
    construct_twin_gadgets(h, GadgetKind::CGadget, ConstructionKind::Id)
}

/// Locating-domination construction on `11n + 12` vertices. The same graph
/// serves the locating-total variant, so `total` changes nothing.
pub fn construct_locating(h: &Graph, total: bool) -> Result<Construction> {
    let _ = total;
    construct_twin_gadgets(h, GadgetKind::Bull, ConstructionKind::Locating)
}

/// Upper-domination construction on `8n + 7` vertices: `Z_i` hangs from
/// `v_i` by `x_{i,1}`, and every `v_i` is joined to `z*`.
pub fn construct_upper(h: &Graph) -> Result<Construction> {
    let mut b = Builder::with_host(h)?;
    let n = h.n();
    for v in 0..n {
        let tag = (v + 1).to_string();
        b.gadget(GadgetKind::ZGadget, "", Some(&tag), v, None);
    }
    // Z* is joined at z* (gadget vertex 0) to every host vertex.
    let star = b.gadget(GadgetKind::ZGadget, "*", None, 0, Some(0));
    for v in 1..n {
        b.edge(v, star);
    }
    // the optimal sets take Y* from Z*, not X*
    for x in 1..=3 {
        b.forced.remove(star + x);
        b.forced.insert(star + 3 + x);
    }
    b.finish(ConstructionKind::Upper, n, h.edges().collect(), 0)
}

/// Appends `extra` gadget copies: C gadgets (or bulls) on every host vertex
/// for the identifying and locating constructions, Z gadgets on the first
/// host vertex for the upper construction.
pub fn multiply(c: &Construction, extra: usize) -> Result<Construction> {
    if extra == 0 {
        return Err(Error::NoExtraCopies);
    }
    let mut b = Builder::from_construction(c);
    let copies = match c.kind {
        ConstructionKind::Connelly => return Err(Error::UnsupportedKind(c.kind)),
        ConstructionKind::Id | ConstructionKind::Locating => {
            let kind = if c.kind == ConstructionKind::Id {
                GadgetKind::CGadget
            } else {
                GadgetKind::Bull
            };
            for copy in c.copies..c.copies + extra {
                let marker = copy_marker(copy);
                for v in 0..c.host_order {
                    let tag = (v + 1).to_string();
                    b.gadget(kind, &marker, Some(&tag), v, None);
                }
            }
            c.copies + extra
        }
        ConstructionKind::Upper => {
            for copy in c.copies..c.copies + extra {
                b.gadget(GadgetKind::ZGadget, &copy_marker(copy + 1), Some("1"), 0, None);
            }
            c.copies + extra
        }
    };
    b.finish(c.kind, c.host_order, c.host_edges.clone(), copies)
}
