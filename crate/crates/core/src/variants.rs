//! Membership tests for every domination variant.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum DomVariant {
    /// γ: dominating sets.
    Gamma,
    /// ir: maximal irredundant sets, minimized.
    Ir,
    /// γ_t: total dominating sets.
    Total,
    /// γ_pr: paired dominating sets.
    Paired,
    /// γ_c: connected dominating sets.
    Connected,
    /// γ^ID: identifying codes.
    IdCode,
    /// γ_L: locating-dominating sets.
    LocDom,
    /// γ_t^L: locating-total dominating sets.
    LocTotal,
    /// Γ: minimal dominating sets, maximized.
    UpperGamma,
    /// IR: maximal irredundant sets, maximized.
    UpperIr,
    /// i: independent dominating sets.
    IndepDom,
    /// α: independent sets, maximized.
    Independence,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Minimize,
    Maximize,
}

impl DomVariant {
    pub const ALL: [DomVariant; 12] = [
        DomVariant::Gamma,
        DomVariant::Ir,
        DomVariant::Total,
        DomVariant::Paired,
        DomVariant::Connected,
        DomVariant::IdCode,
        DomVariant::LocDom,
        DomVariant::LocTotal,
        DomVariant::UpperGamma,
        DomVariant::UpperIr,
        DomVariant::IndepDom,
        DomVariant::Independence,
    ];

    pub fn direction(self) -> Direction {
        match self {
            DomVariant::UpperGamma | DomVariant::UpperIr | DomVariant::Independence => {
                Direction::Maximize
            }
            _ => Direction::Minimize,
        }
    }

    /// Command-line spelling.
    pub fn name(self) -> &'static str {
        match self {
            DomVariant::Gamma => "gamma",
            DomVariant::Ir => "ir",
            DomVariant::Total => "gamma-t",
            DomVariant::Paired => "gamma-pr",
            DomVariant::Connected => "gamma-c",
            DomVariant::IdCode => "gamma-id",
            DomVariant::LocDom => "gamma-l",
            DomVariant::LocTotal => "gamma-tl",
            DomVariant::UpperGamma => "upper",
            DomVariant::UpperIr => "upper-ir",
            DomVariant::IndepDom => "i",
            DomVariant::Independence => "alpha",
        }
    }
}

impl fmt::Display for DomVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownVariant(pub String);

impl fmt::Display for UnknownVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown variant {:?}", self.0)
    }
}

impl std::error::Error for UnknownVariant {}

impl FromStr for DomVariant {
    type Err = UnknownVariant;

    fn from_str(s: &str) -> std::result::Result<Self, UnknownVariant> {
        DomVariant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| UnknownVariant(s.to_owned()))
    }
}

impl From<DomVariant> for String {
    fn from(v: DomVariant) -> String {
        v.name().to_owned()
    }
}

impl TryFrom<String> for DomVariant {
    type Error = UnknownVariant;

    fn try_from(s: String) -> std::result::Result<Self, UnknownVariant> {
        s.parse()
    }
}

/// Private neighborhood pn[v,S] = N[v] − N[S − {v}].
pub fn private_neighborhood(g: &Graph, s: VertexSet, v: usize) -> Result<VertexSet> {
    if !s.contains(v) {
        return Err(Error::VertexNotInSet(v));
    }
    Ok(pn(g, s, v))
}

#[inline]
pub(crate) fn pn(g: &Graph, s: VertexSet, v: usize) -> VertexSet {
    g.closed(v) - g.closed_neighborhood_of_set(s.without(v))
}

/// I_S(v) = N[v] ∩ S.
pub fn intersection_set(g: &Graph, s: VertexSet, v: usize) -> VertexSet {
    g.closed(v) & s
}

pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    g.closed_neighborhood_of_set(s) & g.vertices() == g.vertices()
}

pub fn is_irredundant(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| !pn(g, s, v).is_empty())
}

pub fn is_minimal_dominating(g: &Graph, s: VertexSet) -> bool {
    is_dominating(g, s) && is_irredundant(g, s)
}

/// Every vertex, members included, has a neighbor in `s`.
pub fn is_total_dominating(g: &Graph, s: VertexSet) -> bool {
    (0..g.n()).all(|v| g.neighbors(v).intersects(s))
}

pub fn is_paired_dominating(g: &Graph, s: VertexSet) -> bool {
    s.len().is_multiple_of(2) && is_dominating(g, s) && has_perfect_matching(g, s)
}

/// Exact perfect-matching test on `G[s]`: match the lowest vertex with each
/// of its neighbors in turn.
pub fn has_perfect_matching(g: &Graph, s: VertexSet) -> bool {
    let Some(u) = s.first() else {
        return true;
    };
    if s.len() % 2 == 1 {
        return false;
    }
    let rest = s.without(u);
    (g.neighbors(u) & rest)
        .iter()
        .any(|w| has_perfect_matching(g, rest.without(w)))
}

pub fn is_connected_dominating(g: &Graph, s: VertexSet) -> bool {
    !s.is_empty() && is_dominating(g, s) && g.is_connected_within(s)
}

pub fn is_maximal_irredundant(g: &Graph, s: VertexSet) -> bool {
    is_irredundant(g, s) && (g.vertices() - s).iter().all(|w| !is_irredundant(g, s.with(w)))
}

fn has_duplicate(mut keys: Vec<VertexSet>) -> bool {
    keys.sort_unstable();
    keys.windows(2).any(|w| w[0] == w[1])
}

pub fn is_identifying_code(g: &Graph, s: VertexSet) -> bool {
    let keys: Vec<VertexSet> = (0..g.n()).map(|v| intersection_set(g, s, v)).collect();
    keys.iter().all(|k| !k.is_empty()) && !has_duplicate(keys)
}

pub fn is_locating_dominating(g: &Graph, s: VertexSet) -> bool {
    is_dominating(g, s)
        && !has_duplicate(
            (g.vertices() - s)
                .iter()
                .map(|v| intersection_set(g, s, v))
                .collect(),
        )
}

pub fn is_locating_total_dominating(g: &Graph, s: VertexSet) -> bool {
    is_locating_dominating(g, s) && is_total_dominating(g, s)
}

pub fn is_independent(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| !g.neighbors(v).intersects(s))
}

/// Dispatches to the predicate of `variant`. Maximum cardinality for
/// [`DomVariant::Independence`] is the solver's business.
pub fn satisfies(g: &Graph, s: VertexSet, variant: DomVariant) -> bool {
    match variant {
        DomVariant::Gamma => is_dominating(g, s),
        DomVariant::Ir | DomVariant::UpperIr => is_maximal_irredundant(g, s),
        DomVariant::Total => is_total_dominating(g, s),
        DomVariant::Paired => is_paired_dominating(g, s),
        DomVariant::Connected => is_connected_dominating(g, s),
        DomVariant::IdCode => is_identifying_code(g, s),
        DomVariant::LocDom => is_locating_dominating(g, s),
        DomVariant::LocTotal => is_locating_total_dominating(g, s),
        DomVariant::UpperGamma => is_minimal_dominating(g, s),
        DomVariant::IndepDom => is_independent(g, s) && is_dominating(g, s),
        DomVariant::Independence => is_independent(g, s),
    }
}

/// Two distinct vertices with equal closed neighborhoods.
pub fn has_twins(g: &Graph) -> bool {
    has_duplicate((0..g.n()).map(|v| g.closed(v)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{construct_connelly, construct_upper, make_gadget, GadgetKind};
    use proptest::prelude::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn by_label(g: &Graph, labels: &[&str]) -> VertexSet {
        labels.iter().map(|l| g.index_of(l).unwrap()).collect()
    }

    fn c4() -> Graph {
        Graph::cycle(4)
    }

    fn connelly_fan() -> Graph {
        construct_connelly(&Graph::named("K4-e").unwrap()).unwrap().graph
    }

    /// pn computed from the definition with explicit loops, independent of
    /// the bitset shortcut.
    fn pn_by_loops(g: &Graph, s: &[usize], v: usize) -> Vec<usize> {
        (0..g.n())
            .filter(|&w| w == v || g.has_edge(v, w))
            .filter(|&w| {
                !s.iter()
                    .any(|&u| u != v && (u == w || g.has_edge(u, w)))
            })
            .collect()
    }

    #[test]
    fn private_neighborhood_examples() {
        let g = connelly_fan();
        let s = by_label(&g, &["c", "v1"]);
        let v1 = g.index_of("v1").unwrap();
        let pn = private_neighborhood(&g, s, v1).unwrap();
        assert_eq!(pn.to_vec(), pn_by_loops(&g, &s.to_vec(), v1));
        assert!(pn.contains(g.index_of("a").unwrap()));
        assert!(pn.contains(g.index_of("b").unwrap()));

        let z = construct_upper(&Graph::complete(2)).unwrap();
        let s1 = z.expected_family()[0];
        let v1 = z.graph.index_of("v1").unwrap();
        assert_eq!(
            private_neighborhood(&z.graph, s1, v1).unwrap(),
            by_label(&z.graph, &["z*"])
        );

        let g = c4();
        assert_eq!(private_neighborhood(&g, set(&[2]), 2).unwrap(), g.closed(2));
        assert_eq!(
            private_neighborhood(&g, set(&[2]), 1).unwrap_err(),
            Error::VertexNotInSet(1)
        );
    }

    #[test]
    fn intersection_set_examples() {
        let c = make_gadget(GadgetKind::CGadget).graph;
        let x = by_label(&c, &["x1", "x2", "x3"]);
        let y2 = c.index_of("y2").unwrap();
        assert_eq!(intersection_set(&c, x, y2), by_label(&c, &["x2"]));
        let s2 = by_label(&c, &["x1", "y2", "x3"]);
        let (x3, y3) = (c.index_of("x3").unwrap(), c.index_of("y3").unwrap());
        assert_eq!(intersection_set(&c, s2, x3), intersection_set(&c, s2, y3));
        assert_eq!(intersection_set(&c, s2, x3), by_label(&c, &["x3"]));
        assert!(intersection_set(&c4(), VertexSet::EMPTY, 0).is_empty());
    }

    #[test]
    fn domination_examples() {
        let g = c4();
        assert!(is_dominating(&g, set(&[0, 2])));
        assert!(is_dominating(&g, g.vertices()));
        let f = connelly_fan();
        assert!(!is_dominating(&f, by_label(&f, &["c", "a"])));
        assert!(!is_dominating(&f, by_label(&f, &["c", "b"])));
    }

    #[test]
    fn minimal_domination_examples() {
        let g = c4();
        assert!(is_minimal_dominating(&g, set(&[0, 2])));
        assert!(pn_by_loops(&g, &[0, 1, 2], 1).is_empty());
        assert!(!is_minimal_dominating(&g, set(&[0, 1, 2])));
        let z = construct_upper(&Graph::complete(2)).unwrap();
        assert!(is_minimal_dominating(&z.graph, z.expected_family()[0]));
    }

    #[test]
    fn total_and_paired_examples() {
        let f = connelly_fan();
        let cv1 = by_label(&f, &["c", "v1"]);
        assert!(is_total_dominating(&f, cv1));
        assert!(is_paired_dominating(&f, cv1));
        assert!(is_connected_dominating(&f, cv1));
        assert!(!is_total_dominating(&c4(), set(&[0, 2])));
        let p3 = Graph::path(3);
        assert!(is_total_dominating(&p3, set(&[0, 1])));
        assert!(!is_paired_dominating(&p3, set(&[0, 1, 2])));
        let p4 = Graph::path(4);
        assert!(is_paired_dominating(&p4, set(&[1, 2])));
        // dominating with an even induced P4... but 0,1,2,3 of P4 is matched 01/23
        assert!(is_paired_dominating(&p4, p4.vertices()));
        // K1,3 leaves: dominating pair {centre, leaf} is paired
        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)], None).unwrap();
        assert!(is_paired_dominating(&star, set(&[0, 1])));
        assert!(!has_perfect_matching(&star, set(&[1, 2])));
    }

    #[test]
    fn connected_examples() {
        assert!(!is_connected_dominating(&Graph::cycle(6), set(&[0, 3])));
        assert!(is_connected_dominating(&Graph::empty(1), set(&[0])));
        assert!(!is_connected_dominating(&Graph::empty(0), VertexSet::EMPTY));
    }

    #[test]
    fn irredundance_examples() {
        let g = c4();
        assert!(is_irredundant(&g, VertexSet::EMPTY));
        assert!(!is_irredundant(&g, set(&[0, 1, 2])));
        let f = connelly_fan();
        let cv1 = by_label(&f, &["c", "v1"]);
        assert!(is_irredundant(&f, cv1));
        assert!(is_maximal_irredundant(&f, cv1));
        assert!(!is_maximal_irredundant(&g, g.vertices()));
        assert!(!is_irredundant(&g, g.vertices()));
        assert!(is_maximal_irredundant(&Graph::empty(1), set(&[0])));
    }

    #[test]
    fn identifying_code_examples() {
        let c = make_gadget(GadgetKind::CGadget).graph;
        assert!(is_identifying_code(&c, by_label(&c, &["x1", "x2", "x3"])));
        let s3 = by_label(&c, &["x1", "x2", "y3"]);
        assert!(!is_identifying_code(&c, s3));
        assert_eq!(
            intersection_set(&c, s3, c.index_of("x4").unwrap()),
            intersection_set(&c, s3, c.index_of("y1").unwrap())
        );
        let k2 = Graph::complete(2);
        for bits in 0..4u128 {
            assert!(!is_identifying_code(&k2, VertexSet::from_bits(bits)));
        }
    }

    #[test]
    fn locating_examples() {
        let b = make_gadget(GadgetKind::Bull).graph;
        let x12 = by_label(&b, &["x1", "x2"]);
        assert!(is_locating_dominating(&b, x12));
        let s1 = by_label(&b, &["x1", "y2"]);
        assert!(!is_locating_dominating(&b, s1));
        // the colliding pair for {x1, y2} is y1 / x3, both seeing only x1
        let (y1, x3) = (b.index_of("y1").unwrap(), b.index_of("x3").unwrap());
        assert_eq!(intersection_set(&b, s1, y1), intersection_set(&b, s1, x3));
        assert_eq!(intersection_set(&b, s1, y1), by_label(&b, &["x1"]));
        assert!(is_locating_total_dominating(&b, x12));
        assert!(!is_locating_total_dominating(&c4(), set(&[0, 2])));
        assert!(is_locating_total_dominating(&Graph::path(3), set(&[0, 1])));
    }

    #[test]
    fn independence_examples() {
        assert!(is_independent(&c4(), set(&[0, 2])));
        assert!(is_independent(&c4(), VertexSet::EMPTY));
        assert!(!is_independent(&Graph::complete(2), set(&[0, 1])));
    }

    #[test]
    fn dispatch_examples() {
        assert!(satisfies(&c4(), set(&[0, 2]), DomVariant::Gamma));
        let c = make_gadget(GadgetKind::CGadget).graph;
        assert!(satisfies(&c, by_label(&c, &["x1", "x2", "x3"]), DomVariant::IdCode));
        let f = connelly_fan();
        assert!(satisfies(&f, by_label(&f, &["c", "v1"]), DomVariant::Paired));
    }

    #[test]
    fn variant_names_round_trip() {
        for v in DomVariant::ALL {
            assert_eq!(v.name().parse::<DomVariant>().unwrap(), v);
        }
        assert!("gamma-x".parse::<DomVariant>().is_err());
    }

    fn arb_graph_and_set() -> impl Strategy<Value = (Graph, VertexSet, usize)> {
        (1usize..=9).prop_flat_map(|n| {
            (
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
                0u128..(1u128 << n),
                0usize..n,
            )
                .prop_map(move |(bits, s, w)| {
                    let mut edges = Vec::new();
                    let mut k = 0;
                    for j in 1..n {
                        for i in 0..j {
                            if bits[k] {
                                edges.push((i, j));
                            }
                            k += 1;
                        }
                    }
                    (
                        Graph::from_edge_list(n, &edges, None).unwrap(),
                        VertexSet::from_bits(s),
                        w,
                    )
                })
        })
    }

    proptest! {
        #[test]
        fn implication_chain((g, s, _w) in arb_graph_and_set()) {
            if is_identifying_code(&g, s) { prop_assert!(is_locating_dominating(&g, s)); }
            if is_paired_dominating(&g, s) { prop_assert!(is_total_dominating(&g, s)); }
            if is_total_dominating(&g, s) { prop_assert!(is_dominating(&g, s)); }
            if is_connected_dominating(&g, s) { prop_assert!(is_dominating(&g, s)); }
            if is_minimal_dominating(&g, s) {
                prop_assert!(is_irredundant(&g, s) && is_dominating(&g, s));
            }
            if is_locating_total_dominating(&g, s) { prop_assert!(is_locating_dominating(&g, s)); }
        }

        #[test]
        fn minimal_domination_matches_loop_definition((g, s, _w) in arb_graph_and_set()) {
            let members = s.to_vec();
            let by_loops = is_dominating(&g, s)
                && members.iter().all(|&u| !pn_by_loops(&g, &members, u).is_empty());
            prop_assert_eq!(is_minimal_dominating(&g, s), by_loops);
            for &u in &members {
                prop_assert_eq!(private_neighborhood(&g, s, u).unwrap().to_vec(), pn_by_loops(&g, &members, u));
            }
        }

        #[test]
        fn domination_is_monotone((g, s, w) in arb_graph_and_set()) {
            if is_dominating(&g, s) {
                prop_assert!(is_dominating(&g, s.with(w)));
            }
        }

        #[test]
        fn twins_block_identification((g, s, _w) in arb_graph_and_set()) {
            if has_twins(&g) {
                prop_assert!(!is_identifying_code(&g, s));
            }
        }
    }
}
