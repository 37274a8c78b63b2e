//! Simple undirected graphs on at most [`MAX_VERTICES`] vertices, stored as
//! one neighbor bitset per vertex, plus the text formats they travel in
//! (graph6, a plain edge list and DOT).

use std::collections::HashSet;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, BitXor, Not, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count any [`Graph`] may have.
pub const MAX_VERTICES: usize = 128;

/// A set of vertices of one graph, stored as a 128-bit mask.
///
/// The derived ordering compares the raw masks, which is the canonical
/// order used for every set family in this crate.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u128 << v)
    }

    /// `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u128 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u128 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u128 << v))
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest member.
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub struct Members(u128);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

macro_rules! bitop {
    ($tr:ident, $f:ident, $op:tt) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            fn $f(self, rhs: VertexSet) -> VertexSet {
                VertexSet(self.0 $op rhs.0)
            }
        }
    };
}
bitop!(BitOr, bitor, |);
bitop!(BitAnd, bitand, &);
bitop!(BitXor, bitxor, ^);

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl BitAndAssign for VertexSet {
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

impl SubAssign for VertexSet {
    fn sub_assign(&mut self, rhs: VertexSet) {
        self.0 &= !rhs.0;
    }
}

/// Undirected simple graph on vertices `0..n`.
///
/// Labels are provenance only; `==` compares vertex count and edges.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Result of [`Graph::induced_subgraph`]: the subgraph plus, for each of its
/// vertices, the index it had in the parent graph.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub original: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges collapse into one.
    pub fn from_edge_list(
        n: usize,
        edges: &[(usize, usize)],
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::UnsupportedSize(n));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::EndpointOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let g = Graph { n, adj, labels: None };
        match labels {
            Some(l) => g.with_labels(l),
            None => Ok(g),
        }
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
            labels: None,
        }
    }

    pub fn complete(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        let all = VertexSet::full(n);
        Graph {
            n,
            adj: (0..n).map(|v| all.without(v)).collect(),
            labels: None,
        }
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edge_list(n, &edges, None).expect("path edges are valid")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Self::from_edge_list(n, &edges, None).expect("cycle edges are valid")
    }

    /// Parses names such as `K4`, `K4-e`, `P3`, `C5`, `2K1` or `3K2`.
    pub fn named(name: &str) -> Option<Self> {
        let name = name.trim().replace('\u{2212}', "-");
        if let Some(rest) = name.strip_suffix("-e") {
            let k = rest.strip_prefix('K')?.parse::<usize>().ok()?;
            if k < 2 {
                return None;
            }
            let mut edges = Vec::new();
            for u in 0..k {
                for v in u + 1..k {
                    if (u, v) != (0, k - 1) {
                        edges.push((u, v));
                    }
                }
            }
            return Self::from_edge_list(k, &edges, None).ok();
        }
        let split = name.find(|c: char| !c.is_ascii_digit())?;
        let (count, rest) = name.split_at(split);
        let copies = if count.is_empty() { 1 } else { count.parse().ok()? };
        let mut chars = rest.chars();
        let family = chars.next()?;
        let k: usize = chars.as_str().parse().ok()?;
        if copies == 0 || copies * k > MAX_VERTICES {
            return None;
        }
        let block = match family {
            'K' => Self::complete(k),
            'P' if k >= 1 => Self::path(k),
            'C' if k >= 3 => Self::cycle(k),
            _ => return None,
        };
        let mut g = Graph::empty(0);
        for _ in 0..copies {
            g = g.disjoint_union(&block);
        }
        Some(g)
    }

    /// Attaches labels, which must be unique and one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::LabelCount {
                found: labels.len(),
                n: self.n,
            });
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The label of `v`, or its index when the graph is unlabeled.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// Renders a set as `{a,b}` using labels where present.
    pub fn format_set(&self, s: VertexSet) -> String {
        let parts: Vec<String> = s.iter().map(|v| self.label(v)).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Open neighborhood N(v).
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood N[v]; panics when `v` is out of range.
    #[inline]
    pub fn closed(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// Closed neighborhood N[v] = {v} ∪ adj(v).
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.closed(v))
    }

    /// N[S], the union of the closed neighborhoods of the members of `s`.
    pub fn closed_neighborhood_of_set(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(s, |acc, v| acc | self.adj[v])
    }

    /// N(S), the union of the open neighborhoods of the members of `s`.
    pub fn open_neighborhood_of_set(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v])
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (self.adj[u] - VertexSet::full(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|a| a.is_empty())
    }

    /// Vertices reachable from `start` inside `within` (which must contain it).
    pub fn component_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.open_neighborhood_of_set(frontier) & within;
            frontier = next - seen;
            seen |= next;
        }
        seen
    }

    /// Whether `G[s]` is connected (the empty set counts as connected).
    pub fn is_connected_within(&self, s: VertexSet) -> bool {
        match s.first() {
            None => true,
            Some(v) => self.component_within(v, s) == s,
        }
    }

    /// One connected component; the empty graph and K1 count as connected.
    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_within(v, rest);
            rest -= c;
            out.push(c);
        }
        out
    }

    /// `G[s]`, renumbered densely in ascending order of the original indices.
    pub fn induced_subgraph(&self, s: VertexSet) -> InducedSubgraph {
        let original = (s & self.vertices()).to_vec();
        let mut position = [usize::MAX; MAX_VERTICES];
        for (i, &v) in original.iter().enumerate() {
            position[v] = i;
        }
        let adj = original
            .iter()
            .map(|&v| (self.adj[v] & s).iter().map(|w| position[w]).collect())
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| original.iter().map(|&v| l[v].clone()).collect());
        InducedSubgraph {
            graph: Graph {
                n: original.len(),
                adj,
                labels,
            },
            original,
        }
    }

    /// Vertices of `self` first, then those of `other` shifted by `self.n()`.
    /// Labels are kept only when both sides carry them.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        assert!(n <= MAX_VERTICES, "union exceeds {MAX_VERTICES} vertices");
        let shift = self.n;
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|a| VertexSet::from_bits(a.bits().checked_shl(shift as u32).unwrap_or(0))),
        );
        let labels = match (&self.labels, &other.labels) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).cloned().collect()),
            _ => None,
        };
        Graph { n, adj, labels }
    }

    /// Copy of the graph with one more edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::EndpointOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut g = self.clone();
        g.adj[u].insert(v);
        g.adj[v].insert(u);
        Ok(g)
    }

    /// Complement graph (labels kept).
    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        Graph {
            n: self.n,
            adj: (0..self.n).map(|v| (all - self.adj[v]).without(v)).collect(),
            labels: self.labels.clone(),
        }
    }

    /// Encodes in graph6; vertex order is preserved.
    pub fn to_graph6(&self) -> Result<String> {
        let n = self.n;
        let mut out = String::new();
        if n <= 62 {
            out.push((n as u8 + 63) as char);
        } else if n <= 258_047 {
            out.push('~');
            for shift in [12, 6, 0] {
                out.push((((n >> shift) & 63) as u8 + 63) as char);
            }
        } else {
            return Err(Error::UnsupportedSize(n));
        }
        let mut acc = 0u8;
        let mut nbits = 0;
        for j in 1..n {
            for i in 0..j {
                acc = acc << 1 | self.has_edge(i, j) as u8;
                nbits += 1;
                if nbits == 6 {
                    out.push((acc + 63) as char);
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if nbits > 0 {
            out.push(((acc << (6 - nbits)) + 63) as char);
        }
        Ok(out)
    }

    /// Decodes one graph6 string; surrounding whitespace and an optional
    /// `>>graph6<<` prefix are ignored.
    pub fn parse_graph6(text: &str) -> Result<Self> {
        let text = text.trim();
        let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
        let mut values = Vec::with_capacity(text.len());
        for c in text.chars() {
            if !('?'..='~').contains(&c) {
                return Err(Error::InvalidCharacter(c));
            }
            values.push(c as u8 - 63);
        }
        let (n, body) = match values.as_slice() {
            [] => return Err(Error::MalformedHeader),
            [63, 63, rest @ ..] => {
                if rest.len() < 6 {
                    return Err(Error::MalformedHeader);
                }
                let n = rest[..6].iter().fold(0usize, |a, &b| a << 6 | b as usize);
                (n, &rest[6..])
            }
            [63, rest @ ..] => {
                if rest.len() < 3 {
                    return Err(Error::MalformedHeader);
                }
                let n = rest[..3].iter().fold(0usize, |a, &b| a << 6 | b as usize);
                if n < 63 {
                    return Err(Error::MalformedHeader);
                }
                (n, &rest[3..])
            }
            [first, rest @ ..] => (*first as usize, rest),
        };
        if n > MAX_VERTICES {
            return Err(Error::UnsupportedSize(n));
        }
        let nbits = n * n.saturating_sub(1) / 2;
        let nchars = nbits.div_ceil(6);
        if body.len() < nchars {
            return Err(Error::TruncatedBody { n });
        }
        if body.len() > nchars {
            return Err(Error::TrailingData);
        }
        let pad = nchars * 6 - nbits;
        if pad > 0 && body[nchars - 1] & ((1 << pad) - 1) != 0 {
            return Err(Error::NonCanonicalPadding);
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if body[k / 6] >> (5 - k % 6) & 1 == 1 {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
                k += 1;
            }
        }
        Ok(Graph { n, adj, labels: None })
    }

    /// Parses the edge-list text format: a line with `n`, an optional
    /// `labels:` line with `n` names, then one `u v` pair per line.
    /// Blank lines and `#` comments are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let syntax = |m: String| Error::EdgeListSyntax(m);
        let header = lines.next().ok_or_else(|| syntax("missing vertex count".into()))?;
        let n: usize = header
            .parse()
            .map_err(|_| syntax(format!("bad vertex count {header:?}")))?;
        let mut labels = None;
        let mut edges = Vec::new();
        for line in lines {
            if let Some(rest) = line.strip_prefix("labels:") {
                labels = Some(rest.split_whitespace().map(str::to_owned).collect());
                continue;
            }
            let mut it = line.split_whitespace();
            let mut endpoint = || -> Result<usize> {
                let tok = it.next().ok_or_else(|| syntax(format!("bad edge line {line:?}")))?;
                tok.parse().map_err(|_| syntax(format!("bad vertex {tok:?}")))
            };
            let u = endpoint()?;
            let v = endpoint()?;
            if it.next().is_some() {
                return Err(syntax(format!("bad edge line {line:?}")));
            }
            edges.push((u, v));
        }
        Self::from_edge_list(n, &edges, labels)
    }

    /// Inverse of [`Graph::parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        if let Some(l) = &self.labels {
            out.push_str("labels: ");
            out.push_str(&l.join(" "));
            out.push('\n');
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n {
            out.push_str(&format!("  {v} [label=\"{}\"];\n", escape_dot(&self.label(v))));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

pub(crate) fn escape_dot(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c4() -> Graph {
        Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)], None).unwrap()
    }

    fn bull() -> Graph {
        // x1 x2 x3 y1 y2
        Graph::from_edge_list(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)], None).unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    /// Bit-by-bit graph6 decoder kept apart from the production parser.
    fn reference_decode(s: &str) -> (usize, Vec<(usize, usize)>) {
        let bytes = s.as_bytes();
        let n = (bytes[0] - 63) as usize;
        let mut bits = Vec::new();
        for &b in &bytes[1..] {
            let x = b - 63;
            for k in (0..6).rev() {
                bits.push((x >> k) & 1);
            }
        }
        let mut edges = Vec::new();
        let mut idx = 0;
        for j in 0..n {
            for i in 0..j {
                if bits[idx] == 1 {
                    edges.push((i, j));
                }
                idx += 1;
            }
        }
        edges.sort();
        (n, edges)
    }

    #[test]
    fn edge_list_examples() {
        let g = c4();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 4);
        let k1 = Graph::from_edge_list(1, &[], None).unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
        let b = bull();
        assert_eq!((b.n(), b.edge_count()), (5, 5));
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)], None).unwrap_err(),
            Error::EndpointOutOfRange { vertex: 3, n: 3 }
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(1, 1)], None).unwrap_err(),
            Error::SelfLoop(1)
        );
        let labels = vec!["a".to_string(), "a".to_string()];
        assert_eq!(
            Graph::from_edge_list(2, &[], Some(labels)).unwrap_err(),
            Error::DuplicateLabel("a".into())
        );
        // duplicates collapse
        let g = Graph::from_edge_list(2, &[(0, 1), (1, 0), (0, 1)], None).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn graph6_examples() {
        for s in ["C~", "@", "C]", "C^", "?", "A_", "DQc"] {
            let (n, edges) = reference_decode(s);
            let g = Graph::parse_graph6(s).unwrap();
            assert_eq!(g.n(), n, "{s}");
            assert_eq!(g.edges().collect::<Vec<_>>(), edges, "{s}");
        }
        assert_eq!(Graph::parse_graph6("C~").unwrap(), Graph::complete(4));
        assert_eq!(Graph::parse_graph6("@").unwrap(), Graph::empty(1));
        // `]` = 30 = 011110: bits for 01 and 23 are clear, leaving the 4-cycle 0-2-1-3.
        let g = Graph::parse_graph6("C]").unwrap();
        assert_eq!(g.edge_count(), 4);
        assert!(!g.has_edge(0, 1) && !g.has_edge(2, 3));
        // K4-e is `C^` (only 23 missing) or `C}` (only 01 missing)
        for s in ["C^", "C}"] {
            let g = Graph::parse_graph6(s).unwrap();
            assert_eq!(g.edge_count(), 5);
            assert_eq!(g.complement().edge_count(), 1);
        }
    }

    #[test]
    fn graph6_encoding() {
        assert_eq!(Graph::empty(1).to_graph6().unwrap(), "@");
        let s = c4().to_graph6().unwrap();
        assert_eq!(s.len(), 2);
        let body = s.as_bytes()[1] - 63;
        assert_eq!(body.count_ones(), 4);
        for canon in ["C~", "C]", "DQc", "?", "@", "Bw"] {
            assert_eq!(Graph::parse_graph6(canon).unwrap().to_graph6().unwrap(), canon);
        }
    }

    #[test]
    fn graph6_errors() {
        assert_eq!(Graph::parse_graph6("").unwrap_err(), Error::MalformedHeader);
        assert_eq!(Graph::parse_graph6("~?").unwrap_err(), Error::MalformedHeader);
        assert_eq!(Graph::parse_graph6("D").unwrap_err(), Error::TruncatedBody { n: 5 });
        assert_eq!(Graph::parse_graph6("C~~").unwrap_err(), Error::TrailingData);
        // n = 3 has 3 bits; the low 3 bits of the body char must be zero
        assert_eq!(Graph::parse_graph6("B@").unwrap_err(), Error::NonCanonicalPadding);
        assert!(matches!(Graph::parse_graph6("C 1"), Err(Error::InvalidCharacter(' '))));
    }

    #[test]
    fn graph6_large_header() {
        let g = Graph::cycle(100);
        let s = g.to_graph6().unwrap();
        assert!(s.starts_with('~'));
        assert_eq!(Graph::parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn neighborhoods() {
        let g = c4();
        assert_eq!(g.closed_neighborhood(0).unwrap(), set(&[0, 1, 3]));
        assert_eq!(Graph::empty(1).closed_neighborhood(0).unwrap(), set(&[0]));
        assert_eq!(bull().closed_neighborhood(2).unwrap(), set(&[0, 1, 2]));
        assert_eq!(
            g.closed_neighborhood(4).unwrap_err(),
            Error::VertexOutOfRange { vertex: 4, n: 4 }
        );
    }

    #[test]
    fn connectivity() {
        assert!(c4().is_connected());
        assert!(!Graph::empty(2).is_connected());
        assert!(Graph::empty(0).is_connected());
        assert!(Graph::empty(1).is_connected());
        assert_eq!(Graph::named("2K2").unwrap().components().len(), 2);
    }

    #[test]
    fn induced() {
        let g = c4();
        let d = g.induced_subgraph(set(&[0, 2]));
        assert_eq!(d.graph, Graph::empty(2));
        assert_eq!(d.original, vec![0, 2]);
        assert_eq!(g.induced_subgraph(set(&[0, 1])).graph, Graph::complete(2));
        assert_eq!(bull().induced_subgraph(set(&[0, 1, 2])).graph, Graph::complete(3));
    }

    #[test]
    fn named_graphs() {
        assert_eq!(Graph::named("K4-e").unwrap().edge_count(), 5);
        assert_eq!(Graph::named("K4−e").unwrap().edge_count(), 5);
        assert_eq!(Graph::named("2K1").unwrap(), Graph::empty(2));
        assert_eq!(Graph::named("C5").unwrap(), Graph::cycle(5));
        assert_eq!(Graph::named("P3").unwrap(), Graph::path(3));
        assert!(Graph::named("C2").is_none());
        assert!(Graph::named("bogus").is_none());
    }

    #[test]
    fn edge_list_text_round_trip() {
        let g = bull()
            .with_labels(["x1", "x2", "x3", "y1", "y2"].map(String::from).to_vec())
            .unwrap();
        let text = g.to_edge_list();
        let back = Graph::parse_edge_list(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.labels(), g.labels());
        let parsed = Graph::parse_edge_list("# square\n4\n0 1\n1 2\n\n2 3 # last\n3 0\n").unwrap();
        assert_eq!(parsed, c4());
        assert!(Graph::parse_edge_list("3\n0\n").is_err());
        assert!(Graph::parse_edge_list("x\n").is_err());
    }

    #[test]
    fn dot_output() {
        let dot = c4().to_dot();
        assert!(dot.starts_with("graph G {"));
        assert_eq!(dot.matches(" -- ").count(), 4);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=62).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
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
                Graph::from_edge_list(n, &edges, None).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn graph6_round_trip(g in arb_graph()) {
            let s = g.to_graph6().unwrap();
            prop_assert_eq!(Graph::parse_graph6(&s).unwrap(), g);
        }

        #[test]
        fn degree_sum_is_twice_edge_count(g in arb_graph()) {
            let sum: usize = (0..g.n()).map(|v| g.degree(v)).sum();
            prop_assert_eq!(sum, 2 * g.edge_count());
            for v in 0..g.n() {
                prop_assert!(g.closed(v).contains(v));
                prop_assert!(!g.neighbors(v).contains(v));
                for w in g.neighbors(v) {
                    prop_assert!(g.has_edge(w, v));
                }
            }
        }
    }
}
