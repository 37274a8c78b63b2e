//! Inclusion/exclusion enumeration of minimal dominating sets.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::graph::{Graph, VertexSet};

use super::SetFamily;

/// Vertex count above which complete enumeration may take very long.
pub const MINIMAL_ENUMERATION_SOFT_LIMIT: usize = 40;

const PARALLEL_MIN_VERTICES: usize = 20;
const PARALLEL_DEPTH: usize = 8;

/// Every minimal dominating set of `g`, in canonical order.
pub fn enumerate_minimal_dominating(g: &Graph) -> SetFamily {
    SetFamily::new(Search { g, best: None }.run())
}

/// Minimal dominating sets of maximum cardinality.
pub(crate) fn max_minimal_dominating(g: &Graph) -> Vec<VertexSet> {
    let best = AtomicUsize::new(0);
    let found = Search { g, best: Some(&best) }.run();
    let top = found.iter().map(|s| s.len()).max().unwrap_or(0);
    found.into_iter().filter(|s| s.len() == top).collect()
}

struct Search<'a> {
    g: &'a Graph,
    /// Size of the largest set seen so far; enables the |S| + |undecided| bound.
    best: Option<&'a AtomicUsize>,
}

/// Vertices in `inn` covered by exactly one / at least two members.
#[derive(Clone, Copy)]
struct State {
    inn: VertexSet,
    once: VertexSet,
    twice: VertexSet,
    undecided: VertexSet,
}

impl Search<'_> {
    fn run(&self) -> Vec<VertexSet> {
        let root = State {
            inn: VertexSet::EMPTY,
            once: VertexSet::EMPTY,
            twice: VertexSet::EMPTY,
            undecided: self.g.vertices(),
        };
        self.explore(root, 0)
    }

    fn explore(&self, st: State, depth: usize) -> Vec<VertexSet> {
        if let Some(best) = self.best {
            if st.inn.len() + st.undecided.len() < best.load(Ordering::Relaxed) {
                return Vec::new();
            }
        }
        let Some(v) = st.undecided.first() else {
            if let Some(best) = self.best {
                best.fetch_max(st.inn.len(), Ordering::Relaxed);
            }
            return vec![st.inn];
        };
        let include = self.include(st, v);
        let exclude = self.exclude(st, v);
        let parallel = depth < PARALLEL_DEPTH && self.g.n() >= PARALLEL_MIN_VERTICES;
        let (mut a, b) = match (include, exclude) {
            (Some(i), Some(e)) if parallel => rayon::join(
                || self.explore(i, depth + 1),
                || self.explore(e, depth + 1),
            ),
            (i, e) => (
                i.map(|i| self.explore(i, depth + 1)).unwrap_or_default(),
                e.map(|e| self.explore(e, depth + 1)).unwrap_or_default(),
            ),
        };
        a.extend(b);
        a
    }

    /// Adds `v`; dead when some member is left without a private neighbor.
    fn include(&self, st: State, v: usize) -> Option<State> {
        let nv = self.g.closed(v);
        let twice = st.twice | (st.once & nv);
        let once = (st.once | nv) - twice;
        let inn = st.inn.with(v);
        if inn.iter().any(|u| !self.g.closed(u).intersects(once)) {
            return None;
        }
        Some(State {
            inn,
            once,
            twice,
            undecided: st.undecided.without(v),
        })
    }

    /// Drops `v`; dead when a neighbor of `v` can no longer be dominated.
    fn exclude(&self, st: State, v: usize) -> Option<State> {
        let undecided = st.undecided.without(v);
        let available = st.inn | undecided;
        if self
            .g
            .closed(v)
            .iter()
            .any(|w| !self.g.closed(w).intersects(available))
        {
            return None;
        }
        Some(State { undecided, ..st })
    }
}
