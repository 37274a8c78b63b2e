//! Branch-and-bound engine.
//!
//! Minimized covering variants are phrased as hitting-set problems: every
//! feasible set must meet each constraint set (a closed neighborhood for
//! domination, an open one for total domination, a symmetric difference
//! N[u] △ N[w] for separating a pair). The search branches on the
//! unsatisfied constraint with the fewest candidates, taking candidate `j`
//! while excluding candidates `0..j`, so subtrees are disjoint and every
//! optimal set is reached exactly once. Unit constraints are propagated
//! (a pendant whose support was excluded forces the pendant, and so on).
//! The target size is raised one step at a time from a packing lower bound,
//! and a subtree is cut only when its bound strictly exceeds the target.
//!
//! Hereditary families (irredundant sets, independent sets) use ordered
//! extension with an |S| + |remaining| bound, and Γ uses the minimal
//! dominating set enumerator with the same bound.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::graph::{Graph, VertexSet};
use crate::variants::{has_perfect_matching, DomVariant};

use super::brute::for_each_subset_of_size;
use super::minimal::max_minimal_dominating;
use super::{guard, Optimum};

const PARALLEL_MIN_VERTICES: usize = 20;
const PARALLEL_DEPTH: usize = 3;

/// Same contract and output as [`super::brute_force_optimal`].
pub fn bb_optimal(g: &Graph, variant: DomVariant) -> Optimum {
    if let Some(v) = guard(g, variant) {
        return Optimum::infeasible(v);
    }
    let sets = match variant {
        DomVariant::Ir => min_maximal_irredundant(g),
        DomVariant::UpperIr => max_hereditary(g, Hereditary::Irredundant),
        DomVariant::Independence => max_hereditary(g, Hereditary::Independent),
        DomVariant::UpperGamma => max_minimal_dominating(g),
        _ => HittingSearch::new(g, variant).solve(),
    };
    Optimum::from_sets(sets)
}

/// Extra requirement checked beyond the hitting constraints.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Side {
    None,
    /// Members pairwise non-adjacent; neighbors of members are excluded.
    Independent,
    /// G[S] connected; a disconnected S must pick up a neighbor of its
    /// first component.
    Connected,
    /// G[S] has a perfect matching; checked on completions.
    Matching,
}

#[derive(Clone, Copy, Debug)]
struct Node {
    inn: VertexSet,
    out: VertexSet,
}

struct HittingSearch<'a> {
    g: &'a Graph,
    constraints: Vec<VertexSet>,
    side: Side,
}

/// Sorts by size and drops every constraint that contains another one.
fn reduce_constraints(mut cs: Vec<VertexSet>) -> Vec<VertexSet> {
    cs.sort_unstable_by_key(|c| (c.len(), *c));
    cs.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(cs.len());
    for c in cs {
        if !kept.iter().any(|k| k.is_subset(c)) {
            kept.push(c);
        }
    }
    kept
}

impl<'a> HittingSearch<'a> {
    fn new(g: &'a Graph, variant: DomVariant) -> Self {
        let n = g.n();
        let closed = || (0..n).map(|v| g.closed(v));
        let open = || (0..n).map(|v| g.neighbors(v));
        let pairs = || (0..n).flat_map(move |u| (u + 1..n).map(move |w| (u, w)));
        let separate = |u: usize, w: usize| g.closed(u) ^ g.closed(w);
        let locate = |u: usize, w: usize| separate(u, w).with(u).with(w);

        let (constraints, side): (Vec<VertexSet>, Side) = match variant {
            DomVariant::Gamma => (closed().collect(), Side::None),
            DomVariant::IndepDom => (closed().collect(), Side::Independent),
            DomVariant::Connected => (closed().collect(), Side::Connected),
            DomVariant::Total => (open().collect(), Side::None),
            DomVariant::Paired => (open().collect(), Side::Matching),
            DomVariant::IdCode => (
                closed()
                    .chain(pairs().map(|(u, w)| separate(u, w)))
                    .collect(),
                Side::None,
            ),
            DomVariant::LocDom => (
                closed().chain(pairs().map(|(u, w)| locate(u, w))).collect(),
                Side::None,
            ),
            DomVariant::LocTotal => (
                open().chain(pairs().map(|(u, w)| locate(u, w))).collect(),
                Side::None,
            ),
            other => unreachable!("{other} is not a hitting-set variant"),
        };
        HittingSearch {
            g,
            constraints: reduce_constraints(constraints),
            side,
        }
    }

    fn solve(&self) -> Vec<VertexSet> {
        let root = Node {
            inn: VertexSet::EMPTY,
            out: VertexSet::EMPTY,
        };
        let open: Vec<VertexSet> = self.constraints.clone();
        let mut target = self.lower_bound(root, &open);
        while target <= self.g.n() {
            let found = self.explore(root, target, 0);
            if !found.is_empty() {
                return found;
            }
            target += 1;
        }
        Vec::new()
    }

    /// Adds `vs` to the partial solution, or reports the branch dead.
    fn include(&self, node: &mut Node, vs: VertexSet) -> bool {
        if vs.intersects(node.out) {
            return false;
        }
        if self.side == Side::Independent {
            let nbrs = self.g.open_neighborhood_of_set(vs);
            if nbrs.intersects(vs | node.inn) {
                return false;
            }
            node.out |= nbrs;
        }
        node.inn |= vs;
        true
    }

    /// max(disjoint packing of open constraints, open count / best coverage).
    fn lower_bound(&self, node: Node, open: &[VertexSet]) -> usize {
        if open.is_empty() {
            return 0;
        }
        let mut sorted: Vec<VertexSet> = open.to_vec();
        sorted.sort_unstable_by_key(|c| c.len());
        let mut used = VertexSet::EMPTY;
        let mut packing = 0;
        for c in &sorted {
            if !c.intersects(used) {
                used |= *c;
                packing += 1;
            }
        }
        let free = self.g.vertices() - node.inn - node.out;
        let best_hit = free
            .iter()
            .map(|v| open.iter().filter(|c| c.contains(v)).count())
            .max()
            .unwrap_or(0);
        let coverage = if best_hit == 0 {
            usize::MAX / 2
        } else {
            open.len().div_ceil(best_hit)
        };
        packing.max(coverage)
    }

    fn explore(&self, mut node: Node, target: usize, depth: usize) -> Vec<VertexSet> {
        let branch = loop {
            if node.inn.len() > target {
                return Vec::new();
            }
            let mut forced = VertexSet::EMPTY;
            let mut open = Vec::new();
            for &c in &self.constraints {
                if c.intersects(node.inn) {
                    continue;
                }
                let cand = c - node.out;
                match cand.len() {
                    0 => return Vec::new(),
                    1 => forced |= cand,
                    _ => open.push(cand),
                }
            }
            if !forced.is_empty() {
                if !self.include(&mut node, forced) {
                    return Vec::new();
                }
                continue;
            }
            if node.inn.len() + self.lower_bound(node, &open) > target {
                return Vec::new();
            }
            if let Some(smallest) = open.iter().min_by_key(|c| c.len()) {
                break *smallest;
            }
            // every static constraint is met
            match self.side {
                Side::None | Side::Independent => {
                    return if node.inn.len() == target {
                        vec![node.inn]
                    } else {
                        Vec::new()
                    };
                }
                Side::Matching => return self.complete_matching(node, target),
                Side::Connected => {
                    let Some(first) = node.inn.first() else {
                        return Vec::new();
                    };
                    let comp = self.g.component_within(first, node.inn);
                    if comp == node.inn {
                        return if node.inn.len() == target {
                            vec![node.inn]
                        } else {
                            Vec::new()
                        };
                    }
                    if node.inn.len() + 1 > target {
                        return Vec::new();
                    }
                    let bridge = self.g.open_neighborhood_of_set(comp) - node.inn - node.out;
                    if bridge.is_empty() {
                        return Vec::new();
                    }
                    break bridge;
                }
            }
        };

        let mut children = Vec::with_capacity(branch.len());
        let mut earlier = VertexSet::EMPTY;
        for v in branch {
            let mut child = Node {
                inn: node.inn,
                out: node.out | earlier,
            };
            if self.include(&mut child, VertexSet::singleton(v)) {
                children.push(child);
            }
            earlier.insert(v);
        }
        if depth < PARALLEL_DEPTH && self.g.n() >= PARALLEL_MIN_VERTICES {
            children
                .into_par_iter()
                .flat_map_iter(|c| self.explore(c, target, depth + 1))
                .collect()
        } else {
            children
                .into_iter()
                .flat_map(|c| self.explore(c, target, depth + 1))
                .collect()
        }
    }

    /// All supersets of `node.inn` of size `target` avoiding `node.out`
    /// whose induced subgraph has a perfect matching.
    fn complete_matching(&self, node: Node, target: usize) -> Vec<VertexSet> {
        let free: Vec<usize> = (self.g.vertices() - node.inn - node.out).to_vec();
        let mut found = Vec::new();
        for_each_subset_of_size(free.len(), target - node.inn.len(), |pick| {
            let s = node.inn | pick.iter().map(|i| free[i]).collect();
            if has_perfect_matching(self.g, s) {
                found.push(s);
            }
        });
        found
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Hereditary {
    Irredundant,
    Independent,
}

/// Partial set with the coverage bookkeeping needed for irredundance.
#[derive(Clone, Copy)]
struct Partial {
    set: VertexSet,
    once: VertexSet,
    twice: VertexSet,
}

impl Partial {
    const EMPTY: Partial = Partial {
        set: VertexSet::EMPTY,
        once: VertexSet::EMPTY,
        twice: VertexSet::EMPTY,
    };

    fn extend(self, g: &Graph, v: usize, kind: Hereditary) -> Option<Partial> {
        match kind {
            Hereditary::Independent => (!g.neighbors(v).intersects(self.set)).then(|| Partial {
                set: self.set.with(v),
                ..self
            }),
            Hereditary::Irredundant => {
                let nv = g.closed(v);
                let twice = self.twice | (self.once & nv);
                let once = (self.once | nv) - twice;
                let set = self.set.with(v);
                set.iter()
                    .all(|u| g.closed(u).intersects(once))
                    .then_some(Partial { set, once, twice })
            }
        }
    }
}

/// ir: iterative deepening over the size of an irredundant set, testing
/// maximality at the target size.
fn min_maximal_irredundant(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let maximal = |p: Partial| {
        (g.vertices() - p.set)
            .iter()
            .all(|w| p.extend(g, w, Hereditary::Irredundant).is_none())
    };
    fn walk(
        g: &Graph,
        p: Partial,
        start: usize,
        target: usize,
        maximal: &(dyn Fn(Partial) -> bool + Sync),
        depth: usize,
    ) -> Vec<VertexSet> {
        if p.set.len() == target {
            return if maximal(p) { vec![p.set] } else { Vec::new() };
        }
        let need = target - p.set.len();
        let last = g.n().saturating_sub(need);
        let step = |v: usize| match p.extend(g, v, Hereditary::Irredundant) {
            Some(q) => walk(g, q, v + 1, target, maximal, depth + 1),
            None => Vec::new(),
        };
        if depth == 0 && g.n() >= PARALLEL_MIN_VERTICES {
            (start..=last).into_par_iter().flat_map_iter(step).collect()
        } else {
            (start..=last).flat_map(step).collect()
        }
    }
    for target in 0..=n {
        let found = walk(g, Partial::EMPTY, 0, target, &maximal, 0);
        if !found.is_empty() {
            return found;
        }
    }
    Vec::new()
}

/// Largest members of a hereditary family by ordered extension, cutting a
/// branch when even taking every remaining vertex stays below the best size
/// seen so far.
fn max_hereditary(g: &Graph, kind: Hereditary) -> Vec<VertexSet> {
    let best = AtomicUsize::new(0);
    fn walk(
        g: &Graph,
        p: Partial,
        start: usize,
        kind: Hereditary,
        best: &AtomicUsize,
        depth: usize,
    ) -> Vec<VertexSet> {
        let size = p.set.len();
        let mut found = Vec::new();
        if size >= best.load(Ordering::Relaxed) {
            best.fetch_max(size, Ordering::Relaxed);
            found.push(p.set);
        }
        let step = |v: usize| {
            if size + (g.n() - v) < best.load(Ordering::Relaxed) {
                return Vec::new();
            }
            match p.extend(g, v, kind) {
                Some(q) => walk(g, q, v + 1, kind, best, depth + 1),
                None => Vec::new(),
            }
        };
        if depth == 0 && g.n() >= PARALLEL_MIN_VERTICES {
            found.par_extend((start..g.n()).into_par_iter().flat_map_iter(step));
        } else {
            found.extend((start..g.n()).flat_map(step));
        }
        found
    }
    let found = walk(g, Partial::EMPTY, 0, kind, &best, 0);
    let top = found.iter().map(|s| s.len()).max().unwrap_or(0);
    found.into_iter().filter(|s| s.len() == top).collect()
}
