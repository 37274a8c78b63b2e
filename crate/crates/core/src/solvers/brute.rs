use crate::graph::{Graph, VertexSet};
use crate::variants::{satisfies, Direction, DomVariant};

use super::{guard, Optimum};

/// Vertex count above which a full subset scan is impractical. The scan
/// still runs; callers decide whether to wait.
pub const BRUTE_FORCE_SOFT_LIMIT: usize = 24;

/// Calls `f` on every `k`-subset of `{0..n}` in ascending bitmask order
/// (Gosper's successor).
pub fn for_each_subset_of_size(n: usize, k: usize, mut f: impl FnMut(VertexSet)) {
    assert!(n < 127, "subset scan limited to 126 vertices");
    if k > n {
        return;
    }
    if k == 0 {
        f(VertexSet::EMPTY);
        return;
    }
    let limit = 1u128 << n;
    let mut x = (1u128 << k) - 1;
    while x < limit {
        f(VertexSet::from_bits(x));
        let low = x & x.wrapping_neg();
        let ripple = x + low;
        x = (((ripple ^ x) >> 2) / low) | ripple;
    }
}

/// Scans cardinalities in order (upward for minimized variants, downward
/// for maximized ones) and returns every satisfying set of the first
/// cardinality that has any.
pub fn brute_force_optimal(g: &Graph, variant: DomVariant) -> Optimum {
    if let Some(v) = guard(g, variant) {
        return Optimum::infeasible(v);
    }
    let n = g.n();
    let sizes: Box<dyn Iterator<Item = usize>> = match variant.direction() {
        Direction::Minimize => Box::new(0..=n),
        Direction::Maximize => Box::new((0..=n).rev()),
    };
    for k in sizes {
        let mut found = Vec::new();
        for_each_subset_of_size(n, k, |s| {
            if satisfies(g, s, variant) {
                found.push(s);
            }
        });
        if !found.is_empty() {
            return Optimum::from_sets(found);
        }
    }
    Optimum::from_sets(Vec::new())
}
