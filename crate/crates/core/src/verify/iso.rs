//! Backtracking isomorphism and induced-subgraph search for small graphs.

use crate::graph::{Graph, VertexSet};

/// Order up to which [`are_isomorphic`] is expected to answer instantly.
pub const ISOMORPHISM_SOFT_LIMIT: usize = 16;

/// A bijection `f` with `uv ∈ E(g1) ⇔ f(u)f(v) ∈ E(g2)`, if one exists.
/// The mapping is checked edge by edge before it is returned.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Option<Vec<usize>> {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let sig1: Vec<_> = (0..g1.n()).map(|v| signature(g1, v)).collect();
    let sig2: Vec<_> = (0..g2.n()).map(|v| signature(g2, v)).collect();
    let mut a = sig1.clone();
    let mut b = sig2.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return None;
    }
    let order = search_order(g1);
    let mut map = vec![usize::MAX; g1.n()];
    let found = extend(g1, g2, &order, 0, &mut map, VertexSet::EMPTY, &|u, w| sig1[u] == sig2[w]);
    let map = found.then_some(map)?;
    assert!(is_isomorphism(g1, g2, &map), "isomorphism search returned a non-isomorphism");
    Some(map)
}

/// True iff `map` is a bijection carrying edges onto edges and non-edges
/// onto non-edges.
pub fn is_isomorphism(g1: &Graph, g2: &Graph, map: &[usize]) -> bool {
    if g1.n() != g2.n() || map.len() != g1.n() {
        return false;
    }
    let image: VertexSet = map.iter().copied().filter(|&w| w < g2.n()).collect();
    if image.len() != g1.n() {
        return false;
    }
    (0..g1.n()).all(|u| (u + 1..g1.n()).all(|v| g1.has_edge(u, v) == g2.has_edge(map[u], map[v])))
}

/// An injection of `pattern` into `g` whose image induces a copy of
/// `pattern`.
pub fn find_induced(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    if pattern.n() > g.n() {
        return None;
    }
    let order = search_order(pattern);
    let mut map = vec![usize::MAX; pattern.n()];
    let found = extend(
        pattern,
        g,
        &order,
        0,
        &mut map,
        VertexSet::EMPTY,
        &|u, w| g.degree(w) >= pattern.degree(u),
    );
    found.then_some(map)
}

/// Degree and sorted neighbor degrees.
fn signature(g: &Graph, v: usize) -> (usize, Vec<usize>) {
    let mut nd: Vec<usize> = g.neighbors(v).iter().map(|w| g.degree(w)).collect();
    nd.sort_unstable();
    (g.degree(v), nd)
}

/// Vertices ordered so each one (after the first of its component) has a
/// neighbor earlier in the order, preferring high degree.
fn search_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.n());
    let mut placed = VertexSet::EMPTY;
    while order.len() < g.n() {
        let frontier = g.open_neighborhood_of_set(placed) - placed;
        let pool = if frontier.is_empty() { g.vertices() - placed } else { frontier };
        let next = pool
            .iter()
            .max_by_key(|&v| ((g.neighbors(v) & placed).len(), g.degree(v), std::cmp::Reverse(v)))
            .expect("pool is nonempty");
        placed.insert(next);
        order.push(next);
    }
    order
}

fn extend(
    small: &Graph,
    big: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: VertexSet,
    compatible: &dyn Fn(usize, usize) -> bool,
) -> bool {
    let Some(&u) = order.get(depth) else {
        return true;
    };
    for w in (big.vertices() - used).iter() {
        if !compatible(u, w) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&p| small.has_edge(u, p) == big.has_edge(w, map[p]));
        if !consistent {
            continue;
        }
        map[u] = w;
        if extend(small, big, order, depth + 1, map, used.with(w), compatible) {
            return true;
        }
    }
    map[u] = usize::MAX;
    false
}
