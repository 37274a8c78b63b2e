//! Test corpora: every graph of a given order up to isomorphism, and
//! seeded random graphs.

use std::collections::HashMap;

use rand::Rng;

use crate::graph::Graph;
use crate::verify::are_isomorphic;

/// All graphs on `n` vertices up to isomorphism (1, 1, 2, 4, 11, 34, 156,
/// 1044 for n = 0..7). Built by adding a vertex in every possible way to
/// the graphs of order `n - 1`. Practical up to n = 7.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0)];
    for order in 1..=n {
        let mut buckets: HashMap<Vec<(usize, Vec<usize>)>, Vec<Graph>> = HashMap::new();
        let mut out = Vec::new();
        for g in &level {
            for mask in 0u64..1 << (order - 1) {
                let mut edges: Vec<(usize, usize)> = g.edges().collect();
                edges.extend((0..order - 1).filter(|&u| mask >> u & 1 == 1).map(|u| (u, order - 1)));
                let cand = Graph::from_edge_list(order, &edges, None).expect("valid edges");
                let bucket = buckets.entry(invariant(&cand)).or_default();
                if bucket.iter().all(|h| are_isomorphic(h, &cand).is_none()) {
                    bucket.push(cand.clone());
                    out.push(cand);
                }
            }
        }
        level = out;
    }
    level
}

/// Connected members of [`all_graphs`].
pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

fn invariant(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let mut sig: Vec<_> = (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    sig.sort_unstable();
    sig
}

/// G(n, p): each pair is an edge independently with probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges, None).expect("valid edges")
}

/// A random spanning tree (each vertex joined to a random earlier one)
/// plus every other pair with probability `p`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        for u in 0..v {
            if u == parent || rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges, None).expect("valid edges")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn counts_match_known_sequence() {
        let counts: Vec<usize> = (0..=6).map(|n| all_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> = (1..=6).map(|n| all_connected_graphs(n).len()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn random_graphs_are_seeded() {
        let a = random_connected_graph(&mut ChaCha8Rng::seed_from_u64(7), 12, 0.3);
        let b = random_connected_graph(&mut ChaCha8Rng::seed_from_u64(7), 12, 0.3);
        assert_eq!(a, b);
        assert!(a.is_connected());
        assert_eq!(random_graph(&mut ChaCha8Rng::seed_from_u64(1), 5, 1.0).edge_count(), 10);
    }
}
