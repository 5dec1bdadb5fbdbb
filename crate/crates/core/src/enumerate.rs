//! Exhaustive enumeration of small graphs up to isomorphism.
//!
//! Graphs on `n` vertices are produced by adding a vertex to each
//! representative on `n - 1` vertices, adjacent to every possible subset.
//! Every connected graph has a vertex whose removal leaves it connected, so
//! this reaches every class as long as the filter is closed under vertex
//! deletion. Duplicates are removed by fingerprint bucket, then by an exact
//! isomorphism test.

use std::collections::HashMap;

use crate::automorphism::{are_isomorphic, fingerprint};
use crate::graph::Graph;

/// Connected graphs on `1..=max_vertices` vertices, one per isomorphism
/// class, grouped by vertex count. `keep` must be hereditary.
pub fn connected_graphs(max_vertices: usize, keep: impl Fn(&Graph) -> bool) -> Vec<Vec<Graph>> {
    grow(max_vertices, true, keep)
}

/// All graphs (connected or not) on `1..=max_vertices` vertices.
pub fn all_graphs(max_vertices: usize, keep: impl Fn(&Graph) -> bool) -> Vec<Vec<Graph>> {
    grow(max_vertices, false, keep)
}

fn grow(max_vertices: usize, connected: bool, keep: impl Fn(&Graph) -> bool) -> Vec<Vec<Graph>> {
    let mut levels: Vec<Vec<Graph>> = Vec::new();
    if max_vertices == 0 {
        return levels;
    }
    let k1 = Graph::empty(1).expect("one vertex");
    levels.push(if keep(&k1) { vec![k1] } else { Vec::new() });

    for n in 2..=max_vertices {
        let mut level = Classes::default();
        let first_mask = usize::from(connected);
        for g in &levels[n - 2] {
            let base: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
            for mask in first_mask..1usize << (n - 1) {
                let edges = base.iter().copied().chain(
                    (0..n - 1)
                        .filter(|&v| mask >> v & 1 == 1)
                        .map(|v| (v, n - 1)),
                );
                let h = Graph::new(n, edges).expect("vertices in range");
                if keep(&h) {
                    level.insert(h);
                }
            }
        }
        levels.push(level.graphs);
    }
    levels
}

#[derive(Default)]
struct Classes {
    graphs: Vec<Graph>,
    buckets: HashMap<Vec<u64>, Vec<usize>>,
}

impl Classes {
    fn insert(&mut self, g: Graph) {
        let bucket = self.buckets.entry(fingerprint(&g)).or_default();
        if bucket.iter().any(|&i| are_isomorphic(&self.graphs[i], &g)) {
            return;
        }
        bucket.push(self.graphs.len());
        self.graphs.push(g);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        // connected graphs and all graphs on n vertices
        let conn: Vec<usize> = connected_graphs(6, |_| true).iter().map(Vec::len).collect();
        assert_eq!(conn, vec![1, 1, 2, 6, 21, 112]);
        let all: Vec<usize> = all_graphs(5, |_| true).iter().map(Vec::len).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn trees() {
        let is_tree = |g: &Graph| g.num_edges() + 1 == g.num_vertices();
        let counts: Vec<usize> = connected_graphs(8, is_tree).iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23]);
    }
}
