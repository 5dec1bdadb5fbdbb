//! Independent oracles shared by the integration and acceptance tests.

#![allow(dead_code)]

use std::collections::HashSet;

use orbchrom::graph::Graph;
use orbchrom::perm::PermGroup;

/// Every proper `k`-coloring of `g`, as color vectors.
pub fn proper_colorings(g: &Graph, k: usize) -> Vec<Vec<u8>> {
    let n = g.num_vertices();
    let adj = g.adjacency();
    let mut out = Vec::new();
    let mut colors = vec![0u8; n];
    fn place(v: usize, k: usize, adj: &[Vec<usize>], colors: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if v == colors.len() {
            out.push(colors.clone());
            return;
        }
        for c in 0..k as u8 {
            if adj[v].iter().all(|&w| w >= v || colors[w] != c) {
                colors[v] = c;
                place(v + 1, k, adj, colors, out);
            }
        }
    }
    if !g.has_loops() {
        place(0, k, &adj, &mut colors, &mut out);
    }
    out
}

/// Number of proper `k`-colorings by exhaustive search.
pub fn count_colorings(g: &Graph, k: usize) -> usize {
    proper_colorings(g, k).len()
}

/// Number of orbits of proper `k`-colorings under `group`, by marking every
/// image of each unvisited coloring.
pub fn count_coloring_orbits(g: &Graph, group: &PermGroup, k: usize) -> usize {
    let colorings = proper_colorings(g, k);
    let mut seen: HashSet<Vec<u8>> = HashSet::with_capacity(colorings.len());
    let mut orbits = 0;
    for c in &colorings {
        if seen.contains(c) {
            continue;
        }
        orbits += 1;
        for h in group.elements() {
            let mut image = vec![0u8; c.len()];
            for (v, &color) in c.iter().enumerate() {
                image[h.apply(v)] = color;
            }
            seen.insert(image);
        }
    }
    orbits
}
