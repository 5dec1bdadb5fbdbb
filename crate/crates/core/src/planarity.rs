//! Planarity by path embedding over the biconnected blocks, and
//! outerplanarity through the apex augmentation.
//!
//! Each block with a cycle is embedded incrementally: start from a cycle
//! (two faces), then repeatedly take the fragment of the remaining graph with
//! the fewest admissible faces and embed one path of it, splitting that
//! face. A fragment with no admissible face proves non-planarity.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::blocks_of;

/// Loops do not affect planarity and are ignored.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.num_vertices();
    let m = g.num_edges();
    if n <= 4 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    blocks_of(g).iter().all(|block| block_is_planar(block))
}

/// A graph is outerplanar iff adding one vertex adjacent to everything
/// leaves it planar.
pub fn is_outerplanar(g: &Graph) -> Result<bool> {
    if g.has_loops() {
        return Err(Error::LoopsNotAllowed("is_outerplanar"));
    }
    let n = g.num_vertices();
    let edges = g
        .edges()
        .iter()
        .map(|e| (e.u, e.v))
        .chain((0..n).map(|v| (v, n)));
    let apex = Graph::new(n + 1, edges)?;
    Ok(is_planar(&apex))
}

fn block_is_planar(edges: &[(usize, usize)]) -> bool {
    let mut verts: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    verts.sort_unstable();
    verts.dedup();
    let n = verts.len();
    if n <= 4 {
        return true;
    }
    if edges.len() > 3 * n - 6 {
        return false;
    }
    let idx = |v: usize| verts.binary_search(&v).unwrap();
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        let (i, j) = (idx(a), idx(b));
        adj[i].push(j);
        adj[j].push(i);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Embedder::new(adj).run()
}

struct Fragment {
    attachments: Vec<usize>,
    // interior vertices (empty for a single chord)
    interior: Vec<usize>,
    // for a chord: its endpoints
    chord: Option<(usize, usize)>,
}

struct Embedder {
    adj: Vec<Vec<usize>>,
    placed: Vec<bool>,
    placed_edges: BTreeSet<(usize, usize)>,
    faces: Vec<Vec<usize>>,
}

impl Embedder {
    fn new(adj: Vec<Vec<usize>>) -> Self {
        let n = adj.len();
        Embedder {
            adj,
            placed: vec![false; n],
            placed_edges: BTreeSet::new(),
            faces: Vec::new(),
        }
    }

    fn place_edge(&mut self, a: usize, b: usize) {
        self.placed_edges.insert((a.min(b), a.max(b)));
    }

    fn edge_placed(&self, a: usize, b: usize) -> bool {
        self.placed_edges.contains(&(a.min(b), a.max(b)))
    }

    fn run(mut self) -> bool {
        let cycle = self.find_cycle();
        for i in 0..cycle.len() {
            self.placed[cycle[i]] = true;
            self.place_edge(cycle[i], cycle[(i + 1) % cycle.len()]);
        }
        self.faces = vec![cycle.clone(), cycle];

        loop {
            let fragments = self.fragments();
            if fragments.is_empty() {
                return true;
            }
            let mut choice: Option<(usize, usize, usize)> = None; // (count, fragment, face)
            for (fi, frag) in fragments.iter().enumerate() {
                let admissible: Vec<usize> = (0..self.faces.len())
                    .filter(|&f| frag.attachments.iter().all(|a| self.faces[f].contains(a)))
                    .collect();
                if admissible.is_empty() {
                    return false;
                }
                if choice.is_none_or(|(c, _, _)| admissible.len() < c) {
                    choice = Some((admissible.len(), fi, admissible[0]));
                }
            }
            let (_, fi, face) = choice.unwrap();
            let path = self.fragment_path(&fragments[fi]);
            self.embed_path(face, &path);
        }
    }

    // Any cycle, via DFS back edge.
    fn find_cycle(&self) -> Vec<usize> {
        let n = self.adj.len();
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![usize::MAX; n];
        depth[0] = 0;
        let mut stack = vec![(0usize, 0usize)];
        while let Some((u, i)) = stack.pop() {
            if i < self.adj[u].len() {
                stack.push((u, i + 1));
                let w = self.adj[u][i];
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    stack.push((w, 0));
                } else if w != parent[u] && depth[w] < depth[u] {
                    let mut cyc = vec![u];
                    let mut x = u;
                    while x != w {
                        x = parent[x];
                        cyc.push(x);
                    }
                    return cyc;
                }
            }
        }
        unreachable!("a block with at least three vertices contains a cycle")
    }

    fn fragments(&self) -> Vec<Fragment> {
        let n = self.adj.len();
        let mut out = Vec::new();
        for u in 0..n {
            if !self.placed[u] {
                continue;
            }
            for &v in &self.adj[u] {
                if v > u && self.placed[v] && !self.edge_placed(u, v) {
                    out.push(Fragment {
                        attachments: vec![u, v],
                        interior: Vec::new(),
                        chord: Some((u, v)),
                    });
                }
            }
        }
        let mut seen = vec![false; n];
        for s in 0..n {
            if self.placed[s] || seen[s] {
                continue;
            }
            seen[s] = true;
            let mut interior = vec![s];
            let mut attachments = BTreeSet::new();
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if self.placed[w] {
                        attachments.insert(w);
                    } else if !seen[w] {
                        seen[w] = true;
                        interior.push(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(Fragment {
                attachments: attachments.into_iter().collect(),
                interior,
                chord: None,
            });
        }
        out
    }

    // A path between two distinct attachments running through the fragment.
    fn fragment_path(&self, frag: &Fragment) -> Vec<usize> {
        if let Some((a, b)) = frag.chord {
            return vec![a, b];
        }
        let start_att = frag.attachments[0];
        let inside = |v: usize| !self.placed[v] && frag.interior.contains(&v);
        let first = *self.adj[start_att]
            .iter()
            .find(|&&w| inside(w))
            .expect("attachment touches its fragment");
        let mut prev = vec![usize::MAX; self.adj.len()];
        prev[first] = first;
        let mut queue = VecDeque::from([first]);
        while let Some(u) = queue.pop_front() {
            if let Some(&end) = self.adj[u]
                .iter()
                .find(|&&w| self.placed[w] && w != start_att)
            {
                let mut path = vec![end, u];
                let mut x = u;
                while prev[x] != x {
                    x = prev[x];
                    path.push(x);
                }
                path.push(start_att);
                path.reverse();
                return path;
            }
            for &w in &self.adj[u] {
                if inside(w) && prev[w] == usize::MAX {
                    prev[w] = u;
                    queue.push_back(w);
                }
            }
        }
        unreachable!("fragments of a biconnected graph have two attachments")
    }

    fn embed_path(&mut self, face_idx: usize, path: &[usize]) {
        for w in path.windows(2) {
            self.place_edge(w[0], w[1]);
        }
        for &v in path {
            self.placed[v] = true;
        }
        let face = self.faces.swap_remove(face_idx);
        let (a, b) = (path[0], *path.last().unwrap());
        let len = face.len();
        let i = face.iter().position(|&x| x == a).unwrap();
        let j = face.iter().position(|&x| x == b).unwrap();
        let interior = &path[1..path.len() - 1];

        let walk = |from: usize, to: usize| -> Vec<usize> {
            let mut out = vec![face[from]];
            let mut k = from;
            while k != to {
                k = (k + 1) % len;
                out.push(face[k]);
            }
            out
        };
        let mut first = walk(i, j);
        first.extend(interior.iter().rev());
        let mut second = walk(j, i);
        second.extend(interior.iter());
        self.faces.push(first);
        self.faces.push(second);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::new(a + b, (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j)))).unwrap()
    }

    #[test]
    fn kuratowski_graphs() {
        assert!(!is_planar(&Graph::complete(5).unwrap()));
        assert!(!is_planar(&complete_bipartite(3, 3)));
        assert!(is_planar(&Graph::complete(4).unwrap()));
        assert!(is_planar(&complete_bipartite(2, 7)));
    }

    #[test]
    fn subdivided_k33_is_not_planar() {
        let k33 = complete_bipartite(3, 3);
        let g = k33.add_ear(0, 3, 2).unwrap();
        // remove the original edge to leave a subdivision
        let edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|e| (e.u, e.v))
            .filter(|&e| e != (0, 3))
            .collect();
        let sub = Graph::new(g.num_vertices(), edges).unwrap();
        assert!(!is_planar(&sub));
    }

    #[test]
    fn petersen_is_not_planar() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = Graph::new(10, outer.chain(spokes).chain(inner)).unwrap();
        assert!(!is_planar(&g));
    }

    #[test]
    fn planar_families() {
        // wheel, prism, octahedron
        let wheel = Graph::new(
            7,
            (0..6)
                .map(|i| (i, (i + 1) % 6))
                .chain((0..6).map(|i| (i, 6))),
        )
        .unwrap();
        assert!(is_planar(&wheel));
        let prism = Graph::new(
            6,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert!(is_planar(&prism));
        let octa = Graph::new(
            6,
            (0..6)
                .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
                .filter(|&(u, v)| v != u + 3),
        )
        .unwrap();
        assert_eq!(octa.num_edges(), 12);
        assert!(is_planar(&octa));
    }

    #[test]
    fn outerplanar_examples() {
        for n in 3..10 {
            assert!(is_outerplanar(&Graph::cycle(n).unwrap()).unwrap());
        }
        assert!(!is_outerplanar(&Graph::complete(4).unwrap()).unwrap());
        assert!(!is_outerplanar(&Graph::clique_star(2, 3).unwrap()).unwrap());
        assert!(!is_outerplanar(&complete_bipartite(2, 3)).unwrap());
        assert!(is_outerplanar(&Graph::path(6).unwrap()).unwrap());
        let looped = Graph::from_parts(2, [(0, 1)], [0]).unwrap();
        assert!(is_outerplanar(&looped).is_err());
    }
}
