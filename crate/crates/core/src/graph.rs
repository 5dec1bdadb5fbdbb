//! Finite undirected graphs with optional loops, and the named constructions.
//!
//! Vertices are dense indices `0..n`. Edges are stored as normalized
//! `(min, max)` pairs in sorted order; parallel edges collapse on
//! construction. Loops are kept apart from edges because they only arise from
//! quotients and force the chromatic polynomial to zero.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// An unordered vertex pair stored as `(min, max)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexPair {
    pub u: usize,
    pub v: usize,
}

impl VertexPair {
    pub fn new(a: usize, b: usize) -> Self {
        VertexPair {
            u: a.min(b),
            v: a.max(b),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    edges: Vec<VertexPair>,
    loops: Vec<usize>,
}

impl Graph {
    /// Builds a graph from raw parts. A pair `(v, v)` in `edges` is recorded
    /// as a loop; duplicates are collapsed.
    pub fn from_parts(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        loops: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let mut edge_set = BTreeSet::new();
        let mut loop_set = BTreeSet::new();
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                loop_set.insert(a);
            } else {
                edge_set.insert(VertexPair::new(a, b));
            }
        }
        for v in loops {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            loop_set.insert(v);
        }
        Ok(Graph {
            n,
            edges: edge_set.into_iter().collect(),
            loops: loop_set.into_iter().collect(),
        })
    }

    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::from_parts(n, edges, std::iter::empty())
    }

    // Internal constructor for callers that already guarantee valid indices.
    pub(crate) fn from_valid(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Self::new(n, edges).expect("edge indices in range")
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[VertexPair] {
        &self.edges
    }

    pub fn loops(&self) -> &[usize] {
        &self.loops
    }

    pub fn has_loops(&self) -> bool {
        !self.loops.is_empty()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        if a == b {
            return self.loops.binary_search(&a).is_ok();
        }
        self.edges.binary_search(&VertexPair::new(a, b)).is_ok()
    }

    /// Sorted neighbor lists; loops are not listed as neighbors.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg
    }

    pub fn complete(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("complete graph needs n >= 1"));
        }
        Ok(Self::complete_unchecked(n))
    }

    fn complete_unchecked(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_valid(n, edges)
    }

    /// `s` isolated vertices.
    pub fn empty(s: usize) -> Result<Self> {
        if s == 0 {
            return Err(Error::invalid("empty graph needs s >= 1"));
        }
        Ok(Self::from_valid(s, std::iter::empty()))
    }

    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("path needs n >= 1"));
        }
        Ok(Self::from_valid(n, (1..n).map(|v| (v - 1, v))))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid("cycle needs n >= 3"));
        }
        Ok(Self::from_valid(n, (0..n).map(|v| (v, (v + 1) % n))))
    }

    /// Disjoint union plus every edge between the two parts. `g2`'s vertices
    /// are shifted by `|V(g1)|`.
    pub fn join(g1: &Graph, g2: &Graph) -> Result<Self> {
        if g1.has_loops() || g2.has_loops() {
            return Err(Error::LoopsNotAllowed("join"));
        }
        let off = g1.n;
        let edges = g1
            .edges
            .iter()
            .map(|e| (e.u, e.v))
            .chain(g2.edges.iter().map(|e| (e.u + off, e.v + off)))
            .chain((0..g1.n).flat_map(|u| (0..g2.n).map(move |v| (u, v + off))));
        Ok(Self::from_valid(g1.n + g2.n, edges))
    }

    /// `H_{n,s}`: the join of `K_n` with `N_s`. Clique vertices are `0..n`.
    pub fn clique_star(n: usize, s: usize) -> Result<Self> {
        Self::join(&Self::complete(n)?, &Self::empty(s)?)
    }

    pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Self {
        let off = g1.n;
        let edges = g1
            .edges
            .iter()
            .map(|e| (e.u, e.v))
            .chain(g2.edges.iter().map(|e| (e.u + off, e.v + off)));
        let loops = g1
            .loops
            .iter()
            .copied()
            .chain(g2.loops.iter().map(|v| v + off));
        Self::from_parts(g1.n + g2.n, edges, loops).expect("indices in range")
    }

    /// Adds a path with `n` fresh interior vertices between adjacent `u` and `v`.
    pub fn add_ear(&self, u: usize, v: usize, n: usize) -> Result<Self> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::invalid("ear endpoints must differ"));
        }
        if !self.has_edge(u, v) {
            return Err(Error::NotAdjacent(u, v));
        }
        if n == 0 {
            return Err(Error::invalid("ear needs at least one interior vertex"));
        }
        let first = self.n;
        let mut chain = vec![u];
        chain.extend(first..first + n);
        chain.push(v);
        let edges = self
            .edges
            .iter()
            .map(|e| (e.u, e.v))
            .chain(chain.windows(2).map(|w| (w[0], w[1])));
        Self::from_parts(self.n + n, edges, self.loops.iter().copied())
    }

    /// Glues one copy of `gadget` onto every vertex, identifying vertex `i`
    /// with the gadget's vertex `root`. Copy `i` occupies the block
    /// `k + i*(|gadget|-1) ..` holding the gadget's other vertices in index
    /// order.
    pub fn attach_at_each_vertex(&self, gadget: &Graph, root: usize) -> Result<Self> {
        if self.has_loops() || gadget.has_loops() {
            return Err(Error::LoopsNotAllowed("suspension"));
        }
        if root >= gadget.n {
            return Err(Error::VertexOutOfRange {
                vertex: root,
                n: gadget.n,
            });
        }
        let k = self.n;
        let block = gadget.n - 1;
        let local = |i: usize, w: usize| -> usize {
            if w == root {
                i
            } else {
                let t = if w < root { w } else { w - 1 };
                k + i * block + t
            }
        };
        let mut edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e.u, e.v)).collect();
        for i in 0..k {
            edges.extend(gadget.edges.iter().map(|e| (local(i, e.u), local(i, e.v))));
        }
        Self::new(k + k * block, edges)
    }

    /// `Γ^{(n,s)}`: a copy of `H_{n,s}` hung from every vertex, glued at the
    /// copy's first clique vertex.
    pub fn suspend(&self, n: usize, s: usize) -> Result<Self> {
        if self.has_loops() {
            return Err(Error::LoopsNotAllowed("suspend"));
        }
        self.attach_at_each_vertex(&Self::clique_star(n, s)?, 0)
    }

    /// Subgraph induced on `vertices`, relabeled to `0..len` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| index[e.u] != usize::MAX && index[e.v] != usize::MAX)
            .map(|e| (index[e.u], index[e.v]));
        let loops = self
            .loops
            .iter()
            .filter(|&&v| index[v] != usize::MAX)
            .map(|&v| index[v]);
        Self::from_parts(vertices.len(), edges, loops).expect("indices in range")
    }

    /// Vertex sets of connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_bipartite(&self) -> bool {
        self.odd_cycle().is_none()
    }

    /// An odd cycle as a vertex sequence (consecutive entries adjacent, last
    /// adjacent to first), or `None` if the graph is bipartite. A loop is an
    /// odd cycle of length one.
    pub fn odd_cycle(&self) -> Option<Vec<usize>> {
        if let Some(&v) = self.loops.first() {
            return Some(vec![v]);
        }
        let adj = self.adjacency();
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![usize::MAX; self.n];
        for root in 0..self.n {
            if depth[root] != usize::MAX {
                continue;
            }
            depth[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if depth[w] == usize::MAX {
                        depth[w] = depth[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if depth[w] == depth[u] {
                        return Some(tree_cycle(&parent, &depth, u, w));
                    }
                }
            }
        }
        None
    }
}

// Cycle closed by the non-tree edge (a, b) where a and b sit at equal BFS depth.
fn tree_cycle(parent: &[usize], depth: &[usize], a: usize, b: usize) -> Vec<usize> {
    let (mut x, mut y) = (a, b);
    let mut left = vec![x];
    let mut right = vec![y];
    while x != y {
        if depth[x] >= depth[y] {
            x = parent[x];
            left.push(x);
        }
        if x != y && depth[y] >= depth[x] {
            y = parent[y];
            right.push(y);
        }
    }
    // both lists now end at the common ancestor
    right.pop();
    right.reverse();
    left.extend(right);
    canonical_rotation(left)
}

// Start at the smallest vertex and walk towards its smaller neighbor.
fn canonical_rotation(mut cycle: Vec<usize>) -> Vec<usize> {
    let start = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap_or(0);
    cycle.rotate_left(start);
    if cycle.len() > 2 && cycle[cycle.len() - 1] < cycle[1] {
        cycle[1..].reverse();
    }
    cycle
}
