//! Automorphism groups and isomorphism tests for small graphs.
//!
//! Both searches individualize one vertex at a time and refine the ordered
//! partition to an equitable one. Refinement is driven only by cell indices
//! and neighbor counts, so two graphs that are isomorphic under the current
//! individualization produce identical traces; a trace mismatch prunes the
//! branch. Every leaf mapping is checked edge by edge before it is accepted.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::{PermGroup, Permutation};

#[derive(Debug, Clone, Copy)]
pub struct AutConfig {
    pub max_vertices: usize,
    pub max_order: usize,
}

impl Default for AutConfig {
    fn default() -> Self {
        AutConfig {
            max_vertices: 16,
            max_order: 1_000_000,
        }
    }
}

/// The full automorphism group with default limits.
pub fn automorphism_group(g: &Graph) -> Result<PermGroup> {
    automorphism_group_with(g, AutConfig::default())
}

pub fn automorphism_group_with(g: &Graph, config: AutConfig) -> Result<PermGroup> {
    let n = g.num_vertices();
    if n > config.max_vertices {
        return Err(Error::ResourceLimit {
            what: "vertex count",
            actual: n,
            limit: config.max_vertices,
        });
    }
    let view = View::new(g);
    let mut found = Vec::new();
    let mut overflow = false;
    search(
        &view,
        &view,
        view.initial_partition(),
        view.initial_partition(),
        &mut |images| {
            found.push(Permutation::new(images).expect("leaf mapping is a bijection"));
            if found.len() > config.max_order {
                overflow = true;
                return false;
            }
            true
        },
    );
    if overflow {
        return Err(Error::ResourceLimit {
            what: "automorphism group order",
            actual: found.len(),
            limit: config.max_order,
        });
    }
    // the automorphisms of a graph form a group; every leaf was checked
    Ok(PermGroup::from_search(n, found))
}

/// An isomorphism `g → h` as an image array, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.num_vertices() != h.num_vertices()
        || g.num_edges() != h.num_edges()
        || g.loops().len() != h.loops().len()
    {
        return None;
    }
    let (vg, vh) = (View::new(g), View::new(h));
    let mut result = None;
    search(
        &vg,
        &vh,
        vg.initial_partition(),
        vh.initial_partition(),
        &mut |images| {
            result = Some(images);
            false
        },
    );
    result
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// A label-independent fingerprint: isomorphic graphs have equal
/// fingerprints. Used to bucket graphs before pairwise isomorphism tests.
pub fn fingerprint(g: &Graph) -> Vec<u64> {
    let view = View::new(g);
    let mut cells = view.initial_partition();
    let trace = view.refine(&mut cells);
    let mut out = vec![
        g.num_vertices() as u64,
        g.num_edges() as u64,
        g.loops().len() as u64,
    ];
    out.extend(cells.iter().map(|c| c.len() as u64));
    out.extend(trace);
    out
}

struct View {
    n: usize,
    adj: Vec<Vec<usize>>,
    matrix: Vec<bool>,
    looped: Vec<bool>,
}

type Cells = Vec<Vec<usize>>;

impl View {
    fn new(g: &Graph) -> Self {
        let n = g.num_vertices();
        let mut matrix = vec![false; n * n];
        for e in g.edges() {
            matrix[e.u * n + e.v] = true;
            matrix[e.v * n + e.u] = true;
        }
        let mut looped = vec![false; n];
        for &v in g.loops() {
            looped[v] = true;
        }
        View {
            n,
            adj: g.adjacency(),
            matrix,
            looped,
        }
    }

    fn initial_partition(&self) -> Cells {
        let (plain, looped): (Vec<usize>, Vec<usize>) = (0..self.n).partition(|&v| !self.looped[v]);
        [plain, looped]
            .into_iter()
            .filter(|c| !c.is_empty())
            .collect()
    }

    // Splits cells by neighbor counts into every other cell until stable.
    // Returns a trace that determines the result up to relabeling.
    fn refine(&self, cells: &mut Cells) -> Vec<u64> {
        let mut trace = Vec::new();
        let mut cell_of = vec![0usize; self.n];
        'outer: loop {
            for (ci, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = ci;
                }
            }
            let k = cells.len();
            for ci in 0..k {
                if cells[ci].len() == 1 {
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, usize)> = cells[ci]
                    .iter()
                    .map(|&v| {
                        let mut counts = vec![0u32; k];
                        for &w in &self.adj[v] {
                            counts[cell_of[w]] += 1;
                        }
                        (counts, v)
                    })
                    .collect();
                if keyed.iter().all(|(c, _)| *c == keyed[0].0) {
                    continue;
                }
                keyed.sort();
                let mut pieces: Vec<Vec<usize>> = Vec::new();
                let mut prev: Option<&Vec<u32>> = None;
                trace.push(ci as u64);
                for (counts, v) in &keyed {
                    if prev != Some(counts) {
                        pieces.push(Vec::new());
                        trace.push(u64::MAX);
                        trace.extend(counts.iter().map(|&c| c as u64));
                    }
                    pieces.last_mut().unwrap().push(*v);
                    prev = Some(counts);
                }
                trace.extend(pieces.iter().map(|p| p.len() as u64));
                cells.splice(ci..=ci, pieces);
                continue 'outer;
            }
            return trace;
        }
    }
}

fn individualize(cells: &Cells, ci: usize, v: usize) -> Cells {
    let mut out = Vec::with_capacity(cells.len() + 1);
    out.extend(cells[..ci].iter().cloned());
    out.push(vec![v]);
    out.push(cells[ci].iter().copied().filter(|&w| w != v).collect());
    out.extend(cells[ci + 1..].iter().cloned());
    out
}

// Explores mappings from `a` to `b`; `leaf` returns false to stop the search.
// Returns false if the search was stopped.
fn search(
    a: &View,
    b: &View,
    mut pa: Cells,
    mut pb: Cells,
    leaf: &mut dyn FnMut(Vec<usize>) -> bool,
) -> bool {
    let ta = a.refine(&mut pa);
    let tb = b.refine(&mut pb);
    if ta != tb || pa.len() != pb.len() || pa.iter().zip(&pb).any(|(x, y)| x.len() != y.len()) {
        return true;
    }
    match pa.iter().position(|c| c.len() > 1) {
        None => {
            let mut images = vec![0; a.n];
            for (x, y) in pa.iter().zip(&pb) {
                images[x[0]] = y[0];
            }
            if is_isomorphism(a, b, &images) {
                return leaf(images);
            }
            true
        }
        Some(ci) => {
            let v = pa[ci][0];
            let next_a = individualize(&pa, ci, v);
            for &w in &pb[ci] {
                let next_b = individualize(&pb, ci, w);
                if !search(a, b, next_a.clone(), next_b, leaf) {
                    return false;
                }
            }
            true
        }
    }
}

fn is_isomorphism(a: &View, b: &View, images: &[usize]) -> bool {
    let n = a.n;
    (0..n).all(|v| a.looped[v] == b.looped[images[v]])
        && (0..n)
            .all(|u| (u + 1..n).all(|v| a.matrix[u * n + v] == b.matrix[images[u] * n + images[v]]))
}
