//! Chromatic polynomials by deletion–contraction, and the orbit-averaged
//! orbital chromatic polynomial.
//!
//! The recursion factors over connected components and over blocks (a cut
//! vertex contributes a division by `x`), recognizes trees, cycles and
//! cliques in closed form, and otherwise splits on an edge whose endpoints
//! have the largest degree sum. Dense blocks use addition–contraction on a
//! non-edge instead, which terminates at cliques.

use std::collections::HashMap;

use num_bigint::BigInt;

use super::{IntPoly, RatPoly};
use crate::error::Result;
use crate::graph::Graph;
use crate::perm::{self, PermGroup};

/// The chromatic polynomial of `g`; zero when `g` has a loop.
pub fn chromatic(g: &Graph) -> IntPoly {
    if g.has_loops() {
        return IntPoly::zero();
    }
    chrom(g.adjacency())
}

/// `(1/|G|) Σ_{h∈G} P_{g/h}(x)`.
pub fn orbital_chromatic(g: &Graph, group: &PermGroup) -> Result<RatPoly> {
    perm::check_automorphisms(g, group)?;
    // quotients only depend on the orbit partition
    let mut cache: HashMap<Vec<usize>, IntPoly> = HashMap::new();
    let mut total = IntPoly::zero();
    for h in group.elements() {
        let key = h.orbit_labels();
        let p = cache
            .entry(key)
            .or_insert_with(|| chromatic(&perm::quotient_unchecked(g, h)));
        total = &total + p;
    }
    Ok(RatPoly::new(total, BigInt::from(group.order())))
}

/// `(-1)^n (1 - (1-x)^{n+1}) / x · p`: the chromatic polynomial after adding
/// an ear with `n` interior vertices between two adjacent vertices.
pub fn ear_formula(p: &IntPoly, n: usize) -> IntPoly {
    let one_minus_x = IntPoly::from_i64s(&[1, -1]);
    let numer = &IntPoly::one() - &one_minus_x.pow(n + 1);
    let cofactor = numer
        .div_exact(&IntPoly::x())
        .expect("1 - (1-x)^(n+1) vanishes at 0");
    let cofactor = if n % 2 == 1 { -cofactor } else { cofactor };
    &cofactor * p
}

/// `((x-1)⋯(x-n+1)(x-n)^s)^k · p`: the chromatic polynomial of a `k`-vertex
/// base with a copy of `H_{n,s}` hung from every vertex.
pub fn suspension_formula(p_base: &IntPoly, k: usize, n: usize, s: usize) -> IntPoly {
    &clique_star_reduced(n, s).pow(k) * p_base
}

/// `P_{H_{n,s}}(x) / x = (x-1)⋯(x-n+1)(x-n)^s`.
pub(crate) fn clique_star_reduced(n: usize, s: usize) -> IntPoly {
    let head = (1..n as i64).fold(IntPoly::one(), |acc, k| &acc * &IntPoly::x_minus(k));
    &head * &IntPoly::x_minus(n as i64).pow(s)
}

type Adj = Vec<Vec<usize>>;

fn chrom(adj: Adj) -> IntPoly {
    if adj.is_empty() {
        return IntPoly::one();
    }
    let comps = components(&adj);
    if comps.len() == 1 {
        return chrom_connected(adj);
    }
    comps
        .iter()
        .map(|c| chrom_connected(induced(&adj, c)))
        .product()
}

fn chrom_connected(adj: Adj) -> IntPoly {
    let n = adj.len();
    let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if m + 1 == n {
        return &IntPoly::x() * &IntPoly::x_minus(1).pow(n - 1);
    }
    if m == n * (n - 1) / 2 {
        return IntPoly::falling_factorial(n);
    }
    if m == n && adj.iter().all(|a| a.len() == 2) {
        let shifted = IntPoly::x_minus(1);
        let tail = if n.is_multiple_of(2) {
            shifted.clone()
        } else {
            -shifted.clone()
        };
        return &shifted.pow(n) + &tail;
    }
    let blocks = blocks(&adj);
    if blocks.len() > 1 {
        let product: IntPoly = blocks.iter().map(|b| chrom_block(b)).product();
        return divide_by_x_pow(&product, blocks.len() - 1);
    }
    chrom_biconnected(adj, m)
}

fn chrom_block(edges: &[(usize, usize)]) -> IntPoly {
    if edges.len() == 1 {
        return IntPoly::falling_factorial(2);
    }
    let mut verts: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    verts.sort_unstable();
    verts.dedup();
    let index = |v: usize| verts.binary_search(&v).unwrap();
    let mut adj = vec![Vec::new(); verts.len()];
    for &(a, b) in edges {
        let (i, j) = (index(a), index(b));
        adj[i].push(j);
        adj[j].push(i);
    }
    chrom_connected(adj)
}

fn chrom_biconnected(adj: Adj, m: usize) -> IntPoly {
    let n = adj.len();
    let max_edges = n * (n - 1) / 2;
    if 2 * m > max_edges {
        // addition–contraction: P(G) = P(G + uv) + P(G / uv)
        let (u, v) = pick_non_edge(&adj);
        let mut added = adj.clone();
        added[u].push(v);
        added[v].push(u);
        let merged = contract(&adj, u, v);
        return &chrom(added) + &chrom(merged);
    }
    let (u, v) = pick_edge(&adj);
    let mut deleted = adj.clone();
    deleted[u].retain(|&w| w != v);
    deleted[v].retain(|&w| w != u);
    let merged = contract(&adj, u, v);
    &chrom(deleted) - &chrom(merged)
}

fn pick_edge(adj: &Adj) -> (usize, usize) {
    let mut best = (0, 0);
    let mut best_score = None;
    for (u, nbrs) in adj.iter().enumerate() {
        for &v in nbrs.iter().filter(|&&v| v > u) {
            let score = adj[u].len() + adj[v].len();
            if best_score.is_none_or(|b| score > b) {
                best_score = Some(score);
                best = (u, v);
            }
        }
    }
    best
}

fn pick_non_edge(adj: &Adj) -> (usize, usize) {
    let n = adj.len();
    let mut best = (0, 0);
    let mut best_score = None;
    for u in 0..n {
        for v in u + 1..n {
            if adj[u].contains(&v) {
                continue;
            }
            let score = adj[u].len() + adj[v].len();
            if best_score.is_none_or(|b| score > b) {
                best_score = Some(score);
                best = (u, v);
            }
        }
    }
    best
}

// Merges v into u and drops v, shifting later indices down by one.
fn contract(adj: &Adj, u: usize, v: usize) -> Adj {
    let relabel = |w: usize| if w > v { w - 1 } else { w };
    let mut out: Adj = vec![Vec::new(); adj.len() - 1];
    for (w, nbrs) in adj.iter().enumerate() {
        if w == v {
            continue;
        }
        for &x in nbrs {
            let x = if x == v { u } else { x };
            if x != w {
                out[relabel(w)].push(relabel(x));
            }
        }
    }
    for &x in adj[v].iter().filter(|&&x| x != u) {
        out[relabel(u)].push(relabel(x));
    }
    for list in &mut out {
        list.sort_unstable();
        list.dedup();
    }
    out
}

fn components(adj: &Adj) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut comp = Vec::new();
        while let Some(u) = stack.pop() {
            comp.push(u);
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn induced(adj: &Adj, verts: &[usize]) -> Adj {
    verts
        .iter()
        .map(|&v| {
            adj[v]
                .iter()
                .map(|w| verts.binary_search(w).expect("component is closed"))
                .collect()
        })
        .collect()
}

/// Edge sets of the biconnected components, loops ignored.
pub(crate) fn blocks_of(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    blocks(&g.adjacency())
}

/// Edge sets of the biconnected components.
pub(crate) fn blocks(adj: &Adj) -> Vec<Vec<(usize, usize)>> {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (u, parent, ref mut next)) = stack.last_mut() {
            if *next < adj[u].len() {
                let w = adj[u][*next];
                *next += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((u, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, u, 0));
                } else if w != parent && disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[u]);
                    if low[u] >= disc[parent] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (parent, u) {
                                break;
                            }
                        }
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

fn divide_by_x_pow(p: &IntPoly, k: usize) -> IntPoly {
    debug_assert!(p.coeffs().iter().take(k).all(|c| c == &BigInt::from(0)));
    IntPoly::new(p.coeffs().iter().skip(k).cloned().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    // Counts proper colorings with k colors by enumeration.
    fn brute_force(g: &Graph, k: usize) -> u64 {
        if g.has_loops() {
            return 0;
        }
        let n = g.num_vertices();
        let mut colors = vec![0usize; n];
        let mut count = 0;
        if n == 0 {
            return 1;
        }
        if k == 0 {
            return 0;
        }
        loop {
            if g.edges().iter().all(|e| colors[e.u] != colors[e.v]) {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return count;
                }
                colors[i] += 1;
                if colors[i] < k {
                    break;
                }
                colors[i] = 0;
                i += 1;
            }
        }
    }

    fn cycle_closed_form(n: usize) -> IntPoly {
        let s = IntPoly::x_minus(1);
        let tail = if n.is_multiple_of(2) {
            s.clone()
        } else {
            -s.clone()
        };
        &s.pow(n) + &tail
    }

    #[test]
    fn six_cycle() {
        let p = chromatic(&Graph::cycle(6).unwrap());
        assert_eq!(p, cycle_closed_form(6));
        assert_eq!(p, &IntPoly::x_minus(1).pow(6) + &IntPoly::x_minus(1));
    }

    #[test]
    fn cycles_match_closed_form() {
        for n in 3..=10 {
            let c = Graph::cycle(n).unwrap();
            assert_eq!(chromatic(&c), cycle_closed_form(n), "C_{n}");
            // through the general recursion as well: add a pendant and divide it out
            let with_tail =
                Graph::new(n + 1, c.edges().iter().map(|e| (e.u, e.v)).chain([(0, n)])).unwrap();
            assert_eq!(
                chromatic(&with_tail),
                &cycle_closed_form(n) * &IntPoly::x_minus(1)
            );
        }
    }

    #[test]
    fn loops_give_zero() {
        let g = Graph::from_parts(3, [(0, 1), (1, 2)], [1]).unwrap();
        assert!(chromatic(&g).is_zero());
    }

    #[test]
    fn empty_and_edgeless() {
        assert_eq!(chromatic(&Graph::new(0, []).unwrap()), IntPoly::one());
        assert_eq!(chromatic(&Graph::empty(2).unwrap()), IntPoly::x().pow(2));
    }

    #[test]
    fn dense_and_sparse_graphs_match_brute_force() {
        let graphs = [
            Graph::complete(5).unwrap(),
            Graph::clique_star(2, 3).unwrap(),
            Graph::clique_star(3, 2).unwrap(),
            Graph::new(
                6,
                [
                    (0, 1),
                    (1, 2),
                    (2, 0),
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (5, 3),
                    (0, 4),
                ],
            )
            .unwrap(),
            Graph::new(
                6,
                [
                    (0, 1),
                    (0, 2),
                    (0, 3),
                    (1, 2),
                    (1, 3),
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (1, 5),
                    (2, 4),
                ],
            )
            .unwrap(),
            Graph::cycle(5).unwrap().add_ear(0, 1, 2).unwrap(),
        ];
        for g in &graphs {
            let p = chromatic(g);
            for k in 0..=4u64 {
                assert_eq!(
                    p.eval_int(&BigInt::from(k)),
                    BigInt::from(brute_force(g, k as usize)),
                    "{g:?} k={k}"
                );
            }
        }
    }

    #[test]
    fn ear_cofactor_small_cases() {
        assert_eq!(ear_formula(&IntPoly::one(), 1), IntPoly::x_minus(2));
        // sum form: Σ_{i=0}^{n} (-1)^{n-i} (x-1)^i
        for n in 1..6 {
            let sum: IntPoly = (0..=n)
                .map(|i| {
                    let t = IntPoly::x_minus(1).pow(i);
                    if (n - i) % 2 == 1 {
                        -t
                    } else {
                        t
                    }
                })
                .sum();
            assert_eq!(ear_formula(&IntPoly::one(), n), sum);
        }
        let k2 = chromatic(&Graph::complete(2).unwrap());
        assert_eq!(ear_formula(&k2, 1), IntPoly::falling_factorial(3));
    }

    #[test]
    fn suspension_closed_form() {
        let c6 = chromatic(&Graph::cycle(6).unwrap());
        assert_eq!(
            suspension_formula(&c6, 6, 1, 1),
            &IntPoly::x_minus(1).pow(6) * &c6
        );
        assert_eq!(clique_star_reduced(1, 4), IntPoly::x_minus(1).pow(4));
        assert_eq!(
            clique_star_reduced(3, 2),
            &(&IntPoly::x_minus(1) * &IntPoly::x_minus(2)) * &IntPoly::x_minus(3).pow(2)
        );
    }

    #[test]
    fn blocks_of_bowtie_with_tail() {
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (4, 5)]).unwrap();
        let b = blocks(&g.adjacency());
        let mut sizes: Vec<usize> = b.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3, 3]);
    }

    #[test]
    fn contraction_relabels() {
        // path 0-1-2-3, contract (1,2) → path on 3 vertices
        let adj = Graph::path(4).unwrap().adjacency();
        let c = contract(&adj, 1, 2);
        assert_eq!(c, vec![vec![1], vec![0, 2], vec![1]]);
        // contract with u > v
        let c = contract(&adj, 2, 1);
        assert_eq!(c, vec![vec![1], vec![0, 2], vec![1]]);
    }
}
