//! Permutations, explicitly listed permutation groups, subgroup enumeration,
//! and quotient graphs by a single permutation.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A bijection on `0..n`, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::NotABijection(n));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// `v ↦ v + k (mod n)`
    pub fn rotation(n: usize, k: usize) -> Self {
        Permutation {
            images: (0..n).map(|v| (v + k) % n).collect(),
        }
    }

    /// `v ↦ -v (mod n)`, the reflection fixing vertex 0.
    pub fn reflection(n: usize) -> Self {
        Permutation {
            images: (0..n).map(|v| (n - v) % n).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, v: usize) -> usize {
        self.images[v]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&v| self.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, k: usize) -> Permutation {
        (0..k).fold(Permutation::identity(self.degree()), |acc, _| {
            self.compose(&acc)
        })
    }

    /// Cycles (orbits of `⟨self⟩`), each starting at its smallest member,
    /// ordered by that member.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                cyc.push(v);
                v = self.images[v];
            }
            out.push(cyc);
        }
        out
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| acc.lcm(&c.len()))
    }

    /// For every vertex, the index of its orbit, orbits numbered by
    /// smallest member ascending.
    pub fn orbit_labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.images.len()];
        for (i, cyc) in self.cycles().iter().enumerate() {
            for &v in cyc {
                labels[v] = i;
            }
        }
        labels
    }

    pub fn num_orbits(&self) -> usize {
        self.cycles().len()
    }

    pub fn is_automorphism(&self, g: &Graph) -> bool {
        if self.degree() != g.num_vertices() {
            return false;
        }
        g.edges()
            .iter()
            .all(|e| g.has_edge(self.apply(e.u), self.apply(e.v)))
            && g.loops()
                .iter()
                .all(|&v| g.has_edge(self.apply(v), self.apply(v)))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

/// A finite permutation group held as an explicit, sorted element list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Permutation>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PermGroup(degree {}, order {})",
            self.degree,
            self.elements.len()
        )
    }
}

impl PermGroup {
    pub(crate) fn from_search(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        debug_assert!(elements.first().is_some_and(Permutation::is_identity));
        PermGroup { degree, elements }
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            elements: vec![Permutation::identity(degree)],
        }
    }

    /// The smallest group containing `generators`.
    pub fn close(degree: usize, generators: &[Permutation]) -> Result<Self> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
            // re-validate in case the caller built it by hand
            Permutation::new(g.images.clone())?;
        }
        let id = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = g.compose(&x);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort();
        Ok(PermGroup { degree, elements })
    }

    /// Builds a group from a list claimed to be closed; verifies closure
    /// under composition and inverse.
    pub fn from_elements(degree: usize, elements: Vec<Permutation>) -> Result<Self> {
        let mut elements = elements;
        elements.sort();
        elements.dedup();
        let set: HashSet<&Permutation> = elements.iter().collect();
        if !set.contains(&Permutation::identity(degree)) {
            return Err(Error::invalid("group must contain the identity"));
        }
        for a in &elements {
            if a.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: a.degree(),
                });
            }
            if !set.contains(&a.inverse()) {
                return Err(Error::invalid("element list not closed under inverse"));
            }
            for b in &elements {
                if !set.contains(&a.compose(b)) {
                    return Err(Error::invalid("element list not closed under composition"));
                }
            }
        }
        Ok(PermGroup { degree, elements })
    }

    /// `D_{2n}` on the labels of `cycle(n)`: rotation by one and the
    /// reflection fixing vertex 0.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid("dihedral group needs n >= 3"));
        }
        Self::close(
            n,
            &[Permutation::rotation(n, 1), Permutation::reflection(n)],
        )
    }

    pub fn cyclic(generator: &Permutation) -> Self {
        Self::close(generator.degree(), std::slice::from_ref(generator)).expect("valid permutation")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// A small generating set, chosen greedily in element order.
    pub fn generators(&self) -> Vec<Permutation> {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut current = PermGroup::trivial(self.degree);
        for e in &self.elements {
            if current.order() == self.order() {
                break;
            }
            if !current.contains(e) {
                gens.push(e.clone());
                current = PermGroup::close(self.degree, &gens).expect("same degree");
            }
        }
        gens
    }
}

/// Errors unless every element of `group` is an automorphism of `g`.
pub fn check_automorphisms(g: &Graph, group: &PermGroup) -> Result<()> {
    if group.degree() != g.num_vertices() {
        return Err(Error::DegreeMismatch {
            expected: g.num_vertices(),
            found: group.degree(),
        });
    }
    match group.elements().iter().find(|h| !h.is_automorphism(g)) {
        Some(bad) => Err(Error::NotAnAutomorphism(bad.images().to_vec())),
        None => Ok(()),
    }
}

/// `Γ/p`: one vertex per orbit of `⟨p⟩` (numbered by smallest member),
/// orbits adjacent when some members are, and a loop on any orbit that
/// contains an edge.
pub fn quotient(g: &Graph, p: &Permutation) -> Result<Graph> {
    if p.degree() != g.num_vertices() {
        return Err(Error::DegreeMismatch {
            expected: g.num_vertices(),
            found: p.degree(),
        });
    }
    if !p.is_automorphism(g) {
        return Err(Error::NotAnAutomorphism(p.images().to_vec()));
    }
    Ok(quotient_unchecked(g, p))
}

pub(crate) fn quotient_unchecked(g: &Graph, p: &Permutation) -> Graph {
    let labels = p.orbit_labels();
    let k = labels.iter().max().map_or(0, |m| m + 1);
    let edges = g.edges().iter().map(|e| (labels[e.u], labels[e.v]));
    let loops = g.loops().iter().map(|&v| labels[v]);
    Graph::from_parts(k, edges, loops).expect("orbit labels in range")
}

/// Lifts `group ≤ Aut(base)` to the suspension `base^{(n,s)}`: originals move
/// as before and copy `i` moves rigidly onto copy `h(i)`.
pub fn lift_group(group: &PermGroup, base: &Graph, n: usize, s: usize) -> Result<PermGroup> {
    if n == 0 || s == 0 {
        return Err(Error::invalid("suspension parameters must be positive"));
    }
    lift_group_blocks(group, base, n + s - 1)
}

/// Lift for a suspension whose attached copies have `block` non-root vertices.
pub fn lift_group_blocks(group: &PermGroup, base: &Graph, block: usize) -> Result<PermGroup> {
    if base.has_loops() {
        return Err(Error::LoopsNotAllowed("lift_group"));
    }
    check_automorphisms(base, group)?;
    let k = base.num_vertices();
    let lifted: Vec<Permutation> = group
        .elements()
        .iter()
        .map(|h| {
            let mut images: Vec<usize> = h.images().to_vec();
            for i in 0..k {
                let to = h.apply(i);
                images.extend((0..block).map(|t| k + to * block + t));
            }
            Permutation { images }
        })
        .collect();
    let mut elements = lifted;
    elements.sort();
    Ok(PermGroup {
        degree: k + k * block,
        elements,
    })
}

/// All subgroups of `group`, deduplicated, ordered by (order, elements).
///
/// Subgroups are grown up to conjugacy: only one representative per class is
/// extended, by one element per right coset (`⟨H, g⟩` depends only on `Hg`),
/// and every newly met class is recorded together with all its conjugates.
/// Any chain `1 < ⟨g1⟩ < ⟨g1, g2⟩ < … < K` conjugates onto a chain starting
/// at a class representative, so every subgroup is reached.
pub fn subgroups(group: &PermGroup, max_order: usize) -> Result<Vec<PermGroup>> {
    let order = group.order();
    if order > max_order {
        return Err(Error::ResourceLimit {
            what: "group order",
            actual: order,
            limit: max_order,
        });
    }
    let table = MulTable::new(group);
    let words = order.div_ceil(64);
    let identity = table.identity;

    struct Class {
        members: Vec<usize>,
        gens: Vec<usize>,
    }
    let mut known: HashSet<Vec<u64>> = HashSet::new();
    let mut all: Vec<Vec<usize>> = Vec::new();
    let mut classes = vec![Class {
        members: vec![identity],
        gens: Vec::new(),
    }];
    for conj in table.conjugates(&[identity], words) {
        known.insert(conj.0);
        all.push(conj.1);
    }

    let mut cursor = 0;
    while cursor < classes.len() {
        let members = classes[cursor].members.clone();
        let gens = classes[cursor].gens.clone();
        cursor += 1;
        if members.len() == order {
            continue;
        }
        let mut covered = vec![0u64; words];
        for &m in &members {
            set_bit(&mut covered, m);
        }
        for g in 0..order {
            if get_bit(&covered, g) {
                continue;
            }
            for &h in &members {
                set_bit(&mut covered, table.mul(h, g));
            }
            let mut new_gens = gens.clone();
            new_gens.push(g);
            let (bits, list) = table.closure(&members, &new_gens, words);
            if known.contains(&bits) {
                continue;
            }
            for conj in table.conjugates(&list, words) {
                if known.insert(conj.0) {
                    all.push(conj.1);
                }
            }
            classes.push(Class {
                members: list,
                gens: new_gens,
            });
        }
    }

    let mut out: Vec<PermGroup> = all
        .into_iter()
        .map(|members| {
            let mut elements: Vec<Permutation> =
                members.iter().map(|&i| group.elements[i].clone()).collect();
            elements.sort();
            PermGroup {
                degree: group.degree,
                elements,
            }
        })
        .collect();
    out.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.elements.cmp(&b.elements))
    });
    Ok(out)
}

fn set_bit(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn get_bit(bits: &[u64], i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

struct MulTable {
    n: usize,
    table: Vec<u32>,
    inverse: Vec<usize>,
    identity: usize,
}

impl MulTable {
    fn new(group: &PermGroup) -> Self {
        let elems = group.elements();
        let n = elems.len();
        let lookup: HashMap<&Permutation, usize> =
            elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut table = vec![0u32; n * n];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                table[i * n + j] = lookup[&a.compose(b)] as u32;
            }
        }
        let identity = lookup[&Permutation::identity(group.degree())];
        let inverse = elems.iter().map(|e| lookup[&e.inverse()]).collect();
        MulTable {
            n,
            table,
            inverse,
            identity,
        }
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    // Closure of `start ∪ gens`, where `start` is already a subgroup. A
    // subgroup with more than half the elements is the whole group.
    fn closure(&self, start: &[usize], gens: &[usize], words: usize) -> (Vec<u64>, Vec<usize>) {
        let mut bits = vec![0u64; words];
        let mut list = Vec::with_capacity(start.len() * 2);
        for &s in start {
            set_bit(&mut bits, s);
            list.push(s);
        }
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            i += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !get_bit(&bits, y) {
                    set_bit(&mut bits, y);
                    list.push(y);
                }
            }
            if 2 * list.len() > self.n {
                return self.whole(words);
            }
        }
        (bits, list)
    }

    fn whole(&self, words: usize) -> (Vec<u64>, Vec<usize>) {
        let mut bits = vec![0u64; words];
        for i in 0..self.n {
            set_bit(&mut bits, i);
        }
        (bits, (0..self.n).collect())
    }

    // Distinct conjugates `x⁻¹ H x` of the subgroup `members`.
    fn conjugates(&self, members: &[usize], words: usize) -> Vec<(Vec<u64>, Vec<usize>)> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for x in 0..self.n {
            let xi = self.inverse[x];
            let mut bits = vec![0u64; words];
            let list: Vec<usize> = members
                .iter()
                .map(|&h| self.mul(self.mul(xi, h), x))
                .collect();
            for &y in &list {
                set_bit(&mut bits, y);
            }
            if seen.insert(bits.clone()) {
                out.push((bits, list));
            }
        }
        out
    }
}
