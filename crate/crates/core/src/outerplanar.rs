//! Outerplanar corpora and the root-bound check over all their subgroups.
//!
//! The chromatic roots of a connected outerplanar graph are `{0, 1, 2}` when
//! it has an odd cycle and `{0, 1}` otherwise (just `{0}` for a single
//! vertex), and for graphs with an odd cycle no orbital chromatic root
//! exceeds 2 under any group. Both facts are checked exactly here.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::automorphism::{automorphism_group_with, AutConfig};
use crate::enumerate::connected_graphs;
use crate::error::{Error, Result};
use crate::forge::bound_report;
use crate::graph::Graph;
use crate::perm::{self, subgroups, PermGroup};
use crate::planarity::is_outerplanar;
use crate::poly::{chromatic, IntPoly, RatPoly};
use crate::roots::{default_width, isolate_real_roots, RootReport};
use crate::Rational;

pub const MAX_CORPUS_VERTICES: usize = 9;

/// All connected outerplanar graphs on at most `max_vertices` vertices, one
/// per isomorphism class, by vertex count and then generation order.
pub fn enumerate_outerplanar(max_vertices: usize) -> Result<Vec<Graph>> {
    if max_vertices > MAX_CORPUS_VERTICES {
        return Err(Error::ResourceLimit {
            what: "outerplanar corpus vertex count",
            actual: max_vertices,
            limit: MAX_CORPUS_VERTICES,
        });
    }
    let keep = |g: &Graph| is_outerplanar(g).unwrap_or(false);
    Ok(connected_graphs(max_vertices, keep)
        .into_iter()
        .flatten()
        .collect())
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub aut: AutConfig,
    /// Largest subgroup order enumerated; `Aut(K_{1,7})` has order 5040.
    pub max_subgroup_order: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            aut: AutConfig::default(),
            max_subgroup_order: 5040,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupVerdict {
    pub order: usize,
    pub generators: Vec<Vec<usize>>,
    pub bound_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterplanarReport {
    pub graph_id: Option<usize>,
    pub graph: Graph,
    pub has_odd_cycle: bool,
    pub chrom_roots: RootReport,
    pub automorphism_order: usize,
    pub subgroup_results: Vec<SubgroupVerdict>,
    /// Every quotient by an automorphism is outerplanar or has a loop.
    pub quotients_outerplanar_or_looped: bool,
}

impl OuterplanarReport {
    pub fn all_bounds_hold(&self) -> bool {
        self.subgroup_results.iter().all(|v| v.bound_holds)
    }
}

pub fn verify_theorem2(g: &Graph) -> Result<OuterplanarReport> {
    verify_theorem2_with(g, None, VerifyConfig::default())
}

/// Errors when the chromatic root set is not the expected one, or when a
/// graph with an odd cycle has a subgroup violating the bound.
pub fn verify_theorem2_with(
    g: &Graph,
    graph_id: Option<usize>,
    config: VerifyConfig,
) -> Result<OuterplanarReport> {
    if !is_outerplanar(g)? {
        return Err(Error::invalid("graph is not outerplanar"));
    }
    let p = chromatic(g);
    let chrom_roots = isolate_real_roots(&p, &default_width())?;
    let has_odd_cycle = g.odd_cycle().is_some();
    let expected: &[i64] = match (has_odd_cycle, g.num_edges()) {
        (true, _) => &[0, 1, 2],
        (false, 0) => &[0],
        (false, _) => &[0, 1],
    };
    let expected: Vec<Rational> = expected
        .iter()
        .map(|&k| Rational::from_integer(k.into()))
        .collect();
    if !chrom_roots.intervals().is_empty() || chrom_roots.exact_rational_roots() != expected {
        return Err(Error::Inconsistent(format!(
            "chromatic roots of {g:?} are {:?}, expected {expected:?}",
            chrom_roots.roots
        )));
    }

    let aut = automorphism_group_with(g, config.aut)?;
    // P_{g/h} for every automorphism, keyed by orbit partition
    let mut cache: HashMap<Vec<usize>, IntPoly> = HashMap::new();
    let mut quotients_ok = true;
    let mut by_element: Vec<IntPoly> = Vec::with_capacity(aut.order());
    for h in aut.elements() {
        let key = h.orbit_labels();
        if !cache.contains_key(&key) {
            let quo = perm::quotient_unchecked(g, h);
            if !quo.has_loops() && !is_outerplanar(&quo)? {
                quotients_ok = false;
            }
            cache.insert(key.clone(), chromatic(&quo));
        }
        by_element.push(cache[&key].clone());
    }

    let mut subgroup_results = Vec::new();
    for sub in subgroups(&aut, config.max_subgroup_order)? {
        let total: IntPoly = sub
            .elements()
            .iter()
            .map(|h| &by_element[aut.elements().binary_search(h).expect("subgroup element")])
            .fold(IntPoly::zero(), |acc, q| &acc + q);
        let op = RatPoly::new(total, BigInt::from(sub.order()));
        let report = bound_report(&p, op)?;
        if has_odd_cycle && !report.holds {
            return Err(Error::Inconsistent(format!(
                "orbital chromatic root above 2 for {g:?} under a subgroup of order {}",
                sub.order()
            )));
        }
        subgroup_results.push(SubgroupVerdict {
            order: sub.order(),
            generators: generator_images(&sub),
            bound_holds: report.holds,
        });
    }
    Ok(OuterplanarReport {
        graph_id,
        graph: g.clone(),
        has_odd_cycle,
        chrom_roots,
        automorphism_order: aut.order(),
        subgroup_results,
        quotients_outerplanar_or_looped: quotients_ok,
    })
}

fn generator_images(group: &PermGroup) -> Vec<Vec<usize>> {
    group
        .generators()
        .iter()
        .map(|p| p.images().to_vec())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_corpus() {
        let corpus = enumerate_outerplanar(3).unwrap();
        assert_eq!(corpus.len(), 4);
        assert!(enumerate_outerplanar(10).is_err());
        let sizes: Vec<usize> = (1..=6)
            .map(|n| enumerate_outerplanar(n).unwrap().len())
            .collect();
        // cumulative counts of connected outerplanar graphs
        assert_eq!(sizes, vec![1, 2, 4, 9, 22, 68]);
    }

    #[test]
    fn cycles_and_pendants() {
        let c5 = verify_theorem2(&Graph::cycle(5).unwrap()).unwrap();
        assert!(c5.has_odd_cycle);
        assert_eq!(c5.subgroup_results.len(), 8);
        assert!(c5.all_bounds_hold());
        let c6 = verify_theorem2(&Graph::cycle(6).unwrap()).unwrap();
        assert!(!c6.has_odd_cycle);
        let pendant = Graph::new(4, [(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
        let rep = verify_theorem2(&pendant).unwrap();
        assert_eq!(rep.automorphism_order, 2);
        assert_eq!(rep.subgroup_results.len(), 2);
        assert!(rep.all_bounds_hold());
        assert!(verify_theorem2(&Graph::complete(4).unwrap()).is_err());
    }
}
