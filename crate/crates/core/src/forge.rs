//! Constructing graphs whose orbital chromatic polynomial has a real root
//! above every real chromatic root, and checking the root bound itself.
//!
//! Start from a graph `Γ`, a group `G ≤ Aut(Γ)` with a unique element `g`
//! whose quotient has the fewest vertices, and a non-integer `x0` above
//! every chromatic root of `Γ` where `P_{Γ/g}(x0) < 0`. Hanging a copy of
//! `H_{n,s}` from every vertex with `n = ⌊x0⌋` multiplies the contribution
//! of each `h` by `(P_H(x0)/x0)^{|V(Γ/h)|}`, a power of a number in `(0, 1)`.
//! For `s` large enough the term of `g` dominates and the orbital chromatic
//! polynomial is negative at `x0`, while the chromatic roots stay at most
//! `n`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::{self, PermGroup, Permutation};
use crate::poly::{chromatic, clique_star_reduced, orbital_chromatic, IntPoly, RatPoly};
use crate::roots::{
    self, count_roots_above, has_root_above, isolate_real_roots, max_real_root, IsolatingInterval,
    RealRoot,
};
use crate::Rational;

pub const DEFAULT_S_MAX: usize = 64;

/// Hypotheses for the construction. Build with [`ForgePremise::new`], which
/// checks them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForgePremise {
    base: Graph,
    group: PermGroup,
    special: Permutation,
    x0: Rational,
}

impl ForgePremise {
    pub fn new(base: Graph, group: PermGroup, special: Permutation, x0: Rational) -> Result<Self> {
        let premise = ForgePremise {
            base,
            group,
            special,
            x0,
        };
        premise.validate()?;
        Ok(premise)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn special(&self) -> &Permutation {
        &self.special
    }

    pub fn x0(&self) -> &Rational {
        &self.x0
    }

    fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Premise(msg));
        if self.base.has_loops() {
            return Err(Error::LoopsNotAllowed("forge"));
        }
        perm::check_automorphisms(&self.base, &self.group)?;
        if self.group.order() < 2 {
            return fail("the group must have at least two elements".into());
        }
        if !self.group.contains(&self.special) {
            return fail("the special element is not in the group".into());
        }
        let size = self.special.num_orbits();
        if let Some(h) = self
            .group
            .elements()
            .iter()
            .find(|h| *h != &self.special && h.num_orbits() <= size)
        {
            return fail(format!(
                "quotient by {h:?} has {} vertices, not more than the {size} of the special quotient",
                h.num_orbits()
            ));
        }
        if self.x0.is_integer() {
            return fail(format!("x0 = {} is an integer", self.x0));
        }
        if self.x0 < Rational::one() {
            return fail(format!("x0 = {} is below 1", self.x0));
        }
        let p = chromatic(&self.base);
        if p.sign_at(&self.x0) == 0 || has_root_above(&p, &self.x0)? {
            return fail(format!(
                "x0 = {} is not above every chromatic root",
                self.x0
            ));
        }
        let q = chromatic(&perm::quotient_unchecked(&self.base, &self.special));
        if q.sign_at(&self.x0) >= 0 {
            return fail(format!(
                "the special quotient's chromatic polynomial is not negative at x0 = {}",
                self.x0
            ));
        }
        Ok(())
    }
}

/// Searches for a premise for `(g, group)`. Returns `None` when the unique
/// smallest quotient does not exist or its chromatic polynomial is never
/// negative above the largest chromatic root of `g`.
///
/// Among the negative regions, ascending, `x0` is the half-integer nearest
/// the region's midpoint if one lies inside, else the midpoint itself.
pub fn find_premise(g: &Graph, group: &PermGroup) -> Result<Option<ForgePremise>> {
    if g.has_loops() {
        return Err(Error::LoopsNotAllowed("find_premise"));
    }
    perm::check_automorphisms(g, group)?;
    if group.order() < 2 {
        return Ok(None);
    }
    let sizes: Vec<usize> = group
        .elements()
        .iter()
        .map(Permutation::num_orbits)
        .collect();
    let min = *sizes.iter().min().unwrap();
    if sizes.iter().filter(|&&s| s == min).count() > 1 {
        return Ok(None);
    }
    let special = group.elements()[sizes.iter().position(|&s| s == min).unwrap()].clone();

    let p = chromatic(g);
    let r = max_real_root(&p)?.expect("a nonempty loop-free graph has the root 0");
    let q = chromatic(&perm::quotient_unchecked(g, &special));
    if q.is_zero() {
        return Ok(None);
    }
    let q_roots = isolate_real_roots(&q, &roots::default_width())?;

    // consecutive roots of q bound the regions where its sign is constant
    let mut bounds: Vec<(Rational, Rational)> = Vec::new();
    let mut lo = r.upper().clone();
    for root in &q_roots.roots {
        let below = match root {
            RealRoot::Rational(x) => x.clone(),
            RealRoot::Irrational { interval, .. } => interval.lo.clone(),
        };
        if below > lo {
            bounds.push((lo.clone(), below));
        }
        if root.upper() > &lo {
            lo = root.upper().clone();
        }
    }
    for (a, b) in bounds {
        let x0 = region_point(&a, &b);
        if q.sign_at(&x0) >= 0 {
            continue;
        }
        match ForgePremise::new(g.clone(), group.clone(), special.clone(), x0) {
            Ok(premise) => return Ok(Some(premise)),
            Err(Error::Premise(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

fn region_point(a: &Rational, b: &Rational) -> Rational {
    let two = Rational::from_integer(BigInt::from(2));
    let mid = (a + b) / &two;
    let half = mid.floor() + Rational::new(BigInt::one(), BigInt::from(2));
    if &half > a && &half < b {
        return half;
    }
    if mid.is_integer() {
        // stay off the integers, where the construction has no room
        return (&mid + b) / two;
    }
    mid
}

/// The graph hung from every vertex of the base. Its chromatic polynomial
/// divided by `x` must tend to 0 at `x0` as `s` grows for the construction
/// to succeed.
pub trait Gadget {
    fn graph(&self, n: usize, s: usize) -> Result<Graph>;

    /// The vertex identified with each base vertex.
    fn root(&self) -> usize {
        0
    }

    /// `P_H(x) / x`.
    fn reduced_chromatic(&self, n: usize, s: usize) -> Result<IntPoly> {
        let p = chromatic(&self.graph(n, s)?);
        p.div_exact(&IntPoly::x())
            .ok_or_else(|| Error::invalid("gadget chromatic polynomial is not divisible by x"))
    }
}

/// `H_{n,s} = K_n ∨ N_s`, glued at its first clique vertex.
#[derive(Debug, Clone, Copy, Default)]
pub struct CliqueStar;

impl Gadget for CliqueStar {
    fn graph(&self, n: usize, s: usize) -> Result<Graph> {
        Graph::clique_star(n, s)
    }

    fn reduced_chromatic(&self, n: usize, s: usize) -> Result<IntPoly> {
        Ok(clique_star_reduced(n, s))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForgeResult {
    pub x0: Rational,
    pub n: usize,
    pub s: usize,
    pub forged: Graph,
    pub forged_group: PermGroup,
    pub op: RatPoly,
    pub op_value_at_x0: Rational,
    pub op_root_interval: IsolatingInterval,
    pub chrom_max_root: RealRoot,
    /// `(s, OP(x0))` for every `s` tried, from the closed form.
    pub trajectory: Vec<(usize, Rational)>,
}

pub fn forge(premise: &ForgePremise, s_max: usize) -> Result<ForgeResult> {
    forge_with(premise, s_max, &CliqueStar)
}

pub fn forge_with(
    premise: &ForgePremise,
    s_max: usize,
    gadget: &dyn Gadget,
) -> Result<ForgeResult> {
    premise.validate()?;
    if s_max == 0 {
        return Err(Error::invalid("s_max must be at least 1"));
    }
    let x0 = &premise.x0;
    let n = x0
        .floor()
        .to_integer()
        .try_into()
        .map_err(|_| Error::invalid("x0 too large"))?;

    // P_{Γ/h}(x0) and |V(Γ/h)| for every h, shared between elements with equal orbits
    let mut cache: HashMap<Vec<usize>, Rational> = HashMap::new();
    let terms: Vec<(usize, Rational)> = premise
        .group
        .elements()
        .iter()
        .map(|h| {
            let value = cache
                .entry(h.orbit_labels())
                .or_insert_with(|| chromatic(&perm::quotient_unchecked(&premise.base, h)).eval(x0))
                .clone();
            (h.num_orbits(), value)
        })
        .collect();
    let order = Rational::from_integer(BigInt::from(premise.group.order()));

    let mut trajectory = Vec::new();
    let mut found = None;
    for s in 1..=s_max {
        let t = gadget.reduced_chromatic(n, s)?.eval(x0);
        let total: Rational = terms
            .iter()
            .map(|(v, val)| num_traits::pow(t.clone(), *v) * val)
            .sum();
        let value = total / &order;
        let negative = value.is_negative();
        trajectory.push((s, value));
        if negative {
            found = Some(s);
            break;
        }
    }
    let Some(s) = found else {
        return Err(Error::Exhausted {
            s_max,
            trajectory: trajectory
                .into_iter()
                .map(|(s, v)| (s, v.to_string()))
                .collect(),
        });
    };
    let closed_form = trajectory.last().unwrap().1.clone();

    let h = gadget.graph(n, s)?;
    let forged = premise.base.attach_at_each_vertex(&h, gadget.root())?;
    let forged_group =
        perm::lift_group_blocks(&premise.group, &premise.base, h.num_vertices() - 1)?;
    let op = orbital_chromatic(&forged, &forged_group)?;
    let op_value_at_x0 = op.eval(x0);
    if op_value_at_x0 != closed_form {
        return Err(Error::Inconsistent(format!(
            "closed form gives OP(x0) = {closed_form}, the explicit construction gives {op_value_at_x0}"
        )));
    }
    let op_root_interval = roots::first_root_above(op.numerator(), x0, &roots::default_width())?
        .ok_or_else(|| {
            Error::Inconsistent("OP is negative at x0 but has no root above it".into())
        })?;

    let chrom_max_root = max_real_root(&chromatic(&forged))?
        .ok_or_else(|| Error::Inconsistent("forged graph has no chromatic root".into()))?;
    if chrom_max_root.cmp_rational(x0).is_ge() {
        return Err(Error::Inconsistent(format!(
            "forged graph has a chromatic root {chrom_max_root} at or above x0"
        )));
    }
    Ok(ForgeResult {
        x0: x0.clone(),
        n,
        s,
        forged,
        forged_group,
        op,
        op_value_at_x0,
        op_root_interval,
        chrom_max_root,
        trajectory,
    })
}

/// Compares the real roots of the orbital chromatic polynomial with the
/// largest chromatic root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub chrom_max_root: RealRoot,
    pub op: RatPoly,
    pub op_max_root: Option<RealRoot>,
    /// No real root of the orbital polynomial exceeds the largest chromatic root.
    pub holds: bool,
}

pub fn check_problem1(g: &Graph, group: &PermGroup) -> Result<BoundReport> {
    if g.has_loops() {
        return Err(Error::LoopsNotAllowed("check_problem1"));
    }
    let op = orbital_chromatic(g, group)?;
    bound_report(&chromatic(g), op)
}

/// The bound verdict for a precomputed chromatic and orbital polynomial.
pub fn bound_report(p: &IntPoly, op: RatPoly) -> Result<BoundReport> {
    let chrom_max_root = max_real_root(p)?.ok_or(Error::ZeroPolynomial)?;
    let op_max_root = max_real_root(op.numerator())?;
    let holds = count_roots_above(&op, &chrom_max_root)? == 0;
    Ok(BoundReport {
        chrom_max_root,
        op,
        op_max_root,
        holds,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCheck {
    pub size: usize,
    pub sum: IntPoly,
    /// `None` when the block sum is the zero polynomial.
    pub bounded: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub chrom_max_root: RealRoot,
    pub blocks: Vec<BlockCheck>,
    /// Every nonzero block sum has its roots bounded by the largest chromatic root.
    pub hypothesis_holds: bool,
    /// The bound for the orbital polynomial, computed when the hypothesis holds.
    pub conclusion: Option<BoundReport>,
}

/// Each element in its own block.
pub fn singleton_partition(group: &PermGroup) -> Vec<Vec<Permutation>> {
    group.elements().iter().map(|h| vec![h.clone()]).collect()
}

/// Checks, block by block, that `Σ_{h∈X} P_{g/h}` has no real root above the
/// largest chromatic root of `g`. If every block passes, the orbital
/// polynomial must satisfy the bound as well; that is verified directly and
/// a violation is reported as an inconsistency.
pub fn check_reduction_hypothesis(
    g: &Graph,
    group: &PermGroup,
    partition: &[Vec<Permutation>],
) -> Result<CheckReport> {
    if g.has_loops() {
        return Err(Error::LoopsNotAllowed("check_reduction_hypothesis"));
    }
    perm::check_automorphisms(g, group)?;
    validate_partition(group, partition)?;
    let p = chromatic(g);
    let chrom_max_root = max_real_root(&p)?.ok_or(Error::ZeroPolynomial)?;

    let mut blocks = Vec::with_capacity(partition.len());
    for block in partition {
        let sum: IntPoly = block
            .iter()
            .map(|h| chromatic(&perm::quotient_unchecked(g, h)))
            .sum();
        let bounded = if sum.is_zero() {
            None
        } else {
            Some(count_roots_above(&sum, &chrom_max_root)? == 0)
        };
        blocks.push(BlockCheck {
            size: block.len(),
            sum,
            bounded,
        });
    }
    let hypothesis_holds = blocks.iter().all(|b| b.bounded != Some(false));
    let conclusion = if hypothesis_holds {
        let report = check_problem1(g, group)?;
        if !report.holds {
            return Err(Error::Inconsistent(
                "every block sum is bounded but the orbital polynomial is not".into(),
            ));
        }
        Some(report)
    } else {
        None
    };
    Ok(CheckReport {
        chrom_max_root,
        blocks,
        hypothesis_holds,
        conclusion,
    })
}

fn validate_partition(group: &PermGroup, partition: &[Vec<Permutation>]) -> Result<()> {
    let mut seen = vec![false; group.order()];
    for block in partition {
        if block.is_empty() {
            return Err(Error::InvalidPartition("empty block".into()));
        }
        for h in block {
            let i = group
                .elements()
                .binary_search(h)
                .map_err(|_| Error::InvalidPartition(format!("{h:?} is not in the group")))?;
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPartition(format!("{h:?} appears twice")));
            }
        }
    }
    if let Some(i) = seen.iter().position(|&s| !s) {
        return Err(Error::InvalidPartition(format!(
            "{:?} is not covered",
            group.elements()[i]
        )));
    }
    Ok(())
}
