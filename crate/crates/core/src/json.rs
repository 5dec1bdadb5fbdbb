//! JSON encodings. Big integers and rationals are decimal strings (`"p/q"`
//! for non-integers) so that values round-trip exactly.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::forge::{BoundReport, ForgeResult};
use crate::graph::Graph;
use crate::outerplanar::OuterplanarReport;
use crate::perm::{PermGroup, Permutation};
use crate::poly::{IntPoly, RatPoly};
use crate::roots::{IsolatingInterval, RealRoot, RootReport};
use crate::Rational;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphWire {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    loops: Vec<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupWire {
    degree: usize,
    generators: Vec<Vec<usize>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyWire {
    coeffs: Vec<String>,
    den: String,
}

fn parse_err(e: impl std::fmt::Display) -> Error {
    Error::Parse(e.to_string())
}

pub fn graph_to_json(g: &Graph) -> Value {
    let wire = GraphWire {
        n: g.num_vertices(),
        edges: g.edges().iter().map(|e| [e.u, e.v]).collect(),
        loops: g.loops().to_vec(),
    };
    serde_json::to_value(wire).expect("plain data serializes")
}

pub fn graph_from_json(v: &Value) -> Result<Graph> {
    let wire: GraphWire = serde_json::from_value(v.clone()).map_err(parse_err)?;
    Graph::from_parts(
        wire.n,
        wire.edges.into_iter().map(|[u, v]| (u, v)),
        wire.loops,
    )
}

pub fn permutation_to_json(p: &Permutation) -> Value {
    json!(p.images())
}

pub fn permutation_from_json(v: &Value) -> Result<Permutation> {
    let images: Vec<usize> = serde_json::from_value(v.clone()).map_err(parse_err)?;
    Permutation::new(images)
}

pub fn group_to_json(group: &PermGroup) -> Value {
    let wire = GroupWire {
        degree: group.degree(),
        generators: group
            .generators()
            .iter()
            .map(|p| p.images().to_vec())
            .collect(),
    };
    serde_json::to_value(wire).expect("plain data serializes")
}

/// The group generated by the listed permutations.
pub fn group_from_json(v: &Value) -> Result<PermGroup> {
    let wire: GroupWire = serde_json::from_value(v.clone()).map_err(parse_err)?;
    let gens = wire
        .generators
        .into_iter()
        .map(Permutation::new)
        .collect::<Result<Vec<_>>>()?;
    PermGroup::close(wire.degree, &gens)
}

pub fn int_poly_to_json(p: &IntPoly) -> Value {
    rat_poly_to_json(&RatPoly::from(p.clone()))
}

pub fn rat_poly_to_json(p: &RatPoly) -> Value {
    let wire = PolyWire {
        coeffs: p
            .numerator()
            .coeffs()
            .iter()
            .map(BigInt::to_string)
            .collect(),
        den: p.denominator().to_string(),
    };
    serde_json::to_value(wire).expect("plain data serializes")
}

pub fn rat_poly_from_json(v: &Value) -> Result<RatPoly> {
    let wire: PolyWire = serde_json::from_value(v.clone()).map_err(parse_err)?;
    let coeffs = wire
        .coeffs
        .iter()
        .map(|c| BigInt::from_str(c).map_err(parse_err))
        .collect::<Result<Vec<_>>>()?;
    let den = BigInt::from_str(&wire.den).map_err(parse_err)?;
    if den == BigInt::from(0) {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(RatPoly::new(IntPoly::new(coeffs), den))
}

pub fn rational_to_json(x: &Rational) -> Value {
    Value::String(x.to_string())
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

pub fn interval_to_json(iv: &IsolatingInterval) -> Value {
    json!([iv.lo.to_string(), iv.hi.to_string()])
}

pub fn real_root_to_json(r: &RealRoot) -> Value {
    match r {
        RealRoot::Rational(x) => json!({ "exact": x.to_string() }),
        RealRoot::Irrational { interval, .. } => json!({ "interval": interval_to_json(interval) }),
    }
}

pub fn root_report_to_json(r: &RootReport) -> Value {
    json!({
        "exact": r.exact_rational_roots().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "intervals": r.intervals().iter().map(interval_to_json).collect::<Vec<_>>(),
    })
}

pub fn bound_report_to_json(b: &BoundReport) -> Value {
    json!({
        "chrom_max_root": real_root_to_json(&b.chrom_max_root),
        "op": rat_poly_to_json(&b.op),
        "op_max_root": b.op_max_root.as_ref().map(real_root_to_json),
        "bound_holds": b.holds,
    })
}

pub fn forge_result_to_json(r: &ForgeResult) -> Value {
    json!({
        "x0": r.x0.to_string(),
        "n": r.n,
        "s": r.s,
        "forged": graph_to_json(&r.forged),
        "forged_group": group_to_json(&r.forged_group),
        "op": rat_poly_to_json(&r.op),
        "op_value_at_x0": r.op_value_at_x0.to_string(),
        "op_root_interval": interval_to_json(&r.op_root_interval),
        "chrom_max_root": real_root_to_json(&r.chrom_max_root),
        "trajectory": r.trajectory.iter().map(|(s, v)| json!([s, v.to_string()])).collect::<Vec<_>>(),
    })
}

pub fn outerplanar_report_to_json(r: &OuterplanarReport) -> Value {
    json!({
        "graph_id": r.graph_id,
        "graph": graph_to_json(&r.graph),
        "has_odd_cycle": r.has_odd_cycle,
        "chrom_roots": root_report_to_json(&r.chrom_roots),
        "automorphism_order": r.automorphism_order,
        "subgroups": r.subgroup_results.iter().map(|v| json!({
            "order": v.order,
            "generators": v.generators,
            "bound_holds": v.bound_holds,
        })).collect::<Vec<_>>(),
        "quotients_outerplanar_or_looped": r.quotients_outerplanar_or_looped,
    })
}
