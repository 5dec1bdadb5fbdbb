mod common;

use num_bigint::BigInt;
use orbchrom::automorphism::automorphism_group;
use orbchrom::enumerate::connected_graphs;
use orbchrom::forge::{
    check_problem1, check_reduction_hypothesis, find_premise, forge, singleton_partition,
};
use orbchrom::graph::Graph;
use orbchrom::perm::{subgroups, PermGroup, Permutation};
use orbchrom::poly::{chromatic, IntPoly};
use orbchrom::{Error, Rational};

fn x_minus_one_pow(e: usize) -> IntPoly {
    IntPoly::x_minus(1).pow(e)
}

#[test]
fn pair_partition_of_the_twelve_cycle() {
    let c12 = Graph::cycle(12).unwrap();
    let r = |k: usize| Permutation::rotation(12, k);
    let group = PermGroup::cyclic(&r(3));
    // identity pairs with r^3 and r^6 with r^9: each pair joins an even and
    // an odd quotient cycle, so the (x - 1) terms cancel
    let partition = vec![vec![r(0), r(3)], vec![r(6), r(9)]];
    let report = check_reduction_hypothesis(&c12, &group, &partition).unwrap();
    assert_eq!(
        report.blocks[0].sum,
        x_minus_one_pow(12) + x_minus_one_pow(3)
    );
    assert_eq!(
        report.blocks[1].sum,
        x_minus_one_pow(6) + x_minus_one_pow(3)
    );
    assert!(report.blocks.iter().all(|b| b.bounded == Some(true)));
    assert!(report.hypothesis_holds);
    assert!(report.conclusion.unwrap().holds);
}

#[test]
fn singleton_partition_of_the_pentagon() {
    let c5 = Graph::cycle(5).unwrap();
    let d10 = PermGroup::dihedral(5).unwrap();
    let report = check_reduction_hypothesis(&c5, &d10, &singleton_partition(&d10)).unwrap();
    assert_eq!(report.blocks.len(), 10);
    assert!(report.hypothesis_holds);
    // every nontrivial element folds an edge into a loop
    assert_eq!(
        report.blocks.iter().filter(|b| b.bounded.is_none()).count(),
        9
    );
}

#[test]
fn malformed_partitions_are_rejected() {
    let c4 = Graph::cycle(4).unwrap();
    let group = PermGroup::cyclic(&Permutation::rotation(4, 2));
    let e = Permutation::identity(4);
    let r2 = Permutation::rotation(4, 2);
    let r1 = Permutation::rotation(4, 1);
    for partition in [
        vec![vec![e.clone()]],
        vec![vec![e.clone(), r2.clone()], vec![r2.clone()]],
        vec![vec![e.clone(), r2.clone()], vec![]],
        vec![vec![e.clone(), r2.clone(), r1]],
    ] {
        assert!(matches!(
            check_reduction_hypothesis(&c4, &group, &partition),
            Err(Error::InvalidPartition(_))
        ));
    }
}

#[test]
fn trivial_group_leaves_the_chromatic_polynomial() {
    for g in connected_graphs(5, |_| true).into_iter().flatten() {
        let trivial = PermGroup::trivial(g.num_vertices());
        let report = check_problem1(&g, &trivial).unwrap();
        assert!(report.holds);
        assert_eq!(report.op.as_int_poly(), Some(&chromatic(&g)));
        assert!(
            check_reduction_hypothesis(&g, &trivial, &singleton_partition(&trivial))
                .unwrap()
                .hypothesis_holds
        );
    }
}

// Every graph on at most five vertices under every group of automorphisms:
// a passing singleton check forces the bound, and the orbital polynomial
// agrees with the orbit count at small integers.
#[test]
fn singleton_reduction_implies_the_bound() {
    let mut implications = 0;
    for g in connected_graphs(5, |_| true).into_iter().flatten() {
        let aut = automorphism_group(&g).unwrap();
        for h in subgroups(&aut, 5040).unwrap() {
            let report = check_reduction_hypothesis(&g, &h, &singleton_partition(&h)).unwrap();
            let bound = check_problem1(&g, &h).unwrap();
            if report.hypothesis_holds {
                assert!(bound.holds, "{g:?} under {h:?}");
                implications += 1;
            }
            for k in 0..4usize {
                let value = bound.op.eval(&Rational::from_integer(BigInt::from(k)));
                let orbits = common::count_coloring_orbits(&g, &h, k);
                assert_eq!(value, Rational::from_integer(BigInt::from(orbits)));
            }
        }
    }
    assert!(implications > 100);
}

// Wherever a premise exists among small graphs and cyclic groups, a
// successful forge yields a pair that breaks the bound.
#[test]
fn forged_graphs_break_the_bound() {
    let mut forged = 0;
    for g in connected_graphs(6, |_| true).into_iter().flatten() {
        let aut = automorphism_group(&g).unwrap();
        for h in aut.elements().iter().filter(|h| !h.is_identity()) {
            let group = PermGroup::cyclic(h);
            let Some(premise) = find_premise(&g, &group).unwrap() else {
                continue;
            };
            match forge(&premise, 8) {
                Ok(result) => {
                    let report = check_problem1(&result.forged, &result.forged_group).unwrap();
                    assert!(!report.holds);
                    assert!(result.op.eval(&result.x0) < Rational::from_integer(BigInt::from(0)));
                    forged += 1;
                }
                Err(Error::Exhausted { .. }) => {}
                Err(e) => panic!("{e}"),
            }
        }
    }
    assert!(forged > 0);
}
