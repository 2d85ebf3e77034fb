mod common;

use diamond_core::group::group_order;
use diamond_core::{
    all_generators, boolean_lattice, count_paths, ideal_lattice, pascal_interval, young_interval, FinitePoset,
    GradedGraph, Limits, PathTable, YoungDiagram,
};
use num_bigint::BigUint;

use common::{closure_size, partitions, syt_count, transpose};

fn order(g: &GradedGraph) -> BigUint {
    let pt = PathTable::enumerate(g, &Limits::default()).unwrap();
    let gens = all_generators(g, &pt).unwrap();
    group_order(&gens, pt.len()).unwrap()
}

fn young(parts: &[u32]) -> GradedGraph {
    young_interval(
        &YoungDiagram::new(parts.to_vec()).unwrap(),
        &YoungDiagram::empty(),
        &Limits::default(),
    )
    .unwrap()
}

#[test]
fn antichain_ideals_are_boolean_lattices() {
    for m in 0..=6 {
        let ideals = ideal_lattice(&FinitePoset::antichain(m), &Limits::default()).unwrap();
        assert_eq!(ideals, boolean_lattice(m as u32, &Limits::default()).unwrap());
    }
}

#[test]
fn chain_ideals_are_a_single_path() {
    let g = ideal_lattice(&FinitePoset::chain(5), &Limits::default()).unwrap();
    assert_eq!(count_paths(&g), BigUint::from(1u32));
    assert_eq!(g.vertex_count(), 6);
}

#[test]
fn tableau_counts_match_branching_rule() {
    for n in 1..=8 {
        for parts in partitions(n) {
            let g = young(&parts);
            assert!(g.is_diamond());
            assert_eq!(count_paths(&g), syt_count(&parts), "{parts:?}");
        }
    }
}

#[test]
fn hooks_are_pascal_intervals() {
    for n in 2..=7u32 {
        for k in 1..n - 1 {
            let mut parts = vec![n - k];
            parts.extend(std::iter::repeat_n(1, k as usize));
            let hook = young(&parts);
            let pascal = pascal_interval(&[n - k - 1, k], &Limits::default()).unwrap();
            assert_eq!(count_paths(&hook), count_paths(&pascal));
            assert_eq!(hook.level_sizes()[1..], pascal.level_sizes()[..]);
            assert_eq!(order(&hook), order(&pascal));
        }
    }
}

#[test]
fn transposed_diagrams_have_equal_orders() {
    for n in 2..=7 {
        for parts in partitions(n) {
            let t = transpose(&parts);
            if t > parts {
                assert_eq!(order(&young(&parts)), order(&young(&t)), "{parts:?}");
            }
        }
    }
}

#[test]
fn json_round_trip_for_every_family() {
    let lim = Limits::default();
    let graphs = [
        boolean_lattice(3, &lim).unwrap(),
        pascal_interval(&[2, 1, 1], &lim).unwrap(),
        young(&[3, 2, 1]),
        young_interval(
            &YoungDiagram::parse("4,3,1").unwrap(),
            &YoungDiagram::parse("2,1").unwrap(),
            &lim,
        )
        .unwrap(),
        ideal_lattice(&FinitePoset::parse("a<c,b<c,b<d").unwrap(), &lim).unwrap(),
    ];
    for g in graphs {
        let back = GradedGraph::from_json(&g.to_json()).unwrap();
        assert_eq!(back, g);
        assert_eq!(count_paths(&back), count_paths(&g));
    }
}

#[test]
fn skew_intervals_match_brute_force() {
    let lim = Limits::default();
    for (outer, inner) in [("3,2", "1"), ("3,3", "2"), ("4,2,1", "2,1"), ("3,2,1", "1,1")] {
        let g = young_interval(
            &YoungDiagram::parse(outer).unwrap(),
            &YoungDiagram::parse(inner).unwrap(),
            &lim,
        )
        .unwrap();
        let pt = PathTable::enumerate(&g, &lim).unwrap();
        let gens = all_generators(&g, &pt).unwrap();
        let raw: Vec<Vec<u32>> = gens.iter().map(|p| p.images().to_vec()).collect();
        if pt.len() <= 9 {
            assert_eq!(
                group_order(&gens, pt.len()).unwrap(),
                BigUint::from(closure_size(&raw, pt.len())),
                "{outer}/{inner}"
            );
        }
    }
}

#[test]
fn budgets_are_enforced() {
    let tight = Limits {
        vertices: 100,
        paths: 50,
        ..Limits::default()
    };
    assert!(boolean_lattice(7, &tight).is_err());
    let g = boolean_lattice(5, &tight).unwrap();
    assert!(PathTable::enumerate(&g, &tight).is_err());
}
