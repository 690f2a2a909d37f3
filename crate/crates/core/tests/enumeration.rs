mod common;

use std::collections::BTreeSet;

use multicurve::graph::{canonical_form, enumerate, ChargeLattice, MarkedGraph};
use multicurve::rational::qf;

#[test]
fn agrees_with_brute_force_up_to_area_three() {
    let lattice = ChargeLattice::rank_one();
    for beta in 0..=3i64 {
        for chi in beta - 2..=beta + 1 {
            let lib = enumerate(&lattice, &[beta], chi, &qf(1, 1)).unwrap();
            let lib_labels: BTreeSet<_> = lib.graphs.keys().cloned().collect();
            let (raw, brute) = common::brute_force_labels(beta, chi);
            assert_eq!(raw, brute.len(), "brute force dedupe disagrees with canonical form");
            assert_eq!(lib_labels, brute, "beta={beta} chi={chi}");
            eprintln!("beta={beta} chi={chi}: {}", brute.len());
        }
    }
}

#[test]
fn output_is_duplicate_free() {
    let lattice = ChargeLattice::rank_one();
    let gs = multicurve::graph::enumerate_graphs(&lattice, &[2], 1, &qf(1, 1)).unwrap();
    let labels: BTreeSet<_> =
        gs.iter().map(|g| canonical_form(&MarkedGraph::bare(g.clone())).unwrap().label).collect();
    assert_eq!(labels.len(), gs.len());
    assert!(gs.iter().all(|g| g.is_stable().unwrap()));
}

#[test]
fn single_vertex_at_area_one() {
    let (_, labels) = common::brute_force_labels(1, 1);
    assert_eq!(labels.len(), 1);
}
