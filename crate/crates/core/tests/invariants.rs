//! Randomized invariants over seeded inputs.

use std::collections::BTreeMap;

use multicurve::complex::synthetic::{random_marked_graph, random_second_chain};
use multicurve::fixtures::random_loop_pair;
use multicurve::geometry::linking_number;
use multicurve::graph::canonical::relabel;
use multicurve::graph::{automorphism_group, canonical_form};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn config() -> ProptestConfig {
    ProptestConfig { cases: 48, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn contraction_keeps_chi_and_charge(seed in any::<u64>(), k in 1usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_marked_graph(&mut rng, k, 0);
        let g = &m.graph;
        for e in g.edges() {
            let c = g.contract_edge(e).unwrap();
            prop_assert_eq!(c.euler_characteristic().unwrap(), g.euler_characteristic().unwrap());
            prop_assert_eq!(c.total_charge(1), g.total_charge(1));
            prop_assert_eq!(c.edge_count() + 1, g.edge_count());
        }
    }

    #[test]
    fn face_maps_commute(seed in any::<u64>(), k in 1usize..=4, l in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_marked_graph(&mut rng, k, l);
        let len = m.filtration.len();
        for j in 0..len {
            for i in 0..j {
                let a = m.remove_face(j).unwrap().remove_face(i).unwrap();
                let b = m.remove_face(i).unwrap().remove_face(j - 1).unwrap();
                prop_assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn automorphisms_form_a_group(seed in any::<u64>(), k in 1usize..=3, l in 0usize..=2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_marked_graph(&mut rng, k, l);
        let group = automorphism_group(&m).unwrap();
        prop_assert!(group.iter().any(|g| g.is_identity()));
        for a in &group {
            prop_assert!(group.contains(&a.inverse()));
            for b in &group {
                let ab = a.compose(b);
                prop_assert!(group.contains(&ab));
                prop_assert_eq!(ab.sign, a.sign * b.sign);
            }
        }
    }

    #[test]
    fn canonical_label_ignores_names(seed in any::<u64>(), k in 1usize..=4, l in 0usize..=2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_marked_graph(&mut rng, k, l);
        let mut vs: Vec<usize> = m.graph.vertices.keys().copied().collect();
        let mut hs: Vec<usize> = m.graph.half_edges.iter().copied().collect();
        let (vs0, hs0) = (vs.clone(), hs.clone());
        vs.shuffle(&mut rng);
        hs.shuffle(&mut rng);
        let vmap: BTreeMap<_, _> = vs0.into_iter().zip(vs).collect();
        let hmap: BTreeMap<_, _> = hs0.into_iter().zip(hs).collect();
        let other = relabel(&m, &vmap, &hmap);
        prop_assert_eq!(canonical_form(&m).unwrap().label, canonical_form(&other).unwrap().label);
    }

    #[test]
    fn hat_squares_to_zero(seed in any::<u64>(), d in 0usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_second_chain(&mut rng, d, 3, 2);
        prop_assert!(c.hat().unwrap().hat().unwrap().is_zero());
    }

    #[test]
    fn linking_is_symmetric_and_odd(seed in any::<u64>(), n in 4usize..=8, linked in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = random_loop_pair(&mut rng, n, linked);
        let lk = linking_number(&a, &b).unwrap();
        prop_assert_eq!(linking_number(&b, &a).unwrap(), lk.clone());
        prop_assert_eq!(linking_number(&a, &b.reversed()).unwrap(), -lk);
    }
}
