use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spatial_knots::constructors::{build_theta, planar_theta, KnotSpec};
use spatial_knots::diagram::{
    connecting_arc, crossing_matrix, delete_edge, parse_sgd, serialize_sgd, split_along, validate,
};
use spatial_knots::invariants::{identify, KnotTable};
use spatial_knots::moves::{apply, enumerate, Move};
use spatial_knots::SpatialDiagram;

// a diagram of a table knot disguised by random moves that keep it a knot
fn disguised(name: &str, seed: u64, steps: usize) -> SpatialDiagram {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (d, _) = spatial_knots::moves::scramble(
        &KnotTable::get().entry(name).unwrap().diagram,
        steps,
        &mut rng,
    )
    .unwrap();
    d
}

const NAMES: [&str; 5] = ["unknot", "3_1", "m3_1", "4_1", "5_2"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn connecting_arc_on_tied_thetas(a in 0usize..5, b in 0usize..5, s1 in 0u64..1000, s2 in 0u64..1000, steps in 0usize..4) {
        let k1 = disguised(NAMES[a], s1, steps);
        let k2 = disguised(NAMES[b], s2, steps);
        let d = build_theta(&KnotSpec::Diagram(k1.clone()), &KnotSpec::Diagram(k2.clone())).unwrap();
        prop_assert!(validate(&d).is_valid());
        let g = connecting_arc(&d).unwrap();
        let parts = split_along(&d, &g).unwrap();
        let m = crossing_matrix(&d).unwrap();
        let ls: Vec<_> = d.label_set().into_iter().collect();
        prop_assert_eq!(parts.len(), 3);
        for (p, l) in parts.iter().zip(&ls) {
            prop_assert_eq!(p.num_crossings(), m.get(*l, *l));
        }
        prop_assert_eq!(identify(&parts[0]).unwrap(), identify(&k1).unwrap());
        prop_assert_eq!(identify(&parts[2]).unwrap(), identify(&k2).unwrap());
    }

    #[test]
    fn deletion_accounting(seed in 0u64..5000, steps in 1usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let base = build_theta(&KnotSpec::named("3_1"), &KnotSpec::named("4_1")).unwrap();
        let (d, _) = spatial_knots::moves::scramble(&base, steps, &mut rng).unwrap();
        let m = crossing_matrix(&d).unwrap();
        let total: usize = m.entries().map(|(_, v)| v).sum();
        prop_assert_eq!(total, d.num_crossings());
        for l in d.label_set() {
            let e = delete_edge(&d, l).unwrap();
            prop_assert!(validate(&e).is_valid());
            prop_assert_eq!(e.num_crossings(), d.num_crossings() - m.row_sum(l));
        }
        prop_assert_eq!(parse_sgd(&serialize_sgd(&d)).unwrap(), d.clone());
        prop_assert!(d.euler_characteristics().iter().all(|&c| c == 2));
    }
}

#[test]
fn crossing_theta_is_rejected() {
    let t = planar_theta();
    let f = t.faces().into_iter().find(|f| f.len() >= 2).unwrap();
    let d = apply(
        &t,
        &Move::R2Plus {
            first: f.darts[0],
            second: f.darts[1],
            first_over: true,
        },
    )
    .unwrap();
    assert!(crossing_matrix(&d).unwrap().off_diagonal_sum() > 0);
    assert!(connecting_arc(&d).is_err());
    assert!(!enumerate(&d, false).is_empty());
}
