use spatial_knots::constructors::*;
use spatial_knots::diagram::{crossing_matrix, strand_count, validate};
use spatial_knots::invariants::{identify, jones, KnotTable};
use spatial_knots::moves::simplify;
use spatial_knots::SpatialDiagram;

fn k(s: &str) -> KnotSpec {
    KnotSpec::named(s)
}

const NAMES: [&str; 4] = ["3_1", "4_1", "5_1", "5_2"];

#[test]
fn theta_counts() {
    let t = build_theta(&k("3_1"), &k("4_1")).unwrap();
    assert_eq!(t.num_crossings(), 7);
    assert!(crossing_matrix(&t).unwrap().off_diagonal_zero());
    for n in 1..=4 {
        let d = build_theta_n(n, &k("3_1"), &k("4_1")).unwrap();
        assert!(validate(&d).is_valid());
        assert_eq!(d.num_crossings(), 7 * n);
    }
}

#[test]
fn doubling_counts_and_membership() {
    let s = connected_sum(&k("3_1").diagram().unwrap(), &k("4_1").diagram().unwrap()).unwrap();
    for (n, c) in [(2, 28), (3, 63)] {
        let d = double_diagram(&s, n).unwrap();
        assert!(validate(&d).is_valid());
        assert_eq!(d.num_crossings(), c);
    }
    let d = double_diagram(&s, 2).unwrap();
    let r = check_omega_membership(&d, &k("3_1"), &k("4_1")).unwrap();
    assert_eq!(r.verdict, OmegaVerdict::Member);
    assert_eq!(double_diagram(&s, 1).unwrap(), s);
}

#[test]
fn resolution_knot_type() {
    let t = KnotTable::get();
    for n in 1..=4 {
        let d = build_theta_n(n, &k("3_1"), &k("4_1")).unwrap();
        let r = resolve_nodes(&d).unwrap();
        assert_eq!(strand_count(&r), 1);
        assert_eq!(r.num_crossings(), 7 * n);
        if n <= 2 {
            let j = jones(&r).unwrap();
            let want = (0..n).fold(spatial_knots::LaurentPoly::one(), |acc, _| {
                &(&acc * &t.entry("3_1").unwrap().jones) * &t.entry("4_1").unwrap().jones
            });
            assert_eq!(j, want);
        }
    }
}

#[test]
fn cut_additivity() {
    for a in NAMES {
        for b in NAMES {
            for n in 1..=2 {
                for kk in 1..=3 {
                    let o = build_oplus(n, kk, &k(a), &k(b)).unwrap();
                    for i in 1..=kk {
                        let (l, r) = cut_vertical(&o, i).unwrap();
                        assert!(validate(&l).is_valid() && validate(&r).is_valid());
                        assert_eq!(l.num_crossings() + r.num_crossings(), o.num_crossings());
                        let g = delete_vertical(&o, i).unwrap();
                        assert_eq!(g.num_crossings(), o.num_crossings());
                    }
                }
            }
        }
    }
}

#[test]
fn constituents_of_theta() {
    for a in NAMES {
        for b in NAMES {
            let d = build_theta(&k(a), &k(b)).unwrap();
            let ls: Vec<_> = d.label_set().into_iter().collect();
            let (x, y, z) = (ls[0], ls[1], ls[2]);
            let t = KnotTable::get();
            assert_eq!(
                identify(&constituent(&d, &[x, y]).unwrap()).unwrap(),
                t.normalize(a).unwrap()
            );
            assert_eq!(
                identify(&constituent(&d, &[y, z]).unwrap()).unwrap(),
                t.normalize(b).unwrap()
            );
            assert_eq!(
                identify(&constituent(&d, &[x, z]).unwrap()).unwrap(),
                t.normalize(&format!("{a}#{b}")).unwrap()
            );
        }
    }
}

#[test]
fn theta_sum_of_thetas() {
    let a = build_theta(&k("3_1"), &k("4_1")).unwrap();
    let b = build_theta(&k("5_1"), &k("5_2")).unwrap();
    let s = theta_connected_sum(&a, &b).unwrap();
    assert!(validate(&s).is_valid());
    assert_eq!(s.num_crossings(), 17);
}

fn brunnian(d: &SpatialDiagram) -> bool {
    let ls: Vec<_> = d.label_set().into_iter().collect();
    [(0, 1), (1, 2), (0, 2)]
        .iter()
        .all(|&(i, j)| identify(&constituent(d, &[ls[i], ls[j]]).unwrap()).unwrap() == "unknot")
}

#[test]
fn kinoshita_resists_simplification() {
    let d = kinoshita().unwrap();
    assert!(validate(&d).is_valid());
    assert_eq!(d.num_crossings(), 5);
    assert!(crossing_matrix(&d).unwrap().diagonal_sum() == 0);
    assert!(brunnian(&d));
    let r = simplify(&d, 100_000, 2);
    assert_eq!(r.crossings, 5);
    assert!(!r.budget_exhausted);
}

#[test]
fn clasped_theta_is_brunnian_and_trivial() {
    for tw in [0u8, 5] {
        let d = clasped_theta(tw).unwrap();
        assert!(validate(&d).is_valid());
        assert_eq!(d.num_crossings(), 6);
        let ls: Vec<_> = d.label_set().into_iter().collect();
        for i in 0..3 {
            for j in i + 1..3 {
                let c = constituent(&d, &[ls[i], ls[j]]).unwrap();
                assert_eq!(identify(&c).unwrap(), "unknot");
            }
        }
        assert_eq!(simplify(&d, 20_000, 2).crossings, 0);
    }
}
