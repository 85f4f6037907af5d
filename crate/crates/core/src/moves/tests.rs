use super::*;
use crate::constructors::{planar_theta, KnotSpec};
use crate::diagram::{parse_sgd, validate};
use crate::invariants::{jones, kauffman_bracket, KnotTable};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn kink() -> SpatialDiagram {
    parse_sgd("F knot\nX 0 0 1 2 3\nP 0 3\nP 1 2\nL 0 x1\nL 1 x1\n").unwrap()
}

#[test]
fn r1_round_trip() {
    let u = SpatialDiagram::unknot();
    for left in [true, false] {
        for first_under in [true, false] {
            let m = Move::R1Plus {
                dart: HalfEdge(0),
                left,
                first_under,
            };
            let k = apply(&u, &m).unwrap();
            assert!(validate(&k).is_valid(), "{:?}", validate(&k));
            assert_eq!(k.num_crossings(), 1);
            assert_eq!(jones(&k).unwrap(), crate::poly::LaurentPoly::one());
            let back = apply(
                &k,
                &Move::R1Minus {
                    crossing: CrossingId(0),
                },
            )
            .unwrap();
            assert_eq!(back.num_crossings(), 0);
            assert!(validate(&back).is_valid());
        }
    }
    let k = kink();
    let u = apply(
        &k,
        &Move::R1Minus {
            crossing: CrossingId(0),
        },
    )
    .unwrap();
    assert!(u.is_trivial_loops());
}

#[test]
fn r2_round_trip_keeps_bracket() {
    let t = KnotTable::get();
    let d = t.entry("4_1").unwrap().diagram.clone();
    let b0 = kauffman_bracket(&d).unwrap();
    let mut tried = 0;
    for f in d.faces() {
        if f.len() < 2 {
            continue;
        }
        for first_over in [true, false] {
            let m = Move::R2Plus {
                first: f.darts[0],
                second: f.darts[1],
                first_over,
            };
            let e = apply(&d, &m).unwrap();
            assert!(validate(&e).is_valid());
            assert_eq!(e.num_crossings(), 6);
            assert_eq!(kauffman_bracket(&e).unwrap(), b0);
            let undo: Vec<Move> = enumerate(&e, false)
                .into_iter()
                .filter(|m| matches!(m, Move::R2Minus { .. }))
                .collect();
            assert!(!undo.is_empty());
            let back = apply(&e, &undo[0]).unwrap();
            assert_eq!(back.num_crossings(), 4);
            assert_eq!(kauffman_bracket(&back).unwrap(), b0);
            tried += 1;
        }
    }
    assert!(tried > 0);
}

#[test]
fn r3_keeps_bracket() {
    let t = KnotTable::get();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    for name in ["3_1", "4_1", "5_2"] {
        let d = t.entry(name).unwrap().diagram.clone();
        for _ in 0..20 {
            let (e, _) = scramble(&d, 3, &mut rng).unwrap();
            for m in enumerate(&e, false) {
                if let Move::R3 { .. } = m {
                    let f = apply(&e, &m).unwrap();
                    assert!(validate(&f).is_valid());
                    assert_eq!(f.num_crossings(), e.num_crossings());
                    assert_eq!(
                        kauffman_bracket(&f).unwrap(),
                        kauffman_bracket(&e).unwrap(),
                        "{m} on {}",
                        crate::diagram::serialize_sgd(&e)
                    );
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn slides_preserve_validity() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut slides = 0;
    for _ in 0..40 {
        let (e, _) = scramble(&planar_theta(), 4, &mut rng).unwrap();
        for m in enumerate(&e, false) {
            if let Move::VSlide { .. } = m {
                let f = apply(&e, &m).unwrap();
                assert!(validate(&f).is_valid(), "{m}");
                assert_eq!(
                    f.num_crossings() as i64,
                    e.num_crossings() as i64 + delta(&e, &m).unwrap()
                );
                slides += 1;
            }
        }
    }
    assert!(slides > 0);
}

#[test]
fn random_moves_keep_jones() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let t = KnotTable::get();
    for name in ["3_1", "m3_1", "4_1"] {
        let d = t.entry(name).unwrap().diagram.clone();
        for _ in 0..10 {
            let (e, trace) = scramble(&d, 5, &mut rng).unwrap();
            assert!(validate(&e).is_valid());
            assert_eq!(
                jones(&e).unwrap(),
                t.entry(name).unwrap().jones,
                "{trace:?}"
            );
        }
    }
}

#[test]
fn simplify_examples() {
    let u = SpatialDiagram::unknot();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (e, _) = scramble(&u, 6, &mut rng).unwrap();
    let r = simplify(&e, 100_000, 4);
    assert_eq!(r.crossings, 0);
    let mut replay = e.clone();
    for m in &r.trace {
        replay = apply(&replay, m).unwrap();
    }
    assert_eq!(replay, r.best);

    let tref = KnotTable::get().entry("3_1").unwrap().diagram.clone();
    let r = simplify(&tref, 2_000, 0);
    assert_eq!(r.crossings, 3);

    let o = KnotSpec::named("unknot");
    let th = crate::constructors::build_theta_n(2, &o, &o).unwrap();
    let (e, _) = scramble(&th, 6, &mut rng).unwrap();
    assert_eq!(simplify(&e, 100_000, 4).crossings, 0);
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(48))]
    #[test]
    fn r2_r3_keep_bracket(seed in 0u64..10_000, steps in 1usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = KnotTable::get().entry("5_2").unwrap().diagram.clone();
        let b0 = kauffman_bracket(&d).unwrap();
        let mut cur = d;
        for _ in 0..steps {
            let ms: Vec<Move> = enumerate(&cur, true)
                .into_iter()
                .filter(|m| !matches!(m, Move::R1Plus { .. } | Move::R1Minus { .. } | Move::VSlide { .. }))
                .collect();
            let Some(m) = rand::seq::SliceRandom::choose(ms.as_slice(), &mut rng) else { break };
            cur = apply(&cur, m).unwrap();
            proptest::prop_assert!(validate(&cur).is_valid());
            proptest::prop_assert_eq!(kauffman_bracket(&cur).unwrap(), b0.clone());
        }
    }
}

fn constituent_jones(d: &SpatialDiagram) -> Vec<crate::poly::LaurentPoly> {
    let ls: Vec<_> = d.label_set().into_iter().collect();
    let mut out = Vec::new();
    for i in 0..ls.len() {
        for j in i + 1..ls.len() {
            let c = crate::constructors::constituent(d, &[ls[i], ls[j]]).unwrap();
            out.push(jones(&c).unwrap());
        }
    }
    out
}

#[test]
fn moves_keep_constituents() {
    let d =
        crate::constructors::build_theta(&KnotSpec::named("3_1"), &KnotSpec::named("4_1")).unwrap();
    let j0 = constituent_jones(&d);
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    let mut slides = 0;
    for _ in 0..30 {
        let (e, trace) = scramble(&d, 4, &mut rng).unwrap();
        assert_eq!(constituent_jones(&e), j0, "{trace:?}");
        for m in enumerate(&e, false) {
            let f = apply(&e, &m).unwrap();
            assert_eq!(constituent_jones(&f), j0, "{m}");
            slides += matches!(m, Move::VSlide { .. }) as usize;
        }
    }
    assert!(slides > 0);
    let r = simplify(&d, 5_000, 2);
    assert_eq!(r.crossings, 7);
}
