use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spatial_knots::diagram::{canonical_code, parse_sgd, serialize_sgd, validate};
use spatial_knots::invariants::{jones, kauffman_bracket, KnotTable};
use spatial_knots::moves::{apply, enumerate, random_corpus, simplify, Move};

// knot diagrams reached from table knots by random R2 and R3 moves
fn r2_r3_corpus(seed: u64, count: usize) -> Vec<(String, spatial_knots::SpatialDiagram)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t = KnotTable::get();
    let mut out = Vec::new();
    for i in 0..count {
        let e = &t.entries()[i % t.entries().len()];
        let mut d = e.diagram.clone();
        for _ in 0..4 {
            let ms: Vec<Move> = enumerate(&d, true)
                .into_iter()
                .filter(|m| {
                    matches!(
                        m,
                        Move::R2Plus { .. } | Move::R2Minus { .. } | Move::R3 { .. }
                    )
                })
                .collect();
            let Some(m) = ms.choose(&mut rng) else { break };
            d = apply(&d, m).unwrap();
        }
        out.push((e.name.clone(), d));
    }
    out
}

#[test]
fn bracket_invariant_on_corpus() {
    let t = KnotTable::get();
    for (name, d) in r2_r3_corpus(2024, 50) {
        assert!(validate(&d).is_valid());
        let base = &t.entry(&name).unwrap().diagram;
        assert_eq!(
            kauffman_bracket(&d).unwrap(),
            kauffman_bracket(base).unwrap(),
            "{name}"
        );
        // every R3 available on the result keeps the bracket too
        for m in enumerate(&d, false) {
            if let Move::R3 { .. } = m {
                let e = apply(&d, &m).unwrap();
                assert_eq!(kauffman_bracket(&e).unwrap(), kauffman_bracket(&d).unwrap());
            }
        }
    }
}

#[test]
fn jones_invariant_under_all_moves() {
    let t = KnotTable::get();
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for e in t.entries() {
        let (d, _) = spatial_knots::moves::scramble(&e.diagram, 6, &mut rng).unwrap();
        assert_eq!(jones(&d).unwrap(), e.jones, "{}", e.name);
    }
}

#[test]
fn corpus_simplifies_to_zero() {
    let corpus = random_corpus(1, 20, 8).unwrap();
    for e in &corpus {
        let r = simplify(&e.diagram, 100_000, 4);
        assert_eq!(r.crossings, 0, "{}: {}", e.name, serialize_sgd(&e.diagram));
        let mut replay = e.diagram.clone();
        for m in &r.trace {
            replay = apply(&replay, m).unwrap();
        }
        assert_eq!(canonical_code(&replay), canonical_code(&r.best));
    }
}

#[test]
fn simplify_is_deterministic() {
    let corpus = random_corpus(9, 4, 8).unwrap();
    for e in &corpus {
        let a = simplify(&e.diagram, 5_000, 2);
        let b = simplify(&e.diagram, 5_000, 2);
        assert_eq!(a.trace, b.trace);
        assert_eq!(a.explored, b.explored);
    }
}

#[test]
fn trefoil_stays_at_three() {
    let d = KnotTable::get().entry("3_1").unwrap().diagram.clone();
    let r = simplify(&d, 10_000, 0);
    assert_eq!(r.crossings, 3);
    assert!(r.trace.is_empty());
}

#[test]
fn corpus_round_trips_through_text() {
    for e in random_corpus(5, 30, 8).unwrap() {
        let text = serialize_sgd(&e.diagram);
        assert_eq!(parse_sgd(&text).unwrap(), e.diagram);
    }
}
