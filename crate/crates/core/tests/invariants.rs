use spatial_knots::constructors::{
    build_theta, build_theta_n, connected_sum, constituent, KnotSpec,
};
use spatial_knots::diagram::{parse_sgd, LabelFamily};
use spatial_knots::invariants::{identify, jones, kauffman_bracket, KnotTable};

#[test]
fn multiplicative_over_sums() {
    let t = KnotTable::get();
    for a in t.entries() {
        for b in t.entries() {
            let s = connected_sum(&a.diagram, &b.diagram).unwrap();
            assert_eq!(
                jones(&s).unwrap(),
                &a.jones * &b.jones,
                "{}#{}",
                a.name,
                b.name
            );
        }
    }
}

#[test]
fn table_round_trip() {
    let t = KnotTable::get();
    for e in t.entries() {
        assert_eq!(identify(&e.diagram).unwrap(), e.name);
        assert_eq!(e.diagram.num_crossings(), e.crossing_number);
        let m = e.diagram.mirror();
        assert_eq!(identify(&m).unwrap(), t.mirror_of(&e.name).unwrap());
    }
}

#[test]
fn constructor_constituents() {
    let t = KnotTable::get();
    let names = ["unknot", "3_1", "4_1", "5_1", "5_2"];
    for a in names {
        for b in names {
            let (ka, kb) = (KnotSpec::named(a), KnotSpec::named(b));
            for n in 1..=2 {
                let d = build_theta_n(n, &ka, &kb).unwrap();
                let ls: Vec<_> = d.label_set().into_iter().collect();
                for i in 0..ls.len() {
                    for j in i + 1..ls.len() {
                        let c = constituent(&d, &[ls[i], ls[j]]).unwrap();
                        let want = match (ls[i].family, ls[j].family) {
                            (LabelFamily::X, LabelFamily::X) => format!("{a}#{a}"),
                            (LabelFamily::Z, LabelFamily::Z) => format!("{b}#{b}"),
                            _ => format!("{a}#{b}"),
                        };
                        let got = identify(&c).unwrap();
                        assert_eq!(
                            got,
                            t.normalize(&want).unwrap(),
                            "{a} {b} n={n} {}{}",
                            ls[i],
                            ls[j]
                        );
                    }
                }
            }
            let th = build_theta(&ka, &kb).unwrap();
            assert_eq!(
                th.num_crossings(),
                t.crossing_number(&format!("{a}#{b}")).unwrap()
            );
        }
    }
}

#[test]
fn scrambled_unknot_vector() {
    let d = parse_sgd(include_str!("data/scrambled_unknot_12.sgd")).unwrap();
    assert_eq!(d.num_crossings(), 12);
    assert_eq!(identify(&d).unwrap(), "unknot");
    let b = kauffman_bracket(&d).unwrap();
    assert_eq!(b.terms().count(), 1);
}
