use spatial_knots::gauss::{find_partition, is_double_run, GaussCode, Partition, Visit};
use spatial_knots::invariants::KnotTable;

fn code(seq: &[u32]) -> GaussCode {
    let mut first = [true; 16];
    GaussCode {
        visits: seq
            .iter()
            .map(|&l| Visit {
                label: l,
                over: std::mem::replace(&mut first[l as usize], false),
                positive: true,
            })
            .collect(),
    }
}

// every sequence in which each of 1..=c appears twice and labels first
// appear in increasing order
fn all_sequences(c: u32) -> Vec<Vec<u32>> {
    fn go(c: u32, seq: &mut Vec<u32>, used: &mut Vec<u8>, next: u32, out: &mut Vec<Vec<u32>>) {
        if seq.len() == 2 * c as usize {
            out.push(seq.clone());
            return;
        }
        for l in 1..=c {
            let ok = (used[l as usize] == 0 && l == next) || used[l as usize] == 1;
            if !ok {
                continue;
            }
            used[l as usize] += 1;
            seq.push(l);
            go(c, seq, used, if l == next { next + 1 } else { next }, out);
            seq.pop();
            used[l as usize] -= 1;
        }
    }
    let mut out = Vec::new();
    go(
        c,
        &mut Vec::new(),
        &mut vec![0; c as usize + 1],
        1,
        &mut out,
    );
    out
}

fn repeats(xs: &[u32]) -> bool {
    xs.iter().enumerate().any(|(i, x)| xs[i + 1..].contains(x))
}

// lexicographically first cut pair whose two arcs both revisit a label
fn brute(seq: &[u32]) -> Option<(usize, usize)> {
    let n = seq.len();
    for i in 0..n {
        for j in i + 1..n {
            let a = &seq[i..j];
            let b: Vec<u32> = seq[j..].iter().chain(&seq[..i]).copied().collect();
            if repeats(a) && repeats(&b) {
                return Some((i, j));
            }
        }
    }
    None
}

#[test]
fn named_examples() {
    assert_eq!(find_partition(&code(&[1, 2, 3, 1, 2, 3])), None);
    let p = find_partition(&code(&[1, 2, 1, 3, 2, 3])).unwrap();
    let seq = [1, 2, 1, 3, 2, 3];
    assert!(repeats(&seq[p.alpha1()]));
    let rest: Vec<u32> = p.alpha2(6).map(|i| seq[i]).collect();
    assert!(repeats(&rest));
}

#[test]
fn exhaustive_up_to_five_crossings() {
    let mut total = 0;
    for c in 1..=5 {
        for seq in all_sequences(c) {
            let g = code(&seq);
            assert!(g.is_valid());
            let got = find_partition(&g).map(|Partition { first, second }| (first, second));
            assert_eq!(got, brute(&seq), "{seq:?}");
            // a double run never has a partition
            if is_double_run(&g) {
                assert_eq!(got, None);
            }
            total += 1;
        }
    }
    // 1 + 3 + 15 + 105 + 945 labelled pairings
    assert_eq!(total, 1069);
}

#[test]
fn table_knots() {
    let t = KnotTable::get();
    for e in t.entries() {
        let g = GaussCode::from_diagram(&e.diagram).unwrap();
        assert!(g.is_valid());
        assert_eq!(g.len(), 2 * e.crossing_number);
        let text = g.to_string();
        assert_eq!(text.parse::<GaussCode>().unwrap(), g);
        // every table knot diagram here is alternating and a double run
        // exactly for the torus knots
        let torus = ["3_1", "m3_1", "5_1", "m5_1"].contains(&e.name.as_str());
        if e.crossing_number > 0 {
            assert_eq!(is_double_run(&g), torus, "{}", e.name);
        }
    }
}
