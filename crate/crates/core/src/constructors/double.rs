use crate::diagram::builder::Builder;
use crate::diagram::{delete_edges, EdgeLabel, Family, LabelFamily, SpatialDiagram};
use crate::error::{Error, Result};
use crate::gauss::{find_partition, traversal, GaussCode, Partition};
use crate::invariants::jones;
use crate::poly::LaurentPoly;

/// How a doubled diagram was put together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleInfo {
    pub partition: Partition,
    /// Crossing of the input where the x-pairs were clasped, if α1 crosses
    /// itself there.
    pub x_cluster: Option<usize>,
    pub z_cluster: Option<usize>,
    /// Pairs `(i, j)` whose constituent needed the second flip.
    pub extra_flips: Vec<(LabelFamily, u32, u32)>,
}

/// Replace a knot diagram by `n` parallel copies joined in two nodes placed
/// at a partition where both arcs cross themselves. Copies of α1 are
/// labeled `x_1..x_n`, copies of α2 `z_1..z_n`. Each crossing becomes an
/// `n × n` grid carrying the original sign, except at the first
/// self-crossing of each arc, where the two crossings between copies `i`
/// and `j` get opposite signs (or both flipped, when the first choice
/// leaves `x_i ∪ x_j` unknotted).
///
/// `n = 1` returns the input unchanged.
pub fn double_diagram(k: &SpatialDiagram, n: usize) -> Result<SpatialDiagram> {
    double_diagram_with_info(k, n).map(|(d, _)| d)
}

pub fn double_diagram_with_info(
    k: &SpatialDiagram,
    n: usize,
) -> Result<(SpatialDiagram, Option<DoubleInfo>)> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    if n == 1 {
        traversal(k)?;
        return Ok((k.clone(), None));
    }
    let passes = traversal(k)?;
    let code = GaussCode::from_diagram(k)?;
    let part = find_partition(&code).ok_or(Error::BothAlternating)?;
    let len = passes.len();
    let in_alpha1 = |p: usize| part.first <= p && p < part.second;

    let nc = k.num_crossings();
    let nn = n * n;
    let mut b = Builder::new(Family::ThetaN(n));
    // grid slots [S, E, N, W]; under copies run S→N, over copies W→E
    let mut grid = vec![[0u32; 4]; nc * nn];
    let gi = |c: usize, x: usize, y: usize| c * nn + (y - 1) * n + (x - 1);
    for g in grid.iter_mut() {
        for s in g.iter_mut() {
            *s = b.alloc(None);
        }
    }
    // which pass goes under / over at each crossing
    let mut under_pass = vec![usize::MAX; nc];
    let mut over_pass = vec![usize::MAX; nc];
    for (p, ps) in passes.iter().enumerate() {
        if ps.entry % 2 == 0 {
            under_pass[ps.crossing.idx()] = p;
        } else {
            over_pass[ps.crossing.idx()] = p;
        }
    }
    let label_of_pass = |p: usize, m: usize| {
        if in_alpha1(p) {
            EdgeLabel::x(m as u32)
        } else {
            EdgeLabel::z(m as u32)
        }
    };
    // column of under copy m, row of over copy m
    let col = |c: usize, m: usize| {
        if passes[under_pass[c]].entry == 0 {
            m
        } else {
            n + 1 - m
        }
    };
    let row = |c: usize, m: usize| {
        if passes[over_pass[c]].entry == 3 {
            n + 1 - m
        } else {
            m
        }
    };
    for c in 0..nc {
        for m in 1..=n {
            let lu = label_of_pass(under_pass[c], m);
            let lo = label_of_pass(over_pass[c], m);
            let x = col(c, m);
            for y in 1..n {
                let (lo_h, hi_h) = (grid[gi(c, x, y)][2], grid[gi(c, x, y + 1)][0]);
                b.link_labeled(lo_h, hi_h, Some(lu));
            }
            let y = row(c, m);
            for x in 1..n {
                let (l_h, r_h) = (grid[gi(c, x, y)][1], grid[gi(c, x + 1, y)][3]);
                b.link_labeled(l_h, r_h, Some(lo));
            }
        }
    }
    // end of copy m of a pass on a given side of its crossing
    let end = |p: usize, side: u8, m: usize| -> u32 {
        let c = passes[p].crossing.idx();
        match side {
            0 => grid[gi(c, col(c, m), 1)][0],
            2 => grid[gi(c, col(c, m), n)][2],
            3 => grid[gi(c, 1, row(c, m))][3],
            _ => grid[gi(c, n, row(c, m))][1],
        }
    };
    let mut n1 = Vec::new();
    let mut n2 = Vec::new();
    for p in 0..len {
        let prev = (p + len - 1) % len;
        let out_side = (passes[prev].entry + 2) % 4;
        let in_side = passes[p].entry;
        if p == part.first || p == part.second {
            continue;
        }
        for m in 1..=n {
            let l = label_of_pass(p, m);
            b.link_labeled(end(prev, out_side, m), end(p, in_side, m), Some(l));
        }
    }
    // n1 at the start of α1, n2 at its end
    for (cut, node) in [(part.first, &mut n1), (part.second, &mut n2)] {
        let prev = (cut + len - 1) % len;
        let out_side = (passes[prev].entry + 2) % 4;
        let in_side = passes[cut].entry;
        let mut ahead = Vec::new();
        let mut behind = Vec::new();
        for m in 1..=n {
            let la = label_of_pass(cut, m);
            let lb = label_of_pass(prev, m);
            let u = b.alloc(Some(la));
            b.link_labeled(u, end(cut, in_side, m), Some(la));
            ahead.push(u);
            let w = b.alloc(Some(lb));
            b.link_labeled(w, end(prev, out_side, m), Some(lb));
            behind.push(w);
        }
        node.extend(ahead.iter().rev());
        node.extend(behind.iter());
    }
    b.add_node(n1);
    b.add_node(n2);
    for g in &grid {
        b.add_crossing(*g);
    }
    let base = b.finish()?;

    // first self-crossing of each arc, by first visit
    let first_self = |alpha1: bool| -> Option<usize> {
        (0..len)
            .filter(|&p| in_alpha1(p) == alpha1)
            .map(|p| passes[p].crossing.idx())
            .find(|&c| in_alpha1(under_pass[c]) == alpha1 && in_alpha1(over_pass[c]) == alpha1)
    };
    let xc = first_self(true);
    let zc = first_self(false);
    let mut d = base;
    let mut extra = Vec::new();
    for (fam, cluster) in [(LabelFamily::X, xc), (LabelFamily::Z, zc)] {
        let Some(c) = cluster else { continue };
        for i in 1..=n {
            for j in i + 1..=n {
                d = d.flip_crossing(crate::diagram::CrossingId(
                    gi(c, col(c, j), row(c, i)) as u32
                ));
                let keep = [EdgeLabel::new(fam, i as u32), EdgeLabel::new(fam, j as u32)];
                if constituent_jones(&d, &keep)? == LaurentPoly::one() {
                    d = d.flip_crossing(crate::diagram::CrossingId(
                        gi(c, col(c, i), row(c, j)) as u32
                    ));
                    extra.push((fam, i as u32, j as u32));
                }
            }
        }
    }
    Ok((
        d,
        Some(DoubleInfo {
            partition: part,
            x_cluster: xc,
            z_cluster: zc,
            extra_flips: extra,
        }),
    ))
}

/// Jones polynomial of the knot formed by the two given edges.
pub(crate) fn constituent_jones(d: &SpatialDiagram, keep: &[EdgeLabel]) -> Result<LaurentPoly> {
    jones(&constituent(d, keep)?)
}

/// The knot formed by the given edges of a two-node diagram.
pub fn constituent(d: &SpatialDiagram, keep: &[EdgeLabel]) -> Result<SpatialDiagram> {
    let del: Vec<EdgeLabel> = d
        .label_set()
        .into_iter()
        .filter(|l| !keep.contains(l))
        .collect();
    delete_edges(d, &del)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::connected_sum;
    use crate::diagram::{crossing_matrix, validate};
    use crate::invariants::KnotTable;

    #[test]
    fn doubled_sum() {
        let t = KnotTable::get();
        let k = connected_sum(
            &t.entry("3_1").unwrap().diagram,
            &t.entry("4_1").unwrap().diagram,
        )
        .unwrap();
        let want = t.jones_of("3_1#4_1").unwrap();
        for n in 2..=3 {
            let d = double_diagram(&k, n).unwrap();
            let rep = validate(&d);
            assert!(rep.is_valid(), "{rep:?}");
            assert_eq!(d.num_crossings(), 7 * n * n);
            let m = crossing_matrix(&d).unwrap();
            for i in 1..=n as u32 {
                for j in 1..=n as u32 {
                    assert_eq!(
                        m.get(EdgeLabel::x(i), EdgeLabel::z(j)),
                        7 - m.get(EdgeLabel::x(1), EdgeLabel::x(1))
                            - m.get(EdgeLabel::z(1), EdgeLabel::z(1))
                    );
                    let j2 = constituent_jones(&d, &[EdgeLabel::x(i), EdgeLabel::z(j)]).unwrap();
                    assert_eq!(j2, want, "x{i} z{j}");
                }
            }
            for fam in [LabelFamily::X, LabelFamily::Z] {
                for i in 1..=n as u32 {
                    for j in i + 1..=n as u32 {
                        let jj = constituent_jones(
                            &d,
                            &[EdgeLabel::new(fam, i), EdgeLabel::new(fam, j)],
                        )
                        .unwrap();
                        assert_ne!(jj, LaurentPoly::one());
                    }
                }
            }
        }
    }

    #[test]
    fn alternating_double_run_refused() {
        let t = KnotTable::get();
        let k = &t.entry("3_1").unwrap().diagram;
        assert_eq!(double_diagram(k, 2), Err(Error::BothAlternating));
        assert_eq!(double_diagram(k, 1).unwrap(), *k);
    }
}
