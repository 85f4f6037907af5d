//! θ^n, the ⊕ graphs, their vertical deletions and the cut along a
//! crossing-free vertical edge.

use super::{tie_into, KnotSpec};
use crate::diagram::builder::Builder;
use crate::diagram::{delete_edges, CrossingMatrix, EdgeLabel, Family, SpatialDiagram};
use crate::error::{Error, Result};

fn oplus_family(n: usize, k: usize) -> Family {
    if k == 0 {
        Family::ThetaN(n)
    } else {
        Family::Oplus(n, k)
    }
}

/// Label of the horizontal edge in column `c` (0-based) and row `r`
/// (1-based, top first). Even columns carry K1 on the upper half.
fn horizontal_label(n: usize, c: usize, r: usize) -> EdgeLabel {
    let upper = r <= n;
    let pos = if upper { r } else { r - n } as u32;
    let base = (c * n) as u32;
    if upper == (c % 2 == 0) {
        EdgeLabel::x(base + pos)
    } else {
        EdgeLabel::z(base + pos)
    }
}

/// Labels of vertical edge `i` (1-based), top segment first.
pub fn vertical_labels(n: usize, i: usize) -> Vec<EdgeLabel> {
    let per = 2 * n - 1;
    (1..=per)
        .map(|s| EdgeLabel::h(((i - 1) * per + s) as u32))
        .collect()
}

/// ⊕^{n,k}: nodes `L` and `R` joined by `k + 1` columns of `2n` horizontal
/// edges, separated by `k` vertical lines of `2n` nodes each. Every
/// horizontal edge has K1 or K2 tied into it so that each line node meets
/// one of each. `k = 0` gives θ^n.
///
/// Node order is `L`, `R`, then line `j` rows `1..2n` for `j = 1..k`.
/// Line nodes list their edges counterclockwise from the left one.
pub fn build_oplus(n: usize, k: usize, k1: &KnotSpec, k2: &KnotSpec) -> Result<SpatialDiagram> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    let (d1, d2) = (k1.diagram()?, k2.diagram()?);
    let rows = 2 * n;
    let mut b = Builder::new(oplus_family(n, k));
    // (left end, right end) of each horizontal edge
    let mut hor = vec![vec![(0u32, 0u32); rows + 1]; k + 1];
    for (c, col) in hor.iter_mut().enumerate() {
        for r in 1..=rows {
            let l = horizontal_label(n, c, r);
            let u = b.alloc(Some(l));
            let w = b.alloc(Some(l));
            b.link(u, w);
            col[r] = (u, w);
        }
    }
    // (top end, bottom end) of each vertical segment
    let mut ver = vec![vec![(0u32, 0u32); rows]; k + 1];
    for j in 1..=k {
        for (s, l) in vertical_labels(n, j).into_iter().enumerate() {
            let t = b.alloc(Some(l));
            let bo = b.alloc(Some(l));
            b.link(t, bo);
            ver[j][s + 1] = (t, bo);
        }
    }
    b.add_node((1..=rows).rev().map(|r| hor[0][r].0).collect());
    b.add_node((1..=rows).map(|r| hor[k][r].1).collect());
    for j in 1..=k {
        for r in 1..=rows {
            let left = hor[j - 1][r].1;
            let right = hor[j][r].0;
            let rot = if r == 1 {
                vec![left, ver[j][1].0, right]
            } else if r == rows {
                vec![left, right, ver[j][rows - 1].1]
            } else {
                vec![left, ver[j][r].0, right, ver[j][r - 1].1]
            };
            b.add_node(rot);
        }
    }
    for (c, col) in hor.iter().enumerate() {
        for r in 1..=rows {
            let l = horizontal_label(n, c, r);
            let knot = if l.family == crate::diagram::LabelFamily::X {
                &d1
            } else {
                &d2
            };
            let (u, w) = col[r];
            tie_into(&mut b, u, w, knot, l)?;
        }
    }
    b.finish()
}

/// θ^n_{K1,K2}: two nodes joined by `x_1..x_n` (K1 tied in) above
/// `z_1..z_n` (K2 tied in).
pub fn build_theta_n(n: usize, k1: &KnotSpec, k2: &KnotSpec) -> Result<SpatialDiagram> {
    build_oplus(n, 0, k1, k2)
}

fn oplus_params(d: &SpatialDiagram) -> Result<(usize, usize)> {
    match d.family() {
        Family::Oplus(n, k) => Ok((n, k)),
        Family::ThetaN(n) => Ok((n, 0)),
        f => Err(Error::Precondition(format!(
            "expected an oplus diagram, got {f}"
        ))),
    }
}

/// G^{n,k,i}: ⊕^{n,k} with vertical edge `i` deleted.
pub fn delete_vertical(d: &SpatialDiagram, i: usize) -> Result<SpatialDiagram> {
    let (n, k) = oplus_params(d)?;
    if i == 0 || i > k {
        return Err(Error::Precondition(format!(
            "vertical edge {i} out of range 1..={k}"
        )));
    }
    Ok(delete_edges(d, &vertical_labels(n, i))?.with_family(Family::G(n, k, i)))
}

/// `s` from the recursion on the position of the deleted edge.
pub fn recursion_parameter(k: usize, i: usize) -> Result<usize> {
    if i == 0 || i > k {
        return Err(Error::Precondition(format!("i = {i} out of range 1..={k}")));
    }
    if 2 * i == k + 1 {
        return Err(Error::Precondition(format!(
            "i = (k+1)/2 = {i} is excluded"
        )));
    }
    Ok(if i - 1 < k - i { i } else { i - (k - i) - 1 })
}

fn shift_label(l: EdgeLabel, n: usize, i: usize) -> EdgeLabel {
    use crate::diagram::LabelFamily::*;
    let by = match l.family {
        X | Z => (i * n) as u32,
        H => (i * (2 * n - 1)) as u32,
        Y => 0,
    };
    EdgeLabel::new(l.family, l.index - by)
}

/// Cut ⊕^{n,k} along vertical edge `i`, which must cross nothing. The
/// line's nodes are removed and the horizontal ends on either side are
/// gathered into a new node, giving ⊕^{n,i-1} on the left and ⊕^{n,k-i}
/// on the right. Right-hand labels are shifted down to start again at 1.
///
/// Expects the node layout produced by [`build_oplus`].
pub fn cut_vertical(d: &SpatialDiagram, i: usize) -> Result<(SpatialDiagram, SpatialDiagram)> {
    let (n, k) = oplus_params(d)?;
    if i == 0 || i > k {
        return Err(Error::Precondition(format!(
            "vertical edge {i} out of range 1..={k}"
        )));
    }
    let rows = 2 * n;
    if d.num_nodes() != 2 + rows * k {
        return Err(Error::Precondition(format!(
            "expected {} nodes for oplus {n} {k}, found {}",
            2 + rows * k,
            d.num_nodes()
        )));
    }
    let m = CrossingMatrix::of(d)?;
    let vl = vertical_labels(n, i);
    if let Some(l) = vl.iter().find(|&&l| m.row_sum(l) > 0) {
        return Err(Error::Precondition(format!(
            "vertical edge {i} is crossed ({l} has {} crossings)",
            m.row_sum(*l)
        )));
    }
    let mut b = Builder::from_diagram(d);
    let mut left_ends = Vec::with_capacity(rows);
    let mut right_ends = Vec::with_capacity(rows);
    for r in 1..=rows {
        let ni = 2 + (i - 1) * rows + (r - 1);
        let rot = b.nodes[ni].take().expect("line node");
        let want = if r == 1 || r == rows { 3 } else { 4 };
        if rot.len() != want {
            return Err(Error::Precondition(format!(
                "line node {ni} has valence {}, expected {want}",
                rot.len()
            )));
        }
        let (l, rt) = if r == rows {
            (rot[0], rot[1])
        } else {
            (rot[0], rot[2])
        };
        for &h in &rot {
            if h != l && h != rt {
                if !b.label[h as usize].is_some_and(|x| vl.contains(&x)) {
                    return Err(Error::Precondition(format!(
                        "line node {ni} is not attached to vertical edge {i}"
                    )));
                }
                b.cut_arc(h);
            }
        }
        left_ends.push(l);
        right_ends.push(rt);
    }
    let r_new = b.add_node(left_ends);
    let l_new = b.add_node(right_ends.into_iter().rev().collect());
    let whole = b.finish()?;
    let pieces = whole.split_components()?;
    if pieces.len() != 2 {
        return Err(Error::Internal(format!(
            "cutting produced {} pieces instead of 2",
            pieces.len()
        )));
    }
    // rebuild each piece with its nodes in constructor order
    let old_nodes = whole.num_nodes();
    let (r_new, l_new) = (r_new - rows, l_new - rows);
    debug_assert_eq!(l_new + 1, old_nodes);
    let line_nodes = |a: usize, bnd: usize| -> Vec<usize> {
        (a..bnd)
            .flat_map(|j| (0..rows).map(move |r| (j, r)))
            .map(|(j, r)| {
                // nodes after line i shifted down by one line
                let ni = 2 + (j - 1) * rows + r;
                if j > i {
                    ni - rows
                } else {
                    ni
                }
            })
            .collect()
    };
    let left_order: Vec<usize> = [0, r_new].into_iter().chain(line_nodes(1, i)).collect();
    let right_order: Vec<usize> = [l_new, 1]
        .into_iter()
        .chain(line_nodes(i + 1, k + 1))
        .collect();
    let comps = whole.components();
    let crossings_with = |node: usize| -> Result<Vec<crate::diagram::CrossingId>> {
        let c = comps
            .iter()
            .find(|vs| {
                vs.contains(&crate::diagram::Vertex::Node(crate::diagram::NodeId(
                    node as u32,
                )))
            })
            .ok_or_else(|| Error::Internal("node missing from components".into()))?;
        Ok(c.iter()
            .filter_map(|v| match v {
                crate::diagram::Vertex::Crossing(c) => Some(*c),
                _ => None,
            })
            .collect())
    };
    let ids = |v: &[usize]| -> Vec<crate::diagram::NodeId> {
        v.iter()
            .map(|&x| crate::diagram::NodeId(x as u32))
            .collect()
    };
    let left = whole.subdiagram(
        &crossings_with(0)?,
        &ids(&left_order),
        oplus_family(n, i - 1),
    )?;
    let right = whole.subdiagram(
        &crossings_with(1)?,
        &ids(&right_order),
        oplus_family(n, k - i),
    )?;
    if left.num_nodes() + right.num_nodes() != old_nodes {
        return Err(Error::Internal(
            "cut pieces do not partition the nodes".into(),
        ));
    }
    let labels = right
        .labels()
        .iter()
        .map(|l| l.map(|l| shift_label(l, n, i)))
        .collect();
    let mut right = right;
    right.set_labels(labels);
    Ok((left, right))
}
