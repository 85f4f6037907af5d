//! Diagram families: connected sums, theta-curves, θ^n, doubled diagrams,
//! the ⊕ graphs and their relatives.

mod double;
mod omega;
mod oplus;
mod resolve;
mod thetasum;

use std::fmt;
use std::str::FromStr;

use crate::diagram::builder::Builder;
use crate::diagram::matrix::erase_small_nodes;
use crate::diagram::{EdgeLabel, Family, SpatialDiagram};
use crate::error::{Error, Result};
use crate::gauss::traversal;
use crate::invariants::{identify, knot_diagram, KnotTable};

pub use double::{constituent, double_diagram, double_diagram_with_info, DoubleInfo};
pub use omega::{check_omega_membership, OmegaReport, OmegaVerdict, PairReport};
pub use oplus::{
    build_oplus, build_theta_n, cut_vertical, delete_vertical, recursion_parameter, vertical_labels,
};

pub use resolve::resolve_nodes;
pub use thetasum::theta_connected_sum;

/// A knot given by table name (sums such as `3_1#4_1` allowed) or by an
/// explicit diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KnotSpec {
    Named(String),
    Diagram(SpatialDiagram),
}

impl KnotSpec {
    pub fn named(name: &str) -> Self {
        KnotSpec::Named(name.to_string())
    }

    pub fn diagram(&self) -> Result<SpatialDiagram> {
        match self {
            KnotSpec::Named(n) => knot_diagram(n),
            KnotSpec::Diagram(d) => Ok(d.clone()),
        }
    }

    /// Table name of the knot, if known. Explicit diagrams are identified
    /// by their Jones polynomial.
    pub fn table_name(&self) -> Result<Option<String>> {
        match self {
            KnotSpec::Named(n) => KnotTable::get().normalize(n).map(Some),
            KnotSpec::Diagram(d) => {
                let id = identify(d)?;
                Ok((id != "unknown").then_some(id))
            }
        }
    }
}

impl FromStr for KnotSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        KnotTable::get().parse_sum(s)?;
        Ok(KnotSpec::named(s))
    }
}

impl fmt::Display for KnotSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotSpec::Named(n) => write!(f, "{n}"),
            KnotSpec::Diagram(d) => write!(f, "<diagram with {} crossings>", d.num_crossings()),
        }
    }
}

fn require_knot(k: &SpatialDiagram) -> Result<()> {
    traversal(k).map(|_| ())
}

/// `k` with its valence-2 marker nodes erased, when it has crossings.
fn without_markers(k: &SpatialDiagram) -> Result<SpatialDiagram> {
    if k.num_crossings() == 0 || k.num_nodes() == 0 {
        return Ok(k.clone());
    }
    let mut b = Builder::new(k.family());
    b.absorb(k);
    erase_small_nodes(&mut b, &vec![true; k.num_nodes()])?;
    b.finish()
}

/// Splice the knot `k`, cut open at the arc entering crossing 0 by slot 0,
/// into the arc `ha`–`hb`. The strand runs from `ha` through the knot to
/// `hb`. All new arcs carry `label`.
pub(crate) fn tie_into(
    b: &mut Builder,
    ha: u32,
    hb: u32,
    k: &SpatialDiagram,
    label: EdgeLabel,
) -> Result<()> {
    require_knot(k)?;
    if k.num_crossings() == 0 {
        return Ok(());
    }
    let k = &without_markers(k)?;
    debug_assert_eq!(b.partner(ha), hb);
    let off = b.absorb(k);
    for l in &mut b.label[off as usize..] {
        *l = Some(label);
    }
    let s0 = k.crossings()[0][0].0 + off;
    let p0 = b.partner(s0);
    b.link(ha, s0);
    b.link(p0, hb);
    Ok(())
}

/// Connected sum of two knot diagrams, joined at the arc entering crossing
/// 0 by slot 0 of each. Crossings of `a` come first. No crossings are
/// added.
pub fn connected_sum(a: &SpatialDiagram, b: &SpatialDiagram) -> Result<SpatialDiagram> {
    require_knot(a)?;
    require_knot(b)?;
    let (a, b) = (&without_markers(a)?, &without_markers(b)?);
    let x1 = EdgeLabel::x(1);
    if a.num_crossings() == 0 {
        return Ok(b.clone().relabel_all(x1).with_family(Family::Knot));
    }
    if b.num_crossings() == 0 {
        return Ok(a.clone().relabel_all(x1).with_family(Family::Knot));
    }
    let mut bl = Builder::new(Family::Knot);
    let oa = bl.absorb(a);
    let ob = bl.absorb(b);
    let sa = a.crossings()[0][0].0 + oa;
    let sb = b.crossings()[0][0].0 + ob;
    let pa = bl.partner(sa);
    let pb = bl.partner(sb);
    bl.link(pa, sb);
    bl.link(pb, sa);
    Ok(bl.finish()?.relabel_all(x1))
}

/// The planar theta graph: `n1` and `n2` joined by `x`, `y` and `z`, drawn
/// top to bottom. Returns the builder and the half-edges of each edge at
/// `n1` and `n2`.
pub(crate) fn planar_theta_builder() -> (Builder, [(u32, u32); 3]) {
    let mut b = Builder::new(Family::Theta);
    let labels = [EdgeLabel::x(1), EdgeLabel::y(1), EdgeLabel::z(1)];
    let ends: Vec<(u32, u32)> = labels
        .iter()
        .map(|&l| {
            let u = b.alloc(Some(l));
            let v = b.alloc(Some(l));
            b.link(u, v);
            (u, v)
        })
        .collect();
    // n1 on the left lists its edges bottom to top, n2 top to bottom
    b.add_node(vec![ends[2].0, ends[1].0, ends[0].0]);
    b.add_node(vec![ends[0].1, ends[1].1, ends[2].1]);
    (b, [ends[0], ends[1], ends[2]])
}

pub fn planar_theta() -> SpatialDiagram {
    planar_theta_builder().0.finish().expect("planar theta")
}

/// θ_{K1,K2}: the planar theta with `k1` tied into `x` and `k2` into `z`.
pub fn build_theta(k1: &KnotSpec, k2: &KnotSpec) -> Result<SpatialDiagram> {
    let (d1, d2) = (k1.diagram()?, k2.diagram()?);
    let (mut b, ends) = planar_theta_builder();
    tie_into(&mut b, ends[0].0, ends[0].1, &d1, EdgeLabel::x(1))?;
    tie_into(&mut b, ends[2].0, ends[2].1, &d2, EdgeLabel::z(1))?;
    b.finish()
}

/// A six-crossing theta-curve whose three constituent knots are unknots:
/// the planar theta with a clasp between each pair of edges. `twist`
/// selects which crossing of each clasp is changed, one bit per pair.
///
/// Every variant is isotopic to the planar theta; this is a test input for
/// the simplifier, not a Kinoshita theta-curve.
pub fn clasped_theta(twist: u8) -> Result<SpatialDiagram> {
    use crate::moves::{apply, Move};
    let mut d = planar_theta();
    let mut done: Vec<(EdgeLabel, EdgeLabel)> = Vec::new();
    for _ in 0..3 {
        let faces = d.faces();
        let (first, second, pair) = faces
            .iter()
            .find_map(|f| {
                f.darts.iter().find_map(|&a| {
                    let la = d.label_of(a)?;
                    f.darts.iter().find_map(|&b| {
                        let lb = d.label_of(b)?;
                        let pair = (la.min(lb), la.max(lb));
                        (la != lb && !done.contains(&pair)).then_some((a, b, pair))
                    })
                })
            })
            .ok_or_else(|| Error::Internal("no face left for a clasp".into()))?;
        done.push(pair);
        d = apply(
            &d,
            &Move::R2Plus {
                first,
                second,
                first_over: true,
            },
        )?;
    }
    let mut pairs: Vec<(EdgeLabel, EdgeLabel)> = Vec::new();
    let mut flips = Vec::new();
    for (ci, c) in d.crossings().iter().enumerate() {
        let (a, b) = (d.label_of(c[0]).unwrap(), d.label_of(c[1]).unwrap());
        let pair = (a.min(b), a.max(b));
        let k = match pairs.iter().position(|p| *p == pair) {
            Some(k) => k,
            None => {
                pairs.push(pair);
                flips.push((pairs.len() - 1, Vec::new()));
                pairs.len() - 1
            }
        };
        flips[k].1.push(ci);
    }
    for (k, cs) in flips {
        let pick = (twist >> k) & 1;
        d = d.flip_crossing(crate::diagram::CrossingId(cs[pick as usize] as u32));
    }
    Ok(d.with_family(Family::Theta))
}

/// A theta-curve from the crossing sequence along each edge (all edges run
/// from the first node to the second). Bit `c` of `rot` puts the second
/// strand through crossing `c` right to left instead of left to right; bit
/// `c` of `over` puts the first strand over. `node_flip` reverses the
/// rotation at the second node.
fn theta_from_code(
    edges: [&[u32]; 3],
    node_flip: bool,
    rot: u32,
    over: u32,
) -> Result<SpatialDiagram> {
    let nc = edges.iter().map(|e| e.len()).sum::<usize>() / 2;
    let mut b = Builder::new(Family::Theta);
    let labels = [EdgeLabel::x(1), EdgeLabel::y(1), EdgeLabel::z(1)];
    let mut vis: Vec<Vec<(u32, u32)>> = vec![Vec::new(); nc];
    let mut ends = Vec::new();
    for (e, seq) in edges.iter().enumerate() {
        let l = Some(labels[e]);
        let start = b.alloc(l);
        let mut prev = start;
        for &c in seq.iter() {
            let i = b.alloc(l);
            let o = b.alloc(l);
            b.link(prev, i);
            vis[c as usize].push((i, o));
            prev = o;
        }
        let end = b.alloc(l);
        b.link(prev, end);
        ends.push((start, end));
    }
    for (c, v) in vis.iter().enumerate() {
        let ((ai, ao), (bi, bo)) = (v[0], v[1]);
        let cyc = if rot >> c & 1 == 0 {
            [ai, bi, ao, bo]
        } else {
            [ai, bo, ao, bi]
        };
        let s = if over >> c & 1 == 0 {
            cyc
        } else {
            [cyc[1], cyc[2], cyc[3], cyc[0]]
        };
        b.add_crossing(s);
    }
    b.add_node(vec![ends[0].0, ends[1].0, ends[2].0]);
    if node_flip {
        b.add_node(vec![ends[0].1, ends[2].1, ends[1].1]);
    } else {
        b.add_node(vec![ends[0].1, ends[1].1, ends[2].1]);
    }
    b.finish()
}

/// Kinoshita's theta-curve: five crossings, every constituent knot is the
/// unknot. Found by enumerating five-crossing theta diagrams; it is the only
/// Brunnian one (up to relabelling and mirror image) that no R1/R2 reduction,
/// vertex twist or search reduces. Telling it apart from the planar theta
/// needs invariants this crate does not compute.
pub fn kinoshita() -> Result<SpatialDiagram> {
    theta_from_code(
        [&[0, 1], &[2, 1, 3, 4], &[4, 3, 0, 2]],
        false,
        0b01010,
        0b01110,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{crossing_matrix, validate};
    use crate::invariants::jones;

    #[test]
    fn planar_theta_is_valid() {
        let d = planar_theta();
        assert!(validate(&d).is_valid());
        assert_eq!(d.faces().len(), 3);
    }

    #[test]
    fn theta_matrix() {
        let d = build_theta(&KnotSpec::named("3_1"), &KnotSpec::named("4_1")).unwrap();
        assert!(validate(&d).is_valid(), "{:?}", validate(&d));
        let m = crossing_matrix(&d).unwrap();
        assert_eq!(m.get(EdgeLabel::x(1), EdgeLabel::x(1)), 3);
        assert_eq!(m.get(EdgeLabel::z(1), EdgeLabel::z(1)), 4);
        assert_eq!(m.total(), 7);
        assert!(m.off_diagonal_zero());
    }

    #[test]
    fn sum_multiplies_jones() {
        let t = KnotTable::get();
        let a = &t.entry("3_1").unwrap().diagram;
        let b = &t.entry("4_1").unwrap().diagram;
        let s = connected_sum(a, b).unwrap();
        assert_eq!(s.num_crossings(), 7);
        assert_eq!(jones(&s).unwrap(), &jones(a).unwrap() * &jones(b).unwrap());
    }
}
