//! Reidemeister moves for spatial-graph diagrams, slides of a strand past a
//! node, and a bounded search for diagrams with fewer crossings.

mod corpus;
mod search;

use std::fmt;

use crate::diagram::builder::Builder;
use crate::diagram::{Attach, CrossingId, HalfEdge, NodeId, SpatialDiagram};
use crate::error::{Error, Result};

pub use corpus::{crossing_free_bases, random_corpus, scramble, CorpusEntry};
pub use search::{simplify, SearchResult};

/// A move and its site. Half-edges, crossings and nodes refer to the
/// diagram the move is applied to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    /// Add a kink on the arc of `dart`, in the face to its left or right.
    /// `first_under`: the strand passes under on its first visit.
    R1Plus {
        dart: HalfEdge,
        left: bool,
        first_under: bool,
    },
    /// Remove the kink at a crossing with a loop between adjacent slots.
    R1Minus { crossing: CrossingId },
    /// Push the arc of `first` across the arc of `second`; both darts must
    /// border the same face.
    R2Plus {
        first: HalfEdge,
        second: HalfEdge,
        first_over: bool,
    },
    /// Remove the bigon to the left of `dart`.
    R2Minus { dart: HalfEdge },
    /// Pass a strand across the crossing opposite it in the triangle to the
    /// left of `dart`.
    R3 { dart: HalfEdge },
    /// A strand crosses `count` consecutive edges at `node`, starting at
    /// rotation slot `start`, each at its first crossing from the node.
    /// Move it across the node so it crosses the other edges instead.
    VSlide {
        node: NodeId,
        start: usize,
        count: usize,
    },
}

impl Move {
    pub fn kind(&self) -> &'static str {
        match self {
            Move::R1Plus { .. } => "R1+",
            Move::R1Minus { .. } => "R1-",
            Move::R2Plus { .. } => "R2+",
            Move::R2Minus { .. } => "R2-",
            Move::R3 { .. } => "R3",
            Move::VSlide { .. } => "V-slide",
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Move::R1Plus {
                dart,
                left,
                first_under,
            } => write!(
                f,
                "R1+ h{} {} {}",
                dart.0,
                if left { "left" } else { "right" },
                if first_under { "under" } else { "over" }
            ),
            Move::R1Minus { crossing } => write!(f, "R1- c{}", crossing.0),
            Move::R2Plus {
                first,
                second,
                first_over,
            } => write!(
                f,
                "R2+ h{} h{} {}",
                first.0,
                second.0,
                if first_over { "over" } else { "under" }
            ),
            Move::R2Minus { dart } => write!(f, "R2- h{}", dart.0),
            Move::R3 { dart } => write!(f, "R3 h{}", dart.0),
            Move::VSlide { node, start, count } => {
                write!(f, "V-slide n{} {} {}", node.0, start, count)
            }
        }
    }
}

fn bad(m: &Move, why: &str) -> Error {
    Error::InvalidMove(format!("{m}: {why}"))
}

fn crossing_of(d: &SpatialDiagram, h: HalfEdge) -> Option<(usize, usize)> {
    match d.attach(h) {
        Attach::Crossing(c, s) => Some((c.idx(), s as usize)),
        Attach::Node(..) => None,
    }
}

fn check_dart(d: &SpatialDiagram, m: &Move, h: HalfEdge) -> Result<()> {
    if h.idx() >= d.num_half_edges() || d.try_attach(h).is_none() {
        return Err(bad(m, "no such half-edge"));
    }
    Ok(())
}

/// Crossing-count change made by a move, if it is valid.
pub fn delta(d: &SpatialDiagram, m: &Move) -> Option<i64> {
    Some(match *m {
        Move::R1Plus { .. } => 1,
        Move::R1Minus { .. } => -1,
        Move::R2Plus { .. } => 2,
        Move::R2Minus { .. } => -2,
        Move::R3 { .. } => 0,
        Move::VSlide { node, count, .. } => {
            d.nodes().get(node.idx())?.len() as i64 - 2 * count as i64
        }
    })
}

/// Apply a move, returning a fresh diagram.
pub fn apply(d: &SpatialDiagram, m: &Move) -> Result<SpatialDiagram> {
    match *m {
        Move::R1Plus {
            dart,
            left,
            first_under,
        } => r1_plus(d, m, dart, left, first_under),
        Move::R1Minus { crossing } => r1_minus(d, m, crossing),
        Move::R2Plus {
            first,
            second,
            first_over,
        } => r2_plus(d, m, first, second, first_over),
        Move::R2Minus { dart } => r2_minus(d, m, dart),
        Move::R3 { dart } => r3(d, m, dart),
        Move::VSlide { node, start, count } => v_slide(d, m, node, start, count),
    }
}

fn r1_plus(
    d: &SpatialDiagram,
    m: &Move,
    h: HalfEdge,
    left: bool,
    first_under: bool,
) -> Result<SpatialDiagram> {
    check_dart(d, m, h)?;
    let mut b = Builder::from_diagram(d);
    let l = d.label_of(h);
    let q = b.partner(h.0);
    let [s, e, n, w] = std::array::from_fn(|_| b.alloc(l));
    // the strand enters from the west, leaves east into the loop, comes
    // back north (left) or south (right) and leaves the other way
    b.link(h.0, w);
    if left {
        b.link(e, n);
        b.link(s, q);
    } else {
        b.link(e, s);
        b.link(n, q);
    }
    b.add_crossing(if first_under {
        [w, s, e, n]
    } else {
        [s, e, n, w]
    });
    b.finish()
}

/// Slots `(i, i+1)` of a crossing joined by a single arc, if any.
fn kink_slot(d: &SpatialDiagram, c: usize) -> Option<usize> {
    let x = d.crossings()[c];
    (0..4).find(|&i| d.partner(x[i]) == x[(i + 1) % 4])
}

fn r1_minus(d: &SpatialDiagram, m: &Move, c: CrossingId) -> Result<SpatialDiagram> {
    if c.idx() >= d.num_crossings() {
        return Err(bad(m, "no such crossing"));
    }
    let i = kink_slot(d, c.idx()).ok_or_else(|| bad(m, "no kink at this crossing"))?;
    let x = d.crossings()[c.idx()];
    let mut b = Builder::from_diagram(d);
    b.take_crossing(c.idx());
    b.cut_arc(x[i].0);
    b.bypass(x[(i + 2) % 4].0, x[(i + 3) % 4].0);
    b.finish()
}

fn r2_plus(
    d: &SpatialDiagram,
    m: &Move,
    a: HalfEdge,
    bd: HalfEdge,
    a_over: bool,
) -> Result<SpatialDiagram> {
    check_dart(d, m, a)?;
    check_dart(d, m, bd)?;
    if a == bd || d.partner(a) == bd {
        return Err(bad(m, "darts lie on the same arc"));
    }
    let f = face_of(d, a);
    if !f.contains(&bd) {
        return Err(bad(m, "darts do not share a face"));
    }
    let (la, lb) = (d.label_of(a), d.label_of(bd));
    let mut b = Builder::from_diagram(d);
    let (qa, qb) = (b.partner(a.0), b.partner(bd.0));
    // first crossing c1, where the finger of A goes out across B, then c2
    let [a1s, a1n, b1e, b1w] = [b.alloc(la), b.alloc(la), b.alloc(lb), b.alloc(lb)];
    let [a2s, a2n, b2e, b2w] = [b.alloc(la), b.alloc(la), b.alloc(lb), b.alloc(lb)];
    b.link(a.0, a1s);
    b.link(a1n, a2n);
    b.link(a2s, qa);
    b.link(bd.0, b2e);
    b.link(b2w, b1e);
    b.link(b1w, qb);
    if a_over {
        b.add_crossing([b1e, a1n, b1w, a1s]);
        b.add_crossing([b2w, a2s, b2e, a2n]);
    } else {
        b.add_crossing([a1s, b1e, a1n, b1w]);
        b.add_crossing([a2n, b2w, a2s, b2e]);
    }
    b.finish()
}

fn face_of(d: &SpatialDiagram, h: HalfEdge) -> Vec<HalfEdge> {
    let mut out = vec![h];
    let mut x = d.face_next(h);
    while x != h {
        out.push(x);
        x = d.face_next(x);
    }
    out
}

/// The bigon to the left of `h`, if it can be removed: two distinct
/// crossings, with one arc over at both ends and the other under at both.
fn r2_site(d: &SpatialDiagram, h: HalfEdge) -> Option<(HalfEdge, HalfEdge)> {
    let f = face_of(d, h);
    if f.len() != 2 {
        return None;
    }
    let (d1, d2) = (f[0], f[1]);
    let (c1, _) = crossing_of(d, d1)?;
    let (c2, _) = crossing_of(d, d2)?;
    if c1 == c2 {
        return None;
    }
    let (p1, p2) = (d.partner(d1), d.partner(d2));
    let u1 = d.is_under(d1);
    let u2 = d.is_under(d2);
    (u1 == d.is_under(p1) && u2 == d.is_under(p2) && u1 != u2).then_some((d1, d2))
}

fn r2_minus(d: &SpatialDiagram, m: &Move, h: HalfEdge) -> Result<SpatialDiagram> {
    check_dart(d, m, h)?;
    let (d1, d2) = r2_site(d, h).ok_or_else(|| bad(m, "not a removable bigon"))?;
    let (c1, _) = crossing_of(d, d1).unwrap();
    let (c2, _) = crossing_of(d, d2).unwrap();
    let (p1, p2) = (d.partner(d1), d.partner(d2));
    let o = |x: HalfEdge| d.opposite(x).unwrap().0;
    let mut b = Builder::from_diagram(d);
    b.take_crossing(c1);
    b.take_crossing(c2);
    b.cut_arc(d1.0);
    b.cut_arc(d2.0);
    b.bypass(o(d1), o(p1));
    b.bypass(o(d2), o(p2));
    b.finish()
}

/// Triangle data for R3: per side `t` (dart at crossing `c[t]` running to
/// `c[t+1]`), the internal half-edges at both ends.
struct Triangle {
    darts: [HalfEdge; 3],
}

fn r3_site(d: &SpatialDiagram, h: HalfEdge) -> Option<Triangle> {
    let f = face_of(d, h);
    if f.len() != 3 {
        return None;
    }
    let darts = [f[0], f[1], f[2]];
    let mut cs = [0usize; 3];
    for t in 0..3 {
        cs[t] = crossing_of(d, darts[t])?.0;
    }
    if cs[0] == cs[1] || cs[1] == cs[2] || cs[0] == cs[2] {
        return None;
    }
    // some strand must be over at both its triangle crossings or under at both
    let movable = darts
        .iter()
        .any(|&t| d.is_under(t) == d.is_under(d.partner(t)));
    if !movable {
        return None;
    }
    // external arcs must leave the triangle
    let mut ext = Vec::with_capacity(6);
    for &t in &darts {
        ext.push(d.opposite(t)?);
        ext.push(d.opposite(d.partner(t))?);
    }
    for &e in &ext {
        let p = d.partner(e);
        if ext.contains(&p) {
            return None;
        }
    }
    Some(Triangle { darts })
}

fn r3(d: &SpatialDiagram, m: &Move, h: HalfEdge) -> Result<SpatialDiagram> {
    check_dart(d, m, h)?;
    let tri = r3_site(d, h).ok_or_else(|| bad(m, "not a movable triangle"))?;
    let mut b = Builder::from_diagram(d);
    for &t in &tri.darts {
        // side t runs from internal end i0 to i1 along one strand
        let i0 = t;
        let i1 = d.partner(t);
        let e0 = d.opposite(i0).unwrap();
        let e1 = d.opposite(i1).unwrap();
        let (p0, p1) = (d.partner(e0), d.partner(e1));
        // each crossing swaps its internal and external slots on this strand
        b.link(i0.0, p1.0);
        b.link(i1.0, p0.0);
        b.link(e0.0, e1.0);
        let l = d.label_of(t);
        b.label[e0.idx()] = l;
        b.label[e1.idx()] = l;
        b.label[i0.idx()] = d.label_of(p1);
        b.label[i1.idx()] = d.label_of(p0);
    }
    b.finish()
}

/// Check a V-slide site and return, per crossed edge `j`, the edge's
/// half-edge `p_j` at the crossing; plus the strand's two outer ends.
struct SlideSite {
    p: Vec<HalfEdge>,
    a0: HalfEdge,
    s_last: HalfEdge,
    strand_over: bool,
}

fn slide_site(d: &SpatialDiagram, node: NodeId, start: usize, count: usize) -> Option<SlideSite> {
    let rot = d.nodes().get(node.idx())?;
    let mv = rot.len();
    if count == 0 || count >= mv || start >= mv {
        return None;
    }
    let mut p = Vec::with_capacity(count);
    let mut cs = Vec::with_capacity(count);
    for j in 0..count {
        let h = rot[(start + j) % mv];
        let pj = d.partner(h);
        let (c, _) = crossing_of(d, pj)?;
        if cs.contains(&c) {
            return None;
        }
        cs.push(c);
        p.push(pj);
    }
    let under = d.is_under(p[0]);
    if p.iter().any(|&x| d.is_under(x) != under) {
        return None;
    }
    let s: Vec<HalfEdge> = p.iter().map(|&x| d.prev_ccw(x)).collect();
    for j in 0..count - 1 {
        if d.partner(s[j]) != d.opposite(s[j + 1]).unwrap() {
            return None;
        }
    }
    let a0 = d.opposite(s[0]).unwrap();
    let s_last = s[count - 1];
    // the strand's outer ends and the crossed edges' far ends must lie
    // outside the cluster
    let mut inside: Vec<HalfEdge> = Vec::new();
    for &c in &cs {
        inside.extend_from_slice(&d.crossings()[c]);
    }
    let outer = [d.partner(a0), d.partner(s_last)]
        .into_iter()
        .chain(p.iter().map(|&x| d.partner(d.opposite(x).unwrap())));
    for x in outer {
        if inside.contains(&x) {
            return None;
        }
    }
    // the edges on the other side must lead away from both the node and
    // the cluster
    for t in count..mv {
        let q = d.partner(rot[(start + t) % mv]);
        if rot.contains(&q) || inside.contains(&q) {
            return None;
        }
    }
    Some(SlideSite {
        p,
        a0,
        s_last,
        strand_over: under,
    })
}

fn v_slide(
    d: &SpatialDiagram,
    m: &Move,
    node: NodeId,
    start: usize,
    count: usize,
) -> Result<SpatialDiagram> {
    let site = slide_site(d, node, start, count).ok_or_else(|| bad(m, "not a slidable strand"))?;
    let rot = d.nodes()[node.idx()].clone();
    let mv = rot.len();
    let sl = d.label_of(site.s_last);
    let mut b = Builder::from_diagram(d);
    let pa = b.partner(site.a0.0);
    let pb = b.partner(site.s_last.0);
    for &pj in &site.p {
        let (c, _) = crossing_of(d, pj).unwrap();
        b.take_crossing(c);
    }
    // drop the strand pieces inside the cluster, then rejoin each edge
    for &pj in &site.p {
        let s = d.prev_ccw(pj);
        b.cut_arc(s.0);
        b.cut_arc(d.opposite(s).unwrap().0);
    }
    for &pj in &site.p {
        b.bypass(pj.0, d.opposite(pj).unwrap().0);
    }
    // new crossings on the remaining edges, strand running counterclockwise
    // around the node from the far end of the old run back to its start
    let mut prev = pb;
    for t in count..mv {
        let h = rot[(start + t) % mv];
        let el = d.label_of(h);
        let q = b.partner(h.0);
        let ys = b.alloc(el);
        let yn = b.alloc(el);
        let ye = b.alloc(sl);
        let yw = b.alloc(sl);
        b.link(h.0, ys);
        b.link(yn, q);
        b.link(prev, ye);
        prev = yw;
        b.add_crossing(if site.strand_over {
            [ys, ye, yn, yw]
        } else {
            [ye, yn, yw, ys]
        });
    }
    b.link(prev, pa);
    b.finish()
}

/// Every valid move on `d`, in a fixed order: removals, R3, slides, then
/// R2+ and R1+ when `grow` is set.
pub fn enumerate(d: &SpatialDiagram, grow: bool) -> Vec<Move> {
    let mut out = Vec::new();
    for c in 0..d.num_crossings() {
        if kink_slot(d, c).is_some() {
            out.push(Move::R1Minus {
                crossing: CrossingId(c as u32),
            });
        }
    }
    let faces = d.faces();
    for f in &faces {
        let h = f.darts[0];
        if f.len() == 2 && r2_site(d, h).is_some() {
            out.push(Move::R2Minus { dart: h });
        }
    }
    for f in &faces {
        let h = f.darts[0];
        if f.len() == 3 && r3_site(d, h).is_some() {
            out.push(Move::R3 { dart: h });
        }
    }
    for (ni, rot) in d.nodes().iter().enumerate() {
        for start in 0..rot.len() {
            for count in 1..rot.len() {
                if slide_site(d, NodeId(ni as u32), start, count).is_some() {
                    out.push(Move::VSlide {
                        node: NodeId(ni as u32),
                        start,
                        count,
                    });
                }
            }
        }
    }
    if grow {
        for f in &faces {
            for (i, &a) in f.darts.iter().enumerate() {
                for &bd in &f.darts[i + 1..] {
                    if d.partner(a) == bd {
                        continue;
                    }
                    for first_over in [true, false] {
                        out.push(Move::R2Plus {
                            first: a,
                            second: bd,
                            first_over,
                        });
                    }
                }
            }
        }
        for h in 0..d.num_half_edges() as u32 {
            for left in [true, false] {
                for first_under in [true, false] {
                    out.push(Move::R1Plus {
                        dart: HalfEdge(h),
                        left,
                        first_under,
                    });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests;
