//! Combinatorial diagrams of knots and spatial graphs.
//!
//! A diagram is a set of 4-valent crossings and graph nodes glued together by
//! arcs. Every vertex lists its half-edges in counterclockwise order; a
//! crossing lists them starting from the under-strand, so slots 0 and 2 are
//! the under-strand and slots 1 and 3 the over-strand. Arcs pair half-edges.
//! No coordinates are stored; the rotation system determines the embedding in
//! the sphere.

mod arcpath;
pub(crate) mod builder;
mod canon;
mod faces;
pub(crate) mod matrix;
mod sgd;
mod validate;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use arcpath::{connecting_arc, split_along, ArcPath};
pub use canon::canonical_code;
pub use faces::Face;
pub use matrix::{crossing_matrix, delete_edge, delete_edges, strand_count, CrossingMatrix};
pub use sgd::{parse_sgd, serialize_sgd};
pub use validate::{validate, ValidationReport, Violation};

pub(crate) const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfEdge(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrossingId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcId(pub u32);

impl HalfEdge {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

impl CrossingId {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

impl NodeId {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

impl ArcId {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

/// Where a half-edge is attached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Attach {
    Crossing(CrossingId, u8),
    Node(NodeId, u16),
}

/// A vertex of the underlying planar graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Crossing(CrossingId),
    Node(NodeId),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LabelFamily {
    X,
    Y,
    Z,
    H,
}

impl LabelFamily {
    pub fn letter(self) -> char {
        match self {
            LabelFamily::X => 'x',
            LabelFamily::Y => 'y',
            LabelFamily::Z => 'z',
            LabelFamily::H => 'h',
        }
    }
}

/// Name of a graph edge, such as `x1`, `z2` or `h3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeLabel {
    pub family: LabelFamily,
    pub index: u32,
}

impl EdgeLabel {
    pub const fn new(family: LabelFamily, index: u32) -> Self {
        EdgeLabel { family, index }
    }
    pub const fn x(index: u32) -> Self {
        EdgeLabel::new(LabelFamily::X, index)
    }
    pub const fn y(index: u32) -> Self {
        EdgeLabel::new(LabelFamily::Y, index)
    }
    pub const fn z(index: u32) -> Self {
        EdgeLabel::new(LabelFamily::Z, index)
    }
    pub const fn h(index: u32) -> Self {
        EdgeLabel::new(LabelFamily::H, index)
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.index)
    }
}

impl FromStr for EdgeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            line: 0,
            msg: format!("bad edge label `{s}`"),
        };
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('x') => LabelFamily::X,
            Some('y') => LabelFamily::Y,
            Some('z') => LabelFamily::Z,
            Some('h') => LabelFamily::H,
            _ => return Err(bad()),
        };
        let rest = chars.as_str();
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let index = rest.parse().map_err(|_| bad())?;
        Ok(EdgeLabel { family, index })
    }
}

/// Which family of diagrams a diagram belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Knot,
    Theta,
    ThetaN(usize),
    Oplus(usize, usize),
    G(usize, usize, usize),
    Raw,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Knot => write!(f, "knot"),
            Family::Theta => write!(f, "theta"),
            Family::ThetaN(n) => write!(f, "theta-n {n}"),
            Family::Oplus(n, k) => write!(f, "oplus {n} {k}"),
            Family::G(n, k, i) => write!(f, "G {n} {k} {i}"),
            Family::Raw => write!(f, "raw"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split_whitespace().collect();
        let num = |i: usize| -> Result<usize> {
            parts
                .get(i)
                .and_then(|p| p.parse().ok())
                .ok_or_else(|| Error::Parse {
                    line: 0,
                    msg: format!("bad family parameters in `{s}`"),
                })
        };
        let fam = match parts.first().copied() {
            Some("knot") => Family::Knot,
            Some("theta") => Family::Theta,
            Some("theta-n") => Family::ThetaN(num(1)?),
            Some("oplus") => Family::Oplus(num(1)?, num(2)?),
            Some("G") => Family::G(num(1)?, num(2)?, num(3)?),
            Some("raw") => Family::Raw,
            _ => {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("unknown family `{s}`"),
                })
            }
        };
        Ok(fam)
    }
}

/// A combinatorial knot or spatial-graph diagram.
///
/// Identifiers are dense: crossing `i` is `crossings()[i]`, and so on. Values
/// are immutable; every transformation returns a fresh diagram.
#[derive(Debug, Clone)]
pub struct SpatialDiagram {
    crossings: Vec<[HalfEdge; 4]>,
    nodes: Vec<Vec<HalfEdge>>,
    arcs: Vec<[HalfEdge; 2]>,
    labels: Vec<Option<EdgeLabel>>,
    family: Family,
    partner: Vec<u32>,
    attach: Vec<Option<Attach>>,
    arc_of: Vec<u32>,
}

/// A single-component knot diagram. Same representation, different intent.
pub type KnotDiagram = SpatialDiagram;

impl PartialEq for SpatialDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.crossings == other.crossings
            && self.nodes == other.nodes
            && self.arcs == other.arcs
            && self.labels == other.labels
            && self.family == other.family
    }
}

impl Eq for SpatialDiagram {}

impl SpatialDiagram {
    /// Assemble a diagram from raw parts. Never fails; malformed input is
    /// reported by [`validate`].
    pub fn from_parts(
        crossings: Vec<[HalfEdge; 4]>,
        nodes: Vec<Vec<HalfEdge>>,
        arcs: Vec<[HalfEdge; 2]>,
        mut labels: Vec<Option<EdgeLabel>>,
        family: Family,
    ) -> Self {
        labels.resize(arcs.len(), None);
        let max_id = crossings
            .iter()
            .flat_map(|c| c.iter())
            .chain(nodes.iter().flat_map(|n| n.iter()))
            .chain(arcs.iter().flat_map(|a| a.iter()))
            .map(|h| h.0 as usize + 1)
            .max()
            .unwrap_or(0);
        let mut partner = vec![NONE; max_id];
        let mut attach = vec![None; max_id];
        let mut arc_of = vec![NONE; max_id];
        for (ci, slots) in crossings.iter().enumerate() {
            for (s, h) in slots.iter().enumerate() {
                attach[h.idx()].get_or_insert(Attach::Crossing(CrossingId(ci as u32), s as u8));
            }
        }
        for (ni, rot) in nodes.iter().enumerate() {
            for (s, h) in rot.iter().enumerate() {
                attach[h.idx()].get_or_insert(Attach::Node(NodeId(ni as u32), s as u16));
            }
        }
        for (ai, [a, b]) in arcs.iter().enumerate() {
            if partner[a.idx()] == NONE {
                partner[a.idx()] = b.0;
                arc_of[a.idx()] = ai as u32;
            }
            if partner[b.idx()] == NONE {
                partner[b.idx()] = a.0;
                arc_of[b.idx()] = ai as u32;
            }
        }
        SpatialDiagram {
            crossings,
            nodes,
            arcs,
            labels,
            family,
            partner,
            attach,
            arc_of,
        }
    }

    /// The crossing-free single loop (one valence-2 marker node).
    pub fn unknot() -> Self {
        SpatialDiagram::from_parts(
            vec![],
            vec![vec![HalfEdge(0), HalfEdge(1)]],
            vec![[HalfEdge(0), HalfEdge(1)]],
            vec![Some(EdgeLabel::x(1))],
            Family::Knot,
        )
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn with_family(mut self, family: Family) -> Self {
        self.family = family;
        self
    }

    pub fn crossings(&self) -> &[[HalfEdge; 4]] {
        &self.crossings
    }

    pub fn crossing(&self, c: CrossingId) -> [HalfEdge; 4] {
        self.crossings[c.idx()]
    }

    pub fn nodes(&self) -> &[Vec<HalfEdge>] {
        &self.nodes
    }

    pub fn node(&self, n: NodeId) -> &[HalfEdge] {
        &self.nodes[n.idx()]
    }

    pub fn arcs(&self) -> &[[HalfEdge; 2]] {
        &self.arcs
    }

    pub fn labels(&self) -> &[Option<EdgeLabel>] {
        &self.labels
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn num_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn num_arcs(&self) -> usize {
        self.arcs.len()
    }

    pub fn num_half_edges(&self) -> usize {
        self.partner.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.crossings.len() + self.nodes.len()
    }

    #[inline]
    pub fn partner(&self, h: HalfEdge) -> HalfEdge {
        HalfEdge(self.partner[h.idx()])
    }

    #[inline]
    pub fn attach(&self, h: HalfEdge) -> Attach {
        self.attach[h.idx()].expect("detached half-edge")
    }

    pub(crate) fn try_attach(&self, h: HalfEdge) -> Option<Attach> {
        self.attach.get(h.idx()).copied().flatten()
    }

    #[inline]
    pub fn arc_of(&self, h: HalfEdge) -> ArcId {
        ArcId(self.arc_of[h.idx()])
    }

    pub fn label(&self, a: ArcId) -> Option<EdgeLabel> {
        self.labels[a.idx()]
    }

    pub fn label_of(&self, h: HalfEdge) -> Option<EdgeLabel> {
        self.labels[self.arc_of(h).idx()]
    }

    /// Replace every arc label with `label`.
    pub fn relabel_all(mut self, label: EdgeLabel) -> Self {
        for l in &mut self.labels {
            *l = Some(label);
        }
        self
    }

    pub(crate) fn set_labels(&mut self, labels: Vec<Option<EdgeLabel>>) {
        debug_assert_eq!(labels.len(), self.arcs.len());
        self.labels = labels;
    }

    /// Distinct labels in use.
    pub fn label_set(&self) -> BTreeSet<EdgeLabel> {
        self.labels.iter().flatten().copied().collect()
    }

    pub fn vertex(&self, h: HalfEdge) -> Vertex {
        match self.attach(h) {
            Attach::Crossing(c, _) => Vertex::Crossing(c),
            Attach::Node(n, _) => Vertex::Node(n),
        }
    }

    /// Dense index of a vertex: crossings first, then nodes.
    pub fn vertex_index(&self, v: Vertex) -> usize {
        match v {
            Vertex::Crossing(c) => c.idx(),
            Vertex::Node(n) => self.crossings.len() + n.idx(),
        }
    }

    pub fn rotation(&self, v: Vertex) -> &[HalfEdge] {
        match v {
            Vertex::Crossing(c) => &self.crossings[c.idx()],
            Vertex::Node(n) => &self.nodes[n.idx()],
        }
    }

    fn position(&self, h: HalfEdge) -> (Vertex, usize) {
        match self.attach(h) {
            Attach::Crossing(c, s) => (Vertex::Crossing(c), s as usize),
            Attach::Node(n, s) => (Vertex::Node(n), s as usize),
        }
    }

    /// Next half-edge counterclockwise around the same vertex.
    pub fn next_ccw(&self, h: HalfEdge) -> HalfEdge {
        let (v, s) = self.position(h);
        let rot = self.rotation(v);
        rot[(s + 1) % rot.len()]
    }

    /// Next half-edge clockwise around the same vertex.
    pub fn prev_ccw(&self, h: HalfEdge) -> HalfEdge {
        let (v, s) = self.position(h);
        let rot = self.rotation(v);
        rot[(s + rot.len() - 1) % rot.len()]
    }

    /// The half-edge straight across a crossing (`None` at nodes).
    pub fn opposite(&self, h: HalfEdge) -> Option<HalfEdge> {
        match self.attach(h) {
            Attach::Crossing(c, s) => Some(self.crossings[c.idx()][(s as usize + 2) % 4]),
            Attach::Node(..) => None,
        }
    }

    /// True if `h` sits on the under-strand of its crossing.
    pub fn is_under(&self, h: HalfEdge) -> bool {
        matches!(self.attach(h), Attach::Crossing(_, s) if s % 2 == 0)
    }

    /// Connected components of the underlying graph, as lists of vertices.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let nv = self.num_vertices();
        let mut parent: Vec<usize> = (0..nv).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for [a, b] in &self.arcs {
            if self.try_attach(*a).is_none() || self.try_attach(*b).is_none() {
                continue;
            }
            let va = self.vertex_index(self.vertex(*a));
            let vb = self.vertex_index(self.vertex(*b));
            let (ra, rb) = (find(&mut parent, va), find(&mut parent, vb));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut groups: Vec<Vec<Vertex>> = Vec::new();
        let mut slot = vec![usize::MAX; nv];
        for vi in 0..nv {
            let r = find(&mut parent, vi);
            if slot[r] == usize::MAX {
                slot[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[r]].push(self.vertex_at(vi));
        }
        groups
    }

    pub(crate) fn vertex_at(&self, vi: usize) -> Vertex {
        if vi < self.crossings.len() {
            Vertex::Crossing(CrossingId(vi as u32))
        } else {
            Vertex::Node(NodeId((vi - self.crossings.len()) as u32))
        }
    }

    /// Arcs carrying `label`.
    pub fn arcs_with_label(&self, label: EdgeLabel) -> Vec<ArcId> {
        (0..self.arcs.len() as u32)
            .map(ArcId)
            .filter(|a| self.labels[a.idx()] == Some(label))
            .collect()
    }

    /// Node half-edges in rotation order together with the label of the
    /// graph edge leaving through each of them.
    pub fn node_edge_labels(&self, n: NodeId) -> Vec<Option<EdgeLabel>> {
        self.nodes[n.idx()]
            .iter()
            .map(|&h| self.label_of(h))
            .collect()
    }

    /// Follow a strand from node half-edge `h` straight through crossings
    /// until it reaches a node. Returns the half-edges visited (pairs of arc
    /// ends) and the terminating node half-edge; `None` if the strand closes
    /// up without reaching a node.
    pub fn follow_edge(&self, start: HalfEdge) -> Option<(Vec<HalfEdge>, HalfEdge)> {
        let mut path = Vec::new();
        let mut h = start;
        loop {
            let p = self.partner(h);
            path.push(h);
            path.push(p);
            match self.attach(p) {
                Attach::Node(..) => return Some((path, p)),
                Attach::Crossing(..) => {
                    h = self.opposite(p).unwrap();
                    if h == start {
                        return None;
                    }
                }
            }
            if path.len() > 2 * self.partner.len() + 4 {
                return None;
            }
        }
    }

    /// Mirror image: over and under exchanged at every crossing.
    pub fn mirror(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .map(|&[a, b, c, d]| [b, c, d, a])
            .collect();
        SpatialDiagram::from_parts(
            crossings,
            self.nodes.clone(),
            self.arcs.clone(),
            self.labels.clone(),
            self.family,
        )
    }

    /// Flip a single crossing.
    pub fn flip_crossing(&self, c: CrossingId) -> Self {
        let mut crossings = self.crossings.clone();
        let [a, b, cc, d] = crossings[c.idx()];
        crossings[c.idx()] = [b, cc, d, a];
        SpatialDiagram::from_parts(
            crossings,
            self.nodes.clone(),
            self.arcs.clone(),
            self.labels.clone(),
            self.family,
        )
    }

    /// The part of the diagram on the given vertices, which must be a union
    /// of components. Nodes appear in the order given.
    pub fn subdiagram(
        &self,
        crossings: &[CrossingId],
        nodes: &[NodeId],
        family: Family,
    ) -> Result<Self> {
        let mut b = builder::Builder::from_diagram(self);
        let keep: BTreeSet<usize> = crossings.iter().map(|c| c.idx()).collect();
        for (i, c) in b.crossings.iter_mut().enumerate() {
            if !keep.contains(&i) {
                *c = None;
            }
        }
        let old = std::mem::take(&mut b.nodes);
        b.nodes = nodes.iter().map(|n| old[n.idx()].clone()).collect();
        b.family = family;
        b.finish()
    }

    /// Split into one diagram per connected component, in
    /// [`SpatialDiagram::components`] order.
    pub fn split_components(&self) -> Result<Vec<Self>> {
        self.components()
            .into_iter()
            .map(|vs| {
                let cs: Vec<CrossingId> = vs
                    .iter()
                    .filter_map(|v| match v {
                        Vertex::Crossing(c) => Some(*c),
                        _ => None,
                    })
                    .collect();
                let ns: Vec<NodeId> = vs
                    .iter()
                    .filter_map(|v| match v {
                        Vertex::Node(n) => Some(*n),
                        _ => None,
                    })
                    .collect();
                self.subdiagram(&cs, &ns, self.family)
            })
            .collect()
    }

    /// True if the diagram has no crossings and only valence-2 marker nodes,
    /// i.e. it is a union of crossing-free loops.
    pub fn is_trivial_loops(&self) -> bool {
        self.crossings.is_empty() && self.nodes.iter().all(|n| n.len() == 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_round_trip() {
        for s in ["x1", "y1", "z12", "h3"] {
            let l: EdgeLabel = s.parse().unwrap();
            assert_eq!(l.to_string(), s);
        }
        assert!("w1".parse::<EdgeLabel>().is_err());
        assert!("x".parse::<EdgeLabel>().is_err());
        assert!("x1a".parse::<EdgeLabel>().is_err());
    }

    #[test]
    fn family_round_trip() {
        for f in [
            Family::Knot,
            Family::Theta,
            Family::ThetaN(3),
            Family::Oplus(2, 1),
            Family::G(2, 3, 1),
            Family::Raw,
        ] {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
    }

    #[test]
    fn mirror_is_involution_up_to_rotation() {
        let d = SpatialDiagram::from_parts(
            vec![[HalfEdge(0), HalfEdge(1), HalfEdge(2), HalfEdge(3)]],
            vec![],
            vec![[HalfEdge(0), HalfEdge(1)], [HalfEdge(2), HalfEdge(3)]],
            vec![],
            Family::Raw,
        );
        let m = d.mirror();
        assert!(!m.is_under(HalfEdge(0)));
        assert!(m.mirror().mirror().mirror() == d);
    }
}
