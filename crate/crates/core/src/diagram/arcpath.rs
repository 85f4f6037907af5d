use std::collections::BTreeSet;

use super::builder::Builder;
use super::matrix::{erase_small_nodes, strip_labels};
use super::{CrossingMatrix, EdgeLabel, Family, HalfEdge, NodeId, SpatialDiagram, Vertex};
use crate::error::{Error, Result};

/// A path between the two nodes that meets the diagram only at its ends.
/// `corners` gives, for each end, the node half-edge whose face γ leaves
/// through (γ sits just counterclockwise of it).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcPath {
    pub faces: Vec<usize>,
    pub endpoints: (NodeId, NodeId),
    pub corners: (HalfEdge, HalfEdge),
}

impl ArcPath {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }
}

fn two_nodes(d: &SpatialDiagram) -> Result<(NodeId, NodeId)> {
    let big: Vec<usize> = (0..d.num_nodes())
        .filter(|&i| d.nodes()[i].len() >= 3)
        .collect();
    if big.len() != 2 || d.num_nodes() != 2 {
        return Err(Error::Precondition(format!(
            "expected exactly two graph nodes, found {}",
            d.num_nodes()
        )));
    }
    Ok((NodeId(big[0] as u32), NodeId(big[1] as u32)))
}

/// Find γ from `n1` to `n2` for a theta-type diagram whose edges cross only
/// themselves. Faces are scanned in order and the first face whose boundary
/// touches both nodes is used.
pub fn connecting_arc(d: &SpatialDiagram) -> Result<ArcPath> {
    let (n1, n2) = two_nodes(d)?;
    let m = CrossingMatrix::of(d)?;
    if !m.off_diagonal_zero() {
        return Err(Error::Precondition(format!(
            "edges cross each other ({} crossings between distinct edges)",
            m.off_diagonal_sum()
        )));
    }
    let faces = d.faces();
    for (fi, f) in faces.iter().enumerate() {
        let at = |n: NodeId| {
            f.darts
                .iter()
                .copied()
                .find(|&h| d.vertex(h) == Vertex::Node(n))
        };
        if let (Some(a), Some(b)) = (at(n1), at(n2)) {
            return Ok(ArcPath {
                faces: vec![fi],
                endpoints: (n1, n2),
                corners: (a, b),
            });
        }
    }
    Err(Error::Internal(
        "no face touches both nodes although no two edges cross; \
         a valid diagram always has one, so this one is malformed"
            .into(),
    ))
}

/// Close each graph edge with γ, giving one knot diagram per edge, in label
/// order. Each output keeps exactly the self-crossings of its edge.
pub fn split_along(d: &SpatialDiagram, gamma: &ArcPath) -> Result<Vec<SpatialDiagram>> {
    let (n1, n2) = two_nodes(d)?;
    if gamma.endpoints != (n1, n2) || gamma.is_empty() {
        return Err(Error::Precondition(
            "path does not join the two nodes".into(),
        ));
    }
    let all = d.label_set();
    let mut out = Vec::with_capacity(all.len());
    for &keep in &all {
        let del: BTreeSet<EdgeLabel> = all.iter().copied().filter(|&l| l != keep).collect();
        let mut b = Builder::from_diagram(d);
        let changed = strip_labels(&mut b, &del);
        // both node stubs now have valence 1; γ joins them
        let s1 = b.nodes[n1.idx()].take().unwrap_or_default();
        let s2 = b.nodes[n2.idx()].take().unwrap_or_default();
        if s1.len() != 1 || s2.len() != 1 {
            return Err(Error::Precondition(format!(
                "edge {keep} does not run from one node to the other"
            )));
        }
        b.bypass(s1[0], s2[0]);
        erase_small_nodes(&mut b, &changed)?;
        b.family = Family::Knot;
        out.push(b.finish()?);
    }
    Ok(out)
}
