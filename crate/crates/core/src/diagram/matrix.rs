use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::builder::Builder;
use super::{EdgeLabel, Family, SpatialDiagram};
use crate::error::{Error, Result};

/// Crossings counted per unordered pair of edge labels. The diagonal counts
/// self-crossings of a single edge.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CrossingMatrix {
    labels: BTreeSet<EdgeLabel>,
    counts: BTreeMap<(EdgeLabel, EdgeLabel), usize>,
}

impl CrossingMatrix {
    pub fn of(d: &SpatialDiagram) -> Result<Self> {
        let mut labels = BTreeSet::new();
        for (ai, l) in d.labels().iter().enumerate() {
            match l {
                Some(l) => {
                    labels.insert(*l);
                }
                None => return Err(Error::Unlabeled(ai as u32)),
            }
        }
        let mut counts = BTreeMap::new();
        for c in d.crossings() {
            let a = d.label_of(c[0]).ok_or(Error::Unlabeled(d.arc_of(c[0]).0))?;
            let b = d.label_of(c[1]).ok_or(Error::Unlabeled(d.arc_of(c[1]).0))?;
            *counts.entry((a.min(b), a.max(b))).or_insert(0) += 1;
        }
        Ok(CrossingMatrix { labels, counts })
    }

    pub fn labels(&self) -> &BTreeSet<EdgeLabel> {
        &self.labels
    }

    pub fn get(&self, a: EdgeLabel, b: EdgeLabel) -> usize {
        self.counts.get(&(a.min(b), a.max(b))).copied().unwrap_or(0)
    }

    /// Nonzero entries with `a <= b`.
    pub fn entries(&self) -> impl Iterator<Item = ((EdgeLabel, EdgeLabel), usize)> + '_ {
        self.counts.iter().map(|(k, v)| (*k, *v))
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    /// Crossings that involve `a` at all, self-crossings counted once.
    pub fn row_sum(&self, a: EdgeLabel) -> usize {
        self.counts
            .iter()
            .filter(|((p, q), _)| *p == a || *q == a)
            .map(|(_, v)| v)
            .sum()
    }

    pub fn diagonal_sum(&self) -> usize {
        self.counts
            .iter()
            .filter(|((p, q), _)| p == q)
            .map(|(_, v)| v)
            .sum()
    }

    pub fn off_diagonal_sum(&self) -> usize {
        self.total() - self.diagonal_sum()
    }

    pub fn off_diagonal_zero(&self) -> bool {
        self.off_diagonal_sum() == 0
    }
}

impl fmt::Display for CrossingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<_> = self.labels.iter().copied().collect();
        write!(f, "{:>5}", "")?;
        for l in &labels {
            write!(f, "{:>5}", l.to_string())?;
        }
        writeln!(f)?;
        for a in &labels {
            write!(f, "{:>5}", a.to_string())?;
            for b in &labels {
                write!(f, "{:>5}", self.get(*a, *b))?;
            }
            writeln!(f)?;
        }
        write!(f, "total {}", self.total())
    }
}

pub fn crossing_matrix(d: &SpatialDiagram) -> Result<CrossingMatrix> {
    CrossingMatrix::of(d)
}

/// Strip every strand carrying a label in `del`: crossings on a deleted
/// strand disappear and the surviving strand is rejoined, and deleted
/// half-edges leave their nodes. Nodes are left in place, possibly with
/// reduced valence; the returned flags mark the nodes that lost half-edges.
pub(crate) fn strip_labels(b: &mut Builder, del: &BTreeSet<EdgeLabel>) -> Vec<bool> {
    let gone = |b: &Builder, h: u32| b.label[h as usize].is_some_and(|l| del.contains(&l));
    for ci in 0..b.crossings.len() {
        let Some(c) = b.crossings[ci] else { continue };
        let under = gone(b, c[0]);
        let over = gone(b, c[1]);
        if !under && !over {
            continue;
        }
        b.take_crossing(ci);
        if under {
            b.cut_arc(c[0]);
            b.cut_arc(c[2]);
        }
        if over {
            b.cut_arc(c[1]);
            b.cut_arc(c[3]);
        }
        if under && !over {
            b.bypass(c[1], c[3]);
        } else if over && !under {
            b.bypass(c[0], c[2]);
        }
    }
    let mut changed = vec![false; b.nodes.len()];
    for ni in 0..b.nodes.len() {
        let Some(rot) = b.nodes[ni].take() else {
            continue;
        };
        let mut kept = Vec::with_capacity(rot.len());
        for h in rot {
            if gone(b, h) {
                b.cut_arc(h);
                changed[ni] = true;
            } else {
                kept.push(h);
            }
        }
        b.nodes[ni] = Some(kept);
    }
    changed
}

/// Delete graph edge `e`. See [`delete_edges`].
pub fn delete_edge(d: &SpatialDiagram, e: EdgeLabel) -> Result<SpatialDiagram> {
    delete_edges(d, &[e])
}

/// Delete several graph edges at once. Crossings on a deleted edge are
/// smoothed away by rejoining the other strand, nodes that drop to valence 2
/// are erased, and emptied nodes vanish. A node left with valence 1 is an
/// error. Nodes that had valence 2 to begin with are kept.
///
/// Edges merged through an erased node take the smaller of their labels.
/// Knots keep the labels of the pieces they were made from. The result's
/// family is `Knot` when no node of valence 3 or more survives and the
/// diagram closes up into a single strand, and is `Raw` otherwise; callers
/// that know better override it.
pub fn delete_edges(d: &SpatialDiagram, es: &[EdgeLabel]) -> Result<SpatialDiagram> {
    let present = d.label_set();
    for e in es {
        if !present.contains(e) {
            return Err(Error::MissingLabel(*e));
        }
    }
    let del: BTreeSet<EdgeLabel> = es.iter().copied().collect();
    let mut b = Builder::from_diagram(d);
    let changed = strip_labels(&mut b, &del);
    erase_small_nodes(&mut b, &changed)?;
    let out = b.finish()?;
    let graphlike = out.nodes().iter().any(|r| r.len() >= 3);
    let out = if out.num_nodes() > 0 {
        normalize_edge_labels(&out)
    } else {
        out
    };
    let family = if !graphlike && strand_count(&out) == 1 {
        Family::Knot
    } else {
        Family::Raw
    };
    Ok(out.with_family(family))
}

/// Among the nodes flagged in `changed`, erase those left with valence 2
/// and drop empty ones. Valence 1 is reported as free ends.
pub(crate) fn erase_small_nodes(b: &mut Builder, changed: &[bool]) -> Result<()> {
    for ni in 0..changed.len() {
        if !changed[ni] {
            continue;
        }
        let Some(rot) = b.nodes[ni].as_ref() else {
            continue;
        };
        match rot.len() {
            0 => b.nodes[ni] = None,
            1 => return Err(Error::FreeEnds(ni as u32)),
            2 => {
                let rot = b.nodes[ni].take().unwrap();
                b.bypass(rot[0], rot[1]);
            }
            _ => {}
        }
    }
    Ok(())
}

/// Give every node-to-node edge a single label: the least label found on it.
pub(crate) fn normalize_edge_labels(d: &SpatialDiagram) -> SpatialDiagram {
    let mut labels = d.labels().to_vec();
    for r in d.nodes() {
        for &h in r {
            let Some((path, _)) = d.follow_edge(h) else {
                continue;
            };
            let best = path.iter().filter_map(|&p| d.label_of(p)).min();
            for &p in &path {
                labels[d.arc_of(p).idx()] = best;
            }
        }
    }
    let mut out = d.clone();
    out.set_labels(labels);
    out
}

/// Number of closed strands in a diagram without nodes of valence 3 or
/// more. Marker nodes are passed through.
pub fn strand_count(d: &SpatialDiagram) -> usize {
    let n = d.num_half_edges();
    let mut seen = vec![false; n];
    let mut count = 0;
    for start in 0..n {
        if seen[start] || d.try_attach(super::HalfEdge(start as u32)).is_none() {
            continue;
        }
        count += 1;
        let mut h = super::HalfEdge(start as u32);
        loop {
            if seen[h.idx()] {
                break;
            }
            seen[h.idx()] = true;
            let p = d.partner(h);
            seen[p.idx()] = true;
            h = match d.opposite(p) {
                Some(o) => o,
                None => {
                    let rot = d.rotation(d.vertex(p));
                    if rot.len() != 2 {
                        break;
                    }
                    if rot[0] == p {
                        rot[1]
                    } else {
                        rot[0]
                    }
                }
            };
        }
    }
    count
}
