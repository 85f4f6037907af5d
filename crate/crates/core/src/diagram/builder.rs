//! Mutable scratch representation used by every transformation. Half-edge
//! ids are allocated freely and compacted by [`Builder::finish`].

use super::{EdgeLabel, Family, HalfEdge, SpatialDiagram, NONE};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub(crate) struct Builder {
    pub crossings: Vec<Option<[u32; 4]>>,
    pub nodes: Vec<Option<Vec<u32>>>,
    pub partner: Vec<u32>,
    pub label: Vec<Option<EdgeLabel>>,
    pub family: Family,
}

impl Builder {
    pub fn new(family: Family) -> Self {
        Builder {
            crossings: Vec::new(),
            nodes: Vec::new(),
            partner: Vec::new(),
            label: Vec::new(),
            family,
        }
    }

    /// Copy a diagram, preserving all identifiers.
    pub fn from_diagram(d: &SpatialDiagram) -> Self {
        let mut b = Builder::new(d.family());
        let n = d.num_half_edges();
        b.partner = vec![NONE; n];
        b.label = vec![None; n];
        for (ai, [x, y]) in d.arcs().iter().enumerate() {
            b.partner[x.idx()] = y.0;
            b.partner[y.idx()] = x.0;
            let l = d.labels()[ai];
            b.label[x.idx()] = l;
            b.label[y.idx()] = l;
        }
        b.crossings = d
            .crossings()
            .iter()
            .map(|c| Some([c[0].0, c[1].0, c[2].0, c[3].0]))
            .collect();
        b.nodes = d
            .nodes()
            .iter()
            .map(|r| Some(r.iter().map(|h| h.0).collect()))
            .collect();
        b
    }

    /// Append a copy of `d` with all ids shifted. Returns the half-edge offset.
    pub fn absorb(&mut self, d: &SpatialDiagram) -> u32 {
        let off = self.partner.len() as u32;
        let n = d.num_half_edges();
        self.partner.extend(std::iter::repeat(NONE).take(n));
        self.label.extend(std::iter::repeat(None).take(n));
        for (ai, [x, y]) in d.arcs().iter().enumerate() {
            self.partner[(x.0 + off) as usize] = y.0 + off;
            self.partner[(y.0 + off) as usize] = x.0 + off;
            let l = d.labels()[ai];
            self.label[(x.0 + off) as usize] = l;
            self.label[(y.0 + off) as usize] = l;
        }
        for c in d.crossings() {
            self.crossings.push(Some([
                c[0].0 + off,
                c[1].0 + off,
                c[2].0 + off,
                c[3].0 + off,
            ]));
        }
        for r in d.nodes() {
            self.nodes.push(Some(r.iter().map(|h| h.0 + off).collect()));
        }
        off
    }

    pub fn alloc(&mut self, label: Option<EdgeLabel>) -> u32 {
        self.partner.push(NONE);
        self.label.push(label);
        (self.partner.len() - 1) as u32
    }

    pub fn add_crossing(&mut self, slots: [u32; 4]) -> usize {
        self.crossings.push(Some(slots));
        self.crossings.len() - 1
    }

    pub fn add_node(&mut self, rotation: Vec<u32>) -> usize {
        self.nodes.push(Some(rotation));
        self.nodes.len() - 1
    }

    #[inline]
    pub fn partner(&self, h: u32) -> u32 {
        self.partner[h as usize]
    }

    /// Pair two half-edges into an arc; the arc takes `label` if given.
    pub fn link(&mut self, a: u32, b: u32) {
        self.partner[a as usize] = b;
        self.partner[b as usize] = a;
    }

    pub fn link_labeled(&mut self, a: u32, b: u32, label: Option<EdgeLabel>) {
        self.link(a, b);
        self.label[a as usize] = label;
        self.label[b as usize] = label;
    }

    /// Remove the vertex-side half-edges `a` and `b` (both on a vertex being
    /// deleted, on the same strand) and join what they were connected to.
    /// Chains of bypasses compose; a strand that closes on itself becomes a
    /// crossing-free loop carried by a marker node.
    pub fn bypass(&mut self, a: u32, b: u32) {
        let pa = self.partner(a);
        let pb = self.partner(b);
        if pa == b {
            let l = self.label[a as usize].or(self.label[b as usize]);
            self.add_free_loop(l);
        } else {
            self.partner[pa as usize] = pb;
            self.partner[pb as usize] = pa;
        }
        self.partner[a as usize] = NONE;
        self.partner[b as usize] = NONE;
    }

    pub fn add_free_loop(&mut self, label: Option<EdgeLabel>) {
        let u = self.alloc(label);
        let v = self.alloc(label);
        self.link(u, v);
        self.add_node(vec![u, v]);
    }

    /// Drop both ends of the arc containing `h` (they must also be removed
    /// from their vertices by the caller).
    pub fn cut_arc(&mut self, h: u32) {
        let p = self.partner(h);
        self.partner[h as usize] = NONE;
        if p != NONE {
            self.partner[p as usize] = NONE;
        }
    }

    pub fn take_crossing(&mut self, c: usize) -> [u32; 4] {
        self.crossings[c].take().expect("crossing already removed")
    }

    /// Compact ids and produce an immutable diagram. Half-edges are renumbered
    /// in order of appearance (crossings, then nodes); arcs are ordered by
    /// their smaller end.
    pub fn finish(self) -> Result<SpatialDiagram> {
        let mut new_id = vec![NONE; self.partner.len()];
        let mut next = 0u32;
        let mut crossings = Vec::new();
        for c in self.crossings.iter().flatten() {
            let mut slots = [HalfEdge(0); 4];
            for (k, &h) in c.iter().enumerate() {
                if new_id[h as usize] != NONE {
                    return Err(Error::Internal(format!("half-edge {h} attached twice")));
                }
                new_id[h as usize] = next;
                slots[k] = HalfEdge(next);
                next += 1;
            }
            crossings.push(slots);
        }
        let mut nodes = Vec::new();
        for r in self.nodes.iter().flatten() {
            if r.is_empty() {
                continue;
            }
            let mut rot = Vec::with_capacity(r.len());
            for &h in r {
                if new_id[h as usize] != NONE {
                    return Err(Error::Internal(format!("half-edge {h} attached twice")));
                }
                new_id[h as usize] = next;
                rot.push(HalfEdge(next));
                next += 1;
            }
            nodes.push(rot);
        }
        let mut old_of = vec![NONE; next as usize];
        for (old, &n) in new_id.iter().enumerate() {
            if n != NONE {
                old_of[n as usize] = old as u32;
            }
        }
        let mut arcs = Vec::new();
        let mut labels = Vec::new();
        for h in 0..next {
            let old = old_of[h as usize];
            let p = self.partner[old as usize];
            if p == NONE || new_id[p as usize] == NONE {
                return Err(Error::Internal(format!(
                    "half-edge {old} has no live partner"
                )));
            }
            if self.partner[p as usize] != old {
                return Err(Error::Internal(format!("asymmetric pairing at {old}")));
            }
            let np = new_id[p as usize];
            if np == h {
                return Err(Error::Internal(format!(
                    "half-edge {old} paired with itself"
                )));
            }
            if np > h {
                arcs.push([HalfEdge(h), HalfEdge(np)]);
                let (la, lb) = (self.label[old as usize], self.label[p as usize]);
                labels.push(match (la, lb) {
                    (Some(a), Some(b)) => Some(a.min(b)),
                    (a, b) => a.or(b),
                });
            }
        }
        Ok(SpatialDiagram::from_parts(
            crossings,
            nodes,
            arcs,
            labels,
            self.family,
        ))
    }
}
