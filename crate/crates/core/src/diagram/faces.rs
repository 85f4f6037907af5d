use super::{HalfEdge, SpatialDiagram, Vertex};

/// A face boundary walk. Dart `h` runs from the vertex of `h` along its arc;
/// the face lies to the left of every dart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<HalfEdge>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }
}

impl SpatialDiagram {
    /// Successor of dart `h` along its face.
    #[inline]
    pub fn face_next(&self, h: HalfEdge) -> HalfEdge {
        self.prev_ccw(self.partner(h))
    }

    /// All faces, ordered by smallest dart; each walk starts at its smallest
    /// dart.
    pub fn faces(&self) -> Vec<Face> {
        let n = self.num_half_edges();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.try_attach(HalfEdge(start as u32)).is_none() {
                continue;
            }
            let mut darts = Vec::new();
            let mut h = HalfEdge(start as u32);
            while !seen[h.idx()] {
                seen[h.idx()] = true;
                darts.push(h);
                h = self.face_next(h);
            }
            out.push(Face { darts });
        }
        out
    }

    /// Map from dart to index into [`SpatialDiagram::faces`].
    pub fn face_of_darts(&self, faces: &[Face]) -> Vec<usize> {
        let mut idx = vec![usize::MAX; self.num_half_edges()];
        for (fi, f) in faces.iter().enumerate() {
            for h in &f.darts {
                idx[h.idx()] = fi;
            }
        }
        idx
    }

    /// V - E + F for each connected component, in [`SpatialDiagram::components`]
    /// order.
    pub fn euler_characteristics(&self) -> Vec<i64> {
        let comps = self.components();
        let mut comp_of = vec![0usize; self.num_vertices()];
        for (ci, vs) in comps.iter().enumerate() {
            for v in vs {
                comp_of[self.vertex_index(*v)] = ci;
            }
        }
        let mut chi: Vec<i64> = comps
            .iter()
            .map(|vs| {
                let deg: i64 = vs.iter().map(|v| self.rotation(*v).len() as i64).sum();
                vs.len() as i64 - deg / 2
            })
            .collect();
        for f in self.faces() {
            let v = self.vertex(f.darts[0]);
            chi[comp_of[self.vertex_index(v)]] += 1;
        }
        chi
    }

    /// True if vertex `v` appears on the boundary of face `f`.
    pub fn face_touches(&self, f: &Face, v: Vertex) -> bool {
        f.darts.iter().any(|&h| self.vertex(h) == v)
    }
}
