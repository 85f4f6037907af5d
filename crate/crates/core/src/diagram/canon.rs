use super::{Attach, EdgeLabel, Family, HalfEdge, SpatialDiagram, Vertex};

fn label_code(l: Option<EdgeLabel>) -> u32 {
    match l {
        None => 0,
        Some(l) => ((l.family as u32 + 1) << 24) | l.index,
    }
}

fn family_code(f: Family) -> [u32; 4] {
    match f {
        Family::Knot => [0, 0, 0, 0],
        Family::Theta => [1, 0, 0, 0],
        Family::ThetaN(n) => [2, n as u32, 0, 0],
        Family::Oplus(n, k) => [3, n as u32, k as u32, 0],
        Family::G(n, k, i) => [4, n as u32, k as u32, i as u32],
        Family::Raw => [5, 0, 0, 0],
    }
}

/// Slot of `h` within its vertex rotation.
fn slot(d: &SpatialDiagram, h: HalfEdge) -> usize {
    match d.attach(h) {
        Attach::Crossing(_, s) => s as usize,
        Attach::Node(_, s) => s as usize,
    }
}

/// Encoding of the component containing `start`, read by breadth-first
/// search with `start` as the base half-edge of the first vertex.
fn encode_from(
    d: &SpatialDiagram,
    start: HalfEdge,
    number: &mut [u32],
    base: &mut [usize],
    best: Option<&[u32]>,
) -> Option<Vec<u32>> {
    let mut order: Vec<Vertex> = Vec::new();
    let mut touched: Vec<usize> = Vec::new();
    let first = d.vertex(start);
    let fi = d.vertex_index(first);
    number[fi] = 0;
    base[fi] = slot(d, start);
    touched.push(fi);
    order.push(first);
    let mut code = Vec::new();
    let mut head = 0;
    let mut result = Some(());
    while head < order.len() {
        let v = order[head];
        head += 1;
        let vi = d.vertex_index(v);
        let rot = d.rotation(v);
        let m = rot.len();
        match v {
            Vertex::Crossing(_) => {
                code.push(0);
                code.push((base[vi] % 2) as u32);
            }
            Vertex::Node(_) => {
                code.push(1);
                code.push(m as u32);
            }
        }
        for j in 0..m {
            let h = rot[(base[vi] + j) % m];
            let p = d.partner(h);
            let w = d.vertex(p);
            let wi = d.vertex_index(w);
            if number[wi] == u32::MAX {
                number[wi] = order.len() as u32;
                base[wi] = slot(d, p);
                touched.push(wi);
                order.push(w);
            }
            let wm = d.rotation(w).len();
            let off = (slot(d, p) + wm - base[wi]) % wm;
            code.push(number[wi]);
            code.push(off as u32);
            code.push(label_code(d.label_of(h)));
        }
        if let Some(b) = best {
            // prune: a prefix already larger than the best cannot win
            let k = code.len().min(b.len());
            if code[..k] > b[..k] {
                result = None;
                break;
            }
        }
    }
    for t in touched {
        number[t] = u32::MAX;
    }
    result.map(|_| code)
}

/// Canonical encoding invariant under renumbering of crossings, nodes,
/// half-edges and arcs. Two diagrams have equal codes iff they are
/// isomorphic as labeled, oriented rotation systems with the same
/// over/under data and family tag.
pub fn canonical_code(d: &SpatialDiagram) -> Vec<u32> {
    let nv = d.num_vertices();
    let mut number = vec![u32::MAX; nv];
    let mut base = vec![0usize; nv];
    let mut comps: Vec<Vec<u32>> = Vec::new();
    for comp in d.components() {
        let mut best: Option<Vec<u32>> = None;
        // start only at vertices of the rarest kind to save work
        let has_nodes = comp.iter().any(|v| matches!(v, Vertex::Node(_)));
        for v in &comp {
            if has_nodes && matches!(v, Vertex::Crossing(_)) {
                continue;
            }
            for &h in d.rotation(*v) {
                if let Some(c) = encode_from(d, h, &mut number, &mut base, best.as_deref()) {
                    if best.as_ref().map_or(true, |b| c < *b) {
                        best = Some(c);
                    }
                }
            }
        }
        comps.push(best.unwrap_or_default());
    }
    comps.sort();
    let mut out = family_code(d.family()).to_vec();
    for c in comps {
        out.push(c.len() as u32);
        out.extend(c);
    }
    out
}
