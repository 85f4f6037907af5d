use std::collections::HashMap;

use crate::diagram::{Attach, HalfEdge, SpatialDiagram, NONE};
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

/// Largest diagram the bracket will attempt.
pub const MAX_BRACKET_CROSSINGS: usize = 80;

/// Crossing-to-crossing connectivity of a knot or link diagram with marker
/// nodes passed through.
pub(crate) struct Strands {
    /// For each crossing half-edge, the crossing half-edge at the other end
    /// of its strand segment.
    pub next: Vec<u32>,
    /// Closed loops that meet no crossing.
    pub free_loops: usize,
}

impl Strands {
    pub fn of(d: &SpatialDiagram) -> Result<Self> {
        if let Some((i, r)) = d.nodes().iter().enumerate().find(|(_, r)| r.len() != 2) {
            return Err(Error::Precondition(format!(
                "node {i} has valence {}; expected a knot or link diagram",
                r.len()
            )));
        }
        let n = d.num_half_edges();
        let mut next = vec![NONE; n];
        let mut seen_node = vec![false; n];
        for c in d.crossings() {
            for &h in c {
                let mut p = d.partner(h);
                while let Attach::Node(..) = d.attach(p) {
                    seen_node[p.idx()] = true;
                    let rot = d.rotation(d.vertex(p));
                    let o = if rot[0] == p { rot[1] } else { rot[0] };
                    seen_node[o.idx()] = true;
                    p = d.partner(o);
                }
                next[h.idx()] = p.0;
            }
        }
        let mut free_loops = 0;
        for r in d.nodes() {
            let h = r[0];
            if seen_node[h.idx()] {
                continue;
            }
            free_loops += 1;
            let mut p = h;
            loop {
                let rot = d.rotation(d.vertex(p));
                for &x in rot {
                    seen_node[x.idx()] = true;
                }
                let o = if rot[0] == p { rot[1] } else { rot[0] };
                p = d.partner(o);
                if seen_node[p.idx()] {
                    break;
                }
            }
        }
        Ok(Strands { next, free_loops })
    }
}

/// Orientation of every crossing half-edge: `true` if the strand leaves the
/// crossing through it. Each component is oriented starting from its
/// lowest half-edge, which is taken as incoming.
pub(crate) fn orient(d: &SpatialDiagram, s: &Strands) -> Vec<bool> {
    let n = d.num_half_edges();
    let mut outgoing = vec![false; n];
    let mut done = vec![false; n];
    for c in d.crossings() {
        for &h0 in c {
            if done[h0.idx()] {
                continue;
            }
            // h0 incoming; walk the component
            let mut h = h0;
            loop {
                done[h.idx()] = true;
                let o = d.opposite(h).unwrap();
                done[o.idx()] = true;
                outgoing[o.idx()] = true;
                h = HalfEdge(s.next[o.idx()]);
                if h == h0 {
                    break;
                }
            }
        }
    }
    outgoing
}

/// Sign of each crossing: +1 when the over-strand passes from right to left
/// as seen travelling along the under-strand.
pub fn crossing_signs(d: &SpatialDiagram) -> Result<Vec<i8>> {
    let s = Strands::of(d)?;
    let out = orient(d, &s);
    Ok(d.crossings()
        .iter()
        .map(|c| {
            if out[c[0].idx()] == out[c[3].idx()] {
                1
            } else {
                -1
            }
        })
        .collect())
}

pub fn writhe(d: &SpatialDiagram) -> Result<i64> {
    Ok(crossing_signs(d)?.iter().map(|&s| s as i64).sum())
}

/// Processing order that keeps the frontier small: repeatedly take the
/// crossing with the most half-edges joined to crossings already taken,
/// lowest id on ties.
fn elimination_order(d: &SpatialDiagram, s: &Strands) -> Vec<usize> {
    let nc = d.num_crossings();
    let cross_of = |h: u32| match d.attach(HalfEdge(h)) {
        Attach::Crossing(c, _) => c.idx(),
        Attach::Node(..) => unreachable!(),
    };
    let mut taken = vec![false; nc];
    let mut score = vec![0usize; nc];
    let mut order = Vec::with_capacity(nc);
    for _ in 0..nc {
        let mut best = None;
        for c in 0..nc {
            if taken[c] {
                continue;
            }
            if best.map_or(true, |b: usize| score[c] > score[b]) {
                best = Some(c);
            }
        }
        let c = best.unwrap();
        taken[c] = true;
        order.push(c);
        for h in d.crossings()[c] {
            score[cross_of(s.next[h.idx()])] += 1;
        }
    }
    order
}

/// Kauffman bracket `<D>` in the variable `A`, normalised so that the
/// crossing-free unknot has bracket 1.
///
/// The state sum is evaluated by sweeping crossings in an order that keeps
/// the boundary small. A state records how the open ends on the boundary
/// are joined through the part already swept; each state carries the
/// polynomial accumulated over all its smoothings.
pub fn kauffman_bracket(d: &SpatialDiagram) -> Result<LaurentPoly> {
    let nc = d.num_crossings();
    if nc > MAX_BRACKET_CROSSINGS {
        return Err(Error::TooManyCrossings {
            crossings: nc,
            limit: MAX_BRACKET_CROSSINGS,
        });
    }
    let s = Strands::of(d)?;
    let loop_value = LaurentPoly::from_terms([(-1, 2), (-1, -2)]);
    let cross_of = |h: u32| match d.attach(HalfEdge(h)) {
        Attach::Crossing(c, _) => c.idx(),
        Attach::Node(..) => unreachable!(),
    };

    let mut taken = vec![false; nc];
    let mut states: HashMap<Vec<u32>, LaurentPoly> = HashMap::new();
    states.insert(Vec::new(), LaurentPoly::one());

    for c in elimination_order(d, &s) {
        let slots = d.crossings()[c].map(|h| h.0);
        taken[c] = true;
        // glue[k]: what slot k is joined to by its arc, if that end is
        // already inside the swept region
        let glue: [Option<u32>; 4] = std::array::from_fn(|k| {
            let p = s.next[slots[k] as usize];
            (taken[cross_of(p)]).then_some(p)
        });
        let mut next: HashMap<Vec<u32>, LaurentPoly> = HashMap::with_capacity(states.len() * 2);
        for (state, poly) in states {
            for (shift, local) in [(1i64, [(0usize, 1usize), (2, 3)]), (-1, [(0, 3), (1, 2)])] {
                let (key, loops) = merge(&state, &slots, &glue, &local);
                let mut w = poly.clone().shift(shift);
                for _ in 0..loops {
                    w = w.times_loop();
                }
                let e = next.entry(key).or_default();
                *e = &*e + &w;
            }
        }
        next.retain(|_, p| !p.is_zero());
        states = next;
    }

    let total = states.remove(&Vec::new()).unwrap_or_default();
    // every closed loop was counted, including the one the normalisation
    // leaves out
    let mut total = total;
    let loops = s.free_loops;
    if nc == 0 {
        if loops == 0 {
            return Ok(LaurentPoly::one());
        }
        for _ in 1..loops {
            total = total.times_loop();
        }
        return Ok(total);
    }
    for _ in 0..loops {
        total = total.times_loop();
    }
    total
        .div_exact(&loop_value)
        .ok_or_else(|| Error::Internal("bracket not divisible by the loop value".into()))
}

/// Combine a boundary state with one smoothed crossing. Returns the new
/// boundary state and the number of loops closed.
fn merge(
    state: &[u32],
    slots: &[u32; 4],
    glue: &[Option<u32>; 4],
    local: &[(usize, usize); 2],
) -> (Vec<u32>, usize) {
    // points: old boundary ends (state) and the four new slots
    let mate_old = |x: u32| -> Option<u32> {
        state.chunks(2).find_map(|p| {
            if p[0] == x {
                Some(p[1])
            } else if p[1] == x {
                Some(p[0])
            } else {
                None
            }
        })
    };
    let slot_idx = |x: u32| slots.iter().position(|&s| s == x);
    // segment partner of a point
    let seg = |x: u32| -> u32 {
        if let Some(k) = slot_idx(x) {
            let (a, b) = if local[0].0 == k || local[0].1 == k {
                local[0]
            } else {
                local[1]
            };
            slots[if a == k { b } else { a }]
        } else {
            mate_old(x).expect("point not on boundary")
        }
    };
    // glue partner of a point
    let glued = |x: u32| -> Option<u32> {
        if let Some(k) = slot_idx(x) {
            glue[k]
        } else {
            (0..4).find(|&k| glue[k] == Some(x)).map(|k| slots[k])
        }
    };

    let mut points: Vec<u32> = state.to_vec();
    points.extend_from_slice(slots);
    let mut visited: Vec<u32> = Vec::with_capacity(points.len());
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    for &x in &points {
        if visited.contains(&x) || glued(x).is_some() {
            continue;
        }
        // walk from an open end to the other open end
        let mut cur = x;
        visited.push(cur);
        loop {
            let y = seg(cur);
            visited.push(y);
            match glued(y) {
                None => {
                    pairs.push((x.min(y), x.max(y)));
                    break;
                }
                Some(z) => {
                    visited.push(z);
                    cur = z;
                }
            }
        }
    }
    let mut loops = 0;
    for &x in &points {
        if visited.contains(&x) {
            continue;
        }
        loops += 1;
        let mut cur = x;
        loop {
            visited.push(cur);
            let y = seg(cur);
            visited.push(y);
            let z = glued(y).unwrap();
            if visited.contains(&z) {
                break;
            }
            cur = z;
        }
    }
    pairs.sort_unstable();
    let key = pairs.into_iter().flat_map(|(a, b)| [a, b]).collect();
    (key, loops)
}

/// Jones polynomial in `t`, from `(-A^3)^(-w) <D>` with `A = t^(-1/4)`.
pub fn jones(d: &SpatialDiagram) -> Result<LaurentPoly> {
    let b = kauffman_bracket(d)?;
    let w = writhe(d)?;
    let sign = if w.rem_euclid(2) == 0 { 1 } else { -1 };
    let f = LaurentPoly::monomial(sign, -3 * w);
    let a_poly = &f * &b;
    a_poly
        .substitute_power(-1)
        .root_substitute(4)
        .ok_or_else(|| Error::Internal("normalised bracket is not a polynomial in A^4".into()))
}
