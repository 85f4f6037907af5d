use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use super::{apply, delta, enumerate, Move};
use crate::diagram::{canonical_code, SpatialDiagram};

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub best: SpatialDiagram,
    pub crossings: usize,
    /// Moves taking the input to `best`.
    pub trace: Vec<Move>,
    /// Diagrams expanded.
    pub explored: usize,
    pub budget_exhausted: bool,
}

/// Search the move graph for a diagram with fewer crossings.
///
/// Diagrams are expanded in order of crossing count, ties broken by
/// discovery order, so the search is breadth-first within each count.
/// Moves that add crossings are only taken while the count stays within
/// `depth` of the starting count. At most `budget` diagrams are expanded;
/// isomorphic diagrams are expanded once. The result is an upper bound on
/// the crossing number, never a claim of minimality.
pub fn simplify(d: &SpatialDiagram, budget: usize, depth: usize) -> SearchResult {
    let start = d.num_crossings();
    let limit = start + depth;
    // expanded diagrams with their parent link
    let mut nodes: Vec<(SpatialDiagram, Option<(usize, Move)>)> = Vec::new();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    // (crossings after the move, sequence number); the sequence number
    // indexes `pending`
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> = BinaryHeap::new();
    let mut pending: Vec<(usize, Option<Move>)> = vec![(usize::MAX, None)];
    let mut best = (start, 0usize);
    let mut explored = 0;
    let mut exhausted = false;
    heap.push(Reverse((start, 0)));
    while let Some(Reverse((_, k))) = heap.pop() {
        let (parent, mv) = pending[k];
        let cur = match mv {
            None => d.clone(),
            Some(m) => match apply(&nodes[parent].0, &m) {
                Ok(x) => x,
                Err(_) => continue,
            },
        };
        if !seen.insert(canonical_code(&cur)) {
            continue;
        }
        if explored >= budget {
            exhausted = true;
            break;
        }
        explored += 1;
        let c = cur.num_crossings();
        let id = nodes.len();
        let grow = c < limit;
        let moves = enumerate(&cur, grow);
        nodes.push((cur, mv.map(|m| (parent, m))));
        if c < best.0 {
            best = (c, id);
        }
        if c == 0 {
            break;
        }
        for m in moves {
            let Some(dl) = delta(&nodes[id].0, &m) else {
                continue;
            };
            let after = c as i64 + dl;
            if after < 0 || after as usize > limit {
                continue;
            }
            heap.push(Reverse((after as usize, pending.len())));
            pending.push((id, Some(m)));
        }
    }
    let mut trace = Vec::new();
    let mut at = best.1;
    while let Some((p, m)) = nodes[at].1 {
        trace.push(m);
        at = p;
    }
    trace.reverse();
    SearchResult {
        best: nodes[best.1].0.clone(),
        crossings: best.0,
        trace,
        explored,
        budget_exhausted: exhausted,
    }
}
