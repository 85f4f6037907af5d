use crate::diagram::builder::Builder;
use crate::diagram::{strand_count, EdgeLabel, Family, HalfEdge, SpatialDiagram};
use crate::error::{Error, Result};

/// Direction in which the next strand is looked for at each node:
/// `true` means decreasing rotation index (clockwise).
type Rule = (bool, bool);

/// Rules tried in order: clockwise at the far node and counterclockwise at
/// the near one (so both turns are clockwise as seen along the strand),
/// its mirror, then the two uniform readings.
const RULES: [Rule; 4] = [(false, true), (true, false), (true, true), (false, false)];

/// Pair up the half-edges at both nodes by walking strands from node to node.
/// Returns, per node, the pairs of rotation indices joined there.
fn walk(d: &SpatialDiagram, rule: Rule) -> Option<[Vec<(usize, usize)>; 2]> {
    let rots = [d.nodes()[0].clone(), d.nodes()[1].clone()];
    let m = rots[0].len();
    let pos = |node: usize, h: HalfEdge| rots[node].iter().position(|&x| x == h);
    let mut used = [vec![false; m], vec![false; m]];
    let mut pairs: [Vec<(usize, usize)>; 2] = [Vec::new(), Vec::new()];
    let mut node = 0;
    let mut idx = 0;
    used[0][0] = true;
    loop {
        let (_, end) = d.follow_edge(rots[node][idx])?;
        let far = 1 - node;
        let arrive = pos(far, end)?;
        if used[far][arrive] {
            return None;
        }
        used[far][arrive] = true;
        let cw = if far == 1 { rule.1 } else { rule.0 };
        let next = (1..m)
            .map(|s| {
                if cw {
                    (arrive + m - s) % m
                } else {
                    (arrive + s) % m
                }
            })
            .find(|&j| !used[far][j]);
        match next {
            Some(j) => {
                used[far][j] = true;
                pairs[far].push((arrive, j));
                node = far;
                idx = j;
            }
            None => {
                // last strand closes up with the first one
                if far != 0 {
                    return None;
                }
                pairs[0].push((arrive, 0));
                return Some(pairs);
            }
        }
    }
}

fn crossing_free(pairs: &[(usize, usize)]) -> bool {
    let norm: Vec<(usize, usize)> = pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    norm.iter().all(|&(a, b)| {
        norm.iter()
            .all(|&(c, e)| !((a < c && c < b && b < e) || (c < a && a < e && e < b)))
    })
}

/// Resolve the two nodes of a θ^n diagram into a single knot diagram by
/// joining strand ends pairwise at each node, turning to the nearest unused
/// strand each time. The crossings are untouched. The first rule that yields
/// planar joins at both nodes and a single component is used.
pub fn resolve_nodes(d: &SpatialDiagram) -> Result<SpatialDiagram> {
    if d.num_nodes() != 2 {
        return Err(Error::Precondition(format!(
            "expected two nodes, found {}",
            d.num_nodes()
        )));
    }
    let (a, b) = (d.nodes()[0].len(), d.nodes()[1].len());
    if a != b {
        return Err(Error::DegreeMismatch(a, b));
    }
    if a % 2 != 0 {
        return Err(Error::Precondition(format!("node valence {a} is odd")));
    }
    for rule in RULES {
        let Some(pairs) = walk(d, rule) else { continue };
        if !pairs.iter().all(|p| crossing_free(p)) {
            continue;
        }
        let mut bl = Builder::from_diagram(d);
        for (node, ps) in pairs.iter().enumerate() {
            let rot = bl.nodes[node].take().expect("node present");
            for &(x, y) in ps {
                bl.bypass(rot[x], rot[y]);
            }
        }
        bl.family = Family::Knot;
        let k = bl.finish()?.relabel_all(EdgeLabel::x(1));
        if strand_count(&k) == 1 {
            return Ok(k);
        }
    }
    Err(Error::Internal(
        "no resolution rule gives a single planar strand".into(),
    ))
}
