//! Gauss codes and the partition search.

use std::fmt;
use std::str::FromStr;

use crate::diagram::{Attach, CrossingId, HalfEdge, SpatialDiagram};
use crate::error::{Error, Result};
use crate::invariants::{orient, Strands};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Visit {
    /// Crossing number, counted from 1 in order of first appearance.
    pub label: u32,
    pub over: bool,
    pub positive: bool,
}

/// A knot diagram read along its strand.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussCode {
    pub visits: Vec<Visit>,
}

/// Where the strand passes through a crossing: the crossing and the slot it
/// enters by.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pass {
    pub crossing: CrossingId,
    pub entry: u8,
}

/// The passes of a single-component diagram in traversal order, starting at
/// crossing 0 entering by slot 0.
pub fn traversal(d: &SpatialDiagram) -> Result<Vec<Pass>> {
    let s = Strands::of(d)?;
    if d.num_crossings() == 0 {
        if s.free_loops > 1 {
            return Err(Error::Precondition(
                "diagram has more than one component".into(),
            ));
        }
        return Ok(Vec::new());
    }
    if s.free_loops > 0 {
        return Err(Error::Precondition(
            "diagram has more than one component".into(),
        ));
    }
    let start = d.crossings()[0][0];
    let mut passes = Vec::with_capacity(2 * d.num_crossings());
    let mut h = start;
    loop {
        let Attach::Crossing(c, slot) = d.attach(h) else {
            unreachable!()
        };
        passes.push(Pass {
            crossing: c,
            entry: slot,
        });
        let out = d.opposite(h).unwrap();
        h = HalfEdge(s.next[out.idx()]);
        if h == start {
            break;
        }
        if passes.len() > 2 * d.num_crossings() {
            return Err(Error::Internal("strand traversal does not close".into()));
        }
    }
    if passes.len() != 2 * d.num_crossings() {
        return Err(Error::Precondition(
            "diagram has more than one component".into(),
        ));
    }
    Ok(passes)
}

impl GaussCode {
    /// Read the code of a single-component knot diagram starting at
    /// crossing 0 on its under-strand.
    pub fn from_diagram(d: &SpatialDiagram) -> Result<Self> {
        let passes = traversal(d)?;
        if passes.is_empty() {
            return Ok(GaussCode::default());
        }
        let s = Strands::of(d)?;
        let out = orient(d, &s);
        let mut number = vec![0u32; d.num_crossings()];
        let mut next = 1;
        let mut visits = Vec::with_capacity(passes.len());
        for p in passes {
            let ci = p.crossing.idx();
            if number[ci] == 0 {
                number[ci] = next;
                next += 1;
            }
            let c = d.crossings()[ci];
            visits.push(Visit {
                label: number[ci],
                over: p.entry % 2 == 1,
                positive: out[c[0].idx()] == out[c[3].idx()],
            });
        }
        Ok(GaussCode { visits })
    }

    pub fn len(&self) -> usize {
        self.visits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.visits.is_empty()
    }

    pub fn abs_sequence(&self) -> Vec<u32> {
        self.visits.iter().map(|v| v.label).collect()
    }

    /// Structural validity: each label exactly twice, once over and once
    /// under, with matching signs.
    pub fn is_valid(&self) -> bool {
        let n = self.visits.iter().map(|v| v.label).max().unwrap_or(0) as usize;
        let mut seen: Vec<Vec<&Visit>> = vec![Vec::new(); n + 1];
        for v in &self.visits {
            seen[v.label as usize].push(v);
        }
        seen.iter()
            .skip(1)
            .all(|vs| vs.len() == 2 && vs[0].over != vs[1].over && vs[0].positive == vs[1].positive)
            && seen.iter().skip(1).count() * 2 == self.visits.len()
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self
            .visits
            .iter()
            .map(|v| {
                format!(
                    "{}{}{}",
                    if v.over { 'O' } else { 'U' },
                    v.label,
                    if v.positive { '+' } else { '-' }
                )
            })
            .collect();
        write!(f, "{}", toks.join(","))
    }
}

impl FromStr for GaussCode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(GaussCode::default());
        }
        let bad = |t: &str| Error::Parse {
            line: 0,
            msg: format!("bad Gauss token `{t}`"),
        };
        let mut visits = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let over = match tok.chars().next() {
                Some('O') => true,
                Some('U') => false,
                _ => return Err(bad(tok)),
            };
            let positive = match tok.chars().last() {
                Some('+') => true,
                Some('-') => false,
                _ => return Err(bad(tok)),
            };
            if tok.len() < 3 {
                return Err(bad(tok));
            }
            let label: u32 = tok[1..tok.len() - 1].parse().map_err(|_| bad(tok))?;
            if label == 0 {
                return Err(bad(tok));
            }
            visits.push(Visit {
                label,
                over,
                positive,
            });
        }
        Ok(GaussCode { visits })
    }
}

/// Two cut points on the code. With `first < second`, the arc α1 is the
/// visits `first..second` and α2 is the rest, read cyclically. Cut point `p`
/// lies just before visit `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Partition {
    pub first: usize,
    pub second: usize,
}

impl Partition {
    /// Visit indices of α1 in order.
    pub fn alpha1(&self) -> std::ops::Range<usize> {
        self.first..self.second
    }

    /// Visit indices of α2 in order, wrapping around.
    pub fn alpha2(&self, len: usize) -> impl Iterator<Item = usize> {
        (self.second..len).chain(0..self.first)
    }
}

fn has_repeat(labels: impl Iterator<Item = u32>, seen: &mut [bool]) -> bool {
    seen.iter_mut().for_each(|s| *s = false);
    for l in labels {
        if std::mem::replace(&mut seen[l as usize], true) {
            return true;
        }
    }
    false
}

/// First cut pair, in lexicographic order, for which both arcs visit some
/// crossing twice.
pub fn find_partition(c: &GaussCode) -> Option<Partition> {
    let seq = c.abs_sequence();
    let len = seq.len();
    let max = seq.iter().copied().max().unwrap_or(0) as usize;
    let mut seen = vec![false; max + 1];
    for i in 0..len {
        for j in i + 1..len {
            if !has_repeat(seq[i..j].iter().copied(), &mut seen) {
                continue;
            }
            let rest = seq[j..].iter().chain(seq[..i].iter()).copied();
            if has_repeat(rest, &mut seen) {
                return Some(Partition {
                    first: i,
                    second: j,
                });
            }
        }
    }
    None
}

/// True if the crossing labels read `1, 2, ..., c, 1, 2, ..., c` up to
/// rotation and relabeling, i.e. every crossing is revisited exactly half
/// the code later. The empty code counts as a double run.
pub fn is_double_run(c: &GaussCode) -> bool {
    let s = c.abs_sequence();
    let len = s.len();
    if len % 2 != 0 {
        return false;
    }
    let half = len / 2;
    (0..len).all(|p| s[p] == s[(p + half) % len])
}
