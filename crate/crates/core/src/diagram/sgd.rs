//! The line-based `.sgd` text format.
//!
//! ```text
//! F theta
//! V 0 0 1 2
//! V 1 3 4 5
//! P 2 3
//! P 1 4
//! P 0 5
//! L 0 x1
//! L 1 y1
//! L 2 z1
//! ```
//!
//! `X id h0 h1 h2 h3` is a crossing, `V id h...` a node, `P a b` an arc and
//! `L arc label` labels the arc given by its position among the `P` lines.
//! Anything after `#` is a comment.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::{EdgeLabel, Family, HalfEdge, SpatialDiagram};
use crate::error::{Error, Result};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn num(tok: &str, line: usize) -> Result<u64> {
    tok.parse().map_err(|_| {
        perr(
            line,
            format!("expected a non-negative integer, found `{tok}`"),
        )
    })
}

/// Parse a diagram. Identifiers need not be dense; crossings, nodes and
/// half-edges are renumbered in increasing id order. Structural problems
/// (a half-edge used twice, say) are not parse errors; run
/// [`super::validate`] on the result.
pub fn parse_sgd(text: &str) -> Result<SpatialDiagram> {
    let mut family = None;
    let mut crossings: BTreeMap<u64, (usize, [u64; 4])> = BTreeMap::new();
    let mut nodes: BTreeMap<u64, (usize, Vec<u64>)> = BTreeMap::new();
    let mut pairs: Vec<[u64; 2]> = Vec::new();
    let mut label_lines: Vec<(usize, u64, EdgeLabel)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        match toks[0] {
            "F" => {
                if family.is_some() {
                    return Err(perr(line, "second family line"));
                }
                let f: Family = toks[1..].join(" ").parse().map_err(|e| match e {
                    Error::Parse { msg, .. } => perr(line, msg),
                    other => other,
                })?;
                family = Some(f);
            }
            "X" => {
                if toks.len() != 6 {
                    return Err(perr(line, "crossing needs an id and 4 half-edges"));
                }
                let id = num(toks[1], line)?;
                let mut slots = [0u64; 4];
                for k in 0..4 {
                    slots[k] = num(toks[2 + k], line)?;
                }
                if crossings.insert(id, (line, slots)).is_some() {
                    return Err(perr(line, format!("crossing {id} defined twice")));
                }
            }
            "V" => {
                if toks.len() < 3 {
                    return Err(perr(line, "node needs an id and at least 1 half-edge"));
                }
                let id = num(toks[1], line)?;
                let rot = toks[2..]
                    .iter()
                    .map(|t| num(t, line))
                    .collect::<Result<Vec<_>>>()?;
                if nodes.insert(id, (line, rot)).is_some() {
                    return Err(perr(line, format!("node {id} defined twice")));
                }
            }
            "P" => {
                if toks.len() != 3 {
                    return Err(perr(line, "arc needs 2 half-edges"));
                }
                pairs.push([num(toks[1], line)?, num(toks[2], line)?]);
            }
            "L" => {
                if toks.len() != 3 {
                    return Err(perr(line, "label line needs an arc index and a label"));
                }
                let arc = num(toks[1], line)?;
                let label: EdgeLabel = toks[2]
                    .parse()
                    .map_err(|_| perr(line, format!("bad edge label `{}`", toks[2])))?;
                label_lines.push((line, arc, label));
            }
            other => return Err(perr(line, format!("unknown record `{other}`"))),
        }
    }

    let mut ids: Vec<u64> = crossings
        .values()
        .flat_map(|(_, s)| s.iter().copied())
        .chain(nodes.values().flat_map(|(_, r)| r.iter().copied()))
        .chain(pairs.iter().flat_map(|p| p.iter().copied()))
        .collect();
    ids.sort_unstable();
    ids.dedup();
    let dense = |h: u64| HalfEdge(ids.binary_search(&h).unwrap() as u32);

    let xs = crossings
        .values()
        .map(|(_, s)| [dense(s[0]), dense(s[1]), dense(s[2]), dense(s[3])])
        .collect();
    let vs = nodes
        .values()
        .map(|(_, r)| r.iter().map(|&h| dense(h)).collect())
        .collect();
    let arcs: Vec<[HalfEdge; 2]> = pairs.iter().map(|p| [dense(p[0]), dense(p[1])]).collect();
    let mut labels = vec![None; arcs.len()];
    for (line, arc, label) in label_lines {
        let slot = labels
            .get_mut(arc as usize)
            .ok_or_else(|| perr(line, format!("arc index {arc} out of range")))?;
        if slot.is_some() {
            return Err(perr(line, format!("arc {arc} labeled twice")));
        }
        *slot = Some(label);
    }
    Ok(SpatialDiagram::from_parts(
        xs,
        vs,
        arcs,
        labels,
        family.unwrap_or(Family::Raw),
    ))
}

/// Write a diagram in `.sgd` form. Ids are written as stored, so
/// `parse_sgd(&serialize_sgd(d)) == d` for any diagram with dense ids.
pub fn serialize_sgd(d: &SpatialDiagram) -> String {
    let mut s = String::new();
    writeln!(s, "F {}", d.family()).unwrap();
    for (i, c) in d.crossings().iter().enumerate() {
        writeln!(s, "X {i} {} {} {} {}", c[0].0, c[1].0, c[2].0, c[3].0).unwrap();
    }
    for (i, r) in d.nodes().iter().enumerate() {
        write!(s, "V {i}").unwrap();
        for h in r {
            write!(s, " {}", h.0).unwrap();
        }
        s.push('\n');
    }
    for [a, b] in d.arcs() {
        writeln!(s, "P {} {}", a.0, b.0).unwrap();
    }
    for (i, l) in d.labels().iter().enumerate() {
        if let Some(l) = l {
            writeln!(s, "L {i} {l}").unwrap();
        }
    }
    s
}
