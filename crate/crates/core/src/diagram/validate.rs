use std::collections::BTreeMap;
use std::fmt;

use super::{EdgeLabel, Family, SpatialDiagram};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DuplicateHalfEdge(u32),
    UnattachedHalfEdge(u32),
    UnpairedHalfEdge(u32),
    PairedTwice(u32),
    SelfPairedArc(u32),
    EmptyNode(u32),
    NonPlanarComponent { component: usize, euler: i64 },
    LabelNotPath(EdgeLabel),
    MissingLabel(u32),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateHalfEdge(h) => write!(f, "duplicate half-edge {h}"),
            Violation::UnattachedHalfEdge(h) => {
                write!(f, "half-edge {h} is not attached to any crossing or node")
            }
            Violation::UnpairedHalfEdge(h) => write!(f, "half-edge {h} is in no arc"),
            Violation::PairedTwice(h) => write!(f, "half-edge {h} is in more than one arc"),
            Violation::SelfPairedArc(a) => write!(f, "arc {a} pairs a half-edge with itself"),
            Violation::EmptyNode(n) => write!(f, "node {n} has valence 0"),
            Violation::NonPlanarComponent { component, euler } => write!(
                f,
                "component {component} does not embed in the sphere (V - E + F = {euler})"
            ),
            Violation::LabelNotPath(l) => {
                write!(f, "arcs labeled {l} do not form a single simple path")
            }
            Violation::MissingLabel(a) => write!(f, "arc {a} is unlabeled"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub faces: usize,
    pub euler: Vec<i64>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check every structural invariant. The report is empty iff the diagram is
/// well-formed and each component embeds in the sphere.
pub fn validate(d: &SpatialDiagram) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = d.num_half_edges();
    let mut seen = vec![0u32; n];
    for h in d
        .crossings()
        .iter()
        .flat_map(|c| c.iter())
        .chain(d.nodes().iter().flat_map(|r| r.iter()))
    {
        seen[h.idx()] += 1;
    }
    let mut paired = vec![0u32; n];
    for (ai, [a, b]) in d.arcs().iter().enumerate() {
        if a == b {
            report.violations.push(Violation::SelfPairedArc(ai as u32));
        }
        paired[a.idx()] += 1;
        if a != b {
            paired[b.idx()] += 1;
        }
    }
    for h in 0..n {
        match seen[h] {
            0 => report
                .violations
                .push(Violation::UnattachedHalfEdge(h as u32)),
            1 => {}
            _ => report
                .violations
                .push(Violation::DuplicateHalfEdge(h as u32)),
        }
        match paired[h] {
            0 => report
                .violations
                .push(Violation::UnpairedHalfEdge(h as u32)),
            1 => {}
            _ => report.violations.push(Violation::PairedTwice(h as u32)),
        }
    }
    for (ni, r) in d.nodes().iter().enumerate() {
        if r.is_empty() {
            report.violations.push(Violation::EmptyNode(ni as u32));
        }
    }
    if !report.violations.is_empty() {
        return report;
    }

    report.faces = d.faces().len();
    report.euler = d.euler_characteristics();
    for (ci, &chi) in report.euler.iter().enumerate() {
        if chi != 2 {
            report.violations.push(Violation::NonPlanarComponent {
                component: ci,
                euler: chi,
            });
        }
    }

    if matches!(
        d.family(),
        Family::Theta | Family::ThetaN(_) | Family::Oplus(..) | Family::G(..)
    ) {
        for (ai, l) in d.labels().iter().enumerate() {
            if l.is_none() {
                report.violations.push(Violation::MissingLabel(ai as u32));
            }
        }
        check_label_paths(d, &mut report);
    }
    report
}

/// Every label must be carried by exactly the arcs of one strand running
/// from a node to a node through crossings.
fn check_label_paths(d: &SpatialDiagram, report: &mut ValidationReport) {
    let mut arcs_by_label: BTreeMap<EdgeLabel, Vec<u32>> = BTreeMap::new();
    for (ai, l) in d.labels().iter().enumerate() {
        if let Some(l) = l {
            arcs_by_label.entry(*l).or_default().push(ai as u32);
        }
    }
    'labels: for (label, arcs) in arcs_by_label {
        // a path must start at a node half-edge of this label
        let start = d
            .nodes()
            .iter()
            .flat_map(|r| r.iter())
            .copied()
            .find(|&h| d.label_of(h) == Some(label));
        let Some(start) = start else {
            report.violations.push(Violation::LabelNotPath(label));
            continue;
        };
        let Some((path, _end)) = d.follow_edge(start) else {
            report.violations.push(Violation::LabelNotPath(label));
            continue;
        };
        let mut on_path: Vec<u32> = path.chunks(2).map(|pair| d.arc_of(pair[0]).0).collect();
        for pair in path.chunks(2) {
            if d.label_of(pair[0]) != Some(label) {
                report.violations.push(Violation::LabelNotPath(label));
                continue 'labels;
            }
        }
        on_path.sort_unstable();
        let before = on_path.len();
        on_path.dedup();
        if on_path.len() != before || on_path != arcs {
            report.violations.push(Violation::LabelNotPath(label));
        }
    }
    // a crossing strand must not be split between labels mid-edge
    for c in d.crossings() {
        for s in 0..2 {
            let (a, b) = (c[s], c[s + 2]);
            if d.label_of(a) != d.label_of(b) {
                report.violations.push(Violation::LabelNotPath(
                    d.label_of(a).or(d.label_of(b)).unwrap_or(EdgeLabel::x(0)),
                ));
            }
        }
    }
}
