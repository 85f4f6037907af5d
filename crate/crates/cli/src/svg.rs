//! Straight-line drawing of a diagram: every arc is subdivided, the
//! largest face of each component is pinned to a circle and the remaining
//! points are placed at the barycentre of their neighbours.

use std::collections::HashMap;
use std::fmt::Write;

use spatial_knots::diagram::{LabelFamily, Vertex};
use spatial_knots::{HalfEdge, SpatialDiagram};

const SUBDIV: usize = 3;
const BOX: f64 = 400.0;
const GAP: f64 = 0.3;

struct Layout {
    pos: Vec<(f64, f64)>,
    // point ids along each arc, from arcs()[a][0] to arcs()[a][1]
    arc_points: Vec<Vec<usize>>,
    vertex_point: HashMap<Vertex, usize>,
}

fn layout(d: &SpatialDiagram) -> Layout {
    let mut vertex_point = HashMap::new();
    let mut n_points = 0;
    for c in 0..d.num_crossings() {
        vertex_point.insert(
            Vertex::Crossing(spatial_knots::diagram::CrossingId(c as u32)),
            n_points,
        );
        n_points += 1;
    }
    for v in 0..d.num_nodes() {
        vertex_point.insert(
            Vertex::Node(spatial_knots::diagram::NodeId(v as u32)),
            n_points,
        );
        n_points += 1;
    }
    let mut arc_points = Vec::with_capacity(d.num_arcs());
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n_points];
    for arc in d.arcs() {
        let a = vertex_point[&d.vertex(arc[0])];
        let b = vertex_point[&d.vertex(arc[1])];
        let mut pts = vec![a];
        for _ in 0..SUBDIV {
            pts.push(n_points);
            adj.push(Vec::new());
            n_points += 1;
        }
        pts.push(b);
        for w in pts.windows(2) {
            adj[w[0]].push(w[1]);
            adj[w[1]].push(w[0]);
        }
        arc_points.push(pts);
    }
    let mut pos = vec![(0.0, 0.0); n_points];
    let mut fixed = vec![false; n_points];

    // points along a face boundary, walking each dart's arc forwards
    let walk = |darts: &[HalfEdge]| -> Vec<usize> {
        let mut out = Vec::new();
        for &h in darts {
            let a = d.arc_of(h);
            let pts = &arc_points[a.idx()];
            if d.arcs()[a.idx()][0] == h {
                out.extend_from_slice(&pts[..pts.len() - 1]);
            } else {
                out.extend(pts[1..].iter().rev());
            }
        }
        out
    };
    let faces = d.faces();
    let comps = d.components();
    for (ci, comp) in comps.iter().enumerate() {
        let cx = BOX * (ci as f64 + 0.5);
        let cy = BOX / 2.0;
        let outer = faces
            .iter()
            .filter(|f| {
                f.darts
                    .first()
                    .is_some_and(|&h| comp.contains(&d.vertex(h)))
            })
            .max_by_key(|f| f.len());
        let Some(outer) = outer else { continue };
        let mut ring = walk(&outer.darts);
        let mut seen = std::collections::HashSet::new();
        ring.retain(|p| seen.insert(*p));
        let r = BOX * 0.42;
        for (k, &p) in ring.iter().enumerate() {
            // clockwise, since the outer face lies to the left of its darts
            let t = -2.0 * std::f64::consts::PI * k as f64 / ring.len() as f64;
            pos[p] = (cx + r * t.cos(), cy + r * t.sin());
            fixed[p] = true;
        }
        // start free points at the component centre
        for v in comp {
            let p = vertex_point[v];
            if !fixed[p] {
                pos[p] = (cx, cy);
            }
        }
    }
    for pts in &arc_points {
        for &p in pts {
            if !fixed[p] && pos[p] == (0.0, 0.0) {
                pos[p] = pos[pts[0]];
            }
        }
    }
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for p in 0..n_points {
            if fixed[p] || adj[p].is_empty() {
                continue;
            }
            let k = adj[p].len() as f64;
            let (sx, sy) = adj[p]
                .iter()
                .fold((0.0, 0.0), |acc, &q| (acc.0 + pos[q].0, acc.1 + pos[q].1));
            let np = (sx / k, sy / k);
            moved = moved.max((np.0 - pos[p].0).abs() + (np.1 - pos[p].1).abs());
            pos[p] = np;
        }
        if moved < 1e-6 {
            break;
        }
    }
    Layout {
        pos,
        arc_points,
        vertex_point,
    }
}

fn colour(f: Option<LabelFamily>) -> &'static str {
    match f {
        Some(LabelFamily::X) => "#1f4fd1",
        Some(LabelFamily::Z) => "#c8202a",
        Some(LabelFamily::Y) => "#1d8a3a",
        Some(LabelFamily::H) => "#777777",
        None => "#000000",
    }
}

/// SVG 1.1 drawing. Under-strands stop short of their crossing.
pub fn to_svg(d: &SpatialDiagram) -> String {
    let l = layout(d);
    let comps = d.components().len().max(1);
    let (w, h) = (BOX * comps as f64, BOX);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    for (ai, arc) in d.arcs().iter().enumerate() {
        let mut pts: Vec<(f64, f64)> = l.arc_points[ai].iter().map(|&p| l.pos[p]).collect();
        let n = pts.len();
        if d.is_under(arc[0]) {
            pts[0] = lerp(pts[0], pts[1], GAP);
        }
        if d.is_under(arc[1]) {
            pts[n - 1] = lerp(pts[n - 1], pts[n - 2], GAP);
        }
        let label = d.label(spatial_knots::diagram::ArcId(ai as u32));
        let path: Vec<String> = pts.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
        let _ = writeln!(
            s,
            r#"  <polyline fill="none" stroke="{}" stroke-width="2.5" points="{}"/>"#,
            colour(label.map(|l| l.family)),
            path.join(" ")
        );
        if let Some(lb) = label {
            let (x, y) = pts[n / 2];
            let _ = writeln!(
                s,
                r#"  <text x="{:.2}" y="{:.2}" font-size="11" font-family="sans-serif" fill="{}">{lb}</text>"#,
                x + 4.0,
                y - 4.0,
                colour(Some(lb.family))
            );
        }
    }
    for v in 0..d.num_nodes() {
        let id = spatial_knots::diagram::NodeId(v as u32);
        if d.node(id).len() == 2 {
            continue;
        }
        let (x, y) = l.pos[l.vertex_point[&Vertex::Node(id)]];
        let _ = writeln!(
            s,
            r#"  <circle cx="{x:.2}" cy="{y:.2}" r="5" fill="black"/>"#
        );
    }
    s.push_str("</svg>\n");
    s
}

fn lerp(a: (f64, f64), b: (f64, f64), t: f64) -> (f64, f64) {
    (a.0 + (b.0 - a.0) * t, a.1 + (b.1 - a.1) * t)
}
