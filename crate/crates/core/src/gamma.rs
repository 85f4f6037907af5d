//! The graph Γ(D) on the x and z edges of a theta-n diagram, bicoloured
//! triangles, and the extremal edge count of graphs without them.

use std::fmt;

use rayon::prelude::*;

use crate::diagram::{crossing_matrix, EdgeLabel, LabelFamily, SpatialDiagram};
use crate::error::{Error, Result};
use crate::invariants::KnotTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Colour {
    Blue,
    Red,
}

/// A simple graph on at most 64 labelled vertices, each blue (x) or red (z).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaGraph {
    vertices: Vec<EdgeLabel>,
    adj: Vec<u64>,
}

impl GammaGraph {
    /// Vertices are sorted; edges are given as index pairs into that order.
    pub fn new(mut vertices: Vec<EdgeLabel>) -> Result<Self> {
        vertices.sort();
        vertices.dedup();
        if vertices.len() > 64 {
            return Err(Error::TooLarge {
                n: vertices.len(),
                max: 64,
            });
        }
        if let Some(l) = vertices.iter().find(|l| colour_of(**l).is_none()) {
            return Err(Error::Precondition(format!(
                "{l} is neither an x nor a z edge"
            )));
        }
        let adj = vec![0; vertices.len()];
        Ok(GammaGraph { vertices, adj })
    }

    /// x_1..x_n and z_1..z_n with no edges.
    pub fn balanced(n: usize) -> Result<Self> {
        let mut v: Vec<EdgeLabel> = (1..=n as u32).map(EdgeLabel::x).collect();
        v.extend((1..=n as u32).map(EdgeLabel::z));
        Self::new(v)
    }

    pub fn vertices(&self) -> &[EdgeLabel] {
        &self.vertices
    }

    pub fn colour(&self, i: usize) -> Colour {
        colour_of(self.vertices[i]).expect("checked on construction")
    }

    fn index(&self, l: EdgeLabel) -> Option<usize> {
        self.vertices.binary_search(&l).ok()
    }

    pub fn add_edge(&mut self, a: EdgeLabel, b: EdgeLabel) -> Result<()> {
        let i = self.index(a).ok_or(Error::MissingLabel(a))?;
        let j = self.index(b).ok_or(Error::MissingLabel(b))?;
        if i == j {
            return Err(Error::Precondition(format!("loop at {a}")));
        }
        self.adj[i] |= 1 << j;
        self.adj[j] |= 1 << i;
        Ok(())
    }

    pub fn has_edge(&self, a: EdgeLabel, b: EdgeLabel) -> bool {
        match (self.index(a), self.index(b)) {
            (Some(i), Some(j)) => self.adj[i] >> j & 1 == 1,
            _ => false,
        }
    }

    /// Edges as sorted label pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(EdgeLabel, EdgeLabel)> {
        let mut out = Vec::new();
        for i in 0..self.vertices.len() {
            for j in i + 1..self.vertices.len() {
                if self.adj[i] >> j & 1 == 1 {
                    out.push((self.vertices[i], self.vertices[j]));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertices.len();
        self.edge_count() == n * n.saturating_sub(1) / 2
    }
}

impl fmt::Display for GammaGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self
            .edges()
            .iter()
            .map(|(a, b)| format!("{a}{b}"))
            .collect();
        write!(f, "{{{}}}", e.join(" "))
    }
}

fn colour_of(l: EdgeLabel) -> Option<Colour> {
    match l.family {
        LabelFamily::X => Some(Colour::Blue),
        LabelFamily::Z => Some(Colour::Red),
        _ => None,
    }
}

/// Γ(D): one vertex per x or z edge of `d`, joined when the two edges have
/// no crossings with each other. Edges of other families are ignored.
pub fn gamma(d: &SpatialDiagram) -> Result<GammaGraph> {
    let m = crossing_matrix(d)?;
    let verts: Vec<EdgeLabel> = m
        .labels()
        .iter()
        .copied()
        .filter(|l| colour_of(*l).is_some())
        .collect();
    let mut g = GammaGraph::new(verts)?;
    let v = g.vertices.clone();
    for (i, &a) in v.iter().enumerate() {
        for &b in &v[i + 1..] {
            if m.get(a, b) == 0 {
                g.add_edge(a, b)?;
            }
        }
    }
    Ok(g)
}

/// The lexicographically first triangle using both colours.
pub fn find_bicoloured_triangle(g: &GammaGraph) -> Option<[EdgeLabel; 3]> {
    let n = g.vertices.len();
    for i in 0..n {
        for j in i + 1..n {
            if g.adj[i] >> j & 1 == 0 {
                continue;
            }
            let mut common = g.adj[i] & g.adj[j] & !((1u64 << j) | ((1u64 << j) - 1));
            while common != 0 {
                let k = common.trailing_zeros() as usize;
                common &= common - 1;
                let cs = [g.colour(i), g.colour(j), g.colour(k)];
                if cs.contains(&Colour::Blue) && cs.contains(&Colour::Red) {
                    return Some([g.vertices[i], g.vertices[j], g.vertices[k]]);
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone)]
pub struct ExtremalResult {
    pub n: usize,
    pub max_edges_without_bicoloured_triangle: usize,
    pub witness: GammaGraph,
    /// Edge sets examined: every graph for a full scan, search nodes for
    /// the branch and bound.
    pub examined: u64,
    pub exhaustive_scan: bool,
}

impl ExtremalResult {
    /// 3n²/2 − n, doubled to stay integral.
    pub fn twice_bound(&self) -> i64 {
        let n = self.n as i64;
        3 * n * n - 2 * n
    }

    /// Whether a triangle-free graph attains the bound exactly, in which
    /// case "m ≥ 3n²/2 − n forces a triangle" is false for this n.
    pub fn bound_attained(&self) -> bool {
        2 * self.max_edges_without_bicoloured_triangle as i64 == self.twice_bound()
    }

    /// `n, max_edges, bound_3n2/2-n, witness_edge_list`
    pub fn table_row(&self) -> String {
        let b = self.twice_bound();
        let bound = if b % 2 == 0 {
            format!("{}", b / 2)
        } else {
            format!("{}.5", b / 2)
        };
        format!(
            "{}, {}, {}, {}",
            self.n, self.max_edges_without_bicoloured_triangle, bound, self.witness
        )
    }
}

pub const EXTREMAL_MAX_N: usize = 4;

/// Maximum edge count over graphs on x_1..x_n, z_1..z_n with no
/// bicoloured triangle. For n ≤ 3 every labelled graph is scanned; for
/// n = 4 an exact branch and bound over the edge list is used.
pub fn extremal_enumeration(n: usize) -> Result<ExtremalResult> {
    if n == 0 || n > EXTREMAL_MAX_N {
        return Err(Error::TooLarge {
            n,
            max: EXTREMAL_MAX_N,
        });
    }
    let v = 2 * n;
    let pairs: Vec<(usize, usize)> = (0..v)
        .flat_map(|i| (i + 1..v).map(move |j| (i, j)))
        .collect();
    let (best, mask, examined, scan) = if n <= 3 {
        let (b, m) = full_scan(n, &pairs);
        (b, m, 1u64 << pairs.len(), true)
    } else {
        let (b, m, e) = branch_and_bound(n, &pairs);
        (b, m, e, false)
    };
    let mut witness = GammaGraph::balanced(n)?;
    let labels = witness.vertices.clone();
    for (e, &(i, j)) in pairs.iter().enumerate() {
        if mask >> e & 1 == 1 {
            witness.add_edge(labels[i], labels[j])?;
        }
    }
    Ok(ExtremalResult {
        n,
        max_edges_without_bicoloured_triangle: best,
        witness,
        examined,
        exhaustive_scan: scan,
    })
}

// bitmask triangles that use both colours; vertices 0..n are blue
fn bicoloured_triangles(n: usize, pairs: &[(usize, usize)]) -> Vec<u64> {
    let v = 2 * n;
    let idx = |a: usize, b: usize| {
        pairs
            .iter()
            .position(|&p| p == (a.min(b), a.max(b)))
            .unwrap()
    };
    let mut out = Vec::new();
    for a in 0..v {
        for b in a + 1..v {
            for c in b + 1..v {
                let blue = [a, b, c].iter().filter(|&&x| x < n).count();
                if blue == 0 || blue == 3 {
                    continue;
                }
                out.push(1 << idx(a, b) | 1 << idx(a, c) | 1 << idx(b, c));
            }
        }
    }
    out
}

// (max edges, lexicographically least mask among the maxima)
fn full_scan(n: usize, pairs: &[(usize, usize)]) -> (usize, u64) {
    let tris = bicoloured_triangles(n, pairs);
    let m = pairs.len();
    let top = m.min(6);
    let low = m - top;
    (0u64..1 << top)
        .into_par_iter()
        .map(|hi| {
            let mut best = (0usize, u64::MAX);
            for lo in 0u64..1 << low {
                let g = hi << low | lo;
                let e = g.count_ones() as usize;
                if e < best.0 || (e == best.0 && g >= best.1) {
                    continue;
                }
                if tris.iter().all(|&t| g & t != t) {
                    best = (e, g);
                }
            }
            best
        })
        .reduce(|| (0, u64::MAX), pick)
}

fn pick(a: (usize, u64), b: (usize, u64)) -> (usize, u64) {
    if a.0 != b.0 {
        if a.0 > b.0 {
            a
        } else {
            b
        }
    } else if a.1 <= b.1 {
        a
    } else {
        b
    }
}

// exact search: edges are decided in index order, a branch is cut when
// even taking every remaining edge cannot beat the best found so far
fn branch_and_bound(n: usize, pairs: &[(usize, usize)]) -> (usize, u64, u64) {
    let tris = bicoloured_triangles(n, pairs);
    let m = pairs.len();
    // triangles indexed by their highest edge, checked when it is added
    let mut by_top: Vec<Vec<u64>> = vec![Vec::new(); m];
    for &t in &tris {
        by_top[63 - t.leading_zeros() as usize].push(t);
    }
    // the complete blue and red cliques plus a perfect matching are
    // triangle free, which seeds the bound
    let seed = n * n;
    let split = m.min(8);
    let results: Vec<(usize, u64, u64)> = (0u64..1 << split)
        .into_par_iter()
        .map(|prefix| {
            let mut g = 0u64;
            for e in 0..split {
                if prefix >> (split - 1 - e) & 1 == 1 {
                    g |= 1 << e;
                    if by_top[e].iter().any(|&t| g & t == t) {
                        return (0, u64::MAX, 1);
                    }
                }
            }
            let mut st = Bnb {
                m,
                by_top: &by_top,
                best: (seed.saturating_sub(1), u64::MAX),
                nodes: 0,
            };
            st.go(split, g);
            (st.best.0, st.best.1, st.nodes)
        })
        .collect();
    let examined = results.iter().map(|r| r.2).sum();
    let (b, mask) = results.iter().map(|r| (r.0, r.1)).fold((0, u64::MAX), pick);
    (b, mask, examined)
}

struct Bnb<'a> {
    m: usize,
    by_top: &'a [Vec<u64>],
    best: (usize, u64),
    nodes: u64,
}

impl Bnb<'_> {
    fn go(&mut self, e: usize, g: u64) {
        self.nodes += 1;
        let have = g.count_ones() as usize;
        if e == self.m {
            if have > self.best.0 || (have == self.best.0 && g < self.best.1) {
                self.best = (have, g);
            }
            return;
        }
        if have + (self.m - e) < self.best.0 {
            return;
        }
        let with = g | 1 << e;
        if self.by_top[e].iter().all(|&t| with & t != t) {
            self.go(e + 1, with);
        }
        self.go(e + 1, g);
    }
}

/// Outcome of testing the triangle implication on one diagram.
#[derive(Debug, Clone)]
pub struct TriangleReport {
    pub n: usize,
    pub crossings: usize,
    /// n·(c(K1) + c(K2))
    pub crossing_bound: usize,
    /// 2(c(K1) + c(K2) − c(K1#K2)) + 1, the n beyond which the implication
    /// applies.
    pub n_threshold: usize,
    pub triangle: Option<[EdgeLabel; 3]>,
}

impl TriangleReport {
    pub fn within_bound(&self) -> bool {
        self.crossings <= self.crossing_bound
    }

    pub fn applies(&self) -> bool {
        self.within_bound() && self.n > self.n_threshold
    }

    /// A diagram meeting both hypotheses without a bicoloured triangle.
    pub fn counterexample(&self) -> bool {
        self.applies() && self.triangle.is_none()
    }
}

impl fmt::Display for TriangleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} crossings={} bound={} within={} threshold={} triangle={}",
            self.n,
            self.crossings,
            self.crossing_bound,
            self.within_bound(),
            self.n_threshold,
            match self.triangle {
                Some([a, b, c]) => format!("({a},{b},{c})"),
                None => "none".into(),
            }
        )?;
        if self.counterexample() {
            write!(f, " COUNTEREXAMPLE: inspect diagram validity")?;
        }
        Ok(())
    }
}

/// Report the crossing hypothesis and the presence of a bicoloured
/// triangle for a theta-n diagram of the constituents `k1`, `k2`.
pub fn check_triangle_hypothesis(d: &SpatialDiagram, k1: &str, k2: &str) -> Result<TriangleReport> {
    let t = KnotTable::get();
    let c1 = t.crossing_number(k1)?;
    let c2 = t.crossing_number(k2)?;
    let c12 = t.crossing_number(&format!("{k1}#{k2}"))?;
    let g = gamma(d)?;
    let n = g
        .vertices
        .iter()
        .filter(|l| l.family == LabelFamily::X)
        .count();
    Ok(TriangleReport {
        n,
        crossings: d.num_crossings(),
        crossing_bound: n * (c1 + c2),
        n_threshold: 2 * (c1 + c2 - c12) + 1,
        triangle: find_bicoloured_triangle(&g),
    })
}
