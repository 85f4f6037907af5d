use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use crate::diagram::{EdgeLabel, Family, HalfEdge, SpatialDiagram};
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

use super::bracket::jones;

/// Prime knots with stored minimal diagrams, as planar-diagram codes.
const PRIMES: &[(&str, &[[u32; 4]])] = &[
    ("3_1", &[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]),
    (
        "4_1",
        &[[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]],
    ),
    (
        "5_1",
        &[
            [1, 6, 2, 7],
            [3, 8, 4, 9],
            [5, 10, 6, 1],
            [7, 2, 8, 3],
            [9, 4, 10, 5],
        ],
    ),
    (
        "5_2",
        &[
            [1, 4, 2, 5],
            [3, 8, 4, 9],
            [5, 10, 6, 1],
            [9, 6, 10, 7],
            [7, 2, 8, 3],
        ],
    ),
];

/// Knots whose mirror image is the same knot.
const AMPHICHIRAL: &[&str] = &["4_1"];

/// Most summands considered when matching connected sums.
pub const MAX_SUMMANDS: usize = 4;

/// Build a knot diagram from a planar-diagram code: each crossing lists
/// four edge numbers counterclockwise from the incoming under-strand, and
/// each edge number occurs exactly twice.
pub fn from_pd(code: &[[u32; 4]]) -> Result<SpatialDiagram> {
    if code.is_empty() {
        return Ok(SpatialDiagram::unknot());
    }
    let mut ends: BTreeMap<u32, Vec<HalfEdge>> = BTreeMap::new();
    let mut crossings = Vec::with_capacity(code.len());
    for (ci, x) in code.iter().enumerate() {
        let mut slots = [HalfEdge(0); 4];
        for k in 0..4 {
            let h = HalfEdge((4 * ci + k) as u32);
            slots[k] = h;
            ends.entry(x[k]).or_default().push(h);
        }
        crossings.push(slots);
    }
    let mut arcs = Vec::new();
    for (e, hs) in ends {
        if hs.len() != 2 {
            return Err(Error::Invalid(format!(
                "edge {e} occurs {} times",
                hs.len()
            )));
        }
        arcs.push([hs[0], hs[1]]);
    }
    let n = arcs.len();
    Ok(SpatialDiagram::from_parts(
        crossings,
        vec![],
        arcs,
        vec![Some(EdgeLabel::x(1)); n],
        Family::Knot,
    ))
}

#[derive(Debug, Clone)]
pub struct TableEntry {
    pub name: String,
    pub diagram: SpatialDiagram,
    pub crossing_number: usize,
    pub jones: LaurentPoly,
}

/// Built-in knots: the unknot, the stored primes and their mirrors.
/// Jones polynomials are computed from the stored diagrams on first use.
#[derive(Debug)]
pub struct KnotTable {
    entries: Vec<TableEntry>,
    by_jones: HashMap<LaurentPoly, Vec<Vec<usize>>>,
}

fn mirror_name(name: &str) -> String {
    if AMPHICHIRAL.contains(&name) || name == "unknot" {
        return name.to_string();
    }
    match name.strip_prefix('m') {
        Some(rest) => rest.to_string(),
        None => format!("m{name}"),
    }
}

impl KnotTable {
    fn build() -> Result<Self> {
        let mut entries = vec![TableEntry {
            name: "unknot".into(),
            diagram: SpatialDiagram::unknot(),
            crossing_number: 0,
            jones: LaurentPoly::one(),
        }];
        for (name, code) in PRIMES {
            let d = from_pd(code)?;
            let j = jones(&d)?;
            let c = d.num_crossings();
            if !AMPHICHIRAL.contains(name) {
                let m = d.mirror();
                let jm = jones(&m)?;
                entries.push(TableEntry {
                    name: name.to_string(),
                    diagram: d,
                    crossing_number: c,
                    jones: j,
                });
                entries.push(TableEntry {
                    name: mirror_name(name),
                    diagram: m,
                    crossing_number: c,
                    jones: jm,
                });
            } else {
                entries.push(TableEntry {
                    name: name.to_string(),
                    diagram: d,
                    crossing_number: c,
                    jones: j,
                });
            }
        }
        // close under connected sums of up to MAX_SUMMANDS nontrivial knots
        let primes: Vec<usize> = (1..entries.len()).collect();
        let mut by_jones: HashMap<LaurentPoly, Vec<Vec<usize>>> = HashMap::new();
        by_jones
            .entry(LaurentPoly::one())
            .or_default()
            .push(vec![0]);
        let mut frontier: Vec<(Vec<usize>, LaurentPoly)> = vec![(vec![], LaurentPoly::one())];
        for _ in 0..MAX_SUMMANDS {
            let mut grown = Vec::new();
            for (ms, j) in &frontier {
                let start = ms.last().copied().unwrap_or(primes[0]);
                for &p in primes.iter().filter(|&&p| p >= start) {
                    let mut m = ms.clone();
                    m.push(p);
                    let jp = j * &entries[p].jones;
                    by_jones.entry(jp.clone()).or_default().push(m.clone());
                    grown.push((m, jp));
                }
            }
            frontier = grown;
        }
        Ok(KnotTable { entries, by_jones })
    }

    /// The shared table.
    pub fn get() -> &'static KnotTable {
        static TABLE: OnceLock<KnotTable> = OnceLock::new();
        TABLE.get_or_init(|| KnotTable::build().expect("built-in knot table is consistent"))
    }

    pub fn entries(&self) -> &[TableEntry] {
        &self.entries
    }

    pub fn entry(&self, name: &str) -> Option<&TableEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Canonical name of a connected sum: summands sorted by table order,
    /// unknots dropped.
    fn sum_name(&self, idx: &[usize]) -> String {
        let parts: Vec<&str> = idx
            .iter()
            .filter(|&&i| i != 0)
            .map(|&i| self.entries[i].name.as_str())
            .collect();
        if parts.is_empty() {
            "unknot".into()
        } else {
            parts.join("#")
        }
    }

    /// Split a name such as `3_1#m3_1` into table indices, in table order.
    pub fn parse_sum(&self, name: &str) -> Result<Vec<usize>> {
        let mut idx = Vec::new();
        for part in name.split('#') {
            let part = part.trim();
            let i = self
                .entries
                .iter()
                .position(|e| e.name == part)
                .ok_or_else(|| Error::UnknownKnot(name.to_string()))?;
            if i != 0 {
                idx.push(i);
            }
        }
        idx.sort_unstable();
        Ok(idx)
    }

    /// Normalised form of a sum name.
    pub fn normalize(&self, name: &str) -> Result<String> {
        Ok(self.sum_name(&self.parse_sum(name)?))
    }

    /// Crossing number of a sum of table knots. All table knots are
    /// alternating, so crossing number is additive over them.
    pub fn crossing_number(&self, name: &str) -> Result<usize> {
        Ok(self
            .parse_sum(name)?
            .iter()
            .map(|&i| self.entries[i].crossing_number)
            .sum())
    }

    pub fn jones_of(&self, name: &str) -> Result<LaurentPoly> {
        let mut j = LaurentPoly::one();
        for i in self.parse_sum(name)? {
            j = &j * &self.entries[i].jones;
        }
        Ok(j)
    }

    /// Name of the mirror image of a sum.
    pub fn mirror_of(&self, name: &str) -> Result<String> {
        let parts: Vec<String> = self
            .parse_sum(name)?
            .iter()
            .map(|&i| mirror_name(&self.entries[i].name))
            .collect();
        if parts.is_empty() {
            return Ok("unknot".into());
        }
        self.normalize(&parts.join("#"))
    }

    /// Match a Jones polynomial against sums of up to [`MAX_SUMMANDS`] table
    /// knots. `None` when nothing matches or more than one sum does.
    pub fn lookup(&self, j: &LaurentPoly) -> Option<String> {
        match self.by_jones.get(j).map(|v| v.as_slice()) {
            Some([only]) => Some(self.sum_name(only)),
            _ => None,
        }
    }
}

/// Identify a knot diagram by its Jones polynomial. Returns the table name
/// of the matching sum, or `"unknown"`.
pub fn identify(d: &SpatialDiagram) -> Result<String> {
    let j = jones(d)?;
    Ok(KnotTable::get()
        .lookup(&j)
        .unwrap_or_else(|| "unknown".to_string()))
}

/// Resolve a knot name or sum to a stored diagram, tying sums together.
pub fn knot_diagram(name: &str) -> Result<SpatialDiagram> {
    let t = KnotTable::get();
    let mut d = SpatialDiagram::unknot();
    for i in t.parse_sum(name)? {
        d = crate::constructors::connected_sum(&d, &t.entries()[i].diagram)?;
    }
    Ok(d)
}
