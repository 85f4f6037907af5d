use rayon::prelude::*;

use super::double::constituent;
use super::KnotSpec;
use crate::diagram::{EdgeLabel, LabelFamily, SpatialDiagram};
use crate::error::{Error, Result};
use crate::invariants::{jones, KnotTable};
use crate::poly::LaurentPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OmegaVerdict {
    Member,
    NonMember,
    Unknown,
}

impl std::fmt::Display for OmegaVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            OmegaVerdict::Member => "member",
            OmegaVerdict::NonMember => "non-member",
            OmegaVerdict::Unknown => "unknown",
        })
    }
}

/// One constituent knot and what was concluded about it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairReport {
    pub a: EdgeLabel,
    pub b: EdgeLabel,
    pub crossings: usize,
    /// Table name, or `"unknown"`.
    pub identified: String,
    pub ok: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaReport {
    pub pairs: Vec<PairReport>,
    pub verdict: OmegaVerdict,
    pub notes: Vec<String>,
}

/// Check that every x–z constituent is K1#K2 and that no x–x or z–z
/// constituent is the unknot or K1#K2#K1#K2.
///
/// Mixed pairs must identify as K1#K2 in the knot table. Same-colour pairs
/// are compared by Jones polynomial against both excluded knots; a pair
/// whose polynomial equals one of them but which is not certified by a
/// crossing-free diagram yields `Unknown`.
pub fn check_omega_membership(
    d: &SpatialDiagram,
    k1: &KnotSpec,
    k2: &KnotSpec,
) -> Result<OmegaReport> {
    if d.num_nodes() != 2 {
        return Err(Error::Precondition(format!(
            "expected a two-node diagram, found {} nodes",
            d.num_nodes()
        )));
    }
    let t = KnotTable::get();
    let mut notes = Vec::new();
    let (n1, n2) = (k1.table_name()?, k2.table_name()?);
    let (sum_name, sum_jones) = match (&n1, &n2) {
        (Some(a), Some(b)) => {
            let s = t.normalize(&format!("{a}#{b}"))?;
            let j = t.jones_of(&s)?;
            (Some(s), j)
        }
        _ => {
            notes.push("a summand is not in the knot table".into());
            let j = &jones(&k1.diagram()?)? * &jones(&k2.diagram()?)?;
            (None, j)
        }
    };
    let double_jones = &sum_jones * &sum_jones;
    let labels: Vec<EdgeLabel> = d.label_set().into_iter().collect();
    let mut pairs = Vec::new();
    for (i, &a) in labels.iter().enumerate() {
        for &b in &labels[i + 1..] {
            pairs.push((a, b));
        }
    }
    let checked: Vec<Result<(PairReport, bool)>> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let k = constituent(d, &[a, b])?;
            let j = jones(&k)?;
            let identified = t.lookup(&j).unwrap_or_else(|| "unknown".into());
            let mixed = a.family != b.family;
            let (ok, certain_fail) = if mixed {
                match &sum_name {
                    Some(s) if identified == *s => (Some(true), false),
                    Some(_) if j != sum_jones => (Some(false), true),
                    Some(_) => (None, false),
                    None => (
                        if j == sum_jones { None } else { Some(false) },
                        j != sum_jones,
                    ),
                }
            } else if k.num_crossings() == 0 {
                (Some(false), true)
            } else if j == LaurentPoly::one() || j == double_jones {
                (None, false)
            } else {
                (Some(true), false)
            };
            Ok((
                PairReport {
                    a,
                    b,
                    crossings: k.num_crossings(),
                    identified,
                    ok,
                },
                certain_fail,
            ))
        })
        .collect();
    let mut verdict = OmegaVerdict::Member;
    let mut reports = Vec::with_capacity(checked.len());
    for r in checked {
        let (p, certain_fail) = r?;
        match p.ok {
            Some(true) => {}
            Some(false) if certain_fail => verdict = OmegaVerdict::NonMember,
            _ => {
                if verdict == OmegaVerdict::Member {
                    verdict = OmegaVerdict::Unknown;
                }
            }
        }
        reports.push(p);
    }
    let colours = |f: LabelFamily| labels.iter().filter(|l| l.family == f).count();
    if colours(LabelFamily::X) == 0 || colours(LabelFamily::Z) == 0 {
        notes.push("diagram lacks one of the two colours".into());
        verdict = OmegaVerdict::NonMember;
    }
    Ok(OmegaReport {
        pairs: reports,
        verdict,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{build_theta_n, connected_sum, double_diagram};

    #[test]
    fn theta_n_is_member() {
        let k = KnotSpec::named;
        let d = build_theta_n(2, &k("3_1"), &k("4_1")).unwrap();
        let r = check_omega_membership(&d, &k("3_1"), &k("4_1")).unwrap();
        assert_eq!(r.pairs.len(), 6);
        assert_eq!(r.verdict, OmegaVerdict::Member, "{r:?}");
    }

    #[test]
    fn planar_is_not() {
        let k = KnotSpec::named;
        let d = build_theta_n(2, &k("unknot"), &k("unknot")).unwrap();
        let r = check_omega_membership(&d, &k("3_1"), &k("4_1")).unwrap();
        assert_eq!(r.verdict, OmegaVerdict::NonMember);
    }

    #[test]
    fn doubled_is_member() {
        let t = KnotTable::get();
        let s = connected_sum(
            &t.entry("3_1").unwrap().diagram,
            &t.entry("4_1").unwrap().diagram,
        )
        .unwrap();
        let d = double_diagram(&s, 2).unwrap();
        let k = KnotSpec::named;
        let r = check_omega_membership(&d, &k("3_1"), &k("4_1")).unwrap();
        assert_eq!(r.verdict, OmegaVerdict::Member, "{r:?}");
    }
}
