use crate::diagram::builder::Builder;
use crate::diagram::{EdgeLabel, SpatialDiagram};
use crate::error::{Error, Result};

fn node_labels(d: &SpatialDiagram, node: usize) -> Result<Vec<EdgeLabel>> {
    d.nodes()[node]
        .iter()
        .map(|&h| d.label_of(h).ok_or(Error::Unlabeled(d.arc_of(h).0)))
        .collect()
}

/// Connected sum of two theta-type diagrams: the second node of `a` and the
/// first node of `b` are removed and edges with equal labels are joined.
/// Node 0 of `a` and node 1 of `b` remain, in that order.
pub fn theta_connected_sum(a: &SpatialDiagram, b: &SpatialDiagram) -> Result<SpatialDiagram> {
    for d in [a, b] {
        if d.num_nodes() != 2 {
            return Err(Error::Precondition(format!(
                "expected two nodes, found {}",
                d.num_nodes()
            )));
        }
    }
    let (da, db) = (a.nodes()[1].len(), b.nodes()[0].len());
    if da != db || a.nodes()[0].len() != da || b.nodes()[1].len() != db {
        return Err(Error::DegreeMismatch(
            a.nodes()[0].len(),
            b.nodes()[0].len(),
        ));
    }
    if a.family() != b.family() {
        return Err(Error::Precondition(format!(
            "families differ: {} and {}",
            a.family(),
            b.family()
        )));
    }
    let la = node_labels(a, 1)?;
    let mut lb = node_labels(b, 0)?;
    lb.reverse();
    let mut distinct = la.clone();
    distinct.sort();
    distinct.dedup();
    if distinct.len() != la.len() {
        return Err(Error::Precondition("edge labels repeat at a node".into()));
    }
    let matches = (0..da).any(|s| (0..da).all(|i| la[i] == lb[(i + s) % da]));
    if !matches {
        return Err(Error::Precondition(
            "label orders at the joined nodes are not mirror images".into(),
        ));
    }
    let mut bl = Builder::new(a.family());
    bl.absorb(a);
    bl.absorb(b);
    let na = bl.nodes[1].take().expect("node");
    let nb = bl.nodes[2].take().expect("node");
    for (i, &ha) in na.iter().enumerate() {
        let l = la[i];
        let j = lb.iter().position(|&x| x == l).unwrap();
        let hb = nb[da - 1 - j];
        let (pa, pb) = (bl.partner(ha), bl.partner(hb));
        bl.link(pa, pb);
    }
    bl.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{build_theta, build_theta_n, planar_theta, KnotSpec};
    use crate::diagram::{canonical_code, crossing_matrix, validate};

    #[test]
    fn tying_commutes() {
        let k = KnotSpec::named;
        let a = build_theta(&k("3_1"), &k("unknot")).unwrap();
        let b = build_theta(&k("unknot"), &k("4_1")).unwrap();
        let s = theta_connected_sum(&a, &b).unwrap();
        assert!(validate(&s).is_valid());
        let t = build_theta(&k("3_1"), &k("4_1")).unwrap();
        assert_eq!(crossing_matrix(&s).unwrap(), crossing_matrix(&t).unwrap());
        assert_eq!(canonical_code(&s), canonical_code(&t));

        let a = build_theta(&k("3_1"), &k("5_1")).unwrap();
        let b = build_theta(&k("4_1"), &k("5_2")).unwrap();
        let s = theta_connected_sum(&a, &b).unwrap();
        let t = build_theta(&k("3_1#4_1"), &k("5_1#5_2")).unwrap();
        assert_eq!(canonical_code(&s), canonical_code(&t));
    }

    #[test]
    fn planar_is_identity_on_counts() {
        let k = KnotSpec::named;
        let a = build_theta(&k("5_2"), &k("4_1")).unwrap();
        let s = theta_connected_sum(&a, &planar_theta()).unwrap();
        assert_eq!(s.num_crossings(), 9);
    }

    #[test]
    fn degree_mismatch() {
        let k = KnotSpec::named;
        let a = build_theta_n(2, &k("3_1"), &k("4_1")).unwrap();
        let b = build_theta_n(3, &k("3_1"), &k("4_1")).unwrap();
        assert_eq!(
            theta_connected_sum(&a, &b),
            Err(Error::DegreeMismatch(4, 6))
        );
    }
}
