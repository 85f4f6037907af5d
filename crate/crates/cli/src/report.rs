use std::fmt;

use rayon::prelude::*;

use spatial_knots::constructors::{
    build_oplus, build_theta, build_theta_n, check_omega_membership, connected_sum, cut_vertical,
    delete_vertical, double_diagram, resolve_nodes, KnotSpec, OmegaVerdict,
};
use spatial_knots::diagram::{crossing_matrix, serialize_sgd, strand_count, LabelFamily};
use spatial_knots::invariants::{identify, jones, KnotTable};
use spatial_knots::moves::{apply, Move};
use spatial_knots::{Error, Family, Result, SpatialDiagram};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Ge,
    Le,
    Eq,
}

impl Relation {
    pub fn holds(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Relation::Ge => lhs >= rhs,
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Ge => ">=",
            Relation::Le => "<=",
            Relation::Eq => "==",
        }
    }
}

/// One checked statement: `lhs relation rhs` plus any side conditions,
/// with the diagrams it was evaluated on.
#[derive(Debug, Clone)]
pub struct InequalityReport {
    /// E1, E-ineq, E-prop, C31, P32, P43 or L51.
    pub id: &'static str,
    pub what: String,
    pub lhs: i64,
    pub rhs: i64,
    pub relation: Relation,
    pub pass: bool,
    /// (name, .sgd text) of every diagram the numbers came from.
    pub inputs: Vec<(String, String)>,
    pub notes: Vec<String>,
}

impl InequalityReport {
    pub fn new(
        id: &'static str,
        what: impl Into<String>,
        lhs: usize,
        relation: Relation,
        rhs: usize,
    ) -> Self {
        let (lhs, rhs) = (lhs as i64, rhs as i64);
        InequalityReport {
            id,
            what: what.into(),
            lhs,
            rhs,
            relation,
            pass: relation.holds(lhs, rhs),
            inputs: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn input(mut self, name: impl Into<String>, d: &SpatialDiagram) -> Self {
        self.inputs.push((name.into(), serialize_sgd(d)));
        self
    }

    pub fn note(mut self, s: impl Into<String>) -> Self {
        self.notes.push(s.into());
        self
    }

    /// A side condition; failing it fails the report.
    pub fn require(mut self, ok: bool, why: impl Into<String>) -> Self {
        if !ok {
            self.pass = false;
            self.notes.push(why.into());
        }
        self
    }

    /// `STMT <id> LHS <int> RHS <int> VERDICT <pass|fail>`
    pub fn line(&self) -> String {
        format!(
            "STMT {} LHS {} RHS {} VERDICT {}",
            self.id,
            self.lhs,
            self.rhs,
            if self.pass { "pass" } else { "fail" }
        )
    }

    /// The line, the statement, notes and the embedded diagrams.
    pub fn full(&self) -> String {
        let mut s = format!("{self}\n");
        for (name, sgd) in &self.inputs {
            s.push_str(&format!("# diagram {name}\n{sgd}"));
            if !sgd.ends_with('\n') {
                s.push('\n');
            }
        }
        s
    }
}

impl fmt::Display for InequalityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}  # {}: {} {} {}",
            self.line(),
            self.what,
            self.lhs,
            self.relation.symbol(),
            self.rhs
        )?;
        for n in &self.notes {
            write!(f, "\n#   {n}")?;
        }
        if !self.pass {
            write!(
                f,
                "\n#   would contradict a proven statement: inspect diagram validity"
            )?;
        }
        Ok(())
    }
}

/// Reports from one or more checks, in a fixed order.
#[derive(Debug, Clone, Default)]
pub struct Suite {
    pub reports: Vec<InequalityReport>,
    pub notes: Vec<String>,
}

impl Suite {
    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(|r| r.pass)
    }

    pub fn extend(&mut self, other: Suite) {
        self.reports.extend(other.reports);
        self.notes.extend(other.notes);
    }

    fn one(r: InequalityReport) -> Self {
        Suite {
            reports: vec![r],
            notes: Vec::new(),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for n in &self.notes {
            writeln!(f, "# {n}")?;
        }
        for r in &self.reports {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

fn name_of(k: &KnotSpec) -> Result<String> {
    k.table_name()?
        .ok_or_else(|| Error::UnknownKnot(k.to_string()))
}

fn cn(name: &str) -> Result<usize> {
    KnotTable::get().crossing_number(name)
}

fn sum_name(a: &str, b: &str) -> String {
    format!("{a}#{b}")
}

fn is_theta(d: &SpatialDiagram) -> bool {
    d.family() == Family::Theta && d.label_set().iter().any(|l| l.family == LabelFamily::Y)
}

/// Crossings among the x and z edges against c(K1#K2).
pub fn verify_eq1(d: &SpatialDiagram, k1: &KnotSpec, k2: &KnotSpec) -> Result<Suite> {
    if !is_theta(d) {
        return Ok(Suite {
            reports: Vec::new(),
            notes: vec![format!(
                "E1 skipped: {} is not a theta-curve with a y edge",
                d.family()
            )],
        });
    }
    let (n1, n2) = (name_of(k1)?, name_of(k2)?);
    let m = crossing_matrix(d)?;
    let xz = m
        .entries()
        .filter(|((a, b), _)| a.family != LabelFamily::Y && b.family != LabelFamily::Y)
        .map(|(_, v)| v)
        .sum();
    let s = sum_name(&n1, &n2);
    Ok(Suite::one(
        InequalityReport::new(
            "E1",
            format!("xx+xz+zz >= c({s})"),
            xz,
            Relation::Ge,
            cn(&s)?,
        )
        .input("theta", d),
    ))
}

/// 2c(D) against c(K1#K2) + c(K1) + c(K2) + xy + xz + yz, and the weaker
/// bound without the mixed terms.
pub fn verify_ineq(d: &SpatialDiagram, k1: &KnotSpec, k2: &KnotSpec) -> Result<Suite> {
    if !is_theta(d) {
        return Ok(Suite {
            reports: Vec::new(),
            notes: vec![format!("E-ineq skipped: {} is degenerate here", d.family())],
        });
    }
    let (n1, n2) = (name_of(k1)?, name_of(k2)?);
    let s = sum_name(&n1, &n2);
    let base = cn(&s)? + cn(&n1)? + cn(&n2)?;
    let m = crossing_matrix(d)?;
    let mixed = m.off_diagonal_sum();
    let two_c = 2 * d.num_crossings();
    Ok(Suite {
        reports: vec![
            InequalityReport::new(
                "E-ineq",
                format!("2c(D) >= c({s})+c({n1})+c({n2})+xy+xz+yz"),
                two_c,
                Relation::Ge,
                base + mixed,
            )
            .input("theta", d),
            InequalityReport::new(
                "E-prop",
                format!("2c(D) >= c({s})+c({n1})+c({n2})"),
                two_c,
                Relation::Ge,
                base,
            ),
        ],
        notes: Vec::new(),
    })
}

/// Lower and upper crossing bounds for θ^n, and the knot type of its
/// node resolution.
pub fn verify_theta_n(d: &SpatialDiagram, k1: &KnotSpec, k2: &KnotSpec, n: usize) -> Result<Suite> {
    if d.family() != Family::ThetaN(n) {
        return Err(Error::Precondition(format!(
            "expected theta-{n}, got {}",
            d.family()
        )));
    }
    let (n1, n2) = (name_of(k1)?, name_of(k2)?);
    let s = sum_name(&n1, &n2);
    let c = d.num_crossings();
    let (c1, c2) = (cn(&n1)?, cn(&n2)?);
    let mut out = Suite::default();
    out.reports.push(
        InequalityReport::new(
            "C31",
            format!("c(D) >= {n}c({s})"),
            c,
            Relation::Ge,
            n * cn(&s)?,
        )
        .input("theta-n", d),
    );
    out.reports.push(InequalityReport::new(
        "C31",
        format!("c(D) <= {n}(c({n1})+c({n2}))"),
        c,
        Relation::Le,
        n * (c1 + c2),
    ));
    let r = resolve_nodes(d)?;
    let t = KnotTable::get();
    let expected = t.normalize(&vec![s.as_str(); n].join("#"))?;
    let j = jones(&r)?;
    let got = identify(&r)?;
    let p = InequalityReport::new(
        "P32",
        format!("c(D) >= c(({s})^{n}) via node resolution"),
        c,
        Relation::Ge,
        n * (c1 + c2),
    )
    .input("resolved", &r)
    .require(
        r.num_crossings() == c,
        "resolution changed the crossing count",
    )
    .require(strand_count(&r) == 1, "resolution is not a knot")
    .require(
        j == t.jones_of(&expected)?,
        format!("Jones polynomial of the resolution differs from {expected}"),
    )
    .note(if got == "unknown" {
        format!("Jones polynomial of the resolution equals that of {expected}")
    } else {
        format!("resolution identified as {got}")
    });
    out.reports.push(p);
    Ok(out)
}

/// Build the n-fold parallel doubling of a diagram of K1#K2 and check its
/// crossing count and membership in Ω^n. When the sum diagram admits no
/// suitable partition, one R2 move is added first.
pub fn verify_square(k1: &KnotSpec, k2: &KnotSpec, n: usize) -> Result<Suite> {
    let (n1, n2) = (name_of(k1)?, name_of(k2)?);
    let s = sum_name(&n1, &n2);
    let mut sum = connected_sum(&k1.diagram()?, &k2.diagram()?)?;
    let mut out = Suite::default();
    let doubled = match double_diagram(&sum, n) {
        Ok(d) => d,
        Err(Error::BothAlternating) => {
            sum = add_r2(&sum)?;
            out.notes.push(format!(
                "P43: the diagram of {s} has no partition with both arcs self-crossing; used a {}-crossing diagram with one extra R2 move",
                sum.num_crossings()
            ));
            double_diagram(&sum, n)?
        }
        Err(e) => return Err(e),
    };
    let c = sum.num_crossings();
    let mut r = InequalityReport::new(
        "P43",
        format!("{n}^2 c(K) >= c(D_{n}) for a {c}-crossing diagram K of {s}"),
        n * n * c,
        Relation::Ge,
        doubled.num_crossings(),
    )
    .input("sum", &sum)
    .input("doubled", &doubled)
    .require(
        doubled.num_crossings() == n * n * c,
        "doubled diagram does not have n^2 c(K) crossings",
    );
    if n >= 2 {
        let om = check_omega_membership(&doubled, k1, k2)?;
        r = r
            .require(
                om.verdict == OmegaVerdict::Member,
                format!("Omega membership verdict {}", om.verdict),
            )
            .note(format!("Omega membership: {}", om.verdict));
    }
    if c == cn(&s)? {
        r = r.note(format!("{c} = c({s}), so c(Omega^{n}) <= {}", n * n * c));
    }
    out.reports.push(r);
    Ok(out)
}

fn add_r2(d: &SpatialDiagram) -> Result<SpatialDiagram> {
    for f in d.faces() {
        for (i, &a) in f.darts.iter().enumerate() {
            for &b in &f.darts[i + 1..] {
                if d.partner(a) == b {
                    continue;
                }
                let m = Move::R2Plus {
                    first: a,
                    second: b,
                    first_over: true,
                };
                if let Ok(e) = apply(d, &m) {
                    if double_diagram(&e, 2).is_ok() {
                        return Ok(e);
                    }
                }
            }
        }
    }
    Err(Error::BothAlternating)
}

/// Deleting vertical edge `i` of ⊕^{n,k} and cutting along it.
pub fn verify_oplus(n: usize, k: usize, i: usize, k1: &KnotSpec, k2: &KnotSpec) -> Result<Suite> {
    let o = build_oplus(n, k, k1, k2)?;
    let g = delete_vertical(&o, i)?;
    let (left, right) = cut_vertical(&o, i)?;
    let per = n * (k1.diagram()?.num_crossings() + k2.diagram()?.num_crossings());
    let oc = o.num_crossings();
    Ok(Suite {
        reports: vec![
            InequalityReport::new(
                "L51",
                format!("c(oplus^{{{n},{k}}}) >= c(G^{{{n},{k},{i}}})"),
                oc,
                Relation::Ge,
                g.num_crossings(),
            )
            .input("oplus", &o)
            .input("G", &g)
            .require(
                oc == (k + 1) * per,
                format!(
                    "oplus should have (k+1)n(c1+c2) = {} crossings",
                    (k + 1) * per
                ),
            ),
            InequalityReport::new(
                "L51",
                format!("cut along vertical edge {i}: c(left)+c(right) == c(oplus)"),
                left.num_crossings() + right.num_crossings(),
                Relation::Eq,
                oc,
            )
            .input("left", &left)
            .input("right", &right),
        ],
        notes: Vec::new(),
    })
}

/// Every check for one pair: θ, θ^m and the doubling for m ≤ n, and
/// ⊕^{m,j} for m ≤ n, j ≤ k with every valid cut. Checks run concurrently;
/// results come back in a fixed order.
pub fn verify_all(k1: &KnotSpec, k2: &KnotSpec, n: usize, k: usize) -> Result<Suite> {
    type Job<'a> = Box<dyn Fn() -> Result<Suite> + Send + Sync + 'a>;
    let mut jobs: Vec<Job> = Vec::new();
    jobs.push(Box::new(|| {
        let t = build_theta(k1, k2)?;
        let mut s = verify_eq1(&t, k1, k2)?;
        s.extend(verify_ineq(&t, k1, k2)?);
        Ok(s)
    }));
    for m in 1..=n {
        jobs.push(Box::new(move || {
            verify_theta_n(&build_theta_n(m, k1, k2)?, k1, k2, m)
        }));
        jobs.push(Box::new(move || verify_square(k1, k2, m)));
        for j in 1..=k {
            for i in 1..=j {
                jobs.push(Box::new(move || verify_oplus(m, j, i, k1, k2)));
            }
        }
    }
    let parts: Vec<Result<Suite>> = jobs.par_iter().map(|j| j()).collect();
    let mut out = Suite::default();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}
