//! Verification reports, SVG export and helpers behind the `sgd` binary.

pub mod report;
pub mod svg;

pub use report::{
    verify_all, verify_eq1, verify_ineq, verify_oplus, verify_square, verify_theta_n,
    InequalityReport, Relation, Suite,
};
pub use svg::to_svg;
