//! Knot and spatial-graph diagrams: construction, invariants, moves and
//! crossing-number bookkeeping for theta-curves and their generalisations.

pub mod constructors;
pub mod diagram;
pub mod error;
pub mod gamma;
pub mod gauss;
pub mod invariants;
pub mod moves;
pub mod poly;

pub use diagram::{EdgeLabel, Family, HalfEdge, KnotDiagram, SpatialDiagram};
pub use error::{Error, Result};
pub use poly::LaurentPoly;
