//! Kauffman bracket, Jones polynomial and table-based identification.

mod bracket;
mod table;

pub use bracket::{crossing_signs, jones, kauffman_bracket, writhe, MAX_BRACKET_CROSSINGS};
pub(crate) use bracket::{orient, Strands};
pub use table::{from_pd, identify, knot_diagram, KnotTable, TableEntry, MAX_SUMMANDS};
