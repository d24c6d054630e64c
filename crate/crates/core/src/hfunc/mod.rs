//! H-functions of knots and two-component links, with axiom validation.

mod knot;
mod link;
mod report;

pub use knot::{h_from_alexander_knot, nu_plus, KnotHFunction};
pub use link::{b_invariants, blowdown_h, h_from_alexander_link, h_unlink, LinkHFunction2, TableKind};
pub use report::{Axiom, HValidationReport, Violation};
