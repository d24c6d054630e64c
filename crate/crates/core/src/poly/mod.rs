//! Laurent polynomials in one and two variables, series in `t^-1`, and the
//! standard example families.

mod families;
mod laurent;
mod parse;
mod series;

pub use families::{torus_knot_alexander, unknot_alexander, unlink2_tilde, whitehead_alexander, whitehead_tilde};
pub use laurent::{tilde_normalize_link, Exponent, Laurent, LaurentPoly1, LaurentPoly2};
pub use parse::parse;
pub use series::{tilde_normalize_knot, NegPowerSeries};
