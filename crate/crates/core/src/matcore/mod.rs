//! Exact rational scalars, dense square matrices, determinants, inverses and
//! minors. Every theorem check in the crate bottoms out here.

mod elim;
mod matrix;
mod minors;
mod rational;

pub use elim::{det, det_sign, inverse, is_singular};
pub use matrix::Matrix;
pub(crate) use minors::minor_of;
pub use minors::{complementary_minor_check, principal_minor, principal_submatrix, submatrix, IndexSet};
pub use rational::{checked_div, int, parse_rational, pow, rat, to_decimal, to_f64, Rational};
