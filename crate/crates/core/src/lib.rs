//! Exact-arithmetic toolkit for inverse cyclic matrices, bi-diagonal
//! south-west (bdsw) matrices and the Z-matrix classes M, N, N0, F0 and
//! `L_s`.
//!
//! All scalars are exact [`Rational`]s, so every sign condition is decided
//! without tolerances. The modules build on each other:
//!
//! - [`matcore`]: rationals, matrices, determinants, inverses, minors;
//! - [`graph`]: the digraph of a matrix, paths and the path-sum inverse;
//! - [`zclass`]: Z-matrix taxonomy from principal minors;
//! - [`cyclic`]: inverse cyclic / bdsw structure, closed-form determinant
//!   and inverse, sign/parity verdicts;
//! - [`construct`]: type-D, parametric inverse cyclic, bdsw and circulant
//!   generators;
//! - [`cli`]: file formats, reports and seeded verification campaigns.
//!
//! Matrix indexing with `m[(i, j)]` is 0-based; index sets, path vertices,
//! [`Matrix::entry`] and all I/O are 1-based.

pub mod cli;
pub mod construct;
pub mod cyclic;
mod error;
pub mod graph;
pub mod matcore;
pub mod zclass;

pub use error::{Error, Result};
pub use matcore::{Matrix, Rational};
