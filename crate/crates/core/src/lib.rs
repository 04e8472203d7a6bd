//! Toric ideals presented by integer-matrix parametrizations.
//!
//! A parametrization sends each variable `x_i` to a Laurent monomial
//! `t^{a_i}`, where `a_i` is the `i`-th column of an integer matrix `A`. The
//! ideal it presents is the kernel of that map, which is generated by the
//! binomials `x^{u+} - x^{u-}` with `u+ - u-` in the integer kernel of `A`.
//!
//! The crate covers:
//!
//! * exact integer and rational linear algebra ([`linalg`], [`matrix`]);
//! * binomials, homogenization and dehomogenization ([`monomial`]);
//! * single-ideal constructions: dimension, homogeneity certificates,
//!   re-parametrization and pinning a variable to a single parameter
//!   ([`param`]);
//! * sums of toric ideals that share at most one variable pairwise, driven by
//!   the family graph ([`graph`], [`sum`]);
//! * a brute-force oracle that enumerates kernel binomials and decides
//!   membership in homogeneous binomial ideals by monomial rewriting
//!   ([`oracle`]).
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![deny(rust_2018_idioms, unused_must_use)]
#![warn(missing_debug_implementations)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod graph;
pub mod linalg;
pub mod matrix;
pub mod monomial;
pub mod oracle;
pub mod param;
pub mod sum;

pub use error::{Error, Result};
pub use graph::{Component, Edge, IdealFamilyGraph};
pub use linalg::{LatticeBasis, SmithDecomposition};
pub use matrix::{IntegerMatrix, RationalMatrix};
pub use monomial::{Binomial, IdealPresentation, Monomial, VariableSet};
pub use oracle::{CertificationVerdict, DegreeBound, VerdictStatus};
pub use param::{HomogeneityCertificate, Parametrization, PinResult};
pub use sum::{FamilyReport, FamilySum, SumConstruction, SumOptions};
