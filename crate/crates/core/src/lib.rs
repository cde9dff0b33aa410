//! Basic Hodge diamonds of Sasakian structures over generalized flag
//! manifolds, computed exactly.
//!
//! A compact homogeneous Sasakian manifold is a circle bundle over a
//! generalized flag manifold `G/H`, with `H` the centralizer of a torus in
//! `G`. Deforming the Reeb field to a generic direction leaves a
//! characteristic foliation with finitely many closed leaves whose basic
//! Hodge numbers are concentrated on the diagonal and given by the Betti
//! numbers of `G/H`; the closed-leaf count is the Euler number. This crate
//! computes those invariants from exact root-system combinatorics, always
//! by at least two independent routes:
//!
//! - [`rootsys`]: root systems, Weyl groups, exponents, Levi subgroups, and
//!   minimal-length parabolic coset representatives for types A through G;
//! - [`polyring`]: arbitrary-precision integer polynomial arithmetic with
//!   exact division;
//! - [`flagcoh`]: Poincaré polynomials of `G/H` via the exponent quotient
//!   formula and independently via Bruhat cells, Betti vectors, and Euler
//!   numbers by three routes;
//! - [`sasaki`]: Hodge diamond constructions, validators for the symmetry,
//!   duality, vanishing, and localization constraints, and the built-in
//!   fixture structures;
//! - [`cli`]: the `sasaki-hodge` command-line front end.
//!
//! See the crate examples for runnable entry points to each capability.

pub mod cli;
pub mod flagcoh;
pub mod polyring;
pub mod rootsys;
pub mod sasaki;

pub use flagcoh::{compute_flag_cohomology, BettiVector, FlagCohomology};
pub use polyring::IntPolynomial;
pub use rootsys::{CartanType, LeviSpec, RootSystem};
pub use sasaki::HodgeDiamond;
