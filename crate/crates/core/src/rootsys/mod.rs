//! Exact combinatorics of root systems, Weyl groups, exponents, and
//! parabolic (Levi) quotients for the simple types A through G.
//!
//! Everything here is integer arithmetic on root and weight coordinates;
//! there is no floating point in this module. Node numbering follows the
//! Bourbaki convention documented in [`cartan`].

mod cartan;
mod exponents;
mod levi;
mod roots;
mod weyl;

pub use cartan::{CartanType, SimpleType};
pub use exponents::{exponents, weyl_order, ExponentSet};
pub use levi::{levi_decompose, levi_exponents, GroupSpec, LeviSpec};
pub use roots::RootSystem;
pub use weyl::{
    levi_positive_root_count, levi_weyl_order, parabolic_coset_data,
    parabolic_coset_data_with_budget, weyl_enumerate, weyl_enumerate_with_budget,
    WeylCosetData, WeylEnumeration, DEFAULT_ENUMERATION_BUDGET,
};

use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootSystemError {
    /// `(type, rank)` is not a simple type: valid are A_n (n>=1), B_n
    /// (n>=2), C_n (n>=3), D_n (n>=4), E_6/E_7/E_8, F_4, G_2.
    #[error("invalid simple type {cartan_type}{rank}")]
    InvalidType {
        cartan_type: CartanType,
        rank: usize,
    },
    #[error("duplicate Levi node {node}")]
    DuplicateLeviNode { node: usize },
    #[error("Levi node {node} out of range 1..={rank}")]
    LeviNodeOutOfRange { node: usize, rank: usize },
    /// An enumeration would visit more states than the configured cap.
    #[error("enumeration of {required} elements exceeds the budget of {budget}")]
    EnumerationBudgetExceeded { required: BigUint, budget: u64 },
    /// An induced subdiagram failed type recognition; unreachable for
    /// subdiagrams of valid simple types.
    #[error("unrecognized Dynkin subdiagram on nodes {nodes:?}")]
    UnrecognizedDiagram { nodes: Vec<usize> },
}
