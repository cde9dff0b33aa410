//! Hodge-diamond model of the basic Dolbeault cohomology of Sasakian
//! characteristic foliations.
//!
//! Constructors built from structure theorems (flag-manifold deformations,
//! rational-homology-sphere Gysin sequences) always emit diamonds satisfying
//! those theorems. Validation of claimed data is kept separate in
//! [`validate`]: diamonds are stored as full matrices so that hand-entered
//! input can actually fail the symmetry and duality audits.

mod document;
mod fixtures;
mod validate;

pub use document::DiamondDocument;
pub use fixtures::{builtin_fixtures, LeafCount, Positivity, SasakiStructureRecord};
pub use validate::{
    carrell_lieberman_check, check_finite_closed_leaves_vanishing, check_positivity_vanishing,
    validate_diamond, RuleResult, ValidationOptions, ValidationReport,
};

use num_bigint::BigUint;
use thiserror::Error;

use crate::flagcoh::{BettiVector, FlagCohomology};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SasakiError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("hodge matrix must be {expected}x{expected} for n = {n}")]
    ShapeMismatch { n: usize, expected: usize },
}

/// Matrix of basic Hodge numbers `h^{p,q}` for `0 <= p, q <= n`, with `n`
/// the transverse complex dimension. Entries are signed so that invalid
/// claimed data can be represented and then rejected by the validators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HodgeDiamond {
    n: usize,
    entries: Vec<Vec<i64>>,
}

impl HodgeDiamond {
    /// Builds a diamond from a full `(n+1) x (n+1)` matrix, row index `p`,
    /// column index `q`. Only the shape is enforced here; value constraints
    /// are the validators' job.
    pub fn new(n: usize, entries: Vec<Vec<i64>>) -> Result<HodgeDiamond, SasakiError> {
        let expected = n + 1;
        if entries.len() != expected || entries.iter().any(|row| row.len() != expected) {
            return Err(SasakiError::ShapeMismatch { n, expected });
        }
        Ok(HodgeDiamond { n, entries })
    }

    /// Diamond concentrated on the diagonal: `h^{k,k} = values[k]`.
    pub fn diagonal(values: &[i64]) -> HodgeDiamond {
        assert!(!values.is_empty(), "a diamond has at least h^{{0,0}}");
        let n = values.len() - 1;
        let mut entries = vec![vec![0i64; n + 1]; n + 1];
        for (k, &v) in values.iter().enumerate() {
            entries[k][k] = v;
        }
        HodgeDiamond { n, entries }
    }

    /// Transverse complex dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, p: usize, q: usize) -> i64 {
        self.entries[p][q]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(p, row)| row.iter().enumerate().all(|(q, &v)| p == q || v == 0))
    }

    /// Sum of `h^{p,p+s}` over `p`, the anti-diagonal-offset slice used by
    /// localization comparisons; `s` may be negative.
    pub fn diagonal_offset_sum(&self, s: i64) -> i64 {
        let mut total = 0;
        for p in 0..=self.n {
            let q = p as i64 + s;
            if (0..=self.n as i64).contains(&q) {
                total += self.entries[p][q as usize];
            }
        }
        total
    }
}

/// The bigraded truncated polynomial ring `C[z]/(z^(n+1))` with `z` in
/// bidegree `(1,1)`: the basic Dolbeault cohomology of any Sasakian
/// structure on a rational homology `(2n+1)`-sphere, where `z` is the class
/// of the transverse Kähler form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GysinDiamond {
    n: usize,
}

impl GysinDiamond {
    pub fn new(n: usize) -> GysinDiamond {
        GysinDiamond { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `h^{p,q} = 1` exactly on the diagonal `0 <= p = q <= n`.
    pub fn diamond(&self) -> HodgeDiamond {
        HodgeDiamond::diagonal(&vec![1; self.n + 1])
    }
}

/// Basic Hodge diamond of a Sasakian structure on a rational homology
/// `(2n+1)`-sphere, `n >= 1`.
pub fn sphere_diamond(n: usize) -> HodgeDiamond {
    assert!(n >= 1, "a Sasakian sphere has dimension at least 3");
    GysinDiamond::new(n).diamond()
}

/// Basic Hodge diamond of the finitely-many-closed-leaves deformation of a
/// homogeneous Sasakian structure over the given flag manifold: diagonal,
/// with `h^{k,k}` the even Betti number `b^{2k}(G/H)`.
pub fn diamond_from_flag(flag: &FlagCohomology) -> HodgeDiamond {
    let betti = flag.betti().entries();
    let diagonal: Vec<i64> = betti
        .iter()
        .step_by(2)
        .map(|&b| i64::try_from(b).expect("Betti numbers bounded by the enumeration budget"))
        .collect();
    debug_assert_eq!(diagonal.len(), flag.complex_dimension() + 1);
    HodgeDiamond::diagonal(&diagonal)
}

/// Basic Betti numbers from a diamond: `b^k = sum over p+q=k of h^{p,q}`.
/// Requires a valid (in particular nonnegative) diamond.
pub fn betti_from_diamond(diamond: &HodgeDiamond) -> BettiVector {
    let n = diamond.n();
    let entries: Vec<u64> = (0..=2 * n)
        .map(|k| {
            let mut b: i64 = 0;
            for p in 0..=k.min(n) {
                let q = k - p;
                if q <= n {
                    b += diamond.entry(p, q);
                }
            }
            u64::try_from(b).expect("betti_from_diamond requires a nonnegative diamond")
        })
        .collect();
    BettiVector::new(entries)
}

/// Number of closed leaves of the deformed characteristic foliation over a
/// flag manifold: the Euler number, which equals the total basic Betti
/// number since the odd cohomology vanishes.
pub fn closed_leaf_count_from_flag(flag: &FlagCohomology) -> BigUint {
    let total = flag.betti().total();
    assert_eq!(
        &total,
        flag.euler(),
        "total Betti number must equal the Euler number"
    );
    total
}
