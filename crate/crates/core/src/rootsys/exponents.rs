//! Weyl exponents and topological degrees.
//!
//! The exponents `m_1 <= ... <= m_r` of a Weyl group are read off the root
//! system as the conjugate partition of the height distribution of positive
//! roots: `m` appears once for each height `h` with at least `m` roots.
//! The cohomology of the compact group is an exterior algebra on generators
//! of degree `g_i = 2 m_i + 1`; torus factors contribute `m = 0`, `g = 1`.

use num_bigint::BigUint;
use num_traits::One;

use super::roots::RootSystem;

/// Multiset of Weyl exponents of a (possibly non-semisimple) compact group,
/// sorted ascending. Torus factors contribute exponent 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentSet {
    weyl_exponents: Vec<usize>,
}

impl ExponentSet {
    pub fn from_exponents(mut weyl_exponents: Vec<usize>) -> ExponentSet {
        weyl_exponents.sort_unstable();
        ExponentSet { weyl_exponents }
    }

    /// Exponents of a rank-`z` torus: `z` zeros.
    pub fn torus(rank: usize) -> ExponentSet {
        ExponentSet {
            weyl_exponents: vec![0; rank],
        }
    }

    pub fn weyl_exponents(&self) -> &[usize] {
        &self.weyl_exponents
    }

    /// Topological degrees `g_i = 2 m_i + 1`, sorted ascending; all odd.
    pub fn degrees(&self) -> Vec<usize> {
        self.weyl_exponents.iter().map(|m| 2 * m + 1).collect()
    }

    /// Total rank, one exponent per factor of a maximal torus.
    pub fn len(&self) -> usize {
        self.weyl_exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weyl_exponents.is_empty()
    }

    /// Sum of exponents = number of positive roots.
    pub fn sum(&self) -> usize {
        self.weyl_exponents.iter().sum()
    }

    /// `prod (m_i + 1)` = order of the Weyl group.
    pub fn group_order(&self) -> BigUint {
        self.weyl_exponents
            .iter()
            .fold(BigUint::one(), |acc, &m| acc * BigUint::from(m + 1))
    }

    /// Disjoint union of exponent multisets (product group).
    pub fn union(&self, other: &ExponentSet) -> ExponentSet {
        let mut merged = self.weyl_exponents.clone();
        merged.extend_from_slice(&other.weyl_exponents);
        ExponentSet::from_exponents(merged)
    }
}

/// Conjugate of a weakly decreasing partition given as part sizes; returns
/// one entry per column, largest first.
pub(crate) fn conjugate_partition(dist: &[usize]) -> Vec<usize> {
    let width = dist.first().copied().unwrap_or(0);
    (0..width)
        .map(|i| dist.iter().filter(|&&count| count > i).count())
        .collect()
}

/// Weyl exponents of a simple root system, by the height-distribution
/// conjugate-partition method: O(#roots) instead of O(|W|).
pub fn exponents(root_system: &RootSystem) -> ExponentSet {
    let exps = conjugate_partition(&root_system.height_distribution());
    debug_assert_eq!(exps.len(), root_system.rank());
    debug_assert_eq!(exps.iter().sum::<usize>(), root_system.num_positive_roots());
    ExponentSet::from_exponents(exps)
}

/// Order of the Weyl group, `prod (m_i + 1)` over the exponents.
pub fn weyl_order(root_system: &RootSystem) -> BigUint {
    exponents(root_system).group_order()
}
