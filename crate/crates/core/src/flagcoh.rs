//! Cohomology of generalized flag manifolds `G/H`.
//!
//! The Poincaré polynomial is computed by two independent routes and the
//! Euler number by three, and [`compute_flag_cohomology`] refuses to return
//! unless all routes agree:
//!
//! - the exponent quotient `prod (1 - t^(g_i+1)) / prod (1 - t^(l_i+1))`
//!   over the topological degrees of `G` and `H`,
//! - the Bruhat cell decomposition `sum over minimal coset representatives
//!   of t^(2 l(w))`,
//! - and for the Euler number additionally the Weyl group index
//!   `|W(G)| / |W(H)|`.

use num_bigint::{BigInt, BigUint};
use thiserror::Error;

use crate::polyring::{poly_exact_div, poly_mul, IntPolynomial, PolyError};
use crate::rootsys::{
    exponents, levi_decompose, levi_exponents, levi_positive_root_count,
    parabolic_coset_data_with_budget, weyl_order, ExponentSet, LeviSpec, RootSystem,
    RootSystemError, DEFAULT_ENUMERATION_BUDGET,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FlagCohomologyError {
    /// The two exponent multisets have different cardinality; the quotient
    /// formula needs the equal-rank pairing.
    #[error("rank mismatch: {group_rank} degrees for G vs {subgroup_rank} for H")]
    RankMismatch {
        group_rank: usize,
        subgroup_rank: usize,
    },
    /// The degree pairing does not divide out: the exponent sets do not
    /// come from a valid `(G, H)` pair.
    #[error("Poincaré quotient is not a polynomial: {0}")]
    NonExactDivision(#[from] PolyError),
    #[error("Euler quotient {numerator}/{denominator} is not an integer")]
    NonIntegerEuler {
        numerator: BigUint,
        denominator: BigUint,
    },
    #[error(transparent)]
    Root(#[from] RootSystemError),
    /// Independent computation routes disagree; indicates a bug, never an
    /// invalid input.
    #[error("oracle mismatch in {context}: {detail}")]
    OracleMismatch { context: &'static str, detail: String },
}

/// Basic Betti numbers `b^0 .. b^(2d)` of a flag manifold of complex
/// dimension `d` (or of any diamond's total cohomology).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BettiVector {
    entries: Vec<u64>,
}

impl BettiVector {
    pub fn new(entries: Vec<u64>) -> BettiVector {
        BettiVector { entries }
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn total(&self) -> BigUint {
        self.entries.iter().map(|&b| BigUint::from(b)).sum()
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.entries.len();
        (0..n / 2).all(|i| self.entries[i] == self.entries[n - 1 - i])
    }
}

/// Cohomology of `G/H` with all paired invariants cross-checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagCohomology {
    poincare: IntPolynomial,
    betti: BettiVector,
    euler: BigUint,
    complex_dimension: usize,
}

impl FlagCohomology {
    /// Poincaré polynomial in `t`; only even powers occur.
    pub fn poincare(&self) -> &IntPolynomial {
        &self.poincare
    }

    pub fn betti(&self) -> &BettiVector {
        &self.betti
    }

    pub fn euler(&self) -> &BigUint {
        &self.euler
    }

    pub fn complex_dimension(&self) -> usize {
        self.complex_dimension
    }
}

/// Poincaré polynomial of `G/H` from the topological degrees of the two
/// groups: `prod_i (1 - t^(g_i+1)) / (1 - t^(l_i+1))`. Degree lists are
/// paired sorted ascending and divisions are interleaved to keep
/// intermediate results small, with a single full-product division as
/// fallback when an intermediate quotient is not a polynomial.
pub fn poincare_borel(
    g_exponents: &ExponentSet,
    l_exponents: &ExponentSet,
) -> Result<IntPolynomial, FlagCohomologyError> {
    if g_exponents.len() != l_exponents.len() {
        return Err(FlagCohomologyError::RankMismatch {
            group_rank: g_exponents.len(),
            subgroup_rank: l_exponents.len(),
        });
    }
    let g_degrees = g_exponents.degrees();
    let l_degrees = l_exponents.degrees();

    let mut acc = IntPolynomial::one();
    let mut deferred: Vec<usize> = Vec::new();
    for (&g, &l) in g_degrees.iter().zip(&l_degrees) {
        acc = poly_mul(&acc, &IntPolynomial::one_minus_power(g + 1));
        match poly_exact_div(&acc, &IntPolynomial::one_minus_power(l + 1)) {
            Ok(q) => acc = q,
            Err(_) => deferred.push(l),
        }
    }
    for l in std::mem::take(&mut deferred) {
        match poly_exact_div(&acc, &IntPolynomial::one_minus_power(l + 1)) {
            Ok(q) => acc = q,
            Err(_) => deferred.push(l),
        }
    }
    if deferred.is_empty() {
        return Ok(acc);
    }

    // fallback: divide the fully expanded products once
    let numerator = g_degrees.iter().fold(IntPolynomial::one(), |p, &g| {
        poly_mul(&p, &IntPolynomial::one_minus_power(g + 1))
    });
    let denominator = l_degrees.iter().fold(IntPolynomial::one(), |p, &l| {
        poly_mul(&p, &IntPolynomial::one_minus_power(l + 1))
    });
    Ok(poly_exact_div(&numerator, &denominator)?)
}

/// Poincaré polynomial of `G/H` from the Bruhat decomposition: the
/// generating polynomial of doubled lengths of the minimal coset
/// representatives.
pub fn poincare_coset(
    root_system: &RootSystem,
    levi: &LeviSpec,
) -> Result<IntPolynomial, FlagCohomologyError> {
    poincare_coset_with_budget(root_system, levi, DEFAULT_ENUMERATION_BUDGET)
}

pub fn poincare_coset_with_budget(
    root_system: &RootSystem,
    levi: &LeviSpec,
    budget: u64,
) -> Result<IntPolynomial, FlagCohomologyError> {
    let data = parabolic_coset_data_with_budget(root_system, levi, budget)?;
    let mut coefficients = vec![BigInt::ZERO; 2 * data.max_length() + 1];
    for length in data.lengths() {
        coefficients[2 * length] += 1;
    }
    Ok(IntPolynomial::from_coefficients(coefficients))
}

/// Euler number of `G/H` as the exact integer `prod (g_i+1) / prod (l_i+1)`
/// over topological degrees.
pub fn euler_number(
    g_exponents: &ExponentSet,
    l_exponents: &ExponentSet,
) -> Result<BigUint, FlagCohomologyError> {
    if g_exponents.len() != l_exponents.len() {
        return Err(FlagCohomologyError::RankMismatch {
            group_rank: g_exponents.len(),
            subgroup_rank: l_exponents.len(),
        });
    }
    let numerator: BigUint = g_exponents
        .degrees()
        .iter()
        .map(|&g| BigUint::from(g + 1))
        .product();
    let denominator: BigUint = l_exponents
        .degrees()
        .iter()
        .map(|&l| BigUint::from(l + 1))
        .product();
    if (&numerator % &denominator) != BigUint::ZERO {
        return Err(FlagCohomologyError::NonIntegerEuler {
            numerator,
            denominator,
        });
    }
    Ok(numerator / denominator)
}

/// Euler number of `G/H` as the Weyl group index `|W(G)| / |W(H)|`, which
/// equals the number of minimal coset representatives.
pub fn euler_weyl(root_system: &RootSystem, levi: &LeviSpec) -> BigUint {
    let group = weyl_order(root_system);
    let spec = levi_decompose(root_system, levi)
        .expect("induced subdiagram of a finite-type diagram is finite type");
    let subgroup = levi_exponents(&spec).group_order();
    debug_assert_eq!(&group % &subgroup, BigUint::ZERO);
    group / subgroup
}

/// Computes the full cohomology record of `G/H`, running every route and
/// failing loudly on any internal disagreement.
pub fn compute_flag_cohomology(
    root_system: &RootSystem,
    levi: &LeviSpec,
) -> Result<FlagCohomology, FlagCohomologyError> {
    compute_flag_cohomology_with_budget(root_system, levi, DEFAULT_ENUMERATION_BUDGET)
}

pub fn compute_flag_cohomology_with_budget(
    root_system: &RootSystem,
    levi: &LeviSpec,
    budget: u64,
) -> Result<FlagCohomology, FlagCohomologyError> {
    let g_exps = exponents(root_system);
    let levi_group = levi_decompose(root_system, levi)?;
    let l_exps = levi_exponents(&levi_group);

    let borel = poincare_borel(&g_exps, &l_exps)?;
    let coset = poincare_coset_with_budget(root_system, levi, budget)?;
    if borel != coset {
        return Err(FlagCohomologyError::OracleMismatch {
            context: "poincare",
            detail: format!("exponent quotient {borel} vs Bruhat cells {coset}"),
        });
    }

    let euler = euler_number(&g_exps, &l_exps)?;
    let euler_w = euler_weyl(root_system, levi);
    let euler_p = coset.eval_at_one();
    if BigInt::from(euler.clone()) != euler_p || euler != euler_w {
        return Err(FlagCohomologyError::OracleMismatch {
            context: "euler",
            detail: format!("degrees {euler}, Weyl index {euler_w}, P(1) = {euler_p}"),
        });
    }

    let complex_dimension =
        root_system.num_positive_roots() - levi_positive_root_count(root_system, levi);
    let poly_degree = coset.degree().unwrap_or(0);
    if poly_degree != 2 * complex_dimension {
        return Err(FlagCohomologyError::OracleMismatch {
            context: "dimension",
            detail: format!(
                "deg P = {poly_degree} but root count gives complex dimension {complex_dimension}"
            ),
        });
    }

    let entries: Vec<u64> = (0..=poly_degree)
        .map(|k| {
            u64::try_from(coset.coefficient(k))
                .expect("Betti numbers are bounded by the enumeration budget")
        })
        .collect();
    let betti = BettiVector::new(entries);
    debug_assert!(betti.is_palindromic());
    debug_assert_eq!(betti.entries()[0], 1);
    debug_assert!(betti.entries().iter().skip(1).step_by(2).all(|&b| b == 0));

    Ok(FlagCohomology {
        poincare: coset,
        betti,
        euler,
        complex_dimension,
    })
}
