//! Exact integer polynomial arithmetic in one variable `t`.
//!
//! Coefficients are arbitrary-precision ([`BigInt`]); binomial-type
//! coefficients of flag-variety Poincaré polynomials grow combinatorially
//! and must never overflow silently. Polynomials are kept in canonical
//! form: no trailing zero coefficients, the zero polynomial is the empty
//! coefficient list.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// Division left a nonzero remainder; the quotient would not be a
    /// polynomial over the integers.
    #[error("non-exact polynomial division (remainder {remainder})")]
    NonExactDivision { remainder: IntPolynomial },
    #[error("division by the zero polynomial")]
    DivisionByZero,
}

/// Dense univariate polynomial over the integers, `coefficients[i]` is the
/// coefficient of `t^i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coefficients: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial {
            coefficients: Vec::new(),
        }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coefficients: vec![BigInt::one()],
        }
    }

    /// Builds a polynomial from low-to-high coefficients, normalizing to
    /// canonical form.
    pub fn from_coefficients<I>(coefficients: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<BigInt>,
    {
        let mut p = IntPolynomial {
            coefficients: coefficients.into_iter().map(Into::into).collect(),
        };
        p.normalize();
        p
    }

    /// `c * t^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coefficients = vec![BigInt::zero(); k + 1];
        coefficients[k] = c;
        IntPolynomial { coefficients }
    }

    /// `1 - t^k` for `k >= 1`, the cyclotomic-style factor of Poincaré
    /// polynomial quotients.
    pub fn one_minus_power(k: usize) -> Self {
        assert!(k >= 1, "1 - t^0 is the zero polynomial; use zero()");
        let mut coefficients = vec![BigInt::zero(); k + 1];
        coefficients[0] = BigInt::one();
        coefficients[k] = -BigInt::one();
        IntPolynomial { coefficients }
    }

    /// `1 + t^k` for `k >= 1`.
    pub fn one_plus_power(k: usize) -> Self {
        assert!(k >= 1);
        let mut coefficients = vec![BigInt::zero(); k + 1];
        coefficients[0] = BigInt::one();
        coefficients[k] = BigInt::one();
        IntPolynomial { coefficients }
    }

    /// `1 + t + ... + t^(k-1)`, i.e. `(1 - t^k)/(1 - t)`.
    pub fn geometric_sum(k: usize) -> Self {
        IntPolynomial {
            coefficients: vec![BigInt::one(); k],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coefficients.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    fn normalize(&mut self) {
        while self.coefficients.last().is_some_and(Zero::is_zero) {
            self.coefficients.pop();
        }
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut coefficients =
            vec![BigInt::zero(); self.coefficients.len().max(other.coefficients.len())];
        for (i, c) in self.coefficients.iter().enumerate() {
            coefficients[i] += c;
        }
        for (i, c) in other.coefficients.iter().enumerate() {
            coefficients[i] += c;
        }
        IntPolynomial::from_coefficients(coefficients)
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut coefficients =
            vec![BigInt::zero(); self.coefficients.len().max(other.coefficients.len())];
        for (i, c) in self.coefficients.iter().enumerate() {
            coefficients[i] += c;
        }
        for (i, c) in other.coefficients.iter().enumerate() {
            coefficients[i] -= c;
        }
        IntPolynomial::from_coefficients(coefficients)
    }

    /// Sum of all coefficients, i.e. the value at `t = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coefficients.iter().sum()
    }

    /// True when the coefficient list reads the same in both directions.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coefficients.len();
        (0..n / 2).all(|i| self.coefficients[i] == self.coefficients[n - 1 - i])
    }
}

/// Exact convolution product.
pub fn poly_mul(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    if a.is_zero() || b.is_zero() {
        return IntPolynomial::zero();
    }
    let mut coefficients =
        vec![BigInt::zero(); a.coefficients.len() + b.coefficients.len() - 1];
    for (i, ca) in a.coefficients.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.coefficients.iter().enumerate() {
            coefficients[i + j] += ca * cb;
        }
    }
    IntPolynomial::from_coefficients(coefficients)
}

/// Long division over the integers. Returns the quotient `q` with
/// `numerator = q * denominator` exactly; a nonzero remainder (or a leading
/// coefficient that fails to divide) yields [`PolyError::NonExactDivision`]
/// carrying what is left of the numerator.
pub fn poly_exact_div(
    numerator: &IntPolynomial,
    denominator: &IntPolynomial,
) -> Result<IntPolynomial, PolyError> {
    if denominator.is_zero() {
        return Err(PolyError::DivisionByZero);
    }
    if numerator.is_zero() {
        return Ok(IntPolynomial::zero());
    }
    let n_len = numerator.coefficients.len();
    let d_len = denominator.coefficients.len();
    if n_len < d_len {
        return Err(PolyError::NonExactDivision {
            remainder: numerator.clone(),
        });
    }

    let lead = &denominator.coefficients[d_len - 1];
    let mut rem = numerator.coefficients.clone();
    let mut quot = vec![BigInt::zero(); n_len - d_len + 1];

    for k in (0..quot.len()).rev() {
        let top = rem[k + d_len - 1].clone();
        if top.is_zero() {
            continue;
        }
        let (q, r) = num_integer_div_rem(&top, lead);
        if !r.is_zero() {
            return Err(PolyError::NonExactDivision {
                remainder: IntPolynomial::from_coefficients(rem),
            });
        }
        for (i, dc) in denominator.coefficients.iter().enumerate() {
            rem[k + i] -= &q * dc;
        }
        quot[k] = q;
    }

    if rem.iter().any(|c| !c.is_zero()) {
        return Err(PolyError::NonExactDivision {
            remainder: IntPolynomial::from_coefficients(rem),
        });
    }
    Ok(IntPolynomial::from_coefficients(quot))
}

fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    (a / b, a % b)
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.magnitude();
            if first {
                if c.sign() == num_bigint::Sign::Minus {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.sign() == num_bigint::Sign::Minus {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
