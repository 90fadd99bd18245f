//! Exact arithmetic shared by every other module.
//!
//! - [`ExactInt`] and [`ExactRational`]: arbitrary precision integers and fractions.
//! - [`QPoly`]: dense polynomials in `q` with integer coefficients.
//! - [`Series`]: power series in `x` truncated at an explicit order.
//! - [`int_binomial`] and [`multinomial`]: coefficients with the "zero
//!   otherwise" convention, so nested sums can run over unconstrained ranges.

mod qpoly;
mod series;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use qpoly::{qpoly_eval_at_one, QPoly};
pub use series::{series_geometric_inverse, series_mul, Series};

/// Arbitrary precision signed integer.
pub type ExactInt = BigInt;

/// Fraction of [`ExactInt`]s, kept in lowest terms with a positive denominator.
pub type ExactRational = BigRational;

/// Double precision complex number. Only the root-of-unity verifiers use it.
pub type CPoint = num_complex::Complex64;

/// Commutative ring with identity, as needed for series coefficients.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Multiplicative inverse if `self` is a unit.
    fn unit_inverse(&self) -> Option<Self>;
}

impl Ring for BigInt {
    fn unit_inverse(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
}

impl Ring for BigRational {
    fn unit_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// `n! / (k! (n-k)!)` for `0 <= k <= n`, zero for every other pair.
pub fn int_binomial(n: i64, k: i64) -> ExactInt {
    if k < 0 || n < 0 || k > n {
        return ExactInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = ExactInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `k! / (k_1! ... k_s!)` when every part is non-negative and the parts sum to
/// `k`; zero otherwise.
pub fn multinomial(k: i64, parts: &[i64]) -> ExactInt {
    if parts.iter().any(|&p| p < 0) || parts.iter().sum::<i64>() != k {
        return ExactInt::zero();
    }
    // product of binomials C(k_1 + ... + k_i, k_i)
    let mut acc = ExactInt::one();
    let mut running = 0;
    for &p in parts {
        running += p;
        acc *= int_binomial(running, p);
    }
    acc
}

/// `(-1)^e` as an [`ExactInt`].
pub(crate) fn sign(e: i64) -> ExactInt {
    if e.rem_euclid(2) == 0 {
        ExactInt::one()
    } else {
        -ExactInt::one()
    }
}
