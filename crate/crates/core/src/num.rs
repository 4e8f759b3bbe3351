//! Exact integer arithmetic behind the elimination kernels.
//!
//! The default backend is `i64` with checked operations: every add, subtract,
//! multiply and divide either returns the exact result or reports overflow.
//! `num_bigint::BigInt` implements the same trait for inputs whose
//! intermediate minors exceed 64 bits.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Exact signed integer: checked ring operations plus exact division.
pub trait ExactInt: Clone + Eq + Ord + std::fmt::Debug + std::fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;

    fn is_zero(&self) -> bool;
    fn is_positive(&self) -> bool;

    fn checked_add(&self, rhs: &Self) -> Option<Self>;
    fn checked_sub(&self, rhs: &Self) -> Option<Self>;
    fn checked_mul(&self, rhs: &Self) -> Option<Self>;
    fn checked_neg(&self) -> Option<Self>;

    /// Quotient and remainder; `None` only on overflow (`rhs` must be nonzero).
    fn checked_div_rem(&self, rhs: &Self) -> Option<(Self, Self)>;
}

impl ExactInt for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_positive(&self) -> bool {
        *self > 0
    }
    fn checked_add(&self, rhs: &Self) -> Option<Self> {
        i64::checked_add(*self, *rhs)
    }
    fn checked_sub(&self, rhs: &Self) -> Option<Self> {
        i64::checked_sub(*self, *rhs)
    }
    fn checked_mul(&self, rhs: &Self) -> Option<Self> {
        i64::checked_mul(*self, *rhs)
    }
    fn checked_neg(&self) -> Option<Self> {
        i64::checked_neg(*self)
    }
    fn checked_div_rem(&self, rhs: &Self) -> Option<(Self, Self)> {
        // i64::MIN / -1 overflows; everything else is exact.
        let q = i64::checked_div(*self, *rhs)?;
        Some((q, self - q * rhs))
    }
}

impl ExactInt for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn checked_add(&self, rhs: &Self) -> Option<Self> {
        Some(self + rhs)
    }
    fn checked_sub(&self, rhs: &Self) -> Option<Self> {
        Some(self - rhs)
    }
    fn checked_mul(&self, rhs: &Self) -> Option<Self> {
        Some(self * rhs)
    }
    fn checked_neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn checked_div_rem(&self, rhs: &Self) -> Option<(Self, Self)> {
        Some(self.div_rem(rhs))
    }
}

/// `a + b` or an overflow error naming the computation.
pub(crate) fn add<I: ExactInt>(a: &I, b: &I, context: &'static str) -> Result<I> {
    a.checked_add(b).ok_or(Error::Overflow { context })
}

/// `a - b` or an overflow error naming the computation.
pub(crate) fn sub<I: ExactInt>(a: &I, b: &I, context: &'static str) -> Result<I> {
    a.checked_sub(b).ok_or(Error::Overflow { context })
}

/// `a * b` or an overflow error naming the computation.
pub(crate) fn mul<I: ExactInt>(a: &I, b: &I, context: &'static str) -> Result<I> {
    a.checked_mul(b).ok_or(Error::Overflow { context })
}

/// Exact division: nonzero remainder is an internal-consistency error, not a
/// rounding mode. Exactness is the correctness witness of the Bareiss step.
pub(crate) fn exact_div<I: ExactInt>(a: &I, b: &I, context: &'static str) -> Result<I> {
    if b.is_zero() {
        return Err(Error::Internal(format!("division by zero in {context}")));
    }
    let (q, r) = a
        .checked_div_rem(b)
        .ok_or(Error::Overflow { context })?;
    if !r.is_zero() {
        return Err(Error::Internal(format!(
            "inexact division in {context}: {a} by {b} leaves remainder {r}"
        )));
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i64_overflow_is_reported() {
        assert!(matches!(
            mul(&i64::MAX, &2i64, "test"),
            Err(Error::Overflow { .. })
        ));
        assert!(matches!(
            exact_div(&i64::MIN, &-1i64, "test"),
            Err(Error::Overflow { .. })
        ));
    }

    #[test]
    fn inexact_division_is_an_error() {
        assert!(matches!(exact_div(&7i64, &2, "test"), Err(Error::Internal(_))));
        assert_eq!(exact_div(&-6i64, &2, "test").unwrap(), -3);
    }

    #[test]
    fn bigint_never_overflows() {
        let a = BigInt::from(i64::MAX);
        let b = ExactInt::checked_mul(&a, &a).unwrap();
        assert_eq!(b, &a * &a);
        let (q, r) = b.checked_div_rem(&a).unwrap();
        assert_eq!(q, a);
        assert!(ExactInt::is_zero(&r));
    }
}
