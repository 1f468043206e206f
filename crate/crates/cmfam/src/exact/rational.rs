//! Arbitrary-precision rationals.
//!
//! The scalar substrate is `num_rational::BigRational`, which already keeps
//! every value in lowest terms with a positive denominator. This module adds
//! the small constructors and conversions the rest of the crate leans on.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn parse_ratio(num: &str, den: &str) -> Result<Rational> {
    let n: BigInt = num.parse().map_err(|e| Error::Parse {
        path: String::new(),
        detail: format!("bad numerator {num:?}: {e}"),
    })?;
    let d: BigInt = den.parse().map_err(|e| Error::Parse {
        path: String::new(),
        detail: format!("bad denominator {den:?}: {e}"),
    })?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(n, d))
}

/// The integer value of `r`, if it is one.
pub fn as_integer(r: &Rational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}

pub fn is_nonneg_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_negative()
}

/// Exact integer conversion fitting in i64.
pub fn as_i64(r: &Rational) -> Option<i64> {
    use num_traits::ToPrimitive;
    as_integer(r).and_then(|n| n.to_i64())
}

pub fn rat_one() -> Rational {
    BigRational::one()
}

pub fn rat_zero() -> Rational {
    BigRational::zero()
}
