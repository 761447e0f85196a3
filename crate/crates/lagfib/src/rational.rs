//! Exact rational scalars and rational n-th roots.
//!
//! `Rational` is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator; every computation in this crate is exact, no
//! rounding ever occurs. The type is `num_rational::BigRational`, which
//! maintains both invariants on construction.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The universal exact scalar: an arbitrary-precision fraction in lowest
/// terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for `n/d` as a reduced `Rational`.
///
/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer `n` as a `Rational`.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// n! as a `BigInt`.
pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Parse a rational literal: `p`, `p/q`, with optional leading sign.
///
/// The denominator must be nonzero; the result is reduced with positive
/// denominator regardless of input sign placement.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let numer: BigInt = num_str
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational literal `{s}`")))?;
    let denom: BigInt = den_str
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational literal `{s}`")))?;
    if denom.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rational::new(numer, denom))
}

/// Exact rational n-th root.
///
/// Returns the rational `r` with `r^n == x`, which exists iff the numerator
/// and denominator of the reduced `x` are separately perfect n-th powers.
/// For even `n` the input must be nonnegative and the nonnegative root is
/// returned; for odd `n` the sign of `x` is preserved.
///
/// Panics if `n == 0`.
pub fn rational_nth_root(x: &Rational, n: u32) -> Result<Rational> {
    assert!(n >= 1, "root degree must be positive");
    if x.is_negative() && n.is_multiple_of(2) {
        return Err(Error::NegativeEvenRoot {
            value: x.clone(),
            n,
        });
    }
    let numer = exact_int_nth_root(x.numer(), n).ok_or_else(|| Error::NotPerfectPower {
        value: x.clone(),
        n,
    })?;
    let denom = exact_int_nth_root(x.denom(), n).ok_or_else(|| Error::NotPerfectPower {
        value: x.clone(),
        n,
    })?;
    Ok(Rational::new(numer, denom))
}

/// Exact integer n-th root, or `None` if `v` is not a perfect n-th power.
fn exact_int_nth_root(v: &BigInt, n: u32) -> Option<BigInt> {
    let candidate = v.nth_root(n);
    if candidate.pow(n) == *v {
        Some(candidate)
    } else {
        None
    }
}
