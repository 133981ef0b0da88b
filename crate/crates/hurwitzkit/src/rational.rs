//! Exact arbitrary-precision rational scalars and their text form.
//!
//! Every result in this crate is a [`Rational`]. The canonical text form is
//! lowest-terms `p/q`, or just `p` when the denominator is 1; it round-trips
//! through [`parse_rational`].

use std::str::FromStr;

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `n/d` as a reduced rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact `n!`.
pub fn big_factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Binomial coefficient `C(n, k)` as an exact integer.
pub fn big_binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// `base^exp` for signed integer exponents; `exp < 0` inverts (base must be nonzero).
pub fn rational_pow(base: &Rational, exp: i64) -> Rational {
    if exp == 0 {
        return Rational::one();
    }
    let mut acc = Rational::one();
    let positive = base.clone();
    let b = if exp < 0 { positive.recip() } else { positive };
    for _ in 0..exp.unsigned_abs() {
        acc *= &b;
    }
    acc
}

/// Lowest-terms text form: `p` when the denominator is 1, otherwise `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` (arbitrary precision, optional leading `-`).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = |_| Error::InvalidInput(format!("cannot parse rational `{s}`"));
    match s.split_once('/') {
        None => {
            let n = BigInt::from_str(s).map_err(bad)?;
            Ok(Rational::from_integer(n))
        }
        Some((num, den)) => {
            let n = BigInt::from_str(num.trim()).map_err(bad)?;
            let d = BigInt::from_str(den.trim()).map_err(bad)?;
            if d.is_zero() {
                return Err(Error::InvalidInput(format!(
                    "cannot parse rational `{s}`: zero denominator"
                )));
            }
            Ok(Rational::new(n, d))
        }
    }
}
