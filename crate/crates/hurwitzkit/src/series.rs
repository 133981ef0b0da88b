//! Truncated power series with exact rational coefficients.
//!
//! A [`SeriesPoly`] holds `a_0 + a_1 z + … + a_D z^D`; every operation
//! truncates at the stored bound. Generating-function series in this crate
//! are normalized with `a_0 = 1`, which keeps inversion total.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesPoly {
    coeffs: Vec<Rational>,
}

impl SeriesPoly {
    /// Builds from low-order coefficients, padding with zeros up to degree
    /// `degree_bound` (extra coefficients are truncated away).
    pub fn new(mut coeffs: Vec<Rational>, degree_bound: usize) -> Self {
        coeffs.truncate(degree_bound + 1);
        coeffs.resize(degree_bound + 1, Rational::zero());
        Self { coeffs }
    }

    /// The constant series 1.
    pub fn one(degree_bound: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree_bound + 1];
        coeffs[0] = Rational::one();
        Self { coeffs }
    }

    pub fn degree_bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Truncated product; the result keeps the smaller degree bound.
    pub fn mul(&self, other: &Self) -> Self {
        let bound = self.degree_bound().min(other.degree_bound());
        let mut out = vec![Rational::zero(); bound + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(bound + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(bound + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        Self { coeffs: out }
    }

    /// Argument scaling `z → α z`, i.e. `a_i → α^i a_i`.
    pub fn scale_argument(&self, alpha: &Rational) -> Self {
        let mut out = self.coeffs.clone();
        let mut power = Rational::one();
        for (i, c) in out.iter_mut().enumerate() {
            if i > 0 {
                power *= alpha;
            }
            *c *= &power;
        }
        Self { coeffs: out }
    }

    /// Multiplicative inverse by recursive division; the constant term must
    /// be nonzero.
    pub fn invert(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(Error::InvalidInput(
                "cannot invert a series with zero constant term".into(),
            ));
        }
        let bound = self.degree_bound();
        let inv0 = self.coeffs[0].clone().recip();
        let mut out = vec![Rational::zero(); bound + 1];
        out[0] = inv0.clone();
        for i in 1..=bound {
            let mut acc = Rational::zero();
            for j in 1..=i {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                acc += &self.coeffs[j] * &out[i - j];
            }
            out[i] = -acc * &inv0;
        }
        Ok(Self { coeffs: out })
    }

    /// `self^k` for signed `k`; negative exponents invert first.
    pub fn powi(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.invert()? } else { self.clone() };
        let mut acc = Self::one(self.degree_bound());
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rational::is_zero)
    }
}
