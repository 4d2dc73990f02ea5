//! Scalar backends: exact arbitrary-precision rationals and tolerance-aware
//! `f64`.
//!
//! Every geometric object in this crate is generic over a [`Scalar`]. The
//! exact backend ([`Exact`], a gcd-reduced big rational with positive
//! denominator) is the default and makes every equality test structural.
//! The `f64` backend exists for data with irrational entries; its zero test
//! compares against an absolute tolerance that defaults to `1e-9` and can be
//! overridden through the `G2C_TOLERANCE` environment variable.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Exact backend: arbitrary-precision rational, always reduced.
pub type Exact = num_rational::BigRational;

/// Default absolute tolerance for the float backend.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

static TOLERANCE: OnceLock<f64> = OnceLock::new();

/// Zero tolerance used by the `f64` backend.
///
/// Read once per process: `G2C_TOLERANCE` if set and parseable, else
/// [`DEFAULT_TOLERANCE`].
pub fn tolerance() -> f64 {
    *TOLERANCE.get_or_init(|| {
        std::env::var("G2C_TOLERANCE")
            .ok()
            .and_then(|s| s.parse::<f64>().ok())
            .filter(|t| t.is_finite() && *t >= 0.0)
            .unwrap_or(DEFAULT_TOLERANCE)
    })
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseRatioError {
    #[error("empty rational literal")]
    Empty,
    #[error("malformed rational `{text}`: {reason}")]
    Malformed { text: String, reason: String },
    #[error("zero denominator in `{text}`")]
    ZeroDenominator { text: String },
}

/// Field of coefficients for the engine.
///
/// Implementations must behave like a subfield of the reals: `PartialOrd`
/// is total on the values actually produced, and `is_zero` is the one
/// comparison that is tolerance-aware on the float backend.
pub trait Scalar:
    Clone
    + PartialEq
    + PartialOrd
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;

    /// `num/den`. Panics if `den == 0`; use [`Scalar::parse_ratio`] for
    /// untrusted input.
    fn ratio(num: i64, den: i64) -> Self;

    /// Parse `"p"`, `"-p"` or `"p/q"` with integer parts.
    fn parse_ratio(text: &str) -> Result<Self, ParseRatioError>;

    /// Zero test. Exact backend: structural. Float backend: `|x| <= tol`.
    fn is_zero(&self) -> bool;

    fn abs(&self) -> Self;

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }

    /// True when `self - other` tests as zero.
    fn same_as(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).is_zero()
    }

    /// A positive scalar `d` such that every `d * v` is denominator-free,
    /// or `1` when the backend has no such notion. Hot contraction loops
    /// clear their inputs once and rescale once at the end, which keeps the
    /// per-operation gcd work of exact rationals out of the inner loops.
    fn denominator_clearer(values: &[Self]) -> Self {
        let _ = values;
        Self::one()
    }
}

fn split_ratio(text: &str) -> Result<(&str, &str), ParseRatioError> {
    let t = text.trim();
    if t.is_empty() {
        return Err(ParseRatioError::Empty);
    }
    match t.split_once('/') {
        None => Ok((t, "1")),
        Some((n, d)) => Ok((n.trim(), d.trim())),
    }
}

impl Scalar for Exact {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }

    fn one() -> Self {
        num_traits::One::one()
    }

    fn from_int(n: i64) -> Self {
        Exact::from_integer(BigInt::from(n))
    }

    fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Exact::new(BigInt::from(num), BigInt::from(den))
    }

    fn parse_ratio(text: &str) -> Result<Self, ParseRatioError> {
        let (n, d) = split_ratio(text)?;
        let num = BigInt::from_str(n).map_err(|e| ParseRatioError::Malformed {
            text: text.to_string(),
            reason: e.to_string(),
        })?;
        let den = BigInt::from_str(d).map_err(|e| ParseRatioError::Malformed {
            text: text.to_string(),
            reason: e.to_string(),
        })?;
        if den.is_zero() {
            return Err(ParseRatioError::ZeroDenominator {
                text: text.to_string(),
            });
        }
        Ok(Exact::new(num, den))
    }

    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }

    fn denominator_clearer(values: &[Self]) -> Self {
        let mut lcm = BigInt::from(1);
        for v in values {
            lcm = num_integer::Integer::lcm(&lcm, v.denom());
        }
        Exact::from_integer(lcm)
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        num as f64 / den as f64
    }

    fn parse_ratio(text: &str) -> Result<Self, ParseRatioError> {
        // Parse through the exact backend so "1/3" means the rational 1/3
        // rounded once, not a float literal.
        let q = Exact::parse_ratio(text)?;
        q.to_f64().ok_or_else(|| ParseRatioError::Malformed {
            text: text.to_string(),
            reason: "out of f64 range".to_string(),
        })
    }

    fn is_zero(&self) -> bool {
        f64::abs(*self) <= tolerance()
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }
}

/// `x` rescaled by `max(1, scale)`, for zero tests of quantities whose
/// natural size is `scale`.
pub fn normalized<S: Scalar>(x: &S, scale: &S) -> S {
    let one = S::one();
    let s = scale.abs();
    if s > one {
        x.clone() / s
    } else {
        x.clone()
    }
}
