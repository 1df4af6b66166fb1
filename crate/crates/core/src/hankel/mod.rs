//! Hankel matrices and exact determinants.
//!
//! Three engines evaluate determinants independently:
//! cofactor expansion ([`det_laplace`]), fraction-free elimination
//! ([`det_bareiss`]) and condensation ([`det_dodgson`]). Each returns a
//! [`Determinant`] carrying instrumentation alongside the value.

mod bareiss;
mod dodgson;
mod laplace;
mod matrix;
mod minors;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::Serialize;

pub use bareiss::det_bareiss;
pub use dodgson::det_dodgson;
pub use laplace::{det_laplace, det_laplace_with_cap, LAPLACE_DEFAULT_CAP, LAPLACE_MAX_CAP};
pub use matrix::Matrix;
pub use minors::{all_minors_nonneg, MinorScan, MinorViolation};

use crate::error::Result;
use crate::scalar::ExactRing;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Laplace,
    Bareiss,
    Dodgson,
}

impl Engine {
    pub const ALL: [Engine; 3] = [Engine::Laplace, Engine::Bareiss, Engine::Dodgson];

    pub fn name(self) -> &'static str {
        match self {
            Engine::Laplace => "laplace",
            Engine::Bareiss => "bareiss",
            Engine::Dodgson => "dodgson",
        }
    }

    /// Runs this engine; Laplace uses its default cap.
    pub fn run<T: ExactRing>(self, m: &Matrix<T>) -> Result<Determinant<T>> {
        match self {
            Engine::Laplace => det_laplace(m),
            Engine::Bareiss => det_bareiss(m),
            Engine::Dodgson => Ok(det_dodgson(m)),
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Engine::ALL
            .into_iter()
            .find(|e| e.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown engine '{s}' (expected laplace, bareiss or dodgson)"))
    }
}

/// Exact determinant plus engine instrumentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Determinant<T> {
    pub value: T,
    /// Engine that produced `value`.
    pub algorithm: Engine,
    /// Multiply-accumulate steps (Laplace) or entry updates (Bareiss, Dodgson).
    pub steps: u64,
    /// Largest bit length of any entry or intermediate product.
    pub max_bits: u64,
    /// Set when condensation hit a zero divisor and elimination took over.
    pub fallback: bool,
}

/// `(n+1) x (n+1)` Hankel matrix of the prefix `terms`.
pub fn build_hankel<T: ExactRing>(terms: &[T], n: usize) -> Result<Matrix<T>> {
    Matrix::hankel(terms, n)
}

/// Determinant with the default engine: cofactor expansion up to order 4,
/// fraction-free elimination above.
pub fn determinant<T: ExactRing>(m: &Matrix<T>) -> Result<Determinant<T>> {
    if m.order() <= 4 {
        det_laplace(m)
    } else {
        det_bareiss(m)
    }
}

/// Outcome of dividing a determinant by `base^exp`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientCheck {
    /// Truncated quotient; exact when `is_integer`.
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub quotient: BigInt,
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub remainder: BigInt,
    pub is_integer: bool,
    pub is_odd: bool,
    pub is_positive: bool,
}

/// Divides `det` by `base^exp`; non-divisibility is reported, not an error.
pub fn quotient_check(det: &BigInt, base: u64, exp: u32) -> QuotientCheck {
    let divisor = num_traits::pow(BigInt::from(base), exp as usize);
    let (quotient, remainder) = det.div_rem(&divisor);
    let is_integer = remainder == BigInt::from(0);
    QuotientCheck {
        is_odd: is_integer && quotient.is_odd(),
        is_positive: is_integer && quotient.is_positive(),
        is_integer,
        quotient,
        remainder,
    }
}

/// Hankel matrix of `terms` with row `i` and column `j` scaled by `2^i` and `2^j`.
pub fn scaled_hankel(terms: &[BigInt], n: usize) -> Result<Matrix<BigInt>> {
    let scaled: Vec<BigInt> = terms.iter().enumerate().map(|(k, t)| t << k).collect();
    build_hankel(&scaled, n)
}

pub(crate) fn is_unit(v: &BigInt) -> bool {
    v.abs().is_one()
}
