//! Exact combinatorial sequences and their Hankel determinants.
//!
//! * [`sequences`]: Franel, Domb, Catalan–Larcombe–French and Apéry numbers,
//!   by defining sums and by recurrence.
//! * [`transforms`]: binomial transform and binomial convolutions.
//! * [`hankel`]: Hankel matrices and three exact determinant engines.
//! * [`numtheory`]: valuations, Lucas congruences, parity matrices.
//! * [`verify`]: divisibility, parity and congruence claims checked over ranges.
//!
//! Matrices and transforms are generic over [`ExactRing`]; the aliases below
//! fix the scalar to arbitrary-precision integers or rationals.

pub mod error;
pub mod hankel;
pub mod numtheory;
pub mod report;
pub mod scalar;
pub mod sequences;
pub mod transforms;
pub mod verify;

pub use error::{Error, Result};
pub use hankel::{Determinant, Engine, Matrix};
pub use report::VerificationReport;
pub use scalar::ExactRing;
pub use sequences::{Family, SequenceId, SequenceTerms};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub type IntegerMatrix = Matrix<BigInt>;
pub type RationalMatrix = Matrix<BigRational>;
pub type DetResult = Determinant<BigInt>;
