//! Scalar types the matrix and transform code is generic over.
//!
//! Everything here is exact: the determinant engines rely on divisions that
//! are known to be exact, so a scalar has to be able to say when one is not.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{NumRef, Signed, Zero};

/// An exact commutative ring with a checked division.
pub trait ExactRing: NumRef + Signed + Clone + PartialOrd + fmt::Debug + fmt::Display {
    /// `Some(self / divisor)` when the quotient exists in the ring, `None` otherwise
    /// (including division by zero).
    fn exact_div(&self, divisor: &Self) -> Option<Self>;

    /// Bit length of the magnitude; for rationals, of the larger of numerator and denominator.
    fn bit_len(&self) -> u64;
}

macro_rules! impl_exact_ring_prim {
    ($($t:ty),*) => {$(
        impl ExactRing for $t {
            fn exact_div(&self, divisor: &Self) -> Option<Self> {
                if *divisor == 0 {
                    return None;
                }
                let (q, r) = self.div_rem(divisor);
                (r == 0).then_some(q)
            }

            fn bit_len(&self) -> u64 {
                u64::from(<$t>::BITS - self.unsigned_abs().leading_zeros())
            }
        }
    )*};
}

impl_exact_ring_prim!(i32, i64, i128);

impl ExactRing for BigInt {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    fn bit_len(&self) -> u64 {
        self.bits()
    }
}

impl ExactRing for BigRational {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            None
        } else {
            Some(self / divisor)
        }
    }

    fn bit_len(&self) -> u64 {
        self.numer().bits().max(self.denom().bits())
    }
}
