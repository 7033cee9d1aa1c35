//! Coefficient rings.
//!
//! Everything polynomial in this crate is generic over an exact ring `T`
//! described by [`Scalar`]. Floating-point types do not qualify (they are
//! neither `Ord` nor `Hash`), which is intended: every invariant computed
//! here is an exact integer.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Num, Signed};

/// An exact, ordered, signed ring usable as a polynomial coefficient.
pub trait Scalar: Clone + Debug + Display + Ord + Hash + Num + Signed + FromPrimitive + Send + Sync + 'static {
    fn from_int(value: i64) -> Self {
        Self::from_i64(value).expect("i64 converts into every scalar ring")
    }
}

impl<T> Scalar for T where T: Clone + Debug + Display + Ord + Hash + Num + Signed + FromPrimitive + Send + Sync + 'static
{}

/// A [`Scalar`] that is also a Euclidean domain (i64, i128, BigInt).
pub trait IntScalar: Scalar + Integer {}

impl<T> IntScalar for T where T: Scalar + Integer {}

/// `(-1)^k` in the ring.
pub fn sign_pow<T: Scalar>(k: usize) -> T {
    if k.is_multiple_of(2) {
        T::one()
    } else {
        -T::one()
    }
}
