//! Exact rational scalars.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational number used for every scalar in the crate.
pub type Q = num_rational::BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integral(x: &Q) -> bool {
    x.is_integer()
}

/// The value as `i64` if it is an integer that fits.
pub fn to_i64(x: &Q) -> Option<i64> {
    if x.is_integer() {
        x.numer().to_i64()
    } else {
        None
    }
}

pub fn zero() -> Q {
    Q::zero()
}

pub fn one() -> Q {
    Q::one()
}

/// Smallest integer `>= x`.
pub fn ceil_i64(x: &Q) -> Option<i64> {
    let (d, r) = x.numer().div_rem(x.denom());
    let d = if r.is_positive() { d + 1 } else { d };
    d.to_i64()
}

/// Bit size used to rank pivot candidates during elimination.
pub(crate) fn size(x: &Q) -> u64 {
    x.numer().bits() + x.denom().bits()
}
