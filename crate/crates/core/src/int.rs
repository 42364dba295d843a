//! Integer arithmetic shared by the fixed-width fast paths and the
//! arbitrary-precision fallbacks. Every operation returns `None` on
//! overflow; for `BigInt` it never does.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

pub(crate) trait Int: Clone + PartialEq + Sized {
    fn nil() -> Self;
    fn is_nil(&self) -> bool;
    fn is_neg(&self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn div_exact(&self, o: &Self) -> Self;
    fn div_floor(&self, o: &Self) -> Self;
    /// `(g, x, y)` with `g = gcd >= 0` and `g = x a + y b`.
    fn ext_gcd(&self, o: &Self) -> (Self, Self, Self);
    fn gcd(&self, o: &Self) -> Self;
    fn is_unit(&self) -> bool;
}

impl Int for i128 {
    fn nil() -> Self {
        0
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn is_neg(&self) -> bool {
        *self < 0
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn div_floor(&self, o: &Self) -> Self {
        Integer::div_floor(self, o)
    }
    fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let e = Integer::extended_gcd(self, o);
        (e.gcd, e.x, e.y)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn is_unit(&self) -> bool {
        *self == 1
    }
}

impl Int for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_neg(&self) -> bool {
        Signed::is_negative(self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn div_floor(&self, o: &Self) -> Self {
        Integer::div_floor(self, o)
    }
    fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let e = Integer::extended_gcd(self, o);
        (e.gcd, e.x, e.y)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn is_unit(&self) -> bool {
        num_traits::One::is_one(self)
    }
}

/// Entries as `i128`, if they all fit with room to spare.
pub(crate) fn narrow(rows: &[Vec<BigInt>]) -> Option<Vec<Vec<i128>>> {
    rows.iter()
        .map(|r| r.iter().map(|x| x.to_i64().map(i128::from)).collect())
        .collect()
}

pub(crate) fn widen(rows: Vec<Vec<i128>>) -> Vec<Vec<BigInt>> {
    rows.into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect()
}
