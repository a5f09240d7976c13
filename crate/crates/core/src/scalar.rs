use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, Zero};

/// Coefficient type for polynomials and matrices.
pub trait Scalar: Num + Clone + Debug + PartialEq + Neg<Output = Self> {}

impl<T> Scalar for T where T: Num + Clone + Debug + PartialEq + Neg<Output = T> {}

/// A commutative ring with exact division where the quotient exists.
///
/// Fraction-free elimination only ever divides by a value known to divide
/// the dividend, so `div_exact` returning `None` signals a broken invariant.
pub trait Domain: Clone + PartialEq + Debug {
    fn is_zero_elem(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn div_exact(&self, divisor: &Self) -> Option<Self>;
}

macro_rules! field_domain {
    ($($t:ty),*) => {$(
        impl Domain for $t {
            fn is_zero_elem(&self) -> bool { Zero::is_zero(self) }
            fn zero_like(&self) -> Self { num_traits::zero() }
            fn one_like(&self) -> Self { num_traits::one() }
            fn add_ref(&self, other: &Self) -> Self { self.clone() + other.clone() }
            fn sub_ref(&self, other: &Self) -> Self { self.clone() - other.clone() }
            fn mul_ref(&self, other: &Self) -> Self { self.clone() * other.clone() }
            fn neg_ref(&self) -> Self { -self.clone() }
            fn div_exact(&self, divisor: &Self) -> Option<Self> {
                if Zero::is_zero(divisor) { None } else { Some(self.clone() / divisor.clone()) }
            }
        }
    )*};
}

field_domain!(f32, f64, BigRational, Ratio<i64>);

macro_rules! integer_domain {
    ($($t:ty),*) => {$(
        impl Domain for $t {
            fn is_zero_elem(&self) -> bool { Zero::is_zero(self) }
            fn zero_like(&self) -> Self { num_traits::zero() }
            fn one_like(&self) -> Self { num_traits::one() }
            fn add_ref(&self, other: &Self) -> Self { self.clone() + other.clone() }
            fn sub_ref(&self, other: &Self) -> Self { self.clone() - other.clone() }
            fn mul_ref(&self, other: &Self) -> Self { self.clone() * other.clone() }
            fn neg_ref(&self) -> Self { -self.clone() }
            fn div_exact(&self, divisor: &Self) -> Option<Self> {
                if Zero::is_zero(divisor) {
                    return None;
                }
                let (quot, rem) = (self.clone() / divisor.clone(), self.clone() % divisor.clone());
                if Zero::is_zero(&rem) { Some(quot) } else { None }
            }
        }
    )*};
}

integer_domain!(i64, i128, BigInt);
