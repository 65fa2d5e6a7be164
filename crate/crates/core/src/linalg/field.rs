//! The minimal field interface shared by the elimination routines.

use std::fmt::Debug;

use crate::scalar::{Rational, Scalar};

pub trait Field: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn f_add(&self, rhs: &Self) -> Self;
    fn f_sub(&self, rhs: &Self) -> Self;
    fn f_mul(&self, rhs: &Self) -> Self;
    fn f_neg(&self) -> Self;
    /// Panics on zero.
    fn f_inv(&self) -> Self;
    /// Pivot preference; smaller is better.
    fn cost(&self) -> (usize, u64);
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn f_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn f_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn f_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn f_neg(&self) -> Self {
        -self
    }
    fn f_inv(&self) -> Self {
        self.inv().expect("inverse of zero")
    }
    fn cost(&self) -> (usize, u64) {
        (0, self.bit_size())
    }
}

impl Field for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn f_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn f_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn f_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn f_neg(&self) -> Self {
        -self
    }
    fn f_inv(&self) -> Self {
        self.inv().expect("inverse of zero")
    }
    fn cost(&self) -> (usize, u64) {
        self.pivot_cost()
    }
}
