//! Coefficient fields used by the symmetric-function and series layers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt::Debug;

pub type BigRat = BigRational;

pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

/// An exact field with an Adams operation `psi_d` acting on its parameters.
pub trait Coef: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Panics on a zero divisor.
    fn div(&self, o: &Self) -> Self;
    fn from_rat(r: &BigRat) -> Self;
    fn adams(&self, d: u32) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rat(&rat_int(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn scale(&self, r: &BigRat) -> Self {
        self.mul(&Self::from_rat(r))
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Integer power, negative exponents through inversion.
    fn powi(&self, e: i32) -> Self {
        if e >= 0 {
            self.pow(e as u32)
        } else {
            Self::one().div(&self.pow((-e) as u32))
        }
    }
}

impl Coef for BigRat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, o: &Self) -> Self {
        assert!(!Zero::is_zero(o), "division by zero");
        self / o
    }
    fn from_rat(r: &BigRat) -> Self {
        r.clone()
    }
    fn adams(&self, _d: u32) -> Self {
        self.clone()
    }
}
