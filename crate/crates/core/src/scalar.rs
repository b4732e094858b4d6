//! Numeric traits shared by the polynomial ring and the matrix representation.
//!
//! Two roles are kept apart:
//!
//! * [`Coefficient`] is the exact ring the polynomial coefficients live in
//!   (`BigInt` by default, `i64` and `BigRational` also work).
//! * [`Scalar`] is the field a specialization evaluates into
//!   (`BigRational` for exact checks, `f64`/`f32`/`Complex<f64>` for numeric ones).

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

/// Exact coefficient ring of [`crate::Polynomial`].
pub trait Coefficient:
    Clone + Debug + Display + FromStr + PartialEq + Num + Signed + Send + Sync + 'static
{
    /// Embedding into the rationals, used by specialization.
    fn to_rational(&self) -> BigRational;
}

impl Coefficient for BigInt {
    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }
}

impl Coefficient for i64 {
    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(*self))
    }
}

impl Coefficient for BigRational {
    fn to_rational(&self) -> BigRational {
        self.clone()
    }
}

/// Field of values a specialization maps the variables to.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Whether arithmetic in this type is exact.
    const EXACT: bool;

    fn from_rational(q: &BigRational) -> Self;

    /// Absolute value as a float, used for pivoting and tolerance reports.
    fn magnitude(&self) -> f64;
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }

    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_rational(q: &BigRational) -> Self {
        q.to_f64().unwrap_or(f64::NAN)
    }

    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl Scalar for f32 {
    const EXACT: bool = false;

    fn from_rational(q: &BigRational) -> Self {
        q.to_f32().unwrap_or(f32::NAN)
    }

    fn magnitude(&self) -> f64 {
        self.abs() as f64
    }
}

impl<T> Scalar for Complex<T>
where
    T: Scalar + num_traits::Float,
{
    const EXACT: bool = false;

    fn from_rational(q: &BigRational) -> Self {
        Complex::new(T::from_rational(q), T::zero())
    }

    fn magnitude(&self) -> f64 {
        self.norm().magnitude()
    }
}

/// `a == b` exactly, or within `tolerance` for inexact scalars.
pub fn close<S: Scalar>(a: &S, b: &S, tolerance: f64) -> bool {
    if a == b {
        return true;
    }
    !S::EXACT && (a.clone() - b.clone()).magnitude() <= tolerance
}
