//! Scalar abstraction for the geometric kernel.
//!
//! Every predicate and construction in this crate is written against
//! [`Scalar`], an exact totally ordered field. The `Ord` bound rules out
//! IEEE floats, which is deliberate: the predicates decide degeneracies
//! (collinear, cocircular) by comparing against exact zero, so any rounding
//! would make them unreliable. The crate-level alias [`crate::Rat`]
//! instantiates everything with arbitrary-precision rationals.

use num_traits::Signed;

/// An exact totally ordered field.
///
/// Division must be exact (`a / b * b == a` whenever `b != 0`), which holds
/// for rationals but not for machine integers; use an integer type only for
/// computations that never divide.
pub trait Scalar: Clone + Signed + Ord {}

impl<T: Clone + Signed + Ord> Scalar for T {}

/// `1 + 1` in the scalar type.
pub fn two<T: Scalar>() -> T {
    T::one() + T::one()
}

/// `x * x` without requiring `Copy`.
pub fn sq<T: Scalar>(x: &T) -> T {
    x.clone() * x.clone()
}
