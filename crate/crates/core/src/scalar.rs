//! Scalar abstractions.
//!
//! [`Scalar`] is the minimum needed to evaluate the closed-form bounds, so it
//! admits exact rationals as well as floats. [`RealScalar`] adds the
//! transcendental operations needed by eigen-solvers.

use std::fmt::{Debug, Display, LowerExp};

use num_traits::{Float, FloatConst, FromPrimitive, Num};

/// Ordered field-like scalar: floats or exact rationals.
pub trait Scalar: Num + Copy + PartialOrd + FromPrimitive + Debug + Send + Sync + 'static {
    fn of_usize(v: usize) -> Self {
        Self::from_usize(v).expect("integer fits in scalar")
    }

    fn of_i64(v: i64) -> Self {
        Self::from_i64(v).expect("integer fits in scalar")
    }
}

impl<T> Scalar for T where T: Num + Copy + PartialOrd + FromPrimitive + Debug + Send + Sync + 'static {}

/// Floating-point scalar.
pub trait RealScalar: Scalar + Float + FloatConst + Display + LowerExp {
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("literal fits in scalar")
    }
}

impl<T> RealScalar for T where T: Scalar + Float + FloatConst + Display + LowerExp {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Exact;

    #[test]
    fn exact_rationals_are_scalars() {
        let third = Exact::of_usize(1) / Exact::of_usize(3);
        assert_eq!(third * Exact::of_i64(3), Exact::of_usize(1));
    }

    #[test]
    fn literals_round_trip() {
        assert_eq!(f32::lit(0.5), 0.5f32);
        assert_eq!(f64::of_usize(7), 7.0);
    }
}
