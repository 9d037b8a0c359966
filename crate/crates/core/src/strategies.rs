//! Shared proptest generators for unit tests.

use proptest::prelude::*;

use crate::poly::Polynomial;
use crate::rational::Rational;

/// Numerators in [-9, 9], denominators in [1, 9].
pub fn arb_coeff() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

pub fn arb_poly(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec(arb_coeff(), 0..=max_degree + 1).prop_map(Polynomial::from_coeffs)
}

pub fn arb_nonzero_poly(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    arb_poly(max_degree).prop_filter("nonzero", |f| !f.is_zero())
}
