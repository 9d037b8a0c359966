//! Exact tangents and derivatives of polynomials, built from the
//! double-root criterion instead of limits.
//!
//! The line `y = kx + b` is tangent to a polynomial `f` at `p` when
//! `(x - p)^2` divides `f(x) - (kx + b)`. [`tangency::tangent_at`] constructs
//! that line together with its cofactor, [`tangency::derive_poly`] collects
//! the slopes into the derivative polynomial, [`rules`] checks the
//! differentiation rules as identities, and [`decomposition`] recovers the
//! difference quotient as `f'(x0) + R(h)/h` with an exactly vanishing gap.
//!
//! ```
//! use tangent_core::{parse_poly, tangent_at, derive_poly, Rational};
//!
//! let f = parse_poly("x^3").unwrap();
//! let t = tangent_at(&f, &Rational::from(2)).unwrap();
//! assert_eq!(t.k, Rational::from(12));
//! assert_eq!(t.b, Rational::from(-16));
//! assert_eq!(t.cofactor.to_string(), "x + 4");
//! assert_eq!(derive_poly(&f).to_string(), "3*x^2");
//! ```

pub mod decomposition;
pub mod dual;
pub mod error;
pub mod parser;
pub mod poly;
pub mod ratfun;
pub mod rational;
pub mod rules;
pub mod tangency;

#[cfg(test)]
mod strategies;

pub use decomposition::{
    decompose, differential, increment, quotient_table, remainder_valuation, secant_slope,
    Decomposition, QuotientRow,
};
pub use dual::{Dual, ElementaryFn};
pub use error::{Error, Result};
pub use parser::{lower_poly, lower_ratfun, parse, parse_poly, parse_ratfun, render, Expr, ParseError};
pub use poly::{LinearFunction, Polynomial};
pub use ratfun::RationalFunction;
pub use rational::Rational;
pub use rules::{verify_chain, verify_product, verify_quotient, verify_sum, Rule, RuleReport};
pub use tangency::{
    check_tangency, derive_poly, derive_ratfun, intersection_multiplicity, tangent_at,
    taylor_shift, LocalExpansion, Multiplicity, TangentLine,
};
