//! Increments, secants and the linear decomposition
//! `f(x0 + h) = f(x0) + f'(x0)·h + R(h)`.
//!
//! For polynomials `R` is itself a polynomial in `h` with no constant or
//! linear term, so `R(h)/h` is an exact rational at every step size and its
//! vanishing is checked algebraically rather than observed numerically.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::tangency::{derive_poly, taylor_shift, Multiplicity};

/// `Δy = f(x0 + dx) - f(x0)`.
pub fn increment(f: &Polynomial, x0: &Rational, dx: &Rational) -> Rational {
    f.eval(&(x0 + dx)) - f.eval(x0)
}

/// `Δy / Δx`.
pub fn secant_slope(f: &Polynomial, x0: &Rational, dx: &Rational) -> Result<Rational> {
    if dx.is_zero() {
        return Err(Error::ZeroIncrement);
    }
    increment(f, x0, dx).checked_div(dx)
}

/// `dy = f'(x0)·Δx`.
pub fn differential(f: &Polynomial, x0: &Rational, dx: &Rational) -> Rational {
    derive_poly(f).eval(x0) * dx
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub x0: Rational,
    /// `f(x0)`
    pub value: Rational,
    /// `f'(x0)`
    pub slope: Rational,
    /// `R` as a polynomial in the increment.
    pub remainder: Polynomial,
}

impl Decomposition {
    /// `value + slope·t + R(t)` as a polynomial in `t`.
    pub fn in_increment(&self) -> Polynomial {
        let linear = Polynomial::from_coeffs(vec![self.value.clone(), self.slope.clone()]);
        &linear + &self.remainder
    }

    /// Substitutes `t = x - x0`, giving back `f`.
    pub fn reconstruct(&self) -> Polynomial {
        self.in_increment()
            .compose(&Polynomial::linear_factor(&self.x0))
    }

    /// Index of the lowest nonzero remainder coefficient.
    pub fn remainder_valuation(&self) -> Multiplicity {
        match self.remainder.coeffs().iter().position(|c| !c.is_zero()) {
            Some(i) => Multiplicity::Finite(i),
            None => Multiplicity::Infinite,
        }
    }

    /// A radius `r <= 1` such that for `0 < h <= r` the lowest-order
    /// remainder term dominates, so `|R(h)/h|` shrinks strictly each time
    /// `h` is divided by ten. `None` for a zero remainder.
    pub fn dominance_radius(&self) -> Option<Rational> {
        let coeffs = self.remainder.coeffs();
        let v = coeffs.iter().position(|c| !c.is_zero())?;
        let tail: Rational = coeffs[v + 1..].iter().map(Rational::abs).sum();
        if tail.is_zero() {
            return Some(Rational::one());
        }
        let r = coeffs[v]
            .abs()
            .checked_div(&(tail * Rational::from(2)))
            .expect("tail is nonzero");
        Some(if r > 1 { Rational::one() } else { r })
    }
}

pub fn decompose(f: &Polynomial, x0: &Rational) -> Decomposition {
    let expansion = taylor_shift(f, x0);
    Decomposition {
        x0: x0.clone(),
        value: expansion.value(),
        slope: expansion.linear_coeff(),
        remainder: expansion.higher_order(),
    }
}

pub fn remainder_valuation(d: &Decomposition) -> Multiplicity {
    d.remainder_valuation()
}

/// One step of the difference-quotient table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRow {
    pub h: Rational,
    pub dy: Rational,
    pub quotient: Rational,
    /// `quotient - f'(x0)`, equal to `R(h)/h`.
    pub gap: Rational,
}

/// Rows for `h = 10^-1, ..., 10^-steps`.
pub fn quotient_table(f: &Polynomial, x0: &Rational, steps: u32) -> Vec<QuotientRow> {
    let slope = derive_poly(f).eval(x0);
    (1..=steps)
        .map(|i| {
            let h = Rational::ten_pow_neg(i);
            let dy = increment(f, x0, &h);
            let quotient = dy.checked_div(&h).expect("h is a positive power of ten");
            let gap = &quotient - &slope;
            QuotientRow {
                h,
                dy,
                quotient,
                gap,
            }
        })
        .collect()
}
