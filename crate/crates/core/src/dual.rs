//! Dual numbers `a + b·ε` with `ε² = 0`.
//!
//! Evaluating `f` at `a + b·ε` yields `f(a) + f'(a)·b·ε`: the derivative is
//! the coefficient of the linear term. The scalar is generic, so the same
//! arithmetic serves exact rationals, polynomials (where it produces the
//! derivative polynomial) and binary floats (where it reaches the
//! elementary functions).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;

/// A commutative ring usable as the dual scalar.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational::one()
    }
}

impl Zero for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
}

impl One for Polynomial {
    fn one() -> Self {
        Polynomial::one()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Dual<T> {
    pub real: T,
    pub eps: T,
}

impl<T: Scalar> Dual<T> {
    pub fn new(real: T, eps: T) -> Self {
        Dual { real, eps }
    }

    /// `a + 0ε`.
    pub fn constant(real: T) -> Self {
        Dual {
            real,
            eps: T::zero(),
        }
    }

    /// `a + 1ε`, the seed for a first derivative.
    pub fn variable(real: T) -> Self {
        Dual {
            real,
            eps: T::one(),
        }
    }
}

impl<T: Scalar> Add for Dual<T> {
    type Output = Dual<T>;
    fn add(self, rhs: Dual<T>) -> Dual<T> {
        Dual::new(self.real + rhs.real, self.eps + rhs.eps)
    }
}

impl<T: Scalar> Sub for Dual<T> {
    type Output = Dual<T>;
    fn sub(self, rhs: Dual<T>) -> Dual<T> {
        Dual::new(self.real - rhs.real, self.eps - rhs.eps)
    }
}

impl<T: Scalar> Mul for Dual<T> {
    type Output = Dual<T>;
    fn mul(self, rhs: Dual<T>) -> Dual<T> {
        // the eps*eps term vanishes
        let eps = self.real.clone() * rhs.eps + self.eps * rhs.real.clone();
        Dual::new(self.real * rhs.real, eps)
    }
}

impl<T: Scalar> Neg for Dual<T> {
    type Output = Dual<T>;
    fn neg(self) -> Dual<T> {
        Dual::new(-self.real, -self.eps)
    }
}

impl<T: Scalar> Zero for Dual<T> {
    fn zero() -> Self {
        Dual::constant(T::zero())
    }
    fn is_zero(&self) -> bool {
        self.real.is_zero() && self.eps.is_zero()
    }
}

impl<T: Scalar> One for Dual<T> {
    fn one() -> Self {
        Dual::constant(T::one())
    }
}

impl<T: fmt::Display> fmt::Display for Dual<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})ε", self.real, self.eps)
    }
}

/// Horner evaluation of `f` at a dual point, embedding each rational
/// coefficient into the scalar ring with `embed`.
pub fn eval_poly_with<T: Scalar>(
    f: &Polynomial,
    x: &Dual<T>,
    embed: impl Fn(&Rational) -> T,
) -> Dual<T> {
    f.coeffs()
        .iter()
        .rev()
        .fold(Dual::zero(), |acc, c| acc * x.clone() + Dual::constant(embed(c)))
}

/// `f(a + bε) = f(a) + f'(a)·b·ε`, exactly.
pub fn eval_poly(f: &Polynomial, x: &Dual<Rational>) -> Dual<Rational> {
    eval_poly_with(f, x, Rational::clone)
}

/// Threshold on `|cos a|` below which `tan` is treated as undefined.
pub const TAN_POLE_TOLERANCE: f64 = 1e-12;

impl Dual<f64> {
    pub fn exp(self) -> Self {
        let e = self.real.exp();
        Dual::new(e, e * self.eps)
    }

    pub fn ln(self) -> Result<Self> {
        if self.real.is_nan() || self.real <= 0.0 {
            return Err(domain("log", format!("argument {} is not positive", self.real)));
        }
        Ok(Dual::new(self.real.ln(), self.eps / self.real))
    }

    pub fn sin(self) -> Self {
        Dual::new(self.real.sin(), self.real.cos() * self.eps)
    }

    pub fn cos(self) -> Self {
        Dual::new(self.real.cos(), -self.real.sin() * self.eps)
    }

    pub fn tan(self) -> Result<Self> {
        let c = self.real.cos();
        if c.abs() <= TAN_POLE_TOLERANCE {
            return Err(domain("tan", format!("cos({}) is within {TAN_POLE_TOLERANCE:e} of zero", self.real)));
        }
        Ok(Dual::new(self.real.tan(), self.eps / (c * c)))
    }

    pub fn powf(self, exponent: f64) -> Result<Self> {
        let a = self.real;
        if exponent == 0.0 {
            return Ok(Dual::new(1.0, 0.0));
        }
        if a < 0.0 && exponent.fract() != 0.0 {
            return Err(domain("pow", format!("negative base {a} with non-integer exponent {exponent}")));
        }
        if a == 0.0 && exponent < 1.0 {
            return Err(domain("pow", format!("derivative of x^{exponent} is unbounded at 0")));
        }
        Ok(Dual::new(a.powf(exponent), exponent * a.powf(exponent - 1.0) * self.eps))
    }
}

fn domain(func: &'static str, reason: String) -> Error {
    Error::Domain { func, reason }
}

/// The elementary functions reachable through the float dual path.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ElementaryFn {
    Exp,
    Log,
    Sin,
    Cos,
    Tan,
    /// `x^c` for a fixed real exponent `c`.
    PowConst(f64),
}

impl ElementaryFn {
    pub fn apply(self, x: Dual<f64>) -> Result<Dual<f64>> {
        match self {
            ElementaryFn::Exp => Ok(x.exp()),
            ElementaryFn::Log => x.ln(),
            ElementaryFn::Sin => Ok(x.sin()),
            ElementaryFn::Cos => Ok(x.cos()),
            ElementaryFn::Tan => x.tan(),
            ElementaryFn::PowConst(c) => x.powf(c),
        }
    }

    /// Plain float value, for finite-difference checks.
    pub fn value(self, a: f64) -> f64 {
        match self {
            ElementaryFn::Exp => a.exp(),
            ElementaryFn::Log => a.ln(),
            ElementaryFn::Sin => a.sin(),
            ElementaryFn::Cos => a.cos(),
            ElementaryFn::Tan => a.tan(),
            ElementaryFn::PowConst(c) => a.powf(c),
        }
    }

    pub fn name(self) -> String {
        match self {
            ElementaryFn::Exp => "exp".into(),
            ElementaryFn::Log => "log".into(),
            ElementaryFn::Sin => "sin".into(),
            ElementaryFn::Cos => "cos".into(),
            ElementaryFn::Tan => "tan".into(),
            ElementaryFn::PowConst(c) => format!("pow:{c}"),
        }
    }
}

impl FromStr for ElementaryFn {
    type Err = Error;

    /// `exp`, `log` (or `ln`), `sin`, `cos`, `tan`, `pow:<c>`.
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "exp" => ElementaryFn::Exp,
            "log" | "ln" => ElementaryFn::Log,
            "sin" => ElementaryFn::Sin,
            "cos" => ElementaryFn::Cos,
            "tan" => ElementaryFn::Tan,
            _ => {
                let c = s
                    .strip_prefix("pow:")
                    .and_then(|c| c.parse::<f64>().ok())
                    .filter(|c| c.is_finite())
                    .ok_or_else(|| Error::InvalidNumber(s.to_string()))?;
                ElementaryFn::PowConst(c)
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strategies::{arb_coeff, arb_poly};
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn d(a: i64, b: i64) -> Dual<Rational> {
        Dual::new(q(a), q(b))
    }

    #[test]
    fn add_examples() {
        assert_eq!(d(1, 2) + d(3, 4), d(4, 6));
        assert_eq!(d(5, -3) + Dual::zero(), d(5, -3));
        assert_eq!(d(7, 2) + d(7, -2), d(14, 0));
    }

    #[test]
    fn mul_examples() {
        // (a + bε)² = a² + 2abε
        assert_eq!(d(5, 3) * d(5, 3), d(25, 30));
        assert_eq!(d(3, 1) * d(3, 1), d(9, 6));
        assert_eq!(d(-4, 9) * Dual::one(), d(-4, 9));
    }

    #[test]
    fn polynomial_evaluation() {
        let cube = Polynomial::from_ints(&[0, 0, 0, 1]);
        assert_eq!(eval_poly(&cube, &d(2, 1)), d(8, 12));
        let c = Polynomial::from_ints(&[11]);
        assert_eq!(eval_poly(&c, &d(-3, 5)), d(11, 0));
        let sq = Polynomial::from_ints(&[0, 0, 1]);
        assert_eq!(eval_poly(&sq, &d(3, 2)), d(9, 12));
    }

    #[test]
    fn elementary_at_origin() {
        let seed = |a: f64| Dual::new(a, 1.0);
        assert_eq!(ElementaryFn::Sin.apply(seed(0.0)).unwrap(), Dual::new(0.0, 1.0));
        assert_eq!(ElementaryFn::Exp.apply(seed(0.0)).unwrap(), Dual::new(1.0, 1.0));
        assert_eq!(ElementaryFn::Log.apply(seed(1.0)).unwrap(), Dual::new(0.0, 1.0));
        assert_eq!(ElementaryFn::Cos.apply(seed(0.0)).unwrap(), Dual::new(1.0, -0.0));
        assert_eq!(ElementaryFn::Tan.apply(seed(0.0)).unwrap(), Dual::new(0.0, 1.0));
        let p = ElementaryFn::PowConst(2.5).apply(seed(4.0)).unwrap();
        assert_eq!(p, Dual::new(32.0, 20.0));
    }

    #[test]
    fn domain_errors() {
        let seed = |a: f64| Dual::new(a, 1.0);
        assert!(matches!(ElementaryFn::Log.apply(seed(-1.0)), Err(Error::Domain { func: "log", .. })));
        assert!(ElementaryFn::Log.apply(seed(0.0)).is_err());
        assert!(ElementaryFn::Log.apply(seed(f64::NAN)).is_err());
        assert!(ElementaryFn::Tan.apply(seed(std::f64::consts::FRAC_PI_2)).is_err());
        assert!(ElementaryFn::PowConst(0.5).apply(seed(-2.0)).is_err());
        assert!(ElementaryFn::PowConst(3.0).apply(seed(-2.0)).is_ok());
    }

    #[test]
    fn tag_parsing() {
        assert_eq!("sin".parse::<ElementaryFn>().unwrap(), ElementaryFn::Sin);
        assert_eq!("ln".parse::<ElementaryFn>().unwrap(), ElementaryFn::Log);
        assert_eq!("pow:1.5".parse::<ElementaryFn>().unwrap(), ElementaryFn::PowConst(1.5));
        assert!("sinh".parse::<ElementaryFn>().is_err());
        assert!("pow:abc".parse::<ElementaryFn>().is_err());
    }

    fn arb_dual() -> impl Strategy<Value = Dual<Rational>> {
        (arb_coeff(), arb_coeff()).prop_map(|(a, b)| Dual::new(a, b))
    }

    proptest! {
        #[test]
        fn ring_laws(u in arb_dual(), v in arb_dual(), w in arb_dual()) {
            prop_assert_eq!((u.clone() + v.clone()) + w.clone(), u.clone() + (v.clone() + w.clone()));
            prop_assert_eq!((u.clone() * v.clone()) * w.clone(), u.clone() * (v.clone() * w.clone()));
            prop_assert_eq!(u.clone() * v.clone(), v.clone() * u.clone());
            prop_assert_eq!(
                u.clone() * (v.clone() + w.clone()),
                u.clone() * v.clone() + u.clone() * w.clone()
            );
        }

        #[test]
        fn nilpotent(b in arb_coeff()) {
            let e = Dual::new(Rational::zero(), b);
            prop_assert_eq!(e.clone() * e, Dual::zero());
        }

        #[test]
        fn linear_part_scales_with_seed(f in arb_poly(8), a in arb_coeff(), b in arb_coeff()) {
            let unit = eval_poly(&f, &Dual::variable(a.clone()));
            let scaled = eval_poly(&f, &Dual::new(a.clone(), b.clone()));
            prop_assert_eq!(&scaled.real, &f.eval(&a));
            prop_assert_eq!(scaled.eps, unit.eps * b);
        }
    }
}
