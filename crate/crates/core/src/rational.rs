//! Exact rational scalars.
//!
//! [`Rational`] wraps an arbitrary-precision fraction kept in lowest terms
//! with a strictly positive denominator, so equality is structural and zero
//! is always `0/1`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer / denom` in canonical form.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Self> {
        Rational::one().checked_div(self)
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rational(num_traits::pow(self.0.clone(), exp as usize))
    }

    /// `10^-exp` as an exact rational.
    pub fn ten_pow_neg(exp: u32) -> Self {
        Rational(BigRational::new(
            BigInt::one(),
            num_traits::pow(BigInt::from(10), exp as usize),
        ))
    }

    /// Nearest binary float. Only the float dual and plotting paths use this.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal rendering with exactly `digits` significant digits, rounded
    /// half away from zero. Computed on the exact value, never through floats.
    pub fn to_sig_decimal(&self, digits: usize) -> String {
        assert!(digits >= 1);
        if self.is_zero() {
            return "0".to_string();
        }
        let ten = BigInt::from(10);
        let numer = self.numer().abs();
        let denom = self.denom().clone();

        // exponent e with 10^e <= |self| < 10^(e+1)
        let mut exp = numer.to_string().len() as i64 - denom.to_string().len() as i64;
        let below = |e: i64| -> bool {
            // |self| < 10^e
            if e >= 0 {
                numer < &denom * num_traits::pow(ten.clone(), e as usize)
            } else {
                &numer * num_traits::pow(ten.clone(), (-e) as usize) < denom
            }
        };
        while below(exp) {
            exp -= 1;
        }
        while !below(exp + 1) {
            exp += 1;
        }

        let shift = digits as i64 - 1 - exp;
        let (scaled_num, scaled_den) = if shift >= 0 {
            (&numer * num_traits::pow(ten.clone(), shift as usize), denom)
        } else {
            (numer, denom * num_traits::pow(ten.clone(), (-shift) as usize))
        };
        let (mut mantissa, rem) = scaled_num.div_rem(&scaled_den);
        if rem * 2 >= scaled_den {
            mantissa += 1;
        }
        if mantissa == num_traits::pow(ten.clone(), digits) {
            mantissa /= 10;
            exp += 1;
        }

        let s = mantissa.to_string();
        let sign = if self.is_negative() { "-" } else { "" };
        if (-7..digits as i64).contains(&exp) {
            if exp >= 0 {
                let split = exp as usize + 1;
                let (int, frac) = s.split_at(split);
                if frac.is_empty() {
                    format!("{sign}{int}")
                } else {
                    format!("{sign}{int}.{frac}")
                }
            } else {
                let zeros = "0".repeat((-exp - 1) as usize);
                format!("{sign}0.{zeros}{s}")
            }
        } else {
            let (lead, rest) = s.split_at(1);
            if rest.is_empty() {
                format!("{sign}{lead}e{exp}")
            } else {
                format!("{sign}{lead}.{rest}e{exp}")
            }
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `n`, `-n`, `n/d` and decimal `a.b` (converted exactly to `ab/10^k`).
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let invalid = || Error::InvalidNumber(s.to_string());
        let t = s.trim();
        let (negative, body) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t.strip_prefix('+').unwrap_or(t)),
        };
        let all_digits = |p: &str| !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit());

        let value = if let Some((n, d)) = body.split_once('/') {
            if !all_digits(n) || !all_digits(d) {
                return Err(invalid());
            }
            let n: BigInt = n.parse().map_err(|_| invalid())?;
            let d: BigInt = d.parse().map_err(|_| invalid())?;
            Rational::new(n, d)?
        } else if let Some((int, frac)) = body.split_once('.') {
            if !(int.is_empty() || all_digits(int)) || !(frac.is_empty() || all_digits(frac)) {
                return Err(invalid());
            }
            if int.is_empty() && frac.is_empty() {
                return Err(invalid());
            }
            let digits = format!("{int}{frac}");
            let n: BigInt = digits.parse().map_err(|_| invalid())?;
            let d = num_traits::pow(BigInt::from(10), frac.len());
            Rational::new(n, d)?
        } else {
            if !all_digits(body) {
                return Err(invalid());
            }
            Rational::from_integer(body.parse::<BigInt>().map_err(|_| invalid())?)
        };
        Ok(if negative { -value } else { value })
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.cmp(&Rational::from(*other)))
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.is_integer() && *self.numer() == BigInt::from(*other)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(r("1/2") + r("1/3"), r("5/6"));
        assert_eq!(Rational::zero() + r("-7/4"), r("-7/4"));
        assert_eq!(r("2/6") + r("1/6"), r("1/2"));
        assert_eq!((r("2/6") + r("1/6")).to_string(), "1/2");
    }

    #[test]
    fn mul_examples() {
        assert_eq!(r("2/3") * r("3/4"), r("1/2"));
        assert_eq!(r("-5/7") * Rational::one(), r("-5/7"));
        assert_eq!(r("-1/2") * r("-1/2"), r("1/4"));
    }

    #[test]
    fn div_examples() {
        assert_eq!(r("1/2").checked_div(&r("1/4")).unwrap(), r("2"));
        assert_eq!(r("-3/8").checked_div(&r("-3/8")).unwrap(), Rational::one());
        assert_eq!(
            Rational::one().checked_div(&Rational::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn canonical_form() {
        let x = Rational::new(4, -6).unwrap();
        assert_eq!(x.numer(), &BigInt::from(-2));
        assert_eq!(x.denom(), &BigInt::from(3));
        let z = Rational::new(0, -17).unwrap();
        assert_eq!(z.numer(), &BigInt::from(0));
        assert_eq!(z.denom(), &BigInt::from(1));
        assert_eq!(Rational::new(1, 0), Err(Error::DivisionByZero));
    }

    #[test]
    fn parse_forms() {
        assert_eq!(r("-12"), Rational::from(-12));
        assert_eq!(r("3/9").to_string(), "1/3");
        assert_eq!(r("2.5"), Rational::new(5, 2).unwrap());
        assert_eq!(r("-0.125"), Rational::new(-1, 8).unwrap());
        assert_eq!(r(".5"), Rational::new(1, 2).unwrap());
        assert_eq!(r("0.000001"), Rational::ten_pow_neg(6));
        for bad in ["", "-", "1/0", "x", "1.2.3", "1/-2", ".", "1 2"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn sig_decimal() {
        assert_eq!(r("61/10").to_sig_decimal(12), "6.10000000000");
        assert_eq!(r("1/1000").to_sig_decimal(12), "0.00100000000000");
        assert_eq!(r("1/3").to_sig_decimal(12), "0.333333333333");
        assert_eq!(r("-2/3").to_sig_decimal(4), "-0.6667");
        assert_eq!(r("9999/1000").to_sig_decimal(3), "10.0");
        assert_eq!(r("6001/1000").to_sig_decimal(12), "6.00100000000");
        assert_eq!(Rational::ten_pow_neg(12).to_sig_decimal(3), "1.00e-12");
        assert_eq!(r("123456").to_sig_decimal(2), "1.2e5");
        assert_eq!(Rational::zero().to_sig_decimal(12), "0");
    }

    #[test]
    fn float_conversion() {
        assert_eq!(r("1/4").to_f64(), 0.25);
        assert_eq!(r("1/3").to_f64(), 1.0 / 3.0);
        assert_eq!(r("-7/2").to_f64(), -3.5);
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-1000i64..=1000, 1i64..=60).prop_map(|(n, d)| Rational::new(n, d).unwrap())
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, Rational::zero());
            if !a.is_zero() {
                prop_assert_eq!(a.checked_div(&a).unwrap(), Rational::one());
            }
        }

        #[test]
        fn construction_round_trip(n in -10_000i64..10_000, d in (-500i64..500).prop_filter("nonzero", |d| *d != 0)) {
            let x = Rational::new(n, d).unwrap();
            prop_assert!(x.denom() > &BigInt::zero());
            prop_assert!(x.numer().gcd(x.denom()).is_one());
            prop_assert_eq!(&x * Rational::from(d), Rational::from(n));
            // normalizing a canonical value changes nothing
            let again = Rational::new(x.numer().clone(), x.denom().clone()).unwrap();
            prop_assert_eq!(again.numer(), x.numer());
            prop_assert_eq!(again.denom(), x.denom());
        }

        #[test]
        fn display_parse_round_trip(x in arb_rational()) {
            prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x);
        }
    }
}
