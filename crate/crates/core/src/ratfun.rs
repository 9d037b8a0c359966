//! Quotients of polynomials in canonical form.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// `num / den` with `gcd(num, den) = 1` and a monic denominator.
///
/// Because the form is canonical, derived `PartialEq` is equality of
/// rational functions. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalFunction::zero());
        }
        let g = num.gcd(&den)?;
        let (num, _) = num.divrem(&g)?;
        let (den, _) = den.divrem(&g)?;
        let lead = den
            .leading_coeff()
            .expect("denominator is nonzero")
            .recip()?;
        Ok(RationalFunction {
            num: num.scale(&lead),
            den: den.scale(&lead),
        })
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn from_poly(f: Polynomial) -> Self {
        RationalFunction {
            num: f,
            den: Polynomial::one(),
        }
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    /// The polynomial this equals, if the denominator is 1.
    pub fn as_poly(&self) -> Option<&Polynomial> {
        (self.den == Polynomial::one()).then_some(&self.num)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Cross-multiplied comparison; agrees with `==` on canonical values.
    pub fn equivalent(&self, other: &RationalFunction) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn add(&self, other: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        RationalFunction::new(num, &self.den * &other.den).expect("product of nonzero denominators")
    }

    pub fn sub(&self, other: &RationalFunction) -> RationalFunction {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &other.num, &self.den * &other.den)
            .expect("product of nonzero denominators")
    }

    pub fn checked_div(&self, other: &RationalFunction) -> Result<RationalFunction> {
        if other.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        RationalFunction::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn pow(&self, exp: u32) -> RationalFunction {
        // powers of coprime polynomials stay coprime
        RationalFunction {
            num: self.num.pow(exp),
            den: self.den.pow(exp),
        }
    }

    /// Text such as `-1/x^2` or `(x + 1)/(x^2 + 1)`; a polynomial renders bare.
    pub fn render(&self, var: &str) -> String {
        if let Some(p) = self.as_poly() {
            return p.render(var);
        }
        let num = self.num.render(var);
        let den = self.den.render(var);
        let num = if self.num.is_monomial() { num } else { format!("({num})") };
        // monic, so a single-term denominator is exactly x^n
        let den = if self.den.is_monomial() { den } else { format!("({den})") };
        format!("{num}/{den}")
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(f: Polynomial) -> Self {
        RationalFunction::from_poly(f)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;
    use crate::strategies::{arb_nonzero_poly, arb_poly};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(p(num), p(den)).unwrap()
    }

    #[test]
    fn make_examples() {
        let r = rf(&[-1, 0, 1], &[-1, 1]);
        assert_eq!(r.num(), &p(&[1, 1]));
        assert_eq!(r.den(), &Polynomial::one());

        let f = p(&[3, 0, 2]);
        assert_eq!(RationalFunction::new(f.clone(), Polynomial::one()).unwrap(), RationalFunction::from_poly(f));

        let r = rf(&[0, 2], &[2]);
        assert_eq!(r.num(), &Polynomial::x());
        assert_eq!(r.den(), &Polynomial::one());

        assert_eq!(
            RationalFunction::new(Polynomial::one(), Polynomial::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn monic_denominator() {
        let r = rf(&[1], &[0, 2]);
        assert_eq!(r.num(), &Polynomial::constant(Rational::new(1, 2).unwrap()));
        assert_eq!(r.den(), &Polynomial::x());
    }

    #[test]
    fn equality_examples() {
        assert_eq!(rf(&[1, 1], &[1]), rf(&[-1, 0, 1], &[-1, 1]));
        assert!(rf(&[1, 1], &[1]).equivalent(&rf(&[-1, 0, 1], &[-1, 1])));
        assert_ne!(rf(&[0, 1], &[1]), rf(&[1, 1], &[1]));
        assert!(!rf(&[0, 1], &[1]).equivalent(&rf(&[1, 1], &[1])));
        assert_eq!(rf(&[], &[1, 0, 1]), rf(&[], &[1]));
    }

    #[test]
    fn rendering() {
        assert_eq!(rf(&[-1], &[0, 0, 1]).to_string(), "-1/x^2");
        assert_eq!(rf(&[1, 1], &[1, 0, 1]).to_string(), "(x + 1)/(x^2 + 1)");
        assert_eq!(rf(&[0, 2], &[1, 0, 1]).to_string(), "2*x/(x^2 + 1)");
        assert_eq!(rf(&[5, 0, 1], &[1]).to_string(), "x^2 + 5");
    }

    proptest! {
        #[test]
        fn canonical_equality_matches_cross_multiplication(
            a in arb_poly(4), b in arb_nonzero_poly(4), c in arb_nonzero_poly(2)
        ) {
            let plain = RationalFunction::new(a.clone(), b.clone()).unwrap();
            let scaled = RationalFunction::new(&a * &c, &b * &c).unwrap();
            prop_assert_eq!(&plain, &scaled);
            prop_assert!(plain.equivalent(&scaled));
            prop_assert_eq!(plain.den().leading_coeff(), Some(&Rational::one()));
            if !plain.is_zero() {
                prop_assert_eq!(plain.num().gcd(plain.den()).unwrap(), Polynomial::one());
            }
        }
    }
}
