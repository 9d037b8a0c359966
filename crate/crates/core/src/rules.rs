//! Sum, product, quotient and chain rules checked as exact identities.
//!
//! [`derive_poly`] never looks at how a polynomial was built, so each rule
//! here is a genuine theorem about the tangent construction rather than a
//! rewrite the differentiator applies.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;
use crate::rational::Rational;
use crate::tangency::{derive_poly, derive_ratfun, tangent_at};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Sum,
    Product,
    Quotient,
    Chain,
}

impl Rule {
    pub const ALL: [Rule; 4] = [Rule::Sum, Rule::Product, Rule::Quotient, Rule::Chain];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Sum => "sum",
            Rule::Product => "product",
            Rule::Quotient => "quotient",
            Rule::Chain => "chain",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Rule::Sum => "(f + g)' = f' + g'",
            Rule::Product => "(f*g)' = f'*g + f*g'",
            Rule::Quotient => "(f/g)' = (f'*g - f*g')/g^2",
            Rule::Chain => "(f(g(x)))' = f'(g(x))*g'(x)",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The two sides of a rule for one input pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleReport {
    pub rule: Rule,
    pub lhs: RationalFunction,
    pub rhs: RationalFunction,
    pub holds: bool,
}

impl RuleReport {
    fn new(rule: Rule, lhs: RationalFunction, rhs: RationalFunction) -> Self {
        let holds = lhs == rhs && lhs.equivalent(&rhs);
        RuleReport {
            rule,
            lhs,
            rhs,
            holds,
        }
    }

    fn from_polys(rule: Rule, lhs: Polynomial, rhs: Polynomial) -> Self {
        RuleReport::new(rule, lhs.into(), rhs.into())
    }
}

pub fn verify_sum(f: &Polynomial, g: &Polynomial) -> RuleReport {
    let lhs = derive_poly(&(f + g));
    let rhs = &derive_poly(f) + &derive_poly(g);
    RuleReport::from_polys(Rule::Sum, lhs, rhs)
}

pub fn verify_product(f: &Polynomial, g: &Polynomial) -> RuleReport {
    let lhs = derive_poly(&(f * g));
    let rhs = &(&derive_poly(f) * g) + &(f * &derive_poly(g));
    RuleReport::from_polys(Rule::Product, lhs, rhs)
}

/// Fails when `g` is the zero polynomial.
pub fn verify_quotient(f: &Polynomial, g: &Polynomial) -> Result<RuleReport> {
    if g.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let lhs = derive_ratfun(&RationalFunction::new(f.clone(), g.clone())?);
    // built from the unreduced f and g on purpose
    let num = &(&derive_poly(f) * g) - &(f * &derive_poly(g));
    let rhs = RationalFunction::new(num, g.pow(2))?;
    Ok(RuleReport::new(Rule::Quotient, lhs, rhs))
}

pub fn verify_chain(f: &Polynomial, g: &Polynomial) -> RuleReport {
    let lhs = derive_poly(&f.compose(g));
    let rhs = &derive_poly(f).compose(g) * &derive_poly(g);
    RuleReport::from_polys(Rule::Chain, lhs, rhs)
}

/// All four rules; the quotient entry carries its own error for `g = 0`.
pub fn verify_all(f: &Polynomial, g: &Polynomial) -> Vec<(Rule, Result<RuleReport>)> {
    vec![
        (Rule::Sum, Ok(verify_sum(f, g))),
        (Rule::Product, Ok(verify_product(f, g))),
        (Rule::Quotient, verify_quotient(f, g)),
        (Rule::Chain, Ok(verify_chain(f, g))),
    ]
}

/// Adds the tangency certificates of `f` and `g` at `p` and checks the
/// result certifies `f + g`, with slope `k_f + k_g`.
pub fn certificates_add(f: &Polynomial, g: &Polynomial, p: &Rational) -> Result<bool> {
    let tf = tangent_at(f, p)?;
    let tg = tangent_at(g, p)?;
    let combined = tf.sum(&tg).expect("same point");
    let direct = tangent_at(&(f + g), p)?;
    Ok(combined.is_certificate_for(&(f + g)) && combined == direct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strategies::{arb_coeff, arb_nonzero_poly, arb_poly};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn poly_rf(c: &[i64]) -> RationalFunction {
        RationalFunction::from_poly(p(c))
    }

    #[test]
    fn sum_examples() {
        let r = verify_sum(&p(&[0, 0, 1]), &p(&[0, 0, 0, 1]));
        assert!(r.holds);
        assert_eq!(r.lhs, poly_rf(&[0, 2, 3]));
        assert_eq!(r.lhs.to_string(), "3*x^2 + 2*x");

        assert!(verify_sum(&p(&[1, -4, 0, 2]), &Polynomial::zero()).holds);

        let r = verify_sum(&Polynomial::x(), &-Polynomial::x());
        assert!(r.holds);
        assert!(r.lhs.is_zero() && r.rhs.is_zero());
    }

    #[test]
    fn product_examples() {
        let r = verify_product(&Polynomial::x(), &Polynomial::x());
        assert!(r.holds);
        assert_eq!(r.lhs, poly_rf(&[0, 2]));

        let g = p(&[3, 1, -1, 5]);
        let r = verify_product(&p(&[4]), &g);
        assert!(r.holds);
        assert_eq!(r.rhs, RationalFunction::from_poly(derive_poly(&g).scale(&Rational::from(4))));

        let r = verify_product(&p(&[0, 0, 1]), &p(&[0, 0, 0, 1]));
        assert!(r.holds);
        assert_eq!(r.lhs, poly_rf(&[0, 0, 0, 0, 5]));
    }

    #[test]
    fn quotient_examples() {
        let r = verify_quotient(&Polynomial::one(), &Polynomial::x()).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs.to_string(), "-1/x^2");

        let r = verify_quotient(&p(&[0, 0, 1]), &Polynomial::x()).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, poly_rf(&[1]));

        let f = p(&[2, 0, 7, -1]);
        let r = verify_quotient(&f, &Polynomial::one()).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, RationalFunction::from_poly(derive_poly(&f)));

        assert_eq!(verify_quotient(&f, &Polynomial::zero()), Err(Error::ZeroDenominator));
    }

    #[test]
    fn chain_examples() {
        let r = verify_chain(&p(&[0, 0, 1]), &p(&[1, 1]));
        assert!(r.holds);
        assert_eq!(r.lhs, poly_rf(&[2, 2]));

        let g = p(&[-1, 0, 3, 2]);
        let r = verify_chain(&Polynomial::x(), &g);
        assert!(r.holds);
        assert_eq!(r.lhs, RationalFunction::from_poly(derive_poly(&g)));

        let r = verify_chain(&p(&[0, 0, 0, 1]), &p(&[0, 2]));
        assert!(r.holds);
        assert_eq!(r.lhs, poly_rf(&[0, 0, 24]));
    }

    #[test]
    fn verify_all_reports_quotient_error() {
        let reports = verify_all(&Polynomial::x(), &Polynomial::zero());
        assert!(reports[0].1.as_ref().unwrap().holds);
        assert!(reports[2].1.is_err());
        assert!(reports[3].1.as_ref().unwrap().holds);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn all_rules_hold(f in arb_poly(8), g in arb_nonzero_poly(8)) {
            prop_assert!(verify_sum(&f, &g).holds);
            prop_assert!(verify_product(&f, &g).holds);
            prop_assert!(verify_quotient(&f, &g).unwrap().holds);
            prop_assert!(verify_chain(&f, &g).holds);
        }

        #[test]
        fn sum_of_certificates(f in arb_poly(8), g in arb_poly(8), at in arb_coeff()) {
            prop_assert!(certificates_add(&f, &g, &at).unwrap());
        }
    }
}
