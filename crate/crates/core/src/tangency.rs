//! Tangency by the double-root criterion.
//!
//! A line `y = kx + b` touches `f` at `p` exactly when `(x - p)^2` divides
//! `f(x) - (kx + b)`. Rewriting `f` in powers of `t = x - p` produces the
//! unique such line: its slope is the coefficient of `t`, and the rest of the
//! expansion is the cofactor `Q` certifying the division. Collecting those
//! slopes over every point gives the derivative polynomial.

use std::cmp::Ordering;
use std::fmt;

use crate::dual::{self, Dual};
use crate::error::{Error, Result};
use crate::poly::{LinearFunction, Polynomial};
use crate::ratfun::RationalFunction;
use crate::rational::Rational;

/// Coefficients of `f(p + t) = sum c_i t^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalExpansion {
    pub center: Rational,
    pub coeffs: Vec<Rational>,
}

impl LocalExpansion {
    /// `c_0 = f(p)`.
    pub fn value(&self) -> Rational {
        self.coeffs.first().cloned().unwrap_or_else(Rational::zero)
    }

    /// `c_1`, the slope of the tangent at the center.
    pub fn linear_coeff(&self) -> Rational {
        self.coeffs.get(1).cloned().unwrap_or_else(Rational::zero)
    }

    /// The expansion as a polynomial in `t`.
    pub fn in_t(&self) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.clone())
    }

    /// Terms of order two and up, `sum_{i>=2} c_i t^i`.
    pub fn higher_order(&self) -> Polynomial {
        let mut tail = self.coeffs.clone();
        for c in tail.iter_mut().take(2) {
            *c = Rational::zero();
        }
        Polynomial::from_coeffs(tail)
    }

    /// Substitutes `t = x - p` back, recovering `f`.
    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_coeffs(taylor_shift(&self.in_t(), &-&self.center).coeffs)
    }
}

/// Expands `f` about `p` by repeated synthetic division by `x - p`; the
/// successive remainders are `c_0, c_1, ...`.
pub fn taylor_shift(f: &Polynomial, p: &Rational) -> LocalExpansion {
    let mut coeffs = Vec::with_capacity(f.coeffs().len());
    let mut rest = f.clone();
    while !rest.is_zero() {
        let (quot, rem) = rest.synthetic_div(p);
        coeffs.push(rem);
        rest = quot;
    }
    LocalExpansion {
        center: p.clone(),
        coeffs,
    }
}

/// Order of the root of `f - line` at a point. `Infinite` when the
/// difference vanishes identically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Multiplicity {
    Finite(usize),
    Infinite,
}

impl Multiplicity {
    pub fn at_least(self, m: usize) -> bool {
        match self {
            Multiplicity::Finite(n) => n >= m,
            Multiplicity::Infinite => true,
        }
    }
}

impl PartialOrd for Multiplicity {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Multiplicity {
    fn cmp(&self, other: &Self) -> Ordering {
        use Multiplicity::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => Ordering::Less,
            (Infinite, Finite(_)) => Ordering::Greater,
            (Infinite, Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Finite(n) => write!(f, "{n}"),
            Multiplicity::Infinite => f.write_str("INFINITE"),
        }
    }
}

/// Largest `m` with `(x - p)^m` dividing `f(x) - (kx + b)`.
pub fn intersection_multiplicity(
    f: &Polynomial,
    line: &LinearFunction,
    p: &Rational,
) -> Multiplicity {
    let mut diff = f - &line.to_polynomial();
    if diff.is_zero() {
        return Multiplicity::Infinite;
    }
    let mut m = 0;
    loop {
        let (quot, rem) = diff.synthetic_div(p);
        if !rem.is_zero() {
            return Multiplicity::Finite(m);
        }
        m += 1;
        diff = quot;
    }
}

/// Whether `(x - p)^2` divides `f(x) - (kx + b)`. A line that coincides
/// with `f` counts as tangent.
pub fn check_tangency(f: &Polynomial, line: &LinearFunction, p: &Rational) -> bool {
    let diff = f - &line.to_polynomial();
    let square = Polynomial::linear_factor(p).pow(2);
    let (_, rem) = diff
        .divrem(&square)
        .expect("(x - p)^2 is never the zero polynomial");
    rem.is_zero()
}

/// A tangent line with its divisibility certificate:
/// `f(x) - (kx + b) = (x - p)^2 * cofactor(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentLine {
    pub p: Rational,
    pub k: Rational,
    pub b: Rational,
    /// In the `x` basis.
    pub cofactor: Polynomial,
}

impl TangentLine {
    pub fn line(&self) -> LinearFunction {
        LinearFunction::new(self.k.clone(), self.b.clone())
    }

    /// `(x - p)^2 * Q + kx + b`.
    pub fn reconstruct(&self) -> Polynomial {
        let square = Polynomial::linear_factor(&self.p).pow(2);
        &(&square * &self.cofactor) + &self.line().to_polynomial()
    }

    pub fn is_certificate_for(&self, f: &Polynomial) -> bool {
        self.reconstruct() == *f
    }

    /// Adds two certificates taken at the same point.
    pub fn sum(&self, other: &TangentLine) -> Option<TangentLine> {
        (self.p == other.p).then(|| TangentLine {
            p: self.p.clone(),
            k: &self.k + &other.k,
            b: &self.b + &other.b,
            cofactor: &self.cofactor + &other.cofactor,
        })
    }
}

/// The unique tangent to `f` at `p`.
///
/// Fails only if the certificate does not reproduce `f`, which would be a
/// bug in the arithmetic.
pub fn tangent_at(f: &Polynomial, p: &Rational) -> Result<TangentLine> {
    let expansion = taylor_shift(f, p);
    let k = expansion.linear_coeff();
    let b = expansion.value() - &k * p;

    // drop c_0 and c_1, divide by t^2, return to the x basis
    let quotient_in_t = Polynomial::from_coeffs(expansion.coeffs.iter().skip(2).cloned().collect());
    let cofactor = Polynomial::from_coeffs(taylor_shift(&quotient_in_t, &-p).coeffs);

    let tangent = TangentLine {
        p: p.clone(),
        k,
        b,
        cofactor,
    };
    if !tangent.is_certificate_for(f) {
        return Err(Error::Invariant(format!(
            "tangent certificate for {f} at {p} does not reconstruct the polynomial"
        )));
    }
    Ok(tangent)
}

/// The derivative polynomial: the linear part of `f(y + ε)` over the
/// polynomial ring in `y`.
pub fn derive_poly(f: &Polynomial) -> Polynomial {
    let seed = Dual::variable(Polynomial::x());
    dual::eval_poly_with(f, &seed, |c| Polynomial::constant(c.clone())).eps
}

/// `(f'g - fg') / g^2` for `r = f/g`, in canonical form.
pub fn derive_ratfun(r: &RationalFunction) -> RationalFunction {
    let f = r.num();
    let g = r.den();
    let num = &(&derive_poly(f) * g) - &(f * &derive_poly(g));
    RationalFunction::new(num, g.pow(2)).expect("square of a nonzero denominator")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strategies::{arb_coeff, arb_poly};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn line(k: &str, b: &str) -> LinearFunction {
        LinearFunction::new(q(k), q(b))
    }

    /// Independent oracle: binomial expansion of f(p + t).
    fn binomial_shift(f: &Polynomial, center: &Rational) -> Vec<Rational> {
        let n = f.coeffs().len();
        let mut out = vec![Rational::zero(); n];
        for (i, a) in f.coeffs().iter().enumerate() {
            let mut binom = Rational::one();
            for (j, slot) in out.iter_mut().enumerate().take(i + 1) {
                // C(i, j) * a * center^(i - j)
                *slot += &(&(&binom * a) * &center.pow((i - j) as u32));
                binom = &binom * &Rational::from((i - j) as i64);
                binom = binom.checked_div(&Rational::from(j as i64 + 1)).unwrap();
            }
        }
        out
    }

    /// Independent oracle: the power rule applied coefficient-wise.
    fn power_rule(f: &Polynomial) -> Polynomial {
        Polynomial::from_coeffs(
            f.coeffs()
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * &Rational::from(i as i64))
                .collect(),
        )
    }

    #[test]
    fn taylor_shift_examples() {
        assert_eq!(taylor_shift(&p(&[0, 0, 1]), &q("3")).coeffs, vec![q("9"), q("6"), q("1")]);
        assert_eq!(taylor_shift(&p(&[4]), &q("-2/3")).coeffs, vec![q("4")]);
        assert_eq!(
            taylor_shift(&p(&[0, 0, 0, 1]), &q("1")).coeffs,
            vec![q("1"), q("3"), q("3"), q("1")]
        );
        assert!(taylor_shift(&Polynomial::zero(), &q("5")).coeffs.is_empty());
    }

    #[test]
    fn multiplicity_examples() {
        let sq = p(&[0, 0, 1]);
        assert_eq!(intersection_multiplicity(&sq, &line("6", "-9"), &q("3")), Multiplicity::Finite(2));
        assert_eq!(intersection_multiplicity(&sq, &line("5", "-6"), &q("3")), Multiplicity::Finite(1));
        assert_eq!(intersection_multiplicity(&p(&[1, 1]), &line("1", "1"), &q("0")), Multiplicity::Infinite);
        assert_eq!(intersection_multiplicity(&sq, &line("0", "1"), &q("3")), Multiplicity::Finite(0));
        // inflection: x^3 against y = 0 at 0
        assert_eq!(intersection_multiplicity(&p(&[0, 0, 0, 1]), &line("0", "0"), &q("0")), Multiplicity::Finite(3));
        assert!(Multiplicity::Finite(7) < Multiplicity::Infinite);
    }

    #[test]
    fn tangency_examples() {
        let sq = p(&[0, 0, 1]);
        assert!(check_tangency(&sq, &line("6", "-9"), &q("3")));
        assert!(!check_tangency(&sq, &line("5", "-6"), &q("3")));
        for at in ["0", "-4", "7/2"] {
            assert!(check_tangency(&p(&[13]), &line("0", "13"), &q(at)));
        }
        assert!(check_tangency(&p(&[2, 5]), &line("5", "2"), &q("9")));
    }

    #[test]
    fn tangent_examples() {
        let t = tangent_at(&p(&[0, 0, 1]), &q("3")).unwrap();
        assert_eq!((t.k, t.b, t.cofactor), (q("6"), q("-9"), Polynomial::one()));

        let t = tangent_at(&p(&[0, 0, 0, 1]), &q("2")).unwrap();
        assert_eq!((t.k, t.b, t.cofactor), (q("12"), q("-16"), p(&[4, 1])));

        let t = tangent_at(&p(&[5]), &q("7")).unwrap();
        assert_eq!((t.k, t.b, t.cofactor), (q("0"), q("5"), Polynomial::zero()));

        let t = tangent_at(&Polynomial::zero(), &q("-1/2")).unwrap();
        assert_eq!((t.k, t.b, t.cofactor), (q("0"), q("0"), Polynomial::zero()));
    }

    #[test]
    fn derive_examples() {
        assert_eq!(derive_poly(&p(&[0, 0, 1])), p(&[0, 2]));
        assert_eq!(derive_poly(&p(&[0, 0, 0, 1])), p(&[0, 0, 3]));
        let a = q("7/2");
        let lin = Polynomial::from_coeffs(vec![q("-1"), a.clone()]);
        assert_eq!(derive_poly(&lin), Polynomial::constant(a));
        assert_eq!(derive_poly(&p(&[9])), Polynomial::zero());
        assert_eq!(derive_poly(&Polynomial::zero()), Polynomial::zero());
    }

    #[test]
    fn derive_ratfun_examples() {
        let recip = RationalFunction::new(Polynomial::one(), Polynomial::x()).unwrap();
        let expected = RationalFunction::new(p(&[-1]), p(&[0, 0, 1])).unwrap();
        assert_eq!(derive_ratfun(&recip), expected);

        let f = p(&[1, -3, 0, 2]);
        assert_eq!(
            derive_ratfun(&RationalFunction::from_poly(f.clone())),
            RationalFunction::from_poly(derive_poly(&f))
        );

        let r = RationalFunction::new(p(&[0, 0, 1]), Polynomial::x()).unwrap();
        assert_eq!(derive_ratfun(&r), RationalFunction::from_poly(Polynomial::one()));
    }

    #[test]
    fn power_rule_up_to_64() {
        for n in 0..=64usize {
            let xn = Polynomial::monomial(Rational::one(), n);
            let expected = if n == 0 {
                Polynomial::zero()
            } else {
                Polynomial::monomial(Rational::from(n as i64), n - 1)
            };
            assert_eq!(derive_poly(&xn), expected, "n = {n}");
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn shift_matches_binomial_oracle(f in arb_poly(10), c in arb_coeff()) {
            prop_assert_eq!(taylor_shift(&f, &c).coeffs, binomial_shift(&f, &c));
        }

        #[test]
        fn expansion_round_trip(f in arb_poly(10), c in arb_coeff()) {
            let e = taylor_shift(&f, &c);
            prop_assert_eq!(e.value(), f.eval(&c));
            if let Some(n) = f.degree() {
                prop_assert_eq!(e.coeffs.len(), n + 1);
            }
            prop_assert_eq!(e.to_polynomial(), f.clone());
            prop_assert_eq!(taylor_shift(&e.in_t(), &-&c).coeffs, f.coeffs().to_vec());
        }

        #[test]
        fn certificate_and_degree_bound(f in arb_poly(10), c in arb_coeff()) {
            let t = tangent_at(&f, &c).unwrap();
            prop_assert!(t.is_certificate_for(&f));
            prop_assert_eq!(&t.b, &(f.eval(&c) - &t.k * &c));
            prop_assert!(check_tangency(&f, &t.line(), &c));
            prop_assert!(intersection_multiplicity(&f, &t.line(), &c).at_least(2));
            match f.degree() {
                Some(n) if n >= 2 => {
                    prop_assert_eq!(t.cofactor.degree(), Some(n - 2));
                    prop_assert_eq!(t.cofactor.leading_coeff(), f.leading_coeff());
                }
                _ => prop_assert!(t.cofactor.is_zero()),
            }
        }

        #[test]
        fn tangent_is_unique(f in arb_poly(10), c in arb_coeff()) {
            prop_assume!(f.degree().is_some_and(|n| n >= 2));
            let t = tangent_at(&f, &c).unwrap();
            for delta in [q("1"), q("-1"), q("1/2"), q("-1/2")] {
                let k = &t.k + &delta;
                let b = f.eval(&c) - &k * &c;
                let other = LinearFunction::new(k, b);
                prop_assert!(!check_tangency(&f, &other, &c));
                prop_assert_eq!(intersection_multiplicity(&f, &other, &c), Multiplicity::Finite(1));
            }
        }

        #[test]
        fn derivative_matches_power_rule_and_tangents(f in arb_poly(10), c in arb_coeff()) {
            let df = derive_poly(&f);
            prop_assert_eq!(&df, &power_rule(&f));
            prop_assert_eq!(df.eval(&c), tangent_at(&f, &c).unwrap().k);
            prop_assert_eq!(dual::eval_poly(&f, &Dual::variable(c.clone())).eps, df.eval(&c));
        }

        #[test]
        fn derivative_is_linear(f in arb_poly(8), g in arb_poly(8), c in arb_coeff()) {
            prop_assert_eq!(derive_poly(&(&f + &g)), &derive_poly(&f) + &derive_poly(&g));
            prop_assert_eq!(derive_poly(&f.scale(&c)), derive_poly(&f).scale(&c));
        }

        #[test]
        fn chain_rule_through_duals(f in arb_poly(5), g in arb_poly(4), c in arb_coeff()) {
            let composite = dual::eval_poly(&f.compose(&g), &Dual::variable(c.clone())).eps;
            let outer = derive_poly(&f).eval(&g.eval(&c));
            let inner = derive_poly(&g).eval(&c);
            prop_assert_eq!(composite, outer * inner);
        }
    }
}
