use super::poly::{poly_gcd, Polynomial};
use super::{format_rational, Rational};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::fmt;

/// Reduced quotient of two polynomials. Canonical form: the denominator is
/// monic and nonzero, numerator and denominator are coprime, zero is `0/1`.
/// Equality is therefore structural.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Builds the reduced form of `num/den`.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            };
        }
        let g = poly_gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        let lead = den.leading_coeff();
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Self { num, den }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        Self {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    /// The coordinate function `t`.
    pub fn variable() -> Self {
        Self::from_poly(Polynomial::variable())
    }

    pub fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Some(c) when the function is the constant c.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.num.degree() == 0 && self.den.is_one() {
            Some(self.num.coeff(0))
        } else if self.is_zero() {
            Some(Rational::zero())
        } else {
            None
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self::reduced(self.num.add(&rhs.num), self.den.clone());
        }
        let num = self
            .num
            .mul(&rhs.den)
            .add(&rhs.num.mul(&self.den));
        Self::reduced(num, self.den.mul(&rhs.den))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::reduced(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::reduced(self.num.scale(c), self.den.clone())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Evaluates at `x`; the value is defined exactly when the reduced
    /// denominator does not vanish there.
    pub fn eval_at(&self, x: &Rational) -> Result<Rational> {
        let den = self.den.eval(x);
        if den.is_zero() {
            return Err(Error::PoleAtEvaluationPoint(format_rational(x)));
        }
        Ok(self.num.eval(x) / den)
    }

    pub fn has_pole_at(&self, x: &Rational) -> bool {
        self.den.eval(x).is_zero()
    }

    /// Substitution `self(arg)` for a non-constant rational argument.
    pub fn compose(&self, arg: &Self) -> Result<Self> {
        let num = eval_poly_at_ratfun(&self.num, arg);
        let den = eval_poly_at_ratfun(&self.den, arg);
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        num.div(&den)
    }

    pub fn display_with_var(&self, var: &str) -> String {
        if self.den.is_one() {
            return self.num.display_with_var(var);
        }
        format!(
            "({})/({})",
            self.num.display_with_var(var),
            self.den.display_with_var(var)
        )
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with_var("u"))
    }
}

impl std::ops::Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: Self) -> Self {
        RationalFunction::add(&self, &rhs)
    }
}

impl std::ops::Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: Self) -> Self {
        RationalFunction::mul(&self, &rhs)
    }
}

impl num_traits::Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
}

impl num_traits::One for RationalFunction {
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_one(&self) -> bool {
        RationalFunction::is_one(self)
    }
}

/// Horner evaluation of a polynomial at a rational-function argument.
pub fn eval_poly_at_ratfun(p: &Polynomial, arg: &RationalFunction) -> RationalFunction {
    let mut acc = RationalFunction::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(arg).add(&RationalFunction::constant(c.clone()));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};

    fn poly(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn cancellation_is_forced() {
        // (t^2 - 1)/(t - 1) reduces to t + 1
        let f = RationalFunction::new(poly(&[-1, 0, 1]), poly(&[-1, 1])).unwrap();
        assert_eq!(f, RationalFunction::from_poly(poly(&[1, 1])));
    }

    #[test]
    fn zero_numerator_and_constant_ratio() {
        let z = RationalFunction::new(Polynomial::zero(), poly(&[7, 0, 0, 1])).unwrap();
        assert_eq!(z, RationalFunction::zero());
        // (2t + 2)/(4t + 4) = 1/2
        let half = RationalFunction::new(poly(&[2, 2]), poly(&[4, 4])).unwrap();
        assert_eq!(half, RationalFunction::constant(rat(1, 2)));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(
            RationalFunction::new(poly(&[1]), Polynomial::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn evaluation_and_poles() {
        // (t + 1)/(t - 1)
        let f = RationalFunction::new(poly(&[1, 1]), poly(&[-1, 1])).unwrap();
        assert_eq!(f.eval_at(&rat_int(3)).unwrap(), rat_int(2));
        assert!(matches!(
            f.eval_at(&rat_int(1)),
            Err(Error::PoleAtEvaluationPoint(p)) if p == "1/1"
        ));
        // reduction removes the apparent pole of (t^2-1)/(t-1) at t = 1
        let g = RationalFunction::new(poly(&[-1, 0, 1]), poly(&[-1, 1])).unwrap();
        assert_eq!(g.eval_at(&rat_int(1)).unwrap(), rat_int(2));
    }

    #[test]
    fn normalize_is_idempotent() {
        let f = RationalFunction::new(poly(&[2, 4, 2]), poly(&[0, 6])).unwrap();
        let again = RationalFunction::new(f.numerator().clone(), f.denominator().clone()).unwrap();
        assert_eq!(f, again);
    }

    #[test]
    fn compose_with_reciprocal_argument() {
        // f = (t + 1)/(t - 1), f(1/t) = (1 + t)/(1 - t)
        let f = RationalFunction::new(poly(&[1, 1]), poly(&[-1, 1])).unwrap();
        let inv_t = RationalFunction::new(Polynomial::one(), Polynomial::variable()).unwrap();
        let g = f.compose(&inv_t).unwrap();
        let expected = RationalFunction::new(poly(&[1, 1]), poly(&[1, -1])).unwrap();
        assert_eq!(g, expected);
    }
}
