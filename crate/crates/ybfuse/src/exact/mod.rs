//! Exact scalar arithmetic: arbitrary-precision rationals, univariate
//! polynomials over them, and reduced rational functions.
//!
//! Every scalar in the crate bottoms out here; there is no floating point
//! anywhere.

mod poly;
mod ratfun;

pub use poly::{poly_gcd, Polynomial};
pub use ratfun::RationalFunction;

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator (the `Ratio` constructor maintains both).
pub type Rational = num_rational::BigRational;

/// `n/d` as a [`Rational`]. Panics on `d == 0`; intended for literals.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `n` as a [`Rational`].
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Integer power of a rational, with negative exponents allowed.
pub fn rat_pow(base: &Rational, exp: i64) -> Result<Rational> {
    if exp == 0 {
        return Ok(Rational::one());
    }
    if base.is_zero() {
        if exp < 0 {
            return Err(Error::DivisionByZero);
        }
        return Ok(Rational::zero());
    }
    let positive = base.pow(exp.unsigned_abs() as i32);
    if exp < 0 {
        Ok(positive.recip())
    } else {
        Ok(positive)
    }
}

/// Parses `"p/q"` or `"p"`, accepting an optional leading sign.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.parse::<BigInt>()
            .map_err(|_| Error::Invalid(format!("not an integer: {t:?}")))
    };
    match s.split_once('/') {
        Some((num, den)) => {
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(num, den))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

/// Canonical `"p/q"` form in lowest terms, denominator always explicit.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Least common multiple of the denominators of a slice of rationals.
pub fn denominator_lcm(values: &[Rational]) -> BigInt {
    let mut acc = BigInt::one();
    for v in values {
        let d = v.denom();
        let g = num_integer::Integer::gcd(&acc, d);
        acc = &acc / &g * d;
    }
    acc.abs()
}
