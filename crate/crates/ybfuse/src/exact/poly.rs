use super::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Univariate polynomial over [`Rational`], coefficients in ascending degree
/// order. The zero polynomial is the empty coefficient vector; otherwise the
/// leading coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `t`.
    pub fn variable() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `a*t + b`.
    pub fn affine(a: Rational, b: Rational) -> Self {
        Self::from_coeffs(vec![b, a])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lead = self.leading_coeff();
        self.scale(&lead.recip())
    }

    /// Quotient and remainder of division by a nonzero polynomial.
    pub fn div_rem(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "polynomial division by zero");
        if self.degree() < div.degree() || self.is_zero() {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let dn = div.coeffs.len();
        let lead_inv = div.leading_coeff().recip();
        let mut quo = vec![Rational::zero(); rem.len() - dn + 1];
        for k in (0..quo.len()).rev() {
            let c = &rem[k + dn - 1] * &lead_inv;
            if !c.is_zero() {
                for (j, d) in div.coeffs.iter().enumerate() {
                    let t = &c * d;
                    rem[k + j] -= t;
                }
            }
            quo[k] = c;
        }
        (Self::from_coeffs(quo), Self::from_coeffs(rem))
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn div_exact(&self, div: &Self) -> Self {
        let (q, r) = self.div_rem(div);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation at a polynomial argument, `self(arg)`.
    pub fn compose(&self, arg: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(arg).add(&Self::constant(c.clone()));
        }
        acc
    }

    pub fn display_with_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let coeff_str = if mag.is_one() && k > 0 {
                String::new()
            } else if mag.is_integer() {
                mag.numer().to_string()
            } else {
                format!("({}/{})", mag.numer(), mag.denom())
            };
            let var_str = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let sep = if coeff_str.is_empty() || var_str.is_empty() {
                ""
            } else {
                "*"
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            parts.push((sign, format!("{coeff_str}{sep}{var_str}")));
        }
        let mut out = String::new();
        for (i, (sign, body)) in parts.iter().enumerate() {
            if i == 0 {
                if *sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(if *sign == "-" { " - " } else { " + " });
            }
            out.push_str(body);
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with_var("t"))
    }
}

impl std::ops::Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Self) -> Self {
        Polynomial::add(&self, &rhs)
    }
}

impl std::ops::Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Self) -> Self {
        Polynomial::mul(&self, &rhs)
    }
}

impl num_traits::Zero for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
}

impl num_traits::One for Polynomial {
    fn one() -> Self {
        Polynomial::one()
    }
    fn is_one(&self) -> bool {
        Polynomial::is_one(self)
    }
}

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
///
/// Works on the integer primitive parts with a primitive pseudo-remainder
/// sequence, which keeps coefficient growth polynomial instead of the
/// exponential blowup of naive fraction arithmetic.
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let mut r0 = primitive_integer_coeffs(a);
    let mut r1 = primitive_integer_coeffs(b);
    if r0.len() < r1.len() {
        std::mem::swap(&mut r0, &mut r1);
    }
    while !r1.is_empty() {
        let rem = pseudo_rem(&r0, &r1);
        r0 = r1;
        r1 = primitive_part(rem);
    }
    Polynomial::from_coeffs(
        r0.into_iter()
            .map(Rational::from_integer)
            .collect::<Vec<_>>(),
    )
    .monic()
}

/// Clears denominators and divides out the integer content.
fn primitive_integer_coeffs(p: &Polynomial) -> Vec<BigInt> {
    let lcm = super::denominator_lcm(p.coeffs());
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    primitive_part(ints)
}

fn primitive_part(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(c);
    }
    if v.last().unwrap().is_negative() {
        content = -content;
    }
    for c in &mut v {
        *c = &*c / &content;
    }
    v
}

/// Pseudo-remainder of integer polynomials: `lc(b)^(da-db+1) * a  mod  b`.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lead_b = b.last().unwrap().clone();
    let mut rem = a.to_vec();
    while rem.len() > db && !rem.is_empty() {
        let lead_r = rem.last().unwrap().clone();
        if lead_r.is_zero() {
            rem.pop();
            continue;
        }
        let shift = rem.len() - 1 - db;
        for c in rem.iter_mut() {
            *c = &*c * &lead_b;
        }
        for j in 0..=db {
            let t = &lead_r * &b[j];
            rem[shift + j] -= t;
        }
        while rem.last().is_some_and(|c| c.is_zero()) {
            rem.pop();
        }
    }
    rem
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};

    fn poly(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn gcd_common_factor() {
        // t^2 - 1 and t - 1 share the factor t - 1
        assert_eq!(poly_gcd(&poly(&[-1, 0, 1]), &poly(&[-1, 1])), poly(&[-1, 1]));
    }

    #[test]
    fn gcd_with_zero_is_monic_argument() {
        let p = poly(&[2, 4]);
        assert_eq!(poly_gcd(&p, &Polynomial::zero()), poly(&[2, 4]).monic());
        assert_eq!(poly_gcd(&Polynomial::zero(), &p), p.monic());
        assert_eq!(
            poly_gcd(&Polynomial::zero(), &Polynomial::zero()),
            Polynomial::zero()
        );
    }

    #[test]
    fn gcd_coprime() {
        // dividing t^2 + 1 by t + 2 leaves the unit remainder 5
        assert_eq!(poly_gcd(&poly(&[1, 0, 1]), &poly(&[2, 1])), Polynomial::one());
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = poly(&[3, -2, 0, 7, 1]);
        let b = poly(&[1, 2, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn compose_affine() {
        // p(t) = t^2, p(t + 1) = t^2 + 2t + 1
        let p = poly(&[0, 0, 1]);
        let shifted = p.compose(&Polynomial::affine(rat_int(1), rat_int(1)));
        assert_eq!(shifted, poly(&[1, 2, 1]));
    }

    #[test]
    fn display_style() {
        let p = Polynomial::from_coeffs(vec![rat_int(2), rat_int(-1), rat_int(1)]);
        assert_eq!(p.display_with_var("u"), "u^2 - u + 2");
        assert_eq!(poly(&[0, 1]).display_with_var("u"), "u");
        assert_eq!(
            Polynomial::from_coeffs(vec![rat(1, 2)]).display_with_var("u"),
            "(1/2)"
        );
    }
}
