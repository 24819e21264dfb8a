//! Reference matrices for the worked examples, stored as data files with
//! symbolic entries, plus the machinery that rebuilds each matrix through
//! the library and diffs it against its reference.
//!
//! Entry expressions are written in a small language over `+ - * / ^` with
//! the spectral variable (`u` or `a`), the deformation parameter `q`, and
//! the shorthands `bkt(n)` for `(q^n - q^-n)/(q - q^-1)` and `ang(n)` for
//! `(q^n*a - q^-n)/(q - q^-1)`. References are data, independent of the
//! construction code they check.

use crate::error::{Error, Result};
use crate::exact::{rat_pow, Polynomial, Rational, RationalFunction};
use crate::fusion::{fused_operator, restrict_fused};
use crate::kernels::{r_matrix, KernelSpec};
use crate::linalg::{invert, ExactMatrix, TensorContext};
use num_traits::One;
use serde_json::Value;

// ---------------------------------------------------------------------------
// expression language

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(i64),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&ch) = chars.peek() {
        match ch {
            ' ' | '\t' | '\n' => {
                chars.next();
            }
            '0'..='9' => {
                let mut n = 0i64;
                while let Some(&d) = chars.peek() {
                    if let Some(v) = d.to_digit(10) {
                        n = n * 10 + v as i64;
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Int(n));
            }
            'a'..='z' | 'A'..='Z' => {
                let mut name = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() {
                        name.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Name(name));
            }
            '+' => {
                chars.next();
                out.push(Token::Plus);
            }
            '-' => {
                chars.next();
                out.push(Token::Minus);
            }
            '*' => {
                chars.next();
                out.push(Token::Star);
            }
            '/' => {
                chars.next();
                out.push(Token::Slash);
            }
            '^' => {
                chars.next();
                out.push(Token::Caret);
            }
            '(' => {
                chars.next();
                out.push(Token::LParen);
            }
            ')' => {
                chars.next();
                out.push(Token::RParen);
            }
            other => {
                return Err(Error::Invalid(format!(
                    "unexpected character {other:?} in expression"
                )))
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    q: &'a Rational,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Token) -> Result<()> {
        match self.next() {
            Some(found) if found == t => Ok(()),
            other => Err(Error::Invalid(format!("expected {t:?}, found {other:?}"))),
        }
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    acc = acc.add(&self.term()?);
                }
                Some(Token::Minus) => {
                    self.next();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.next();
                    acc = acc.mul(&self.unary()?);
                }
                Some(Token::Slash) => {
                    self.next();
                    acc = acc.div(&self.unary()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        if matches!(self.peek(), Some(Token::Minus)) {
            self.next();
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.next();
            let exp = self.signed_int()?;
            return ratfun_pow(&base, exp);
        }
        Ok(base)
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = if matches!(self.peek(), Some(Token::Minus)) {
            self.next();
            true
        } else {
            false
        };
        match self.next() {
            Some(Token::Int(n)) => Ok(if neg { -n } else { n }),
            other => Err(Error::Invalid(format!("expected integer, found {other:?}"))),
        }
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        match self.next() {
            Some(Token::Int(n)) => Ok(RationalFunction::constant(crate::exact::rat_int(n))),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            Some(Token::Name(name)) => match name.as_str() {
                "q" => Ok(RationalFunction::constant(self.q.clone())),
                "a" | "u" => Ok(RationalFunction::variable()),
                "bkt" => {
                    self.expect(Token::LParen)?;
                    let n = self.signed_int()?;
                    self.expect(Token::RParen)?;
                    let num = rat_pow(self.q, n)? - rat_pow(self.q, -n)?;
                    let den = self.q - self.q.recip();
                    Ok(RationalFunction::constant(num / den))
                }
                "ang" => {
                    self.expect(Token::LParen)?;
                    let n = self.signed_int()?;
                    self.expect(Token::RParen)?;
                    let den = self.q - self.q.recip();
                    let lead = rat_pow(self.q, n)? / &den;
                    let constant = -rat_pow(self.q, -n)? / den;
                    Ok(RationalFunction::from_poly(Polynomial::affine(
                        lead, constant,
                    )))
                }
                other => Err(Error::Invalid(format!("unknown name {other:?}"))),
            },
            other => Err(Error::Invalid(format!("unexpected token {other:?}"))),
        }
    }
}

fn ratfun_pow(base: &RationalFunction, exp: i64) -> Result<RationalFunction> {
    if exp == 0 {
        return Ok(RationalFunction::one());
    }
    let positive = {
        let mut acc = RationalFunction::one();
        for _ in 0..exp.unsigned_abs() {
            acc = acc.mul(base);
        }
        acc
    };
    if exp < 0 {
        positive.inv()
    } else {
        Ok(positive)
    }
}

/// Parses one entry expression at a fixed rational `q`.
pub fn parse_entry(text: &str, q: &Rational) -> Result<RationalFunction> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens: &tokens,
        pos: 0,
        q,
    };
    let value = parser.expr()?;
    if parser.pos != tokens.len() {
        return Err(Error::Invalid(format!(
            "trailing tokens in expression {text:?}"
        )));
    }
    Ok(value)
}

// ---------------------------------------------------------------------------
// reference data

const GOLDEN_FILES: &[(&str, &str)] = &[
    ("ex-fus1", include_str!("../goldens/ex_fus1.json")),
    ("ex-fus2", include_str!("../goldens/ex_fus2.json")),
    ("mat-Sn", include_str!("../goldens/mat_sn.json")),
    ("ex-Sn-21a", include_str!("../goldens/ex_sn_21a.json")),
    ("ex-Ra", include_str!("../goldens/ex_ra.json")),
    ("ex-Ra-s", include_str!("../goldens/ex_ra_s.json")),
    ("mat-Hn", include_str!("../goldens/mat_hn.json")),
];

pub fn golden_ids() -> Vec<&'static str> {
    GOLDEN_FILES.iter().map(|(id, _)| *id).collect()
}

/// The reference matrix for an example id, evaluated at the given `q`
/// (ignored by the undeformed examples).
pub fn golden_matrix(id: &str, q: &Rational) -> Result<ExactMatrix<RationalFunction>> {
    let (_, text) = GOLDEN_FILES
        .iter()
        .find(|(gid, _)| *gid == id)
        .ok_or_else(|| Error::Invalid(format!("unknown example id {id:?}")))?;
    let v: Value =
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("bad reference: {e}")))?;
    let rows = v["rows"].as_u64().unwrap() as usize;
    let cols = v["cols"].as_u64().unwrap() as usize;
    let entries = v["entries"].as_array().unwrap();
    if entries.len() != rows * cols {
        return Err(Error::SizeMismatch("reference entry count".into()));
    }
    let parsed: Result<Vec<RationalFunction>> = entries
        .iter()
        .map(|e| {
            parse_entry(
                e.as_str()
                    .ok_or_else(|| Error::Invalid("entry must be a string".into()))?,
                q,
            )
        })
        .collect();
    let parsed = parsed?;
    Ok(ExactMatrix::from_fn(rows, cols, |r, c| {
        parsed[r * cols + c].clone()
    }))
}

// ---------------------------------------------------------------------------
// computed counterparts

fn rats(values: &[i64]) -> Vec<Rational> {
    values.iter().map(|&v| crate::exact::rat_int(v)).collect()
}

/// Basis columns on three two-dimensional copies: symmetric pair block with
/// a trailing free copy, then the antisymmetric pair block.
fn split_pair_basis() -> ExactMatrix<Rational> {
    let ctx = TensorContext::new(3, 2);
    let mut b = ExactMatrix::zero(8, 8);
    let mut set = |col: usize, digits: &[usize], v: i64| {
        let value = crate::exact::rat_int(v);
        b.set(ctx.index(digits), col, value);
    };
    // e11 x e1, (e12 + e21) x e1, e22 x e1, then the same over e2
    set(0, &[0, 0, 0], 1);
    set(1, &[0, 1, 0], 1);
    set(1, &[1, 0, 0], 1);
    set(2, &[1, 1, 0], 1);
    set(3, &[0, 0, 1], 1);
    set(4, &[0, 1, 1], 1);
    set(4, &[1, 0, 1], 1);
    set(5, &[1, 1, 1], 1);
    // (e12 - e21) x e1, (e12 - e21) x e2
    set(6, &[0, 1, 0], 1);
    set(6, &[1, 0, 0], -1);
    set(7, &[0, 1, 1], 1);
    set(7, &[1, 0, 1], -1);
    b
}

/// Symmetric-square basis `e11, e12 + w e21, e22` as columns, with weight 1
/// in the undeformed case and `q` in the deformed one.
fn sym_square_basis(weight: &Rational) -> ExactMatrix<Rational> {
    let mut b = ExactMatrix::zero(4, 3);
    b.set(0, 0, Rational::one());
    b.set(1, 1, Rational::one());
    b.set(2, 1, weight.clone());
    b.set(3, 2, Rational::one());
    b
}

/// The two-column basis of the hook-tableau subspace on three copies:
/// `e1 e2 e1 - e2 e1 e1` and `e1 e2 e2 - e2 e1 e2`.
fn hook_basis() -> ExactMatrix<Rational> {
    let ctx = TensorContext::new(3, 2);
    let mut b = ExactMatrix::zero(8, 2);
    b.set(ctx.index(&[0, 1, 0]), 0, Rational::one());
    b.set(ctx.index(&[1, 0, 0]), 0, -Rational::one());
    b.set(ctx.index(&[0, 1, 1]), 1, Rational::one());
    b.set(ctx.index(&[1, 0, 1]), 1, -Rational::one());
    b
}

fn row_tableau(n: usize) -> crate::combinatorics::StandardTableau {
    crate::combinatorics::StandardTableau::row(n)
}

fn hook_tableau() -> crate::combinatorics::StandardTableau {
    crate::combinatorics::StandardTableau::new(vec![vec![1, 3], vec![2]]).expect("standard")
}

/// Rebuilds the matrix for an example id through the library.
pub fn computed_matrix(id: &str, q: &Rational) -> Result<ExactMatrix<RationalFunction>> {
    match id {
        "ex-fus1" | "ex-fus2" => {
            let k = KernelSpec::yang(2);
            let c = if id == "ex-fus1" {
                rats(&[0, 1])
            } else {
                rats(&[0, -1])
            };
            let op = fused_operator(&k, &c, &rats(&[0]))?;
            let basis = split_pair_basis();
            let basis_inv = invert(&basis)?;
            let to_f = |m: &ExactMatrix<Rational>| m.map(|v| RationalFunction::constant(v.clone()));
            Ok(to_f(&basis_inv).mul(&op.matrix).mul(&to_f(&basis)))
        }
        "mat-Sn" => {
            let k = KernelSpec::yang(2);
            let b = sym_square_basis(&Rational::one());
            restrict_fused(&k, &row_tableau(2), &row_tableau(2), Some((&b, &b)))
        }
        "ex-Sn-21a" => {
            let k = KernelSpec::yang(2);
            let b1 = hook_basis();
            let b2 = ExactMatrix::identity(2);
            restrict_fused(&k, &hook_tableau(), &row_tableau(1), Some((&b1, &b2)))
        }
        "ex-Ra" => Ok(r_matrix(&KernelSpec::hecke(2, q.clone())?)),
        "ex-Ra-s" => Ok(r_matrix(&KernelSpec::super_hecke(1, 1, q.clone())?)),
        "mat-Hn" => {
            let k = KernelSpec::hecke(2, q.clone())?;
            let b = sym_square_basis(q);
            restrict_fused(&k, &row_tableau(2), &row_tableau(2), Some((&b, &b)))
        }
        other => Err(Error::Invalid(format!("unknown example id {other:?}"))),
    }
}

/// Result of one reproduction run.
pub struct Reproduction {
    pub id: String,
    pub computed: ExactMatrix<RationalFunction>,
    pub golden: ExactMatrix<RationalFunction>,
    pub first_mismatch: Option<(usize, usize)>,
}

impl Reproduction {
    pub fn matches(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Builds both the computed and the reference matrix and compares them
/// entry by entry.
pub fn reproduce(id: &str, q: &Rational) -> Result<Reproduction> {
    let computed = computed_matrix(id, q)?;
    let golden = golden_matrix(id, q)?;
    if (computed.rows(), computed.cols()) != (golden.rows(), golden.cols()) {
        return Err(Error::SizeMismatch(format!(
            "computed {}x{} vs reference {}x{}",
            computed.rows(),
            computed.cols(),
            golden.rows(),
            golden.cols()
        )));
    }
    let mut first_mismatch = None;
    'outer: for r in 0..computed.rows() {
        for c in 0..computed.cols() {
            if computed.at(r, c) != golden.at(r, c) {
                first_mismatch = Some((r, c));
                break 'outer;
            }
        }
    }
    Ok(Reproduction {
        id: id.to_string(),
        computed,
        golden,
        first_mismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};

    #[test]
    fn expression_parsing() {
        let q = rat_int(2);
        let f = parse_entry("(u-1)/(u+1)", &q).unwrap();
        assert_eq!(f.eval_at(&rat_int(3)).unwrap(), rat(1, 2));

        let g = parse_entry("-1/(u*(u+1))", &q).unwrap();
        assert_eq!(g.eval_at(&rat_int(1)).unwrap(), rat(-1, 2));

        // bkt(2) = q + 1/q = 5/2 at q = 2
        let b = parse_entry("bkt(2)", &q).unwrap();
        assert_eq!(b, RationalFunction::constant(rat(5, 2)));

        // ang(0) = (a - 1)/(q - 1/q)
        let a = parse_entry("ang(0)", &q).unwrap();
        assert_eq!(a.eval_at(&rat_int(4)).unwrap(), rat_int(2));

        let p = parse_entry("q^-2", &q).unwrap();
        assert_eq!(p, RationalFunction::constant(rat(1, 4)));

        assert!(parse_entry("nope(3)", &q).is_err());
        assert!(parse_entry("1 +", &q).is_err());
        assert!(parse_entry("(1", &q).is_err());
    }

    #[test]
    fn golden_tables_load() {
        let q = rat_int(2);
        for id in golden_ids() {
            let g = golden_matrix(id, &q).unwrap();
            assert!(g.rows() == g.cols());
        }
    }
}
