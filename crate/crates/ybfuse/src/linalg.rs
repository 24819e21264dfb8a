//! Dense exact matrices over a field scalar (rationals or rational
//! functions), tensor-product machinery, and exact Gaussian elimination.
//!
//! Matrices are immutable values; all sizes here are desk scale, so the
//! representation is a plain row-major vector.

use crate::error::{Error, Result};
use crate::exact::{Polynomial, Rational, RationalFunction};
use crate::perm::Permutation;

use std::fmt::Debug;

/// Operations needed by the matrix code, on top of the standard additive
/// and multiplicative units. The binary operations take references so large
/// scalars are never cloned implicitly.
pub trait Scalar:
    Clone + PartialEq + Debug + Send + Sync + num_traits::Zero + num_traits::One
{
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn inv_ref(&self) -> Option<Self>;
}

impl Scalar for Rational {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inv_ref(&self) -> Option<Self> {
        if num_traits::Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Scalar for RationalFunction {
    fn add_ref(&self, rhs: &Self) -> Self {
        RationalFunction::add(self, rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        RationalFunction::sub(self, rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        RationalFunction::mul(self, rhs)
    }
    fn neg_ref(&self) -> Self {
        RationalFunction::neg(self)
    }
    fn inv_ref(&self) -> Option<Self> {
        RationalFunction::inv(self).ok()
    }
}

// Polynomials are only a ring; `inv` is defined for constants. Used by the
// shared-denominator evaluation path, which never divides.
impl Scalar for Polynomial {
    fn add_ref(&self, rhs: &Self) -> Self {
        Polynomial::add(self, rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        Polynomial::sub(self, rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        Polynomial::mul(self, rhs)
    }
    fn neg_ref(&self) -> Self {
        Polynomial::neg(self)
    }
    fn inv_ref(&self) -> Option<Self> {
        if self.degree() == 0 && !Polynomial::is_zero(self) {
            Some(Polynomial::constant(self.coeff(0).recip()))
        } else {
            None
        }
    }
}

/// Dense matrix, entries row major.
#[derive(Clone, PartialEq, Debug)]
pub struct ExactMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Scalar> ExactMatrix<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.entries[i * n + i] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows_data: Vec<Vec<T>>) -> Result<Self> {
        let rows = rows_data.len();
        let cols = rows_data.first().map_or(0, |r| r.len());
        if rows_data.iter().any(|r| r.len() != cols) {
            return Err(Error::SizeMismatch("ragged rows".into()));
        }
        Ok(Self {
            rows,
            cols,
            entries: rows_data.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> ExactMatrix<U> {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.sub_ref(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a.mul_ref(c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product size mismatch");
        let mut out = Self::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.entries[idx] = out.entries[idx].add_ref(&a.mul_ref(b));
                }
            }
        }
        out
    }

    /// Kronecker product with row-major index convention
    /// `(i_a, i_b) -> i_a * rows_b + i_b`.
    pub fn kron(&self, rhs: &Self) -> Self {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut out = Self::zero(rows, cols);
        for ra in 0..self.rows {
            for ca in 0..self.cols {
                let a = self.at(ra, ca);
                if a.is_zero() {
                    continue;
                }
                for rb in 0..rhs.rows {
                    for cb in 0..rhs.cols {
                        let b = rhs.at(rb, cb);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(ra * rhs.rows + rb, ca * rhs.cols + cb, a.mul_ref(b));
                    }
                }
            }
        }
        out
    }

    /// Nonzero entries per row, `(column, value)`. Small operators only.
    fn sparse_rows(&self) -> Vec<Vec<(usize, T)>> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(c, v)| (c, v.clone()))
                    .collect()
            })
            .collect()
    }
}

/// A tensor power `V^{(x) sites}` with `dim V = local_dim`; operators built
/// in this context act on a space of dimension `local_dim^sites`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TensorContext {
    pub sites: usize,
    pub local_dim: usize,
}

impl TensorContext {
    pub fn new(sites: usize, local_dim: usize) -> Self {
        Self { sites, local_dim }
    }

    pub fn dim(&self) -> usize {
        self.local_dim.pow(self.sites as u32)
    }

    /// Digits of a basis index, first tensor factor most significant.
    pub fn digits(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.sites];
        for k in (0..self.sites).rev() {
            out[k] = index % self.local_dim;
            index /= self.local_dim;
        }
        out
    }

    pub fn index(&self, digits: &[usize]) -> usize {
        digits.iter().fold(0, |acc, &d| acc * self.local_dim + d)
    }

    /// Strides such that replacing digit `k` by `v` adds `v * stride(k)`.
    fn stride(&self, k: usize) -> usize {
        self.local_dim.pow((self.sites - 1 - k) as u32)
    }
}

/// The operator permuting tensor factors: basis tensor `x_1 (x) .. (x) x_n`
/// maps to `x_{pi(1)} (x) .. (x) x_{pi(n)}`.
pub fn perm_operator<T: Scalar>(ctx: &TensorContext, pi: &Permutation) -> ExactMatrix<T> {
    assert_eq!(ctx.sites, pi.n(), "permutation size must match site count");
    let dim = ctx.dim();
    let mut out = ExactMatrix::zero(dim, dim);
    for col in 0..dim {
        let digits = ctx.digits(col);
        let image: Vec<usize> = (1..=ctx.sites).map(|k| digits[pi.apply(k) - 1]).collect();
        out.set(ctx.index(&image), col, T::one());
    }
    out
}

/// Embeds a two-site operator so that it acts as `op` on the ordered pair of
/// copies `(i, j)` (1-based) and trivially elsewhere. Equivalent to
/// conjugating the adjacent embedding by permutation operators; for adjacent
/// `(i, i+1)` it is the plain Kronecker sandwich.
pub fn embed_pair<T: Scalar>(
    ctx: &TensorContext,
    op: &ExactMatrix<T>,
    i: usize,
    j: usize,
) -> Result<ExactMatrix<T>> {
    check_sites(ctx, i, j)?;
    let d = ctx.local_dim;
    assert_eq!(op.rows(), d * d, "operator must act on two copies");
    let dim = ctx.dim();
    let mut out = ExactMatrix::zero(dim, dim);
    for col in 0..dim {
        let digits = ctx.digits(col);
        let a = digits[i - 1];
        let b = digits[j - 1];
        let op_col = a * d + b;
        for x in 0..d {
            for y in 0..d {
                let v = op.at(x * d + y, op_col);
                if v.is_zero() {
                    continue;
                }
                let mut image = digits.clone();
                image[i - 1] = x;
                image[j - 1] = y;
                out.set(ctx.index(&image), col, v.clone());
            }
        }
    }
    Ok(out)
}

fn check_sites(ctx: &TensorContext, i: usize, j: usize) -> Result<()> {
    if i == j || i < 1 || j < 1 || i > ctx.sites || j > ctx.sites {
        return Err(Error::InvalidSites {
            i,
            j,
            n: ctx.sites,
        });
    }
    Ok(())
}

/// `m * embed(op, i, j)` without forming the embedded operator. The column
/// version of the two-site action; `op` is indexed as in [`embed_pair`].
pub fn mul_embedded_right<T: Scalar>(
    ctx: &TensorContext,
    m: &ExactMatrix<T>,
    op: &ExactMatrix<T>,
    i: usize,
    j: usize,
) -> Result<ExactMatrix<T>> {
    check_sites(ctx, i, j)?;
    let d = ctx.local_dim;
    let dim = ctx.dim();
    assert_eq!(m.cols(), dim);
    // nonzero entries per operator column
    let op_cols: Vec<Vec<(usize, T)>> = (0..d * d)
        .map(|c| {
            (0..d * d)
                .filter(|&r| !op.at(r, c).is_zero())
                .map(|r| (r, op.at(r, c).clone()))
                .collect()
        })
        .collect();
    let si = ctx.stride(i - 1);
    let sj = ctx.stride(j - 1);
    let mut out: ExactMatrix<T> = ExactMatrix::zero(m.rows(), dim);
    // out[r][c] = sum_{ab} m[r][c with (a,b) at sites i,j] * op[ab][(c_i, c_j)]
    for col in 0..dim {
        let digits = ctx.digits(col);
        let (x, y) = (digits[i - 1], digits[j - 1]);
        let base = col - x * si - y * sj;
        for &(op_row, ref v) in &op_cols[x * d + y] {
            let src = base + (op_row / d) * si + (op_row % d) * sj;
            for r in 0..m.rows() {
                let s = m.at(r, src);
                if s.is_zero() {
                    continue;
                }
                let idx = r * dim + col;
                out.entries[idx] = out.entries[idx].add_ref(&s.mul_ref(v));
            }
        }
    }
    Ok(out)
}

/// `embed(op, i, j) * m` without forming the embedded operator.
pub fn mul_embedded_left<T: Scalar>(
    ctx: &TensorContext,
    op: &ExactMatrix<T>,
    i: usize,
    j: usize,
    m: &ExactMatrix<T>,
) -> Result<ExactMatrix<T>> {
    check_sites(ctx, i, j)?;
    let d = ctx.local_dim;
    let dim = ctx.dim();
    assert_eq!(m.rows(), dim);
    let op_rows = op.sparse_rows();
    let si = ctx.stride(i - 1);
    let sj = ctx.stride(j - 1);
    let cols = m.cols();
    let mut entries = vec![T::zero(); dim * cols];
    for row in 0..dim {
        let digits = ctx.digits(row);
        let (x, y) = (digits[i - 1], digits[j - 1]);
        let base = row - x * si - y * sj;
        let out_row = &mut entries[row * cols..(row + 1) * cols];
        for &(op_col, ref v) in &op_rows[x * d + y] {
            let src = base + (op_col / d) * si + (op_col % d) * sj;
            for (o, s) in out_row.iter_mut().zip(m.row(src)) {
                if !s.is_zero() {
                    *o = o.add_ref(&s.mul_ref(v));
                }
            }
        }
    }
    Ok(ExactMatrix {
        rows: dim,
        cols,
        entries,
    })
}

/// Result of a column-space computation: the pivot columns of the original
/// matrix, in their original order.
#[derive(Clone, Debug)]
pub struct ColumnSpace {
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
    pub basis: ExactMatrix<Rational>,
}

/// Exact Gaussian elimination; returns `(rank, pivot column indices)`.
fn row_echelon<T: Scalar>(m: &mut ExactMatrix<T>) -> (usize, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut pivot_row = 0;
    for col in 0..m.cols() {
        let Some(r) = (pivot_row..m.rows()).find(|&r| !m.at(r, col).is_zero()) else {
            continue;
        };
        if r != pivot_row {
            for c in 0..m.cols() {
                let a = m.at(r, c).clone();
                let b = m.at(pivot_row, c).clone();
                m.set(r, c, b);
                m.set(pivot_row, c, a);
            }
        }
        let inv = m
            .at(pivot_row, col)
            .inv_ref()
            .expect("nonzero field element must invert");
        for r2 in (pivot_row + 1)..m.rows() {
            if m.at(r2, col).is_zero() {
                continue;
            }
            let factor = m.at(r2, col).mul_ref(&inv);
            for c in col..m.cols() {
                let v = m.at(r2, c).sub_ref(&factor.mul_ref(m.at(pivot_row, c)));
                m.set(r2, c, v);
            }
        }
        pivots.push(col);
        pivot_row += 1;
        if pivot_row == m.rows() {
            break;
        }
    }
    (pivots.len(), pivots)
}

pub fn rank<T: Scalar>(m: &ExactMatrix<T>) -> usize {
    let mut work = m.clone();
    row_echelon(&mut work).0
}

/// Rank and the pivot columns of `m`, returned as a basis of the column
/// space consisting of the pivot columns themselves.
pub fn column_space_basis(m: &ExactMatrix<Rational>) -> ColumnSpace {
    let mut work = m.clone();
    let (rank, pivot_columns) = row_echelon(&mut work);
    let basis = ExactMatrix::from_fn(m.rows(), rank, |r, k| m.at(r, pivot_columns[k]).clone());
    ColumnSpace {
        rank,
        pivot_columns,
        basis,
    }
}

/// Pivot rows of a full-column-rank matrix: `l` original row indices whose
/// restriction of `b` is invertible.
fn pivot_rows(b: &ExactMatrix<Rational>) -> Result<Vec<usize>> {
    // pivot columns of the transpose are pivot rows of b
    let t = ExactMatrix::from_fn(b.cols(), b.rows(), |r, c| b.at(c, r).clone());
    let mut work = t.clone();
    let (rank, cols) = row_echelon(&mut work);
    if rank < b.cols() {
        return Err(Error::DegenerateBasis {
            rank,
            cols: b.cols(),
        });
    }
    Ok(cols)
}

/// Inverts a square matrix by Gauss-Jordan elimination.
pub fn invert<T: Scalar>(m: &ExactMatrix<T>) -> Result<ExactMatrix<T>> {
    assert!(m.is_square());
    let n = m.rows();
    let mut a = m.clone();
    let mut inv: ExactMatrix<T> = ExactMatrix::identity(n);
    for col in 0..n {
        let Some(r) = (col..n).find(|&r| !a.at(r, col).is_zero()) else {
            return Err(Error::DegenerateBasis {
                rank: col,
                cols: n,
            });
        };
        if r != col {
            for c in 0..n {
                let (x, y) = (a.at(r, c).clone(), a.at(col, c).clone());
                a.set(r, c, y);
                a.set(col, c, x);
                let (x, y) = (inv.at(r, c).clone(), inv.at(col, c).clone());
                inv.set(r, c, y);
                inv.set(col, c, x);
            }
        }
        let p = a.at(col, col).inv_ref().expect("pivot must invert");
        for c in 0..n {
            a.set(col, c, a.at(col, c).mul_ref(&p));
            inv.set(col, c, inv.at(col, c).mul_ref(&p));
        }
        for r2 in 0..n {
            if r2 == col || a.at(r2, col).is_zero() {
                continue;
            }
            let f = a.at(r2, col).clone();
            for c in 0..n {
                let v = a.at(r2, c).sub_ref(&f.mul_ref(a.at(col, c)));
                a.set(r2, c, v);
                let v = inv.at(r2, c).sub_ref(&f.mul_ref(inv.at(col, c)));
                inv.set(r2, c, v);
            }
        }
    }
    Ok(inv)
}

/// An exact left inverse of a full-column-rank rational matrix, built from
/// the inverse of its pivot-row submatrix padded with zeros.
pub fn left_inverse(b: &ExactMatrix<Rational>) -> Result<ExactMatrix<Rational>> {
    let rows = pivot_rows(b)?;
    let square = ExactMatrix::from_fn(b.cols(), b.cols(), |r, c| b.at(rows[r], c).clone());
    let sq_inv = invert(&square)?;
    let mut l = ExactMatrix::zero(b.cols(), b.rows());
    for (k, &orig_row) in rows.iter().enumerate() {
        for r in 0..b.cols() {
            l.set(r, orig_row, sq_inv.at(r, k).clone());
        }
    }
    Ok(l)
}

/// Restriction of a parametric operator to the span of a constant basis.
///
/// Returns `L * m * B` where `L` is an exact left inverse of `B`, after
/// verifying `B * (L * m * B) = m * B` as rational functions, which certifies
/// that the span is actually invariant.
pub fn restrict_to_subspace(
    m: &ExactMatrix<RationalFunction>,
    basis: &ExactMatrix<Rational>,
) -> Result<ExactMatrix<RationalFunction>> {
    let l = left_inverse(basis)?;
    let b_f = basis.map(|c| RationalFunction::constant(c.clone()));
    let l_f = l.map(|c| RationalFunction::constant(c.clone()));
    let mb = m.mul(&b_f);
    let restricted = l_f.mul(&mb);
    let reconstructed = b_f.mul(&restricted);
    if reconstructed != mb {
        let col = (0..mb.cols())
            .find(|&c| (0..mb.rows()).any(|r| reconstructed.at(r, c) != mb.at(r, c)))
            .unwrap_or(0);
        return Err(Error::SubspaceNotInvariant { col });
    }
    Ok(restricted)
}

/// Certified rank of a rational-function matrix: evaluate at two points that
/// avoid every entry pole, and fall back to elimination over the function
/// field when the two evaluation ranks disagree.
pub fn rank_ratfun_certified(m: &ExactMatrix<RationalFunction>) -> usize {
    let mut points = Vec::new();
    let mut x = 1i64;
    while points.len() < 2 {
        let cand = crate::exact::rat_int(x);
        if m.entries().iter().all(|e| !e.has_pole_at(&cand)) {
            points.push(cand);
        }
        x += 1;
    }
    let eval = |p: &Rational| -> ExactMatrix<Rational> {
        m.map(|e| e.eval_at(p).expect("pole-free point"))
    };
    let r0 = rank(&eval(&points[0]));
    let r1 = rank(&eval(&points[1]));
    if r0 == r1 {
        r0
    } else {
        rank(m)
    }
}
