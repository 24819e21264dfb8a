//! Fused solutions built from a base kernel: ordered products of shifted
//! two-site factors, the pairwise-product operators whose images are the
//! invariant subspaces, tableau-driven consecutive evaluation, restriction
//! to invariant subspaces, and the fused-level verifiers.

use crate::combinatorics::{
    admissible_transposition, contents, count_hook_ssyt, count_ssyt, ContentKind, StandardTableau,
};
use crate::error::{Error, Result};
use crate::exact::{format_rational, Polynomial, Rational, RationalFunction};
use crate::grid::{self, GridFactor, Slot};
use crate::kernels::{
    eval_matrix, gamma, r_at, r_composed, r_hat_matrix, r_matrix, r_shifted,
    scaled_eval, Convention, KernelSpec,
};
use crate::linalg::{
    column_space_basis, embed_pair, left_inverse, mul_embedded_right, perm_operator,
    restrict_to_subspace, ExactMatrix, TensorContext,
};
use crate::perm::Permutation;
use crate::report::Report;
use num_traits::{One, Zero};

/// Content string for a tableau in the kernel's convention: classical
/// contents for additive kinds, `q^{2(y-x)}` for the deformed kinds.
pub fn tableau_contents(k: &KernelSpec, t: &StandardTableau) -> Result<Vec<Rational>> {
    let kind = match k.convention() {
        Convention::Additive => ContentKind::Classical,
        Convention::Multiplicative => {
            ContentKind::Quantum(k.q().expect("multiplicative kinds carry q").clone())
        }
    };
    contents(t, &kind)
}

/// Shift offset combining two content values in the given convention.
fn offset_of(conv: Convention, a: &Rational, b: &Rational) -> Result<Rational> {
    match conv {
        Convention::Additive => Ok(a - b),
        Convention::Multiplicative => {
            if b.is_zero() {
                return Err(Error::InvalidContents(
                    "zero content in a multiplicative kernel".into(),
                ));
            }
            Ok(a / b)
        }
    }
}

/// Factor sequence of the defining fused product: for each second-block
/// copy in order, the first-block copies from last to first.
fn fused_factor_sites(n: usize, n2: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * n2);
    for j in 1..=n2 {
        for i in (1..=n).rev() {
            out.push((i, n + j));
        }
    }
    out
}

/// The reordered form: first-block copies from last to first, and for each
/// one the whole second block in order.
fn fused_factor_sites_reordered(n: usize, n2: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * n2);
    for i in (1..=n).rev() {
        for j in 1..=n2 {
            out.push((i, n + j));
        }
    }
    out
}

/// A fused operator on `V^{(x)(n+n2)}`, the ordered product of shifted
/// two-site base factors. Both defining factor orders are computed and
/// asserted equal entrywise on construction.
#[derive(Clone, Debug)]
pub struct FusedOperator {
    pub kernel: KernelSpec,
    pub contents_left: Vec<Rational>,
    pub contents_right: Vec<Rational>,
    pub matrix: ExactMatrix<RationalFunction>,
}

fn symbolic_product(
    k: &KernelSpec,
    ctx: &TensorContext,
    sites: &[(usize, usize)],
    offsets: &[Rational],
) -> Result<ExactMatrix<RationalFunction>> {
    let mut acc = ExactMatrix::<RationalFunction>::identity(ctx.dim());
    for ((i, j), off) in sites.iter().zip(offsets) {
        let factor = r_shifted(k, off)?;
        acc = mul_embedded_right(ctx, &acc, &factor, *i, *j)?;
    }
    Ok(acc)
}

pub fn fused_operator(
    k: &KernelSpec,
    c: &[Rational],
    c2: &[Rational],
) -> Result<FusedOperator> {
    if c.is_empty() || c2.is_empty() {
        return Err(Error::InvalidContents("empty content string".into()));
    }
    let conv = k.convention();
    let n = c.len();
    let n2 = c2.len();
    let ctx = TensorContext::new(n + n2, k.dim());
    let offsets_for = |sites: &[(usize, usize)]| -> Result<Vec<Rational>> {
        sites
            .iter()
            .map(|&(i, j)| offset_of(conv, &c[i - 1], &c2[j - n - 1]))
            .collect()
    };
    let sites = fused_factor_sites(n, n2);
    let matrix = symbolic_product(k, &ctx, &sites, &offsets_for(&sites)?)?;
    let sites2 = fused_factor_sites_reordered(n, n2);
    let matrix2 = symbolic_product(k, &ctx, &sites2, &offsets_for(&sites2)?)?;
    if matrix != matrix2 {
        return Err(Error::Invalid(
            "fused product orders disagree; base kernel violates the functional equation".into(),
        ));
    }
    Ok(FusedOperator {
        kernel: k.clone(),
        contents_left: c.to_vec(),
        contents_right: c2.to_vec(),
        matrix,
    })
}

fn constant_product(
    k: &KernelSpec,
    ctx: &TensorContext,
    factors: &[(usize, usize, Rational)],
) -> Result<ExactMatrix<Rational>> {
    let base = r_matrix(k);
    let mut acc = ExactMatrix::<Rational>::identity(ctx.dim());
    for (i, j, arg) in factors {
        let factor = eval_matrix(&base, arg).map_err(|_| {
            Error::SingularContents(format!(
                "factor at sites ({i}, {j}) has a pole at argument {}",
                format_rational(arg)
            ))
        })?;
        acc = mul_embedded_right(ctx, &acc, &factor, *i, *j)?;
    }
    Ok(acc)
}

fn pairwise_factors(
    conv: Convention,
    c: &[Rational],
) -> Result<Vec<(usize, usize, Rational)>> {
    let n = c.len();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            out.push((i, j, offset_of(conv, &c[i - 1], &c[j - 1])?));
        }
    }
    Ok(out)
}

/// The pairwise-product operator on `V^{(x)n}`: the lexicographic product
/// of base factors at the content differences (or ratios). The reverse
/// lexicographic product is also computed and asserted equal.
pub fn f_operator(k: &KernelSpec, c: &[Rational]) -> Result<ExactMatrix<Rational>> {
    let ctx = TensorContext::new(c.len(), k.dim());
    let factors = pairwise_factors(k.convention(), c)?;
    let lex = constant_product(k, &ctx, &factors)?;
    let reversed: Vec<_> = factors.into_iter().rev().collect();
    let revlex = constant_product(k, &ctx, &reversed)?;
    if lex != revlex {
        return Err(Error::Invalid(
            "lexicographic and reverse products disagree".into(),
        ));
    }
    Ok(lex)
}

/// Bracket factors of the companion form: bracket `i` couples the new copy
/// `i+1` to the previous ones through adjacent braid-companion factors.
fn bracket_factors(
    conv: Convention,
    c: &[Rational],
    upto: usize,
) -> Result<Vec<(usize, usize, Rational)>> {
    let mut out = Vec::new();
    for i in 1..upto {
        for p in (1..=i).rev() {
            let arg = offset_of(conv, &c[i - p], &c[i])?;
            out.push((p, p + 1, arg));
        }
    }
    Ok(out)
}

/// The companion operator built from braid-companion factors on adjacent
/// copies; asserted equal to `f_operator` times the longest-element
/// permutation operator.
pub fn f_hat_operator(k: &KernelSpec, c: &[Rational]) -> Result<ExactMatrix<Rational>> {
    let n = c.len();
    let ctx = TensorContext::new(n, k.dim());
    let base_hat = r_hat_matrix(k);
    let mut acc = ExactMatrix::<Rational>::identity(ctx.dim());
    for (i, j, arg) in bracket_factors(k.convention(), c, n)? {
        let factor = eval_matrix(&base_hat, &arg).map_err(|_| {
            Error::SingularContents(format!(
                "companion factor at sites ({i}, {j}) has a pole at {}",
                format_rational(&arg)
            ))
        })?;
        acc = mul_embedded_right(&ctx, &acc, &factor, i, j)?;
    }
    let f = f_operator(k, c)?;
    let pw = perm_operator::<Rational>(&ctx, &Permutation::longest(n));
    if acc != f.mul(&pw) {
        return Err(Error::Invalid(
            "companion form does not match the pairwise product".into(),
        ));
    }
    Ok(acc)
}

/// Clears the entrywise denominators of a rational-function matrix,
/// returning the numerator matrix and the common (monic) denominator.
fn clear_denominators(m: &ExactMatrix<RationalFunction>) -> (ExactMatrix<Polynomial>, Polynomial) {
    let mut lcm = Polynomial::one();
    for e in m.entries() {
        let den = e.denominator();
        let g = crate::exact::poly_gcd(&lcm, den);
        lcm = lcm.div_exact(&g).mul(den);
    }
    let nums = m.map(|e| e.numerator().mul(&lcm.div_exact(e.denominator())));
    (nums, lcm)
}

/// One step factor for the consecutive scheme, denominators cleared:
/// additive kinds use the base solution at `content - t`, the deformed kinds
/// the braid companion at `content / t`.
fn consecutive_factor(
    k: &KernelSpec,
    content: &Rational,
) -> Result<(ExactMatrix<Polynomial>, Polynomial)> {
    let arg = match k.convention() {
        Convention::Additive => RationalFunction::from_poly(Polynomial::affine(
            -Rational::one(),
            content.clone(),
        )),
        Convention::Multiplicative => {
            if content.is_zero() {
                return Err(Error::InvalidContents(
                    "zero content in a multiplicative kernel".into(),
                ));
            }
            RationalFunction::new(
                Polynomial::constant(content.clone()),
                Polynomial::variable(),
            )?
        }
    };
    let base = match k.convention() {
        Convention::Additive => r_matrix(k),
        Convention::Multiplicative => r_hat_matrix(k),
    };
    Ok(clear_denominators(&r_composed(&base, &arg)?))
}

/// Consecutive evaluation of the pairwise product: the contents are
/// substituted one at a time, every entry reduced before each substitution,
/// so cancelling singularities never materialize. Returns the pair
/// `(pairwise product, companion product)`, which differ by the
/// longest-element permutation operator.
pub fn consecutive_evaluation(
    k: &KernelSpec,
    c: &[Rational],
) -> Result<(ExactMatrix<Rational>, ExactMatrix<Rational>)> {
    let d = k.dim();
    let n = c.len();
    let conv = k.convention();
    let mut e = ExactMatrix::<Rational>::identity(d);
    for step in 1..n {
        let ctx = TensorContext::new(step + 1, d);
        let lifted = e.kron(&ExactMatrix::identity(d));
        let mut m = lifted.map(|r| Polynomial::constant(r.clone()));
        let mut den_total = Polynomial::one();
        match conv {
            Convention::Additive => {
                // tail: base factors coupling each previous copy to the new one
                for idx in 0..step {
                    let (factor, den) = consecutive_factor(k, &c[idx])?;
                    m = mul_embedded_right(&ctx, &m, &factor, idx + 1, step + 1)?;
                    den_total = den_total.mul(&den);
                }
            }
            Convention::Multiplicative => {
                // bracket: adjacent companion factors, outermost first
                for p in (1..=step).rev() {
                    let (factor, den) = consecutive_factor(k, &c[step - p])?;
                    m = mul_embedded_right(&ctx, &m, &factor, p, p + 1)?;
                    den_total = den_total.mul(&den);
                }
            }
        }
        let point = &c[step];
        let mut next = ExactMatrix::<Rational>::zero(m.rows(), m.cols());
        for r in 0..m.rows() {
            for col in 0..m.cols() {
                let reduced = RationalFunction::new(m.at(r, col).clone(), den_total.clone())?;
                let value = reduced.eval_at(point).map_err(|_| Error::GenuineSingularity {
                    step: step + 1,
                    detail: format!(
                        "entry ({r}, {col}) keeps a pole at {}",
                        format_rational(point)
                    ),
                })?;
                next.set(r, col, value);
            }
        }
        e = next;
    }
    let ctx = TensorContext::new(n, d);
    let pw = perm_operator::<Rational>(&ctx, &Permutation::longest(n));
    match conv {
        Convention::Additive => {
            let f_hat = e.mul(&pw);
            Ok((e, f_hat))
        }
        Convention::Multiplicative => {
            let f = e.mul(&pw);
            Ok((f, e))
        }
    }
}

/// How an invariant subspace was specified.
#[derive(Clone, Debug)]
pub enum SubspaceSource {
    Tableau(StandardTableau),
    RawContents(Vec<Rational>),
}

/// An invariant subspace: the column space of an evaluated pairwise
/// product, with the pivot columns as basis.
#[derive(Clone, Debug)]
pub struct InvariantSubspace {
    pub kernel: KernelSpec,
    pub source: SubspaceSource,
    pub basis: ExactMatrix<Rational>,
    pub pivot_columns: Vec<usize>,
    pub rank: usize,
    pub f_matrix: ExactMatrix<Rational>,
}

/// Expected rank of the tableau subspace from the counting oracles.
pub fn expected_rank(k: &KernelSpec, t: &StandardTableau) -> usize {
    if k.kind().is_super() {
        count_hook_ssyt(t.shape(), k.n(), k.m())
    } else {
        count_ssyt(t.shape(), k.n())
    }
}

/// Consecutive evaluation at the tableau contents followed by a column
/// space computation. The rank is asserted against the tableau-counting
/// oracle matching the kernel.
pub fn f_of_tableau(k: &KernelSpec, t: &StandardTableau) -> Result<InvariantSubspace> {
    let c = tableau_contents(k, t)?;
    let (f, _) = consecutive_evaluation(k, &c)?;
    let cs = column_space_basis(&f);
    let expected = expected_rank(k, t);
    if cs.rank != expected {
        return Err(Error::SchurWeylMismatch {
            rank: cs.rank,
            expected,
        });
    }
    Ok(InvariantSubspace {
        kernel: k.clone(),
        source: SubspaceSource::Tableau(t.clone()),
        basis: cs.basis,
        pivot_columns: cs.pivot_columns,
        rank: cs.rank,
        f_matrix: f,
    })
}

/// Raw-content mode: the directly evaluated pairwise product and its column
/// space, with no counting oracle attached.
pub fn invariant_subspace_from_contents(
    k: &KernelSpec,
    c: &[Rational],
) -> Result<InvariantSubspace> {
    let f = f_operator(k, c)?;
    let cs = column_space_basis(&f);
    Ok(InvariantSubspace {
        kernel: k.clone(),
        source: SubspaceSource::RawContents(c.to_vec()),
        basis: cs.basis,
        pivot_columns: cs.pivot_columns,
        rank: cs.rank,
        f_matrix: f,
    })
}

/// Restriction of the fused operator for a pair of tableaux to the tensor
/// product of their invariant subspaces. Custom bases, given as column
/// matrices, replace the default pivot-column bases.
pub fn restrict_fused(
    k: &KernelSpec,
    t: &StandardTableau,
    t2: &StandardTableau,
    bases: Option<(&ExactMatrix<Rational>, &ExactMatrix<Rational>)>,
) -> Result<ExactMatrix<RationalFunction>> {
    let c = tableau_contents(k, t)?;
    let c2 = tableau_contents(k, t2)?;
    let op = fused_operator(k, &c, &c2)?;
    let (b1, b2) = match bases {
        Some((b1, b2)) => (b1.clone(), b2.clone()),
        None => (f_of_tableau(k, t)?.basis, f_of_tableau(k, t2)?.basis),
    };
    restrict_to_subspace(&op.matrix, &b1.kron(&b2))
}

/// The change-of-basis operator attached to an admissible adjacent
/// transposition: the swap of two copies composed with the base solution at
/// the reversed content difference, evaluated to a constant matrix.
pub fn conjugation_ak(
    k: &KernelSpec,
    c: &[Rational],
    kpos: usize,
) -> Result<ExactMatrix<Rational>> {
    let n = c.len();
    if kpos < 1 || kpos >= n {
        return Err(Error::InvalidSites {
            i: kpos,
            j: kpos + 1,
            n,
        });
    }
    let conv = k.convention();
    // admissible exactly when the unitarity scalar is finite and nonzero
    // at the content difference
    let g = gamma(k)?;
    let adm_arg = offset_of(conv, &c[kpos - 1], &c[kpos])?;
    match g.eval_at(&adm_arg) {
        Ok(v) if !v.is_zero() => {}
        _ => return Err(Error::NotAdmissible(kpos)),
    }
    let ctx = TensorContext::new(n, k.dim());
    let rev_arg = offset_of(conv, &c[kpos], &c[kpos - 1])?;
    let r_val = r_at(k, &rev_arg).map_err(|_| Error::NotAdmissible(kpos))?;
    let swap_op = perm_operator::<Rational>(&ctx, &Permutation::adjacent(n, kpos)?);
    // base factor on the reversed pair of copies
    let embedded = embed_pair(&ctx, &r_val, kpos + 1, kpos)?;
    Ok(swap_op.mul(&embedded))
}

/// Inverse of [`conjugation_ak`], through the unitarity scalar.
pub fn conjugation_ak_inverse(
    k: &KernelSpec,
    c: &[Rational],
    kpos: usize,
) -> Result<ExactMatrix<Rational>> {
    let n = c.len();
    let conv = k.convention();
    let g = gamma(k)?;
    let adm_arg = offset_of(conv, &c[kpos - 1], &c[kpos])?;
    let gamma_k = match g.eval_at(&adm_arg) {
        Ok(v) if !v.is_zero() => v,
        _ => return Err(Error::NotAdmissible(kpos)),
    };
    let ctx = TensorContext::new(n, k.dim());
    let r_val = r_at(k, &adm_arg).map_err(|_| Error::NotAdmissible(kpos))?;
    let embedded = embed_pair(&ctx, &r_val, kpos, kpos + 1)?;
    let swap_op = perm_operator::<Rational>(&ctx, &Permutation::adjacent(n, kpos)?);
    Ok(embedded.mul(&swap_op).scale(&gamma_k.recip()))
}

/// Checks that the restrictions attached to a tableau and to its image
/// under an admissible transposition coincide entrywise once the basis is
/// transported by the conjugation operator.
pub fn verify_transposition_equivalence(
    k: &KernelSpec,
    t: &StandardTableau,
    t2: &StandardTableau,
    kpos: usize,
) -> Result<Report> {
    let mut report = Report::new("transposition-equivalence");
    let swapped = admissible_transposition(t, kpos).ok_or(Error::NotAdmissible(kpos))?;
    let s1 = f_of_tableau(k, t)?;
    let s2 = f_of_tableau(k, t2)?;
    let c = tableau_contents(k, t)?;
    let a = conjugation_ak(k, &c, kpos)?;
    let m1 = restrict_fused(k, t, t2, Some((&s1.basis, &s2.basis)))?;
    let transported = a.mul(&s1.basis);
    let m2 = restrict_fused(k, &swapped, t2, Some((&transported, &s2.basis)))?;
    report.run("restricted-matrices-coincide", || {
        if m1 == m2 {
            return Ok(None);
        }
        let (mut row, mut col) = (0, 0);
        'outer: for r in 0..m1.rows() {
            for cc in 0..m1.cols() {
                if m1.at(r, cc) != m2.at(r, cc) {
                    (row, col) = (r, cc);
                    break 'outer;
                }
            }
        }
        Ok(Some(format!(
            "first differing entry ({row}, {col}): {} vs {}",
            m1.at(row, col),
            m2.at(row, col)
        )))
    });
    Ok(report)
}

fn fused_grid_factors(
    conv: Convention,
    c: &[Rational],
    c2: &[Rational],
    first_base: usize,
    second_base: usize,
    slot: Slot,
) -> Result<Vec<GridFactor>> {
    let mut out = Vec::with_capacity(c.len() * c2.len());
    for j in 1..=c2.len() {
        for i in (1..=c.len()).rev() {
            out.push(GridFactor::new(
                first_base + i,
                second_base + j,
                slot,
                offset_of(conv, &c[i - 1], &c2[j - 1])?,
            ));
        }
    }
    Ok(out)
}

/// Grid check of the functional equation for three fused blocks: both sides
/// are products of the same shifted factors, evaluated exactly over a
/// deterministic pole-avoiding grid whose size exceeds the degree bound
/// `2(n n' + n n'' + n' n'')` per variable.
pub fn verify_fused_ybe(
    k: &KernelSpec,
    c: &[Rational],
    c2: &[Rational],
    c3: &[Rational],
) -> Result<Report> {
    let (n, n2, n3) = (c.len(), c2.len(), c3.len());
    let conv = k.convention();
    let ctx = TensorContext::new(n + n2 + n3, k.dim());
    let block_a = fused_grid_factors(conv, c, c2, 0, n, Slot::U)?;
    let block_b = fused_grid_factors(conv, c, c3, 0, n + n2, Slot::Combined)?;
    let block_c = fused_grid_factors(conv, c2, c3, n, n + n2, Slot::V)?;
    let mut lhs = Vec::new();
    lhs.extend(block_a.iter().cloned());
    lhs.extend(block_b.iter().cloned());
    lhs.extend(block_c.iter().cloned());
    let mut rhs = Vec::new();
    rhs.extend(block_c.into_iter());
    rhs.extend(block_b.into_iter());
    rhs.extend(block_a.into_iter());
    let degree = 2 * (n * n2 + n * n3 + n2 * n3);
    let base = r_matrix(k);
    let eval = |point: &Rational| scaled_eval(&base, point);
    let mut report = Report::new("fused-ybe");
    report.run(
        format!("functional-equation-grid n={n} n'={n2} n''={n3}"),
        || grid::sides_equal_on_grid(&ctx, &lhs, &rhs, &eval, conv, degree, degree),
    );
    Ok(report)
}

/// `true` when the span of `basis` is invariant under the symbolic operator.
fn preserves_span(
    m: &ExactMatrix<RationalFunction>,
    basis: &ExactMatrix<Rational>,
) -> Result<bool> {
    let l = left_inverse(basis)?;
    let b_f = basis.map(|c| RationalFunction::constant(c.clone()));
    let l_f = l.map(|c| RationalFunction::constant(c.clone()));
    let mb = m.mul(&b_f);
    let projected = b_f.mul(&l_f.mul(&mb));
    Ok(projected == mb)
}

/// Symbolic one-sided coupling: the product of base factors connecting every
/// copy of a block to one extra copy, in the stated order.
fn one_sided_coupling(
    k: &KernelSpec,
    c: &[Rational],
    extra_first: bool,
) -> Result<ExactMatrix<RationalFunction>> {
    let n = c.len();
    let ctx = TensorContext::new(n + 1, k.dim());
    let base = r_matrix(k);
    let mut acc = ExactMatrix::<RationalFunction>::identity(ctx.dim());
    if extra_first {
        // extra copy leads: factors couple it to each block copy in order,
        // argument is (variable) minus (resp. over) the block content
        for j in 1..=n {
            let arg = match k.convention() {
                Convention::Additive => RationalFunction::from_poly(Polynomial::affine(
                    Rational::one(),
                    -&c[j - 1],
                )),
                Convention::Multiplicative => {
                    if c[j - 1].is_zero() {
                        return Err(Error::InvalidContents("zero content".into()));
                    }
                    RationalFunction::from_poly(Polynomial::affine(
                        c[j - 1].recip(),
                        Rational::zero(),
                    ))
                }
            };
            let factor = r_composed(&base, &arg)?;
            acc = mul_embedded_right(&ctx, &acc, &factor, 1, j + 1)?;
        }
    } else {
        // block leads: factors couple each block copy to the trailing one,
        // last block copy first, argument content minus (resp. over) variable
        for i in (1..=n).rev() {
            let arg = match k.convention() {
                Convention::Additive => RationalFunction::from_poly(Polynomial::affine(
                    -Rational::one(),
                    c[i - 1].clone(),
                )),
                Convention::Multiplicative => {
                    RationalFunction::new(Polynomial::constant(c[i - 1].clone()), Polynomial::variable())?
                }
            };
            let factor = r_composed(&base, &arg)?;
            acc = mul_embedded_right(&ctx, &acc, &factor, i, n + 1)?;
        }
    }
    Ok(acc)
}

/// Invariance report: the one-sided couplings preserve the subspace tensored
/// with a free copy, and the fused operator preserves the tensor product of
/// the two subspaces (checked as a vanishing residual of rational functions).
pub fn verify_invariance(
    k: &KernelSpec,
    first: &SubspaceSource,
    second: &SubspaceSource,
) -> Result<Report> {
    let resolve = |src: &SubspaceSource| -> Result<(Vec<Rational>, InvariantSubspace)> {
        match src {
            SubspaceSource::Tableau(t) => Ok((tableau_contents(k, t)?, f_of_tableau(k, t)?)),
            SubspaceSource::RawContents(c) => {
                Ok((c.clone(), invariant_subspace_from_contents(k, c)?))
            }
        }
    };
    let (c1, s1) = resolve(first)?;
    let (c2, s2) = resolve(second)?;
    let d = k.dim();
    let mut report = Report::new("invariance");

    report.run("one-sided-block-leading", || {
        let op = one_sided_coupling(k, &c1, false)?;
        let basis = s1.basis.kron(&ExactMatrix::identity(d));
        Ok((!preserves_span(&op, &basis)?).then(|| "residual nonzero".to_string()))
    });
    report.run("one-sided-extra-copy-leading", || {
        let op = one_sided_coupling(k, &c2, true)?;
        let basis = ExactMatrix::identity(d).kron(&s2.basis);
        Ok((!preserves_span(&op, &basis)?).then(|| "residual nonzero".to_string()))
    });

    let op = fused_operator(k, &c1, &c2)?;
    let dim1 = s1.f_matrix.rows();
    let dim2 = s2.f_matrix.rows();
    report.run("fused-preserves-left-factor", || {
        let basis = s1.basis.kron(&ExactMatrix::identity(dim2));
        Ok((!preserves_span(&op.matrix, &basis)?).then(|| "residual nonzero".to_string()))
    });
    report.run("fused-preserves-right-factor", || {
        let basis = ExactMatrix::identity(dim1).kron(&s2.basis);
        Ok((!preserves_span(&op.matrix, &basis)?).then(|| "residual nonzero".to_string()))
    });
    report.run("fused-preserves-product-subspace", || {
        let basis = s1.basis.kron(&s2.basis);
        Ok((!preserves_span(&op.matrix, &basis)?).then(|| "residual nonzero".to_string()))
    });
    Ok(report)
}

/// Intertwining identities for one adjacent swap of the first content
/// string: the conjugation factor moves through the fused operator, and
/// through the pairwise product with the reversed factor.
pub fn verify_swap_intertwinings(
    k: &KernelSpec,
    c: &[Rational],
    c2: &[Rational],
    kpos: usize,
) -> Result<Report> {
    let n = c.len();
    let conv = k.convention();
    let mut swapped = c.to_vec();
    swapped.swap(kpos - 1, kpos);
    let mut report = Report::new("swap-intertwinings");

    // fused level, on the joint space
    {
        let ctx = TensorContext::new(n + c2.len(), k.dim());
        let rev_arg = offset_of(conv, &c[kpos], &c[kpos - 1])?;
        let r_val = r_at(k, &rev_arg)?;
        let a = perm_operator::<Rational>(&ctx, &Permutation::adjacent(n + c2.len(), kpos)?)
            .mul(&embed_pair(&ctx, &r_val, kpos + 1, kpos)?);
        let a_f = a.map(|v| RationalFunction::constant(v.clone()));
        let lhs = a_f.mul(&fused_operator(k, c, c2)?.matrix);
        let rhs = fused_operator(k, &swapped, c2)?.matrix.mul(&a_f);
        report.push(
            "swap-moves-through-fused-operator",
            lhs == rhs,
            (lhs != rhs).then(|| "sides differ".to_string()),
        );
    }

    // pairwise-product level, on the first block alone
    {
        let ctx = TensorContext::new(n, k.dim());
        let rev_arg = offset_of(conv, &c[kpos], &c[kpos - 1])?;
        let fwd_arg = offset_of(conv, &c[kpos - 1], &c[kpos])?;
        let swap_op = perm_operator::<Rational>(&ctx, &Permutation::adjacent(n, kpos)?);
        let lhs = swap_op
            .mul(&embed_pair(&ctx, &r_at(k, &rev_arg)?, kpos + 1, kpos)?)
            .mul(&f_operator(k, c)?);
        let rhs = f_operator(k, &swapped)?
            .mul(&swap_op)
            .mul(&embed_pair(&ctx, &r_at(k, &fwd_arg)?, kpos, kpos + 1)?);
        report.push(
            "swap-moves-through-pairwise-product",
            lhs == rhs,
            (lhs != rhs).then(|| "sides differ".to_string()),
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};

    fn tab(rows: &[&[usize]]) -> StandardTableau {
        StandardTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn rats(values: &[i64]) -> Vec<Rational> {
        values.iter().map(|&v| rat_int(v)).collect()
    }

    #[test]
    fn single_factor_fusion_is_shifted_base() {
        let k = KernelSpec::yang(2);
        let op = fused_operator(&k, &rats(&[3]), &rats(&[1])).unwrap();
        let expected = r_shifted(&k, &rat_int(2)).unwrap();
        assert_eq!(op.matrix, expected);
    }

    #[test]
    fn pairwise_products_of_row_and_column_contents() {
        let k = KernelSpec::yang(2);
        let ctx = TensorContext::new(2, 2);
        let p = perm_operator::<Rational>(&ctx, &Permutation::adjacent(2, 1).unwrap());
        // contents (0, 1) give identity plus swap
        let f = f_operator(&k, &rats(&[0, 1])).unwrap();
        assert_eq!(f, ExactMatrix::identity(4).add(&p));
        // contents (0, -1) give identity minus swap
        let f = f_operator(&k, &rats(&[0, -1])).unwrap();
        assert_eq!(f, ExactMatrix::identity(4).sub(&p));
        // generic contents: invertible, full column space
        let f = f_operator(&k, &rats(&[0, 5])).unwrap();
        assert_eq!(column_space_basis(&f).rank, 4);
        // coincident contents hit a factor pole
        assert!(matches!(
            f_operator(&k, &rats(&[0, 0])),
            Err(Error::SingularContents(_))
        ));
    }

    #[test]
    fn companion_form_small_cases() {
        let k = KernelSpec::yang(2);
        let ctx = TensorContext::new(2, 2);
        let p = perm_operator::<Rational>(&ctx, &Permutation::adjacent(2, 1).unwrap());
        // two copies: the companion is the pairwise product times the swap,
        // and the symmetrizer absorbs it
        let fh = f_hat_operator(&k, &rats(&[0, 1])).unwrap();
        assert_eq!(fh, ExactMatrix::identity(4).add(&p));
        // row contents on three copies: same column space either way
        let c = rats(&[0, 1, 2]);
        let f = f_operator(&k, &c).unwrap();
        let fh = f_hat_operator(&k, &c).unwrap();
        assert_eq!(
            column_space_basis(&f).basis,
            column_space_basis(&fh).basis
        );
    }

    #[test]
    fn consecutive_matches_direct_when_contents_are_distinct() {
        for k in [
            KernelSpec::yang(2),
            KernelSpec::super_yang(1, 1).unwrap(),
            KernelSpec::hecke(2, rat_int(2)).unwrap(),
        ] {
            for t in [tab(&[&[1, 2, 3]]), tab(&[&[1, 3], &[2]]), tab(&[&[1, 2], &[3]])] {
                let c = tableau_contents(&k, &t).unwrap();
                let direct = f_operator(&k, &c).unwrap();
                let (consecutive, _) = consecutive_evaluation(&k, &c).unwrap();
                assert_eq!(direct, consecutive, "{:?} {:?}", k.kind(), t);
            }
        }
    }

    #[test]
    fn square_shape_collision_evaluates() {
        let k = KernelSpec::yang(2);
        let t = tab(&[&[1, 2], &[3, 4]]);
        let sub = f_of_tableau(&k, &t).unwrap();
        assert_eq!(sub.rank, count_ssyt(t.shape(), 2));
        // the direct product is singular for these contents
        let c = tableau_contents(&k, &t).unwrap();
        assert!(f_operator(&k, &c).is_err());
    }

    #[test]
    fn hook_tableau_subspace_matches_named_vectors() {
        let k = KernelSpec::yang(2);
        let t = tab(&[&[1, 3], &[2]]);
        let sub = f_of_tableau(&k, &t).unwrap();
        assert_eq!(sub.rank, 2);
        // span { e1 e2 e1 - e2 e1 e1, e1 e2 e2 - e2 e1 e2 }
        let ctx = TensorContext::new(3, 2);
        let mut expected = ExactMatrix::<Rational>::zero(8, 2);
        expected.set(ctx.index(&[0, 1, 0]), 0, rat_int(1));
        expected.set(ctx.index(&[1, 0, 0]), 0, rat_int(-1));
        expected.set(ctx.index(&[0, 1, 1]), 1, rat_int(1));
        expected.set(ctx.index(&[1, 0, 1]), 1, rat_int(-1));
        // same span: stacking either basis onto the other leaves rank 2
        let mut stacked = ExactMatrix::<Rational>::zero(8, 4);
        for r in 0..8 {
            for c in 0..2 {
                stacked.set(r, c, sub.basis.at(r, c).clone());
                stacked.set(r, c + 2, expected.at(r, c).clone());
            }
        }
        assert_eq!(crate::linalg::rank(&stacked), 2);
    }

    #[test]
    fn column_tableau_in_low_dimension_has_zero_rank() {
        let k = KernelSpec::yang(2);
        let t = StandardTableau::column(3);
        let sub = f_of_tableau(&k, &t).unwrap();
        assert_eq!(sub.rank, 0);
    }

    #[test]
    fn conjugation_operator_matches_hand_value() {
        // contents (0, -1, 1), swap position 2: the operator is the swap of
        // copies 2,3 minus half the identity
        let k = KernelSpec::yang(2);
        let c = rats(&[0, -1, 1]);
        let a = conjugation_ak(&k, &c, 2).unwrap();
        let ctx = TensorContext::new(3, 2);
        let p23 = perm_operator::<Rational>(&ctx, &Permutation::adjacent(3, 2).unwrap());
        let expected = p23.sub(&ExactMatrix::identity(8).scale(&rat(1, 2)));
        assert_eq!(a, expected);

        let a_inv = conjugation_ak_inverse(&k, &c, 2).unwrap();
        assert_eq!(a.mul(&a_inv), ExactMatrix::identity(8));

        // contents with a unit gap are not admissible
        assert!(matches!(
            conjugation_ak(&k, &rats(&[0, 1, 2]), 1),
            Err(Error::NotAdmissible(1))
        ));
    }

    #[test]
    fn worked_equivalence_case() {
        let k = KernelSpec::yang(2);
        let report =
            verify_transposition_equivalence(&k, &tab(&[&[1, 3], &[2]]), &tab(&[&[1]]), 2)
                .unwrap();
        assert!(report.passed(), "{}", report.pretty());
        let report_hecke = verify_transposition_equivalence(
            &KernelSpec::hecke(2, rat_int(2)).unwrap(),
            &tab(&[&[1, 3], &[2]]),
            &tab(&[&[1]]),
            2,
        )
        .unwrap();
        assert!(report_hecke.passed(), "{}", report_hecke.pretty());
    }

    #[test]
    fn fused_ybe_tiny_instances() {
        let k = KernelSpec::yang(2);
        // all blocks a single copy with neutral contents reduces to the base equation
        let ones = rats(&[0]);
        let report = verify_fused_ybe(&k, &ones, &ones, &ones).unwrap();
        assert!(report.passed(), "{}", report.pretty());
        // the worked two-one-one instance
        let report = verify_fused_ybe(&k, &rats(&[0, 1]), &rats(&[0]), &rats(&[0])).unwrap();
        assert!(report.passed(), "{}", report.pretty());
    }

    #[test]
    fn invariance_for_symmetric_and_alternating_squares() {
        let k = KernelSpec::yang(2);
        for c in [rats(&[0, 1]), rats(&[0, -1])] {
            let report = verify_invariance(
                &k,
                &SubspaceSource::RawContents(c),
                &SubspaceSource::RawContents(rats(&[0])),
            )
            .unwrap();
            assert!(report.passed(), "{}", report.pretty());
        }
        // generic contents: full space, trivially invariant
        let report = verify_invariance(
            &k,
            &SubspaceSource::RawContents(rats(&[0, 5])),
            &SubspaceSource::RawContents(rats(&[0])),
        )
        .unwrap();
        assert!(report.passed(), "{}", report.pretty());
    }

    #[test]
    fn swap_intertwinings_small() {
        let k = KernelSpec::yang(2);
        let report =
            verify_swap_intertwinings(&k, &rats(&[0, 2, 5]), &rats(&[0]), 1).unwrap();
        assert!(report.passed(), "{}", report.pretty());
    }
}
