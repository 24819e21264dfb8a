//! Deterministic pole-avoiding evaluation grids for two-parameter
//! functional identities.
//!
//! Identities are products of two-site factors whose arguments are the first
//! parameter, the second, or their combination, each shifted in the ambient
//! convention. Because both sides of an identity use the same factor
//! multiset, comparing denominator-cleared evaluations is exact.

use crate::error::Result;
use crate::exact::{format_rational, rat_int, Rational};
use crate::kernels::Convention;
use crate::linalg::{mul_embedded_left, ExactMatrix, TensorContext};
use num_traits::{One, Zero};
use rayon::prelude::*;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Slot {
    U,
    V,
    /// `u + v` or `u * v` depending on convention.
    Combined,
}

/// One embedded factor of a product side: acts on copies `(i, j)` with
/// argument `slot (+) offset`.
#[derive(Clone, Debug)]
pub struct GridFactor {
    pub i: usize,
    pub j: usize,
    pub slot: Slot,
    pub offset: Rational,
}

impl GridFactor {
    pub fn new(i: usize, j: usize, slot: Slot, offset: Rational) -> Self {
        Self { i, j, slot, offset }
    }

    /// Factor with the neutral offset of the convention.
    pub fn plain(i: usize, j: usize, slot: Slot, conv: Convention) -> Self {
        let offset = match conv {
            Convention::Additive => Rational::zero(),
            Convention::Multiplicative => Rational::one(),
        };
        Self::new(i, j, slot, offset)
    }

    fn argument(&self, conv: Convention, u: &Rational, v: &Rational) -> Rational {
        let base = match (self.slot, conv) {
            (Slot::U, _) => u.clone(),
            (Slot::V, _) => v.clone(),
            (Slot::Combined, Convention::Additive) => u + v,
            (Slot::Combined, Convention::Multiplicative) => u * v,
        };
        match conv {
            Convention::Additive => base + &self.offset,
            Convention::Multiplicative => base * &self.offset,
        }
    }
}

/// Evaluated product of embedded factors, leftmost factor applied last.
/// `None` when any factor hits a pole at this point.
fn product_at(
    ctx: &TensorContext,
    factors: &[GridFactor],
    eval: &(impl Fn(&Rational) -> Option<ExactMatrix<Rational>> + Sync),
    conv: Convention,
    u: &Rational,
    v: &Rational,
) -> Option<ExactMatrix<Rational>> {
    let mut acc = ExactMatrix::<Rational>::identity(ctx.dim());
    for f in factors.iter().rev() {
        let arg = f.argument(conv, u, v);
        let m = eval(&arg)?;
        acc = mul_embedded_left(ctx, &m, f.i, f.j, &acc).expect("sites validated by caller");
    }
    Some(acc)
}

/// Compares two factor products over a `(du+1) x (dv+1)` grid of rational
/// points, enumerating positive integers and skipping points where any
/// factor has a pole. Returns `Ok(None)` when all grid points agree and
/// `Ok(Some(detail))` carrying the first counterexample otherwise.
///
/// The grid sizes exceed the per-variable degree of the cleared-denominator
/// difference of the two sides, so agreement on the full grid is a proof of
/// the identity, not a sample.
pub fn sides_equal_on_grid(
    ctx: &TensorContext,
    lhs: &[GridFactor],
    rhs: &[GridFactor],
    eval: &(impl Fn(&Rational) -> Option<ExactMatrix<Rational>> + Sync),
    conv: Convention,
    du: usize,
    dv: usize,
) -> Result<Option<String>> {
    let has_pole = |f: &GridFactor, u: &Rational, v: &Rational| -> bool {
        eval(&f.argument(conv, u, v)).is_none()
    };
    let all_factors: Vec<&GridFactor> = lhs.iter().chain(rhs.iter()).collect();

    // deterministic point selection: walk positive integers, keep the first
    // du+1 u-values whose pure-u factors are pole free, and per u the first
    // dv+1 v-values clearing the remaining factors
    let mut points: Vec<(Rational, Rational)> = Vec::with_capacity((du + 1) * (dv + 1));
    let mut u_candidate = 0i64;
    let mut u_found = 0;
    while u_found < du + 1 {
        u_candidate += 1;
        let u = rat_int(u_candidate);
        let dummy_v = rat_int(1);
        if all_factors
            .iter()
            .filter(|f| f.slot == Slot::U)
            .any(|f| has_pole(f, &u, &dummy_v))
        {
            continue;
        }
        let mut v_candidate = 0i64;
        let mut v_found = 0;
        while v_found < dv + 1 {
            v_candidate += 1;
            let v = rat_int(v_candidate);
            if all_factors
                .iter()
                .filter(|f| f.slot != Slot::U)
                .any(|f| has_pole(f, &u, &v))
            {
                continue;
            }
            points.push((u.clone(), v.clone()));
            v_found += 1;
        }
        u_found += 1;
    }

    let failure = points
        .par_iter()
        .find_map_first(|(u, v)| {
            let l = product_at(ctx, lhs, eval, conv, u, v)?;
            let r = product_at(ctx, rhs, eval, conv, u, v)?;
            if l != r {
                Some(format!(
                    "sides differ at u={}, v={}",
                    format_rational(u),
                    format_rational(v)
                ))
            } else {
                None
            }
        });
    Ok(failure)
}
