//! Partitions, Young diagrams, standard tableaux, contents, hook products,
//! and the tableau-counting functions used as dimension oracles.
//!
//! Node convention: `(row x, column y)`, 1-based; the content of a node is
//! `y - x`.

use crate::error::{Error, Result};
use crate::exact::{rat_pow, Rational};
use num_traits::{One, Zero};

/// Weakly decreasing list of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Invalid("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(
                "partition parts must be weakly decreasing".into(),
            ));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|y| self.parts.iter().filter(|&&p| p >= y).count())
            .collect();
        Self { parts }
    }

    /// Nodes `(x, y)` in reading order, 1-based.
    pub fn nodes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (x, &len) in self.parts.iter().enumerate() {
            for y in 1..=len {
                out.push((x + 1, y));
            }
        }
        out
    }

    /// All partitions of `n`, parts in weakly decreasing order, listed
    /// deterministically (lexicographically decreasing first part).
    pub fn all(n: usize) -> Vec<Self> {
        fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in (1..=remaining.min(max_part)).rev() {
                prefix.push(p);
                rec(remaining - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

/// A bijective filling of a Young diagram whose entries increase along rows
/// and down columns.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect())?;
        let n = shape.size();
        let mut seen = vec![false; n];
        for row in &rows {
            for &e in row {
                if e < 1 || e > n || seen[e - 1] {
                    return Err(Error::Invalid(format!("not a bijective filling: {rows:?}")));
                }
                seen[e - 1] = true;
            }
        }
        let t = Self { shape, rows };
        if !t.is_standard() {
            return Err(Error::Invalid(format!(
                "entries must increase along rows and down columns: {:?}",
                t.rows
            )));
        }
        Ok(t)
    }

    fn is_standard(&self) -> bool {
        for (x, row) in self.rows.iter().enumerate() {
            for (y, &e) in row.iter().enumerate() {
                if y + 1 < row.len() && row[y + 1] <= e {
                    return false;
                }
                if x + 1 < self.rows.len() && self.rows[x + 1].len() > y && self.rows[x + 1][y] <= e
                {
                    return false;
                }
            }
        }
        true
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.size()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Node `(x, y)` holding entry `i`, 1-based everywhere.
    pub fn node_of(&self, i: usize) -> (usize, usize) {
        for (x, row) in self.rows.iter().enumerate() {
            for (y, &e) in row.iter().enumerate() {
                if e == i {
                    return (x + 1, y + 1);
                }
            }
        }
        panic!("entry {i} not present");
    }

    /// Entries concatenated row by row; the deterministic sort key.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Single-row tableau `1 2 .. n`.
    pub fn row(n: usize) -> Self {
        Self::new(vec![(1..=n).collect()]).expect("row tableau is standard")
    }

    /// Single-column tableau.
    pub fn column(n: usize) -> Self {
        Self::new((1..=n).map(|k| vec![k]).collect()).expect("column tableau is standard")
    }
}

/// Hook lengths per node, aligned with the diagram rows.
pub fn hook_lengths(shape: &Partition) -> Vec<Vec<usize>> {
    let conj = shape.conjugate();
    shape
        .parts()
        .iter()
        .enumerate()
        .map(|(x, &len)| {
            (1..=len)
                .map(|y| (len - y) + (conj.parts()[y - 1] - (x + 1)) + 1)
                .collect()
        })
        .collect()
}

/// Reciprocal of the product of all hook lengths.
pub fn f_lambda(shape: &Partition) -> Rational {
    let mut prod = Rational::one();
    for row in hook_lengths(shape) {
        for h in row {
            prod *= Rational::from_integer(h.into());
        }
    }
    prod.recip()
}

fn quantum_integer(q: &Rational, n: i64) -> Result<Rational> {
    // (q^n - q^-n)/(q - q^-1)
    let num = rat_pow(q, n)? - rat_pow(q, -n)?;
    let den = q - q.recip();
    Ok(num / den)
}

fn check_q(q: &Rational) -> Result<()> {
    if q.is_zero() || q.is_one() || (-q).is_one() {
        return Err(Error::InvalidDeformationParameter(
            crate::exact::format_rational(q),
        ));
    }
    Ok(())
}

/// Product over nodes of `q^content / [hook]`, exact in the rational `q`.
pub fn f_q_lambda(shape: &Partition, q: &Rational) -> Result<Rational> {
    check_q(q)?;
    let hooks = hook_lengths(shape);
    let mut prod = Rational::one();
    for (x, y) in shape.nodes() {
        let cc = y as i64 - x as i64;
        let h = hooks[x - 1][y - 1] as i64;
        prod *= rat_pow(q, cc)? / quantum_integer(q, h)?;
    }
    Ok(prod)
}

#[derive(Clone, Debug)]
pub enum ContentKind {
    Classical,
    Quantum(Rational),
}

/// Content string of a tableau: entry `i` maps to `y - x`, or to
/// `q^{2(y-x)}` in the quantum mode.
pub fn contents(t: &StandardTableau, kind: &ContentKind) -> Result<Vec<Rational>> {
    if let ContentKind::Quantum(q) = kind {
        check_q(q)?;
    }
    (1..=t.n())
        .map(|i| {
            let (x, y) = t.node_of(i);
            let cc = y as i64 - x as i64;
            match kind {
                ContentKind::Classical => Ok(Rational::from_integer(cc.into())),
                ContentKind::Quantum(q) => rat_pow(q, 2 * cc),
            }
        })
        .collect()
}

pub fn classical_contents(t: &StandardTableau) -> Vec<Rational> {
    contents(t, &ContentKind::Classical).expect("classical contents never fail")
}

/// All standard tableaux of the given shape, sorted by reading word.
pub fn enumerate_syt(shape: &Partition) -> Vec<StandardTableau> {
    fn rec(
        shape: &Partition,
        fill: &mut Vec<Vec<usize>>,
        counts: &mut Vec<usize>,
        next: usize,
        n: usize,
        out: &mut Vec<StandardTableau>,
    ) {
        if next > n {
            out.push(StandardTableau::new(fill.clone()).expect("construction is standard"));
            return;
        }
        for x in 0..shape.len() {
            let y = counts[x];
            if y >= shape.parts()[x] {
                continue;
            }
            // column constraint: the cell above must already be filled
            if x > 0 && counts[x - 1] <= y {
                continue;
            }
            fill[x].push(next);
            counts[x] += 1;
            rec(shape, fill, counts, next + 1, n, out);
            counts[x] -= 1;
            fill[x].pop();
        }
    }
    let mut out = Vec::new();
    let mut fill = vec![Vec::new(); shape.len()];
    let mut counts = vec![0; shape.len()];
    rec(shape, &mut fill, &mut counts, 1, shape.size(), &mut out);
    out.sort_by_key(|t| t.reading_word());
    out
}

/// Swaps entries `k` and `k+1` when the result is still standard.
pub fn admissible_transposition(t: &StandardTableau, k: usize) -> Option<StandardTableau> {
    assert!(k >= 1 && k < t.n(), "position out of range");
    let rows: Vec<Vec<usize>> = t
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|&e| {
                    if e == k {
                        k + 1
                    } else if e == k + 1 {
                        k
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect();
    StandardTableau::new(rows).ok()
}

/// Number of fillings with entries in `{1..n_values}` that weakly increase
/// along rows and strictly increase down columns.
pub fn count_ssyt(shape: &Partition, n_values: usize) -> usize {
    if shape.len() > n_values {
        return 0;
    }
    count_fillings(shape, n_values, 0)
}

/// Number of hook semistandard fillings over the alphabet of `n` unprimed
/// and `m` primed letters, unprimed before primed. Unprimed letters repeat
/// along rows but not down columns; primed letters repeat down columns but
/// not along rows. Zero exactly when some row below row `n` is longer
/// than `m`.
pub fn count_hook_ssyt(shape: &Partition, n: usize, m: usize) -> usize {
    count_fillings(shape, n, m)
}

/// Shared filling counter: values `0..n` behave like unprimed letters,
/// values `n..n+m` like primed ones.
fn count_fillings(shape: &Partition, n: usize, m: usize) -> usize {
    let total = n + m;
    if total == 0 {
        return usize::from(shape.is_empty());
    }
    let parts = shape.parts().to_vec();
    let mut grid: Vec<Vec<usize>> = parts.iter().map(|&len| vec![0; len]).collect();
    fn rec(parts: &[usize], grid: &mut Vec<Vec<usize>>, x: usize, y: usize, n: usize, total: usize) -> usize {
        if x == parts.len() {
            return 1;
        }
        let (nx, ny) = if y + 1 < parts[x] {
            (x, y + 1)
        } else {
            (x + 1, 0)
        };
        let mut count = 0;
        for v in 0..total {
            let primed = v >= n;
            if y > 0 {
                let left = grid[x][y - 1];
                if left > v || (left == v && primed) {
                    continue;
                }
            }
            if x > 0 {
                let up = grid[x - 1][y];
                if up > v || (up == v && !primed) {
                    continue;
                }
            }
            grid[x][y] = v;
            count += rec(parts, grid, nx, ny, n, total);
        }
        count
    }
    rec(&parts, &mut grid, 0, 0, n, total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};
    use num_traits::Signed;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn tab(rows: &[&[usize]]) -> StandardTableau {
        StandardTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn hooks() {
        assert_eq!(hook_lengths(&part(&[1])), vec![vec![1]]);
        assert_eq!(hook_lengths(&part(&[4])), vec![vec![4, 3, 2, 1]]);
        // counting hook cells by hand for the shape (2,1)
        assert_eq!(hook_lengths(&part(&[2, 1])), vec![vec![3, 1], vec![1]]);
        assert_eq!(hook_lengths(&part(&[2, 2])), vec![vec![3, 2], vec![2, 1]]);
    }

    #[test]
    fn hook_products() {
        assert_eq!(f_lambda(&part(&[3])), rat(1, 6));
        assert_eq!(f_lambda(&part(&[2, 1])), rat(1, 3));
        assert_eq!(f_lambda(&part(&[1])), rat_int(1));
    }

    #[test]
    fn quantum_hook_product_unwinds_to_one() {
        // multiplying back by every [hook] and dividing by every q^content
        // recovers 1, for sampled q and every shape of size up to five
        for q in [rat_int(2), rat(3, 2), rat(-5, 3)] {
            let q_inv = q.recip();
            let qint = |h: i64| (crate::exact::rat_pow(&q, h).unwrap()
                - crate::exact::rat_pow(&q, -h).unwrap())
                / (&q - &q_inv);
            for n in 1..=5 {
                for shape in Partition::all(n) {
                    let hooks = hook_lengths(&shape);
                    let mut prod = f_q_lambda(&shape, &q).unwrap();
                    for (x, y) in shape.nodes() {
                        prod *= qint(hooks[x - 1][y - 1] as i64);
                        prod *= crate::exact::rat_pow(&q, -(y as i64 - x as i64)).unwrap();
                    }
                    assert_eq!(prod, Rational::one(), "shape {shape:?} q {q:?}");
                }
            }
        }
    }

    #[test]
    fn hook_count_matches_independent_rank_oracle() {
        // the (1,1)-alphabet column pair: rank of the signed pairwise factor
        // built by hand equals the filling count
        use crate::kernels::{sign_operator, swap, Grading};
        use crate::linalg::{rank, ExactMatrix};
        let grading = Grading::new(1, 1);
        // signed identity minus swap at argument 1 (the column contents 0, -1)
        let f = sign_operator(&grading).sub(&swap::<Rational>(2));
        assert_eq!(rank(&f), count_hook_ssyt(&part(&[1, 1]), 1, 1));
    }

    #[test]
    fn quantum_hook_products() {
        let q = rat_int(2);
        // direct evaluation for the two-node row: contents 0, 1; hooks 2, 1
        assert_eq!(f_q_lambda(&part(&[2]), &q).unwrap(), rat(4, 5));
        assert_eq!(f_q_lambda(&part(&[1]), &q).unwrap(), rat_int(1));
        assert_eq!(f_q_lambda(&part(&[1]), &rat(3, 2)).unwrap(), rat_int(1));
        // 1/(q^2 + 1 + q^-2) for the hook shape of size three
        let expected = (rat_int(4) + rat_int(1) + rat(1, 4)).recip();
        assert_eq!(f_q_lambda(&part(&[2, 1]), &q).unwrap(), expected);
        assert!(f_q_lambda(&part(&[2]), &rat_int(1)).is_err());
        assert!(f_q_lambda(&part(&[2]), &rat_int(0)).is_err());
        assert!(f_q_lambda(&part(&[2]), &rat_int(-1)).is_err());
    }

    #[test]
    fn content_strings() {
        let row = StandardTableau::row(4);
        assert_eq!(
            classical_contents(&row),
            vec![rat_int(0), rat_int(1), rat_int(2), rat_int(3)]
        );
        let t = tab(&[&[1, 3], &[2]]);
        assert_eq!(
            classical_contents(&t),
            vec![rat_int(0), rat_int(-1), rat_int(1)]
        );
        // entries 1 and 4 share the content 0 on the square shape
        let sq = tab(&[&[1, 2], &[3, 4]]);
        assert_eq!(
            classical_contents(&sq),
            vec![rat_int(0), rat_int(1), rat_int(-1), rat_int(0)]
        );
        let q = rat_int(2);
        assert_eq!(
            contents(&sq, &ContentKind::Quantum(q)).unwrap(),
            vec![rat_int(1), rat_int(4), rat(1, 4), rat_int(1)]
        );
    }

    #[test]
    fn syt_enumeration_matches_brute_force() {
        use crate::perm::Permutation;
        for shape in [part(&[2, 1]), part(&[2, 2]), part(&[3, 1]), part(&[2, 1, 1])] {
            let fast = enumerate_syt(&shape);
            // brute force: all bijective fillings, filtered for standardness
            let n = shape.size();
            let mut slow = Vec::new();
            for p in Permutation::all(n) {
                let line = p.one_line();
                let mut rows = Vec::new();
                let mut idx = 0;
                for &len in shape.parts() {
                    rows.push(line[idx..idx + len].to_vec());
                    idx += len;
                }
                if let Ok(t) = StandardTableau::new(rows) {
                    slow.push(t);
                }
            }
            slow.sort_by_key(|t| t.reading_word());
            assert_eq!(fast, slow, "shape {shape:?}");
        }
        assert_eq!(enumerate_syt(&part(&[5])).len(), 1);
        assert_eq!(enumerate_syt(&part(&[2, 1])).len(), 2);
        assert_eq!(enumerate_syt(&part(&[2, 2])).len(), 2);
    }

    #[test]
    fn syt_count_matches_hook_formula() {
        for n in 1..=6 {
            for shape in Partition::all(n) {
                let count = enumerate_syt(&shape).len();
                let mut factorial = Rational::one();
                for k in 1..=n {
                    factorial *= rat_int(k as i64);
                }
                assert_eq!(rat_int(count as i64), factorial * f_lambda(&shape));
            }
        }
    }

    #[test]
    fn admissible_swaps() {
        let t = tab(&[&[1, 3], &[2]]);
        assert_eq!(
            admissible_transposition(&t, 2),
            Some(tab(&[&[1, 2], &[3]]))
        );
        // the row tableau admits no swap: adjacent contents differ by one
        let row = StandardTableau::row(4);
        for k in 1..4 {
            assert_eq!(admissible_transposition(&row, k), None);
        }
        // swap and re-check standardness by hand for the square shape
        let sq = tab(&[&[1, 2], &[3, 4]]);
        assert_eq!(
            admissible_transposition(&sq, 2),
            Some(tab(&[&[1, 3], &[2, 4]]))
        );

        // a swap is admissible exactly when the contents differ by more than one
        for shape in Partition::all(4) {
            for t in enumerate_syt(&shape) {
                let cc = classical_contents(&t);
                for k in 1..4 {
                    let gap = (&cc[k] - &cc[k - 1]).abs();
                    assert_eq!(
                        admissible_transposition(&t, k).is_some(),
                        gap != rat_int(1),
                        "tableau {t:?} position {k}"
                    );
                }
            }
        }
    }

    #[test]
    fn ssyt_counts() {
        assert_eq!(count_ssyt(&part(&[2]), 2), 3);
        assert_eq!(count_ssyt(&part(&[2, 1]), 2), 2);
        assert_eq!(count_ssyt(&part(&[1, 1, 1]), 2), 0);
        assert_eq!(count_ssyt(&part(&[1]), 3), 3);
    }

    #[test]
    fn hook_ssyt_counts() {
        // m = 0 reduces to the ordinary count
        for n_values in 1..=3 {
            for size in 1..=4 {
                for shape in Partition::all(size) {
                    assert_eq!(
                        count_hook_ssyt(&shape, n_values, 0),
                        count_ssyt(&shape, n_values)
                    );
                }
            }
        }
        // vanishing exactly on shapes leaving the hook
        assert_eq!(count_hook_ssyt(&part(&[2, 2]), 1, 1), 0);
        assert!(count_hook_ssyt(&part(&[2, 1, 1]), 1, 1) > 0);
        assert_eq!(count_hook_ssyt(&part(&[1, 1]), 1, 1), 2);
        assert_eq!(count_hook_ssyt(&part(&[2]), 1, 1), 2);
    }

    #[test]
    fn dimension_sums() {
        // sum over shapes of (filling count) x (tableau count) = d^n
        for (n_values, m_values, max_n) in [(2usize, 0usize, 5usize), (3, 0, 5), (1, 1, 4), (2, 1, 4)] {
            let d = n_values + m_values;
            for n in 1..=max_n {
                let mut total = 0usize;
                for shape in Partition::all(n) {
                    total +=
                        count_hook_ssyt(&shape, n_values, m_values) * enumerate_syt(&shape).len();
                }
                assert_eq!(total, d.pow(n as u32), "d={d} n={n}");
            }
        }
    }
}
