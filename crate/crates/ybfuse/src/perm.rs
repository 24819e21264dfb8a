//! Permutations of `{1, .., n}` with the composition convention that in a
//! product the right factor acts first: `(a * b)(k) = a(b(k))`, so that
//! `(1,2)(2,3) = (1,2,3)` in cycle notation.

use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    // images[k] = pi(k+1) - 1
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of a 1-based point.
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1] + 1
    }

    /// Transposition `(i, j)`, 1-based.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == j || i < 1 || j < 1 || i > n || j > n {
            return Err(Error::InvalidSites { i, j, n });
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, j - 1);
        Ok(Self { images })
    }

    /// Adjacent transposition `s_k = (k, k+1)`.
    pub fn adjacent(n: usize, k: usize) -> Result<Self> {
        Self::transposition(n, k, k + 1)
    }

    /// Longest element: `k` maps to `n + 1 - k`.
    pub fn longest(n: usize) -> Self {
        Self {
            images: (0..n).rev().collect(),
        }
    }

    /// `self * other`, the right factor applied first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "permutation size mismatch");
        Self {
            images: other.images.iter().map(|&k| self.images[k]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.n()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v] = k;
        }
        Self { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| k == v)
    }

    /// One-line notation `[pi(1), .., pi(n)]`.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    pub fn from_one_line(line: &[usize]) -> Result<Self> {
        let n = line.len();
        let mut seen = vec![false; n];
        for &v in line {
            if v < 1 || v > n || seen[v - 1] {
                return Err(Error::Invalid(format!(
                    "not a permutation in one-line notation: {line:?}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Self {
            images: line.iter().map(|&v| v - 1).collect(),
        })
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.images;
        let mut count = 0;
        for i in 0..v.len() {
            for j in (i + 1)..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// A reduced word `[i1, .., il]` with `self = s_{i1} * s_{i2} * .. * s_{il}`
    /// (rightmost factor applied first). Its length equals [`Self::length`].
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut line = self.one_line();
        let mut word = Vec::with_capacity(self.length());
        loop {
            let Some(p) = (0..line.len().saturating_sub(1)).find(|&p| line[p] > line[p + 1]) else {
                break;
            };
            // a descent at p means self = (self * s_p) * s_p with one fewer inversion
            line.swap(p, p + 1);
            word.push(p + 1);
        }
        word.reverse();
        word
    }

    /// All permutations of `{1..n}` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut line: Vec<usize> = (0..n).collect();
        loop {
            out.push(Self {
                images: line.clone(),
            });
            // next lexicographic arrangement
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| line[i] < line[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| line[j] > line[i]).unwrap();
            line.swap(i, j);
            line[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line: Vec<String> = self.one_line().iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", line.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_convention() {
        // (1,2)(2,3) = (1,2,3): 1 -> 2, 2 -> 3, 3 -> 1
        let s1 = Permutation::adjacent(3, 1).unwrap();
        let s2 = Permutation::adjacent(3, 2).unwrap();
        let c = s1.compose(&s2);
        assert_eq!(c.one_line(), vec![2, 3, 1]);
    }

    #[test]
    fn inverse_and_longest() {
        let w = Permutation::longest(4);
        assert_eq!(w.one_line(), vec![4, 3, 2, 1]);
        assert!(w.compose(&w).is_identity());
        for p in Permutation::all(4) {
            assert!(p.compose(&p.inverse()).is_identity());
        }
    }

    #[test]
    fn reduced_words_recompose() {
        for p in Permutation::all(4) {
            let word = p.reduced_word();
            assert_eq!(word.len(), p.length());
            let mut acc = Permutation::identity(4);
            for &k in &word {
                acc = acc.compose(&Permutation::adjacent(4, k).unwrap());
            }
            assert_eq!(acc, p);
        }
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let all = Permutation::all(3);
        assert_eq!(all.len(), 6);
        assert_eq!(all[0].one_line(), vec![1, 2, 3]);
        assert_eq!(all[5].one_line(), vec![3, 2, 1]);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(sorted, all);
    }
}
