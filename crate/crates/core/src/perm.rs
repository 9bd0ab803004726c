//! Permutations of `{1, ..., n}` in one-line notation.
//!
//! The derived `Ord` is lexicographic on the one-line images; that order
//! indexes the columns of every matrix over the group algebra.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::Diagram;

/// Errors from permutation construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    /// One-line notation must list each of `1..=n` exactly once.
    #[error("not a permutation of 1..={n}: {images:?}")]
    NotAPermutation { n: usize, images: Vec<i64> },
    /// The degree must be at least one.
    #[error("a permutation needs degree at least 1")]
    EmptyPermutation,
}

/// A permutation in one-line notation: `images[i]` is the image of `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<u32>")]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    /// Validates one-line notation.
    pub fn new(images: &[i64]) -> Result<Self, PermError> {
        if images.is_empty() {
            return Err(PermError::EmptyPermutation);
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            if v < 1 || v > n as i64 || seen[v as usize - 1] {
                return Err(PermError::NotAPermutation { n, images: images.to_vec() });
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { images: images.iter().map(|&v| v as u8).collect() })
    }

    /// The identity of degree `n`.
    pub fn identity(n: u32) -> Self {
        Permutation { images: (1..=n as u8).collect() }
    }

    /// The adjacent transposition swapping `i` and `i + 1` in degree `n`.
    pub fn adjacent_transposition(n: u32, i: u32) -> Self {
        assert!(i >= 1 && i < n, "need 1 <= i < n");
        let mut p = Permutation::identity(n);
        p.images.swap(i as usize - 1, i as usize);
        p
    }

    pub fn degree(&self) -> u32 {
        self.images.len() as u32
    }

    /// The image of `i` (1-based).
    pub fn apply(&self, i: u32) -> u32 {
        self.images[i as usize - 1] as u32
    }

    /// Function composition: `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degrees must match");
        Permutation {
            images: other.images.iter().map(|&v| self.images[v as usize - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = i as u8 + 1;
        }
        Permutation { images }
    }

    /// The cycle type as a diagram: cycle lengths, longest first.
    pub fn cycle_type(&self) -> Diagram {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut at = start;
            while !seen[at] {
                seen[at] = true;
                at = self.images[at] as usize - 1;
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Diagram::new(&lengths.iter().map(|&l| l as i64).collect::<Vec<_>>())
            .expect("cycle lengths form a partition")
    }

    /// Extends to degree `n` by fixed points. Panics on shrinking; the
    /// algebra layer reports that case as an error.
    pub fn extend(&self, n: u32) -> Permutation {
        assert!(n >= self.degree(), "cannot shrink a permutation");
        let mut images = self.images.clone();
        images.extend(self.degree() as u8 + 1..=n as u8);
        Permutation { images }
    }

    /// The position of this permutation in the lexicographic listing of its
    /// symmetric group, starting at zero.
    pub fn lex_rank(&self) -> usize {
        let n = self.images.len();
        let mut rank = 0usize;
        let mut factorial = (1..n).product::<usize>();
        let mut used = vec![false; n];
        for (i, &v) in self.images.iter().enumerate() {
            let smaller = (0..v as usize - 1).filter(|&w| !used[w]).count();
            rank += smaller * factorial;
            used[v as usize - 1] = true;
            if i + 1 < n {
                factorial /= n - 1 - i;
            }
        }
        rank
    }
}

impl TryFrom<Vec<i64>> for Permutation {
    type Error = PermError;

    fn try_from(images: Vec<i64>) -> Result<Self, Self::Error> {
        Permutation::new(&images)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Vec<u32> {
        p.images.into_iter().map(u32::from).collect()
    }
}

/// All permutations of degree `n` in lexicographic order.
pub fn all_permutations(n: u32) -> Vec<Permutation> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut picked = Vec::with_capacity(n as usize);
    let mut free = vec![true; n as usize];
    lex_extend(&mut picked, &mut free, &mut out);
    out
}

fn lex_extend(picked: &mut Vec<u8>, free: &mut Vec<bool>, out: &mut Vec<Permutation>) {
    if picked.len() == free.len() {
        out.push(Permutation { images: picked.clone() });
        return;
    }
    for v in 0..free.len() {
        if free[v] {
            free[v] = false;
            picked.push(v as u8 + 1);
            lex_extend(picked, free, out);
            picked.pop();
            free[v] = true;
        }
    }
}
