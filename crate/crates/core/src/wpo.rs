//! Sequence-level consequences of the diagram order being a well partial
//! order: good pairs, the finite product embedding, and the translations
//! between bad sequences and ascending chains of upward closed sets.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::closure::{closure, ClosureError, DiagramSet, UpSet};
use crate::diagram::{enumerate_diagrams, Diagram, SizeRange};

/// Errors from sequence and chain translations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WpoError {
    /// The product embedding needs `m, n >= 2`, `m > r_n(D)` and `n > c_m(D)`.
    #[error("side conditions violated for {diagram} with m={m}, n={n}")]
    SideConditionViolated { diagram: Diagram, m: u32, n: u32 },
    /// The sequence has a good pair and is not bad.
    #[error("sequence is not bad: elements {i} and {j} form a good pair")]
    NotBad { i: usize, j: usize },
    /// The chain must strictly ascend.
    #[error("chain does not strictly ascend at step {0}")]
    NotAscending(usize),
    #[error(transparent)]
    Closure(#[from] ClosureError),
}

/// A point of the coordinatewise-ordered product of finitely many copies
/// of the naturals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NkVector(pub Vec<u32>);

impl NkVector {
    /// Coordinatewise comparison; vectors of different lengths never compare.
    pub fn leq(&self, other: &NkVector) -> bool {
        self.0.len() == other.0.len()
            && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

/// Which prefix operator [`chain_from_bad_sequence`] applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainMode {
    /// Upward closure of each prefix; the chain ascends strictly.
    Upward,
    /// Closure of each prefix; the chain ascends weakly.
    Closure,
}

/// The least good pair of a sequence: indices `i < j` (1-based) with
/// `seq[i] <= seq[j]`, minimized by `j` first and then `i`.
pub fn find_good_pair(seq: &[Diagram]) -> Option<(usize, usize)> {
    for j in 1..seq.len() {
        for i in 0..j {
            if seq[i].leq(&seq[j]) {
                return Some((i + 1, j + 1));
            }
        }
    }
    None
}

/// Embeds a diagram into the coordinatewise order on vectors of length
/// `m + n - 2`: the first `n - 1` rows and first `m - 1` columns, each
/// shifted up by one. Within the side conditions the embedding preserves
/// and reflects the containment order.
pub fn embed_in_product(d: &Diagram, m: u32, n: u32) -> Result<NkVector, WpoError> {
    if m < 2 || n < 2 || d.row(n as usize) >= m || d.col(m as usize) >= n {
        return Err(WpoError::SideConditionViolated { diagram: d.clone(), m, n });
    }
    let mut v = Vec::with_capacity((m + n - 2) as usize);
    for i in 1..n as usize {
        v.push(d.row(i) + 1);
    }
    for j in 1..m as usize {
        v.push(d.col(j) + 1);
    }
    Ok(NkVector(v))
}

/// Maps a bad sequence to the chain of prefix sets under the chosen
/// operator, checking badness first and the ascent direction after.
pub fn chain_from_bad_sequence(seq: &[Diagram], mode: ChainMode) -> Result<Vec<UpSet>, WpoError> {
    if let Some((i, j)) = find_good_pair(seq) {
        return Err(WpoError::NotBad { i, j });
    }
    let mut chain = Vec::with_capacity(seq.len());
    let mut prefix = DiagramSet::new();
    for d in seq {
        prefix.insert(d.clone());
        chain.push(match mode {
            ChainMode::Upward => UpSet::generated_by(prefix.iter().cloned())?,
            ChainMode::Closure => closure(&prefix)?,
        });
    }
    for (step, w) in chain.windows(2).enumerate() {
        let ascends = match mode {
            ChainMode::Upward => w[0].subset_of(&w[1]) && !w[1].subset_of(&w[0]),
            ChainMode::Closure => w[0].subset_of(&w[1]),
        };
        if !ascends {
            return Err(WpoError::NotAscending(step + 1));
        }
    }
    Ok(chain)
}

/// Recovers a bad sequence from a strictly ascending chain: element `i` is
/// the canonically least diagram in `chain[i+1]` but not in `chain[i]`.
pub fn bad_sequence_from_chain(chain: &[UpSet]) -> Result<Vec<Diagram>, WpoError> {
    for (step, w) in chain.windows(2).enumerate() {
        if !w[0].subset_of(&w[1]) || w[1].subset_of(&w[0]) {
            return Err(WpoError::NotAscending(step + 1));
        }
    }
    let mut seq = Vec::new();
    for w in chain.windows(2) {
        seq.push(least_new_member(&w[0], &w[1]));
    }
    debug_assert_eq!(find_good_pair(&seq), None);
    Ok(seq)
}

/// The canonically least member of `larger` outside `smaller`. Some
/// generator of `larger` lies outside `smaller`, so the search can stop
/// at the largest generator size.
fn least_new_member(smaller: &UpSet, larger: &UpSet) -> Diagram {
    let bound = larger.generators().iter().map(Diagram::size).max().unwrap();
    enumerate_diagrams(bound, SizeRange::UpTo)
        .into_iter()
        .find(|x| larger.contains(x) && !smaller.contains(x))
        .expect("a strictly larger upward closed set holds a new generator")
}

/// The longest bad sequence over diagrams of size at most `k`, returned with
/// a witness: all such diagrams in weakly decreasing size order. Badness
/// forces distinct entries, so no sequence can be longer, and the checks
/// below confirm the witness is bad and cannot be extended.
pub fn max_bad_length(k: u32) -> (usize, Vec<Diagram>) {
    let mut witness = Vec::new();
    for size in (1..=k).rev() {
        witness.extend(enumerate_diagrams(size, SizeRange::Exact));
    }
    debug_assert_eq!(find_good_pair(&witness), None);
    debug_assert!(enumerate_diagrams(k, SizeRange::UpTo).iter().all(|x| {
        let mut extended = witness.clone();
        extended.push(x.clone());
        find_good_pair(&extended).is_some()
    }));
    (witness.len(), witness)
}

/// The least pair `(i, j)` (1-based, lexicographic, `i != j`) with
/// `sets[i]` included in `sets[j]`; `None` when the family is an antichain
/// under inclusion.
pub fn antichain_check(sets: &[UpSet]) -> Option<(usize, usize)> {
    for i in 0..sets.len() {
        for j in 0..sets.len() {
            if i != j && sets[i].subset_of(&sets[j]) {
                return Some((i + 1, j + 1));
            }
        }
    }
    None
}
