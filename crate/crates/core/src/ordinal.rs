//! Ordinals below the first omega power fixed point of interest here:
//! finite sums of omega powers in Cantor normal form.
//!
//! An ordinal is stored as its weakly decreasing exponent sequence; the
//! empty sequence is zero. Comparison is lexicographic with a missing
//! position reading as minus infinity, which matches ordinal order on
//! normal forms.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::Diagram;
use crate::wpo::find_good_pair;

/// Errors from ordinal construction and translation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrdinalError {
    /// Exponents must be weakly decreasing.
    #[error("exponents must be weakly decreasing: {value} after {previous}")]
    NotDecreasingExponents { previous: i64, value: i64 },
    /// Exponents are natural numbers.
    #[error("exponents must be nonnegative, got {0}")]
    NegativeExponent(i64),
    /// Zero has no diagram.
    #[error("the zero ordinal has no diagram")]
    ZeroOrdinal,
    /// The sequence handed to the bad-sequence translation must strictly descend.
    #[error("ordinal sequence is not strictly descending at position {0}")]
    NotDescending(usize),
}

/// An ordinal below omega^omega in Cantor normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<u32>")]
pub struct OrdinalCnf {
    exponents: Vec<u32>,
}

impl OrdinalCnf {
    /// Validates and builds an ordinal from its exponent sequence.
    pub fn new(exponents: &[i64]) -> Result<Self, OrdinalError> {
        for (i, &e) in exponents.iter().enumerate() {
            if e < 0 {
                return Err(OrdinalError::NegativeExponent(e));
            }
            if i > 0 && e > exponents[i - 1] {
                return Err(OrdinalError::NotDecreasingExponents {
                    previous: exponents[i - 1],
                    value: e,
                });
            }
        }
        Ok(OrdinalCnf { exponents: exponents.iter().map(|&e| e as u32).collect() })
    }

    /// The ordinal zero: the empty sum.
    pub fn zero() -> Self {
        OrdinalCnf { exponents: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.exponents.is_empty()
    }

    /// The exponent sequence, largest first.
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// The diagram with one box more than each exponent, rowwise.
    pub fn to_diagram(&self) -> Result<Diagram, OrdinalError> {
        if self.is_zero() {
            return Err(OrdinalError::ZeroOrdinal);
        }
        Ok(Diagram::new(&self.exponents.iter().map(|&e| e as i64 + 1).collect::<Vec<_>>())
            .expect("exponents are weakly decreasing"))
    }
}

impl TryFrom<Vec<i64>> for OrdinalCnf {
    type Error = OrdinalError;

    fn try_from(exponents: Vec<i64>) -> Result<Self, Self::Error> {
        OrdinalCnf::new(&exponents)
    }
}

impl From<OrdinalCnf> for Vec<u32> {
    fn from(a: OrdinalCnf) -> Vec<u32> {
        a.exponents
    }
}

/// Renders e.g. `[2,0]` as `w^2 + 1`.
impl fmt::Display for OrdinalCnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return write!(f, "0");
        }
        for (i, &e) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "1")?,
                1 => write!(f, "w")?,
                _ => write!(f, "w^{e}")?,
            }
        }
        Ok(())
    }
}

/// Ordinal order: lexicographic on exponents, shorter prefix smaller.
impl Ord for OrdinalCnf {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exponents.iter().cmp(other.exponents.iter())
    }
}

impl PartialOrd for OrdinalCnf {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Maps a strictly descending ordinal sequence to the corresponding bad
/// diagram sequence, checking both the precondition and the badness of
/// the result.
pub fn descending_to_bad(ordinals: &[OrdinalCnf]) -> Result<Vec<Diagram>, OrdinalError> {
    for (i, w) in ordinals.windows(2).enumerate() {
        if w[0] <= w[1] {
            return Err(OrdinalError::NotDescending(i + 2));
        }
    }
    let diagrams = ordinals
        .iter()
        .map(|a| a.to_diagram())
        .collect::<Result<Vec<_>, _>>()?;
    debug_assert_eq!(find_good_pair(&diagrams), None);
    Ok(diagrams)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(exps: &[i64]) -> OrdinalCnf {
        OrdinalCnf::new(exps).unwrap()
    }

    fn d(rows: &[i64]) -> Diagram {
        Diagram::new(rows).unwrap()
    }

    #[test]
    fn construction_validates() {
        assert!(OrdinalCnf::new(&[2, 0]).is_ok());
        assert!(OrdinalCnf::new(&[]).is_ok());
        assert_eq!(
            OrdinalCnf::new(&[0, 2]),
            Err(OrdinalError::NotDecreasingExponents { previous: 0, value: 2 })
        );
        assert_eq!(OrdinalCnf::new(&[-1]), Err(OrdinalError::NegativeExponent(-1)));
    }

    #[test]
    fn comparison_examples() {
        // w^2 + 1 > w^2
        assert_eq!(o(&[2, 0]).cmp(&o(&[2])), Ordering::Greater);
        // w^3 > w^2 * 4
        assert_eq!(o(&[3]).cmp(&o(&[2, 2, 2, 2])), Ordering::Greater);
        assert_eq!(o(&[1, 1]).cmp(&o(&[1, 1])), Ordering::Equal);
        assert_eq!(OrdinalCnf::zero().cmp(&o(&[0])), Ordering::Less);
    }

    #[test]
    fn diagram_translation_examples() {
        assert_eq!(o(&[2, 0]).to_diagram().unwrap(), d(&[3, 1]));
        assert_eq!(o(&[0]).to_diagram().unwrap(), d(&[1]));
        assert_eq!(o(&[3, 3, 1]).to_diagram().unwrap(), d(&[4, 4, 2]));
        assert_eq!(OrdinalCnf::zero().to_diagram(), Err(OrdinalError::ZeroOrdinal));
    }

    #[test]
    fn descending_translation_example() {
        let seq = [o(&[2, 1]), o(&[2]), o(&[1, 0]), o(&[1])];
        let bad = descending_to_bad(&seq).unwrap();
        assert_eq!(bad, vec![d(&[3, 2]), d(&[3]), d(&[2, 1]), d(&[2])]);
    }

    #[test]
    fn descending_translation_rejects_non_descending() {
        assert_eq!(
            descending_to_bad(&[o(&[1]), o(&[1])]),
            Err(OrdinalError::NotDescending(2))
        );
        assert_eq!(
            descending_to_bad(&[o(&[2]), o(&[1]), o(&[1, 0])]),
            Err(OrdinalError::NotDescending(3))
        );
        assert_eq!(
            descending_to_bad(&[o(&[1]), OrdinalCnf::zero()]),
            Err(OrdinalError::ZeroOrdinal)
        );
    }

    /// All ordinals with at most `terms` exponents, each below `bound`.
    fn all_ordinals(terms: usize, bound: u32) -> Vec<OrdinalCnf> {
        let mut out = vec![OrdinalCnf::zero()];
        let mut layer: Vec<Vec<u32>> = vec![Vec::new()];
        for _ in 0..terms {
            let mut next = Vec::new();
            for stem in &layer {
                let cap = stem.last().copied().unwrap_or(bound);
                for e in 0..=cap {
                    let mut ext = stem.clone();
                    ext.push(e);
                    out.push(OrdinalCnf { exponents: ext.clone() });
                    next.push(ext);
                }
            }
            layer = next;
        }
        out
    }

    #[test]
    fn order_reflection_and_injectivity_small() {
        let ords = all_ordinals(3, 3);
        for a in &ords {
            for b in &ords {
                let (da, db) = match (a.to_diagram(), b.to_diagram()) {
                    (Ok(da), Ok(db)) => (da, db),
                    _ => continue,
                };
                if da.leq(&db) {
                    assert!(a <= b, "{a} vs {b}");
                }
                if da == db {
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn cmp_is_a_total_order_small() {
        let ords = all_ordinals(2, 3);
        for a in &ords {
            for b in &ords {
                match a.cmp(b) {
                    Ordering::Equal => assert_eq!(a, b),
                    ord => assert_eq!(b.cmp(a), ord.reverse()),
                }
                for c in &ords {
                    if a <= b && b <= c {
                        assert!(a <= c);
                    }
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let a = o(&[2, 0]);
        let js = serde_json::to_string(&a).unwrap();
        assert_eq!(js, "[2,0]");
        assert_eq!(serde_json::from_str::<OrdinalCnf>(&js).unwrap(), a);
        assert_eq!(serde_json::from_str::<OrdinalCnf>("[]").unwrap(), OrdinalCnf::zero());
        assert!(serde_json::from_str::<OrdinalCnf>("[0,1]").is_err());
    }
}
