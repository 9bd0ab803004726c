//! Young diagrams as weakly decreasing rows of boxes, ordered by containment.
//!
//! Two orders live side by side here and must not be confused:
//!
//! * the *containment* partial order [`Diagram::leq`] (rowwise, equivalently
//!   columnwise, comparison), which is the order all the closure and chain
//!   machinery works over, and
//! * the *canonical* total order implemented by `Ord` (size ascending, then
//!   lexicographically descending row sequences), which fixes enumeration
//!   order, tie-breaking, and "least counterexample" semantics everywhere.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors from diagram and box-set construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    /// A diagram must have at least one row.
    #[error("a diagram needs at least one row")]
    EmptyPartition,
    /// Row lengths must be weakly decreasing.
    #[error("row lengths must be weakly decreasing: row {index} is {value} after {previous}")]
    NotDecreasing { index: usize, value: i64, previous: i64 },
    /// Every row must hold at least one box.
    #[error("row lengths must be positive, got {0}")]
    NonPositivePart(i64),
    /// A box set must be closed under moving up and left.
    #[error("box set is not downward closed: ({0}, {1}) has a missing predecessor")]
    NotDownwardClosed(u32, u32),
}

/// A Young diagram: weakly decreasing positive row lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<u32>")]
pub struct Diagram {
    rows: Vec<u32>,
}

impl Diagram {
    /// Validates and builds a diagram from row lengths.
    pub fn new(rows: &[i64]) -> Result<Self, DiagramError> {
        if rows.is_empty() {
            return Err(DiagramError::EmptyPartition);
        }
        for (i, &r) in rows.iter().enumerate() {
            if r <= 0 {
                return Err(DiagramError::NonPositivePart(r));
            }
            if i > 0 && r > rows[i - 1] {
                return Err(DiagramError::NotDecreasing {
                    index: i + 1,
                    value: r,
                    previous: rows[i - 1],
                });
            }
        }
        Ok(Diagram { rows: rows.iter().map(|&r| r as u32).collect() })
    }

    /// Builds from rows already known to be weakly decreasing and positive.
    pub(crate) fn from_valid_rows(rows: Vec<u32>) -> Self {
        debug_assert!(!rows.is_empty());
        debug_assert!(rows.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(*rows.last().unwrap() > 0);
        Diagram { rows }
    }

    /// The single-box diagram, the least element of the containment order.
    pub fn one_box() -> Self {
        Diagram { rows: vec![1] }
    }

    /// Row lengths, longest first.
    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// Length of row `i` (1-based); zero past the last row.
    pub fn row(&self, i: usize) -> u32 {
        if i == 0 {
            panic!("rows are 1-based");
        }
        self.rows.get(i - 1).copied().unwrap_or(0)
    }

    /// Length of column `j` (1-based): the number of rows of length >= j.
    pub fn col(&self, j: usize) -> u32 {
        assert!(j > 0, "columns are 1-based");
        self.rows.iter().take_while(|&&r| r >= j as u32).count() as u32
    }

    /// Length of the first row.
    pub fn first_row(&self) -> u32 {
        self.rows[0]
    }

    /// Length of the first column, i.e. the number of rows.
    pub fn first_col(&self) -> u32 {
        self.rows.len() as u32
    }

    /// Total number of boxes.
    pub fn size(&self) -> u32 {
        self.rows.iter().sum()
    }

    /// The transposed diagram: rows and columns exchanged.
    pub fn conjugate(&self) -> Diagram {
        let mut cols = Vec::with_capacity(self.rows[0] as usize);
        for j in 1..=self.rows[0] {
            cols.push(self.rows.iter().take_while(|&&r| r >= j).count() as u32);
        }
        Diagram::from_valid_rows(cols)
    }

    /// Containment: every row of `self` fits inside the same row of `other`.
    pub fn leq(&self, other: &Diagram) -> bool {
        self.rows.len() <= other.rows.len()
            && self.rows.iter().zip(&other.rows).all(|(a, b)| a <= b)
    }

    /// Least upper bound under containment: rowwise maximum.
    pub fn union(&self, other: &Diagram) -> Diagram {
        let (long, short) = if self.rows.len() >= other.rows.len() {
            (&self.rows, &other.rows)
        } else {
            (&other.rows, &self.rows)
        };
        let mut rows = long.clone();
        for (r, s) in rows.iter_mut().zip(short) {
            *r = (*r).max(*s);
        }
        Diagram::from_valid_rows(rows)
    }

    /// Shrinks the first row down to the second (or to a single box).
    pub fn shorten_row(&self) -> Diagram {
        let mut rows = self.rows.clone();
        rows[0] = self.row(2).max(1);
        Diagram::from_valid_rows(rows)
    }

    /// Shrinks the first column down to the second (or to a single box);
    /// the conjugate of `shorten_row` on the conjugate.
    pub fn shorten_col(&self) -> Diagram {
        self.conjugate().shorten_row().conjugate()
    }

    /// The boxes of the diagram as (row, column) pairs, 1-based.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| (1..=r).map(move |j| (i as u32 + 1, j)))
    }

    /// The downward closed box set of the diagram.
    pub fn to_downset(&self) -> DownSet2 {
        DownSet2 { cells: self.cells().collect() }
    }
}

impl TryFrom<Vec<i64>> for Diagram {
    type Error = DiagramError;

    fn try_from(rows: Vec<i64>) -> Result<Self, Self::Error> {
        Diagram::new(&rows)
    }
}

impl From<Diagram> for Vec<u32> {
    fn from(d: Diagram) -> Vec<u32> {
        d.rows
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

/// Canonical total order: size ascending, then row sequences in
/// lexicographically descending order. This is the enumeration order of
/// [`enumerate_diagrams`] and the tie-break for every "least" result.
impl Ord for Diagram {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.rows.cmp(&self.rows))
    }
}

impl PartialOrd for Diagram {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite downward closed set of boxes in the quarter plane, the
/// box-set picture of a diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<(u32, u32)>", into = "Vec<(u32, u32)>")]
pub struct DownSet2 {
    cells: BTreeSet<(u32, u32)>,
}

impl DownSet2 {
    /// Validates a nonempty, downward closed box set.
    pub fn new(cells: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, DiagramError> {
        let cells: BTreeSet<(u32, u32)> = cells.into_iter().collect();
        if cells.is_empty() {
            return Err(DiagramError::EmptyPartition);
        }
        for &(i, j) in &cells {
            if i == 0 || j == 0 {
                return Err(DiagramError::NotDownwardClosed(i, j));
            }
            if i > 1 && !cells.contains(&(i - 1, j)) {
                return Err(DiagramError::NotDownwardClosed(i, j));
            }
            if j > 1 && !cells.contains(&(i, j - 1)) {
                return Err(DiagramError::NotDownwardClosed(i, j));
            }
        }
        Ok(DownSet2 { cells })
    }

    /// The boxes in lexicographic order.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.cells.iter().copied()
    }

    /// Number of boxes.
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    /// Box sets are never empty, but the trait convention asks for this.
    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// The diagram whose rows are the row counts of the box set.
    pub fn to_diagram(&self) -> Diagram {
        let depth = self.cells.iter().map(|&(i, _)| i).max().unwrap() as usize;
        let mut rows = vec![0u32; depth];
        for &(i, _) in &self.cells {
            rows[i as usize - 1] += 1;
        }
        Diagram::from_valid_rows(rows)
    }
}

impl TryFrom<Vec<(u32, u32)>> for DownSet2 {
    type Error = DiagramError;

    fn try_from(cells: Vec<(u32, u32)>) -> Result<Self, Self::Error> {
        DownSet2::new(cells)
    }
}

impl From<DownSet2> for Vec<(u32, u32)> {
    fn from(d: DownSet2) -> Vec<(u32, u32)> {
        d.cells.into_iter().collect()
    }
}

/// Whether [`enumerate_diagrams`] lists a single size or everything up to it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SizeRange {
    Exact,
    UpTo,
}

/// All diagrams of size `n` (or of size `1..=n`) in canonical order.
pub fn enumerate_diagrams(n: u32, range: SizeRange) -> Vec<Diagram> {
    let mut out = Vec::new();
    let start = match range {
        SizeRange::Exact => n,
        SizeRange::UpTo => 1,
    };
    for size in start..=n {
        partitions_into(size, size, &mut Vec::new(), &mut out);
    }
    out
}

/// Extends `prefix` by parts of at most `max_part` summing to `remaining`,
/// largest part first, which yields lexicographically descending order.
fn partitions_into(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Diagram>) {
    if remaining == 0 {
        out.push(Diagram::from_valid_rows(prefix.clone()));
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        prefix.push(part);
        partitions_into(remaining - part, part, prefix, out);
        prefix.pop();
    }
}
