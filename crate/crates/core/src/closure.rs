//! Upward closed sets of diagrams and the closure operator built from
//! first-row/first-column shortening.
//!
//! An upward closed set is represented by its minimal generating antichain.
//! For a finite generator set `S`, `hat_set(S)` collects the unions
//! `shorten_row(D) ∪ shorten_col(E)` over ordered pairs from `S`; the upward
//! closure of that hat set is the least closed set containing `S`. The
//! alternative "sliced" description — everything above `S` together with the
//! finitely many small diagrams `bar_set(S)` below the norm bound — must
//! agree with it memberwise, and the verification suites check that it does.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{enumerate_diagrams, Diagram, SizeRange};

/// Errors from generator-set handling.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosureError {
    /// Upward closed sets here are generated by at least one diagram.
    #[error("generator set must be nonempty")]
    EmptyGeneratorSet,
    /// The witness search only makes sense outside the set.
    #[error("diagram {0} is already a member")]
    MemberAlready(Diagram),
}

/// A finite set of diagrams in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DiagramSet {
    members: BTreeSet<Diagram>,
}

impl DiagramSet {
    pub fn new() -> Self {
        DiagramSet::default()
    }

    pub fn insert(&mut self, d: Diagram) -> bool {
        self.members.insert(d)
    }

    pub fn contains(&self, d: &Diagram) -> bool {
        self.members.contains(d)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = &Diagram> {
        self.members.iter()
    }
}

impl FromIterator<Diagram> for DiagramSet {
    fn from_iter<I: IntoIterator<Item = Diagram>>(iter: I) -> Self {
        DiagramSet { members: iter.into_iter().collect() }
    }
}

impl IntoIterator for DiagramSet {
    type Item = Diagram;
    type IntoIter = std::collections::btree_set::IntoIter<Diagram>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.into_iter()
    }
}

/// An upward closed set of diagrams, stored as its minimal generating
/// antichain in canonical order. Equal sets have equal antichains.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "UpSetWire", into = "UpSetWire")]
pub struct UpSet {
    generators: Vec<Diagram>,
}

#[derive(Serialize, Deserialize)]
struct UpSetWire {
    generators: Vec<Diagram>,
}

impl TryFrom<UpSetWire> for UpSet {
    type Error = ClosureError;

    fn try_from(w: UpSetWire) -> Result<Self, Self::Error> {
        UpSet::generated_by(w.generators)
    }
}

impl From<UpSet> for UpSetWire {
    fn from(u: UpSet) -> UpSetWire {
        UpSetWire { generators: u.generators }
    }
}

impl UpSet {
    /// The upward closure of a nonempty generator set, reduced to its
    /// minimal antichain.
    pub fn generated_by(generators: impl IntoIterator<Item = Diagram>) -> Result<Self, ClosureError> {
        let gens: BTreeSet<Diagram> = generators.into_iter().collect();
        if gens.is_empty() {
            return Err(ClosureError::EmptyGeneratorSet);
        }
        let minimal: Vec<Diagram> = gens
            .iter()
            .filter(|d| !gens.iter().any(|e| e != *d && e.leq(d)))
            .cloned()
            .collect();
        Ok(UpSet { generators: minimal })
    }

    /// The minimal generating antichain in canonical order.
    pub fn generators(&self) -> &[Diagram] {
        &self.generators
    }

    /// Membership: some generator fits inside `d`.
    pub fn contains(&self, d: &Diagram) -> bool {
        self.generators.iter().any(|g| g.leq(d))
    }

    /// Set inclusion: every generator of `self` is a member of `other`.
    pub fn subset_of(&self, other: &UpSet) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    /// Decides closedness; on failure returns the first hat element
    /// (canonical order) that falls outside the set.
    pub fn non_closed_witness(&self) -> Option<Diagram> {
        hat_set(&self.generators.iter().cloned().collect())
            .into_iter()
            .find(|h| !self.contains(h))
    }

    pub fn is_closed(&self) -> bool {
        self.non_closed_witness().is_none()
    }
}

/// The hat set of `s`: unions `shorten_row(D) ∪ shorten_col(E)` over all
/// ordered pairs `(D, E)` from `s`, including `D = E`. Always contains `s`.
pub fn hat_set(s: &DiagramSet) -> DiagramSet {
    let mut out = DiagramSet::new();
    for d in s.iter() {
        let dr = d.shorten_row();
        for e in s.iter() {
            out.insert(dr.union(&e.shorten_col()));
        }
    }
    out
}

/// The norm of `s`: the largest `(r1(D) - 1) * (c1(E) - 1)` over ordered
/// pairs from `s`. Diagrams up to this size can enter the closure from below.
pub fn norm(s: &DiagramSet) -> u32 {
    let max_row = s.iter().map(Diagram::first_row).max().unwrap_or(0);
    let max_col = s.iter().map(Diagram::first_col).max().unwrap_or(0);
    if max_row == 0 || max_col == 0 {
        return 0;
    }
    (max_row - 1) * (max_col - 1)
}

/// The diagrams of size at most `norm(s)` that the closure adds: members of
/// the upward closure of the hat set within that size bound.
pub fn bar_set(s: &DiagramSet) -> Result<DiagramSet, ClosureError> {
    let hat = UpSet::generated_by(hat_set(s))?;
    let bound = norm(s);
    let mut out = DiagramSet::new();
    if bound == 0 {
        return Ok(out);
    }
    for f in enumerate_diagrams(bound, SizeRange::UpTo) {
        if hat.contains(&f) {
            out.insert(f);
        }
    }
    Ok(out)
}

/// The least closed set containing `s`: the upward closure of the hat set.
pub fn closure(s: &DiagramSet) -> Result<UpSet, ClosureError> {
    UpSet::generated_by(hat_set(s))
}

/// Membership in the closure of `s`, computed through the hat set.
pub fn member_closure(d: &Diagram, s: &DiagramSet) -> Result<bool, ClosureError> {
    Ok(closure(s)?.contains(d))
}

/// Membership in the closure of `s` computed the sliced way: either `d` is
/// above some generator outright, or it is one of the finitely many small
/// diagrams in the bar set. Kept separate from [`member_closure`] so the two
/// routes stay independently checkable.
pub fn member_closure_sliced(d: &Diagram, s: &DiagramSet) -> Result<bool, ClosureError> {
    let ucl = UpSet::generated_by(s.iter().cloned())?;
    if ucl.contains(d) {
        return Ok(true);
    }
    Ok(d.size() <= norm(s) && bar_set(s)?.contains(d))
}

/// Searches for a strict extension of `f` outside `u`, first among all
/// extensions with at most `depth` extra boxes (canonical order), then among
/// the two long-row/long-column probe diagrams. `None` means every probe
/// stayed inside `u`, i.e. `f` itself witnesses that `u` is not closed.
pub fn closedness_witness_search(
    u: &UpSet,
    f: &Diagram,
    depth: u32,
) -> Result<Option<Diagram>, ClosureError> {
    if u.contains(f) {
        return Err(ClosureError::MemberAlready(f.clone()));
    }
    for g in enumerate_diagrams(f.size() + depth, SizeRange::UpTo) {
        if g != *f && f.leq(&g) && !u.contains(&g) {
            return Ok(Some(g));
        }
    }
    let gens: DiagramSet = u.generators().iter().cloned().collect();
    let long = norm(&gens) + f.size() + 1;
    for probe in [row_probe(f, long), col_probe(f, long)] {
        if !u.contains(&probe) {
            return Ok(Some(probe));
        }
    }
    Ok(None)
}

/// `f` with its first row stretched to `len + 1` boxes.
pub(crate) fn row_probe(f: &Diagram, len: u32) -> Diagram {
    let mut rows = f.rows().to_vec();
    rows[0] = (len + 1).max(rows[0]);
    Diagram::new(&rows.iter().map(|&r| r as i64).collect::<Vec<_>>()).unwrap()
}

/// `f` with its first column stretched to `len + 1` boxes.
pub(crate) fn col_probe(f: &Diagram, len: u32) -> Diagram {
    row_probe(&f.conjugate(), len).conjugate()
}
