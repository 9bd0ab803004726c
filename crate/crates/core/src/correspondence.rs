//! The dictionary between level-`n` closed diagram sets and two-sided
//! ideals of the degree-`n` group algebra.
//!
//! A level-`n` set is determined by its top layer: a diagram of size at
//! most `n` belongs exactly when every size-`n` diagram above it does. On
//! the algebra side the ideal is generated by the central idempotents of
//! the top layer, and membership of a smaller diagram's embedded idempotent
//! recovers the set.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{central_idempotent, AlgebraElement, AlgebraError};
use crate::characters::dimension;
use crate::closure::{closure, ClosureError, DiagramSet};
use crate::diagram::{enumerate_diagrams, Diagram, SizeRange};
use crate::ideal::{ideal_generated, IdealBasis};

/// Errors from the level-`n` dictionary.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorrespondenceError {
    /// Top layers consist of diagrams of size exactly the level.
    #[error("top layer diagram {diagram} does not have size {level}")]
    WrongTopSize { diagram: Diagram, level: u32 },
    /// Queries are limited to diagrams that fit under the level.
    #[error("diagram {diagram} exceeds level {level}")]
    SizeExceedsLevel { diagram: Diagram, level: u32 },
    /// The level must reach the generators involved.
    #[error("level {level} is below the largest generator size {needed}")]
    LevelTooSmall { level: u32, needed: u32 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Closure(#[from] ClosureError),
}

/// A level-`n` closed set: diagrams of size at most `n`, membership
/// determined by the size-`n` top layer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NClosedSet {
    level: u32,
    members: DiagramSet,
}

impl NClosedSet {
    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn members(&self) -> &DiagramSet {
        &self.members
    }

    pub fn contains(&self, d: &Diagram) -> bool {
        self.members.contains(d)
    }

    /// The members of size exactly the level.
    pub fn top_layer(&self) -> DiagramSet {
        self.members.iter().filter(|d| d.size() == self.level).cloned().collect()
    }
}

/// The level-`n` set with the given top layer: a diagram of size at most
/// `n` is a member exactly when every size-`n` diagram containing it lies
/// in `top`. The empty top layer yields the empty set.
pub fn n_closed_from_top(top: &DiagramSet, level: u32) -> Result<NClosedSet, CorrespondenceError> {
    for d in top.iter() {
        if d.size() != level {
            return Err(CorrespondenceError::WrongTopSize { diagram: d.clone(), level });
        }
    }
    let level_layer = enumerate_diagrams(level, SizeRange::Exact);
    let members = enumerate_diagrams(level, SizeRange::UpTo)
        .into_iter()
        .filter(|e| level_layer.iter().filter(|d| e.leq(d)).all(|d| top.contains(d)))
        .collect();
    Ok(NClosedSet { level, members })
}

/// The truncation of the closed set generated by `s` to sizes at most `n`.
/// The level must reach the largest minimal generator of the closure, so
/// that the truncation carries the whole generating antichain.
pub fn truncate_closure(s: &DiagramSet, level: u32) -> Result<NClosedSet, CorrespondenceError> {
    let cl = closure(s)?;
    let needed = cl.generators().iter().map(Diagram::size).max().unwrap_or(0);
    if level < needed {
        return Err(CorrespondenceError::LevelTooSmall { level, needed });
    }
    let members: DiagramSet = enumerate_diagrams(level, SizeRange::UpTo)
        .into_iter()
        .filter(|e| cl.contains(e))
        .collect();
    Ok(NClosedSet { level, members })
}

/// The two-sided ideal generated by the central idempotents of the top
/// layer. Its rank is the sum of the squared dimensions of the top shapes,
/// which the construction checks.
pub fn ideal_of_diagram_set(set: &NClosedSet) -> Result<IdealBasis, CorrespondenceError> {
    let top = set.top_layer();
    if top.is_empty() {
        return Ok(IdealBasis::zero(set.level));
    }
    let gens: Vec<AlgebraElement> = top.iter().map(central_idempotent).collect();
    let basis = ideal_generated(&gens)?;
    let expected: u64 = top.iter().map(|d| dimension(d) * dimension(d)).sum();
    assert_eq!(basis.rank() as u64, expected, "central idempotents span full blocks");
    Ok(basis)
}

/// The level-`n` set of a two-sided ideal: diagrams whose embedded central
/// idempotent lies in the ideal. Errors on row spaces that are not
/// two-sided ideals; the result is checked to be determined by its top
/// layer.
pub fn diagram_set_of_ideal(basis: &IdealBasis) -> Result<NClosedSet, CorrespondenceError> {
    if !basis.is_two_sided() {
        return Err(CorrespondenceError::Algebra(AlgebraError::NotAnIdeal(basis.degree())));
    }
    let level = basis.degree();
    let mut members = DiagramSet::new();
    for e in enumerate_diagrams(level, SizeRange::UpTo) {
        if basis.contains_element(&central_idempotent(&e).embed(level)?)? {
            members.insert(e);
        }
    }
    let set = NClosedSet { level, members };
    debug_assert_eq!(n_closed_from_top(&set.top_layer(), level)?, set);
    Ok(set)
}

/// Branching consistency at level `n`: the ideal generated by the embedded
/// idempotent of `e` equals the ideal generated by the idempotents of all
/// size-`n` diagrams containing `e`.
pub fn branching_check(e: &Diagram, n: u32) -> Result<bool, CorrespondenceError> {
    if e.size() > n {
        return Err(CorrespondenceError::SizeExceedsLevel { diagram: e.clone(), level: n });
    }
    let embedded = ideal_generated(&[central_idempotent(e).embed(n)?])?;
    let above: Vec<AlgebraElement> = enumerate_diagrams(n, SizeRange::Exact)
        .into_iter()
        .filter(|d| e.leq(d))
        .map(|d| central_idempotent(&d))
        .collect();
    let layer = ideal_generated(&above)?;
    Ok(embedded.equals(&layer))
}

/// Level-by-level consistency of the closed set generated by `s`: the
/// truncation at `level` is determined by its top layer, and its ideal
/// embeds into the ideal of the truncation one level up.
pub fn truncation_consistency(
    s: &DiagramSet,
    level: u32,
) -> Result<bool, CorrespondenceError> {
    let t = truncate_closure(s, level)?;
    if n_closed_from_top(&t.top_layer(), level)? != t {
        return Ok(false);
    }
    let here = ideal_of_diagram_set(&t)?;
    let up = ideal_of_diagram_set(&truncate_closure(s, level + 1)?)?;
    for row in here.basis_elements() {
        if !up.contains_element(&row.embed(level + 1)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::factorial;

    fn d(rows: &[i64]) -> Diagram {
        Diagram::new(rows).unwrap()
    }

    fn set(items: &[&[i64]]) -> DiagramSet {
        items.iter().map(|rows| d(rows)).collect()
    }

    #[test]
    fn top_layer_determines_members() {
        let t = n_closed_from_top(&set(&[&[2]]), 2).unwrap();
        assert_eq!(t.members(), &set(&[&[2]]));

        let t = n_closed_from_top(&set(&[&[2], &[1, 1]]), 2).unwrap();
        assert_eq!(t.members(), &set(&[&[1], &[2], &[1, 1]]));

        let t = n_closed_from_top(&DiagramSet::new(), 3).unwrap();
        assert!(t.members().is_empty());

        let everything = n_closed_from_top(&set(&[&[3], &[2, 1], &[1, 1, 1]]), 3).unwrap();
        assert_eq!(everything.members().len(), 1 + 2 + 3);

        assert_eq!(
            n_closed_from_top(&set(&[&[2]]), 3),
            Err(CorrespondenceError::WrongTopSize { diagram: d(&[2]), level: 3 })
        );
    }

    #[test]
    fn truncation_of_a_closure() {
        let t = truncate_closure(&set(&[&[2, 2]]), 4).unwrap();
        assert_eq!(t.members(), &set(&[&[2, 2]]));
        assert_eq!(t.top_layer(), set(&[&[2, 2]]));

        let t5 = truncate_closure(&set(&[&[2, 2]]), 5).unwrap();
        assert_eq!(t5.members(), &set(&[&[2, 2], &[3, 2], &[2, 2, 1]]));

        assert_eq!(
            truncate_closure(&set(&[&[2, 2]]), 3),
            Err(CorrespondenceError::LevelTooSmall { level: 3, needed: 4 })
        );

        // The level floor tracks the closure's generators, not the inputs:
        // cl{(4,2),(2,2,1,1)} is generated by (2,2) alone, so level 4 works
        // even though both inputs have size 6.
        let t = truncate_closure(&set(&[&[4, 2], &[2, 2, 1, 1]]), 4).unwrap();
        assert_eq!(t.members(), &set(&[&[2, 2]]));
    }

    #[test]
    fn closure_truncation_strictly_exceeds_plain_upward_closure() {
        // ucl{(4,2),(2,2,1,1)} has no member of size <= 4, but its closure
        // does; the two level-4 ideals separate the sets algebraically.
        let s = set(&[&[4, 2], &[2, 2, 1, 1]]);
        let closed = truncate_closure(&s, 4).unwrap();
        let plain = NClosedSet { level: 4, members: DiagramSet::new() };
        assert_ne!(closed, plain);

        let closed_ideal = ideal_of_diagram_set(&closed).unwrap();
        let plain_ideal = ideal_of_diagram_set(&plain).unwrap();
        assert_eq!(closed_ideal.rank(), 4);
        assert_eq!(plain_ideal.rank(), 0);
        assert!(!closed_ideal.equals(&plain_ideal));
    }

    #[test]
    fn ideal_round_trip_small() {
        for level in 1..=3u32 {
            let layer = enumerate_diagrams(level, SizeRange::Exact);
            for mask in 0..(1u32 << layer.len()) {
                let top: DiagramSet = layer
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, d)| d.clone())
                    .collect();
                let t = n_closed_from_top(&top, level).unwrap();
                let basis = ideal_of_diagram_set(&t).unwrap();
                assert_eq!(diagram_set_of_ideal(&basis).unwrap(), t);
            }
        }
    }

    #[test]
    fn full_top_layer_gives_whole_algebra() {
        let layer: DiagramSet = enumerate_diagrams(3, SizeRange::Exact).into_iter().collect();
        let t = n_closed_from_top(&layer, 3).unwrap();
        let basis = ideal_of_diagram_set(&t).unwrap();
        assert_eq!(basis.rank() as u64, factorial(3));
    }

    #[test]
    fn membership_example_at_level_two() {
        let t = n_closed_from_top(&set(&[&[2]]), 2).unwrap();
        let basis = ideal_of_diagram_set(&t).unwrap();
        assert_eq!(basis.rank(), 1);
        let back = diagram_set_of_ideal(&basis).unwrap();
        assert!(back.contains(&d(&[2])));
        assert!(!back.contains(&d(&[1])));
        assert!(!back.contains(&d(&[1, 1])));
    }

    #[test]
    fn branching_examples() {
        assert!(branching_check(&d(&[2]), 3).unwrap());
        assert!(branching_check(&d(&[1]), 3).unwrap());
        assert!(branching_check(&d(&[2, 1]), 3).unwrap());
        assert_eq!(
            branching_check(&d(&[2, 2]), 3),
            Err(CorrespondenceError::SizeExceedsLevel { diagram: d(&[2, 2]), level: 3 })
        );
    }

    #[test]
    fn truncation_consistency_examples() {
        assert!(truncation_consistency(&set(&[&[2, 2]]), 4).unwrap());
        assert!(truncation_consistency(&set(&[&[2], &[1, 1]]), 3).unwrap());
        assert!(truncation_consistency(&set(&[&[1]]), 2).unwrap());
    }

    #[test]
    fn non_ideal_input_is_rejected() {
        use crate::algebra::Rational;
        use crate::ideal::element_to_vector;
        use crate::perm::Permutation;
        let x = AlgebraElement::from_term(
            Permutation::new(&[2, 1, 3]).unwrap(),
            "1".parse::<Rational>().unwrap(),
        );
        let js = serde_json::json!({
            "degree": 3,
            "rank": 1,
            "rows": [element_to_vector(&x).iter().map(|r| r.to_string()).collect::<Vec<_>>()],
        });
        let basis: IdealBasis = serde_json::from_value(js).unwrap();
        assert!(matches!(
            diagram_set_of_ideal(&basis),
            Err(CorrespondenceError::Algebra(AlgebraError::NotAnIdeal(3)))
        ));
    }
}
