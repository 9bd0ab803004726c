//! Two-sided ideals of the rational symmetric group algebra, represented by
//! reduced row-echelon bases. Columns are indexed by the lexicographic order
//! on one-line notation, so the reduced basis of a subspace is unique and
//! ideal equality is row-list equality.

use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, AlgebraError, Rational};
use crate::characters::factorial;
use crate::perm::{all_permutations, Permutation};

/// Left and right translation tables for the adjacent transpositions of a
/// fixed degree: translating a basis vector is a permutation of columns.
struct GroupTables {
    perms: Vec<Permutation>,
    /// `left[t][c]` is the column of `transposition_t * perms[c]`
    left: Vec<Vec<usize>>,
    /// `right[t][c]` is the column of `perms[c] * transposition_t`
    right: Vec<Vec<usize>>,
}

fn group_tables(n: u32) -> Arc<GroupTables> {
    static TABLES: OnceLock<Mutex<HashMap<u32, Arc<GroupTables>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = tables.lock().unwrap().get(&n) {
        return t.clone();
    }
    let perms = all_permutations(n);
    let mut left = Vec::new();
    let mut right = Vec::new();
    for i in 1..n {
        let t = Permutation::adjacent_transposition(n, i);
        left.push(perms.iter().map(|g| t.compose(g).lex_rank()).collect());
        right.push(perms.iter().map(|g| g.compose(&t).lex_rank()).collect());
    }
    let built = Arc::new(GroupTables { perms, left, right });
    let mut guard = tables.lock().unwrap();
    guard.entry(n).or_insert(built).clone()
}

/// A subspace of the degree-`n` group algebra in reduced row-echelon form.
/// [`ideal_generated`] produces bases closed under multiplication by the
/// whole algebra on both sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "IdealWire", into = "IdealWire")]
pub struct IdealBasis {
    degree: u32,
    /// rows with strictly increasing pivot columns, each fully reduced
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct IdealWire {
    degree: u32,
    rank: usize,
    rows: Vec<Vec<String>>,
}

impl IdealBasis {
    /// The zero ideal of degree `n`.
    pub fn zero(n: u32) -> Self {
        IdealBasis { degree: n, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Basis rows as algebra elements, pivot order.
    pub fn basis_elements(&self) -> Vec<AlgebraElement> {
        self.rows.iter().map(|r| vector_to_element(self.degree, r)).collect()
    }

    /// Reduces `v` in place against the basis; `v` becomes zero exactly
    /// when the original vector lay in the row space.
    fn reduce(&self, v: &mut [Rational]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = v[p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &c * y;
                    }
                }
                debug_assert!(v[p].is_zero());
            }
        }
    }

    /// Inserts `v`, keeping reduced echelon form; reports whether the rank
    /// grew and, if so, hands back a copy of the inserted row.
    fn insert(&mut self, mut v: Vec<Rational>) -> Option<Vec<Rational>> {
        self.reduce(&mut v);
        let pivot = v.iter().position(|x| !x.is_zero())?;
        let lead = v[pivot].clone();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x /= &lead;
            }
        }
        for (row, &p) in self.rows.iter_mut().zip(&self.pivots) {
            debug_assert_ne!(p, pivot);
            if !row[pivot].is_zero() {
                let c = row[pivot].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    if !y.is_zero() {
                        *x -= &c * y;
                    }
                }
                debug_assert!(row[pivot].is_zero());
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, v.clone());
        Some(v)
    }

    /// Whether the element lies in the row space.
    pub fn contains_element(&self, e: &AlgebraElement) -> Result<bool, AlgebraError> {
        if e.degree() != self.degree {
            return Err(AlgebraError::DegreeMismatch(self.degree, e.degree()));
        }
        let mut v = element_to_vector(e);
        self.reduce(&mut v);
        Ok(v.iter().all(Zero::is_zero))
    }

    /// Whether every row of `other` lies in this row space.
    pub fn contains(&self, other: &IdealBasis) -> Result<bool, AlgebraError> {
        if other.degree != self.degree {
            return Err(AlgebraError::DegreeMismatch(self.degree, other.degree));
        }
        Ok(other.rows.iter().all(|r| {
            let mut v = r.clone();
            self.reduce(&mut v);
            v.iter().all(Zero::is_zero)
        }))
    }

    /// Reduced echelon bases are unique per subspace, so equality of row
    /// lists is equality of ideals.
    pub fn equals(&self, other: &IdealBasis) -> bool {
        self == other
    }

    /// Whether the row space is closed under multiplication by adjacent
    /// transpositions on both sides, hence a two-sided ideal.
    pub fn is_two_sided(&self) -> bool {
        let tables = group_tables(self.degree);
        self.rows.iter().all(|row| {
            tables.left.iter().chain(&tables.right).all(|table| {
                let mut moved = translate(row, table);
                self.reduce(&mut moved);
                moved.iter().all(Zero::is_zero)
            })
        })
    }
}

impl TryFrom<IdealWire> for IdealBasis {
    type Error = AlgebraError;

    fn try_from(w: IdealWire) -> Result<Self, Self::Error> {
        let dim = factorial(w.degree) as usize;
        let mut basis = IdealBasis::zero(w.degree);
        for row in &w.rows {
            if row.len() != dim {
                return Err(AlgebraError::DegreeMismatch(w.degree, row.len() as u32));
            }
            let parsed = row
                .iter()
                .map(|s| s.parse().map_err(|_| AlgebraError::BadCoefficient(s.clone())))
                .collect::<Result<Vec<Rational>, _>>()?;
            basis.insert(parsed);
        }
        if basis.rank() != w.rank {
            return Err(AlgebraError::BadCoefficient(format!(
                "rank {} does not match {} independent rows",
                w.rank,
                basis.rank()
            )));
        }
        Ok(basis)
    }
}

impl From<IdealBasis> for IdealWire {
    fn from(b: IdealBasis) -> IdealWire {
        IdealWire {
            degree: b.degree,
            rank: b.rows.len(),
            rows: b
                .rows
                .iter()
                .map(|r| r.iter().map(Rational::to_string).collect())
                .collect(),
        }
    }
}

/// A dense coefficient vector over the lexicographic permutation listing.
pub fn element_to_vector(e: &AlgebraElement) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); factorial(e.degree()) as usize];
    for (g, c) in e.terms() {
        v[g.lex_rank()] = c.clone();
    }
    v
}

/// The algebra element of a dense coefficient vector over the
/// lexicographic permutation listing.
pub fn vector_to_element(degree: u32, v: &[Rational]) -> AlgebraElement {
    let perms = &group_tables(degree).perms;
    let mut e = AlgebraElement::zero(degree);
    for (c, x) in v.iter().enumerate() {
        if !x.is_zero() {
            e = e
                .add(&AlgebraElement::from_term(perms[c].clone(), x.clone()))
                .expect("degrees agree");
        }
    }
    e
}

fn translate(row: &[Rational], table: &[usize]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); row.len()];
    for (c, x) in row.iter().enumerate() {
        if !x.is_zero() {
            out[table[c]] = x.clone();
        }
    }
    out
}

/// The two-sided ideal generated by `gens`: the span is saturated under
/// left and right multiplication by adjacent transpositions, which generate
/// the group and hence the algebra.
pub fn ideal_generated(gens: &[AlgebraElement]) -> Result<IdealBasis, AlgebraError> {
    let degree = gens.first().ok_or(AlgebraError::NoGenerators)?.degree();
    for g in gens {
        if g.degree() != degree {
            return Err(AlgebraError::DegreeMismatch(degree, g.degree()));
        }
    }
    let tables = group_tables(degree);
    let mut basis = IdealBasis::zero(degree);
    let mut queue: VecDeque<Vec<Rational>> = gens.iter().map(element_to_vector).collect();
    while let Some(v) = queue.pop_front() {
        if let Some(accepted) = basis.insert(v) {
            for table in tables.left.iter().chain(&tables.right) {
                queue.push_back(translate(&accepted, table));
            }
        }
    }
    debug_assert!(basis.is_two_sided());
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::central_idempotent;
    use crate::characters::dimension;
    use crate::diagram::{enumerate_diagrams, Diagram, SizeRange};

    fn d(rows: &[i64]) -> Diagram {
        Diagram::new(rows).unwrap()
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn single_symmetrizer_at_degree_two() {
        let e = central_idempotent(&d(&[2]));
        let basis = ideal_generated(&[e.clone()]).unwrap();
        assert_eq!(basis.rank(), 1);
        assert!(basis.contains_element(&e).unwrap());
        assert!(!basis.contains_element(&AlgebraElement::identity(2)).unwrap());
        assert!(basis.is_two_sided());
    }

    #[test]
    fn identity_generates_everything() {
        for n in 2..=4 {
            let whole = ideal_generated(&[AlgebraElement::identity(n)]).unwrap();
            assert_eq!(whole.rank() as u64, factorial(n));
        }
    }

    #[test]
    fn idempotent_ideal_rank_is_dimension_squared() {
        for n in 2..=4 {
            for shape in enumerate_diagrams(n, SizeRange::Exact) {
                let basis = ideal_generated(&[central_idempotent(&shape)]).unwrap();
                let f = dimension(&shape);
                assert_eq!(basis.rank() as u64, f * f, "shape {shape}");
                assert!(basis.is_two_sided());
            }
        }
    }

    #[test]
    fn generator_order_does_not_matter() {
        let a = central_idempotent(&d(&[3]));
        let b = central_idempotent(&d(&[2, 1]));
        let ab = ideal_generated(&[a.clone(), b.clone()]).unwrap();
        let ba = ideal_generated(&[b.clone(), a.clone()]).unwrap();
        assert!(ab.equals(&ba));
        let sum = ideal_generated(&[a.add(&b).unwrap()]).unwrap();
        assert!(ab.equals(&sum));
        assert!(ab.contains(&ideal_generated(&[a]).unwrap()).unwrap());
    }

    #[test]
    fn ideal_membership_splits_by_block() {
        // (1/2)(e + (12)) embedded into degree 3 meets the trivial and
        // standard blocks but not the sign block
        let x = central_idempotent(&d(&[2])).embed(3).unwrap();
        let basis = ideal_generated(&[x]).unwrap();
        assert_eq!(basis.rank(), 1 + 4);
        assert!(basis.contains_element(&central_idempotent(&d(&[3]))).unwrap());
        assert!(!basis
            .contains_element(&central_idempotent(&d(&[1, 1, 1])))
            .unwrap());
    }

    #[test]
    fn errors() {
        assert_eq!(ideal_generated(&[]), Err(AlgebraError::NoGenerators));
        let mixed = [AlgebraElement::identity(2), AlgebraElement::identity(3)];
        assert_eq!(ideal_generated(&mixed), Err(AlgebraError::DegreeMismatch(2, 3)));
        let basis = IdealBasis::zero(2);
        assert_eq!(
            basis.contains_element(&AlgebraElement::identity(3)),
            Err(AlgebraError::DegreeMismatch(2, 3))
        );
    }

    #[test]
    fn non_ideal_subspace_is_detected() {
        // the line through a single non-central permutation term is not
        // closed under translation
        let mut basis = IdealBasis::zero(3);
        let x = AlgebraElement::from_term(Permutation::new(&[2, 1, 3]).unwrap(), q("1"));
        basis.insert(element_to_vector(&x));
        assert!(!basis.is_two_sided());
    }

    #[test]
    fn json_round_trip() {
        let basis = ideal_generated(&[central_idempotent(&d(&[2]))]).unwrap();
        let js = serde_json::to_string(&basis).unwrap();
        assert!(js.contains(r#""degree":2"#) && js.contains(r#""rank":1"#));
        assert_eq!(serde_json::from_str::<IdealBasis>(&js).unwrap(), basis);

        // a spanning set that is not in echelon form canonicalizes on entry
        let loose: IdealBasis = serde_json::from_str(
            r#"{"degree":2,"rank":1,"rows":[["2","2"]]}"#,
        )
        .unwrap();
        assert_eq!(loose, basis);
        assert!(serde_json::from_str::<IdealBasis>(
            r#"{"degree":2,"rank":2,"rows":[["1","1"]]}"#
        )
        .is_err());
    }
}
