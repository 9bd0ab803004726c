//! The rational group algebra of a symmetric group: sparse exact-rational
//! combinations of permutations under convolution.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::characters::{character, dimension, factorial_big};
use crate::diagram::Diagram;
use crate::perm::{all_permutations, Permutation};

/// Exact scalar type for all algebra computations.
pub type Rational = BigRational;

/// Errors from group algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// Binary operations need operands over the same symmetric group.
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),
    /// Characters pair a shape with a class of the same size.
    #[error("shape {shape} and class {class} have different sizes")]
    SizeMismatch { shape: Diagram, class: Diagram },
    /// Embedding never lowers the degree.
    #[error("cannot embed degree {from} into smaller degree {to}")]
    DegreeShrink { from: u32, to: u32 },
    /// An ideal needs at least one generator.
    #[error("ideal construction needs at least one generator")]
    NoGenerators,
    /// The row space is not closed under multiplication by the group.
    #[error("row space of degree {0} is not a two-sided ideal")]
    NotAnIdeal(u32),
    /// Serialized elements must be nonempty term lists.
    #[error("cannot read an element from an empty term list")]
    EmptyTermList,
    /// Coefficients travel as exact rational strings.
    #[error("bad rational coefficient {0:?}")]
    BadCoefficient(String),
}

/// An element of the rational group algebra of `S_n`: a finitely supported
/// map from permutations to nonzero rationals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<TermWire>", into = "Vec<TermWire>")]
pub struct AlgebraElement {
    degree: u32,
    terms: BTreeMap<Permutation, Rational>,
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    perm: Permutation,
    coeff: String,
}

impl AlgebraElement {
    /// The zero element of degree `n`.
    pub fn zero(n: u32) -> Self {
        AlgebraElement { degree: n, terms: BTreeMap::new() }
    }

    /// The multiplicative identity of degree `n`.
    pub fn identity(n: u32) -> Self {
        AlgebraElement::from_term(Permutation::identity(n), Rational::one())
    }

    /// A single term; a zero coefficient yields the zero element.
    pub fn from_term(perm: Permutation, coeff: Rational) -> Self {
        let degree = perm.degree();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(perm, coeff);
        }
        AlgebraElement { degree, terms }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of `g`, zero when absent.
    pub fn coeff(&self, g: &Permutation) -> Rational {
        self.terms.get(g).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in lexicographic permutation order; coefficients are nonzero.
    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Rational)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.check_degree(other)?;
        let mut terms = self.terms.clone();
        for (g, c) in &other.terms {
            let entry = terms.entry(g.clone()).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(g);
            }
        }
        Ok(AlgebraElement { degree: self.degree, terms })
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, by: &Rational) -> AlgebraElement {
        if by.is_zero() {
            return AlgebraElement::zero(self.degree);
        }
        AlgebraElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(g, c)| (g.clone(), c * by)).collect(),
        }
    }

    /// Convolution: the coefficient of `gh` picks up `a_g * b_h`.
    pub fn mul(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.check_degree(other)?;
        let mut terms: BTreeMap<Permutation, Rational> = BTreeMap::new();
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                let gh = g.compose(h);
                let entry = terms.entry(gh).or_insert_with(Rational::zero);
                *entry += a * b;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(AlgebraElement { degree: self.degree, terms })
    }

    /// Pushes the element into a larger group algebra along the embedding
    /// that fixes the new points.
    pub fn embed(&self, n: u32) -> Result<AlgebraElement, AlgebraError> {
        if n < self.degree {
            return Err(AlgebraError::DegreeShrink { from: self.degree, to: n });
        }
        Ok(AlgebraElement {
            degree: n,
            terms: self.terms.iter().map(|(g, c)| (g.extend(n), c.clone())).collect(),
        })
    }

    fn check_degree(&self, other: &AlgebraElement) -> Result<(), AlgebraError> {
        if self.degree != other.degree {
            return Err(AlgebraError::DegreeMismatch(self.degree, other.degree));
        }
        Ok(())
    }
}

impl TryFrom<Vec<TermWire>> for AlgebraElement {
    type Error = AlgebraError;

    fn try_from(wire: Vec<TermWire>) -> Result<Self, Self::Error> {
        let first = wire.first().ok_or(AlgebraError::EmptyTermList)?;
        let degree = first.perm.degree();
        let mut terms = BTreeMap::new();
        for t in wire {
            if t.perm.degree() != degree {
                return Err(AlgebraError::DegreeMismatch(degree, t.perm.degree()));
            }
            let coeff: Rational =
                t.coeff.parse().map_err(|_| AlgebraError::BadCoefficient(t.coeff.clone()))?;
            if !coeff.is_zero() {
                let entry = terms.entry(t.perm).or_insert_with(Rational::zero);
                *entry += coeff;
            }
        }
        terms.retain(|_, c: &mut Rational| !c.is_zero());
        Ok(AlgebraElement { degree, terms })
    }
}

impl From<AlgebraElement> for Vec<TermWire> {
    fn from(e: AlgebraElement) -> Vec<TermWire> {
        e.terms
            .into_iter()
            .map(|(perm, coeff)| TermWire { perm, coeff: coeff.to_string() })
            .collect()
    }
}

/// The central idempotent attached to a shape: the dimension-weighted
/// character sum `(dim/n!) * sum_g chi(type(g)) g` over the symmetric group
/// of degree `|shape|`.
pub fn central_idempotent(shape: &Diagram) -> AlgebraElement {
    let n = shape.size();
    let lead = Rational::new(dimension(shape).into(), factorial_big(n));
    let mut terms = BTreeMap::new();
    for g in all_permutations(n) {
        let chi = character(shape, &g.cycle_type()).expect("cycle type has matching size");
        if chi != 0 {
            terms.insert(g, &lead * Rational::from_integer(chi.into()));
        }
    }
    AlgebraElement { degree: n, terms }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{enumerate_diagrams, SizeRange};

    fn p(images: &[i64]) -> Permutation {
        Permutation::new(images).unwrap()
    }

    fn d(rows: &[i64]) -> Diagram {
        Diagram::new(rows).unwrap()
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_basics() {
        let a = AlgebraElement::from_term(p(&[2, 1]), q("1/2"));
        let b = AlgebraElement::from_term(p(&[1, 2]), q("1/2"));
        let s = a.add(&b).unwrap();
        assert_eq!(s.coeff(&p(&[2, 1])), q("1/2"));
        assert!(s.sub(&s).unwrap().is_zero());

        // (1/2)(e + (12)) squares to itself
        assert_eq!(s.mul(&s).unwrap(), s);

        assert_eq!(
            a.add(&AlgebraElement::identity(3)),
            Err(AlgebraError::DegreeMismatch(2, 3))
        );
    }

    #[test]
    fn convolution_follows_the_group() {
        let x = AlgebraElement::from_term(p(&[2, 3, 1]), Rational::one());
        let y = AlgebraElement::from_term(p(&[2, 1, 3]), Rational::one());
        let xy = x.mul(&y).unwrap();
        assert_eq!(xy.coeff(&p(&[2, 3, 1]).compose(&p(&[2, 1, 3]))), Rational::one());
        assert_eq!(xy.terms().count(), 1);

        let e = AlgebraElement::identity(3);
        assert_eq!(x.mul(&e).unwrap(), x);
        assert_eq!(e.mul(&x).unwrap(), x);
    }

    #[test]
    fn embed_is_a_homomorphism() {
        let x = AlgebraElement::from_term(p(&[2, 1]), q("2/3"));
        let y = AlgebraElement::from_term(p(&[2, 1]), q("3"));
        let both = x.mul(&y).unwrap().embed(4).unwrap();
        assert_eq!(both, x.embed(4).unwrap().mul(&y.embed(4).unwrap()).unwrap());
        assert_eq!(
            x.embed(1),
            Err(AlgebraError::DegreeShrink { from: 2, to: 1 })
        );
    }

    #[test]
    fn idempotent_values_for_degree_three() {
        let e = central_idempotent(&d(&[2, 1]));
        assert_eq!(e.coeff(&p(&[1, 2, 3])), q("2/3"));
        assert_eq!(e.coeff(&p(&[2, 1, 3])), q("0"));
        assert_eq!(e.coeff(&p(&[2, 3, 1])), q("-1/3"));

        let trivial = central_idempotent(&d(&[3]));
        for (_, c) in trivial.terms() {
            assert_eq!(c, &q("1/6"));
        }
    }

    #[test]
    fn idempotent_system_for_degree_three() {
        let shapes = enumerate_diagrams(3, SizeRange::Exact);
        let es: Vec<AlgebraElement> = shapes.iter().map(central_idempotent).collect();
        let mut total = AlgebraElement::zero(3);
        for (i, a) in es.iter().enumerate() {
            assert_eq!(&a.mul(a).unwrap(), a);
            for (j, b) in es.iter().enumerate() {
                if i != j {
                    assert!(a.mul(b).unwrap().is_zero());
                }
            }
            total = total.add(a).unwrap();
        }
        assert_eq!(total, AlgebraElement::identity(3));
    }

    #[test]
    fn json_round_trip() {
        let x = AlgebraElement::from_term(p(&[2, 1]), q("-1/2"))
            .add(&AlgebraElement::identity(2))
            .unwrap();
        let js = serde_json::to_string(&x).unwrap();
        assert_eq!(js, r#"[{"perm":[1,2],"coeff":"1"},{"perm":[2,1],"coeff":"-1/2"}]"#);
        assert_eq!(serde_json::from_str::<AlgebraElement>(&js).unwrap(), x);
        assert!(serde_json::from_str::<AlgebraElement>("[]").is_err());
        assert!(
            serde_json::from_str::<AlgebraElement>(r#"[{"perm":[1,2],"coeff":"0.5"}]"#).is_err()
        );
    }
}
