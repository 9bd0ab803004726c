//! Rational symmetric-group algebra: dimension and character identities,
//! the central idempotent laws, and two-sided ideal ranks.

use rand::Rng;
use rayon::prelude::*;
use serde_json::json;

use super::{random_element, report, rng_for, CheckReport, VerifyParams};
use crate::algebra::{central_idempotent, AlgebraElement, Rational};
use crate::characters::{character_table, class_size, dimension, factorial};
use crate::diagram::{enumerate_diagrams, Diagram, SizeRange};
use crate::ideal::ideal_generated;
use crate::perm::{all_permutations, Permutation};

pub(super) fn checks() -> Vec<Box<dyn Fn(&VerifyParams) -> CheckReport + Sync + Send>> {
    vec![
        Box::new(dimension_squares),
        Box::new(character_orthogonality),
        Box::new(idempotent_suite),
        Box::new(ideal_ranks),
        Box::new(random_ideal_support),
    ]
}

/// Standard fillings counted independently by corner removal. A box at the
/// end of row `i` can be removed when the next row is strictly shorter.
fn tableaux_count(rows: &mut Vec<u32>) -> u64 {
    if rows.is_empty() {
        return 1;
    }
    let mut total = 0;
    for i in 0..rows.len() {
        if i + 1 == rows.len() || rows[i] > rows[i + 1] {
            if rows[i] == 1 {
                rows.pop();
                total += tableaux_count(rows);
                rows.push(1);
            } else {
                rows[i] -= 1;
                total += tableaux_count(rows);
                rows[i] += 1;
            }
        }
    }
    total
}

/// The hook-length dimension matches the corner-removal count of standard
/// fillings, and the dimension squares sum to the group order.
fn dimension_squares(params: &VerifyParams) -> CheckReport {
    let ns: Vec<u32> = (1..=params.max_n).collect();
    let cx = ns.par_iter().find_map_first(|&n| {
        let shapes = enumerate_diagrams(n, SizeRange::Exact);
        for shape in &shapes {
            let mut rows = shape.rows().to_vec();
            let counted = tableaux_count(&mut rows);
            if dimension(shape) != counted {
                return Some(json!({
                    "shape": shape,
                    "hook_length": dimension(shape),
                    "corner_removal": counted,
                }));
            }
        }
        let sum: u64 = shapes.iter().map(|s| dimension(s) * dimension(s)).sum();
        if sum != factorial(n) {
            return Some(json!({ "n": n, "dimension_square_sum": sum }));
        }
        None
    });
    report("dimension-squares", params.max_n as u64, cx)
}

/// Row and column orthogonality of the character table, with class sizes
/// recounted from the permutations themselves.
fn character_orthogonality(params: &VerifyParams) -> CheckReport {
    let ns: Vec<u32> = (1..=params.max_n).collect();
    let cx = ns.par_iter().find_map_first(|&n| {
        let table = character_table(n);
        let shapes = table.shapes().to_vec();
        let perms = all_permutations(n);
        for class in &shapes {
            let counted = perms.iter().filter(|g| g.cycle_type() == *class).count() as u64;
            if counted != table.class_size(class) || counted != class_size(class) {
                return Some(json!({
                    "class": class,
                    "counted": counted,
                    "table": table.class_size(class),
                    "formula": class_size(class),
                }));
            }
        }
        let order = factorial(n);
        for a in &shapes {
            for b in &shapes {
                let row: i64 = shapes
                    .iter()
                    .map(|c| table.class_size(c) as i64 * table.value(a, c) * table.value(b, c))
                    .sum();
                let expected = if a == b { order as i64 } else { 0 };
                if row != expected {
                    return Some(json!({ "law": "rows", "a": a, "b": b, "sum": row }));
                }
                let col: i64 =
                    shapes.iter().map(|s| table.value(s, a) * table.value(s, b)).sum();
                let expected =
                    if a == b { (order / table.class_size(a)) as i64 } else { 0 };
                if col != expected {
                    return Some(json!({ "law": "columns", "a": a, "b": b, "sum": col }));
                }
            }
        }
        None
    });
    report("character-orthogonality", params.max_n as u64, cx)
}

/// The central idempotents are orthogonal idempotents summing to the
/// identity and commuting with the adjacent transpositions.
fn idempotent_suite(params: &VerifyParams) -> CheckReport {
    let mut cases = 0u64;
    for n in 1..=params.max_n {
        let shapes = enumerate_diagrams(n, SizeRange::Exact);
        let es: Vec<AlgebraElement> = shapes.iter().map(central_idempotent).collect();
        cases += (es.len() * es.len()) as u64;

        let pairs: Vec<(usize, usize)> = (0..es.len())
            .flat_map(|i| (0..es.len()).map(move |j| (i, j)))
            .collect();
        let cx = pairs.par_iter().find_map_first(|&(i, j)| {
            let product = es[i].mul(&es[j]).expect("same degree");
            let holds =
                if i == j { product == es[i] } else { product.is_zero() };
            if !holds {
                return Some(json!({
                    "law": "orthogonal idempotents",
                    "a": shapes[i],
                    "b": shapes[j],
                }));
            }
            None
        });
        if cx.is_some() {
            return report("idempotent-suite", cases, cx);
        }

        let mut sum = AlgebraElement::zero(n);
        for e in &es {
            sum = sum.add(e).expect("same degree");
        }
        if sum != AlgebraElement::identity(n) {
            return report(
                "idempotent-suite",
                cases,
                Some(json!({ "law": "sum to identity", "n": n })),
            );
        }

        for (shape, e) in shapes.iter().zip(&es) {
            for i in 1..n {
                let t = AlgebraElement::from_term(
                    Permutation::adjacent_transposition(n, i),
                    Rational::from_integer(1.into()),
                );
                if e.mul(&t).expect("same degree") != t.mul(e).expect("same degree") {
                    return report(
                        "idempotent-suite",
                        cases,
                        Some(json!({ "law": "central", "shape": shape, "transposition": i })),
                    );
                }
            }
        }
    }
    report("idempotent-suite", cases, None)
}

/// The two-sided ideal of a single central idempotent has rank equal to
/// the squared dimension of its shape, and seeded families of idempotents
/// generate ideals of the summed rank.
fn ideal_ranks(params: &VerifyParams) -> CheckReport {
    let cap = params.max_n.min(5);
    let mut rng = rng_for(params.seed, "ideal-ranks");
    let mut cases = 0u64;
    for n in 1..=cap {
        let shapes = enumerate_diagrams(n, SizeRange::Exact);
        cases += shapes.len() as u64;
        let cx = shapes.par_iter().find_map_first(|shape| {
            let basis = match ideal_generated(&[central_idempotent(shape)]) {
                Ok(b) => b,
                Err(e) => return Some(json!({ "shape": shape, "error": e.to_string() })),
            };
            let expected = (dimension(shape) * dimension(shape)) as usize;
            if basis.rank() != expected || !basis.is_two_sided() {
                return Some(json!({
                    "shape": shape,
                    "rank": basis.rank(),
                    "expected": expected,
                    "two_sided": basis.is_two_sided(),
                }));
            }
            None
        });
        if cx.is_some() {
            return report("ideal-ranks", cases, cx);
        }

        let masks: Vec<u32> =
            (0..5).map(|_| rng.gen_range(0..1u32 << shapes.len())).collect();
        cases += masks.len() as u64;
        let cx = masks.par_iter().find_map_first(|&mask| {
            let chosen: Vec<&Diagram> = shapes
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, s)| s)
                .collect();
            if chosen.is_empty() {
                return None;
            }
            let gens: Vec<AlgebraElement> =
                chosen.iter().map(|s| central_idempotent(s)).collect();
            let basis = match ideal_generated(&gens) {
                Ok(b) => b,
                Err(e) => return Some(json!({ "mask": mask, "error": e.to_string() })),
            };
            let expected: u64 = chosen.iter().map(|s| dimension(s) * dimension(s)).sum();
            let members =
                gens.iter().map(|e| basis.contains_element(e).expect("same degree"));
            if basis.rank() as u64 != expected || !members.into_iter().all(|m| m) {
                return Some(json!({
                    "shapes": chosen,
                    "rank": basis.rank(),
                    "expected": expected,
                }));
            }
            None
        });
        if cx.is_some() {
            return report("ideal-ranks", cases, cx);
        }
    }
    report("ideal-ranks", cases, None)
}

/// The two-sided ideal of a random element is the ideal of the central
/// idempotents that do not annihilate it.
fn random_ideal_support(params: &VerifyParams) -> CheckReport {
    let cap = params.max_n.min(4);
    let mut rng = rng_for(params.seed, "random-ideal-support");
    let mut inputs: Vec<AlgebraElement> = Vec::new();
    for n in 1..=cap {
        inputs.extend((0..50).map(|_| random_element(&mut rng, n)));
    }
    let cases = inputs.len() as u64;
    let cx = inputs.par_iter().find_map_first(|x| {
        let n = x.degree();
        let support: Vec<AlgebraElement> = enumerate_diagrams(n, SizeRange::Exact)
            .iter()
            .map(central_idempotent)
            .filter(|e| !e.mul(x).expect("same degree").is_zero())
            .collect();
        let from_x = ideal_generated(&[x.clone()]).expect("nonempty");
        let from_support = match support.is_empty() {
            true => return Some(json!({ "x": x, "law": "nonzero element has support" })),
            false => ideal_generated(&support).expect("nonempty"),
        };
        if !from_x.equals(&from_support) {
            return Some(json!({
                "x": x,
                "rank_from_x": from_x.rank(),
                "rank_from_support": from_support.rank(),
            }));
        }
        None
    });
    report("random-ideal-support", cases, cx)
}
