//! Irreducible character values of symmetric groups, computed by the
//! border-strip recursion on first-column hook lengths, and dimensions by
//! the hook length formula. The two routes are independent and are checked
//! against each other.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use crate::algebra::AlgebraError;
use crate::diagram::{enumerate_diagrams, Diagram, SizeRange};

/// `n!` as a machine integer; fine for every degree this crate touches.
pub fn factorial(n: u32) -> u64 {
    (1..=n as u64).product()
}

/// `n!` as a big integer, for rational coefficients.
pub fn factorial_big(n: u32) -> BigInt {
    (1..=n as u64).map(BigInt::from).product()
}

/// The dimension of the irreducible representation of shape `shape`,
/// by the hook length formula.
pub fn dimension(shape: &Diagram) -> u64 {
    let conj = shape.conjugate();
    let mut hooks: u64 = 1;
    for (i, j) in shape.cells() {
        let arm = shape.row(i as usize) - j;
        let leg = conj.row(j as usize) - i;
        hooks *= (arm + leg + 1) as u64;
    }
    factorial(shape.size()) / hooks
}

/// The irreducible character of shape `shape` at the class of cycle type
/// `class`; the two diagrams must have equal size.
pub fn character(shape: &Diagram, class: &Diagram) -> Result<i64, AlgebraError> {
    if shape.size() != class.size() {
        return Err(AlgebraError::SizeMismatch {
            shape: shape.clone(),
            class: class.clone(),
        });
    }
    let table = character_table(shape.size());
    Ok(table.value(shape, class))
}

/// The full character table of the symmetric group of degree `n`, with
/// shapes and classes both listed in canonical diagram order.
#[derive(Debug)]
pub struct CharacterTable {
    degree: u32,
    shapes: Vec<Diagram>,
    /// `values[shape_index][class_index]`
    values: Vec<Vec<i64>>,
    class_sizes: Vec<u64>,
}

impl CharacterTable {
    fn new(n: u32) -> Self {
        assert!(n >= 1);
        let shapes = enumerate_diagrams(n, SizeRange::Exact);
        let mut values = vec![Vec::with_capacity(shapes.len()); shapes.len()];
        for class in &shapes {
            let mut memo = HashMap::new();
            for (si, shape) in shapes.iter().enumerate() {
                values[si].push(border_strip_char(shape.rows(), class.rows(), &mut memo));
            }
        }
        let class_sizes = shapes.iter().map(|c| class_size(c)).collect();
        CharacterTable { degree: n, shapes, values, class_sizes }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Shapes (and classes) in canonical order.
    pub fn shapes(&self) -> &[Diagram] {
        &self.shapes
    }

    pub fn value(&self, shape: &Diagram, class: &Diagram) -> i64 {
        let si = self.index_of(shape);
        let ci = self.index_of(class);
        self.values[si][ci]
    }

    pub fn class_size(&self, class: &Diagram) -> u64 {
        self.class_sizes[self.index_of(class)]
    }

    fn index_of(&self, shape: &Diagram) -> usize {
        self.shapes
            .binary_search(shape)
            .unwrap_or_else(|_| panic!("{shape} is not a shape of degree {}", self.degree))
    }
}

/// Cached character tables, built once per degree.
pub fn character_table(n: u32) -> Arc<CharacterTable> {
    static TABLES: OnceLock<Mutex<HashMap<u32, Arc<CharacterTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = tables.lock().unwrap().get(&n) {
        return t.clone();
    }
    // build outside the lock so unrelated degrees do not wait on each other
    let built = Arc::new(CharacterTable::new(n));
    let mut guard = tables.lock().unwrap();
    guard.entry(n).or_insert(built).clone()
}

/// Number of permutations with cycle type `class`: `n!` over the order of
/// the centralizer.
pub fn class_size(class: &Diagram) -> u64 {
    let mut centralizer: u64 = 1;
    let mut run = 0u64;
    let rows = class.rows();
    for (i, &len) in rows.iter().enumerate() {
        centralizer *= len as u64;
        run += 1;
        if i + 1 == rows.len() || rows[i + 1] != len {
            centralizer *= factorial(run as u32);
            run = 0;
        }
    }
    factorial(class.size()) / centralizer
}

/// Character recursion: strip a border strip of length `parts[0]` from
/// `shape` in every legal way, with the sign of the strip height, and
/// recurse on the rest. Works on first-column hook lengths, where removing
/// a strip of length `t` replaces an entry `b >= t` by `b - t` when that
/// value is free, with sign the parity of the entries jumped over.
fn border_strip_char(
    shape: &[u32],
    parts: &[u32],
    memo: &mut HashMap<(Vec<u32>, usize), i64>,
) -> i64 {
    if shape.is_empty() {
        return 1;
    }
    debug_assert!(!parts.is_empty(), "sizes of shape and class agree");
    let key = (shape.to_vec(), parts.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let t = parts[0];
    let k = shape.len();
    let beta: Vec<u32> = shape
        .iter()
        .enumerate()
        .map(|(i, &r)| r + (k - 1 - i) as u32)
        .collect();
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < t || beta.contains(&(b - t)) {
            continue;
        }
        let jumped = beta[idx + 1..].iter().take_while(|&&x| x > b - t).count();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        let mut next_beta = beta.clone();
        next_beta[idx] = b - t;
        next_beta.sort_unstable_by(|a, b| b.cmp(a));
        let next_shape: Vec<u32> = next_beta
            .iter()
            .enumerate()
            .map(|(i, &v)| v - (k - 1 - i) as u32)
            .take_while(|&r| r > 0)
            .collect();
        total += sign * border_strip_char(&next_shape, &parts[1..], memo);
    }
    memo.insert(key, total);
    total
}
