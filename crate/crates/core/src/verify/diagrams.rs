//! Order and lattice laws of diagrams: conjugation, shortening, union.

use rayon::prelude::*;
use serde_json::json;

use super::{diagram_pool, report, CheckReport, VerifyParams};

pub(super) fn checks() -> Vec<Box<dyn Fn(&VerifyParams) -> CheckReport + Sync + Send>> {
    vec![
        Box::new(conjugate_involution),
        Box::new(conjugate_order_isomorphism),
        Box::new(shorten_reconstruction),
        Box::new(shorten_comparability),
        Box::new(union_lattice_laws),
    ]
}

/// Conjugation is an involution, preserves size, and the size never
/// exceeds the bounding rectangle.
fn conjugate_involution(params: &VerifyParams) -> CheckReport {
    let pool = diagram_pool(params.max_size);
    let cx = pool.par_iter().find_map_first(|d| {
        let c = d.conjugate();
        let back = c.conjugate();
        if back != *d || c.size() != d.size() || d.size() > d.first_row() * d.first_col() {
            return Some(json!({ "diagram": d, "conjugate": c, "double_conjugate": back }));
        }
        None
    });
    report("conjugate-involution", pool.len() as u64, cx)
}

/// Containment is invariant under conjugating both sides.
fn conjugate_order_isomorphism(params: &VerifyParams) -> CheckReport {
    let pool = diagram_pool(params.max_size);
    let cx = pool.par_iter().find_map_first(|d| {
        let dc = d.conjugate();
        pool.iter().find_map(|e| {
            let (fwd, conj) = (d.leq(e), dc.leq(&e.conjugate()));
            if fwd != conj {
                return Some(json!({ "d": d, "e": e, "leq": fwd, "conjugate_leq": conj }));
            }
            None
        })
    });
    report("conjugate-order-isomorphism", (pool.len() * pool.len()) as u64, cx)
}

/// Every diagram is the union of its row- and column-shortenings.
fn shorten_reconstruction(params: &VerifyParams) -> CheckReport {
    let pool = diagram_pool(params.max_size);
    let cx = pool.par_iter().find_map_first(|d| {
        let (r, c) = (d.shorten_row(), d.shorten_col());
        let u = r.union(&c);
        if u != *d {
            return Some(json!({
                "diagram": d,
                "row_shortened": r,
                "col_shortened": c,
                "union": u,
            }));
        }
        None
    });
    report("shorten-reconstruction", pool.len() as u64, cx)
}

/// Diagrams sharing a row-shortening (or a column-shortening) are
/// comparable.
fn shorten_comparability(params: &VerifyParams) -> CheckReport {
    let pool = diagram_pool(params.max_size);
    let cx = pool.par_iter().find_map_first(|d| {
        let (dr, dc) = (d.shorten_row(), d.shorten_col());
        pool.iter().find_map(|e| {
            let shared_row = dr == e.shorten_row();
            let shared_col = dc == e.shorten_col();
            if (shared_row || shared_col) && !d.leq(e) && !e.leq(d) {
                return Some(json!({
                    "d": d,
                    "e": e,
                    "shared": if shared_row { "row" } else { "column" },
                }));
            }
            None
        })
    });
    report("shorten-comparability", (pool.len() * pool.len()) as u64, cx)
}

/// Union is commutative, idempotent, a least upper bound, associative, and
/// monotone in both arguments.
fn union_lattice_laws(params: &VerifyParams) -> CheckReport {
    let pool = diagram_pool(params.max_size);
    let pair_cx = pool.par_iter().find_map_first(|d| {
        pool.iter().find_map(|e| {
            let u = d.union(e);
            let bad_law = if u != e.union(d) {
                Some("commutativity")
            } else if d.union(d) != *d {
                Some("idempotence")
            } else if !d.leq(&u) || !e.leq(&u) {
                Some("upper bound")
            } else if pool.iter().any(|b| d.leq(b) && e.leq(b) && !u.leq(b)) {
                Some("least upper bound")
            } else {
                None
            };
            bad_law.map(|law| json!({ "law": law, "d": d, "e": e }))
        })
    });

    let triple_pool = diagram_pool(params.max_size.min(6));
    let triple_cx = pair_cx.or_else(|| {
        triple_pool.par_iter().find_map_first(|d| {
            triple_pool.iter().find_map(|e| {
                triple_pool.iter().find_map(|f| {
                    if d.union(e).union(f) != d.union(&e.union(f)) {
                        return Some(json!({ "law": "associativity", "d": d, "e": e, "f": f }));
                    }
                    if d.leq(e) && !d.union(f).leq(&e.union(f)) {
                        return Some(json!({ "law": "monotonicity", "d": d, "e": e, "f": f }));
                    }
                    None
                })
            })
        })
    });
    let cases = (pool.len() * pool.len() + triple_pool.len().pow(3)) as u64;
    report("union-lattice-laws", cases, triple_cx)
}
