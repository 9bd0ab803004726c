//! Laws of the closure operator: the hat/bar membership formula, the
//! closure-operator axioms, the shortening window, the probe criterion,
//! and agreement between the generator-level closedness test and the
//! semantic no-gap definition.

use rayon::prelude::*;
use serde_json::{json, Value};

use super::{
    antichains, diagram_pool, random_diagram_set, report, rng_for, CheckReport, VerifyParams,
};
use crate::closure::{
    bar_set, closedness_witness_search, closure, col_probe, norm, row_probe, DiagramSet, UpSet,
};
use crate::diagram::{enumerate_diagrams, Diagram, SizeRange};

pub(super) fn checks() -> Vec<Box<dyn Fn(&VerifyParams) -> CheckReport + Sync + Send>> {
    vec![
        Box::new(closure_formula),
        Box::new(closedness_gap_scan),
        Box::new(closure_operator_laws),
        Box::new(closure_monotone),
        Box::new(closure_least),
        Box::new(probe_membership),
        Box::new(shorten_window),
    ]
}

/// The valid single-box enlargements of a diagram.
fn one_box_extensions(d: &Diagram) -> Vec<Diagram> {
    let rows = d.rows();
    let mut out = Vec::new();
    for i in 0..rows.len() {
        if i == 0 || rows[i - 1] > rows[i] {
            let mut grown: Vec<i64> = rows.iter().map(|&r| r as i64).collect();
            grown[i] += 1;
            out.push(Diagram::new(&grown).unwrap());
        }
    }
    let mut appended: Vec<i64> = rows.iter().map(|&r| r as i64).collect();
    appended.push(1);
    out.push(Diagram::new(&appended).unwrap());
    out
}

/// Membership below `norm(s) + 4` computed two ways: through the upward
/// closure of the hat set, and through the split "above a generator or in
/// the bar set" form. Exhaustive over small antichains, then randomized
/// over unrestricted generator sets.
fn closure_formula(params: &VerifyParams) -> CheckReport {
    let mut sets = antichains(params.max_size);
    let exhaustive = sets.len() as u64;
    let pool = diagram_pool(params.max_size);
    let mut rng = rng_for(params.seed, "closure-formula");
    sets.extend((0..params.trials).map(|_| random_diagram_set(&mut rng, &pool, 3)));

    let cx = sets.par_iter().find_map_first(|s| formula_mismatch(s));
    report("closure-formula", exhaustive + params.trials, cx)
}

fn formula_mismatch(s: &DiagramSet) -> Option<Value> {
    let cl = closure(s).expect("nonempty");
    let ucl = UpSet::generated_by(s.iter().cloned()).expect("nonempty");
    let bar = bar_set(s).expect("nonempty");
    let bound = norm(s);
    for f in enumerate_diagrams(bound + 4, SizeRange::UpTo) {
        let via_hat = cl.contains(&f);
        let via_slice = ucl.contains(&f) || (f.size() <= bound && bar.contains(&f));
        if via_hat != via_slice {
            return Some(json!({
                "generators": s,
                "diagram": f,
                "hat_member": via_hat,
                "sliced_member": via_slice,
            }));
        }
    }
    None
}

/// The generator-level closedness test agrees with the semantic
/// definition: an upward closed set fails to be closed exactly when some
/// non-member has all its one-box enlargements inside (a gap). Gaps can
/// only occur at sizes up to the generator norm, so the scan is complete;
/// the escape search is replayed against the scan on diagrams up to
/// `max_size`.
fn closedness_gap_scan(params: &VerifyParams) -> CheckReport {
    let sets = antichains(params.max_size);
    let cases = sets.len() as u64;
    let cx = sets.par_iter().find_map_first(|s| {
        let u = UpSet::generated_by(s.iter().cloned()).expect("nonempty");
        let bound = norm(s);
        let mut gap = None;
        for f in enumerate_diagrams(bound.max(1), SizeRange::UpTo) {
            if u.contains(&f) {
                continue;
            }
            let is_gap = one_box_extensions(&f).iter().all(|g| u.contains(g));
            if is_gap && gap.is_none() {
                gap = Some(f.clone());
            }
            if f.size() <= params.max_size {
                let escape = closedness_witness_search(&u, &f, 1).expect("f is outside");
                if escape.is_none() != is_gap {
                    return Some(json!({
                        "generators": s,
                        "diagram": f,
                        "gap": is_gap,
                        "escape": escape,
                    }));
                }
            }
        }
        if u.is_closed() != gap.is_none() {
            return Some(json!({
                "generators": s,
                "hat_closed": u.is_closed(),
                "gap": gap,
            }));
        }
        None
    });
    report("closedness-gap-scan", cases, cx)
}

/// Closure is extensive and idempotent, and its result passes the
/// closedness test.
fn closure_operator_laws(params: &VerifyParams) -> CheckReport {
    let sets = antichains(params.max_size);
    let cases = sets.len() as u64;
    let cx = sets.par_iter().find_map_first(|s| {
        let cl = closure(s).expect("nonempty");
        if let Some(outside) = s.iter().find(|d| !cl.contains(d)) {
            return Some(json!({ "law": "extensive", "generators": s, "diagram": outside }));
        }
        if !cl.is_closed() {
            return Some(json!({
                "law": "closed result",
                "generators": s,
                "witness": cl.non_closed_witness(),
            }));
        }
        let again = closure(&cl.generators().iter().cloned().collect()).expect("nonempty");
        if again != cl {
            return Some(json!({ "law": "idempotence", "generators": s, "reclosure": again }));
        }
        None
    });
    report("closure-operator-laws", cases, cx)
}

/// Monotonicity on sampled inclusions: enlarging the generator set can
/// only enlarge the closure.
fn closure_monotone(params: &VerifyParams) -> CheckReport {
    let pool = diagram_pool(params.max_size);
    let mut rng = rng_for(params.seed, "closure-monotone");
    let pairs: Vec<(DiagramSet, DiagramSet)> = (0..params.trials)
        .map(|_| {
            let s = random_diagram_set(&mut rng, &pool, 3);
            let mut t = s.clone();
            for d in random_diagram_set(&mut rng, &pool, 2) {
                t.insert(d);
            }
            (s, t)
        })
        .collect();
    let cx = pairs.par_iter().find_map_first(|(s, t)| {
        let (cs, ct) = (closure(s).expect("nonempty"), closure(t).expect("nonempty"));
        if !cs.subset_of(&ct) {
            return Some(json!({ "s": s, "t": t, "closure_s": cs, "closure_t": ct }));
        }
        None
    });
    report("closure-monotone", params.trials, cx)
}

/// Minimality on sampled cases: the closure is contained in every closed
/// set that includes the generators.
fn closure_least(params: &VerifyParams) -> CheckReport {
    let pool = diagram_pool(params.max_size);
    let mut rng = rng_for(params.seed, "closure-least");
    let pairs: Vec<(DiagramSet, DiagramSet)> = (0..params.trials)
        .map(|_| {
            (random_diagram_set(&mut rng, &pool, 3), random_diagram_set(&mut rng, &pool, 2))
        })
        .collect();
    let cx = pairs.par_iter().find_map_first(|(s, extras)| {
        let mut padded = s.clone();
        for d in extras.iter() {
            padded.insert(d.clone());
        }
        let bigger = closure(&padded).expect("nonempty");
        debug_assert!(bigger.is_closed());
        let cl = closure(s).expect("nonempty");
        if !cl.subset_of(&bigger) {
            return Some(json!({ "generators": s, "closed_superset": bigger, "closure": cl }));
        }
        None
    });
    report("closure-least", params.trials, cx)
}

/// The probe criterion: when both the long-row and long-column probes of a
/// diagram land in the plain upward closure, the diagram itself lies in
/// the closure.
fn probe_membership(params: &VerifyParams) -> CheckReport {
    let sets = antichains(params.max_size);
    let cases = sets.len() as u64;
    let cx = sets.par_iter().find_map_first(|s| {
        let ucl = UpSet::generated_by(s.iter().cloned()).expect("nonempty");
        let cl = closure(s).expect("nonempty");
        let bound = norm(s);
        for f in enumerate_diagrams(bound + 4, SizeRange::UpTo) {
            let long = bound + f.size() + 1;
            let (rp, cp) = (row_probe(&f, long), col_probe(&f, long));
            if ucl.contains(&rp) && ucl.contains(&cp) && !cl.contains(&f) {
                return Some(json!({
                    "generators": s,
                    "diagram": f,
                    "row_probe": rp,
                    "col_probe": cp,
                }));
            }
        }
        None
    });
    report("probe-membership", cases, cx)
}

/// The shortening window: any diagram slightly above the pair norm that
/// dominates `shorten_row(D) ∪ shorten_col(E)` dominates `D` or `E`.
fn shorten_window(params: &VerifyParams) -> CheckReport {
    let pool = diagram_pool(params.max_size);
    let cx = pool.par_iter().find_map_first(|d| {
        pool.iter().find_map(|e| {
            let bound = (d.first_row() - 1) * (e.first_col() - 1);
            let base = d.shorten_row().union(&e.shorten_col());
            for size in bound + 1..=bound + 4 {
                for f in enumerate_diagrams(size, SizeRange::Exact) {
                    if base.leq(&f) && !d.leq(&f) && !e.leq(&f) {
                        return Some(json!({ "d": d, "e": e, "f": f }));
                    }
                }
            }
            None
        })
    });
    report("shorten-window", (pool.len() * pool.len()) as u64, cx)
}
