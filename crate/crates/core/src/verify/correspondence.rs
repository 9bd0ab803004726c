//! The dictionary between level-`n` closed diagram sets and two-sided
//! ideals: round trips over every top layer, monotonicity in both
//! directions, branching consistency, chain transport, and level-by-level
//! truncation consistency.

use rayon::prelude::*;
use serde_json::json;

use super::{antichains, report, CheckReport, VerifyParams};
use crate::closure::{closure, DiagramSet, UpSet};
use crate::correspondence::{
    branching_check, diagram_set_of_ideal, ideal_of_diagram_set, n_closed_from_top,
    truncate_closure, truncation_consistency,
};
use crate::characters::dimension;
use crate::diagram::{enumerate_diagrams, Diagram, SizeRange};
use crate::ideal::IdealBasis;

pub(super) fn checks() -> Vec<Box<dyn Fn(&VerifyParams) -> CheckReport + Sync + Send>> {
    vec![
        Box::new(ideal_round_trip),
        Box::new(ideal_monotonicity),
        Box::new(branching),
        Box::new(chain_transport),
        Box::new(truncation_levels),
    ]
}

/// The degree cap for the exhaustive-over-top-layers checks; degree five
/// means `2^7` ideals in a 120-dimensional algebra and is gated behind the
/// opt-in flag.
fn top_layer_cap(params: &VerifyParams) -> u32 {
    params.max_n.min(if params.allow_degree_six { 5 } else { 4 })
}

/// Every subset of the size-`n` layer: the set it determines, its ideal,
/// and the diagram set recovered from that ideal, which must close the
/// loop; the rank must be the sum of the squared top dimensions.
fn ideal_round_trip(params: &VerifyParams) -> CheckReport {
    let mut cases = 0u64;
    for n in 1..=top_layer_cap(params) {
        let layer = enumerate_diagrams(n, SizeRange::Exact);
        let masks: Vec<u32> = (0..1u32 << layer.len()).collect();
        cases += masks.len() as u64;
        let cx = masks.par_iter().find_map_first(|&mask| {
            let top: DiagramSet = pick(&layer, mask);
            let set = n_closed_from_top(&top, n).expect("layer has size n");
            let basis = match ideal_of_diagram_set(&set) {
                Ok(b) => b,
                Err(e) => return Some(json!({ "top": top, "error": e.to_string() })),
            };
            let expected: u64 = top.iter().map(|d| dimension(d) * dimension(d)).sum();
            if basis.rank() as u64 != expected {
                return Some(json!({ "top": top, "rank": basis.rank(), "expected": expected }));
            }
            match diagram_set_of_ideal(&basis) {
                Ok(back) if back == set => None,
                Ok(back) => Some(json!({ "top": top, "set": set, "recovered": back })),
                Err(e) => Some(json!({ "top": top, "error": e.to_string() })),
            }
        });
        if cx.is_some() {
            return report("ideal-round-trip", cases, cx);
        }
    }
    report("ideal-round-trip", cases, None)
}

fn pick(layer: &[Diagram], mask: u32) -> DiagramSet {
    layer
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, d)| d.clone())
        .collect()
}

/// Inclusion of top layers matches inclusion of the ideals, in both
/// directions.
fn ideal_monotonicity(params: &VerifyParams) -> CheckReport {
    let mut cases = 0u64;
    for n in 1..=top_layer_cap(params) {
        let layer = enumerate_diagrams(n, SizeRange::Exact);
        let masks: Vec<u32> = (0..1u32 << layer.len()).collect();
        cases += (masks.len() * masks.len()) as u64;
        let ideals: Vec<IdealBasis> = masks
            .par_iter()
            .map(|&mask| {
                let set = n_closed_from_top(&pick(&layer, mask), n).expect("layer has size n");
                ideal_of_diagram_set(&set).expect("top layer of matching size")
            })
            .collect();
        let cx = masks.par_iter().find_map_first(|&a| {
            for &b in &masks {
                let tops_included = a & !b == 0;
                let ideals_included = ideals[b as usize]
                    .contains(&ideals[a as usize])
                    .expect("same degree");
                if tops_included != ideals_included {
                    return Some(json!({
                        "top_a": pick(&layer, a),
                        "top_b": pick(&layer, b),
                        "tops_included": tops_included,
                        "ideals_included": ideals_included,
                    }));
                }
            }
            None
        });
        if cx.is_some() {
            return report("ideal-monotonicity", cases, cx);
        }
    }
    report("ideal-monotonicity", cases, None)
}

/// The ideal of an embedded idempotent equals the ideal of the idempotents
/// of the top-layer diagrams above it, for every diagram fitting under
/// every level up to the cap.
fn branching(params: &VerifyParams) -> CheckReport {
    let cap = params.max_n.min(5);
    let mut pairs: Vec<(Diagram, u32)> = Vec::new();
    for n in 1..=cap {
        for e in enumerate_diagrams(n, SizeRange::UpTo) {
            pairs.push((e, n));
        }
    }
    let cases = pairs.len() as u64;
    let cx = pairs.par_iter().find_map_first(|(e, n)| {
        match branching_check(e, *n) {
            Ok(true) => None,
            Ok(false) => Some(json!({ "diagram": e, "level": n })),
            Err(err) => Some(json!({ "diagram": e, "level": n, "error": err.to_string() })),
        }
    });
    report("branching", cases, cx)
}

/// The closed upward sets whose minimal generators all have size at most
/// `max_size`, enumerated through closures of generator antichains.
fn closed_family(max_size: u32) -> Vec<UpSet> {
    let mut family: Vec<UpSet> = Vec::new();
    for s in antichains(max_size) {
        let cl = closure(&s).expect("nonempty");
        if cl.generators().iter().all(|d| d.size() <= max_size) && !family.contains(&cl) {
            family.push(cl);
        }
    }
    family
}

/// Transport of strictly ascending chains of closed sets into weakly
/// ascending chains of ideals: exhaustive over every chain in the family
/// of closed sets with generators of size at most three. Each step's
/// level-four ideals are weakly ascending, and each chain has a step and a
/// level at most four where the rank strictly grows.
fn chain_transport(_params: &VerifyParams) -> CheckReport {
    let family = closed_family(3);
    if family.len() != 6 || family.iter().any(|u| u.generators().len() != 1) {
        return report(
            "chain-transport",
            1,
            Some(json!({
                "law": "closed sets from three-box generators",
                "count": family.len(),
            })),
        );
    }

    let mut chains: Vec<Vec<usize>> = Vec::new();
    let mut grow: Vec<Vec<usize>> = (0..family.len()).map(|i| vec![i]).collect();
    while !grow.is_empty() {
        let mut next = Vec::new();
        for chain in &grow {
            let last = chain[chain.len() - 1];
            for i in 0..family.len() {
                if i != last
                    && family[last].subset_of(&family[i])
                    && !family[i].subset_of(&family[last])
                {
                    let mut longer = chain.clone();
                    longer.push(i);
                    next.push(longer);
                }
            }
        }
        chains.extend(next.iter().cloned().filter(|c| c.len() >= 2));
        grow = next;
    }

    let cases = chains.len() as u64;
    let cx = chains.par_iter().find_map_first(|chain| {
        let sets: Vec<&UpSet> = chain.iter().map(|&i| &family[i]).collect();
        let mut strict_somewhere = false;
        for w in sets.windows(2) {
            let (small, large) = (w[0], w[1]);
            for level in 3..=4u32 {
                let gens = |u: &UpSet| u.generators().iter().cloned().collect::<DiagramSet>();
                let truncated_small = match truncate_closure(&gens(small), level) {
                    Ok(t) => t,
                    Err(_) => continue,
                };
                let truncated_large = match truncate_closure(&gens(large), level) {
                    Ok(t) => t,
                    Err(_) => continue,
                };
                let ideal_small =
                    ideal_of_diagram_set(&truncated_small).expect("top layer of matching size");
                let ideal_large =
                    ideal_of_diagram_set(&truncated_large).expect("top layer of matching size");
                if !ideal_large.contains(&ideal_small).expect("same degree") {
                    return Some(json!({
                        "small": small,
                        "large": large,
                        "level": level,
                        "law": "weak ascent",
                    }));
                }
                if ideal_large.rank() > ideal_small.rank() {
                    strict_somewhere = true;
                }
            }
        }
        if !strict_somewhere {
            return Some(json!({ "chain": sets, "law": "strict somewhere" }));
        }
        None
    });
    report("chain-transport", cases, cx)
}

/// Truncations of closures are determined by their top layers and embed
/// level into level-plus-one, for every small generator antichain and
/// every level in budget.
fn truncation_levels(params: &VerifyParams) -> CheckReport {
    let top = params.max_n.max(2).min(5) - 1;
    let mut jobs: Vec<(DiagramSet, u32)> = Vec::new();
    for s in antichains(3) {
        let cl = closure(&s).expect("nonempty");
        let needed = cl.generators().iter().map(Diagram::size).max().unwrap_or(0);
        for level in needed..=top {
            jobs.push((s.clone(), level));
        }
    }
    let cases = jobs.len() as u64;
    let cx = jobs.par_iter().find_map_first(|(s, level)| {
        match truncation_consistency(s, *level) {
            Ok(true) => None,
            Ok(false) => Some(json!({ "generators": s, "level": level })),
            Err(e) => Some(json!({ "generators": s, "level": level, "error": e.to_string() })),
        }
    });
    report("truncation-levels", cases, cx)
}
