//! Sequence-level order theory: the finite product embedding, the ordinal
//! reflection, longest bad sequences, forced good pairs, the bad-sequence
//! to ascending-chain round trip, and antichain checking for families of
//! upward closed sets.

use rayon::prelude::*;
use serde_json::{json, Value};

use super::{
    antichains, diagram_pool, random_bad_sequence, random_diagram, random_diagram_set, report,
    rng_for, CheckReport, VerifyParams,
};
use crate::closure::{closure, UpSet};
use crate::diagram::Diagram;
use crate::ordinal::{descending_to_bad, OrdinalCnf};
use crate::wpo::{
    antichain_check, bad_sequence_from_chain, chain_from_bad_sequence, embed_in_product,
    find_good_pair, max_bad_length, ChainMode, NkVector,
};

pub(super) fn checks() -> Vec<Box<dyn Fn(&VerifyParams) -> CheckReport + Sync + Send>> {
    vec![
        Box::new(product_embedding),
        Box::new(badness_transport),
        Box::new(ordinal_reflection),
        Box::new(max_bad_sequences),
        Box::new(good_pair_forced),
        Box::new(chain_round_trip),
        Box::new(antichain_families),
    ]
}

/// Within its side conditions the coordinatewise embedding preserves and
/// reflects containment, and always produces vectors of length `m + n - 2`.
fn product_embedding(params: &VerifyParams) -> CheckReport {
    let pool = diagram_pool(params.max_size);
    let shapes: Vec<(u32, u32)> =
        (2..=6).flat_map(|m| (2..=6).map(move |n| (m, n))).collect();
    let cases = (pool.len() * pool.len() * shapes.len()) as u64;
    let cx = pool.par_iter().find_map_first(|x| {
        for &(m, n) in &shapes {
            let vx = match embed_in_product(x, m, n) {
                Ok(v) => v,
                Err(_) => continue,
            };
            if vx.0.len() != (m + n - 2) as usize {
                return Some(json!({ "x": x, "m": m, "n": n, "vector": vx }));
            }
            for y in &pool {
                let vy = match embed_in_product(y, m, n) {
                    Ok(v) => v,
                    Err(_) => continue,
                };
                if x.leq(y) != vx.leq(&vy) {
                    return Some(json!({
                        "x": x,
                        "y": y,
                        "m": m,
                        "n": n,
                        "diagram_leq": x.leq(y),
                        "vector_leq": vx.leq(&vy),
                    }));
                }
            }
        }
        None
    });
    report("product-embedding", cases, cx)
}

/// A bad diagram sequence stays bad after embedding into a product chosen
/// large enough for every entry.
fn badness_transport(params: &VerifyParams) -> CheckReport {
    let pool = diagram_pool(params.max_size.min(5));
    let mut rng = rng_for(params.seed, "badness-transport");
    let seqs: Vec<Vec<Diagram>> =
        (0..params.trials).map(|_| random_bad_sequence(&mut rng, &pool, 8)).collect();
    let cx = seqs.par_iter().find_map_first(|seq| {
        let m = 2 + seq.iter().map(Diagram::first_row).max().unwrap_or(0);
        let n = 2 + seq.iter().map(Diagram::first_col).max().unwrap_or(0);
        let vectors: Vec<NkVector> = match seq
            .iter()
            .map(|d| embed_in_product(d, m, n))
            .collect::<Result<_, _>>()
        {
            Ok(v) => v,
            Err(e) => {
                return Some(json!({ "sequence": seq, "m": m, "n": n, "error": e.to_string() }))
            }
        };
        for j in 1..vectors.len() {
            for i in 0..j {
                if vectors[i].leq(&vectors[j]) {
                    return Some(json!({
                        "sequence": seq,
                        "m": m,
                        "n": n,
                        "i": i + 1,
                        "j": j + 1,
                    }));
                }
            }
        }
        None
    });
    report("badness-transport", params.trials, cx)
}

/// All ordinals with at most four terms and exponents at most four.
fn small_ordinals() -> Vec<OrdinalCnf> {
    let mut out = vec![OrdinalCnf::zero()];
    let mut grow: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..4 {
        let mut next = Vec::new();
        for prefix in &grow {
            let top = prefix.last().copied().unwrap_or(4);
            for e in 0..=top {
                let mut longer = prefix.clone();
                longer.push(e);
                out.push(OrdinalCnf::new(&longer).unwrap());
                next.push(longer);
            }
        }
        grow = next;
    }
    out
}

/// The diagram translation of ordinals reflects order and is injective;
/// the exponent order is a total order; strictly descending ordinal runs
/// translate to bad diagram sequences.
fn ordinal_reflection(_params: &VerifyParams) -> CheckReport {
    let ordinals = small_ordinals();
    let pairs = (ordinals.len() * ordinals.len()) as u64;
    let triples = pairs * ordinals.len() as u64;

    if OrdinalCnf::zero().to_diagram().is_ok() {
        return report("ordinal-reflection", 1, Some(json!({ "law": "zero has no diagram" })));
    }

    let cx = ordinals.par_iter().find_map_first(|a| {
        for b in &ordinals {
            if (a.cmp(b) == std::cmp::Ordering::Equal) != (a == b) {
                return Some(json!({ "law": "equality", "a": a, "b": b }));
            }
            if a.cmp(b) != b.cmp(a).reverse() {
                return Some(json!({ "law": "antisymmetry", "a": a, "b": b }));
            }
            if let (Ok(da), Ok(db)) = (a.to_diagram(), b.to_diagram()) {
                if da.leq(&db) && a > b {
                    return Some(json!({ "law": "reflection", "a": a, "b": b }));
                }
                if da == db && a != b {
                    return Some(json!({ "law": "injectivity", "a": a, "b": b }));
                }
            }
            for c in &ordinals {
                if a <= b && b <= c && a > c {
                    return Some(json!({ "law": "transitivity", "a": a, "b": b, "c": c }));
                }
            }
        }
        None
    });
    if let Some(cx) = cx {
        return report("ordinal-reflection", pairs + triples, Some(cx));
    }

    // Strictly descending runs: all index triples of the distinct nonzero
    // ordinals in descending order.
    let mut descending: Vec<OrdinalCnf> =
        ordinals.into_iter().filter(|a| !a.is_zero()).collect();
    descending.sort_by(|a, b| b.cmp(a));
    let n = descending.len();
    let runs = (n * (n - 1) * (n - 2) / 6) as u64;
    let idx: Vec<usize> = (0..n).collect();
    let cx = idx.par_iter().find_map_first(|&i| {
        for j in i + 1..n {
            for k in j + 1..n {
                let run = [descending[i].clone(), descending[j].clone(), descending[k].clone()];
                match descending_to_bad(&run) {
                    Ok(seq) => {
                        if let Some((gi, gj)) = find_good_pair(&seq) {
                            return Some(json!({
                                "run": run,
                                "sequence": seq,
                                "good_pair": [gi, gj],
                            }));
                        }
                    }
                    Err(e) => return Some(json!({ "run": run, "error": e.to_string() })),
                }
            }
        }
        None
    });
    report("ordinal-reflection", pairs + triples + runs, cx)
}

/// The longest bad sequence over diagrams of size at most `k` is found by
/// exhaustive search and matches both the returned witness and the count
/// of all diagrams in range; the witness cannot be extended.
fn max_bad_sequences(params: &VerifyParams) -> CheckReport {
    let kmax = params.max_size.min(4);
    let ks: Vec<u32> = (1..=kmax).collect();
    let cx = ks.par_iter().find_map_first(|&k| {
        let (len, witness) = max_bad_length(k);
        let pool = diagram_pool(k);
        if len != pool.len() || witness.len() != len {
            return Some(json!({ "k": k, "length": len, "pool": pool.len() }));
        }
        if let Some((i, j)) = find_good_pair(&witness) {
            return Some(json!({ "k": k, "law": "witness bad", "good_pair": [i, j] }));
        }
        for x in &pool {
            let mut extended = witness.clone();
            extended.push(x.clone());
            if find_good_pair(&extended).is_none() {
                return Some(json!({ "k": k, "law": "maximal witness", "extension": x }));
            }
        }
        let mut probe = Vec::new();
        let longest = longest_bad(&pool, &mut probe);
        if longest != len {
            return Some(json!({ "k": k, "claimed": len, "search": longest }));
        }
        None
    });
    report("max-bad-length", kmax as u64, cx)
}

/// Length of the longest bad sequence over `pool` extending `seq`, by
/// exhaustive recursion.
fn longest_bad(pool: &[Diagram], seq: &mut Vec<Diagram>) -> usize {
    let mut best = seq.len();
    for x in pool {
        if seq.iter().all(|e| !e.leq(x)) {
            seq.push(x.clone());
            best = best.max(longest_bad(pool, seq));
            seq.pop();
        }
    }
    best
}

/// Any sequence one longer than the longest bad sequence has a good pair,
/// and the reported pair is the least under the `j`-then-`i` order.
fn good_pair_forced(params: &VerifyParams) -> CheckReport {
    let k = params.max_size.min(6);
    let pool = diagram_pool(k);
    let len = max_bad_length(k).0 + 1;
    let mut rng = rng_for(params.seed, "good-pair-forced");
    let seqs: Vec<Vec<Diagram>> = (0..params.trials)
        .map(|_| (0..len).map(|_| random_diagram(&mut rng, &pool)).collect())
        .collect();
    let cx = seqs.par_iter().find_map_first(|seq| {
        let all: Vec<(usize, usize)> = (0..seq.len())
            .flat_map(|i| (i + 1..seq.len()).map(move |j| (i + 1, j + 1)))
            .filter(|&(i, j)| seq[i - 1].leq(&seq[j - 1]))
            .collect();
        let least = all.iter().min_by_key(|&&(i, j)| (j, i)).copied();
        let found = find_good_pair(seq);
        if found != least || found.is_none() {
            return Some(json!({ "sequence": seq, "found": found, "least": least }));
        }
        None
    });
    report("good-pair-forced", params.trials, cx)
}

/// Round trip between bad sequences and strictly ascending chains of
/// upward closures: exhaustive over all bad sequences of diagrams of size
/// at most four, then randomized over larger diagrams. The closure-mode
/// chain of the same prefixes must ascend weakly.
fn chain_round_trip(params: &VerifyParams) -> CheckReport {
    let pool = diagram_pool(params.max_size.min(4));
    let exhaustive = count_bad(&pool, &mut Vec::new());
    let cx = pool.par_iter().find_map_first(|first| {
        let mut seq = vec![first.clone()];
        round_trip_below(&pool, &mut seq)
    });
    if let Some(cx) = cx {
        return report("chain-round-trip", exhaustive, Some(cx));
    }

    let wide = diagram_pool(params.max_size.min(5));
    let mut rng = rng_for(params.seed, "chain-round-trip");
    let seqs: Vec<Vec<Diagram>> =
        (0..params.trials).map(|_| random_bad_sequence(&mut rng, &wide, 8)).collect();
    let cx = seqs.par_iter().find_map_first(|seq| round_trip_mismatch(seq));
    report("chain-round-trip", exhaustive + params.trials, cx)
}

fn count_bad(pool: &[Diagram], seq: &mut Vec<Diagram>) -> u64 {
    let mut total = 0;
    for x in pool {
        if seq.iter().all(|e| !e.leq(x)) {
            seq.push(x.clone());
            total += 1 + count_bad(pool, seq);
            seq.pop();
        }
    }
    total
}

fn round_trip_below(pool: &[Diagram], seq: &mut Vec<Diagram>) -> Option<Value> {
    if let Some(cx) = round_trip_mismatch(seq) {
        return Some(cx);
    }
    for x in pool {
        if seq.iter().all(|e| !e.leq(x)) {
            seq.push(x.clone());
            let cx = round_trip_below(pool, seq);
            seq.pop();
            if cx.is_some() {
                return cx;
            }
        }
    }
    None
}

fn round_trip_mismatch(seq: &[Diagram]) -> Option<Value> {
    let chain = match chain_from_bad_sequence(seq, ChainMode::Upward) {
        Ok(c) => c,
        Err(e) => return Some(json!({ "sequence": seq, "error": e.to_string() })),
    };
    match bad_sequence_from_chain(&chain) {
        Ok(back) if back == seq[1..] => {}
        Ok(back) => return Some(json!({ "sequence": seq, "recovered": back })),
        Err(e) => return Some(json!({ "sequence": seq, "error": e.to_string() })),
    }
    if let Err(e) = chain_from_bad_sequence(seq, ChainMode::Closure) {
        return Some(json!({ "sequence": seq, "mode": "closure", "error": e.to_string() }));
    }
    None
}

/// Inclusion-antichain checking: over the closed sets generated from tiny
/// antichains the maximal inclusion-antichain has exactly two members, and
/// on random families the reported pair is the least inclusion.
fn antichain_families(params: &VerifyParams) -> CheckReport {
    let mut closed: Vec<UpSet> = Vec::new();
    for s in antichains(2) {
        let cl = closure(&s).expect("nonempty");
        if !closed.contains(&cl) {
            closed.push(cl);
        }
    }
    if closed.len() != 3 {
        return report(
            "antichain-families",
            1,
            Some(json!({ "law": "closed sets from two-box generators", "count": closed.len() })),
        );
    }
    let mut best = 0;
    for mask in 1u32..1 << closed.len() {
        let family: Vec<UpSet> = (0..closed.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| closed[i].clone())
            .collect();
        if antichain_check(&family).is_none() {
            best = best.max(family.len());
        }
    }
    if best != 2 {
        return report(
            "antichain-families",
            1,
            Some(json!({ "law": "maximal antichain of closed sets", "size": best })),
        );
    }

    let pool = diagram_pool(params.max_size);
    let mut rng = rng_for(params.seed, "antichain-families");
    let families: Vec<Vec<UpSet>> = (0..params.trials)
        .map(|t| {
            let len = 3 + (t as usize % 48);
            (0..len)
                .map(|_| {
                    UpSet::generated_by(random_diagram_set(&mut rng, &pool, 3))
                        .expect("nonempty")
                })
                .collect()
        })
        .collect();
    let cx = families.par_iter().find_map_first(|family| {
        let all: Vec<(usize, usize)> = (0..family.len())
            .flat_map(|i| (0..family.len()).map(move |j| (i + 1, j + 1)))
            .filter(|&(i, j)| i != j && family[i - 1].subset_of(&family[j - 1]))
            .collect();
        let least = all.first().copied();
        if antichain_check(family) != least {
            return Some(json!({
                "family": family,
                "found": antichain_check(family),
                "least": least,
            }));
        }
        None
    });
    report("antichain-families", 1 + params.trials, cx)
}
