//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails or overruns its time limit.

mod common;

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{below, by_sum, connected_graphs, ds, majorized_pairs, sequences};
use degseq::constructions::{
    build_s_d, build_s_prime_d, delta_s_d, delta_s_prime_d, incomplete_star, max_excess,
};
use degseq::maximal::{
    maximal_elements, theorem4_expectation, BothOracle, GraphsOracle, PartitionsOracle, Relation,
};
use degseq::orders::{decompose_into_basic_transfers, min_tail_sum, strictly_below};
use degseq::realizability::{
    erdos_gallai, generalized_reduce, graphicality_registry, havel_hakimi, havel_hakimi_trace,
    is_c_graphical, non_graphical_certificate, realize_connected, realize_via_domination,
    reduce_to_constant, Certificate, ReductionRule, TraceEnd,
};
use degseq::{seq, DegreeSequence};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn both() -> BothOracle {
    BothOracle {
        graphs: GraphsOracle { max_n: 8 },
        partitions: PartitionsOracle { max_n: 12 },
    }
}

fn worked_examples() -> Outcome {
    let x = seq(&[5, 4, 4, 3, 3, 3]);
    let (ok, trace) = havel_hakimi_trace(&x);
    let chain: Vec<String> = trace.chain().iter().map(|s| s.to_string()).collect();
    ensure(
        ok && chain == ["5,4,4,3,3,3", "3,3,2,2,2", "2,2,1,1", "1,1,0", "0,0"],
        || format!("(a) chain {chain:?}"),
    )?;

    ensure(generalized_reduce(&x, 0, 2) == Ok(seq(&[3, 3, 3, 3, 3, 3])), || "(b) step".into())?;
    let v = reduce_to_constant(&x);
    let Some(Certificate::Trace { trace }) = &v.certificate else {
        return Err("(b) no trace".into());
    };
    ensure(
        v.graphical
            && trace.steps.len() == 1
            && trace.steps[0].rule == ReductionRule::Generalized { k: 0, n: 2 }
            && trace.end == TraceEnd::Constant { value: 3, graphical: true },
        || format!("(b) {trace}"),
    )?;

    let bad = seq(&[4, 4, 3, 2, 1]);
    let cert = non_graphical_certificate(&bad).map_err(|e| e.to_string())?;
    let expected = seq(&[4, 4, 2, 2, 2]);
    ensure(
        matches!(&cert, Some(c) if c.d == 3 && c.dominated == expected)
            && strictly_below(&expected, &bad).unwrap()
            && !graphicality_registry().get("certificate").unwrap().decide(&bad).graphical,
        || format!("(c) {cert:?}"),
    )?;

    ensure(
        generalized_reduce(&seq(&[2, 2, 2, 1, 1]), 2, 1) == Ok(seq(&[2, 1, 1, 1, 1])),
        || "(d)".into(),
    )?;

    let pendant = seq(&[2, 1, 1, 1, 1]);
    ensure(
        !erdos_gallai(&seq(&[4, 4, 2, 1, 1])) && erdos_gallai(&pendant) && !is_c_graphical(&pendant),
        || "(e)".into(),
    )?;
    Ok("examples (a)-(e)".into())
}

fn oracle_equivalence() -> Outcome {
    let mut cases = 0;
    for n in 1..=7 {
        for v in sequences(n, n - 1) {
            let x = ds(&v);
            cases += 1;
            ensure(erdos_gallai(&x) == havel_hakimi(&x), || format!("disagree on {x}"))?;
        }
    }
    Ok(format!("{cases} sequences, 0 disagreements"))
}

fn theorem1_closure() -> Outcome {
    let mut pairs = 0;
    for n in 1..=6 {
        for (x, y) in majorized_pairs(n, 5) {
            pairs += 1;
            if erdos_gallai(&ds(&y)) {
                ensure(erdos_gallai(&ds(&x)), || format!("{x:?} below graphical {y:?}"))?;
            }
        }
    }

    let mut realized = 0;
    for n in 1..=6 {
        let groups = by_sum(sequences(n, n - 1));
        let mut below_cache: HashMap<DegreeSequence, Vec<DegreeSequence>> = HashMap::new();
        for g in connected_graphs(n) {
            let top = g.degree_sequence();
            let xs = below_cache.entry(top.clone()).or_insert_with(|| {
                groups[&top.sum()]
                    .iter()
                    .filter(|x| below(x, top.values()))
                    .map(|x| ds(x))
                    .collect()
            });
            for x in xs.iter() {
                let h = realize_via_domination(x, &g).map_err(|e| format!("{x} from {top}: {e}"))?;
                ensure(h.is_connected() && &h.degree_sequence() == x, || format!("{x} from {top}"))?;
                realized += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs, {realized} connected realizations"))
}

fn lemma_min_tail() -> Outcome {
    let mut checks = 0;
    for n in 1..=7 {
        for (x, y) in majorized_pairs(n, 7) {
            let (x, y) = (ds(&x), ds(&y));
            for k in 1..n {
                checks += 1;
                let (a, b) = (min_tail_sum(&x, k).unwrap(), min_tail_sum(&y, k).unwrap());
                ensure(a >= b, || format!("{x} vs {y} at k={k}: {a} < {b}"))?;
            }
        }
    }
    Ok(format!("{checks} inequalities"))
}

fn padded(n: usize, head: &[usize]) -> DegreeSequence {
    let mut v = vec![n - 1];
    v.extend_from_slice(head);
    v.resize(n, 1);
    seq(&v)
}

fn construction_consistency() -> Outcome {
    let mut built = 0;
    for n in 2..=9 {
        for d in 0..=max_excess(n) {
            let (s, sp) = (build_s_d(n, d).unwrap(), build_s_prime_d(n, d).unwrap());
            ensure(s.degree_sequence() == delta_s_d(n, d).unwrap(), || format!("S_d n={n} d={d}"))?;
            ensure(sp.degree_sequence() == delta_s_prime_d(n, d).unwrap(), || format!("S'_d n={n} d={d}"))?;
            built += 2;
        }
    }
    ensure(delta_s_d(5, 3) == Ok(seq(&[4, 4, 2, 2, 2])), || "Δ(S_3(5))".into())?;
    for n in 5..=9 {
        ensure(delta_s_prime_d(n, 3) == Ok(padded(n, &[3, 3, 3])), || format!("Δ(S'_3({n}))"))?;
    }
    for n in 6..=9 {
        ensure(delta_s_prime_d(n, 6) == Ok(padded(n, &[4, 4, 4, 4])), || format!("Δ(S'_6({n}))"))?;
    }
    Ok(format!("{built} graphs built"))
}

fn theorem4() -> Outcome {
    let oracle = both();
    for n in 6..=7 {
        for d in 0..=4 {
            let (relation, expected) = theorem4_expectation(n, d).map_err(|e| e.to_string())?;
            let computed = maximal_elements(n, d, &oracle).map_err(|e| e.to_string())?.maximal;
            ensure(relation == Relation::Exact && computed == expected, || {
                format!("n={n} d={d}: {computed:?} vs {expected:?}")
            })?;
            let size = if d <= 2 { 1 } else { 2 };
            ensure(computed.len() == size, || format!("n={n} d={d}: size {}", computed.len()))?;
        }
    }
    let (_, pair) = theorem4_expectation(7, 5).map_err(|e| e.to_string())?;
    let computed = maximal_elements(7, 5, &oracle).map_err(|e| e.to_string())?.maximal;
    ensure(
        computed.len() > pair.len()
            && pair.iter().all(|p| computed.contains(p))
            && computed.contains(&seq(&[6, 5, 3, 3, 2, 2, 1])),
        || format!("n=7 d=5: {computed:?}"),
    )?;

    let mut slices = 0;
    for n in 2..=7 {
        for d in 0..=max_excess(n) {
            maximal_elements(n, d, &oracle).map_err(|e| e.to_string())?;
            slices += 1;
        }
    }
    Ok(format!("M(T^5(7)) has {} elements; oracles agree on {slices} slices", computed.len()))
}

fn theorem3() -> Outcome {
    let oracle = PartitionsOracle { max_n: 12 };
    let mut elements = 0;
    for n in 2..=7 {
        for d in 0..=max_excess(n) {
            for m in maximal_elements(n, d, &oracle).map_err(|e| e.to_string())?.maximal {
                ensure(m.head() == n - 1, || format!("n={n} d={d}: {m}"))?;
                elements += 1;
            }
        }
    }
    Ok(format!("{elements} maximal elements"))
}

fn hakimi_and_theorem5() -> Outcome {
    let mut trees = 0;
    let mut sparse = 0;
    for n in 2..=8 {
        let groups = by_sum(sequences(n, n - 1));
        for v in &groups[&(2 * (n - 1))] {
            if v[n - 1] == 0 {
                continue;
            }
            let x = ds(v);
            let g = realize_connected(&x).map_err(|e| format!("{x}: {e}"))?;
            ensure(
                g.edge_count() == n - 1 && g.is_connected() && g.degree_sequence() == x,
                || format!("tree for {x}"),
            )?;
            trees += 1;
        }
        for d in -(n as i64 - 1)..0 {
            let (star, _) = incomplete_star(n, d).unwrap();
            let Some(group) = groups.get(&star.sum()) else { continue };
            for v in group.iter().filter(|v| below(v, star.values())) {
                ensure(erdos_gallai(&ds(v)), || format!("{v:?} below {star}"))?;
                sparse += 1;
            }
        }
    }
    Ok(format!("{trees} trees, {sparse} sequences below incomplete stars"))
}

fn muirhead() -> Outcome {
    let mut pairs = 0;
    for n in 1..=7 {
        for (x, y) in majorized_pairs(n, 8) {
            let (x, y) = (ds(&x), ds(&y));
            let chain = decompose_into_basic_transfers(&x, &y).map_err(|e| format!("{x} -> {y}: {e}"))?;
            let visited = chain.replay().map_err(|e| format!("{x} -> {y}: {e}"))?;
            ensure(visited.last() == Some(&y), || format!("{x} -> {y}"))?;
            for s in &visited {
                ensure(DegreeSequence::from_sorted(s.values().to_vec()).is_some(), || {
                    format!("{x} -> {y}: unsorted {s}")
                })?;
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs replayed"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("worked examples", worked_examples, Duration::from_secs(1)),
        ("Erdős–Gallai equals Havel–Hakimi, N <= 7", oracle_equivalence, Duration::from_secs(10)),
        ("Theorem 1 closure, N <= 6", theorem1_closure, Duration::from_secs(300)),
        ("min-tail lemma, N <= 7", lemma_min_tail, Duration::from_secs(60)),
        ("S_d / S'_d construction consistency, n <= 9", construction_consistency, Duration::from_secs(10)),
        ("Theorem 4 and dual-oracle agreement", theorem4, Duration::from_secs(300)),
        ("Theorem 3 sweep, n <= 7", theorem3, Duration::from_secs(300)),
        ("Hakimi trees and Theorem 5, n <= 8", hakimi_and_theorem5, Duration::from_secs(60)),
        ("Muirhead decomposition replay, N <= 7", muirhead, Duration::from_secs(120)),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(detail) if elapsed <= limit => ("PASS", detail),
            Ok(detail) => ("FAIL", format!("{detail}; over time limit")),
            Err(why) => ("FAIL", why),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "{status} criterion {}: {name} [{detail}] ({:.2}s, limit {}s)",
            i + 1,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
