#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use degseq::{DegreeSequence, SimpleGraph};

/// All non-increasing sequences of length `len` with entries in `0..=max`.
pub fn sequences(len: usize, max: usize) -> Vec<Vec<usize>> {
    fn rec(len: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in 0..=cap {
            cur.push(v);
            rec(len, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, max, &mut Vec::new(), &mut out);
    out
}

pub fn by_sum(seqs: Vec<Vec<usize>>) -> BTreeMap<usize, Vec<Vec<usize>>> {
    let mut groups: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    for s in seqs {
        groups.entry(s.iter().sum()).or_default().push(s);
    }
    groups
}

/// Prefix sums of `x` never exceed those of `y`.
pub fn below(x: &[usize], y: &[usize]) -> bool {
    let (mut sx, mut sy) = (0, 0);
    x.iter().zip(y).all(|(a, b)| {
        sx += a;
        sy += b;
        sx <= sy
    })
}

/// Every equal-sum pair `(x, y)` with `x ⪯ y` among the given sequences.
pub fn majorized_pairs(len: usize, max: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for group in by_sum(sequences(len, max)).into_values() {
        for x in &group {
            for y in &group {
                if below(x, y) {
                    out.push((x.clone(), y.clone()));
                }
            }
        }
    }
    out
}

pub fn ds(v: &[usize]) -> DegreeSequence {
    DegreeSequence::from_sorted(v.to_vec()).expect("non-increasing")
}

fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn connected_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> bool {
    let mut adj = vec![0u32; n];
    for (b, &(u, v)) in pairs.iter().enumerate() {
        if mask >> b & 1 == 1 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let mut next = 0;
        for (v, nbrs) in adj.iter().enumerate() {
            if frontier >> v & 1 == 1 {
                next |= nbrs;
            }
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen.count_ones() as usize == n
}

fn sorted_degrees(n: usize, pairs: &[(usize, usize)], mask: u64) -> Vec<usize> {
    let mut deg = vec![0; n];
    for (b, &(u, v)) in pairs.iter().enumerate() {
        if mask >> b & 1 == 1 {
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    deg.sort_unstable_by(|a, b| b.cmp(a));
    deg
}

/// Every labeled graph on `n` vertices as an edge bitmask over `pair_list(n)`.
fn masks(n: usize) -> impl Iterator<Item = u64> {
    0..1u64 << (n * (n - 1) / 2)
}

/// Every connected labeled graph on `n` vertices.
pub fn connected_graphs(n: usize) -> Vec<SimpleGraph> {
    let pairs = pair_list(n);
    masks(n)
        .filter(|&m| connected_mask(n, &pairs, m))
        .map(|m| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| m >> b & 1 == 1)
                .map(|(_, &e)| e);
            SimpleGraph::from_edges(n, edges).unwrap()
        })
        .collect()
}

/// Degree sequences of all labeled graphs on `n` vertices.
pub fn graphical_by_brute_force(n: usize) -> BTreeSet<Vec<usize>> {
    let pairs = pair_list(n);
    masks(n).map(|m| sorted_degrees(n, &pairs, m)).collect()
}

/// Degree sequences of connected graphs on `n` vertices, keyed by edge count.
pub fn connected_images(n: usize) -> BTreeMap<usize, BTreeSet<Vec<usize>>> {
    let pairs = pair_list(n);
    let mut out: BTreeMap<usize, BTreeSet<Vec<usize>>> = BTreeMap::new();
    for m in masks(n).filter(|&m| connected_mask(n, &pairs, m)) {
        out.entry(m.count_ones() as usize)
            .or_default()
            .insert(sorted_degrees(n, &pairs, m));
    }
    out
}
