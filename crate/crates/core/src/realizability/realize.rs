use super::{erdos_gallai, RealizeError};
use crate::graph::SimpleGraph;
use crate::orders::decompose_into_basic_transfers;
use crate::sequence::DegreeSequence;

/// Builds a simple graph in which vertex `r` has degree `x[r]`.
///
/// Repeatedly takes the vertex with the largest residual degree (lowest
/// label among ties) and joins it to the vertices with the next largest
/// residual degrees.
pub fn realize(x: &DegreeSequence) -> Result<SimpleGraph, RealizeError> {
    let n = x.len();
    let mut residual = x.values().to_vec();
    let mut edges = Vec::with_capacity(x.sum() / 2);
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        order.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
        let hub = order[0];
        let need = residual[hub];
        if need == 0 {
            break;
        }
        let partners = &order[1..];
        if partners.len() < need || residual[partners[need - 1]] == 0 {
            return Err(RealizeError::NotGraphical(x.clone()));
        }
        for &p in &partners[..need] {
            residual[p] -= 1;
            edges.push((hub, p));
        }
        residual[hub] = 0;
    }
    Ok(SimpleGraph::from_edges(n, edges).expect("each hub is joined to fresh vertices"))
}

/// Every entry positive (or the single vertex), sum at least `2(N-1)`, and
/// graphical.
pub fn is_c_graphical(x: &DegreeSequence) -> bool {
    let n = x.len();
    if n == 1 {
        return x.head() == 0;
    }
    x.tail() >= 1 && x.sum() >= 2 * (n - 1) && erdos_gallai(x)
}

/// First edge in lexicographic order whose removal keeps its endpoints
/// connected.
fn first_cycle_edge(g: &SimpleGraph) -> Option<(usize, usize)> {
    g.edges().find_map(|e| {
        let h = g.remove_edge(e.lo, e.hi).expect("edge present");
        h.find_path(e.lo, e.hi).ok().map(|_| (e.lo, e.hi))
    })
}

/// A connected realization, obtained from `realize` by two-swaps that each
/// merge a component containing a cycle with another component.
pub fn realize_connected(x: &DegreeSequence) -> Result<SimpleGraph, RealizeError> {
    if !is_c_graphical(x) {
        return Err(RealizeError::NotCGraphical(x.clone()));
    }
    let mut g = realize(x)?;
    while !g.is_connected() {
        let comp = g.components();
        let (a, b) = first_cycle_edge(&g).ok_or_else(|| {
            RealizeError::InternalInconsistency(format!("disconnected realization of {x} is a forest"))
        })?;
        let other = g
            .edges()
            .find(|e| comp[e.lo] != comp[a])
            .ok_or_else(|| RealizeError::InternalInconsistency(format!("no edge outside the component of {a}")))?;
        g = g.two_swap((a, b), (other.lo, other.hi))?;
    }
    Ok(g)
}

/// Undoes one unit transfer on a realization.
///
/// `g` realizes `X'`; ranks `i < j` (0-based, vertices ranked by degree
/// then label) name the entries such that `X = X' - e_i + e_j` is still
/// non-increasing. One edge `{u,k}` at the rank-`i` vertex `u` is moved to
/// `{v,k}` at the rank-`j` vertex `v`. When `g` is connected, `k` avoids a
/// shortest `u`–`v` path, so the result stays connected.
pub fn apply_inverse_transfer_on_graph(g: &SimpleGraph, i: usize, j: usize) -> Result<SimpleGraph, RealizeError> {
    let n = g.vertex_count();
    if i >= j || j >= n {
        return Err(RealizeError::PreconditionViolated(format!(
            "ranks must satisfy i < j < {n}, got i = {i}, j = {j}"
        )));
    }
    let mut target = g.degree_sequence().into_values();
    if target[i] == 0 {
        return Err(RealizeError::PreconditionViolated(format!("rank {i} has degree 0")));
    }
    target[i] -= 1;
    target[j] += 1;
    let Some(target) = DegreeSequence::from_sorted(target) else {
        return Err(RealizeError::PreconditionViolated(format!(
            "moving a unit from rank {i} to rank {j} breaks the non-increasing order"
        )));
    };

    let ranks = g.rank_table();
    let (u, v) = (ranks[i], ranks[j]);
    let connected = g.is_connected();
    let path = if connected { Some(g.find_path(u, v)?) } else { None };
    let k = g
        .neighbors(u)
        .find(|&k| k != v && !g.has_edge(k, v) && path.as_ref().is_none_or(|p| !p.contains(k)))
        .ok_or_else(|| {
            RealizeError::InternalInconsistency(format!(
                "no vertex adjacent to {u} and free of {v} off the connecting path"
            ))
        })?;

    let h = g.remove_edge(u, k)?.add_edge(v, k)?;
    if connected && !h.is_connected() {
        return Err(RealizeError::InternalInconsistency(format!(
            "moving {{{u},{k}}} to {{{v},{k}}} disconnected the graph"
        )));
    }
    debug_assert_eq!(h.degree_sequence(), target);
    Ok(h)
}

/// Realizes `x` from a graph whose degree sequence dominates it.
///
/// Decomposes `x ⪯ Δ(g_prime)` into unit transfers and undoes them on
/// `g_prime` from last to first. Connectivity of `g_prime` is preserved.
pub fn realize_via_domination(x: &DegreeSequence, g_prime: &SimpleGraph) -> Result<SimpleGraph, RealizeError> {
    let y = g_prime.degree_sequence();
    let chain = decompose_into_basic_transfers(x, &y)?;
    let visited = chain.replay()?;
    let mut g = g_prime.clone();
    for (step, expected) in chain.steps.iter().zip(&visited).rev() {
        g = apply_inverse_transfer_on_graph(&g, step.to, step.from)?;
        if &g.degree_sequence() != expected {
            return Err(RealizeError::InternalInconsistency(format!(
                "undoing {step} produced {} instead of {expected}",
                g.degree_sequence()
            )));
        }
    }
    Ok(g)
}
