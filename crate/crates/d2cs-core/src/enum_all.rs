//! General-purpose D2CS enumeration: every D2CS is a clique of the square,
//! so enumerate the square's cliques of size >= 3, keep those whose induced
//! diameter is really <= 2, and add the empty set, singleton and edge strata.

use crate::formulas::BigCount;
use crate::graph::{Graph, VertexSet};
use crate::{Error, Result};

/// Every clique of size >= 3, each exactly once, in canonical order
/// (lexicographic by sorted vertex list). Ordered extension search: a clique
/// is only ever extended by vertices beyond its maximum, which makes the
/// stream duplicate-free without any hashing.
pub fn enum_cliques_min3(g: &Graph, mut visit: impl FnMut(&VertexSet)) {
    let mut stack = Vec::new();
    let mut as_set = VertexSet::new();
    for v in g.vertices() {
        let cand: Vec<usize> = g.neighbors(v).iter().filter(|&u| u > v).collect();
        stack.push(v);
        as_set.insert(v);
        extend_cliques(g, &mut stack, &mut as_set, &cand, &mut visit);
        stack.pop();
        as_set.remove(v);
    }
}

fn extend_cliques(
    g: &Graph,
    stack: &mut Vec<usize>,
    as_set: &mut VertexSet,
    cand: &[usize],
    visit: &mut impl FnMut(&VertexSet),
) {
    for (i, &u) in cand.iter().enumerate() {
        stack.push(u);
        as_set.insert(u);
        if stack.len() >= 3 {
            visit(as_set);
        }
        let next: Vec<usize> = cand[i + 1..]
            .iter()
            .copied()
            .filter(|&w| g.has_edge(u, w))
            .collect();
        extend_cliques(g, stack, as_set, &next, visit);
        stack.pop();
        as_set.remove(u);
    }
}

/// Is the candidate a D2CS of `g`? Checked by BFS inside the induced
/// subgraph, capped at depth 2; agrees with `Graph::is_d2cs` but never
/// materializes the subgraph. Callers guarantee the candidate is a clique
/// of the square — that is not re-verified.
pub fn d2cs_filter(g: &Graph, candidate: &VertexSet) -> bool {
    for s in candidate.iter() {
        let level1 = g.neighbors(s).intersection(candidate);
        let mut reached = level1.clone();
        reached.insert(s);
        for u in level1.iter() {
            reached = reached.union(&g.neighbors(u).intersection(candidate));
        }
        if !candidate.is_subset(&reached) {
            return false;
        }
    }
    true
}

/// Count all D2CS of a connected graph, invoking `emit` for each one of
/// size >= 3 in canonical order. Returns |T'| + n + m + 1: the surviving
/// square-cliques plus the empty set, the n singletons and the m edges,
/// which are D2CS unconditionally.
pub fn enum_all_d2cs(g: &Graph, mut emit: impl FnMut(&VertexSet)) -> Result<BigCount> {
    let components = g.components();
    if components.len() > 1 {
        return Err(Error::Disconnected(
            components.iter().map(|c| c.len()).collect(),
        ));
    }
    let square = g.square();
    let mut survivors: u128 = 0;
    enum_cliques_min3(&square, |candidate| {
        if d2cs_filter(g, candidate) {
            survivors += 1;
            emit(candidate);
        }
    });
    Ok(BigCount::from(survivors) + BigCount::from((g.n() + g.m() + 1) as u64))
}
