//! Ground truth by exhaustive subset search.
//!
//! Every subset of V(G) is tested against the D2CS definition directly; no
//! pruning is applied anywhere, so correctness never depends on one (the
//! definition is not subset-monotone, which rules out the usual shortcuts).

use crate::formulas::BigCount;
use crate::graph::{Graph, VertexSet};
use crate::{Error, Result};

/// Default cap on the vertex count; 2^24 subset checks is the practical
/// desk ceiling. Override per call or via the CLI's D2CS_ORACLE_LIMIT.
pub const DEFAULT_LIMIT: usize = 24;

/// Masks are single u64 words, so the oracle tops out at 63 vertices no
/// matter the configured limit.
const MASK_CEILING: usize = 63;

#[derive(Clone, Debug)]
pub struct OracleResult {
    pub total: BigCount,
    /// Count of D2CS of each size 0..=n.
    pub by_size: Vec<BigCount>,
    /// All D2CS in ascending bitmask order, when collected.
    pub sets: Option<Vec<VertexSet>>,
}

fn check_limit(g: &Graph, limit: usize) -> Result<Vec<u64>> {
    if limit > MASK_CEILING {
        return Err(Error::InvalidParam(format!(
            "oracle limit {limit} exceeds the supported maximum of {MASK_CEILING}"
        )));
    }
    if g.n() > limit {
        return Err(Error::AboveOracleLimit { n: g.n(), limit });
    }
    Ok(g.vertices()
        .map(|v| {
            let mut mask = 0u64;
            for u in g.neighbors(v).iter() {
                mask |= 1 << (u - 1);
            }
            mask
        })
        .collect())
}

// Pairwise form of diam(G[S]) <= 2: adjacent, or a common neighbor inside S.
fn mask_is_d2cs(adj: &[u64], mask: u64) -> bool {
    let mut rest = mask;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let mut others = rest;
        while others != 0 {
            let v = others.trailing_zeros() as usize;
            others &= others - 1;
            if adj[u] >> v & 1 == 0 && adj[u] & adj[v] & mask == 0 {
                return false;
            }
        }
    }
    true
}

fn mask_to_set(mut mask: u64) -> VertexSet {
    let mut s = VertexSet::new();
    while mask != 0 {
        s.insert(mask.trailing_zeros() as usize + 1);
        mask &= mask - 1;
    }
    s
}

pub fn oracle_count(g: &Graph, collect: bool) -> Result<OracleResult> {
    oracle_count_limited(g, collect, DEFAULT_LIMIT)
}

/// Iterate all 2^n subsets and count those with diam(G[S]) <= 2. With
/// `collect`, the sets come back in ascending bitmask order.
pub fn oracle_count_limited(g: &Graph, collect: bool, limit: usize) -> Result<OracleResult> {
    let adj = check_limit(g, limit)?;
    let n = g.n();
    let mut by_size = vec![0u64; n + 1];
    let mut sets = collect.then(Vec::new);
    for mask in 0..1u64 << n {
        if mask_is_d2cs(&adj, mask) {
            by_size[mask.count_ones() as usize] += 1;
            if let Some(sets) = sets.as_mut() {
                sets.push(mask_to_set(mask));
            }
        }
    }
    let total = by_size.iter().sum::<u64>();
    Ok(OracleResult {
        total: BigCount::from(total),
        by_size: by_size.into_iter().map(BigCount::from).collect(),
        sets,
    })
}

pub fn oracle_maximal(g: &Graph) -> Result<Vec<VertexSet>> {
    oracle_maximal_limited(g, DEFAULT_LIMIT)
}

/// All D2CS contained in no larger one, in canonical order.
///
/// A set is discarded exactly when some already-kept maximal set properly
/// contains it: every D2CS extends to a maximal one, and processing by
/// descending size means any witness superset has been kept already. A
/// one-vertex-augmentation check would be unsound here (supersets of a D2CS
/// can fail while larger ones succeed).
pub fn oracle_maximal_limited(g: &Graph, limit: usize) -> Result<Vec<VertexSet>> {
    let adj = check_limit(g, limit)?;
    let n = g.n();
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); n + 1];
    for mask in 0..1u64 << n {
        if mask_is_d2cs(&adj, mask) {
            by_size[mask.count_ones() as usize].push(mask);
        }
    }
    let mut maximal: Vec<u64> = Vec::new();
    for size in (0..=n).rev() {
        for &mask in &by_size[size] {
            if !maximal.iter().any(|&m| m & mask == mask && m != mask) {
                maximal.push(mask);
            }
        }
    }
    let mut out: Vec<VertexSet> = maximal.into_iter().map(mask_to_set).collect();
    out.sort_by(|a, b| a.cmp_canonical(b));
    Ok(out)
}

pub fn oracle_maximum(g: &Graph) -> Result<VertexSet> {
    oracle_maximum_limited(g, DEFAULT_LIMIT)
}

/// A largest D2CS; ties go to the smallest canonical encoding
/// (lexicographic on the sorted vertex list).
pub fn oracle_maximum_limited(g: &Graph, limit: usize) -> Result<VertexSet> {
    let adj = check_limit(g, limit)?;
    let n = g.n();
    let mut best: Option<VertexSet> = None;
    for mask in 0..1u64 << n {
        if !mask_is_d2cs(&adj, mask) {
            continue;
        }
        let candidate = mask_to_set(mask);
        let better = match &best {
            None => true,
            Some(b) => {
                candidate.len() > b.len()
                    || (candidate.len() == b.len()
                        && candidate.cmp_canonical(b) == std::cmp::Ordering::Less)
            }
        };
        if better {
            best = Some(candidate);
        }
    }
    Ok(best.expect("the empty set is always a D2CS"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn big(x: u64) -> BigCount {
        BigCount::from(x)
    }

    fn vs(vals: &[usize]) -> VertexSet {
        vals.iter().copied().collect()
    }

    #[test]
    fn counts_on_small_graphs() {
        assert_eq!(
            oracle_count(&generators::gen_path(3).unwrap(), false)
                .unwrap()
                .total,
            big(7)
        );
        assert_eq!(
            oracle_count(&generators::gen_path(4).unwrap(), false)
                .unwrap()
                .total,
            big(10)
        );
        assert_eq!(
            oracle_count(&generators::gen_complete(3).unwrap(), false)
                .unwrap()
                .total,
            big(8)
        );
        assert_eq!(
            oracle_count(&generators::gen_ladder(2).unwrap(), false)
                .unwrap()
                .total,
            big(14)
        );
    }

    #[test]
    fn p5_count_and_strata() {
        let g = generators::gen_path(5).unwrap();
        let r = oracle_count(&g, false).unwrap();
        assert_eq!(r.total, big(13));
        assert_eq!(
            r.by_size,
            vec![big(1), big(5), big(4), big(3), big(0), big(0)]
        );
    }

    #[test]
    fn strata_identity_holds() {
        for g in [
            generators::gen_path(6).unwrap(),
            generators::gen_star(4).unwrap(),
            generators::gen_complete(5).unwrap(),
            generators::gen_ladder(3).unwrap(),
            generators::gen_binomial_tree(3).unwrap(),
        ] {
            let r = oracle_count(&g, false).unwrap();
            assert_eq!(r.by_size[0], big(1), "{g:?}");
            assert_eq!(r.by_size[1], big(g.n() as u64), "{g:?}");
            assert_eq!(r.by_size[2], big(g.m() as u64), "{g:?}");
            assert_eq!(r.total, r.by_size.iter().sum::<BigCount>(), "{g:?}");
        }
    }

    #[test]
    fn maximal_families() {
        let p5 = generators::gen_path(5).unwrap();
        assert_eq!(
            oracle_maximal(&p5).unwrap(),
            vec![vs(&[1, 2, 3]), vs(&[2, 3, 4]), vs(&[3, 4, 5])]
        );

        let star = generators::gen_star(3).unwrap();
        assert_eq!(oracle_maximal(&star).unwrap(), vec![vs(&[1, 2, 3, 4])]);

        let empty = generators::gen_empty(3).unwrap();
        assert_eq!(
            oracle_maximal(&empty).unwrap(),
            vec![vs(&[1]), vs(&[2]), vs(&[3])]
        );
    }

    #[test]
    fn maximum_with_tie_break() {
        let k4 = generators::gen_complete(4).unwrap();
        assert_eq!(oracle_maximum(&k4).unwrap(), vs(&[1, 2, 3, 4]));

        let p5 = generators::gen_path(5).unwrap();
        assert_eq!(oracle_maximum(&p5).unwrap(), vs(&[1, 2, 3]));

        let k1 = generators::gen_complete(1).unwrap();
        assert_eq!(oracle_maximum(&k1).unwrap(), vs(&[1]));
    }

    #[test]
    fn every_d2cs_lies_in_a_maximal_one() {
        for g in [
            generators::gen_path(6).unwrap(),
            generators::gen_cycle(6).unwrap(),
            generators::gen_split_graph(2, 2).unwrap(),
        ] {
            let all = oracle_count(&g, true).unwrap().sets.unwrap();
            let maximal = oracle_maximal(&g).unwrap();
            for s in &all {
                assert!(
                    maximal.iter().any(|m| s.is_subset(m)),
                    "{s:?} in no maximal set of {g:?}"
                );
            }
        }
    }

    #[test]
    fn closed_neighborhoods_are_found() {
        let g = generators::gen_binomial_tree(3).unwrap();
        let all = oracle_count(&g, true).unwrap().sets.unwrap();
        for v in g.vertices() {
            let nv = g.closed_neighborhood(v).unwrap();
            assert!(all.contains(&nv), "N[{v}] missing");
        }
    }

    #[test]
    fn collect_is_deterministic_and_ordered_by_mask() {
        let g = generators::gen_cycle(5).unwrap();
        let a = oracle_count(&g, true).unwrap().sets.unwrap();
        let b = oracle_count(&g, true).unwrap().sets.unwrap();
        assert_eq!(a, b);
        assert_eq!(a[0], VertexSet::new()); // empty set first in mask order
        assert_eq!(a.len(), 17); // C_5 itself has diameter 2, so V counts too
    }

    #[test]
    fn limit_is_enforced_and_named() {
        let g = generators::gen_empty(25).unwrap();
        match oracle_count(&g, false) {
            Err(Error::AboveOracleLimit { n: 25, limit: 24 }) => {}
            other => panic!("expected limit refusal, got {other:?}"),
        }
        let g = generators::gen_star(12).unwrap();
        assert!(oracle_count_limited(&g, false, 10).is_err());
        assert_eq!(
            oracle_count_limited(&g, false, 13).unwrap().total,
            big(4109) // 2^12 + 12 + 1
        );
        assert!(oracle_count_limited(&g, false, 64).is_err());
    }
}
