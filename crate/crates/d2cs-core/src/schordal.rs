//! Strongly chordal graphs: strong-elimination-ordering verification and
//! construction, the published linear-time maximal-D2CS pseudocode run
//! literally, and the closed-neighborhood reference enumerator used to
//! cross-validate it.

use std::fmt;

use crate::formulas::BigCount;
use crate::graph::{Graph, VertexSet};
use crate::{Error, Result};

/// A candidate elimination ordering: `order[i]` is the (i+1)-th eliminated
/// vertex, `inverse[v - 1]` is the 1-based position of vertex v.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrdering {
    order: Vec<usize>,
    inverse: Vec<usize>,
}

impl EliminationOrdering {
    pub fn new(order: Vec<usize>) -> Result<EliminationOrdering> {
        let n = order.len();
        let mut inverse = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            if v < 1 || v > n || inverse[v - 1] != 0 {
                return Err(Error::NotAPermutation { n });
            }
            inverse[v - 1] = i + 1;
        }
        Ok(EliminationOrdering { order, inverse })
    }

    pub fn identity(n: usize) -> EliminationOrdering {
        EliminationOrdering {
            order: (1..=n).collect(),
            inverse: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// The vertex at 1-based position i.
    pub fn vertex_at(&self, i: usize) -> usize {
        self.order[i - 1]
    }

    /// The 1-based position of vertex v.
    pub fn position_of(&self, v: usize) -> usize {
        self.inverse[v - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }
}

/// Why an ordering fails to be a strong elimination ordering. Indices are
/// 1-based positions in the ordering; named vertices carry original ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeoViolation {
    /// v_i is not simplicial in G_i: neighbors u and w are non-adjacent.
    NotSimplicial { i: usize, u: usize, w: usize },
    /// Positions i < j < k with v_j, v_k in N_i[v_i] but N_i[v_j] not a
    /// subset of N_i[v_k]; `offending` lies in the difference.
    StrongCondition {
        i: usize,
        j: usize,
        k: usize,
        offending: usize,
    },
}

impl fmt::Display for SeoViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SeoViolation::NotSimplicial { i, u, w } => {
                write!(
                    f,
                    "NOT_SIMPLICIAL i={i} neighbors {u} and {w} are non-adjacent"
                )
            }
            SeoViolation::StrongCondition { i, j, k, offending } => {
                write!(
                    f,
                    "STRONG_CONDITION i={i} j={j} k={k} offending={offending}"
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeoCheck {
    Valid,
    Violation(SeoViolation),
}

impl SeoCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, SeoCheck::Valid)
    }
}

fn closed_in(g: &Graph, v: usize, alive: &VertexSet) -> VertexSet {
    let mut s = g.neighbors(v).intersection(alive);
    s.insert(v);
    s
}

/// Check the definition literally: every v_i simplicial in
/// G_i = G[{v_i..v_n}], and for positions i < j < k with v_j, v_k in
/// N_i[v_i], N_i[v_j] ⊆ N_i[v_k]. The first violation in lexicographic
/// (i, j, k) order is reported, with the simplicial check preceding the
/// strong condition at each i.
pub fn verify_seo(g: &Graph, ord: &EliminationOrdering) -> Result<SeoCheck> {
    if ord.len() != g.n() {
        return Err(Error::NotAPermutation { n: g.n() });
    }
    let mut alive = g.vertex_set();
    for i in 1..=g.n() {
        let vi = ord.vertex_at(i);
        let mut members: Vec<usize> = g.neighbors(vi).intersection(&alive).to_vec();
        members.sort_by_key(|&v| ord.position_of(v));
        for a in 0..members.len() {
            for b in a + 1..members.len() {
                if !g.has_edge(members[a], members[b]) {
                    return Ok(SeoCheck::Violation(SeoViolation::NotSimplicial {
                        i,
                        u: members[a],
                        w: members[b],
                    }));
                }
            }
        }
        for a in 0..members.len() {
            for b in a + 1..members.len() {
                let nj = closed_in(g, members[a], &alive);
                let nk = closed_in(g, members[b], &alive);
                if !nj.is_subset(&nk) {
                    return Ok(SeoCheck::Violation(SeoViolation::StrongCondition {
                        i,
                        j: ord.position_of(members[a]),
                        k: ord.position_of(members[b]),
                        offending: nj.difference(&nk).min().expect("nonempty difference"),
                    }));
                }
            }
        }
        alive.remove(vi);
    }
    Ok(SeoCheck::Valid)
}

// v is simple in G[alive]: the closed neighborhoods of N[v]'s members form
// an inclusion chain.
fn is_simple(g: &Graph, v: usize, alive: &VertexSet) -> bool {
    let mut sets: Vec<VertexSet> = closed_in(g, v, alive)
        .iter()
        .map(|u| closed_in(g, u, alive))
        .collect();
    sets.sort_by_key(|s| s.len());
    sets.windows(2).all(|w| w[0].is_subset(&w[1]))
}

/// Find a strong elimination ordering, or None when the graph has none
/// (i.e. is not strongly chordal).
///
/// Vertices are eliminated simple-first, but plain greedy is not enough:
/// when v_i goes, the strong condition pins the relative elimination order
/// of v_i's surviving neighbors to the inclusion order of their current
/// closed neighborhoods. Those precedence constraints are recorded at each
/// step and later choices must respect them; a backtracking search over the
/// remaining choices is then exact — it emits precisely the strong
/// elimination orderings, so an empty search means none exists.
pub fn find_seo(g: &Graph) -> Option<EliminationOrdering> {
    let mut alive = g.vertex_set();
    let mut order = Vec::with_capacity(g.n());
    let mut constraints: Vec<(usize, usize)> = Vec::new();

    fn search(
        g: &Graph,
        alive: &mut VertexSet,
        order: &mut Vec<usize>,
        constraints: &mut Vec<(usize, usize)>,
    ) -> bool {
        if alive.is_empty() {
            return true;
        }
        let candidates: Vec<usize> = alive.to_vec();
        for v in candidates {
            if constraints
                .iter()
                .any(|&(first, second)| second == v && alive.contains(first))
            {
                continue;
            }
            if !is_simple(g, v, alive) {
                continue;
            }
            // Record the inclusion order among v's surviving neighbors,
            // measured while v is still present (that is G_i).
            let nbrs: Vec<usize> = g.neighbors(v).intersection(alive).to_vec();
            let closed: Vec<VertexSet> = nbrs.iter().map(|&u| closed_in(g, u, alive)).collect();
            let before = constraints.len();
            for a in 0..nbrs.len() {
                for b in a + 1..nbrs.len() {
                    if closed[a] == closed[b] {
                        continue;
                    }
                    if closed[a].is_subset(&closed[b]) {
                        constraints.push((nbrs[a], nbrs[b]));
                    } else {
                        constraints.push((nbrs[b], nbrs[a]));
                    }
                }
            }
            alive.remove(v);
            order.push(v);
            if search(g, alive, order, constraints) {
                return true;
            }
            order.pop();
            alive.insert(v);
            constraints.truncate(before);
        }
        false
    }

    if search(g, &mut alive, &mut order, &mut constraints) {
        Some(EliminationOrdering::new(order).expect("search yields a permutation"))
    } else {
        None
    }
}

/// Output of the literal pseudocode run: the printed sets in print order
/// (duplicates included) plus a note for every skipped N[NIL] print.
#[derive(Clone, Debug)]
pub struct PaperRun {
    pub printed: Vec<VertexSet>,
    pub notes: Vec<String>,
}

impl PaperRun {
    /// Collapse repeated sets, keeping first-occurrence order.
    pub fn deduped(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = Vec::new();
        for s in &self.printed {
            if !out.contains(s) {
                out.push(s.clone());
            }
        }
        out
    }
}

/// Run the published maximal-D2CS pseudocode literally on `g` relabeled so
/// that vertex i is the i-th vertex of `ord`; printed sets are mapped back
/// to original ids, preserving print order.
///
/// NIL handling: when vertex i has no smaller neighbor, u' (and with it
/// P(i)) stays NIL and the print condition fires through its first
/// disjunct; when S(i) is NIL the print of N[S(i)] is impossible, so it is
/// skipped and logged instead. The |N[S(i)] \ N[P(i)]| > 0 test is an
/// explicit set difference, linear in the neighborhood sizes — nothing
/// here tries to make it O(1).
pub fn maximal_d2cs_paper(g: &Graph, ord: &EliminationOrdering) -> Result<PaperRun> {
    match verify_seo(g, ord)? {
        SeoCheck::Valid => {}
        SeoCheck::Violation(v) => return Err(Error::NotStrongElimination(v)),
    }
    let components = g.components();
    if components.len() > 1 {
        return Err(Error::Disconnected(
            components.iter().map(|c| c.len()).collect(),
        ));
    }
    let n = g.n();
    if n == 0 {
        return Ok(PaperRun {
            printed: Vec::new(),
            notes: Vec::new(),
        });
    }

    // Relabel into position space: position-vertex i is ord.vertex_at(i).
    let mut edges = Vec::with_capacity(g.m());
    for (u, v) in g.edges() {
        let (pu, pv) = (ord.position_of(u), ord.position_of(v));
        edges.push((pu.min(pv), pu.max(pv)));
    }
    let h = Graph::new(n, &edges)?;

    if h.degree(1) == 0 {
        return Err(Error::InvalidParam(
            "first eliminated vertex has no neighbors; the algorithm needs a \
             connected graph on at least 2 vertices"
                .into(),
        ));
    }

    let to_original = |s: &VertexSet| -> VertexSet { s.iter().map(|p| ord.vertex_at(p)).collect() };
    let closed = |v: usize| -> VertexSet {
        let mut s = h.neighbors(v).clone();
        s.insert(v);
        s
    };

    let mut printed = Vec::new();
    let mut notes = Vec::new();

    let u = h.neighbors(1).max().expect("degree checked above");
    printed.push(to_original(&closed(u)));

    for i in 2..=n {
        let u_prime = h.neighbors(i).iter().filter(|&v| v < i).max();
        let p = u_prime.and_then(|up| h.neighbors(up).iter().filter(|&v| v > up).max());
        let s = h.neighbors(i).iter().filter(|&v| v > i).max();
        match s {
            None => notes.push(format!("i={i}: S(i) is NIL, print of N[S(i)] skipped")),
            Some(si) => {
                let fires = match p {
                    None => true,
                    Some(pi) => !closed(si).difference(&closed(pi)).is_empty(),
                };
                if fires {
                    printed.push(to_original(&closed(si)));
                }
            }
        }
    }
    Ok(PaperRun { printed, notes })
}

/// The maximal-D2CS family of a connected strongly chordal graph, computed
/// from the structural fact that every maximal D2CS is a closed
/// neighborhood: take {N[v]} and keep the inclusion-maximal sets.
/// Strong chordality is the caller's responsibility.
pub fn maximal_d2cs_reference(g: &Graph) -> Result<Vec<VertexSet>> {
    let components = g.components();
    if components.len() > 1 {
        return Err(Error::Disconnected(
            components.iter().map(|c| c.len()).collect(),
        ));
    }
    let mut family: Vec<VertexSet> = Vec::new();
    for v in g.vertices() {
        let nv = g.closed_neighborhood(v)?;
        if !family.contains(&nv) {
            family.push(nv);
        }
    }
    let mut maximal: Vec<VertexSet> = family
        .iter()
        .filter(|s| !family.iter().any(|t| s.is_subset(t) && *s != t))
        .cloned()
        .collect();
    maximal.sort_by(|a, b| a.cmp_canonical(b));
    Ok(maximal)
}

/// |maximal_d2cs_reference|. At most n, with equality only on edgeless
/// graphs — among connected graphs, only K_1.
pub fn count_maximal_schordal(g: &Graph) -> Result<BigCount> {
    Ok(BigCount::from(maximal_d2cs_reference(g)?.len() as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::oracle;

    fn vs(vals: &[usize]) -> VertexSet {
        vals.iter().copied().collect()
    }

    fn ord(order: &[usize]) -> EliminationOrdering {
        EliminationOrdering::new(order.to_vec()).unwrap()
    }

    fn three_sun() -> Graph {
        // inner triangle {1,2,3}; outer 4~{1,2}, 5~{2,3}, 6~{3,1}
        Graph::new(
            6,
            &[
                (1, 2),
                (1, 3),
                (2, 3),
                (4, 1),
                (4, 2),
                (5, 2),
                (5, 3),
                (6, 3),
                (6, 1),
            ],
        )
        .unwrap()
    }

    // Triangle {1,3,4} plus pendant 2 on 3. Plain greedy elimination takes
    // (1,2,3,4), which breaks the strong condition at i=1: it needs 4
    // (smaller closed neighborhood) out before 3.
    fn greedy_trap() -> Graph {
        Graph::new(4, &[(1, 3), (1, 4), (3, 4), (2, 3)]).unwrap()
    }

    #[test]
    fn ordering_validation() {
        assert!(EliminationOrdering::new(vec![2, 1, 3]).is_ok());
        assert!(EliminationOrdering::new(vec![1, 1, 3]).is_err());
        assert!(EliminationOrdering::new(vec![1, 2, 4]).is_err());
        let o = ord(&[3, 1, 2]);
        assert_eq!(o.vertex_at(1), 3);
        assert_eq!(o.position_of(3), 1);
    }

    #[test]
    fn verify_accepts_known_orderings() {
        let p5 = generators::gen_path(5).unwrap();
        assert!(verify_seo(&p5, &ord(&[1, 2, 3, 4, 5])).unwrap().is_valid());
        let k4 = generators::gen_complete(4).unwrap();
        assert!(verify_seo(&k4, &ord(&[1, 2, 3, 4])).unwrap().is_valid());
        assert!(verify_seo(&k4, &ord(&[3, 1, 4, 2])).unwrap().is_valid());
    }

    #[test]
    fn c4_is_never_simplicial() {
        let c4 = generators::gen_cycle(4).unwrap();
        match verify_seo(&c4, &ord(&[1, 2, 3, 4])).unwrap() {
            SeoCheck::Violation(SeoViolation::NotSimplicial { i: 1, u: 2, w: 4 }) => {}
            other => panic!("unexpected: {other:?}"),
        }
        // every ordering fails: C_4 has no simplicial vertex at all
        let perms = [[1, 2, 3, 4], [2, 4, 1, 3], [4, 3, 2, 1], [3, 1, 4, 2]];
        for p in perms {
            assert!(matches!(
                verify_seo(&c4, &ord(&p)).unwrap(),
                SeoCheck::Violation(SeoViolation::NotSimplicial { .. })
            ));
        }
    }

    #[test]
    fn strong_condition_violation_is_reported_with_witness() {
        let g = greedy_trap();
        match verify_seo(&g, &ord(&[1, 2, 3, 4])).unwrap() {
            SeoCheck::Violation(SeoViolation::StrongCondition {
                i: 1,
                j: 3,
                k: 4,
                offending: 2,
            }) => {}
            other => panic!("unexpected: {other:?}"),
        }
        assert!(verify_seo(&g, &ord(&[1, 2, 4, 3])).unwrap().is_valid());
    }

    #[test]
    fn verify_rejects_wrong_length() {
        let p3 = generators::gen_path(3).unwrap();
        assert!(verify_seo(&p3, &ord(&[1, 2])).is_err());
    }

    #[test]
    fn find_seo_on_structured_families() {
        for g in [
            generators::gen_path(7).unwrap(),
            generators::gen_star(5).unwrap(),
            generators::gen_complete(6).unwrap(),
            generators::gen_split_graph(3, 2).unwrap(),
            generators::gen_binomial_tree(4).unwrap(),
            generators::gen_complete_kary_tree(3, 2).unwrap(),
            greedy_trap(),
        ] {
            let o = find_seo(&g).unwrap_or_else(|| panic!("no seo found for {g:?}"));
            assert!(verify_seo(&g, &o).unwrap().is_valid(), "{g:?}");
        }
    }

    #[test]
    fn find_seo_rejects_non_strongly_chordal() {
        assert!(find_seo(&generators::gen_cycle(6).unwrap()).is_none());
        assert!(find_seo(&three_sun()).is_none());
        assert!(find_seo(&generators::gen_cycle(4).unwrap()).is_none());
    }

    // The 3-sun is chordal but not strongly chordal; confirm by exhausting
    // all 720 orderings against the verifier, so find_seo's None is not
    // just a search artifact.
    #[test]
    fn three_sun_has_no_seo_by_exhaustion() {
        let g = three_sun();
        let mut verts = [1, 2, 3, 4, 5, 6];
        let mut any_valid = false;
        permute(&mut verts, 0, &mut |p| {
            if verify_seo(&g, &ord(p)).unwrap().is_valid() {
                any_valid = true;
            }
        });
        assert!(!any_valid);
    }

    fn permute(vals: &mut [usize; 6], k: usize, f: &mut impl FnMut(&[usize])) {
        if k == vals.len() {
            f(vals);
            return;
        }
        for i in k..vals.len() {
            vals.swap(k, i);
            permute(vals, k + 1, f);
            vals.swap(k, i);
        }
    }

    // Exhaustive soundness/completeness of find_seo on every graph with
    // n <= 4 (all 2^6 edge subsets), against brute force over permutations.
    #[test]
    fn find_seo_matches_brute_force_on_all_small_graphs() {
        let pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
        for bits in 0u32..64 {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::new(4, &edges).unwrap();
            let found = find_seo(&g);
            let mut exists = false;
            let mut verts = [1, 2, 3, 4];
            permute4(&mut verts, 0, &mut |p| {
                if verify_seo(&g, &ord(p)).unwrap().is_valid() {
                    exists = true;
                }
            });
            match found {
                Some(o) => {
                    assert!(exists, "spurious seo for {g:?}");
                    assert!(verify_seo(&g, &o).unwrap().is_valid(), "{g:?}");
                }
                None => assert!(!exists, "missed seo for {g:?}"),
            }
        }
    }

    fn permute4(vals: &mut [usize; 4], k: usize, f: &mut impl FnMut(&[usize])) {
        if k == vals.len() {
            f(vals);
            return;
        }
        for i in k..vals.len() {
            vals.swap(k, i);
            permute4(vals, k + 1, f);
            vals.swap(k, i);
        }
    }

    #[test]
    fn paper_run_on_p5() {
        let p5 = generators::gen_path(5).unwrap();
        let run = maximal_d2cs_paper(&p5, &ord(&[1, 2, 3, 4, 5])).unwrap();
        assert_eq!(
            run.printed,
            vec![vs(&[1, 2, 3]), vs(&[2, 3, 4]), vs(&[3, 4, 5])]
        );
        assert_eq!(run.notes.len(), 1); // S(5) is NIL
        assert_eq!(run.deduped(), run.printed);
    }

    #[test]
    fn paper_run_on_star_with_leaves_first() {
        let star = generators::gen_star(3).unwrap(); // center 1, leaves 2..4
        let run = maximal_d2cs_paper(&star, &ord(&[2, 3, 4, 1])).unwrap();
        assert_eq!(run.printed.len(), 3); // printed repeatedly, all the same set
        assert_eq!(run.deduped(), vec![vs(&[1, 2, 3, 4])]);
    }

    #[test]
    fn paper_run_on_k4_prints_once() {
        let k4 = generators::gen_complete(4).unwrap();
        let run = maximal_d2cs_paper(&k4, &ord(&[1, 2, 3, 4])).unwrap();
        assert_eq!(run.deduped(), vec![vs(&[1, 2, 3, 4])]);
        assert_eq!(run.printed.len(), 1);
    }

    #[test]
    fn paper_run_preconditions() {
        let k1 = generators::gen_complete(1).unwrap();
        assert!(matches!(
            maximal_d2cs_paper(&k1, &ord(&[1])),
            Err(Error::InvalidParam(_))
        ));

        let c4 = generators::gen_cycle(4).unwrap();
        assert!(matches!(
            maximal_d2cs_paper(&c4, &ord(&[1, 2, 3, 4])),
            Err(Error::NotStrongElimination(_))
        ));

        let disco = Graph::new(4, &[(1, 2), (3, 4)]).unwrap();
        assert!(matches!(
            maximal_d2cs_paper(&disco, &ord(&[1, 2, 3, 4])),
            Err(Error::Disconnected(_))
        ));
    }

    #[test]
    fn reference_families() {
        let p5 = generators::gen_path(5).unwrap();
        assert_eq!(
            maximal_d2cs_reference(&p5).unwrap(),
            vec![vs(&[1, 2, 3]), vs(&[2, 3, 4]), vs(&[3, 4, 5])]
        );
        let k1 = generators::gen_complete(1).unwrap();
        assert_eq!(maximal_d2cs_reference(&k1).unwrap(), vec![vs(&[1])]);
        let star = generators::gen_star(4).unwrap();
        assert_eq!(
            maximal_d2cs_reference(&star).unwrap(),
            vec![vs(&[1, 2, 3, 4, 5])]
        );
    }

    #[test]
    fn reference_matches_oracle_on_strongly_chordal_graphs() {
        let graphs = vec![
            generators::gen_path(6).unwrap(),
            generators::gen_star(5).unwrap(),
            generators::gen_complete(5).unwrap(),
            generators::gen_split_graph(2, 2).unwrap(),
            generators::gen_split_graph(3, 1).unwrap(),
            generators::gen_binomial_tree(3).unwrap(),
            generators::gen_complete_kary_tree(2, 2).unwrap(),
            greedy_trap(),
        ];
        for g in graphs {
            assert!(find_seo(&g).is_some(), "{g:?} should be strongly chordal");
            let reference = maximal_d2cs_reference(&g).unwrap();
            assert_eq!(reference, oracle::oracle_maximal(&g).unwrap(), "{g:?}");
            assert!(reference.len() <= g.n()); // never more than n maximal sets
        }
    }

    #[test]
    fn count_equals_n_only_for_k1_among_connected() {
        let k1 = generators::gen_complete(1).unwrap();
        assert_eq!(count_maximal_schordal(&k1).unwrap(), BigCount::from(1u32));
        for n in 2..=6 {
            let g = generators::gen_path(n).unwrap();
            assert!(count_maximal_schordal(&g).unwrap() < BigCount::from(n));
        }
    }

    // Interval graphs are strongly chordal; build a few from interval
    // families and run the full agreement check on them.
    #[test]
    fn interval_graphs_agree_too() {
        let families: Vec<Vec<(u32, u32)>> = vec![
            vec![(0, 5), (1, 2), (3, 4), (4, 6), (6, 7)],
            vec![(0, 2), (1, 4), (3, 6), (5, 8), (7, 9), (0, 9)],
            vec![(0, 1), (1, 3), (2, 5), (4, 6), (5, 7), (6, 8)],
        ];
        for intervals in families {
            let n = intervals.len();
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    let (a, b) = intervals[i];
                    let (c, d) = intervals[j];
                    if a.max(c) <= b.min(d) {
                        edges.push((i + 1, j + 1));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            let ordering = find_seo(&g).unwrap_or_else(|| panic!("{g:?} has an seo"));
            assert!(verify_seo(&g, &ordering).unwrap().is_valid());
            let reference = maximal_d2cs_reference(&g).unwrap();
            assert_eq!(reference, oracle::oracle_maximal(&g).unwrap(), "{g:?}");
            let mut paper = maximal_d2cs_paper(&g, &ordering).unwrap().deduped();
            paper.sort_by(|a, b| a.cmp_canonical(b));
            assert_eq!(paper, reference, "{g:?}");
        }
    }

    #[test]
    fn every_printed_set_is_a_closed_neighborhood_and_d2cs() {
        for g in [
            generators::gen_split_graph(3, 2).unwrap(),
            generators::gen_binomial_tree(3).unwrap(),
            generators::gen_path(7).unwrap(),
        ] {
            let o = find_seo(&g).unwrap();
            let run = maximal_d2cs_paper(&g, &o).unwrap();
            for s in &run.printed {
                assert!(g.is_d2cs(s).unwrap(), "{s:?} not a D2CS in {g:?}");
                assert!(
                    g.vertices()
                        .any(|v| &g.closed_neighborhood(v).unwrap() == s),
                    "{s:?} is no closed neighborhood in {g:?}"
                );
            }
        }
    }

    #[test]
    fn paper_agrees_with_reference_on_test_families() {
        for g in [
            generators::gen_path(8).unwrap(),
            generators::gen_star(6).unwrap(),
            generators::gen_complete(6).unwrap(),
            generators::gen_split_graph(3, 2).unwrap(),
            generators::gen_binomial_tree(4).unwrap(),
            generators::gen_complete_kary_tree(2, 3).unwrap(),
            generators::gen_fibonacci_tree(6).unwrap(),
            greedy_trap(),
        ] {
            let o = find_seo(&g).unwrap();
            let mut paper = maximal_d2cs_paper(&g, &o).unwrap().deduped();
            paper.sort_by(|a, b| a.cmp_canonical(b));
            let reference = maximal_d2cs_reference(&g).unwrap();
            assert_eq!(paper, reference, "{g:?}");
        }
    }
}
