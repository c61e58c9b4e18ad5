//! Simple undirected graphs with 1-based vertex ids, bit-set adjacency,
//! and the distance/diameter/square primitives everything else builds on.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use crate::{Error, Result};

/// A subset of vertices, stored as a bit set. Bit `v - 1` holds vertex `v`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new() -> Self {
        VertexSet { words: Vec::new() }
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = VertexSet::new();
        s.insert(v);
        s
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v >= 1, "vertex ids are 1-based");
        let (w, b) = ((v - 1) / 64, (v - 1) % 64);
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << b;
    }

    pub fn remove(&mut self, v: usize) {
        let (w, b) = ((v - 1) / 64, (v - 1) % 64);
        if w < self.words.len() {
            self.words[w] &= !(1 << b);
            self.trim();
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        if v == 0 {
            return false;
        }
        let (w, b) = ((v - 1) / 64, (v - 1) % 64);
        w < self.words.len() && self.words[w] >> b & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Vertices in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + b + 1)
                }
            })
        })
    }

    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn max(&self) -> Option<usize> {
        let wi = self.words.len().checked_sub(1)?;
        Some(wi * 64 + 63 - self.words[wi].leading_zeros() as usize + 1)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut words = vec![0; self.words.len().max(other.words.len())];
        for (i, w) in words.iter_mut().enumerate() {
            *w = self.words.get(i).copied().unwrap_or(0) | other.words.get(i).copied().unwrap_or(0);
        }
        VertexSet { words }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut words: Vec<u64> = self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| a & b)
            .collect();
        while words.last() == Some(&0) {
            words.pop();
        }
        VertexSet { words }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut words: Vec<u64> = self
            .words
            .iter()
            .enumerate()
            .map(|(i, a)| a & !other.words.get(i).copied().unwrap_or(0))
            .collect();
        while words.last() == Some(&0) {
            words.pop();
        }
        VertexSet { words }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, a)| a & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .any(|(a, b)| a & b != 0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Canonical comparison: lexicographic on the ascending vertex sequence.
    pub fn cmp_canonical(&self, other: &VertexSet) -> Ordering {
        self.iter().cmp(other.iter())
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Shortest-path distance; `Infinite` between different components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    pub fn as_finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "INF"),
        }
    }
}

/// A simple undirected graph on vertices `1..=n`.
///
/// No self-loops, no multi-edges; construction rejects both instead of
/// repairing silently. Immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![VertexSet::new(); n];
        let mut m = 0;
        for &(u, v) in edges {
            if u < 1 || u > n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v < 1 || v > n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if adj[u - 1].contains(v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u - 1].insert(v);
            adj[v - 1].insert(u);
            m += 1;
        }
        Ok(Graph { n, m, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u - 1].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in self.vertices() {
            for v in self.neighbors(u).iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < 1 || v > self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        Ok(())
    }

    fn check_subset(&self, s: &VertexSet) -> Result<()> {
        if let Some(v) = s.max() {
            if v > self.n {
                return Err(Error::VertexOutOfRange { v, n: self.n });
            }
        }
        Ok(())
    }

    /// BFS distances from `source`, indexed by vertex (entry `v - 1` is d(source, v)).
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<Distance>> {
        self.check_vertex(source)?;
        let mut dist = vec![Distance::Infinite; self.n];
        dist[source - 1] = Distance::Finite(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = match dist[u - 1] {
                Distance::Finite(d) => d,
                Distance::Infinite => unreachable!(),
            };
            for v in self.neighbors(u).iter() {
                if dist[v - 1] == Distance::Infinite {
                    dist[v - 1] = Distance::Finite(du + 1);
                    queue.push_back(v);
                }
            }
        }
        Ok(dist)
    }

    /// Subgraph induced by `s`, with new ids `1..=|s|` assigned in ascending
    /// order of the original ids. The returned map sends new id `i` to
    /// original id `map[i - 1]`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_subset(s)?;
        let map = s.to_vec();
        let mut new_id = vec![0usize; self.n + 1];
        for (i, &v) in map.iter().enumerate() {
            new_id[v] = i + 1;
        }
        let mut edges = Vec::new();
        for &v in &map {
            for u in self.neighbors(v).intersection(s).iter() {
                if v < u {
                    edges.push((new_id[v], new_id[u]));
                }
            }
        }
        Ok((Graph::new(map.len(), &edges)?, map))
    }

    /// Maximum pairwise distance; `Infinite` if disconnected. Graphs with at
    /// most one vertex (including the empty graph) have diameter 0.
    pub fn diameter(&self) -> Distance {
        if self.n <= 1 {
            return Distance::Finite(0);
        }
        let mut best = Distance::Finite(0);
        for v in self.vertices() {
            let dist = self.bfs_distances(v).expect("vertex in range");
            for d in dist {
                if d == Distance::Infinite {
                    return Distance::Infinite;
                }
                best = best.max(d);
            }
        }
        best
    }

    /// The square G²: same vertices, u ~ v iff 1 <= d_G(u, v) <= 2.
    pub fn square(&self) -> Graph {
        let mut adj = Vec::with_capacity(self.n);
        for v in self.vertices() {
            let mut reach = self.neighbors(v).clone();
            for u in self.neighbors(v).iter() {
                reach = reach.union(self.neighbors(u));
            }
            reach.remove(v);
            adj.push(reach);
        }
        let m = adj.iter().map(|s| s.len()).sum::<usize>() / 2;
        Graph { n: self.n, m, adj }
    }

    /// True iff diam(G[s]) <= 2. Holds vacuously for |s| <= 1.
    pub fn is_d2cs(&self, s: &VertexSet) -> Result<bool> {
        self.check_subset(s)?;
        if s.len() <= 1 {
            return Ok(true);
        }
        let (sub, _) = self.induced_subgraph(s)?;
        Ok(sub.diameter() <= Distance::Finite(2))
    }

    /// N[v] = N(v) ∪ {v}. Always a D2CS: neighbors meet through v.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        let mut s = self.neighbors(v).clone();
        s.insert(v);
        Ok(s)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen[start - 1] {
                continue;
            }
            let mut comp = VertexSet::new();
            let mut queue = VecDeque::from([start]);
            seen[start - 1] = true;
            while let Some(u) = queue.pop_front() {
                comp.insert(u);
                for v in self.neighbors(u).iter() {
                    if !seen[v - 1] {
                        seen[v - 1] = true;
                        queue.push_back(v);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// All vertices as a set.
    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.n,
            self.m,
            self.edges()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn k(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    fn vs(vals: &[usize]) -> VertexSet {
        vals.iter().copied().collect()
    }

    #[test]
    fn construction_rejects_malformed_input() {
        assert_eq!(Graph::new(3, &[(1, 1)]).unwrap_err(), Error::SelfLoop(1));
        assert_eq!(
            Graph::new(3, &[(1, 2), (2, 1)]).unwrap_err(),
            Error::DuplicateEdge(1, 2)
        );
        assert_eq!(
            Graph::new(3, &[(1, 4)]).unwrap_err(),
            Error::VertexOutOfRange { v: 4, n: 3 }
        );
        let g = Graph::new(0, &[]).unwrap();
        assert_eq!(g.n(), 0);
        assert_eq!(g.m(), 0);
    }

    #[test]
    fn m_is_half_the_degree_sum() {
        let g = path(5);
        let degsum: usize = g.vertices().map(|v| g.degree(v)).sum();
        assert_eq!(g.m() * 2, degsum);
    }

    #[test]
    fn bfs_distances_on_p4() {
        let g = path(4);
        let d = g.bfs_distances(1).unwrap();
        assert_eq!(
            d,
            vec![
                Distance::Finite(0),
                Distance::Finite(1),
                Distance::Finite(2),
                Distance::Finite(3)
            ]
        );
    }

    #[test]
    fn bfs_unreachable_is_infinite() {
        let g = Graph::new(3, &[(1, 2)]).unwrap();
        let d = g.bfs_distances(1).unwrap();
        assert_eq!(d[2], Distance::Infinite);
        assert_eq!(d[1], Distance::Finite(1));
    }

    #[test]
    fn bfs_on_complete_graph() {
        let d = k(3).bfs_distances(2).unwrap();
        assert_eq!(
            d,
            vec![
                Distance::Finite(1),
                Distance::Finite(0),
                Distance::Finite(1)
            ]
        );
    }

    #[test]
    fn bfs_rejects_bad_source() {
        assert!(path(3).bfs_distances(7).is_err());
    }

    #[test]
    fn induced_subgraph_cases() {
        let g = path(4);
        let (h, map) = g.induced_subgraph(&vs(&[1, 3])).unwrap();
        assert_eq!(h.n(), 2);
        assert_eq!(h.m(), 0);
        assert_eq!(map, vec![1, 3]);

        let (h, _) = g.induced_subgraph(&vs(&[1, 2, 3])).unwrap();
        assert_eq!(h.m(), 2);
        assert_eq!(h.diameter(), Distance::Finite(2));

        let (h, map) = g.induced_subgraph(&VertexSet::new()).unwrap();
        assert_eq!(h.n(), 0);
        assert!(map.is_empty());

        assert!(g.induced_subgraph(&vs(&[5])).is_err());
    }

    #[test]
    fn diameter_cases() {
        assert_eq!(path(4).diameter(), Distance::Finite(3));
        assert_eq!(
            Graph::new(3, &[(1, 2)]).unwrap().diameter(),
            Distance::Infinite
        );
        assert_eq!(Graph::new(1, &[]).unwrap().diameter(), Distance::Finite(0));
        assert_eq!(Graph::new(0, &[]).unwrap().diameter(), Distance::Finite(0));
    }

    #[test]
    fn square_of_p4() {
        let sq = path(4).square();
        assert_eq!(sq.edges(), vec![(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]);
    }

    #[test]
    fn square_of_complete_is_complete() {
        let g = k(4);
        assert_eq!(g.square().edges(), g.edges());
    }

    #[test]
    fn square_of_star_is_complete() {
        let star = Graph::new(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(star.square().m(), 6);
    }

    #[test]
    fn is_d2cs_on_p4() {
        let g = path(4);
        assert!(g.is_d2cs(&vs(&[1, 2, 3])).unwrap());
        assert!(!g.is_d2cs(&vs(&[1, 4])).unwrap());
        assert!(!g.is_d2cs(&vs(&[1, 2, 3, 4])).unwrap());
        assert!(g.is_d2cs(&VertexSet::new()).unwrap());
        assert!(g.is_d2cs(&vs(&[2])).unwrap());
        assert!(g.is_d2cs(&vs(&[2, 3])).unwrap());
    }

    // a subset of a D2CS need not be one
    #[test]
    fn d2cs_is_not_subset_monotone() {
        let g = path(4);
        assert!(g.is_d2cs(&vs(&[1, 2, 3])).unwrap());
        assert!(!g.is_d2cs(&vs(&[1, 3])).unwrap());
    }

    #[test]
    fn closed_neighborhood_cases() {
        let g = path(4);
        assert_eq!(g.closed_neighborhood(2).unwrap(), vs(&[1, 2, 3]));
        assert_eq!(k(4).closed_neighborhood(1).unwrap(), vs(&[1, 2, 3, 4]));
        let iso = Graph::new(2, &[]).unwrap();
        assert_eq!(iso.closed_neighborhood(1).unwrap(), vs(&[1]));
        assert!(g.closed_neighborhood(0).is_err());
    }

    #[test]
    fn components_and_connectivity() {
        let g = Graph::new(5, &[(1, 2), (4, 5)]).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0], vs(&[1, 2]));
        assert_eq!(comps[1], vs(&[3]));
        assert_eq!(comps[2], vs(&[4, 5]));
        assert!(!g.is_connected());
        assert!(path(4).is_connected());
    }

    #[test]
    fn vertex_set_ops() {
        let a = vs(&[1, 3, 70]);
        let b = vs(&[3, 70, 100]);
        assert_eq!(a.intersection(&b), vs(&[3, 70]));
        assert_eq!(a.union(&b), vs(&[1, 3, 70, 100]));
        assert_eq!(a.difference(&b), vs(&[1]));
        assert!(vs(&[3]).is_subset(&a));
        assert!(!a.is_subset(&b));
        assert_eq!(a.max(), Some(70));
        assert_eq!(a.min(), Some(1));
        assert_eq!(a.len(), 3);
        let mut c = a.clone();
        c.remove(70);
        assert_eq!(c, vs(&[1, 3]));
        assert_eq!(c.max(), Some(3));
    }

    #[test]
    fn canonical_order_is_lex_on_sorted_lists() {
        let a = vs(&[1, 4]);
        let b = vs(&[2, 3]);
        assert_eq!(a.cmp_canonical(&b), Ordering::Less);
        assert_eq!(
            vs(&[1, 2, 3]).cmp_canonical(&vs(&[1, 2, 3, 4])),
            Ordering::Less
        );
    }
}
