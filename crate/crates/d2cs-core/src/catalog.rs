//! A deterministic catalog of pairwise non-isomorphic trees, used to drive
//! the strongly chordal audit. Structured families are mixed with seeded
//! Prüfer-random trees and deduplicated by AHU canonical form.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::graph::Graph;
use crate::{generators, Error, Result};

/// Decode a Prüfer sequence over 1..=n into the labeled tree on n = len + 2
/// vertices. Smallest eligible leaf first, so the decoding is canonical.
pub fn tree_from_pruefer(seq: &[usize]) -> Result<Graph> {
    let n = seq.len() + 2;
    for &x in seq {
        if x < 1 || x > n {
            return Err(Error::InvalidParam(format!(
                "Prüfer symbol {x} outside 1..={n}"
            )));
        }
    }
    let mut degree = vec![1usize; n + 1];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut used = vec![false; n + 1];
    for &x in seq {
        let leaf = (1..=n)
            .find(|&v| degree[v] == 1 && !used[v])
            .expect("a leaf always exists while decoding");
        used[leaf] = true;
        edges.push((leaf.min(x), leaf.max(x)));
        degree[x] -= 1;
    }
    let mut last = (1..=n).filter(|&v| !used[v] && degree[v] == 1);
    let (u, v) = (last.next().unwrap(), last.next().unwrap());
    edges.push((u.min(v), u.max(v)));
    Graph::new(n, &edges)
}

/// AHU canonical form of a free tree: root at the center (taking the
/// lexicographically smaller code when there are two centers), then encode
/// each subtree as its sorted child codes in parentheses. Equal codes iff
/// isomorphic.
pub fn ahu_code(g: &Graph) -> String {
    assert!(
        g.is_connected() && g.m() + 1 == g.n().max(1),
        "ahu_code needs a tree"
    );
    if g.n() == 0 {
        return String::new();
    }
    centers(g)
        .into_iter()
        .map(|c| rooted_code(g, c, 0))
        .min()
        .expect("a tree has one or two centers")
}

fn centers(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n <= 2 {
        return g.vertices().collect();
    }
    let mut degree: Vec<usize> = (1..=n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = g.vertices().filter(|&v| degree[v - 1] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            removed[leaf - 1] = true;
            for u in g.neighbors(leaf).iter() {
                if !removed[u - 1] {
                    degree[u - 1] -= 1;
                    if degree[u - 1] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    let mut out: Vec<usize> = g.vertices().filter(|&v| !removed[v - 1]).collect();
    out.sort_unstable();
    out
}

fn rooted_code(g: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&u| u != parent)
        .map(|u| rooted_code(g, u, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Named, pairwise non-isomorphic trees with 2..=max_n vertices. Names
/// record the exact construction so report entries stay reproducible.
pub fn tree_catalog(max_n: usize) -> Vec<(String, Graph)> {
    let mut entries: Vec<(String, Graph)> = Vec::new();

    for n in 2..=max_n as u64 {
        entries.push((format!("path-{n}"), generators::gen_path(n).unwrap()));
    }
    for leaves in 2..max_n as u64 {
        entries.push((
            format!("star-{leaves}"),
            generators::gen_star(leaves).unwrap(),
        ));
    }
    // spiders: center with three paths of lengths a <= b <= c attached
    for a in 1..=max_n {
        for b in a..=max_n {
            for c in b..=max_n {
                if 1 + a + b + c <= max_n {
                    entries.push((format!("spider-{a}-{b}-{c}"), spider(&[a, b, c])));
                }
            }
        }
    }
    // double stars: an edge with p pendants on one end, q on the other
    for p in 2..max_n {
        for q in p..max_n {
            if p + q + 2 <= max_n {
                entries.push((format!("double-star-{p}-{q}"), double_star(p, q)));
            }
        }
    }
    for (k, h) in [(2u64, 2u64), (2, 3), (3, 2)] {
        if let Ok(g) = generators::gen_complete_kary_tree(k, h) {
            if g.n() <= max_n {
                entries.push((format!("kary-{k}-{h}"), g));
            }
        }
    }
    for k in 1..=4u64 {
        let g = generators::gen_binomial_tree(k).unwrap();
        if g.n() <= max_n {
            entries.push((format!("binomial-{k}"), g));
        }
    }
    for n in 2..=7u64 {
        let g = generators::gen_fibonacci_tree(n).unwrap();
        if g.n() <= max_n {
            entries.push((format!("fibonacci-{n}"), g));
        }
    }
    for n in 1..=4u64 {
        let g = generators::gen_binary_fibonacci_tree(n).unwrap();
        if g.n() <= max_n {
            entries.push((format!("binary-fibonacci-{n}"), g));
        }
    }
    // seeded random labeled trees for shape coverage
    for n in [7usize, 8, 9, 10] {
        if n > max_n {
            continue;
        }
        for seed in 0..12u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed * 1000 + n as u64);
            let seq: Vec<usize> = (0..n - 2)
                .map(|_| (rng.next_u64() % n as u64) as usize + 1)
                .collect();
            let g = tree_from_pruefer(&seq).unwrap();
            entries.push((format!("pruefer-{n}-{seed}"), g));
        }
    }

    let mut seen = std::collections::HashSet::new();
    entries
        .into_iter()
        .filter(|(_, g)| seen.insert(ahu_code(g)))
        .collect()
}

fn spider(legs: &[usize]) -> Graph {
    let n = 1 + legs.iter().sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 2;
    for &len in legs {
        let mut prev = 1;
        for _ in 0..len {
            edges.push((prev.min(next), prev.max(next)));
            prev = next;
            next += 1;
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn double_star(p: usize, q: usize) -> Graph {
    let n = p + q + 2;
    let mut edges = vec![(1, 2)];
    for i in 0..p {
        edges.push((1, 3 + i));
    }
    for i in 0..q {
        edges.push((2, 3 + p + i));
    }
    Graph::new(n, &edges).unwrap()
}
