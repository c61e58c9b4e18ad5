//! Deterministic constructors for the counted graph families, plus seeded
//! random connected graphs for cross-checking.
//!
//! Tree generators number vertices breadth-first from the root so generated
//! ids are reproducible.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::formulas::{self, BigCount};
use crate::{Error, Graph, Result};

/// Refuse to materialize graphs past this size; callers wanting more are
/// better served by the formulas.
const MAX_GEN_VERTICES: u128 = 1_000_000;

/// Rooted ordered tree under construction; ids are internal and 0-based
/// until `into_graph` assigns BFS numbers.
#[derive(Default)]
struct TreeBuilder {
    children: Vec<Vec<usize>>,
}

impl TreeBuilder {
    fn node(&mut self) -> usize {
        self.children.push(Vec::new());
        self.children.len() - 1
    }

    fn attach_leftmost(&mut self, parent: usize, child: usize) {
        self.children[parent].insert(0, child);
    }

    fn attach(&mut self, parent: usize, child: usize) {
        self.children[parent].push(child);
    }

    fn into_graph(self, root: usize) -> Result<Graph> {
        let mut order = vec![root];
        let mut head = 0;
        while head < order.len() {
            let x = order[head];
            head += 1;
            order.extend(self.children[x].iter().copied());
        }
        let mut number = vec![0usize; self.children.len()];
        for (i, &x) in order.iter().enumerate() {
            number[x] = i + 1;
        }
        let mut edges = Vec::with_capacity(order.len().saturating_sub(1));
        for (x, kids) in self.children.iter().enumerate() {
            for &c in kids {
                edges.push((number[x], number[c]));
            }
        }
        Graph::new(order.len(), &edges)
    }
}

/// Complete k-ary tree of height h: every internal vertex has exactly k
/// children, all leaves at depth h.
pub fn gen_complete_kary_tree(k: u64, h: u64) -> Result<Graph> {
    if k < 1 {
        return Err(Error::InvalidParam("k-ary tree needs k >= 1".into()));
    }
    let mut count: u128 = 0;
    let mut level_size: u128 = 1;
    for _ in 0..=h {
        count += level_size;
        level_size *= k as u128;
        if count > MAX_GEN_VERTICES {
            return Err(Error::InvalidParam(format!(
                "k-ary tree ({k},{h}) exceeds {MAX_GEN_VERTICES} vertices"
            )));
        }
    }
    let mut tb = TreeBuilder::default();
    let root = tb.node();
    let mut level = vec![root];
    for _ in 0..h {
        let mut next = Vec::with_capacity(level.len() * k as usize);
        for &x in &level {
            for _ in 0..k {
                let c = tb.node();
                tb.attach(x, c);
                next.push(c);
            }
        }
        level = next;
    }
    tb.into_graph(root)
}

/// Fibonacci tree of order n: orders 0 and 1 are a single node; order n is
/// the order-(n-1) tree with a fresh order-(n-2) tree attached as the new
/// leftmost child of its root. (The attachment point is the most literal
/// reading of the definition; the reconcile report tracks how the resulting
/// counts relate to the published g(n).)
pub fn gen_fibonacci_tree(n: u64) -> Result<Graph> {
    check_fib_size(n, 1, 1, 0)?;
    let mut tb = TreeBuilder::default();
    let root = build_fib(&mut tb, n);
    tb.into_graph(root)
}

fn build_fib(tb: &mut TreeBuilder, n: u64) -> usize {
    if n <= 1 {
        return tb.node();
    }
    let main = build_fib(tb, n - 1);
    let sub = build_fib(tb, n - 2);
    tb.attach_leftmost(main, sub);
    main
}

/// Binary Fibonacci tree of order n: order 0 is a single node, order 1 is
/// P_2, order n has a left subtree of order n-1 and a right subtree of
/// order n-2 under a fresh root.
pub fn gen_binary_fibonacci_tree(n: u64) -> Result<Graph> {
    check_fib_size(n, 1, 2, 1)?;
    let mut tb = TreeBuilder::default();
    let root = build_binary_fib(&mut tb, n);
    tb.into_graph(root)
}

fn build_binary_fib(tb: &mut TreeBuilder, n: u64) -> usize {
    match n {
        0 => tb.node(),
        1 => {
            let r = tb.node();
            let c = tb.node();
            tb.attach(r, c);
            r
        }
        _ => {
            let r = tb.node();
            let left = build_binary_fib(tb, n - 1);
            let right = build_binary_fib(tb, n - 2);
            tb.attach(r, left);
            tb.attach(r, right);
            r
        }
    }
}

// Vertex counts follow c(n) = c(n-1) + c(n-2) + extra; extra is 1 for the
// binary variant (a fresh root per step) and 0 otherwise.
fn check_fib_size(n: u64, c0: u128, c1: u128, extra: u128) -> Result<()> {
    let (mut a, mut b) = (c0, c1);
    for _ in 1..n {
        let next = a + b + extra;
        a = b;
        b = next;
        if b > MAX_GEN_VERTICES {
            return Err(Error::InvalidParam(format!(
                "fibonacci-family tree of order {n} exceeds {MAX_GEN_VERTICES} vertices"
            )));
        }
    }
    Ok(())
}

/// Binomial tree B_k: B_0 is one vertex; B_k links two copies of B_{k-1},
/// the root of one becoming the leftmost child of the other. 2^k vertices,
/// root degree k.
pub fn gen_binomial_tree(k: u64) -> Result<Graph> {
    if k >= 20 {
        return Err(Error::InvalidParam(format!(
            "binomial tree B_{k} exceeds {MAX_GEN_VERTICES} vertices"
        )));
    }
    let mut tb = TreeBuilder::default();
    let root = build_binomial(&mut tb, k);
    tb.into_graph(root)
}

fn build_binomial(tb: &mut TreeBuilder, k: u64) -> usize {
    if k == 0 {
        return tb.node();
    }
    let a = build_binomial(tb, k - 1);
    let b = build_binomial(tb, k - 1);
    tb.attach_leftmost(a, b);
    a
}

/// Split graph: clique on 1..=k, plus r private degree-1 pendants per clique
/// vertex. k(r+1) vertices. The published count assumes r > 1; the generator
/// accepts r >= 1 since the formula stays checkable there.
pub fn gen_split_graph(k: u64, r: u64) -> Result<Graph> {
    if k < 1 || r < 1 {
        return Err(Error::InvalidParam(
            "split graph needs k >= 1, r >= 1".into(),
        ));
    }
    if (k as u128) * (r as u128 + 1) > MAX_GEN_VERTICES {
        return Err(Error::InvalidParam("split graph too large".into()));
    }
    let (k, r) = (k as usize, r as usize);
    let mut edges = Vec::new();
    for u in 1..=k {
        for v in u + 1..=k {
            edges.push((u, v));
        }
    }
    for u in 1..=k {
        for j in 0..r {
            edges.push((u, k + (u - 1) * r + j + 1));
        }
    }
    Graph::new(k * (r + 1), &edges)
}

/// Ladder P_n □ P_2: rails 1..=n and n+1..=2n, rung i — n+i.
pub fn gen_ladder(n: u64) -> Result<Graph> {
    check_n(n, 1, "ladder")?;
    let n = n as usize;
    let mut edges = Vec::new();
    for i in 1..n {
        edges.push((i, i + 1));
        edges.push((n + i, n + i + 1));
    }
    for i in 1..=n {
        edges.push((i, n + i));
    }
    Graph::new(2 * n, &edges)
}

/// Star K_{1,n}: center 1, leaves 2..=n+1.
pub fn gen_star(n: u64) -> Result<Graph> {
    check_n(n, 1, "star")?;
    let n = n as usize;
    let edges: Vec<_> = (2..=n + 1).map(|v| (1, v)).collect();
    Graph::new(n + 1, &edges)
}

pub fn gen_complete(n: u64) -> Result<Graph> {
    check_n(n, 1, "complete graph")?;
    let n = n as usize;
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges)
}

pub fn gen_empty(n: u64) -> Result<Graph> {
    check_n(n, 1, "empty graph")?;
    Graph::new(n as usize, &[])
}

pub fn gen_path(n: u64) -> Result<Graph> {
    check_n(n, 1, "path")?;
    let n = n as usize;
    let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    Graph::new(n, &edges)
}

pub fn gen_cycle(n: u64) -> Result<Graph> {
    check_n(n, 3, "cycle")?;
    let n = n as usize;
    let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    edges.push((1, n));
    Graph::new(n, &edges)
}

/// The canonical path-like k-tree: K_{k+1} on 1..=k+1, then each new vertex
/// i is joined to the k most recently added vertices i-k..=i-1.
pub fn gen_ktree(n: u64, k: u64) -> Result<Graph> {
    if k < 1 || n < k + 1 {
        return Err(Error::InvalidParam(format!(
            "k-tree needs n >= k+1 >= 2, got n={n} k={k}"
        )));
    }
    if n as u128 > MAX_GEN_VERTICES {
        return Err(Error::InvalidParam("k-tree too large".into()));
    }
    let (n, k) = (n as usize, k as usize);
    let mut edges = Vec::new();
    for u in 1..=k + 1 {
        for v in u + 1..=k + 1 {
            edges.push((u, v));
        }
    }
    for i in k + 2..=n {
        for j in i - k..i {
            edges.push((j, i));
        }
    }
    Graph::new(n, &edges)
}

/// Erdős–Rényi G(n, p) conditioned on connectivity: redraw until connected.
/// Deterministic for a fixed seed. p = 0 with n > 1 can never connect and is
/// rejected up front.
pub fn gen_random_connected(n: u64, p: f64, seed: u64) -> Result<Graph> {
    check_n(n, 1, "random graph")?;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParam(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    if n as u128 > MAX_GEN_VERTICES {
        return Err(Error::InvalidParam("random graph too large".into()));
    }
    let n = n as usize;
    if n > 1 && p == 0.0 {
        return Err(Error::InvalidParam(
            "p = 0 with n > 1 can never produce a connected graph".into(),
        ));
    }
    let threshold = (p * 2f64.powi(64)) as u128;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                if (rng.next_u64() as u128) < threshold {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
}

fn check_n(n: u64, min: u64, what: &str) -> Result<()> {
    if n < min {
        return Err(Error::InvalidParam(format!(
            "{what} needs n >= {min}, got {n}"
        )));
    }
    Ok(())
}

/// A closed-form value for a family instance, with the k-tree dispute flag.
pub struct FormulaValue {
    pub value: BigCount,
    pub disputed: bool,
}

/// A graph family instance: which family, with which parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec {
    KaryTree { k: u64, h: u64 },
    FibonacciTree { n: u64 },
    BinaryFibonacciTree { n: u64 },
    BinomialTree { k: u64 },
    Split { k: u64, r: u64 },
    Star { n: u64 },
    Ladder { n: u64 },
    Complete { n: u64 },
    Empty { n: u64 },
    Path { n: u64 },
    Cycle { n: u64 },
    KTree { n: u64, k: u64 },
    RandomConnected { n: u64, p: f64, seed: u64 },
}

impl FamilySpec {
    /// Parse the CLI surface: a family name plus comma-separated parameters
    /// (integers; the random family's probability is a decimal).
    pub fn from_cli(family: &str, params: &str, seed: Option<u64>) -> Result<FamilySpec> {
        let parts: Vec<&str> = params
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect();
        let int = |i: usize| -> Result<u64> {
            parts
                .get(i)
                .ok_or_else(|| {
                    Error::InvalidParam(format!(
                        "family '{family}' needs more parameters, got '{params}'"
                    ))
                })?
                .parse()
                .map_err(|_| Error::InvalidParam(format!("'{}' is not an integer", parts[i])))
        };
        let exactly = |want: usize| -> Result<()> {
            if parts.len() != want {
                return Err(Error::InvalidParam(format!(
                    "family '{family}' takes {want} parameter(s), got {}",
                    parts.len()
                )));
            }
            Ok(())
        };
        let spec = match family {
            "kary" => {
                exactly(2)?;
                FamilySpec::KaryTree {
                    k: int(0)?,
                    h: int(1)?,
                }
            }
            "fibonacci" => {
                exactly(1)?;
                FamilySpec::FibonacciTree { n: int(0)? }
            }
            "binary-fibonacci" => {
                exactly(1)?;
                FamilySpec::BinaryFibonacciTree { n: int(0)? }
            }
            "binomial" => {
                exactly(1)?;
                FamilySpec::BinomialTree { k: int(0)? }
            }
            "split" => {
                exactly(2)?;
                FamilySpec::Split {
                    k: int(0)?,
                    r: int(1)?,
                }
            }
            "star" => {
                exactly(1)?;
                FamilySpec::Star { n: int(0)? }
            }
            "ladder" => {
                exactly(1)?;
                FamilySpec::Ladder { n: int(0)? }
            }
            "complete" => {
                exactly(1)?;
                FamilySpec::Complete { n: int(0)? }
            }
            "empty" => {
                exactly(1)?;
                FamilySpec::Empty { n: int(0)? }
            }
            "path" => {
                exactly(1)?;
                FamilySpec::Path { n: int(0)? }
            }
            "cycle" => {
                exactly(1)?;
                FamilySpec::Cycle { n: int(0)? }
            }
            "ktree" => {
                exactly(2)?;
                FamilySpec::KTree {
                    n: int(0)?,
                    k: int(1)?,
                }
            }
            "random" => {
                exactly(2)?;
                let p: f64 = parts[1].parse().map_err(|_| {
                    Error::InvalidParam(format!("'{}' is not a probability", parts[1]))
                })?;
                FamilySpec::RandomConnected {
                    n: int(0)?,
                    p,
                    seed: seed.unwrap_or(0),
                }
            }
            other => {
                return Err(Error::InvalidParam(format!("unknown family '{other}'")));
            }
        };
        Ok(spec)
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            FamilySpec::KaryTree { .. } => "kary",
            FamilySpec::FibonacciTree { .. } => "fibonacci",
            FamilySpec::BinaryFibonacciTree { .. } => "binary-fibonacci",
            FamilySpec::BinomialTree { .. } => "binomial",
            FamilySpec::Split { .. } => "split",
            FamilySpec::Star { .. } => "star",
            FamilySpec::Ladder { .. } => "ladder",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::Empty { .. } => "empty",
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::KTree { .. } => "ktree",
            FamilySpec::RandomConnected { .. } => "random",
        }
    }

    pub fn params(&self) -> Vec<String> {
        match *self {
            FamilySpec::KaryTree { k, h } => vec![k.to_string(), h.to_string()],
            FamilySpec::FibonacciTree { n }
            | FamilySpec::BinaryFibonacciTree { n }
            | FamilySpec::Star { n }
            | FamilySpec::Ladder { n }
            | FamilySpec::Complete { n }
            | FamilySpec::Empty { n }
            | FamilySpec::Path { n }
            | FamilySpec::Cycle { n } => vec![n.to_string()],
            FamilySpec::BinomialTree { k } => vec![k.to_string()],
            FamilySpec::Split { k, r } => vec![k.to_string(), r.to_string()],
            FamilySpec::KTree { n, k } => vec![n.to_string(), k.to_string()],
            FamilySpec::RandomConnected { n, p, .. } => vec![n.to_string(), p.to_string()],
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match *self {
            FamilySpec::RandomConnected { seed, .. } => Some(seed),
            _ => None,
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        match *self {
            FamilySpec::KaryTree { k, h } => gen_complete_kary_tree(k, h),
            FamilySpec::FibonacciTree { n } => gen_fibonacci_tree(n),
            FamilySpec::BinaryFibonacciTree { n } => gen_binary_fibonacci_tree(n),
            FamilySpec::BinomialTree { k } => gen_binomial_tree(k),
            FamilySpec::Split { k, r } => gen_split_graph(k, r),
            FamilySpec::Star { n } => gen_star(n),
            FamilySpec::Ladder { n } => gen_ladder(n),
            FamilySpec::Complete { n } => gen_complete(n),
            FamilySpec::Empty { n } => gen_empty(n),
            FamilySpec::Path { n } => gen_path(n),
            FamilySpec::Cycle { n } => gen_cycle(n),
            FamilySpec::KTree { n, k } => gen_ktree(n, k),
            FamilySpec::RandomConnected { n, p, seed } => gen_random_connected(n, p, seed),
        }
    }

    /// The family's published count, if it has one. Path, cycle and random
    /// instances have none; the k-ary closed form is singular at k = 1.
    pub fn formula_count(&self) -> Result<FormulaValue> {
        let plain = |value: BigCount| FormulaValue {
            value,
            disputed: false,
        };
        match *self {
            FamilySpec::KaryTree { k, h } => Ok(plain(formulas::count_kary(k, h)?)),
            FamilySpec::FibonacciTree { n } => Ok(plain(formulas::count_fib_tree(n)?)),
            FamilySpec::BinaryFibonacciTree { n } => Ok(plain(formulas::count_binary_fib_tree(n)?)),
            FamilySpec::BinomialTree { k } => Ok(plain(formulas::count_binomial_tree(k))),
            FamilySpec::Split { k, r } => Ok(plain(formulas::count_split(k, r)?)),
            FamilySpec::Star { n } => Ok(plain(formulas::count_star(n))),
            FamilySpec::Ladder { n } => Ok(plain(formulas::count_ladder(n)?)),
            FamilySpec::Complete { n } => Ok(plain(formulas::count_complete(n)?)),
            FamilySpec::Empty { n } => Ok(plain(formulas::count_empty(n)?)),
            FamilySpec::KTree { n, k } => Ok(FormulaValue {
                value: formulas::count_ktree(n, k)?,
                disputed: true,
            }),
            FamilySpec::Path { .. }
            | FamilySpec::Cycle { .. }
            | FamilySpec::RandomConnected { .. } => Err(Error::InvalidParam(format!(
                "family '{}' has no closed-form count",
                self.family_name()
            ))),
        }
    }
}
