//! Dense undirected simple graphs, DIMACS clq I/O and random instance
//! generators.
//!
//! The adjacency matrix representation is deliberate: every solver in this
//! crate works on dense benchmark instances where matrix lookups dominate.

use std::collections::{HashMap, HashSet};
use std::io::{BufRead, Write};
use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("dimacs format error: {0}")]
    Format(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("generation failed: {0}")]
    Generation(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// A simple undirected graph over vertices `0..n`.
///
/// `adjacent` is kept symmetric with a false diagonal; `degree[v]` is the
/// number of true entries in row `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adjacent: Vec<Vec<bool>>,
    degree: Vec<usize>,
    edge_count: usize,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adjacent: vec![vec![false; n]; n],
            degree: vec![0; n],
            edge_count: 0,
        }
    }

    /// Build from an undirected edge list. Self-loops are rejected,
    /// duplicate edges are idempotent.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        if u == v || self.adjacent[u][v] {
            return;
        }
        self.adjacent[u][v] = true;
        self.adjacent[v][u] = true;
        self.degree[u] += 1;
        self.degree[v] += 1;
        self.edge_count += 1;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacent[u][v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degree[v]
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sum of the degrees of the neighbourhood of `v`.
    pub fn neighbourhood_degree_sum(&self, v: usize) -> usize {
        (0..self.n)
            .filter(|&u| self.adjacent[v][u])
            .map(|u| self.degree[u])
            .sum()
    }

    /// True iff every pair of vertices in `vs` is adjacent.
    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&w| self.adjacent[u][w]))
    }

    /// Undirected edges with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n).filter_map(move |v| self.adjacent[u][v].then_some((u, v)))
        })
    }
}

/// Parse a graph in DIMACS clq format.
///
/// `c` comment lines are ignored anywhere, a single `p edge <n> <m>` line
/// must precede the `e <u> <v>` lines, and endpoints are 1-based. The `m`
/// announced in the `p` line is advisory; edges are counted from the `e`
/// lines. Self-loop edges are skipped with a warning, duplicates are
/// idempotent.
pub fn parse_dimacs<R: BufRead>(reader: R) -> Result<Graph, GraphError> {
    let mut graph: Option<Graph> = None;
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            None | Some("c") => continue,
            Some("p") => {
                if graph.is_some() {
                    return Err(GraphError::Format(format!(
                        "line {}: duplicate p line",
                        lineno + 1
                    )));
                }
                let kind = tokens.next().unwrap_or("");
                if kind != "edge" && kind != "col" {
                    return Err(GraphError::Format(format!(
                        "line {}: expected `p edge <n> <m>`",
                        lineno + 1
                    )));
                }
                let n: usize = tokens.next().and_then(|t| t.parse().ok()).ok_or_else(|| {
                    GraphError::Format(format!("line {}: bad vertex count", lineno + 1))
                })?;
                // The edge count in the p line is not trusted.
                graph = Some(Graph::empty(n));
            }
            Some("e") => {
                let g = graph.as_mut().ok_or_else(|| {
                    GraphError::Format(format!("line {}: e line before p line", lineno + 1))
                })?;
                let u: usize = tokens.next().and_then(|t| t.parse().ok()).ok_or_else(|| {
                    GraphError::Format(format!("line {}: bad edge endpoint", lineno + 1))
                })?;
                let v: usize = tokens.next().and_then(|t| t.parse().ok()).ok_or_else(|| {
                    GraphError::Format(format!("line {}: bad edge endpoint", lineno + 1))
                })?;
                if u < 1 || u > g.n || v < 1 || v > g.n {
                    return Err(GraphError::Format(format!(
                        "line {}: vertex out of range 1..={}",
                        lineno + 1,
                        g.n
                    )));
                }
                if u == v {
                    log::warn!("line {}: self-loop e {} {} skipped", lineno + 1, u, v);
                    continue;
                }
                g.add_edge(u - 1, v - 1);
            }
            Some(other) => {
                return Err(GraphError::Format(format!(
                    "line {}: unrecognised line `{}`",
                    lineno + 1,
                    other
                )));
            }
        }
    }
    graph.ok_or_else(|| GraphError::Format("missing p line".into()))
}

/// Write a graph in DIMACS clq format: `p edge n m` then one `e u v` line
/// per edge with `u < v`, 1-based, LF line endings.
pub fn write_dimacs<W: Write>(g: &Graph, mut out: W) -> std::io::Result<()> {
    writeln!(out, "p edge {} {}", g.n(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1)?;
    }
    Ok(())
}

pub fn write_dimacs_string(g: &Graph) -> String {
    let mut buf = Vec::new();
    write_dimacs(g, &mut buf).expect("write to Vec cannot fail");
    String::from_utf8(buf).expect("dimacs output is ascii")
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdos-Renyi random graph: each unordered pair becomes an edge with
/// independent probability `p`. Deterministic per `(n, p, seed)`.
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::Argument("n must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(GraphError::Argument(format!("p = {p} outside [0, 1]")));
    }
    let mut rng = rng_for(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Random k-regular graph via the pairing model: vertex stubs are matched
/// at random and offending pairs (loops, multi-edges) are repaired with
/// random double-edge swaps. Deterministic per `(n, k, seed)`.
pub fn gen_k_regular(n: usize, k: usize, seed: u64) -> Result<Graph, GraphError> {
    if k >= n {
        return Err(GraphError::Argument(format!("k = {k} must be < n = {n}")));
    }
    if !(n * k).is_multiple_of(2) {
        return Err(GraphError::Argument(format!("n*k = {} is odd", n * k)));
    }
    let mut rng = rng_for(seed);
    let m = n * k / 2;
    for _attempt in 0..50 {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, k)).collect();
        stubs.shuffle(&mut rng);
        let mut pairs: Vec<(usize, usize)> =
            (0..m).map(|i| (stubs[2 * i], stubs[2 * i + 1])).collect();

        let mut counts: HashMap<(usize, usize), usize> = HashMap::new();
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        for &(a, b) in &pairs {
            *counts.entry(key(a, b)).or_insert(0) += 1;
        }
        let is_bad = |counts: &HashMap<(usize, usize), usize>, a: usize, b: usize| {
            a == b || counts[&key(a, b)] > 1
        };

        let mut budget = 50 * m + 1000;
        let mut repaired = true;
        loop {
            let bad: Vec<usize> = (0..m)
                .filter(|&i| is_bad(&counts, pairs[i].0, pairs[i].1))
                .collect();
            if bad.is_empty() {
                break;
            }
            if budget == 0 {
                repaired = false;
                break;
            }
            for &i in &bad {
                if budget == 0 {
                    break;
                }
                budget -= 1;
                let j = rng.random_range(0..m);
                if i == j {
                    continue;
                }
                let (a, b) = pairs[i];
                let (c, d) = pairs[j];
                // Swap to (a,d),(c,b), keeping all degrees intact.
                if a == d || c == b {
                    continue;
                }
                let mut next = counts.clone();
                *next.get_mut(&key(a, b)).unwrap() -= 1;
                *next.get_mut(&key(c, d)).unwrap() -= 1;
                *next.entry(key(a, d)).or_insert(0) += 1;
                *next.entry(key(c, b)).or_insert(0) += 1;
                let before = is_bad(&counts, a, b) as usize + is_bad(&counts, c, d) as usize;
                let after = is_bad(&next, a, d) as usize + is_bad(&next, c, b) as usize;
                if after < before {
                    pairs[i] = (a, d);
                    pairs[j] = (c, b);
                    counts = next;
                }
            }
        }
        if repaired {
            let g = Graph::from_edges(n, &pairs);
            debug_assert!((0..n).all(|v| g.degree(v) == k));
            return Ok(g);
        }
    }
    Err(GraphError::Generation(format!(
        "could not realise a simple {k}-regular graph on {n} vertices"
    )))
}

/// Watts-Strogatz small-world graph: ring lattice joining each vertex to
/// its `k` right neighbours, then each lattice edge rewired with
/// probability `p` to a random non-duplicate endpoint. Edge count is
/// preserved. Deterministic per `(n, k, p, seed)`.
pub fn gen_small_world(n: usize, k: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    if 2 * k >= n {
        return Err(GraphError::Argument(format!(
            "need 2k < n, got k = {k}, n = {n}"
        )));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(GraphError::Argument(format!("p = {p} outside [0, 1]")));
    }
    let mut rng = rng_for(seed);
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut edges: HashSet<(usize, usize)> = HashSet::new();
    for u in 0..n {
        for d in 1..=k {
            edges.insert(key(u, (u + d) % n));
        }
    }
    for u in 0..n {
        for d in 1..=k {
            let v = (u + d) % n;
            if !edges.contains(&key(u, v)) || rng.random::<f64>() >= p {
                continue;
            }
            // Bounded retry; an unlucky dense neighbourhood keeps the
            // lattice edge rather than looping forever.
            for _ in 0..4 * n {
                let w = rng.random_range(0..n);
                if w == u || edges.contains(&key(u, w)) {
                    continue;
                }
                edges.remove(&key(u, v));
                edges.insert(key(u, w));
                break;
            }
        }
    }
    let edges: Vec<(usize, usize)> = edges.into_iter().collect();
    Ok(Graph::from_edges(n, &edges))
}

/// Where an instance comes from: a DIMACS file on disk or one of the
/// random generators.
#[derive(Clone, Debug)]
pub enum GraphSource {
    DimacsFile(PathBuf),
    Gnp {
        n: usize,
        p: f64,
        seed: u64,
    },
    KRegular {
        n: usize,
        k: usize,
        seed: u64,
    },
    SmallWorld {
        n: usize,
        k: usize,
        p: f64,
        seed: u64,
    },
}

impl GraphSource {
    /// Short instance label used in reports.
    pub fn label(&self) -> String {
        match self {
            GraphSource::DimacsFile(path) => path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.display().to_string()),
            GraphSource::Gnp { n, p, seed } => format!("gnp-n{n}-p{p:.3}-s{seed}"),
            GraphSource::KRegular { n, k, seed } => format!("kregular-n{n}-k{k}-s{seed}"),
            GraphSource::SmallWorld { n, k, p, seed } => {
                format!("smallworld-n{n}-k{k}-p{p:.3}-s{seed}")
            }
        }
    }

    pub fn load(&self) -> Result<Graph, GraphError> {
        match self {
            GraphSource::DimacsFile(path) => {
                let file = std::fs::File::open(path)?;
                parse_dimacs(std::io::BufReader::new(file))
            }
            GraphSource::Gnp { n, p, seed } => gen_gnp(*n, *p, *seed),
            GraphSource::KRegular { n, k, seed } => gen_k_regular(*n, *k, *seed),
            GraphSource::SmallWorld { n, k, p, seed } => gen_small_world(*n, *k, *p, *seed),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    fn check_invariants(g: &Graph) {
        let mut edges = 0;
        for u in 0..g.n() {
            assert!(!g.adjacent(u, u), "self loop at {u}");
            let mut row = 0;
            for v in 0..g.n() {
                assert_eq!(g.adjacent(u, v), g.adjacent(v, u));
                if g.adjacent(u, v) {
                    row += 1;
                }
            }
            assert_eq!(g.degree(u), row);
            edges += row;
        }
        assert_eq!(g.edge_count(), edges / 2);
    }

    #[test]
    fn parse_complete_graph() {
        let mut text = String::from("p edge 5 10\n");
        for u in 1..=5 {
            for v in u + 1..=5 {
                text.push_str(&format!("e {u} {v}\n"));
            }
        }
        let g = parse_dimacs(Cursor::new(text)).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 10);
        assert!((0..5).all(|v| g.degree(v) == 4));
        check_invariants(&g);
    }

    #[test]
    fn comments_are_ignored() {
        let plain = "p edge 3 2\ne 1 2\ne 2 3\n";
        let commented = "c hello\np edge 3 2\nc mid comment\ne 1 2\ne 2 3\nc done\n";
        assert_eq!(
            parse_dimacs(Cursor::new(plain)).unwrap(),
            parse_dimacs(Cursor::new(commented)).unwrap()
        );
    }

    #[test]
    fn crlf_and_duplicate_edges() {
        let g = parse_dimacs(Cursor::new("p edge 3 2\r\ne 1 2\r\ne 2 1\r\ne 2 3\r\n")).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn self_loops_skipped() {
        let g = parse_dimacs(Cursor::new("p edge 3 2\ne 1 1\ne 1 2\n")).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn format_errors() {
        assert!(parse_dimacs(Cursor::new("e 1 2\n")).is_err());
        assert!(parse_dimacs(Cursor::new("p edge 3 1\np edge 3 1\n")).is_err());
        assert!(parse_dimacs(Cursor::new("p edge 3 1\ne 1 4\n")).is_err());
        assert!(parse_dimacs(Cursor::new("c only comments\n")).is_err());
    }

    #[test]
    fn write_k3() {
        let g = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(write_dimacs_string(&g), "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    }

    #[test]
    fn write_edgeless() {
        let g = Graph::empty(4);
        assert_eq!(write_dimacs_string(&g), "p edge 4 0\n");
    }

    #[test]
    fn gnp_extremes() {
        let g0 = gen_gnp(10, 0.0, 7).unwrap();
        assert_eq!(g0.edge_count(), 0);
        let g1 = gen_gnp(10, 1.0, 7).unwrap();
        assert_eq!(g1.edge_count(), 45);
        check_invariants(&g1);
    }

    #[test]
    fn gnp_deterministic() {
        let a = gen_gnp(100, 0.5, 42).unwrap();
        let b = gen_gnp(100, 0.5, 42).unwrap();
        assert_eq!(a, b);
        let c = gen_gnp(100, 0.5, 43).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn gnp_edge_count_concentrates() {
        // 3-sigma binomial band around p*n(n-1)/2, over several seeds.
        let n = 60;
        let p = 0.4;
        let pairs = (n * (n - 1) / 2) as f64;
        let sigma = (pairs * p * (1.0 - p)).sqrt();
        let mut total = 0.0;
        let seeds = 40;
        for s in 0..seeds {
            total += gen_gnp(n, p, s).unwrap().edge_count() as f64;
        }
        let mean = total / seeds as f64;
        let band = 3.0 * sigma / (seeds as f64).sqrt();
        assert!(
            (mean - pairs * p).abs() < band,
            "mean {mean} vs {}",
            pairs * p
        );
    }

    #[test]
    fn gnp_rejects_bad_arguments() {
        assert!(gen_gnp(0, 0.5, 1).is_err());
        assert!(gen_gnp(10, 1.5, 1).is_err());
        assert!(gen_gnp(10, -0.1, 1).is_err());
    }

    #[test]
    fn k_regular_small() {
        let g = gen_k_regular(4, 2, 3).unwrap();
        assert!((0..4).all(|v| g.degree(v) == 2));
        check_invariants(&g);
    }

    #[test]
    fn k_regular_degree_histogram() {
        let g = gen_k_regular(50, 6, 11).unwrap();
        assert!((0..50).all(|v| g.degree(v) == 6));
        check_invariants(&g);
    }

    #[test]
    fn k_regular_dense() {
        let g = gen_k_regular(200, 160, 1).unwrap();
        assert!((0..200).all(|v| g.degree(v) == 160));
        check_invariants(&g);
    }

    #[test]
    fn k_regular_rejects_bad_arguments() {
        assert!(gen_k_regular(5, 3, 1).is_err()); // odd n*k
        assert!(gen_k_regular(4, 4, 1).is_err()); // k >= n
    }

    #[test]
    fn small_world_lattice() {
        let g = gen_small_world(10, 2, 0.0, 5).unwrap();
        assert!((0..10).all(|v| g.degree(v) == 4));
        assert_eq!(g.edge_count(), 20);
        // circulant structure: u adjacent to u+-1, u+-2 mod n
        for u in 0..10 {
            assert!(g.adjacent(u, (u + 1) % 10));
            assert!(g.adjacent(u, (u + 2) % 10));
        }
    }

    #[test]
    fn small_world_large_lattice_edge_count() {
        let g = gen_small_world(1000, 100, 0.0, 1).unwrap();
        assert_eq!(g.edge_count(), 100_000);
    }

    #[test]
    fn small_world_rewiring_preserves_edge_count() {
        for &p in &[0.05, 0.25, 0.9] {
            let g = gen_small_world(120, 5, p, 17).unwrap();
            assert_eq!(g.edge_count(), 120 * 5, "p = {p}");
            check_invariants(&g);
        }
    }

    #[test]
    fn small_world_rejects_bad_arguments() {
        assert!(gen_small_world(10, 5, 0.1, 1).is_err()); // 2k >= n
        assert!(gen_small_world(10, 2, 1.5, 1).is_err());
    }
}
