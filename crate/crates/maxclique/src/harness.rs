//! User-facing plumbing: algorithm tokens, the single-run and batch
//! drivers, report formatting and the brute-force testing oracle.

use std::fmt;
use std::str::FromStr;

use crate::bbmc::bbmc_search;
use crate::colour::{mcq_search, mcsa_search, mcsb_search};
use crate::graph::{gen_gnp, Graph, GraphError, GraphSource};
use crate::ordering::OrderingStyle;
use crate::search::{mc_search, SearchBudget, SearchOutcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgorithmFamily {
    Mc,
    Mcq,
    Mcsa,
    Mcsb,
    Bbmc,
}

impl AlgorithmFamily {
    pub fn name(self) -> &'static str {
        match self {
            AlgorithmFamily::Mc => "MC",
            AlgorithmFamily::Mcq => "MCQ",
            AlgorithmFamily::Mcsa => "MCSa",
            AlgorithmFamily::Mcsb => "MCSb",
            AlgorithmFamily::Bbmc => "BBMC",
        }
    }
}

/// An algorithm token such as `MC`, `MCQ1` or `BBMC3`: family name
/// immediately followed by the style digit, no digit for MC.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlgorithmSpec {
    pub family: AlgorithmFamily,
    pub style: Option<OrderingStyle>,
}

impl AlgorithmSpec {
    pub fn style_digit(&self) -> Option<u8> {
        self.style.map(|s| s.as_digit())
    }

    /// All thirteen runnable specs: MC plus the four styled families
    /// under each of the three styles.
    pub fn all() -> Vec<AlgorithmSpec> {
        let mut specs = vec![AlgorithmSpec {
            family: AlgorithmFamily::Mc,
            style: None,
        }];
        for family in [
            AlgorithmFamily::Mcq,
            AlgorithmFamily::Mcsa,
            AlgorithmFamily::Mcsb,
            AlgorithmFamily::Bbmc,
        ] {
            for style in OrderingStyle::ALL {
                specs.push(AlgorithmSpec {
                    family,
                    style: Some(style),
                });
            }
        }
        specs
    }
}

impl fmt::Display for AlgorithmSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family.name())?;
        if let Some(d) = self.style_digit() {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for AlgorithmSpec {
    type Err = String;

    fn from_str(token: &str) -> Result<Self, Self::Err> {
        if token == "MC" {
            return Ok(AlgorithmSpec {
                family: AlgorithmFamily::Mc,
                style: None,
            });
        }
        let err = || {
            format!(
                "unknown algorithm '{token}' (expected MC, or one of \
                 MCQ/MCSa/MCSb/BBMC followed by a style digit 1-3)"
            )
        };
        let (name, digit) = token.split_at(token.len().saturating_sub(1));
        let family = match name {
            "MCQ" => AlgorithmFamily::Mcq,
            "MCSa" => AlgorithmFamily::Mcsa,
            "MCSb" => AlgorithmFamily::Mcsb,
            "BBMC" => AlgorithmFamily::Bbmc,
            _ => return Err(err()),
        };
        let style = digit
            .bytes()
            .next()
            .and_then(|b| b.checked_sub(b'0'))
            .and_then(OrderingStyle::from_digit)
            .ok_or_else(err)?;
        Ok(AlgorithmSpec {
            family,
            style: Some(style),
        })
    }
}

/// Dispatch a parsed spec to its solver.
pub fn run_spec(g: &Graph, spec: AlgorithmSpec, budget: SearchBudget) -> SearchOutcome {
    match spec.family {
        AlgorithmFamily::Mc => mc_search(g, budget),
        AlgorithmFamily::Mcq => mcq_search(g, spec.style.unwrap(), budget),
        AlgorithmFamily::Mcsa => mcsa_search(g, spec.style.unwrap(), budget),
        AlgorithmFamily::Mcsb => mcsb_search(g, spec.style.unwrap(), budget),
        AlgorithmFamily::Bbmc => bbmc_search(g, spec.style.unwrap(), budget),
    }
}

/// One (instance, algorithm) run, as reported.
#[derive(Clone, Debug)]
pub struct ExperimentRow {
    pub instance: String,
    pub spec: AlgorithmSpec,
    pub n: usize,
    pub edges: usize,
    pub outcome: SearchOutcome,
}

pub const CSV_HEADER: &str = "instance,algorithm,style,n,edges,nodes,time_ms,omega,completed";

impl ExperimentRow {
    /// One CSV line; `zero_times` blanks the wall-clock column to 0 so
    /// repeated runs compare byte-for-byte.
    pub fn csv_line(&self, zero_times: bool) -> String {
        let time = if zero_times {
            0
        } else {
            self.outcome.elapsed_millis
        };
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.instance,
            self.spec.family.name(),
            self.spec
                .style_digit()
                .map(|d| d.to_string())
                .unwrap_or_default(),
            self.n,
            self.edges,
            self.outcome.nodes,
            time,
            self.outcome.max_size,
            self.outcome.completed,
        )
    }
}

/// Load (or generate) the instance, run the solver and format the
/// human-readable report: the clique in ascending 1-based DIMACS ids,
/// then size, nodes, time and the completion flag.
pub fn run_single(
    spec: AlgorithmSpec,
    source: &GraphSource,
    budget: SearchBudget,
    zero_times: bool,
) -> Result<(ExperimentRow, String), GraphError> {
    let g = source.load()?;
    let outcome = run_spec(&g, spec, budget);
    let row = ExperimentRow {
        instance: source.label(),
        spec,
        n: g.n(),
        edges: g.edge_count(),
        outcome,
    };
    let clique: Vec<String> = row
        .outcome
        .solution
        .iter()
        .map(|&v| (v + 1).to_string())
        .collect();
    let time = if zero_times {
        0
    } else {
        row.outcome.elapsed_millis
    };
    let text = format!(
        "instance: {}\nalgorithm: {}\nclique: {}\nsize: {}\nnodes: {}\ntime_ms: {}\ncompleted: {}\n",
        row.instance,
        row.spec,
        clique.join(" "),
        row.outcome.max_size,
        row.outcome.nodes,
        time,
        row.outcome.completed,
    );
    Ok((row, text))
}

/// Parameters of a random G(n,p) sweep.
#[derive(Clone, Debug)]
pub struct BatchConfig {
    pub n: usize,
    pub p_from: f64,
    pub p_to: f64,
    pub p_step: f64,
    pub samples: usize,
    pub specs: Vec<AlgorithmSpec>,
    pub seed_base: u64,
    pub budget: SearchBudget,
    pub zero_times: bool,
}

fn sweep_points(from: f64, to: f64, step: f64) -> Vec<f64> {
    let mut ps = Vec::new();
    let mut i = 0u32;
    loop {
        let p = from + f64::from(i) * step;
        if p > to + 1e-9 {
            break;
        }
        ps.push(p.min(1.0));
        if step <= 0.0 {
            break;
        }
        i += 1;
    }
    ps
}

/// Run every spec on `samples` G(n,p) graphs per sweep point (seeds are
/// `seed_base + sample`), emitting one CSV row per run followed by one
/// `agg` row per (p, spec) with mean nodes and mean time. Output is fully
/// determined by the config (byte-identical when `zero_times` is set).
pub fn run_batch_random(cfg: &BatchConfig) -> Result<String, GraphError> {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for &p in &sweep_points(cfg.p_from, cfg.p_to, cfg.p_step) {
        if cfg.samples == 0 {
            continue;
        }
        let mut totals: Vec<(u64, u64)> = vec![(0, 0); cfg.specs.len()];
        for sample in 0..cfg.samples {
            let seed = cfg.seed_base + sample as u64;
            let source = GraphSource::Gnp { n: cfg.n, p, seed };
            let g = gen_gnp(cfg.n, p, seed)?;
            for (si, &spec) in cfg.specs.iter().enumerate() {
                let outcome = run_spec(&g, spec, cfg.budget);
                totals[si].0 += outcome.nodes;
                totals[si].1 += outcome.elapsed_millis;
                let row = ExperimentRow {
                    instance: source.label(),
                    spec,
                    n: g.n(),
                    edges: g.edge_count(),
                    outcome,
                };
                out.push_str(&row.csv_line(cfg.zero_times));
                out.push('\n');
            }
        }
        for (si, &spec) in cfg.specs.iter().enumerate() {
            let mean_nodes = totals[si].0 as f64 / cfg.samples as f64;
            let mean_time = if cfg.zero_times {
                0.0
            } else {
                totals[si].1 as f64 / cfg.samples as f64
            };
            out.push_str(&format!(
                "agg-p{:.3},{},{},{},,{:.2},{:.2},,\n",
                p,
                spec.family.name(),
                spec.style_digit()
                    .map(|d| d.to_string())
                    .unwrap_or_default(),
                cfg.n,
                mean_nodes,
                mean_time,
            ));
        }
    }
    Ok(out)
}

/// Exhaustive maximum clique size by unpruned enumeration of all cliques.
/// Independent of the solvers (no bounds, no orderings, no colouring), so
/// it can arbitrate them. Refuses graphs beyond n = 30.
pub fn brute_force_omega(g: &Graph) -> Result<usize, GraphError> {
    if g.n() > 30 {
        return Err(GraphError::Argument(format!(
            "brute force oracle refuses n = {} > 30",
            g.n()
        )));
    }
    fn extend(g: &Graph, candidates: &[usize], size: usize, best: &mut usize) {
        *best = (*best).max(size);
        for (i, &v) in candidates.iter().enumerate() {
            let rest: Vec<usize> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&w| g.adjacent(v, w))
                .collect();
            extend(g, &rest, size + 1, best);
        }
    }
    let mut best = 0;
    let all: Vec<usize> = (0..g.n()).collect();
    extend(g, &all, 0, &mut best);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gen_gnp;

    #[test]
    fn spec_tokens_round_trip() {
        for token in [
            "MC", "MCQ1", "MCQ2", "MCQ3", "MCSa1", "MCSa2", "MCSa3", "MCSb1", "MCSb2", "MCSb3",
            "BBMC1", "BBMC2", "BBMC3",
        ] {
            let spec: AlgorithmSpec = token.parse().unwrap();
            assert_eq!(spec.to_string(), token);
        }
        assert_eq!(AlgorithmSpec::all().len(), 13);
    }

    #[test]
    fn bad_spec_tokens_rejected() {
        for token in ["", "MC1", "MCQ", "MCQ0", "MCQ4", "mcsa1", "BBMC", "XYZ2"] {
            assert!(token.parse::<AlgorithmSpec>().is_err(), "{token}");
        }
    }

    #[test]
    fn oracle_on_known_graphs() {
        let k6 = Graph::from_edges(
            6,
            &(0..6)
                .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
                .collect::<Vec<_>>(),
        );
        assert_eq!(brute_force_omega(&k6).unwrap(), 6);

        // Petersen graph: outer C5, inner pentagram, spokes. Triangle-free.
        let petersen = Graph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
            ],
        );
        assert_eq!(brute_force_omega(&petersen).unwrap(), 2);

        assert_eq!(brute_force_omega(&Graph::empty(0)).unwrap(), 0);
        assert!(brute_force_omega(&Graph::empty(31)).is_err());
    }

    #[test]
    fn oracle_agrees_with_solvers() {
        for seed in 0..6 {
            let g = gen_gnp(20, 0.5, seed).unwrap();
            let omega = brute_force_omega(&g).unwrap();
            for spec in AlgorithmSpec::all() {
                let out = run_spec(&g, spec, SearchBudget::unlimited());
                assert_eq!(out.max_size, omega, "{spec}");
            }
        }
    }

    #[test]
    fn run_single_reports_valid_clique() {
        let source = GraphSource::Gnp {
            n: 30,
            p: 0.5,
            seed: 9,
        };
        let (row, text) = run_single(
            "MCSa1".parse().unwrap(),
            &source,
            SearchBudget::unlimited(),
            false,
        )
        .unwrap();
        let g = source.load().unwrap();
        assert!(g.is_clique(&row.outcome.solution));
        let clique_line = text.lines().find(|l| l.starts_with("clique: ")).unwrap();
        let ids: Vec<usize> = clique_line["clique: ".len()..]
            .split_whitespace()
            .map(|t| t.parse::<usize>().unwrap() - 1)
            .collect();
        assert_eq!(ids, row.outcome.solution);
        assert!(text.contains(&format!("size: {}\n", row.outcome.max_size)));
    }

    fn small_batch(samples: usize, specs: Vec<AlgorithmSpec>) -> BatchConfig {
        BatchConfig {
            n: 18,
            p_from: 0.5,
            p_to: 0.5,
            p_step: 0.1,
            samples,
            specs,
            seed_base: 7,
            budget: SearchBudget::unlimited(),
            zero_times: true,
        }
    }

    #[test]
    fn batch_empty_when_no_samples() {
        let csv = run_batch_random(&small_batch(0, vec!["MC".parse().unwrap()])).unwrap();
        assert_eq!(csv, format!("{CSV_HEADER}\n"));
    }

    #[test]
    fn batch_rows_and_equivalence() {
        let specs: Vec<AlgorithmSpec> = vec!["MCSa1".parse().unwrap(), "BBMC1".parse().unwrap()];
        let csv = run_batch_random(&small_batch(5, specs)).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        // Header + 10 run rows + 2 aggregate rows.
        assert_eq!(lines.len(), 13);
        assert_eq!(lines[0], CSV_HEADER);
        // Per graph, the two solvers report identical node counts.
        for pair in lines[1..11].chunks(2) {
            let nodes = |l: &str| l.split(',').nth(5).unwrap().to_string();
            assert_eq!(nodes(pair[0]), nodes(pair[1]), "{pair:?}");
        }
        assert!(lines[11].starts_with("agg-p0.500,MCSa,1,18,,"));
        assert!(lines[12].starts_with("agg-p0.500,BBMC,1,18,,"));
        // Determinism with zero_times: byte-identical on rerun.
        let again = run_batch_random(&small_batch(
            5,
            vec!["MCSa1".parse().unwrap(), "BBMC1".parse().unwrap()],
        ))
        .unwrap();
        assert_eq!(csv, again);
    }

    #[test]
    fn batch_p_one_yields_complete_graphs() {
        let mut cfg = small_batch(3, vec!["MCQ2".parse().unwrap()]);
        cfg.p_from = 1.0;
        cfg.p_to = 1.0;
        let csv = run_batch_random(&cfg).unwrap();
        for line in csv.lines().skip(1).filter(|l| !l.starts_with("agg")) {
            let omega: usize = line.split(',').nth(7).unwrap().parse().unwrap();
            assert_eq!(omega, cfg.n);
        }
    }

    #[test]
    fn sweep_points_cover_range() {
        let ps = sweep_points(0.1, 0.9, 0.2);
        assert_eq!(ps.len(), 5);
        assert!((ps[4] - 0.9).abs() < 1e-9);
        assert_eq!(sweep_points(0.5, 0.5, 0.1), vec![0.5]);
    }
}
