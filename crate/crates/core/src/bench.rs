//! Timing runs over generated instances.

use std::time::Instant;

use crate::error::Result;
use crate::generate::{generate, Family, GenSpec};
use crate::graph::Graph;
use crate::solver::min_clique_cover;

/// Average degree of the girth-5 base graph when no edge probability is given.
pub const DEFAULT_BASE_DEGREE: f64 = 4.0;

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub family: Family,
    pub repeats: usize,
    pub edge_prob: Option<f64>,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub m_edges: usize,
    pub median_ms: f64,
    pub theta: usize,
}

/// The instance benchmarked at `size` vertices. Twin-expand starts from a
/// girth-5 graph on half the vertices and twins the other half in.
pub fn instance_spec(family: Family, size: usize, edge_prob: Option<f64>, seed: u64) -> GenSpec {
    let base = match family {
        Family::TwinExpand => size / 2,
        Family::Girth5 | Family::Rejection => size,
    };
    let p = edge_prob.unwrap_or(match family {
        Family::Rejection => 0.3,
        _ => (DEFAULT_BASE_DEGREE / base.max(1) as f64).min(1.0),
    });
    GenSpec::new(family, base, p, seed).with_steps(size - base)
}

pub fn median(samples: &mut [f64]) -> f64 {
    assert!(!samples.is_empty());
    samples.sort_by(f64::total_cmp);
    let mid = samples.len() / 2;
    if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        (samples[mid - 1] + samples[mid]) / 2.0
    }
}

/// Median wall time of an unvalidated solve of `g`, over `repeats` runs.
pub fn time_solve(g: &Graph, repeats: usize) -> Result<(f64, usize)> {
    let mut samples = Vec::with_capacity(repeats);
    let mut theta = 0;
    for _ in 0..repeats.max(1) {
        let start = Instant::now();
        theta = min_clique_cover(g, false)?.theta;
        samples.push(start.elapsed().as_secs_f64() * 1e3);
    }
    Ok((median(&mut samples), theta))
}

pub fn run(cfg: &BenchConfig) -> Result<Vec<BenchRow>> {
    cfg.sizes
        .iter()
        .map(|&size| {
            let g = generate(&instance_spec(cfg.family, size, cfg.edge_prob, cfg.seed))?;
            let (median_ms, theta) = time_solve(&g, cfg.repeats)?;
            Ok(BenchRow {
                n: g.n(),
                m_edges: g.edge_count(),
                median_ms,
                theta,
            })
        })
        .collect()
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("n,m_edges,median_ms,theta\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{:.3},{}\n",
            r.n, r.m_edges, r.median_ms, r.theta
        ));
    }
    out
}

/// `time(2n) / time(n)` for every size whose double is also present.
pub fn doubling_ratios(rows: &[BenchRow]) -> Vec<(usize, f64)> {
    rows.iter()
        .filter_map(|r| {
            rows.iter()
                .find(|s| s.n == 2 * r.n)
                .map(|s| (r.n, s.median_ms / r.median_ms.max(1e-9)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_shape() {
        let rows = run(&BenchConfig {
            sizes: vec![40, 80],
            family: Family::TwinExpand,
            repeats: 3,
            edge_prob: None,
            seed: 1,
        })
        .unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].n, 40);
        let csv = to_csv(&rows);
        assert!(csv.starts_with("n,m_edges,median_ms,theta\n"));
        assert_eq!(csv.lines().count(), 3);
        assert_eq!(doubling_ratios(&rows).len(), 1);
    }

    #[test]
    fn median_of_even_and_odd() {
        assert_eq!(median(&mut [3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(&mut [4.0, 1.0, 2.0, 3.0]), 2.5);
    }
}
