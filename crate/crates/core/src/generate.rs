//! Seeded generators of (bull, C4)-free instances.
//!
//! Randomness comes from ChaCha8 seeded with `seed_from_u64`, which produces
//! the same stream on every platform, so a [`GenSpec`] fully determines its
//! graph.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::structure::{find_bull, find_c4, find_triangle};

pub const REJECTION_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `G(n, p)` resampled until it lands in the class.
    Rejection,
    /// `G(n, p)` with triangles and 4-cycles broken, leaving girth at least 5.
    Girth5,
    /// A girth-5 graph grown by repeatedly adding true twins.
    TwinExpand,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Rejection => "rejection",
            Family::Girth5 => "girth5",
            Family::TwinExpand => "twin-expand",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rejection" => Ok(Family::Rejection),
            "girth5" => Ok(Family::Girth5),
            "twin-expand" => Ok(Family::TwinExpand),
            other => Err(Error::InvalidSpec(format!("unknown family `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub family: Family,
    pub n: usize,
    pub edge_prob: f64,
    /// Twin additions; only read by [`Family::TwinExpand`].
    pub steps: usize,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(family: Family, n: usize, edge_prob: f64, seed: u64) -> Self {
        GenSpec {
            family,
            n,
            edge_prob,
            steps: 0,
            seed,
        }
    }

    pub fn with_steps(mut self, steps: usize) -> Self {
        self.steps = steps;
        self
    }

    /// The `c` line written ahead of generated DIMACS files.
    pub fn comment(&self) -> String {
        format!("seed={} family={}", self.seed, self.family)
    }
}

pub fn generate(spec: &GenSpec) -> Result<Graph> {
    if !(0.0..=1.0).contains(&spec.edge_prob) {
        return Err(Error::InvalidSpec(format!(
            "edge probability {} outside [0, 1]",
            spec.edge_prob
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let g = match spec.family {
        Family::Rejection => rejection(spec.n, spec.edge_prob, &mut rng)?,
        Family::Girth5 => girth5(spec.n, spec.edge_prob, &mut rng),
        Family::TwinExpand => twin_expand(&girth5(spec.n, spec.edge_prob, &mut rng), spec.steps),
    };
    assert!(
        find_c4(&g).is_none() && find_bull(&g).is_none(),
        "{} generator produced a graph outside the class",
        spec.family
    );
    Ok(g)
}

/// Plain `G(n, p)` from the same seeded stream, with no class restriction.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidSpec(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(from_lists(&gnp_lists(n, p, &mut rng)))
}

fn gnp_lists(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Vec<Vec<VertexId>> {
    let mut adj = vec![Vec::new(); n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    adj
}

fn from_lists(adj: &[Vec<VertexId>]) -> Graph {
    let edges = adj
        .iter()
        .enumerate()
        .flat_map(|(u, l)| l.iter().filter(move |&&v| u < v).map(move |&v| (u, v)));
    Graph::build(adj.len(), edges).expect("generator keeps graphs simple")
}

/// `G(n, p)` as bitmasks, drawing from `rng` in the same order as
/// [`gnp_lists`].
fn gnp_masks(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Vec<u64> {
    let mut masks = vec![0u64; n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                masks[u] |= 1 << v;
                masks[v] |= 1 << u;
            }
        }
    }
    masks
}

/// Two non-adjacent vertices with two non-adjacent common neighbours.
fn has_c4_masks(masks: &[u64]) -> bool {
    (0..masks.len()).any(|a| {
        (a + 1..masks.len()).any(|c| {
            if masks[a] >> c & 1 == 1 {
                return false;
            }
            let mut common = masks[a] & masks[c];
            while common != 0 {
                let b = common.trailing_zeros() as usize;
                common &= common - 1;
                if common & !masks[b] != 0 {
                    return true;
                }
            }
            false
        })
    })
}

fn lists_from_masks(masks: &[u64]) -> Vec<Vec<VertexId>> {
    masks
        .iter()
        .map(|&m| (0..masks.len()).filter(|&v| m >> v & 1 == 1).collect())
        .collect()
}

fn rejection(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Result<Graph> {
    for _ in 0..REJECTION_BUDGET {
        let adj = if n <= 64 {
            let masks = gnp_masks(n, p, rng);
            if has_c4_masks(&masks) {
                continue;
            }
            lists_from_masks(&masks)
        } else {
            gnp_lists(n, p, rng)
        };
        let g = from_lists(&adj);
        if find_c4(&g).is_none() && find_bull(&g).is_none() {
            return Ok(g);
        }
    }
    Err(Error::RejectionBudgetExceeded(REJECTION_BUDGET))
}

fn remove_edge(adj: &mut [Vec<VertexId>], u: VertexId, v: VertexId) {
    for (a, b) in [(u, v), (v, u)] {
        let pos = adj[a].binary_search(&b).expect("edge present");
        adj[a].remove(pos);
    }
}

fn has_edge(adj: &[Vec<VertexId>], u: VertexId, v: VertexId) -> bool {
    adj[u].binary_search(&v).is_ok()
}

/// Deletes the smallest edge of the smallest triangle until none remain,
/// then the smallest edge of the first 4-cycle until none remain.
///
/// Deleting edges never creates a cycle, so a single pass in lexicographic
/// order visits the violating cycles in the same order as repeatedly
/// restarting the search would.
fn girth5(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut adj = gnp_lists(n, p, rng);

    for u in 0..n {
        let higher: Vec<VertexId> = adj[u].iter().copied().filter(|&v| v > u).collect();
        for v in higher {
            let closes_triangle = adj[u].iter().any(|&w| w > v && has_edge(&adj, v, w));
            if closes_triangle {
                remove_edge(&mut adj, u, v);
            }
        }
    }

    // Triangle-free from here on, so every 4-cycle is induced.
    let mut common: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for a in 0..n {
        loop {
            let mut touched = Vec::new();
            for &b in &adj[a] {
                for &c in &adj[b] {
                    if c > a {
                        if common[c].is_empty() {
                            touched.push(c);
                        }
                        common[c].push(b);
                    }
                }
            }
            touched.sort_unstable();
            let hit = touched
                .iter()
                .find(|&&c| common[c].len() >= 2)
                .map(|&c| (common[c][0], common[c][1]));
            for &c in &touched {
                common[c].clear();
            }
            match hit {
                Some((b, d)) => remove_edge(&mut adj, a, b.min(d)),
                None => break,
            }
        }
    }

    let g = from_lists(&adj);
    debug_assert!(find_triangle(&g).is_none() && find_c4(&g).is_none());
    g
}

/// Adds `steps` true twins; step `k` copies vertex `k mod (current order)`.
fn twin_expand(base: &Graph, steps: usize) -> Graph {
    let mut adj: Vec<Vec<VertexId>> = (0..base.n()).map(|v| base.neighbours(v).to_vec()).collect();
    if adj.is_empty() {
        return base.clone();
    }
    for k in 0..steps {
        let v = k % adj.len();
        let twin = adj.len();
        let mut nb = adj[v].clone();
        for &u in &nb {
            adj[u].push(twin);
        }
        adj[v].push(twin);
        nb.push(v);
        nb.sort_unstable();
        adj.push(nb);
    }
    from_lists(&adj)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn girth5_example() {
        let g = generate(&GenSpec::new(Family::Girth5, 20, 0.2, 7)).unwrap();
        assert_eq!(g.n(), 20);
        assert!(find_triangle(&g).is_none());
        assert!(find_c4(&g).is_none());
    }

    #[test]
    fn rejection_example() {
        let g = generate(&GenSpec::new(Family::Rejection, 8, 0.3, 1)).unwrap();
        assert_eq!(g.n(), 8);
        assert!(find_bull(&g).is_none() && find_c4(&g).is_none());
    }

    #[test]
    fn twin_expand_example() {
        let g = generate(&GenSpec::new(Family::TwinExpand, 10, 0.3, 3).with_steps(5)).unwrap();
        assert_eq!(g.n(), 15);
        assert!(find_bull(&g).is_none() && find_c4(&g).is_none());
    }

    #[test]
    fn twins_are_true_twins() {
        let base = crate::graph::named::cycle(5);
        let g = twin_expand(&base, 1);
        assert_eq!(g.n(), 6);
        assert!(g.has_edge(0, 5));
        assert_eq!(g.neighbours(5), &[0, 1, 4]);
    }

    #[test]
    fn same_seed_same_graph() {
        let spec = GenSpec::new(Family::Girth5, 60, 0.1, 42);
        assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap());
        let other = GenSpec {
            seed: 43,
            ..spec.clone()
        };
        assert_ne!(generate(&spec).unwrap(), generate(&other).unwrap());
    }

    #[test]
    fn mask_sampling_matches_list_sampling() {
        for seed in 0..300 {
            let n = 3 + seed as usize % 9;
            let masks = gnp_masks(n, 0.45, &mut ChaCha8Rng::seed_from_u64(seed));
            let g = random_graph(n, 0.45, seed).unwrap();
            assert_eq!(from_lists(&lists_from_masks(&masks)), g);
            assert_eq!(has_c4_masks(&masks), find_c4(&g).is_some(), "seed {seed}");
        }
    }

    #[test]
    fn rejects_bad_probability() {
        assert!(matches!(
            generate(&GenSpec::new(Family::Girth5, 5, 1.5, 0)),
            Err(Error::InvalidSpec(_))
        ));
        assert!("zigzag".parse::<Family>().is_err());
        assert_eq!("twin-expand".parse::<Family>().unwrap(), Family::TwinExpand);
    }
}
