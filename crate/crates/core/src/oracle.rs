//! Ground truth by exhaustive search, plus enumeration of small
//! (bull, C4)-free graphs up to isomorphism.
//!
//! Nothing here shares code with the solver's fast paths; these routines are
//! what the solver is checked against.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::structure::is_bull_c4_free;

pub const MAX_THETA_VERTICES: usize = 16;
pub const MAX_MATCHING_EDGES: usize = 64;
pub const MAX_CHROMATIC_VERTICES: usize = 12;
pub const MAX_ENUMERATION_VERTICES: usize = 8;

fn guard(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        return Err(Error::TooLarge { what, size, limit });
    }
    Ok(())
}

fn neighbour_masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbours(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect()
}

/// Clique cover number by memoised search over vertex subsets. The lowest
/// vertex of each subset must sit in some maximal clique of the subset, so
/// only those cliques are branched on.
pub fn brute_theta(g: &Graph) -> Result<usize> {
    let n = g.n();
    guard("vertex count", n, MAX_THETA_VERTICES)?;
    let adj = neighbour_masks(g);
    let mut memo = vec![u8::MAX; 1 << n];
    memo[0] = 0;
    Ok(theta_of(((1u64 << n) - 1) as u32, &adj, &mut memo) as usize)
}

fn theta_of(set: u32, adj: &[u32], memo: &mut [u8]) -> u8 {
    if memo[set as usize] != u8::MAX {
        return memo[set as usize];
    }
    let pivot = set.trailing_zeros() as usize;
    let mut cliques = Vec::new();
    maximal_cliques(0, adj[pivot] & set, 0, adj, &mut cliques);
    let best = cliques
        .into_iter()
        .map(|q| 1 + theta_of(set & !(q | 1 << pivot), adj, memo))
        .min()
        .unwrap();
    memo[set as usize] = best;
    best
}

/// Bron–Kerbosch over bitmasks; pushes every maximal clique extending `r`.
fn maximal_cliques(r: u32, mut p: u32, mut x: u32, adj: &[u32], out: &mut Vec<u32>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    while p != 0 {
        let v = p.trailing_zeros() as usize;
        maximal_cliques(r | 1 << v, p & adj[v], x & adj[v], adj, out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// Clique cover number by trying every partition of the vertices into
/// cliques. Exponential in a different way from [`brute_theta`]; meant for
/// cross-checking it on tiny graphs.
pub fn brute_theta_partitions(g: &Graph) -> Result<usize> {
    guard("vertex count", g.n(), 10)?;
    fn go(g: &Graph, v: usize, blocks: &mut Vec<Vec<VertexId>>, best: &mut usize) {
        if blocks.len() >= *best {
            return;
        }
        if v == g.n() {
            *best = blocks.len();
            return;
        }
        for i in 0..blocks.len() {
            if blocks[i].iter().all(|&u| g.has_edge(u, v)) {
                blocks[i].push(v);
                go(g, v + 1, blocks, best);
                blocks[i].pop();
            }
        }
        blocks.push(vec![v]);
        go(g, v + 1, blocks, best);
        blocks.pop();
    }
    let mut best = g.n();
    go(g, 0, &mut Vec::new(), &mut best);
    Ok(best)
}

/// Matching number by exhaustive search: the lowest undecided vertex is
/// either left unmatched or matched to a free higher neighbour.
pub fn brute_matching(g: &Graph) -> Result<usize> {
    guard("edge count", g.edge_count(), MAX_MATCHING_EDGES)?;
    fn go(g: &Graph, v: usize, used: &mut [bool], size: usize, best: &mut usize) {
        let n = g.n();
        if size + (n - v) / 2 <= *best {
            return;
        }
        if v >= n {
            *best = size;
            return;
        }
        if used[v] {
            go(g, v + 1, used, size, best);
            return;
        }
        for &u in g.neighbours(v).iter().filter(|&&u| u > v) {
            if !used[u] {
                used[u] = true;
                go(g, v + 1, used, size + 1, best);
                used[u] = false;
            }
        }
        go(g, v + 1, used, size, best);
    }
    let mut best = 0;
    go(g, 0, &mut vec![false; g.n()], 0, &mut best);
    Ok(best)
}

/// Chromatic number by iterative deepening on the number of colours.
pub fn brute_chromatic(h: &Graph) -> Result<usize> {
    let n = h.n();
    guard("vertex count", n, MAX_CHROMATIC_VERTICES)?;
    fn colourable(h: &Graph, v: usize, k: usize, used: usize, colour: &mut [usize]) -> bool {
        if v == h.n() {
            return true;
        }
        // New colours are interchangeable, so only the next unused one is tried.
        for c in 0..k.min(used + 1) {
            if h.neighbours(v).iter().all(|&u| u > v || colour[u] != c) {
                colour[v] = c;
                if colourable(h, v + 1, k, used.max(c + 1), colour) {
                    return true;
                }
            }
        }
        false
    }
    let mut colour = vec![usize::MAX; n];
    Ok((0..=n)
        .find(|&k| colourable(h, 0, k, 0, &mut colour))
        .expect("n colours always suffice"))
}

/// Adjacency of a graph on at most 8 vertices as one byte per vertex.
type SmallAdj = Vec<u8>;

fn small_adj(g: &Graph) -> SmallAdj {
    (0..g.n())
        .map(|v| g.neighbours(v).iter().fold(0u8, |m, &u| m | 1 << u))
        .collect()
}

fn small_graph(adj: &[u8]) -> Graph {
    let n = adj.len();
    let edges = (0..n).flat_map(|u| {
        (u + 1..n)
            .filter(move |&v| adj[u] >> v & 1 == 1)
            .map(move |v| (u, v))
    });
    Graph::build(n, edges).expect("well-formed adjacency")
}

/// Upper-triangle bit string of `adj` relabelled so that position `i` holds
/// vertex `order[i]`.
fn code_under(adj: &[u8], order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if adj[order[i]] >> order[j] & 1 == 1 {
                code |= 1 << bit;
            }
            bit += 1;
        }
    }
    code
}

/// Canonical code by minimising over all `n!` relabellings.
pub fn canonical_code_exhaustive(g: &Graph) -> u64 {
    let adj = small_adj(g);
    (0..g.n())
        .permutations(g.n())
        .map(|order| code_under(&adj, &order))
        .min()
        .unwrap_or(0)
}

/// Colour refinement to a stable ordered partition. Colours are ranked by
/// their signatures, so the partition does not depend on vertex labels.
fn refined_colours(adj: &[u8]) -> Vec<usize> {
    let n = adj.len();
    let mut colour: Vec<usize> = adj.iter().map(|m| m.count_ones() as usize).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n)
                    .filter(|&u| adj[v] >> u & 1 == 1)
                    .map(|u| colour[u])
                    .collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let ranks: Vec<&(usize, Vec<usize>)> = sigs.iter().sorted().dedup().collect();
        colour = sigs
            .iter()
            .map(|s| ranks.binary_search(&s).unwrap())
            .collect();
        if ranks.len() == classes {
            return colour;
        }
        classes = ranks.len();
    }
}

/// Canonical code and the vertex order achieving it, searching only
/// relabellings that respect the refined partition.
fn canonical_form(adj: &[u8]) -> (u64, Vec<usize>) {
    let n = adj.len();
    let colour = refined_colours(adj);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for c in 0..n {
        let cell: Vec<usize> = (0..n).filter(|&v| colour[v] == c).collect();
        if !cell.is_empty() {
            cells.push(cell);
        }
    }
    let mut best = (u64::MAX, Vec::new());
    for choice in cells
        .iter()
        .map(|cell| cell.iter().copied().permutations(cell.len()))
        .multi_cartesian_product()
    {
        let order: Vec<usize> = choice.concat();
        let code = code_under(adj, &order);
        if code < best.0 {
            best = (code, order);
        }
    }
    if cells.is_empty() {
        best = (0, Vec::new());
    }
    best
}

/// Relabels `adj` so that position `i` holds vertex `order[i]`.
fn relabel(adj: &[u8], order: &[usize]) -> SmallAdj {
    let n = order.len();
    (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| adj[order[i]] >> order[j] & 1 == 1)
                .fold(0u8, |m, j| m | 1 << j)
        })
        .collect()
}

/// Every connected (bull, C4)-free graph on `n` vertices, once per
/// isomorphism class, in canonical labelling and ascending code order.
///
/// Built level by level: a connected graph always has a vertex whose removal
/// leaves it connected, and the class is closed under induced subgraphs, so
/// every level-`k` graph extends some level-`(k-1)` graph by one vertex.
pub fn enumerate_class_graphs(n: usize) -> Result<Vec<Graph>> {
    guard("vertex count", n, MAX_ENUMERATION_VERTICES)?;
    if n == 0 {
        return Ok(vec![Graph::empty(0)]);
    }
    let mut level: Vec<SmallAdj> = vec![vec![0]];
    for k in 2..=n {
        let mut next: BTreeMap<u64, SmallAdj> = BTreeMap::new();
        for base in &level {
            for subset in 1u16..(1u16 << (k - 1)) {
                let subset = subset as u8;
                let mut adj = base.clone();
                for (v, m) in adj.iter_mut().enumerate() {
                    if subset >> v & 1 == 1 {
                        *m |= 1 << (k - 1);
                    }
                }
                adj.push(subset);
                if !is_bull_c4_free(&small_graph(&adj)) {
                    continue;
                }
                let (code, order) = canonical_form(&adj);
                next.entry(code).or_insert_with(|| relabel(&adj, &order));
            }
        }
        level = next.into_values().collect();
    }
    Ok(level.iter().map(|adj| small_graph(adj)).collect())
}

/// Whether `g[vertices]` is isomorphic to `pattern`, by trying every bijection.
pub fn is_induced_copy(g: &Graph, vertices: &[VertexId], pattern: &Graph) -> bool {
    let k = pattern.n();
    if vertices.len() != k || vertices.iter().any(|&v| v >= g.n()) || !vertices.iter().all_unique()
    {
        return false;
    }
    (0..k).permutations(k).any(|perm| {
        (0..k).all(|i| {
            (i + 1..k)
                .all(|j| pattern.has_edge(i, j) == g.has_edge(vertices[perm[i]], vertices[perm[j]]))
        })
    })
}

/// First vertex subset inducing a copy of `pattern`, by brute force over all
/// subsets of the right size.
pub fn find_induced_naive(g: &Graph, pattern: &Graph) -> Option<Vec<VertexId>> {
    (0..g.n())
        .combinations(pattern.n())
        .find(|s| is_induced_copy(g, s, pattern))
}
