//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! algorithm) and the matching-based clique cover of triangle-free graphs.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::structure::find_triangle;

const NONE: usize = usize::MAX;

/// A set of pairwise vertex-disjoint edges of some host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<Option<VertexId>>,
}

impl Matching {
    /// Matched edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.mate.iter().filter(|m| m.is_some()).count() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn mate(&self, v: VertexId) -> Option<VertexId> {
        self.mate[v]
    }

    pub fn is_matched(&self, v: VertexId) -> bool {
        self.mate[v].is_some()
    }
}

/// A list of cliques whose union is the vertex set.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCover {
    pub cliques: Vec<VertexSet>,
}

impl CliqueCover {
    pub fn new(cliques: Vec<VertexSet>) -> Self {
        CliqueCover { cliques }
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// Sorts the cliques lexicographically. Members are already ascending.
    pub fn canonicalize(&mut self) {
        self.cliques.sort();
    }

    pub fn to_vecs(&self) -> Vec<Vec<VertexId>> {
        self.cliques.iter().map(|c| c.as_slice().to_vec()).collect()
    }
}

/// Blossom search state, reused across root vertices.
struct Blossom<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
    on_path: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
            in_blossom: vec![false; n],
            on_path: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    /// Greedy initial matching in ascending order; the blossom phase only
    /// has to fix what this misses.
    fn greedy(&mut self) {
        for v in 0..self.g.n() {
            if self.mate[v] != NONE {
                continue;
            }
            if let Some(&u) = self.g.neighbours(v).iter().find(|&&u| self.mate[u] == NONE) {
                self.mate[v] = u;
                self.mate[u] = v;
            }
        }
    }

    fn lowest_common_base(&mut self, mut a: usize, mut b: usize) -> usize {
        self.on_path.iter_mut().for_each(|x| *x = false);
        loop {
            a = self.base[a];
            self.on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, root_base: usize, mut child: usize) {
        while self.base[v] != root_base {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn contract(&mut self, v: usize, to: usize) {
        let b = self.lowest_common_base(v, to);
        self.in_blossom.iter_mut().for_each(|x| *x = false);
        self.mark_path(v, b, to);
        self.mark_path(to, b, v);
        for i in 0..self.g.n() {
            if self.in_blossom[self.base[i]] {
                self.base[i] = b;
                if !self.in_tree[i] {
                    self.in_tree[i] = true;
                    self.queue.push_back(i);
                }
            }
        }
    }

    /// Grows an alternating tree from `root`; returns the free endpoint of an
    /// augmenting path if one exists.
    fn search(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.in_tree.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.in_tree[root] = true;
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            let g = self.g;
            for &to in g.neighbours(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                let to_is_outer =
                    to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE);
                if to_is_outer {
                    self.contract(v, to);
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    debug_assert!(m < n);
                    self.in_tree[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn run(mut self) -> Matching {
        self.greedy();
        // A vertex with no augmenting path now never gains one later, so each
        // free vertex is tried once.
        for root in 0..self.g.n() {
            if self.mate[root] == NONE {
                if let Some(end) = self.search(root) {
                    self.augment(end);
                }
            }
        }
        Matching {
            mate: self
                .mate
                .into_iter()
                .map(|m| (m != NONE).then_some(m))
                .collect(),
        }
    }
}

/// A maximum cardinality matching. Deterministic: vertices and neighbours are
/// scanned in ascending order.
pub fn maximum_matching(g: &Graph) -> Matching {
    Blossom::new(g).run()
}

pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).len()
}

/// Matched pairs become 2-cliques and unmatched vertices singletons, listed
/// by smallest member.
pub(crate) fn cover_from_matching(m: &Matching) -> CliqueCover {
    let cliques = (0..m.mate.len())
        .filter_map(|v| match m.mate[v] {
            None => Some(VertexSet::from(vec![v])),
            Some(u) if v < u => Some(VertexSet::from(vec![v, u])),
            Some(_) => None,
        })
        .collect();
    CliqueCover { cliques }
}

/// Minimum clique cover of a triangle-free graph: a maximum matching plus
/// singletons, so its size is `n - m(g)`.
pub fn triangle_free_cover(g: &Graph) -> Result<CliqueCover> {
    if let Some((a, b, c)) = find_triangle(g) {
        return Err(Error::TriangleFound([a, b, c]));
    }
    Ok(cover_from_matching(&maximum_matching(g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    /// Largest pairwise-disjoint subset over all edge subsets.
    fn subset_oracle(g: &Graph) -> usize {
        let edges: Vec<_> = g.edges().collect();
        assert!(edges.len() <= 20);
        let mut best = 0;
        for mask in 0u32..(1 << edges.len()) {
            let mut used = vec![false; g.n()];
            let mut ok = true;
            for (i, &(u, v)) in edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    if used[u] || used[v] {
                        ok = false;
                        break;
                    }
                    used[u] = true;
                    used[v] = true;
                }
            }
            if ok {
                best = best.max(mask.count_ones() as usize);
            }
        }
        best
    }

    fn check_valid(g: &Graph, m: &Matching) {
        let mut used = vec![false; g.n()];
        for (u, v) in m.edges() {
            assert!(g.has_edge(u, v));
            assert!(!used[u] && !used[v]);
            used[u] = true;
            used[v] = true;
        }
    }

    #[test]
    fn oracle_values() {
        assert_eq!(subset_oracle(&cycle(5)), 2);
        assert_eq!(subset_oracle(&petersen()), 5);
        assert_eq!(subset_oracle(&cycle(6)), 3);
    }

    #[test]
    fn matching_examples() {
        for (g, want) in [
            (path(3), 1),
            (cycle(5), 2),
            (petersen(), 5),
            (complete(4), 2),
            (Graph::empty(1), 0),
            (complete(2), 1),
            (cycle(6), 3),
            (Graph::empty(0), 0),
        ] {
            let m = maximum_matching(&g);
            check_valid(&g, &m);
            assert_eq!(m.len(), want);
            assert_eq!(matching_number(&g), want);
        }
    }

    #[test]
    fn blossom_needed_beyond_greedy() {
        // Greedy matches 0-1 and 2-3 and then has to reroute through the
        // odd cycle 1-2-3 to pick up 4 and 5.
        let g = Graph::build(6, [(0, 1), (1, 2), (2, 3), (3, 1), (0, 4), (3, 5)]).unwrap();
        assert_eq!(subset_oracle(&g), 3);
        assert_eq!(matching_number(&g), 3);
    }

    #[test]
    fn triangle_free_cover_examples() {
        let c = triangle_free_cover(&cycle(5)).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c.cliques.iter().filter(|q| q.len() == 2).count(), 2);

        let single = triangle_free_cover(&Graph::empty(1)).unwrap();
        assert_eq!(single.to_vecs(), vec![vec![0]]);

        let c6 = triangle_free_cover(&cycle(6)).unwrap();
        assert_eq!(c6.len(), 3);
        assert!(c6.cliques.iter().all(|q| q.len() == 2));
    }

    #[test]
    fn triangle_free_cover_rejects_triangles() {
        assert!(matches!(
            triangle_free_cover(&complete(3)),
            Err(Error::TriangleFound([0, 1, 2]))
        ));
    }

    #[test]
    fn deterministic() {
        let g = petersen();
        assert_eq!(maximum_matching(&g), maximum_matching(&g));
    }
}
