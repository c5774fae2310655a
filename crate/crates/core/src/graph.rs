//! Immutable simple undirected graphs on dense vertex ids `0..n`.
//!
//! Neighbour lists are kept sorted so that membership is a binary search and
//! set comparisons between two neighbourhoods are a linear merge.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = usize;

/// A sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<VertexId>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexId> {
        self.0.iter()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Returns `false` if `v` was already present.
    pub fn insert(&mut self, v: VertexId) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn into_vec(self) -> Vec<VertexId> {
        self.0
    }

    /// Members of `0..n` not in this set.
    pub fn complement_in(&self, n: usize) -> VertexSet {
        (0..n).filter(|&v| !self.contains(v)).collect()
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut v: Vec<VertexId> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<VertexId>> for VertexSet {
    fn from(v: Vec<VertexId>) -> Self {
        v.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a VertexId;
    type IntoIter = std::slice::Iter<'a, VertexId>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    edges: usize,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edges: 0,
        }
    }

    /// Builds a simple graph. Repeated edges (in either orientation) collapse
    /// to one; self-loops and out-of-range endpoints are rejected.
    pub fn build<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Construction(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Construction(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_adjacency(adj))
    }

    /// Sorts and de-duplicates raw (already symmetric, loop-free) lists.
    fn from_adjacency(mut adj: Vec<Vec<VertexId>>) -> Self {
        let mut degree_sum = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            degree_sum += list.len();
        }
        let g = Graph {
            adj,
            edges: degree_sum / 2,
        };
        debug_assert_eq!(g.audit(), Ok(()));
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn neighbours(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let start = list.partition_point(|&w| w <= u);
            list[start..].iter().map(move |&v| (u, v))
        })
    }

    /// Checks the representation invariants: symmetric, loop-free, sorted,
    /// duplicate-free, in range, and the cached edge count.
    pub fn audit(&self) -> std::result::Result<(), String> {
        let n = self.n();
        let mut degree_sum = 0;
        for (v, list) in self.adj.iter().enumerate() {
            degree_sum += list.len();
            for pair in list.windows(2) {
                if pair[0] >= pair[1] {
                    return Err(format!("neighbours of {v} not strictly ascending"));
                }
            }
            for &u in list {
                if u >= n {
                    return Err(format!("neighbour {u} of {v} out of range"));
                }
                if u == v {
                    return Err(format!("self-loop at {v}"));
                }
                if self.adj[u].binary_search(&v).is_err() {
                    return Err(format!("edge {v}-{u} is not symmetric"));
                }
            }
        }
        if degree_sum != 2 * self.edges {
            return Err(format!(
                "edge count {} disagrees with degree sum {degree_sum}",
                self.edges
            ));
        }
        Ok(())
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut others = self.adj[v].iter().peekable();
                (0..n)
                    .filter(|&u| {
                        if others.peek() == Some(&&u) {
                            others.next();
                            false
                        } else {
                            u != v
                        }
                    })
                    .collect()
            })
            .collect();
        Self::from_adjacency(adj)
    }

    /// Subgraph induced by `set`. Vertex `i` of the result is the `i`-th
    /// smallest member of `set`; the returned map lifts result ids back.
    pub fn induced(&self, set: &VertexSet) -> Result<(Graph, Vec<VertexId>)> {
        let n = self.n();
        if let Some(&bad) = set.as_slice().last().filter(|&&v| v >= n) {
            return Err(Error::Construction(format!("vertex {bad} outside 0..{n}")));
        }
        let mut local = vec![usize::MAX; n];
        for (i, &v) in set.iter().enumerate() {
            local[v] = i;
        }
        let adj = set
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&u| (local[u] != usize::MAX).then_some(local[u]))
                    .collect()
            })
            .collect();
        Ok((Self::from_adjacency(adj), set.as_slice().to_vec()))
    }

    /// `self - v`, with the index map.
    pub fn without_vertex(&self, v: VertexId) -> (Graph, Vec<VertexId>) {
        let keep: VertexSet = (0..self.n()).filter(|&u| u != v).collect();
        self.induced(&keep).expect("members are in range")
    }

    /// Connected components, each sorted, listed by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_avoiding(None)
    }

    /// Components of `self - v`, expressed in this graph's ids.
    pub fn components_without(&self, v: VertexId) -> Vec<VertexSet> {
        self.components_avoiding(Some(v))
    }

    fn components_avoiding(&self, removed: Option<VertexId>) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        if let Some(r) = removed {
            seen[r] = true;
        }
        let mut parts = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut part = Vec::new();
            while let Some(v) = queue.pop_front() {
                part.push(v);
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
            parts.push(VertexSet::from(part));
        }
        parts
    }

    /// The empty graph and single vertices count as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_clique(&self, vertices: &[VertexId]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_stable(&self, vertices: &[VertexId]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }
}

/// Small named graphs used throughout the tests and examples.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        Graph::build(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph::build(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    /// `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::build(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    /// Cycle on `0..rim` plus hub `rim` adjacent to every rim vertex.
    pub fn wheel(rim: usize) -> Graph {
        let edges = (0..rim)
            .map(|i| (i, (i + 1) % rim))
            .chain((0..rim).map(|i| (i, rim)));
        Graph::build(rim + 1, edges).unwrap()
    }

    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::build(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    /// Triangle 0,1,2 with pendants 3 (at 0) and 4 (at 1).
    pub fn bull() -> Graph {
        Graph::build(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)]).unwrap()
    }

    /// Triangles 0,1,2 and 0,3,4 sharing vertex 0.
    pub fn bowtie() -> Graph {
        Graph::build(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
    }

    /// Triangle 0,1,2 plus the edge 0-3.
    pub fn paw_with_tail() -> Graph {
        Graph::build(4, [(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap()
    }
}
