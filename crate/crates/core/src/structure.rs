//! Structural predicates and decompositions: forbidden induced subgraphs,
//! domination and reduction, cut vertices and terminal one-point cutsets.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Witness};
use crate::graph::{Graph, VertexId, VertexSet};

/// Lexicographically smallest triangle `(u, v, w)`, `u < v < w`.
pub fn find_triangle(g: &Graph) -> Option<(VertexId, VertexId, VertexId)> {
    for u in 0..g.n() {
        let nu = g.neighbours(u);
        for &v in nu.iter().filter(|&&v| v > u) {
            let nv = g.neighbours(v);
            let (mut i, mut j) = (0, 0);
            while i < nu.len() && j < nv.len() {
                match nu[i].cmp(&nv[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        if nu[i] > v {
                            return Some((u, v, nu[i]));
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
    }
    None
}

pub fn is_triangle_free(g: &Graph) -> bool {
    find_triangle(g).is_none()
}

/// An induced 4-cycle `[a, b, c, d]` in cycle order, where `a` is the
/// smallest vertex of the cycle. Searches `a` ascending, then the opposite
/// vertex `c` ascending.
pub fn find_c4(g: &Graph) -> Option<[VertexId; 4]> {
    let n = g.n();
    let mut common: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    let mut touched = Vec::new();
    for a in 0..n {
        for &b in g.neighbours(a) {
            for &c in g.neighbours(b) {
                if c > a && !g.has_edge(a, c) {
                    if common[c].is_empty() {
                        touched.push(c);
                    }
                    common[c].push(b);
                }
            }
        }
        touched.sort_unstable();
        let mut found = None;
        'opposite: for &c in &touched {
            let mids = &common[c];
            for (i, &b) in mids.iter().enumerate() {
                for &d in &mids[i + 1..] {
                    if !g.has_edge(b, d) {
                        found = Some([a, b, c, d]);
                        break 'opposite;
                    }
                }
            }
        }
        for &c in &touched {
            common[c].clear();
        }
        touched.clear();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// An induced bull `[x, y, z, p, q]`: triangle `x y z`, with `p` adjacent to
/// `x` only and `q` adjacent to `y` only among the five.
pub fn find_bull(g: &Graph) -> Option<[VertexId; 5]> {
    // Vertices adjacent to `t` but to neither of the other two triangle vertices.
    let pendants = |t: VertexId, o1: VertexId, o2: VertexId| -> Vec<VertexId> {
        g.neighbours(t)
            .iter()
            .copied()
            .filter(|&p| p != o1 && p != o2 && !g.has_edge(p, o1) && !g.has_edge(p, o2))
            .collect()
    };
    for x in 0..g.n() {
        for &y in g.neighbours(x).iter().filter(|&&y| y > x) {
            for &z in g.neighbours(y).iter().filter(|&&z| z > y) {
                if !g.has_edge(x, z) {
                    continue;
                }
                for (t1, t2, t3) in [(x, y, z), (x, z, y), (y, z, x)] {
                    let ps = pendants(t1, t2, t3);
                    if ps.is_empty() {
                        continue;
                    }
                    let qs = pendants(t2, t1, t3);
                    for &p in &ps {
                        if let Some(&q) = qs.iter().find(|&&q| !g.has_edge(p, q)) {
                            return Some([t1, t2, t3, p, q]);
                        }
                    }
                }
            }
        }
    }
    None
}

/// First induced C4 or bull, checked in that order; `None` iff `g` is
/// (bull, C4)-free.
pub fn class_witness(g: &Graph) -> Option<Witness> {
    if let Some(c) = find_c4(g) {
        return Some(Witness::C4(c));
    }
    find_bull(g).map(Witness::Bull)
}

pub fn is_bull_c4_free(g: &Graph) -> bool {
    class_witness(g).is_none()
}

/// `x` dominates `y`: every neighbour of `y` other than `x` is a neighbour of `x`.
pub fn dominates(g: &Graph, x: VertexId, y: VertexId) -> bool {
    g.neighbours(y).iter().all(|&w| w == x || g.has_edge(x, w))
}

/// First adjacent pair `(x, y)` with `x` dominating `y`, scanning `x` then
/// `y` in ascending order.
pub fn find_dominated_pair(g: &Graph) -> Option<(VertexId, VertexId)> {
    (0..g.n()).find_map(|x| {
        g.neighbours(x)
            .iter()
            .find(|&&y| dominates(g, x, y))
            .map(|&y| (x, y))
    })
}

pub fn is_irreducible(g: &Graph) -> bool {
    find_dominated_pair(g).is_none()
}

/// One removal: `dominator` was deleted because it dominated its neighbour `witness`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub dominator: VertexId,
    pub witness: VertexId,
}

/// Removals in the order they happened, in the input graph's ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
}

impl ReductionTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct Reduction {
    /// The irreducible remainder.
    pub graph: Graph,
    /// Maps `graph`'s vertex ids to the input's.
    pub surviving: VertexSet,
    pub trace: ReductionTrace,
}

/// Repeatedly deletes a dominating vertex until the graph is irreducible.
///
/// The removal order is the one obtained by calling [`find_dominated_pair`]
/// after every deletion. Deleting a vertex never breaks an existing
/// domination, and only neighbours of the deleted vertex can become newly
/// dominated, so the candidate pairs are kept in an ordered set and only the
/// pairs around each deleted vertex are re-examined.
pub fn reduce(g: &Graph) -> Reduction {
    let n = g.n();
    let mut alive = vec![true; n];
    let dom = |alive: &[bool], x: VertexId, y: VertexId| {
        g.neighbours(y)
            .iter()
            .all(|&w| w == x || !alive[w] || g.has_edge(x, w))
    };

    let mut pairs = BTreeSet::new();
    for x in 0..n {
        for &y in g.neighbours(x) {
            if dom(&alive, x, y) {
                pairs.insert((x, y));
            }
        }
    }

    let mut steps = Vec::new();
    while let Some((x, y)) = pairs.pop_first() {
        if !alive[x] || !alive[y] {
            continue;
        }
        debug_assert!(dom(&alive, x, y));
        alive[x] = false;
        steps.push(ReductionStep {
            dominator: x,
            witness: y,
        });
        for &b in g.neighbours(x).iter().filter(|&&b| alive[b]) {
            for &a in g.neighbours(b).iter().filter(|&&a| alive[a]) {
                if dom(&alive, a, b) {
                    pairs.insert((a, b));
                }
            }
        }
    }

    let surviving: VertexSet = (0..n).filter(|&v| alive[v]).collect();
    let (graph, _) = g.induced(&surviving).expect("surviving ids are in range");
    Reduction {
        graph,
        surviving,
        trace: ReductionTrace { steps },
    }
}

/// Articulation points of a connected graph.
pub fn cut_vertices(g: &Graph) -> Result<VertexSet> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.n();
    if n == 0 {
        return Ok(VertexSet::new());
    }
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0;
    // (vertex, parent, next neighbour index)
    let mut stack: Vec<(VertexId, VertexId, usize)> = vec![(0, UNSEEN, 0)];
    disc[0] = 0;
    low[0] = 0;
    timer += 1;
    let mut root_children = 0;

    while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
        if let Some(&u) = g.neighbours(v).get(*next) {
            *next += 1;
            if u == parent {
                continue;
            }
            if disc[u] == UNSEEN {
                disc[u] = timer;
                low[u] = timer;
                timer += 1;
                if v == 0 {
                    root_children += 1;
                }
                stack.push((u, v, 0));
            } else {
                low[v] = low[v].min(disc[u]);
            }
        } else {
            stack.pop();
            if parent != UNSEEN {
                low[parent] = low[parent].min(low[v]);
                if parent != 0 && low[v] >= disc[parent] {
                    is_cut[parent] = true;
                }
            }
        }
    }
    is_cut[0] = root_children >= 2;
    Ok((0..n).filter(|&v| is_cut[v]).collect())
}

/// Smallest component size of `g - v` for a cut vertex `v`.
pub fn f_value(g: &Graph, v: VertexId) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if v >= g.n() {
        return Err(Error::NotCutVertex(v));
    }
    let parts = g.components_without(v);
    if parts.len() < 2 {
        return Err(Error::NotCutVertex(v));
    }
    Ok(parts.iter().map(VertexSet::len).min().unwrap())
}

/// A cut vertex, the components it separates, and optionally a part that
/// together with the cut vertex induces a triangle-free graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutCertificate {
    pub v: VertexId,
    pub parts: Vec<VertexSet>,
    pub f: usize,
    pub terminal_part: Option<usize>,
}

impl CutCertificate {
    pub fn terminal(&self) -> Option<&VertexSet> {
        self.terminal_part.map(|i| &self.parts[i])
    }
}

fn with_vertex(part: &VertexSet, v: VertexId) -> VertexSet {
    let mut s = part.clone();
    s.insert(v);
    s
}

/// Finds a cut vertex `v` and a component `C` of `g - v` such that
/// `C + v` induces a triangle-free graph.
///
/// Cut vertices are tried by ascending `f(v)`, then ascending id; within one
/// cut vertex the smallest qualifying part wins, ties to the lower index. The
/// minimum-`f` cut vertex is therefore preferred, and the remaining ones are
/// only consulted when it has no triangle-free part.
pub fn find_terminal_cutset(g: &Graph) -> Result<Option<CutCertificate>> {
    let cuts = cut_vertices(g)?;
    let mut candidates: Vec<(usize, VertexId, Vec<VertexSet>)> = cuts
        .iter()
        .map(|&v| {
            let parts = g.components_without(v);
            let f = parts.iter().map(VertexSet::len).min().unwrap();
            (f, v, parts)
        })
        .collect();
    candidates.sort_by_key(|&(f, v, _)| (f, v));

    for (f, v, parts) in candidates {
        let terminal = parts
            .iter()
            .enumerate()
            .filter(|(_, part)| {
                let (h, _) = g.induced(&with_vertex(part, v)).expect("in range");
                is_triangle_free(&h)
            })
            .min_by_key(|&(i, part)| (part.len(), i))
            .map(|(i, _)| i);
        if terminal.is_some() {
            return Ok(Some(CutCertificate {
                v,
                parts,
                f,
                terminal_part: terminal,
            }));
        }
    }
    Ok(None)
}

/// Chordality via maximum cardinality search: every vertex's earlier-visited
/// neighbours must form a clique.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order_pos = vec![usize::MAX; n];
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        visited[v] = true;
        order_pos[v] = step;
        for &u in g.neighbours(v) {
            if !visited[u] {
                weight[u] += 1;
            }
        }
    }
    (0..n).all(|v| {
        let earlier: Vec<VertexId> = g
            .neighbours(v)
            .iter()
            .copied()
            .filter(|&u| order_pos[u] < order_pos[v])
            .collect();
        g.is_clique(&earlier)
    })
}

fn is_biconnected_triangle_free(g: &Graph) -> bool {
    g.is_connected()
        && cut_vertices(g).map(|c| c.is_empty()).unwrap_or(false)
        && is_triangle_free(g)
}

/// Basic in the cap-free sense: chordal, or a biconnected triangle-free graph
/// plus at most one vertex adjacent to all others.
pub fn is_basic(g: &Graph) -> bool {
    if is_chordal(g) || is_biconnected_triangle_free(g) {
        return true;
    }
    let n = g.n();
    (0..n)
        .filter(|&u| g.degree(u) + 1 == n)
        .any(|u| is_biconnected_triangle_free(&g.without_vertex(u).0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::from(v.to_vec())
    }

    #[test]
    fn triangle_examples() {
        assert_eq!(find_triangle(&complete(3)), Some((0, 1, 2)));
        assert_eq!(find_triangle(&cycle(5)), None);
        assert_eq!(find_triangle(&bowtie()), Some((0, 1, 2)));
        let g = Graph::build(5, [(0, 3), (0, 4), (3, 4), (1, 2)]).unwrap();
        assert_eq!(find_triangle(&g), Some((0, 3, 4)));
    }

    #[test]
    fn c4_examples() {
        let c4 = cycle(4);
        let found = find_c4(&c4).unwrap();
        assert_eq!(found, [0, 1, 2, 3]);
        assert_eq!(find_c4(&complete(4)), None);
        assert_eq!(find_c4(&cycle(5)), None);
        // The diamond's 4-cycle has a chord.
        let diamond = Graph::build(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(find_c4(&diamond), None);
    }

    #[test]
    fn bull_examples() {
        let b = find_bull(&bull()).unwrap();
        assert_eq!(b, [0, 1, 2, 3, 4]);
        assert_eq!(find_bull(&cycle(5)), None);
        assert_eq!(find_bull(&bowtie()), None);
    }

    #[test]
    fn class_witness_order() {
        assert!(matches!(class_witness(&cycle(4)), Some(Witness::C4(_))));
        assert!(matches!(class_witness(&bull()), Some(Witness::Bull(_))));
        assert!(class_witness(&petersen()).is_none());
    }

    #[test]
    fn dominated_pair_examples() {
        assert_eq!(find_dominated_pair(&complete(3)), Some((0, 1)));
        assert_eq!(find_dominated_pair(&star(3)), Some((0, 1)));
        assert_eq!(find_dominated_pair(&cycle(5)), None);
    }

    #[test]
    fn reduce_examples() {
        let r = reduce(&complete(5));
        assert_eq!(r.graph.n(), 1);
        assert_eq!(r.trace.len(), 4);
        assert_eq!(r.surviving, set(&[4]));

        let r = reduce(&complete(3));
        let steps: Vec<_> = r
            .trace
            .steps
            .iter()
            .map(|s| (s.dominator, s.witness))
            .collect();
        assert_eq!(steps, vec![(0, 1), (1, 2)]);

        let r = reduce(&cycle(5));
        assert_eq!(r.graph, cycle(5));
        assert!(r.trace.is_empty());

        let r = reduce(&wheel(5));
        assert_eq!(r.graph, cycle(5));
        assert_eq!(r.trace.len(), 1);
        assert_eq!(r.trace.steps[0].dominator, 5);
        assert_eq!(r.surviving, set(&[0, 1, 2, 3, 4]));
    }

    #[test]
    fn cut_vertex_examples() {
        assert_eq!(cut_vertices(&path(3)).unwrap(), set(&[1]));
        assert_eq!(cut_vertices(&cycle(5)).unwrap(), set(&[]));
        assert_eq!(cut_vertices(&bowtie()).unwrap(), set(&[0]));
        assert_eq!(cut_vertices(&path(5)).unwrap(), set(&[1, 2, 3]));
        assert_eq!(cut_vertices(&star(3)).unwrap(), set(&[0]));
        assert_eq!(cut_vertices(&Graph::empty(1)).unwrap(), set(&[]));
        assert!(matches!(
            cut_vertices(&Graph::empty(2)),
            Err(Error::NotConnected)
        ));
    }

    #[test]
    fn f_value_examples() {
        assert_eq!(f_value(&star(3), 0).unwrap(), 1);
        assert_eq!(f_value(&path(5), 2).unwrap(), 2);
        assert_eq!(f_value(&bowtie(), 0).unwrap(), 2);
        assert!(matches!(f_value(&path(5), 0), Err(Error::NotCutVertex(0))));
        assert!(matches!(f_value(&cycle(5), 1), Err(Error::NotCutVertex(1))));
    }

    #[test]
    fn terminal_cutset_examples() {
        let c = find_terminal_cutset(&path(5)).unwrap().unwrap();
        assert_eq!((c.v, c.f), (1, 1));
        assert_eq!(c.terminal(), Some(&set(&[0])));

        let c = find_terminal_cutset(&paw_with_tail()).unwrap().unwrap();
        assert_eq!(c.v, 0);
        assert_eq!(c.parts, vec![set(&[1, 2]), set(&[3])]);
        assert_eq!(c.terminal_part, Some(1));
        assert_eq!(c.f, 1);

        assert_eq!(find_terminal_cutset(&cycle(5)).unwrap(), None);
        assert_eq!(find_terminal_cutset(&bowtie()).unwrap(), None);
        assert!(matches!(
            find_terminal_cutset(&Graph::empty(3)),
            Err(Error::NotConnected)
        ));
    }

    #[test]
    fn terminal_cutset_falls_back_past_minimum_f() {
        // Bowtie on 0..4 with a 5-hole hanging off vertex 3. The minimum-f
        // cut vertex 0 only has triangle parts, so the search moves on to 3.
        let g = Graph::build(
            9,
            [
                (0, 1),
                (0, 2),
                (1, 2),
                (0, 3),
                (0, 4),
                (3, 4),
                (3, 5),
                (5, 6),
                (6, 7),
                (7, 8),
                (8, 3),
            ],
        )
        .unwrap();
        assert_eq!(cut_vertices(&g).unwrap(), set(&[0, 3]));
        assert_eq!(f_value(&g, 0).unwrap(), 2);
        assert_eq!(f_value(&g, 3).unwrap(), 4);
        let c = find_terminal_cutset(&g).unwrap().unwrap();
        assert_eq!((c.v, c.f), (3, 4));
        assert_eq!(c.terminal(), Some(&set(&[5, 6, 7, 8])));
    }

    #[test]
    fn chordal_and_basic() {
        assert!(is_chordal(&complete(4)));
        assert!(is_chordal(&bowtie()));
        assert!(is_chordal(&path(5)));
        assert!(!is_chordal(&cycle(4)));
        assert!(!is_chordal(&cycle(5)));
        assert!(is_chordal(&Graph::empty(0)));

        assert!(is_basic(&cycle(5)));
        assert!(is_basic(&wheel(5)));
        assert!(is_basic(&petersen()));
        assert!(is_basic(&bowtie()));
        // Triangle-free with a cut vertex, and not chordal.
        let two_c5 = Graph::build(
            9,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 8),
                (8, 4),
            ],
        )
        .unwrap();
        assert!(!is_basic(&two_c5));
    }
}
