//! Minimum clique cover of (bull, C4)-free graphs.
//!
//! The driver works on a stack of subproblems, each an induced subgraph with
//! a map back to the input's vertex ids:
//!
//! 1. Delete dominating vertices until the subgraph is irreducible. The
//!    deletions are logged so they can be put back at the end.
//! 2. Each component of what is left is either triangle-free, in which case a
//!    maximum matching plus singletons covers it optimally, or has a cut
//!    vertex `v` and a part `C` of `G - v` with `G[C + v]` triangle-free.
//! 3. In the latter case, compare `m(G[C + v])` with `m(G[C])`. If equal,
//!    cover `G[C]` by matching and continue on `G - C`. Otherwise `v` is
//!    matched in every maximum matching of `G[C + v]`; cover that subgraph by
//!    matching and continue on `G - C - v`.
//!
//! Finally every deleted vertex joins the clique holding the vertex it
//! dominated, latest deletion first.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Witness};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::matching::{cover_from_matching, maximum_matching, CliqueCover};
use crate::structure::{
    class_witness, find_terminal_cutset, is_triangle_free, reduce, CutCertificate, ReductionStep,
    ReductionTrace,
};

/// Above this many vertices, validation is off unless asked for explicitly.
pub const VALIDATE_AUTO_LIMIT: usize = 300;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    pub reductions: usize,
    pub cutset_splits: usize,
    pub matching_calls: usize,
    pub max_depth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub theta: usize,
    pub cover: CliqueCover,
    pub stats: SolveStats,
}

struct Task {
    graph: Graph,
    ids: Vec<VertexId>,
    depth: usize,
}

#[derive(Default)]
struct Driver {
    cliques: Vec<VertexSet>,
    trace: Vec<ReductionStep>,
    stats: SolveStats,
    stack: Vec<Task>,
}

impl Driver {
    fn run(&mut self) -> Result<()> {
        while let Some(task) = self.stack.pop() {
            self.step(task)?;
        }
        Ok(())
    }

    fn lift(ids: &[VertexId], local: &VertexSet) -> VertexSet {
        local.iter().map(|&v| ids[v]).collect()
    }

    fn step(&mut self, task: Task) -> Result<()> {
        self.stats.max_depth = self.stats.max_depth.max(task.depth);
        let red = reduce(&task.graph);
        self.stats.reductions += red.trace.len();
        let ids: Vec<VertexId> = red.surviving.iter().map(|&v| task.ids[v]).collect();
        self.trace
            .extend(red.trace.steps.iter().map(|s| ReductionStep {
                dominator: task.ids[s.dominator],
                witness: task.ids[s.witness],
            }));

        let parts = red.graph.components();
        // Pushed in reverse so components are finished in ascending order.
        let mut pending = Vec::with_capacity(parts.len());
        for part in &parts {
            let (comp, local) = red.graph.induced(part)?;
            let comp_ids: Vec<VertexId> = local.iter().map(|&v| ids[v]).collect();
            if is_triangle_free(&comp) {
                self.stats.matching_calls += 1;
                let cover = cover_from_matching(&maximum_matching(&comp));
                self.cliques
                    .extend(cover.cliques.iter().map(|c| Self::lift(&comp_ids, c)));
                continue;
            }
            let cert = find_terminal_cutset(&comp)?.ok_or_else(|| {
                Error::StructureFailure(format!(
                    "irreducible connected subgraph on {} vertices has a triangle but no terminal cutset",
                    comp.n()
                ))
            })?;
            pending.push(self.split(&comp, &comp_ids, &cert, task.depth)?);
        }
        self.stack.extend(pending.into_iter().rev());
        Ok(())
    }

    /// Covers the terminal side of `cert` and returns the remainder as a new task.
    fn split(
        &mut self,
        g: &Graph,
        ids: &[VertexId],
        cert: &CutCertificate,
        depth: usize,
    ) -> Result<Task> {
        let part = cert.terminal().ok_or_else(|| {
            Error::StructureFailure(format!("cut vertex {} has no terminal part", cert.v))
        })?;
        let v = cert.v;
        let mut side = part.clone();
        side.insert(v);
        let (gi, gi_ids) = g.induced(&side)?;
        if let Some((a, b, c)) = crate::structure::find_triangle(&gi) {
            return Err(Error::StructureFailure(format!(
                "terminal part of cut vertex {v} contains triangle ({}, {}, {})",
                gi_ids[a], gi_ids[b], gi_ids[c]
            )));
        }
        let v_local = side.as_slice().binary_search(&v).expect("v was inserted");
        let (gi_minus_v, minus_ids) = gi.without_vertex(v_local);
        let with_v = maximum_matching(&gi);
        let without_v = maximum_matching(&gi_minus_v);
        self.stats.matching_calls += 2;
        self.stats.cutset_splits += 1;

        let lift_ids: Vec<VertexId>;
        let (cover, rest) = match with_v.len() - without_v.len() {
            0 => {
                lift_ids = minus_ids.iter().map(|&i| ids[gi_ids[i]]).collect();
                (cover_from_matching(&without_v), part.complement_in(g.n()))
            }
            1 => {
                assert!(with_v.is_matched(v_local), "cut vertex must be matched");
                lift_ids = gi_ids.iter().map(|&i| ids[i]).collect();
                (cover_from_matching(&with_v), side.complement_in(g.n()))
            }
            d => panic!("matching numbers differ by {d} on deleting one vertex"),
        };
        self.cliques
            .extend(cover.cliques.iter().map(|c| Self::lift(&lift_ids, c)));

        let (graph, local) = g.induced(&rest)?;
        Ok(Task {
            graph,
            ids: local.iter().map(|&i| ids[i]).collect(),
            depth: depth + 1,
        })
    }

    fn finish(self, n: usize) -> SolveResult {
        let mut cover = CliqueCover::new(self.cliques);
        apply_reinsertion(&mut cover, self.trace.iter().rev(), n);
        cover.canonicalize();
        SolveResult {
            theta: cover.len(),
            cover,
            stats: self.stats,
        }
    }
}

/// Puts each dominator into the first clique holding its witness, in the
/// order given.
fn apply_reinsertion<'a>(
    cover: &mut CliqueCover,
    steps: impl Iterator<Item = &'a ReductionStep>,
    n: usize,
) {
    let size = cover
        .cliques
        .iter()
        .filter_map(|c| c.as_slice().last())
        .map(|&v| v + 1)
        .max()
        .unwrap_or(0)
        .max(n);
    let mut owner = vec![usize::MAX; size];
    for (i, c) in cover.cliques.iter().enumerate() {
        for &v in c {
            if owner[v] == usize::MAX {
                owner[v] = i;
            }
        }
    }
    for step in steps {
        if step.dominator >= owner.len() {
            owner.resize(step.dominator + 1, usize::MAX);
        }
        let idx = owner
            .get(step.witness)
            .copied()
            .filter(|&i| i != usize::MAX)
            .unwrap_or_else(|| panic!("no clique contains witness {}", step.witness));
        cover.cliques[idx].insert(step.dominator);
        if owner[step.dominator] == usize::MAX {
            owner[step.dominator] = idx;
        }
    }
}

fn start(g: &Graph) -> Task {
    Task {
        graph: g.clone(),
        ids: (0..g.n()).collect(),
        depth: 0,
    }
}

/// Minimum clique cover. With `validate`, inputs containing an induced bull
/// or C4 are rejected up front; without it, out-of-class inputs either get a
/// valid cover or a [`Error::StructureFailure`].
///
/// Every cover returned is optimal: deleting a dominating vertex and the
/// cutset split are both exact for any graph. Class membership only
/// guarantees that the split never runs out of terminal cutsets.
pub fn min_clique_cover(g: &Graph, validate: bool) -> Result<SolveResult> {
    if validate {
        if let Some(w) = class_witness(g) {
            return Err(Error::ClassViolation(w));
        }
    }
    let mut driver = Driver::default();
    driver.stack.push(start(g));
    driver.run()?;
    Ok(driver.finish(g.n()))
}

/// The driver on a connected graph, without validation.
pub fn solve_connected(g: &Graph) -> Result<SolveResult> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    min_clique_cover(g, false)
}

/// Splits `g` at `cert` directly, skipping the initial reduction, and solves
/// the remainder with the full driver.
pub fn split_at_cutset(g: &Graph, cert: &CutCertificate) -> Result<SolveResult> {
    let mut driver = Driver::default();
    let ids: Vec<VertexId> = (0..g.n()).collect();
    let rest = driver.split(g, &ids, cert, 0)?;
    driver.stack.push(rest);
    driver.run()?;
    Ok(driver.finish(g.n()))
}

/// Undoes `trace` on a cover of the reduced graph, latest removal first. The
/// cover keeps its size and clique order.
///
/// # Panics
///
/// If a witness is not covered, which cannot happen for a trace produced by
/// [`reduce`] and a cover of its result.
pub fn reinsert(cover: &CliqueCover, trace: &ReductionTrace) -> CliqueCover {
    let mut out = cover.clone();
    let n = trace
        .steps
        .iter()
        .map(|s| s.dominator.max(s.witness) + 1)
        .max()
        .unwrap_or(0);
    apply_reinsertion(&mut out, trace.steps.iter().rev(), n);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverViolation {
    OutOfRange {
        set: usize,
        vertex: VertexId,
    },
    NotClique {
        set: usize,
        u: VertexId,
        v: VertexId,
    },
    Uncovered {
        vertex: VertexId,
    },
}

impl std::fmt::Display for CoverViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoverViolation::OutOfRange { set, vertex } => {
                write!(f, "set {set} names vertex {vertex}, which is out of range")
            }
            CoverViolation::NotClique { set, u, v } => {
                write!(f, "set {set} not a clique: {u} and {v} are not adjacent")
            }
            CoverViolation::Uncovered { vertex } => write!(f, "vertex {vertex} uncovered"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    pub valid: bool,
    pub violation: Option<CoverViolation>,
}

/// Checks that every set is a clique of `g` and every vertex lies in some
/// set. Overlapping sets are allowed.
pub fn verify_cover(g: &Graph, cover: &CliqueCover) -> CoverReport {
    verify_sets(g, cover.cliques.iter().map(VertexSet::as_slice))
}

pub(crate) fn verify_sets<'a>(
    g: &Graph,
    sets: impl Iterator<Item = &'a [VertexId]>,
) -> CoverReport {
    let n = g.n();
    let mut covered = vec![false; n];
    let fail = |v| CoverReport {
        valid: false,
        violation: Some(v),
    };
    for (i, set) in sets.enumerate() {
        if let Some(&vertex) = set.iter().find(|&&v| v >= n) {
            return fail(CoverViolation::OutOfRange { set: i, vertex });
        }
        for (a, &u) in set.iter().enumerate() {
            if let Some(&v) = set[a + 1..].iter().find(|&&v| v == u || !g.has_edge(u, v)) {
                return fail(CoverViolation::NotClique { set: i, u, v });
            }
            covered[u] = true;
        }
    }
    match covered.iter().position(|&c| !c) {
        Some(vertex) => fail(CoverViolation::Uncovered { vertex }),
        None => CoverReport {
            valid: true,
            violation: None,
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    pub colour_of: Vec<usize>,
    pub num_colours: usize,
    pub stats: SolveStats,
}

impl Colouring {
    /// Vertices of each colour, by colour index.
    pub fn classes(&self) -> Vec<VertexSet> {
        let mut classes = vec![Vec::new(); self.num_colours];
        for (v, &c) in self.colour_of.iter().enumerate() {
            classes[c].push(v);
        }
        classes.into_iter().map(VertexSet::from).collect()
    }

    pub fn is_proper(&self, h: &Graph) -> bool {
        h.edges()
            .all(|(u, v)| self.colour_of[u] != self.colour_of[v])
    }
}

/// Translates a witness found in `complement(h)` into one in `h`.
fn complement_witness(w: Witness) -> Witness {
    match w {
        // The diagonals of the hole are the two independent edges.
        Witness::C4([a, b, c, d]) => Witness::TwoK2([a, c, b, d]),
        // Complementing a bull x y z | p q gives triangle p q z with x hanging
        // off q and y off p.
        Witness::Bull([x, y, z, p, q]) => Witness::Bull([q, p, z, x, y]),
        other => other,
    }
}

/// Minimum colouring of a (bull, 2K2)-free graph, as a minimum clique cover
/// of its complement.
pub fn min_colouring(h: &Graph, validate: bool) -> Result<Colouring> {
    let comp = h.complement();
    if validate {
        if let Some(w) = class_witness(&comp) {
            return Err(Error::ClassViolation(complement_witness(w)));
        }
    }
    let result = min_clique_cover(&comp, false)?;
    let mut colour_of = vec![usize::MAX; h.n()];
    let mut num_colours = 0;
    for clique in &result.cover.cliques {
        let fresh: Vec<VertexId> = clique
            .iter()
            .copied()
            .filter(|&v| colour_of[v] == usize::MAX)
            .collect();
        if fresh.is_empty() {
            continue;
        }
        for v in fresh {
            colour_of[v] = num_colours;
        }
        num_colours += 1;
    }
    Ok(Colouring {
        colour_of,
        num_colours,
        stats: result.stats,
    })
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Cover,
    Colouring,
}

/// The JSON result document. Vertex ids are 0-based, each clique ascending,
/// cliques in lexicographic order. In colouring mode `theta` is the number of
/// colours and `cliques` are the colour classes. Only `n`, `theta` and
/// `cliques` are required when reading one back.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub n: usize,
    pub theta: usize,
    pub cliques: Vec<Vec<VertexId>>,
    #[serde(default)]
    pub mode: Mode,
    #[serde(default)]
    pub validated: bool,
    #[serde(default)]
    pub stats: SolveStats,
}

impl ResultDocument {
    pub fn from_cover(n: usize, result: &SolveResult, validated: bool) -> Self {
        let mut cover = result.cover.clone();
        cover.canonicalize();
        ResultDocument {
            n,
            theta: result.theta,
            cliques: cover.to_vecs(),
            mode: Mode::Cover,
            validated,
            stats: result.stats,
        }
    }

    pub fn from_colouring(colouring: &Colouring, validated: bool) -> Self {
        let mut classes = colouring.classes();
        classes.sort();
        ResultDocument {
            n: colouring.colour_of.len(),
            theta: colouring.num_colours,
            cliques: classes.iter().map(|c| c.as_slice().to_vec()).collect(),
            mode: Mode::Colouring,
            validated,
            stats: colouring.stats,
        }
    }

    /// Checks the document against `g`: in cover mode the sets must be
    /// cliques of `g`, in colouring mode stable sets, and `theta` must equal
    /// the number of sets.
    pub fn verify(&self, g: &Graph) -> std::result::Result<(), String> {
        if self.n != g.n() {
            return Err(format!("document has n = {}, graph has {}", self.n, g.n()));
        }
        let report = match self.mode {
            Mode::Cover => verify_sets(g, self.cliques.iter().map(Vec::as_slice)),
            Mode::Colouring => verify_sets(&g.complement(), self.cliques.iter().map(Vec::as_slice)),
        };
        if let Some(v) = report.violation {
            return Err(v.to_string());
        }
        if self.theta != self.cliques.len() {
            return Err(format!(
                "declared theta {} but {} sets listed",
                self.theta,
                self.cliques.len()
            ));
        }
        Ok(())
    }
}
