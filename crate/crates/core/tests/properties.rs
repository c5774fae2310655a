use std::collections::{BTreeSet, HashSet};

use proptest::prelude::*;

use cliquecover::oracle::{
    brute_chromatic, brute_matching, brute_theta, brute_theta_partitions,
    canonical_code_exhaustive, enumerate_class_graphs, find_induced_naive, is_induced_copy,
};
use cliquecover::structure::{class_witness, is_irreducible, is_triangle_free};
use cliquecover::{
    dimacs, find_bull, find_c4, find_dominated_pair, find_terminal_cutset, generate, graph::named,
    matching_number, maximum_matching, min_clique_cover, min_colouring, reduce, reinsert,
    split_at_cutset, triangle_free_cover, verify_cover, CliqueCover, Error, Family, GenSpec, Graph,
    VertexSet,
};

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::build(n, pairs.zip(bits).filter(|(_, &b)| b).map(|(e, _)| e)).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (
            Just(n),
            proptest::collection::vec(proptest::bool::weighted(0.4), pairs),
        )
            .prop_map(|(n, bits)| graph_from_bits(n, &bits))
    })
}

/// Deletes the last vertex of a forbidden subgraph until none is left.
fn into_class(mut g: Graph) -> Graph {
    while let Some(w) = class_witness(&g) {
        let v = *w.vertices().iter().max().unwrap();
        g = g.without_vertex(v).0;
    }
    g
}

fn arb_class_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    prop_oneof![
        arb_graph(max_n + 3).prop_map(into_class),
        (3..=max_n, 0.05f64..0.95, any::<u64>()).prop_filter_map(
            "rejection budget",
            |(n, p, seed)| {
                let p = if (0.3..0.8).contains(&p) { p / 3.0 } else { p };
                generate(&GenSpec::new(Family::Rejection, n, p, seed)).ok()
            }
        ),
        (2..=max_n / 2, any::<u64>()).prop_map(move |(base, seed)| {
            let spec = GenSpec::new(Family::TwinExpand, base, 0.4, seed).with_steps(max_n - base);
            generate(&spec).unwrap()
        }),
    ]
}

fn naive_dominates(g: &Graph, x: usize, y: usize) -> bool {
    let nx: HashSet<usize> = g.neighbours(x).iter().copied().collect();
    g.neighbours(y)
        .iter()
        .filter(|&&w| w != x)
        .all(|w| nx.contains(w))
}

fn naive_dominated_pair(g: &Graph) -> Option<(usize, usize)> {
    (0..g.n())
        .flat_map(|x| (0..g.n()).map(move |y| (x, y)))
        .find(|&(x, y)| g.has_edge(x, y) && naive_dominates(g, x, y))
}

fn is_valid_matching(g: &Graph, edges: &[(usize, usize)]) -> bool {
    let mut used = HashSet::new();
    edges
        .iter()
        .all(|&(u, v)| g.has_edge(u, v) && used.insert(u) && used.insert(v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn complement_is_an_involution(g in arb_graph(12)) {
        let c = g.complement();
        prop_assert_eq!(c.complement(), g.clone());
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.n() * g.n().saturating_sub(1) / 2);
        prop_assert!(c.audit().is_ok());
    }

    #[test]
    fn induced_subgraph_keeps_exactly_the_inner_edges(g in arb_graph(12), mask in any::<u16>()) {
        let set: VertexSet = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        let (h, ids) = g.induced(&set).unwrap();
        prop_assert_eq!(ids.as_slice(), set.as_slice());
        for i in 0..h.n() {
            for j in i + 1..h.n() {
                prop_assert_eq!(h.has_edge(i, j), g.has_edge(ids[i], ids[j]));
            }
        }
    }

    #[test]
    fn components_partition_the_vertices(g in arb_graph(14)) {
        let parts = g.components();
        let mut seen = vec![0; g.n()];
        for part in &parts {
            for &v in part {
                seen[v] += 1;
            }
            prop_assert!(g.induced(part).unwrap().0.is_connected());
        }
        prop_assert!(seen.iter().all(|&c| c == 1));
        prop_assert!(g.edges().all(|(u, v)| parts.iter().any(|p| p.contains(u) && p.contains(v))));
    }

    #[test]
    fn blossom_matches_exhaustive_search(g in arb_graph(10)) {
        let m = maximum_matching(&g);
        prop_assert!(is_valid_matching(&g, &m.edges()));
        prop_assert_eq!(m.len(), brute_matching(&g).unwrap());
    }

    #[test]
    fn deleting_a_vertex_lowers_matching_by_at_most_one(g in arb_graph(16)) {
        let full = matching_number(&g);
        for v in 0..g.n() {
            let drop = full - matching_number(&g.without_vertex(v).0);
            prop_assert!(drop <= 1);
        }
    }

    #[test]
    fn triangle_free_cover_uses_matched_pairs(n in 5usize..60, d in 1.0f64..5.0, seed in any::<u64>()) {
        let g = generate(&GenSpec::new(Family::Girth5, n, d / n as f64, seed)).unwrap();
        let cover = triangle_free_cover(&g).unwrap();
        prop_assert!(verify_cover(&g, &cover).valid);
        prop_assert_eq!(cover.len(), n - matching_number(&g));
    }

    #[test]
    fn triangle_free_cover_refuses_triangles(g in arb_graph(10)) {
        let res = triangle_free_cover(&g);
        prop_assert_eq!(res.is_ok(), is_triangle_free(&g));
        if let Err(e) = res {
            prop_assert!(matches!(e, Error::TriangleFound(_)));
        }
    }

    #[test]
    fn dominated_pair_matches_naive_scan(g in arb_graph(12)) {
        prop_assert_eq!(find_dominated_pair(&g), naive_dominated_pair(&g));
    }

    #[test]
    fn reduce_matches_one_at_a_time_replay(g in arb_graph(14)) {
        let red = reduce(&g);
        let mut cur = g.clone();
        let mut ids: Vec<usize> = (0..g.n()).collect();
        let mut steps = Vec::new();
        while let Some((x, y)) = find_dominated_pair(&cur) {
            steps.push((ids[x], ids[y]));
            let (next, local) = cur.without_vertex(x);
            ids = local.iter().map(|&i| ids[i]).collect();
            cur = next;
        }
        let got: Vec<(usize, usize)> = red.trace.steps.iter().map(|s| (s.dominator, s.witness)).collect();
        prop_assert_eq!(got, steps);
        prop_assert_eq!(red.surviving.as_slice(), ids.as_slice());
        prop_assert_eq!(red.graph, cur);
    }

    #[test]
    fn reduction_preserves_theta(g in arb_graph(11)) {
        let red = reduce(&g);
        prop_assert!(is_irreducible(&red.graph));
        prop_assert_eq!(brute_theta(&red.graph).unwrap(), brute_theta(&g).unwrap());
    }

    #[test]
    fn reinsertion_keeps_size_and_validity(g in arb_class_graph(12)) {
        let red = reduce(&g);
        let inner = min_clique_cover(&red.graph, false).unwrap();
        let lifted = CliqueCover::new(
            inner.cover.cliques.iter()
                .map(|c| c.iter().map(|&v| red.surviving.as_slice()[v]).collect())
                .collect(),
        );
        let full = reinsert(&lifted, &red.trace);
        prop_assert_eq!(full.len(), lifted.len());
        prop_assert!(verify_cover(&g, &full).valid);
    }

    #[test]
    fn forbidden_subgraph_detectors_agree_with_naive_search(g in arb_graph(8)) {
        let c4 = named::cycle(4);
        let bull = named::bull();
        match find_c4(&g) {
            Some(w) => {
                prop_assert!(is_induced_copy(&g, &w, &c4));
                for i in 0..4 {
                    prop_assert!(g.has_edge(w[i], w[(i + 1) % 4]));
                }
            }
            None => prop_assert!(find_induced_naive(&g, &c4).is_none()),
        }
        match find_bull(&g) {
            Some(w) => prop_assert!(is_induced_copy(&g, &w, &bull)),
            None => prop_assert!(find_induced_naive(&g, &bull).is_none()),
        }
    }

    #[test]
    fn solver_is_optimal_on_the_class(g in arb_class_graph(14)) {
        let r = min_clique_cover(&g, true).unwrap();
        prop_assert!(verify_cover(&g, &r.cover).valid);
        prop_assert_eq!(r.theta, brute_theta(&g).unwrap());
        prop_assert_eq!(min_clique_cover(&g, true).unwrap(), r);
    }

    #[test]
    fn solver_is_exact_or_refuses_outside_the_class(g in arb_graph(11)) {
        match min_clique_cover(&g, false) {
            Ok(r) => {
                prop_assert!(verify_cover(&g, &r.cover).valid);
                prop_assert_eq!(r.theta, brute_theta(&g).unwrap());
            }
            Err(e) => prop_assert!(matches!(e, Error::StructureFailure(_)), "{e}"),
        }
    }

    #[test]
    fn cutset_split_is_exact_on_any_graph(g in arb_graph(11)) {
        prop_assume!(g.n() >= 3 && g.is_connected());
        if let Some(cert) = find_terminal_cutset(&g).unwrap() {
            match split_at_cutset(&g, &cert) {
                Ok(r) => {
                    prop_assert!(verify_cover(&g, &r.cover).valid);
                    prop_assert_eq!(r.theta, brute_theta(&g).unwrap());
                }
                Err(e) => prop_assert!(matches!(e, Error::StructureFailure(_)), "{e}"),
            }
        }
    }

    #[test]
    fn colouring_is_proper_and_minimum(g in arb_class_graph(10)) {
        let h = g.complement();
        let c = min_colouring(&h, true).unwrap();
        prop_assert!(c.is_proper(&h));
        prop_assert_eq!(c.num_colours, brute_chromatic(&h).unwrap());
        prop_assert_eq!(c.classes().iter().map(VertexSet::len).sum::<usize>(), h.n());
    }

    #[test]
    fn theta_oracles_agree(g in arb_graph(7)) {
        prop_assert_eq!(brute_theta(&g).unwrap(), brute_theta_partitions(&g).unwrap());
    }

    #[test]
    fn generators_certify_and_round_trip(
        family in prop_oneof![Just(Family::Rejection), Just(Family::Girth5), Just(Family::TwinExpand)],
        n in 1usize..12,
        steps in 0usize..10,
        seed in any::<u64>(),
    ) {
        let p = if family == Family::Rejection { 0.2 } else { 0.3 };
        let spec = GenSpec::new(family, n, p, seed).with_steps(steps);
        let g = generate(&spec).unwrap();
        prop_assert!(class_witness(&g).is_none());
        prop_assert_eq!(generate(&spec).unwrap(), g.clone());
        let text = dimacs::write(&g, &[spec.comment()]);
        prop_assert_eq!(dimacs::parse(&text).unwrap(), g);
    }
}

#[test]
fn class_is_closed_under_true_twins() {
    for n in 1..=7 {
        for g in enumerate_class_graphs(n).unwrap() {
            for v in 0..n {
                let twin = n;
                let edges = g
                    .edges()
                    .chain(g.neighbours(v).iter().map(|&u| (u, twin)))
                    .chain([(v, twin)]);
                let h = Graph::build(n + 1, edges).unwrap();
                assert!(
                    class_witness(&h).is_none(),
                    "twin of {v} in {:?}",
                    g.edges().collect::<Vec<_>>()
                );
            }
        }
    }
}

/// Isomorphism classes of connected class members found by brute force over
/// all labelled graphs, compared by exhaustive canonical code.
#[test]
fn enumeration_matches_labelled_brute_force() {
    for n in 1..=6 {
        let pairs = n * (n - 1) / 2;
        let mut brute = BTreeSet::new();
        for mask in 0u32..1 << pairs {
            let bits: Vec<bool> = (0..pairs).map(|i| mask >> i & 1 == 1).collect();
            let g = graph_from_bits(n, &bits);
            if g.is_connected() && class_witness(&g).is_none() {
                brute.insert(canonical_code_exhaustive(&g));
            }
        }
        let listed = enumerate_class_graphs(n).unwrap();
        let codes: BTreeSet<u64> = listed.iter().map(canonical_code_exhaustive).collect();
        assert_eq!(
            codes.len(),
            listed.len(),
            "duplicate isomorphism class at n = {n}"
        );
        assert_eq!(codes, brute, "n = {n}");
    }
}
