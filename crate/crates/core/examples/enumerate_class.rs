//! Enumerate connected (bull, C4)-free graphs up to isomorphism and tabulate
//! how the solver's branches apply to them.
//!
//! ```bash
//! cargo run --release -p cliquecover --example enumerate_class -- 8
//! ```

use std::time::Instant;

use cliquecover::oracle::enumerate_class_graphs;
use cliquecover::structure::{
    cut_vertices, find_terminal_cutset, is_basic, is_irreducible, is_triangle_free,
};

fn main() {
    let max_n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("vertex count"))
        .unwrap_or(7);

    println!("n  graphs  irreducible  irreducible+triangle  with-cut-vertex  non-basic  ms");
    for n in 1..=max_n {
        let start = Instant::now();
        let graphs = enumerate_class_graphs(n).expect("n <= 8");
        let (mut irreducible, mut with_triangle, mut with_cut, mut non_basic) = (0, 0, 0, 0);
        for g in &graphs {
            if !is_irreducible(g) {
                continue;
            }
            irreducible += 1;
            if !cut_vertices(g).unwrap().is_empty() {
                with_cut += 1;
            }
            if !is_basic(g) {
                non_basic += 1;
                assert!(find_terminal_cutset(g).unwrap().is_some());
            }
            if !is_triangle_free(g) {
                with_triangle += 1;
                println!(
                    "   irreducible graph with a triangle: {:?}",
                    g.edges().collect::<Vec<_>>()
                );
            }
        }
        println!(
            "{n}  {:6}  {irreducible:11}  {with_triangle:20}  {with_cut:15}  {non_basic:9}  {}",
            graphs.len(),
            start.elapsed().as_millis()
        );
    }
}
