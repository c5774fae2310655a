//! Minimum clique cover of a DIMACS file, or of a few built-in graphs when no
//! file is given.
//!
//! ```bash
//! cargo run --example solve_cover -- graph.col
//! ```

use cliquecover::graph::named;
use cliquecover::{dimacs, min_clique_cover, verify_cover, Graph};

fn show(name: &str, g: &Graph) {
    match min_clique_cover(g, true) {
        Ok(r) => {
            assert!(verify_cover(g, &r.cover).valid);
            println!("{name}: n={} m={} theta={}", g.n(), g.edge_count(), r.theta);
            for clique in r.cover.to_vecs() {
                println!("  {clique:?}");
            }
            println!("  stats {:?}", r.stats);
        }
        Err(e) => println!("{name}: {e}"),
    }
}

fn main() {
    if let Some(path) = std::env::args().nth(1) {
        let text = std::fs::read_to_string(&path).expect("readable file");
        let g = dimacs::parse(&text).unwrap_or_else(|e| panic!("{path}: {e}"));
        show(&path, &g);
        return;
    }
    show("petersen", &named::petersen());
    show("wheel(5)", &named::wheel(5));
    show("bowtie", &named::bowtie());
    show("paw with tail", &named::paw_with_tail());
    show("C4", &named::cycle(4));
}
