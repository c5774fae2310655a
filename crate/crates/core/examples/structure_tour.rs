//! Forbidden-subgraph detection, domination reduction and terminal cutsets on
//! small graphs.
//!
//! ```bash
//! cargo run --example structure_tour
//! ```

use cliquecover::graph::named;
use cliquecover::structure::{class_witness, is_basic, is_irreducible};
use cliquecover::{cut_vertices, find_terminal_cutset, reduce, split_at_cutset, Graph};

fn tour(name: &str, g: &Graph) {
    println!("{name}: n={} m={}", g.n(), g.edge_count());
    match class_witness(g) {
        Some(w) => println!("  outside the class: {w}"),
        None => println!("  (bull, C4)-free"),
    }
    let red = reduce(g);
    for step in &red.trace.steps {
        println!("  delete {} (dominates {})", step.dominator, step.witness);
    }
    println!(
        "  irreducible remainder {:?}, basic: {}",
        red.surviving.as_slice(),
        is_basic(&red.graph)
    );
    if g.is_connected() && g.n() > 0 {
        println!("  cut vertices {:?}", cut_vertices(g).unwrap().as_slice());
        if let Some(cert) = find_terminal_cutset(g).unwrap() {
            let r = split_at_cutset(g, &cert).unwrap();
            println!(
                "  split at {} with part {:?}: theta {} via {:?}",
                cert.v,
                cert.terminal().unwrap().as_slice(),
                r.theta,
                r.cover.to_vecs()
            );
        }
    }
}

fn main() {
    tour("bull", &named::bull());
    tour("C4", &named::cycle(4));
    tour("bowtie", &named::bowtie());
    tour("paw with tail", &named::paw_with_tail());
    tour("wheel(5)", &named::wheel(5));

    // Two 5-holes sharing vertex 4: irreducible, not basic, one cut vertex.
    let holes = Graph::build(
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
    assert!(is_irreducible(&holes));
    tour("two C5s at a vertex", &holes);
}
