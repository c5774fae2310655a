//! Minimum colouring of (bull, 2K2)-free graphs through the complement.
//!
//! ```bash
//! cargo run --example colouring
//! ```

use cliquecover::graph::named;
use cliquecover::oracle::brute_chromatic;
use cliquecover::{generate, min_colouring, Family, GenSpec, Graph};

fn main() {
    let mut inputs: Vec<(String, Graph)> = vec![
        ("P4".into(), named::path(4)),
        ("C5".into(), named::cycle(5)),
        ("K4".into(), named::complete(4)),
        ("2K2".into(), Graph::build(4, [(0, 1), (2, 3)]).unwrap()),
    ];
    for seed in 0..3 {
        let g = generate(&GenSpec::new(Family::Rejection, 10, 0.2, seed)).unwrap();
        inputs.push((
            format!("complement of rejection seed {seed}"),
            g.complement(),
        ));
    }

    for (name, h) in &inputs {
        match min_colouring(h, true) {
            Ok(c) => {
                assert!(c.is_proper(h));
                let classes: Vec<Vec<usize>> =
                    c.classes().into_iter().map(|s| s.into_vec()).collect();
                println!(
                    "{name}: {} colours (brute force {}) {classes:?}",
                    c.num_colours,
                    brute_chromatic(h).unwrap()
                );
            }
            Err(e) => println!("{name}: {e}"),
        }
    }
}
