//! Maximum matchings, and the clique cover they give on triangle-free graphs.
//!
//! ```bash
//! cargo run --release --example matching -- 200
//! ```

use cliquecover::graph::named;
use cliquecover::oracle::brute_matching;
use cliquecover::{generate, maximum_matching, triangle_free_cover, Family, GenSpec};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("vertex count"))
        .unwrap_or(100);

    for (name, g) in [
        ("petersen", named::petersen()),
        ("C7", named::cycle(7)),
        ("star(4)", named::star(4)),
    ] {
        let m = maximum_matching(&g);
        println!(
            "{name}: matching {:?}, size {} (brute force {})",
            m.edges(),
            m.len(),
            brute_matching(&g).unwrap()
        );
    }

    for degree in [2.0, 3.0, 5.0] {
        let g = generate(&GenSpec::new(Family::Girth5, n, degree / n as f64, 11)).unwrap();
        let m = maximum_matching(&g);
        let cover = triangle_free_cover(&g).unwrap();
        println!(
            "girth5 n={n} m={} avg degree {:.2}: matching {}, cover {} = n - matching",
            g.edge_count(),
            2.0 * g.edge_count() as f64 / n as f64,
            m.len(),
            cover.len()
        );
        assert_eq!(cover.len(), n - m.len());
    }
}
