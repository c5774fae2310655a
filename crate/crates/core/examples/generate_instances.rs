//! Seeded instances from each generator family, written as DIMACS.
//!
//! ```bash
//! cargo run --example generate_instances -- /tmp/instances
//! ```

use std::path::PathBuf;

use cliquecover::{dimacs, generate, min_clique_cover, Family, GenSpec};

fn main() {
    let dir = PathBuf::from(
        std::env::args()
            .nth(1)
            .unwrap_or_else(|| "instances".into()),
    );
    std::fs::create_dir_all(&dir).expect("output directory");

    let specs = [
        GenSpec::new(Family::Rejection, 12, 0.2, 1),
        GenSpec::new(Family::Rejection, 12, 0.85, 2),
        GenSpec::new(Family::Girth5, 60, 0.06, 3),
        GenSpec::new(Family::TwinExpand, 40, 0.1, 4).with_steps(40),
    ];
    for spec in &specs {
        let g = generate(spec).unwrap();
        let theta = min_clique_cover(&g, true).unwrap().theta;
        let path = dir.join(format!("{}-n{}-s{}.col", spec.family, g.n(), spec.seed));
        std::fs::write(&path, dimacs::write(&g, &[spec.comment()])).unwrap();
        println!(
            "{}: n={} m={} theta={theta}",
            path.display(),
            g.n(),
            g.edge_count()
        );
    }
}
