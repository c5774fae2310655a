//! Median solve times on growing twin-expand instances.
//!
//! ```bash
//! cargo run --release --example bench_scaling -- 500,1000,2000,4000
//! ```

use cliquecover::bench::{self, BenchConfig};
use cliquecover::Family;

fn main() {
    let sizes: Vec<usize> = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "250,500,1000,2000".into())
        .split(',')
        .map(|s| s.trim().parse().expect("size"))
        .collect();
    let cfg = BenchConfig {
        sizes,
        family: Family::TwinExpand,
        repeats: 5,
        edge_prob: None,
        seed: 1,
    };
    let rows = bench::run(&cfg).unwrap();
    print!("{}", bench::to_csv(&rows));
    for (n, ratio) in bench::doubling_ratios(&rows) {
        println!("time({})/time({n}) = {ratio:.2}", 2 * n);
    }
}
