//! Cross-checks the solver against brute force on random class members.
//!
//! ```bash
//! cargo run --release --example oracle_check -- 2000
//! ```

use cliquecover::oracle::{brute_chromatic, brute_theta};
use cliquecover::{generate, min_clique_cover, min_colouring, Family, GenSpec};

fn main() {
    let trials: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("trial count"))
        .unwrap_or(300);
    let probs = [0.1, 0.15, 0.2, 0.25, 0.85, 0.9];
    let mut by_theta = [0usize; 13];
    for seed in 0..trials {
        let n = 4 + (seed % 9) as usize;
        let p = probs[(seed % probs.len() as u64) as usize];
        let g = generate(&GenSpec::new(Family::Rejection, n, p, seed)).unwrap();
        let theta = min_clique_cover(&g, true).unwrap().theta;
        assert_eq!(theta, brute_theta(&g).unwrap(), "seed {seed}");
        if n <= 10 {
            let h = g.complement();
            assert_eq!(
                min_colouring(&h, true).unwrap().num_colours,
                brute_chromatic(&h).unwrap()
            );
        }
        by_theta[theta] += 1;
    }
    println!("{trials} graphs agree with brute force");
    for (theta, count) in by_theta.iter().enumerate().filter(|(_, &c)| c > 0) {
        println!("  theta {theta}: {count}");
    }
}
