//! Exact minimum clique cover for (bull, C4)-free graphs, and through the
//! complement, exact minimum colouring for (bull, 2K2)-free graphs.
//!
//! The solver runs in polynomial time. It deletes dominating vertices. It
//! covers triangle-free pieces with a maximum matching. Everything else it
//! splits at a cut vertex whose side is triangle-free. Brute-force oracles,
//! seeded generators and an exhaustive enumerator of small class members
//! come along for testing.
//!
//! ```
//! use cliquecover::{graph::named, min_clique_cover, verify_cover};
//!
//! let g = named::wheel(5);
//! let result = min_clique_cover(&g, true).unwrap();
//! assert_eq!(result.theta, 3);
//! assert!(verify_cover(&g, &result.cover).valid);
//! ```

pub mod bench;
pub mod dimacs;
pub mod error;
pub mod generate;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod solver;
pub mod structure;

pub use error::{Error, Result, Witness};
pub use generate::{generate, random_graph, Family, GenSpec};
pub use graph::{Graph, VertexId, VertexSet};
pub use matching::{matching_number, maximum_matching, triangle_free_cover, CliqueCover, Matching};
pub use solver::{
    min_clique_cover, min_colouring, reinsert, solve_connected, split_at_cutset, verify_cover,
    Colouring, ResultDocument, SolveResult, SolveStats,
};
pub use structure::{
    cut_vertices, f_value, find_bull, find_c4, find_dominated_pair, find_terminal_cutset,
    find_triangle, reduce, CutCertificate, ReductionTrace,
};
