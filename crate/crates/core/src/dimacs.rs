//! DIMACS-style edge lists.
//!
//! ```text
//! c optional comment
//! p edge 3 2
//! e 1 2
//! e 2 3
//! ```
//!
//! Endpoints are 1-based in the file and 0-based in memory. Blank lines and
//! lines starting with `c` are skipped. The edge count on the `p` line is not
//! enforced, since files often list an edge in both orientations.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "p" => {
                if n.is_some() {
                    return Err(err("duplicate problem line".into()));
                }
                if tokens.len() != 4 || tokens[1] != "edge" {
                    return Err(err(format!("expected `p edge <n> <m>`, got `{line}`")));
                }
                let count = parse_number(tokens[2]).map_err(&err)?;
                parse_number(tokens[3]).map_err(&err)?;
                n = Some(count);
            }
            "e" => {
                let Some(count) = n else {
                    return Err(err("edge before `p edge` line".into()));
                };
                if tokens.len() != 3 {
                    return Err(err(format!("expected `e <u> <v>`, got `{line}`")));
                }
                let u = parse_endpoint(tokens[1], count).map_err(&err)?;
                let v = parse_endpoint(tokens[2], count).map_err(&err)?;
                if u == v {
                    return Err(err(format!("self-loop at vertex {}", u + 1)));
                }
                edges.push((u, v));
            }
            other => return Err(err(format!("unknown line type `{other}`"))),
        }
    }

    let n = n.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        message: "missing `p edge` line".into(),
    })?;
    Graph::build(n, edges)
}

fn parse_number(token: &str) -> std::result::Result<usize, String> {
    token
        .parse::<usize>()
        .map_err(|_| format!("`{token}` is not a non-negative integer"))
}

fn parse_endpoint(token: &str, n: usize) -> std::result::Result<usize, String> {
    let v = parse_number(token)?;
    if v == 0 || v > n {
        return Err(format!("vertex {v} outside 1..={n}"));
    }
    Ok(v - 1)
}

/// Serialises `g`, emitting each comment as a `c` line before the header.
/// Edges come out once each with `u < v`, in ascending order.
pub fn write(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "c {c}");
    }
    let _ = writeln!(out, "p edge {} {}", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}
