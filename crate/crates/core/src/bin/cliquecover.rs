//! Command-line front end.
//!
//! Exit codes: 0 ok, 1 parse or usage error, 2 class violation, 3 structure
//! failure, 4 verification failure, 5 generator budget exhausted.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cliquecover::bench::{self, BenchConfig};
use cliquecover::solver::VALIDATE_AUTO_LIMIT;
use cliquecover::{
    dimacs, generate, min_clique_cover, min_colouring, oracle, structure, Error, Family, GenSpec,
    Graph, ResultDocument,
};

#[derive(Parser)]
#[command(
    name = "cliquecover",
    version,
    about = "Minimum clique cover of (bull, C4)-free graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct SolveArgs {
    /// Graph in DIMACS edge format.
    file: PathBuf,
    /// Check class membership even above the automatic size limit.
    #[arg(long)]
    validate: bool,
    /// Print the JSON result document.
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Print a plain-text report (default).
    #[arg(long)]
    text: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum clique cover of a (bull, C4)-free graph.
    Solve(SolveArgs),
    /// Minimum colouring of a (bull, 2K2)-free graph.
    Color(SolveArgs),
    /// Check a JSON result document against a graph.
    Verify { graph: PathBuf, cover: PathBuf },
    /// Generate a seeded in-class instance.
    Gen {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Brute-force reference values for a small graph.
    Oracle {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = OracleKind::All)]
        kind: OracleKind,
    },
    /// Time the solver on generated instances; CSV on stdout.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, value_parser = parse_family, default_value = "twin-expand")]
        family: Family,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleKind {
    Theta,
    Matching,
    Chromatic,
    All,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn read_graph(path: &Path) -> Result<Graph, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("{}: {e}", path.display()),
    })?;
    dimacs::parse(&text)
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::ClassViolation(_) => 2,
        Error::StructureFailure(_) => 3,
        Error::RejectionBudgetExceeded(_) => 5,
        _ => 1,
    }
}

fn report(err: &Error) -> ExitCode {
    match err {
        // DIMACS numbering, to match the input file.
        Error::ClassViolation(w) => {
            eprintln!("error: input is outside the class: {}", w.describe(1))
        }
        other => eprintln!("error: {other}"),
    }
    ExitCode::from(exit_code(err))
}

fn wants_validation(args: &SolveArgs, g: &Graph) -> bool {
    if args.validate || g.n() <= VALIDATE_AUTO_LIMIT {
        return true;
    }
    eprintln!(
        "warning: class validation skipped for n = {} > {VALIDATE_AUTO_LIMIT}; pass --validate to force it",
        g.n()
    );
    false
}

fn print_sets(header: &str, label: &str, sets: &[Vec<usize>]) {
    println!("{header}");
    for set in sets {
        let ids: Vec<String> = set.iter().map(|v| (v + 1).to_string()).collect();
        println!("{label} {}", ids.join(" "));
    }
}

fn solve(args: &SolveArgs, colouring: bool) -> Result<(), Error> {
    let g = read_graph(&args.file)?;
    let validate = wants_validation(args, &g);
    let doc = if colouring {
        ResultDocument::from_colouring(&min_colouring(&g, validate)?, validate)
    } else {
        ResultDocument::from_cover(g.n(), &min_clique_cover(&g, validate)?, validate)
    };
    if args.json {
        println!(
            "{}",
            serde_json::to_string(&doc).expect("document serialises")
        );
    } else if colouring {
        print_sets(&format!("colours {}", doc.theta), "class", &doc.cliques);
    } else {
        print_sets(&format!("theta {}", doc.theta), "clique", &doc.cliques);
    }
    Ok(())
}

fn verify(graph: &Path, cover: &Path) -> ExitCode {
    let g = match read_graph(graph) {
        Ok(g) => g,
        Err(e) => return report(&e),
    };
    let doc: ResultDocument = match fs::read_to_string(cover)
        .map_err(|e| e.to_string())
        .and_then(|t| serde_json::from_str(&t).map_err(|e| e.to_string()))
    {
        Ok(doc) => doc,
        Err(e) => {
            eprintln!("error: {}: {e}", cover.display());
            return ExitCode::from(1);
        }
    };
    match doc.verify(&g) {
        Ok(()) => {
            println!("ok");
            ExitCode::SUCCESS
        }
        Err(msg) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(4)
        }
    }
}

fn gen(spec: &GenSpec, out: Option<&Path>) -> Result<(), Error> {
    let g = generate(spec)?;
    let text = dimacs::write(&g, &[spec.comment()]);
    let reparsed = dimacs::parse(&text)?;
    assert_eq!(reparsed, g, "DIMACS round trip changed the graph");
    if let Some(w) = structure::class_witness(&reparsed) {
        return Err(Error::ClassViolation(w));
    }
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Error::Parse {
            line: 0,
            message: format!("{}: {e}", path.display()),
        })?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run_oracle(file: &Path, kind: OracleKind) -> Result<(), Error> {
    let g = read_graph(file)?;
    let all = matches!(kind, OracleKind::All);
    if all || matches!(kind, OracleKind::Theta) {
        println!("theta {}", oracle::brute_theta(&g)?);
    }
    if all || matches!(kind, OracleKind::Matching) {
        println!("matching {}", oracle::brute_matching(&g)?);
    }
    if all || matches!(kind, OracleKind::Chromatic) {
        println!("chromatic {}", oracle::brute_chromatic(&g)?);
    }
    Ok(())
}

fn run_bench(cfg: &BenchConfig) -> Result<(), Error> {
    let rows = bench::run(cfg)?;
    print!("{}", bench::to_csv(&rows));
    for (n, ratio) in bench::doubling_ratios(&rows) {
        eprintln!("ratio time({})/time({n}) = {ratio:.2}", 2 * n);
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match cli.command {
        Command::Solve(args) => solve(&args, false),
        Command::Color(args) => solve(&args, true),
        Command::Verify { graph, cover } => return verify(&graph, &cover),
        Command::Gen {
            family,
            n,
            p,
            steps,
            seed,
            out,
        } => gen(
            &GenSpec::new(family, n, p, seed).with_steps(steps),
            out.as_deref(),
        ),
        Command::Oracle { file, kind } => run_oracle(&file, kind),
        Command::Bench {
            sizes,
            family,
            repeats,
            p,
            seed,
        } => run_bench(&BenchConfig {
            sizes,
            family,
            repeats,
            edge_prob: p,
            seed,
        }),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => report(&e),
    }
}
